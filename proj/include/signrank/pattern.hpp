#pragma once

#include <string>
#include <vector>

#include "signrank/sign.hpp"

namespace signrank {

// m x n generalized sign pattern, row-major; plain means no '#'
class GenSignPattern {
public:
    GenSignPattern(int rows, int cols, GenSign fill = GenSign::zero);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    GenSign at(int r, int c) const { return cells_[check(r, c)]; }
    void set(int r, int c, GenSign g) { cells_[check(r, c)] = g; }
    void set(int r, int c, Sign s) { cells_[check(r, c)] = to_gen(s); }
    Sign sign_at(int r, int c) const { return to_sign(at(r, c)); }

    bool is_plain() const;
    bool is_zero() const;
    int count(GenSign g) const;

    bool operator==(const GenSignPattern&) const = default;

private:
    std::size_t check(int r, int c) const;

    int rows_, cols_;
    std::vector<GenSign> cells_;
};

GenSignPattern negate(const GenSignPattern& p);
GenSignPattern transpose(const GenSignPattern& p);
GenSignPattern submatrix(const GenSignPattern& p, const std::vector<int>& rows,
                         const std::vector<int>& cols);
GenSignPattern hstack(const GenSignPattern& a, const GenSignPattern& b);
GenSignPattern vstack(const GenSignPattern& a, const GenSignPattern& b);

// all plain patterns obtained by fixing each '#' to one of -,0,+ (row-major cell
// order, each cell cycling minus,zero,plus); throws if the pattern has more than
// max_any '#' cells
std::vector<GenSignPattern> refinements(const GenSignPattern& p, int max_any = 8);

// text format: one row per line, tokens +,-,0,# separated by blanks, ';' starts a
// comment, blank lines skipped; parse errors carry 1-based line and token position
GenSignPattern parse_pattern(const std::string& text);
std::string serialize_pattern(const GenSignPattern& p);

}  // namespace signrank
