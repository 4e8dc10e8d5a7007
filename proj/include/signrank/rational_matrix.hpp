#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "signrank/pattern.hpp"

namespace signrank {

// exact rational scalar; arithmetic stays canonical, direct (num,den) construction
// goes through make_rational so canonicalization is never skipped
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
Rational rational_from_string(const std::string& text);
std::string to_string(const Rational& q);
int sign_of(const Rational& q);
Sign sign_class(const Rational& q);

// m x n dense matrix over the rationals, row-major
class RationalMatrix {
public:
    RationalMatrix(int rows, int cols);
    static RationalMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Rational& at(int r, int c) const { return cells_[check(r, c)]; }
    Rational& at(int r, int c) { return cells_[check(r, c)]; }
    void set(int r, int c, const Rational& v) { cells_[check(r, c)] = v; }

    bool is_zero() const;
    bool operator==(const RationalMatrix&) const = default;

private:
    std::size_t check(int r, int c) const;

    int rows_, cols_;
    std::vector<Rational> cells_;
};

RationalMatrix make_matrix(std::initializer_list<std::initializer_list<long>> rows);

RationalMatrix negate(const RationalMatrix& a);
RationalMatrix transpose(const RationalMatrix& a);
RationalMatrix submatrix(const RationalMatrix& a, const std::vector<int>& rows,
                         const std::vector<int>& cols);
RationalMatrix hstack(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix vstack(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator*(const Rational& s, const RationalMatrix& a);
std::string to_string(const RationalMatrix& a);

// entrywise sign of a real matrix; always a plain pattern
GenSignPattern sgn_of_matrix(const RationalMatrix& a);

// true when every entry of a lies in the cell's sign class ('#' accepts anything)
bool is_member(const RationalMatrix& a, const GenSignPattern& p);

}  // namespace signrank
