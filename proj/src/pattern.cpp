#include "signrank/pattern.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace signrank {

GenSignPattern::GenSignPattern(int rows, int cols, GenSign fill)
    : rows_(rows), cols_(cols), cells_(static_cast<std::size_t>(rows) * cols, fill) {
    if (rows <= 0 || cols <= 0) throw std::invalid_argument("pattern needs positive shape");
}

std::size_t GenSignPattern::check(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("pattern index out of range");
    return static_cast<std::size_t>(r) * cols_ + c;
}

bool GenSignPattern::is_plain() const {
    return std::none_of(cells_.begin(), cells_.end(),
                        [](GenSign g) { return g == GenSign::any; });
}

bool GenSignPattern::is_zero() const {
    return std::all_of(cells_.begin(), cells_.end(),
                       [](GenSign g) { return g == GenSign::zero; });
}

int GenSignPattern::count(GenSign g) const {
    return static_cast<int>(std::count(cells_.begin(), cells_.end(), g));
}

GenSignPattern negate(const GenSignPattern& p) {
    GenSignPattern out(p.rows(), p.cols());
    for (int r = 0; r < p.rows(); ++r)
        for (int c = 0; c < p.cols(); ++c) out.set(r, c, negate(p.at(r, c)));
    return out;
}

GenSignPattern transpose(const GenSignPattern& p) {
    GenSignPattern out(p.cols(), p.rows());
    for (int r = 0; r < p.rows(); ++r)
        for (int c = 0; c < p.cols(); ++c) out.set(c, r, p.at(r, c));
    return out;
}

GenSignPattern submatrix(const GenSignPattern& p, const std::vector<int>& rows,
                         const std::vector<int>& cols) {
    if (rows.empty() || cols.empty()) throw std::invalid_argument("empty submatrix");
    GenSignPattern out(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            out.set(static_cast<int>(i), static_cast<int>(j), p.at(rows[i], cols[j]));
    return out;
}

GenSignPattern hstack(const GenSignPattern& a, const GenSignPattern& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack row mismatch");
    GenSignPattern out(a.rows(), a.cols() + b.cols());
    for (int r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < a.cols(); ++c) out.set(r, c, a.at(r, c));
        for (int c = 0; c < b.cols(); ++c) out.set(r, a.cols() + c, b.at(r, c));
    }
    return out;
}

GenSignPattern vstack(const GenSignPattern& a, const GenSignPattern& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack column mismatch");
    GenSignPattern out(a.rows() + b.rows(), a.cols());
    for (int c = 0; c < a.cols(); ++c) {
        for (int r = 0; r < a.rows(); ++r) out.set(r, c, a.at(r, c));
        for (int r = 0; r < b.rows(); ++r) out.set(a.rows() + r, c, b.at(r, c));
    }
    return out;
}

std::vector<GenSignPattern> refinements(const GenSignPattern& p, int max_any) {
    std::vector<std::pair<int, int>> free_cells;
    for (int r = 0; r < p.rows(); ++r)
        for (int c = 0; c < p.cols(); ++c)
            if (p.at(r, c) == GenSign::any) free_cells.emplace_back(r, c);
    if (static_cast<int>(free_cells.size()) > max_any)
        throw std::length_error("refinement blowup: " + std::to_string(free_cells.size()) +
                                " '#' cells exceed cap " + std::to_string(max_any));
    static constexpr Sign choices[3] = {Sign::minus, Sign::zero, Sign::plus};
    std::vector<GenSignPattern> out;
    std::size_t total = 1;
    for (std::size_t i = 0; i < free_cells.size(); ++i) total *= 3;
    out.reserve(total);
    for (std::size_t code = 0; code < total; ++code) {
        GenSignPattern q = p;
        std::size_t rest = code;
        for (auto [r, c] : free_cells) {
            q.set(r, c, choices[rest % 3]);
            rest /= 3;
        }
        out.push_back(std::move(q));
    }
    return out;
}

GenSignPattern parse_pattern(const std::string& text) {
    std::vector<std::vector<GenSign>> rows;
    std::istringstream lines(text);
    std::string line;
    int lineno = 0;
    while (std::getline(lines, line)) {
        ++lineno;
        if (auto semi = line.find(';'); semi != std::string::npos) line.resize(semi);
        std::istringstream toks(line);
        std::string tok;
        std::vector<GenSign> row;
        int tokno = 0;
        while (toks >> tok) {
            ++tokno;
            if (tok.size() != 1)
                throw std::invalid_argument("line " + std::to_string(lineno) + ", token " +
                                            std::to_string(tokno) + ": bad sign token '" + tok +
                                            "'");
            try {
                row.push_back(gen_sign_from_char(tok[0]));
            } catch (const std::invalid_argument& e) {
                throw std::invalid_argument("line " + std::to_string(lineno) + ", token " +
                                            std::to_string(tokno) + ": " + e.what());
            }
        }
        if (row.empty()) continue;
        if (!rows.empty() && row.size() != rows.front().size())
            throw std::invalid_argument("line " + std::to_string(lineno) + ": row has " +
                                        std::to_string(row.size()) + " entries, expected " +
                                        std::to_string(rows.front().size()));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::invalid_argument("pattern text has no rows");
    GenSignPattern out(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c)
            out.set(static_cast<int>(r), static_cast<int>(c), rows[r][c]);
    return out;
}

std::string serialize_pattern(const GenSignPattern& p) {
    std::string out;
    for (int r = 0; r < p.rows(); ++r) {
        for (int c = 0; c < p.cols(); ++c) {
            if (c) out += ' ';
            out += to_char(p.at(r, c));
        }
        out += '\n';
    }
    return out;
}

}  // namespace signrank
