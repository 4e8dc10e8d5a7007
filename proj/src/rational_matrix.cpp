#include "signrank/rational_matrix.hpp"

#include <stdexcept>

namespace signrank {

Rational make_rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational rational_from_string(const std::string& text) {
    Rational q;
    if (q.set_str(text, 10) != 0) throw std::invalid_argument("bad rational '" + text + "'");
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

int sign_of(const Rational& q) { return sgn(q); }

Sign sign_class(const Rational& q) { return static_cast<Sign>(sign_of(q)); }

RationalMatrix::RationalMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), cells_(static_cast<std::size_t>(rows) * cols) {
    if (rows <= 0 || cols <= 0) throw std::invalid_argument("matrix needs positive shape");
}

RationalMatrix RationalMatrix::identity(int n) {
    RationalMatrix out(n, n);
    for (int i = 0; i < n; ++i) out.at(i, i) = 1;
    return out;
}

std::size_t RationalMatrix::check(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("matrix index out of range");
    return static_cast<std::size_t>(r) * cols_ + c;
}

bool RationalMatrix::is_zero() const {
    for (const auto& v : cells_)
        if (v != 0) return false;
    return true;
}

RationalMatrix make_matrix(std::initializer_list<std::initializer_list<long>> rows) {
    int m = static_cast<int>(rows.size());
    int n = m ? static_cast<int>(rows.begin()->size()) : 0;
    RationalMatrix out(m, n);
    int r = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("ragged matrix literal");
        int c = 0;
        for (long v : row) out.at(r, c++) = v;
        ++r;
    }
    return out;
}

RationalMatrix negate(const RationalMatrix& a) {
    RationalMatrix out(a.rows(), a.cols());
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c) out.at(r, c) = -a.at(r, c);
    return out;
}

RationalMatrix transpose(const RationalMatrix& a) {
    RationalMatrix out(a.cols(), a.rows());
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c) out.at(c, r) = a.at(r, c);
    return out;
}

RationalMatrix submatrix(const RationalMatrix& a, const std::vector<int>& rows,
                         const std::vector<int>& cols) {
    if (rows.empty() || cols.empty()) throw std::invalid_argument("empty submatrix");
    RationalMatrix out(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            out.at(static_cast<int>(i), static_cast<int>(j)) = a.at(rows[i], cols[j]);
    return out;
}

RationalMatrix hstack(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack row mismatch");
    RationalMatrix out(a.rows(), a.cols() + b.cols());
    for (int r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < a.cols(); ++c) out.at(r, c) = a.at(r, c);
        for (int c = 0; c < b.cols(); ++c) out.at(r, a.cols() + c) = b.at(r, c);
    }
    return out;
}

RationalMatrix vstack(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack column mismatch");
    RationalMatrix out(a.rows() + b.rows(), a.cols());
    for (int c = 0; c < a.cols(); ++c) {
        for (int r = 0; r < a.rows(); ++r) out.at(r, c) = a.at(r, c);
        for (int r = 0; r < b.rows(); ++r) out.at(a.rows() + r, c) = b.at(r, c);
    }
    return out;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix sum shape mismatch");
    RationalMatrix out(a.rows(), a.cols());
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c) out.at(r, c) = a.at(r, c) + b.at(r, c);
    return out;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
    RationalMatrix out(a.rows(), b.cols());
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < b.cols(); ++c) {
            Rational acc = 0;
            for (int k = 0; k < a.cols(); ++k) acc += a.at(r, k) * b.at(k, c);
            out.at(r, c) = acc;
        }
    return out;
}

RationalMatrix operator*(const Rational& s, const RationalMatrix& a) {
    RationalMatrix out(a.rows(), a.cols());
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c) out.at(r, c) = s * a.at(r, c);
    return out;
}

std::string to_string(const RationalMatrix& a) {
    std::string out;
    for (int r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < a.cols(); ++c) {
            if (c) out += ' ';
            out += to_string(a.at(r, c));
        }
        out += '\n';
    }
    return out;
}

GenSignPattern sgn_of_matrix(const RationalMatrix& a) {
    GenSignPattern out(a.rows(), a.cols());
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c) out.set(r, c, sign_class(a.at(r, c)));
    return out;
}

bool is_member(const RationalMatrix& a, const GenSignPattern& p) {
    if (a.rows() != p.rows() || a.cols() != p.cols()) return false;
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c) {
            GenSign g = p.at(r, c);
            if (g == GenSign::any) continue;
            if (sign_class(a.at(r, c)) != to_sign(g)) return false;
        }
    return true;
}

}  // namespace signrank
