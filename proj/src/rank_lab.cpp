#include "signrank/rank_lab.hpp"

#include <algorithm>
#include <utility>

namespace signrank {

namespace {

void paste(RationalMatrix& dst, int r0, int c0, const RationalMatrix& src) {
    for (int r = 0; r < src.rows(); ++r)
        for (int c = 0; c < src.cols(); ++c) dst.at(r0 + r, c0 + c) = src.at(r, c);
}

// reduced row echelon form in place; returns pivot columns
std::vector<int> rref(std::vector<std::vector<Rational>>& w) {
    int m = static_cast<int>(w.size());
    int n = m ? static_cast<int>(w[0].size()) : 0;
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < n && r < m; ++c) {
        int piv = -1;
        for (int i = r; i < m; ++i)
            if (w[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(w[piv], w[r]);
        Rational lead = w[r][c];
        for (int j = c; j < n; ++j) w[r][j] /= lead;
        for (int i = 0; i < m; ++i) {
            if (i == r || w[i][c] == 0) continue;
            Rational f = w[i][c];
            for (int j = c; j < n; ++j) w[i][j] -= f * w[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::vector<std::vector<Rational>> to_grid(const RationalMatrix& a) {
    std::vector<std::vector<Rational>> w(a.rows(), std::vector<Rational>(a.cols()));
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c) w[r][c] = a.at(r, c);
    return w;
}

}  // namespace

int rank(const RationalMatrix& a) {
    int m = a.rows(), n = a.cols();
    // clear denominators row by row, then run fraction-free (Bareiss) elimination
    std::vector<std::vector<mpz_class>> w(m, std::vector<mpz_class>(n));
    for (int r = 0; r < m; ++r) {
        mpz_class l = 1;
        for (int c = 0; c < n; ++c) l = lcm(l, a.at(r, c).get_den());
        for (int c = 0; c < n; ++c)
            w[r][c] = a.at(r, c).get_num() * (l / a.at(r, c).get_den());
    }
    mpz_class prev = 1;
    int rk = 0;
    for (int c = 0; c < n && rk < m; ++c) {
        int piv = -1;
        for (int r = rk; r < m; ++r)
            if (w[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(w[piv], w[rk]);
        for (int r = rk + 1; r < m; ++r) {
            for (int j = c + 1; j < n; ++j) {
                mpz_class t = w[rk][c] * w[r][j] - w[r][c] * w[rk][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                w[r][j] = std::move(t);
            }
            w[r][c] = 0;
        }
        prev = w[rk][c];
        ++rk;
    }
    return rk;
}

std::vector<RationalMatrix> kernel_basis(const RationalMatrix& a) {
    auto w = to_grid(a);
    std::vector<int> pivots = rref(w);
    std::vector<bool> is_pivot(a.cols(), false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<RationalMatrix> basis;
    for (int f = 0; f < a.cols(); ++f) {
        if (is_pivot[f]) continue;
        RationalMatrix v(a.cols(), 1);
        v.at(f, 0) = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v.at(pivots[i], 0) = -w[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RationalMatrix> solve(const RationalMatrix& a, const RationalMatrix& b) {
    if (b.rows() != a.rows() || b.cols() != 1)
        throw std::invalid_argument("solve wants a column right-hand side");
    auto w = to_grid(a);
    for (int r = 0; r < a.rows(); ++r) w[r].push_back(b.at(r, 0));
    std::vector<int> pivots = rref(w);
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
    RationalMatrix x(a.cols(), 1);
    for (std::size_t i = 0; i < pivots.size(); ++i) x.at(pivots[i], 0) = w[i][a.cols()];
    return x;
}

bool in_col_space(const RationalMatrix& col, const RationalMatrix& a) {
    return solve(a, col).has_value();
}

bool in_row_space(const RationalMatrix& row, const RationalMatrix& a) {
    return solve(transpose(a), transpose(row)).has_value();
}

RationalMatrix subdirect_sum(const RationalMatrix& c, const RationalMatrix& d, int k) {
    if (k < 0 || k > std::min(c.rows(), c.cols()) || k > std::min(d.rows(), d.cols()))
        throw std::invalid_argument("subdirect overlap exceeds block dimensions");
    RationalMatrix out(c.rows() + d.rows() - k, c.cols() + d.cols() - k);
    for (int i = 0; i < out.rows(); ++i)
        for (int j = 0; j < out.cols(); ++j) {
            Rational v = 0;
            if (i < c.rows() && j < c.cols()) v += c.at(i, j);
            if (i >= c.rows() - k && j >= c.cols() - k)
                v += d.at(i - (c.rows() - k), j - (c.cols() - k));
            out.at(i, j) = v;
        }
    return out;
}

bool check_subdirect_inequality(const RationalMatrix& c, const RationalMatrix& d, int k) {
    return rank(subdirect_sum(c, d, k)) <= rank(c) + rank(d);
}

BorderedIdentity bordered_rank_identity(const RationalMatrix& b, const Rational& a,
                                        const Rational& c) {
    if (a == 0 || c == 0) throw std::invalid_argument("border scalars must be nonzero");
    int m = b.rows(), n = b.cols();

    RationalMatrix bordered(m + 1, n + 1);
    bordered.at(0, 1) = a;
    bordered.at(1, 0) = c;
    paste(bordered, 1, 1, b);

    RationalMatrix p = RationalMatrix::identity(m + 1);
    p.at(0, 0) = 1 / a;
    p.at(1, 0) = -b.at(0, 0) / (2 * a);
    for (int i = 2; i <= m; ++i) p.at(i, 0) = -b.at(i - 1, 0) / a;

    RationalMatrix q = RationalMatrix::identity(n + 1);
    q.at(0, 0) = 1 / c;
    q.at(0, 1) = -b.at(0, 0) / (2 * c);
    for (int j = 2; j <= n; ++j) q.at(0, j) = -b.at(0, j - 1) / c;

    RationalMatrix normal(m + 1, n + 1);
    normal.at(0, 1) = 1;
    normal.at(1, 0) = 1;
    for (int i = 2; i <= m; ++i)
        for (int j = 2; j <= n; ++j) normal.at(i, j) = b.at(i - 1, j - 1);
    if (p * bordered * q != normal)
        throw inconsistency_error("bordered transforms missed the normal form");

    int trailing = 0;
    if (m >= 2 && n >= 2) {
        std::vector<int> rows(m - 1), cols(n - 1);
        for (int i = 0; i < m - 1; ++i) rows[i] = 1 + i;
        for (int j = 0; j < n - 1; ++j) cols[j] = 1 + j;
        trailing = rank(submatrix(b, rows, cols));
    }
    int bordered_rank = rank(bordered);
    return {std::move(bordered), std::move(p), std::move(q), std::move(normal),
            bordered_rank, trailing + 2};
}

AdjoinIdentity adjoin_rank_identity(const RationalMatrix& a, TwoByTwoSplit split,
                                    const RationalMatrix& x, const RationalMatrix& y) {
    int m1 = split.m1, n1 = split.n1;
    int m2 = a.rows() - m1, n2 = a.cols() - n1;
    if (m1 < 1 || n1 < 1 || m2 < 1 || n2 < 1)
        throw std::invalid_argument("2x2 split needs all four blocks nonempty");
    std::vector<int> top(m1), bottom(m2), left(n1), right(n2);
    for (int i = 0; i < m1; ++i) top[i] = i;
    for (int i = 0; i < m2; ++i) bottom[i] = m1 + i;
    for (int j = 0; j < n1; ++j) left[j] = j;
    for (int j = 0; j < n2; ++j) right[j] = n1 + j;
    RationalMatrix a11 = submatrix(a, top, left), a12 = submatrix(a, top, right);
    RationalMatrix a21 = submatrix(a, bottom, left), a22 = submatrix(a, bottom, right);

    if (x.rows() != m2 || x.cols() != 1 || !(transpose(a22) * x).is_zero())
        throw std::invalid_argument("x must lie in the left kernel of a22");
    if (y.rows() != n2 || y.cols() != 1 || !(a22 * y).is_zero())
        throw std::invalid_argument("y must lie in the kernel of a22");

    RationalMatrix bordered(1 + a.rows(), 1 + a.cols());
    paste(bordered, 0, 1, transpose(x) * a21);
    paste(bordered, 1, 0, a12 * y);
    paste(bordered, 1, 1, a11);
    paste(bordered, 1, 1 + n1, a12);
    paste(bordered, 1 + m1, 1, a21);
    paste(bordered, 1 + m1, 1 + n1, a22);

    RationalMatrix p(1 + a.rows(), a.rows());
    paste(p, 0, m1, transpose(x));
    for (int i = 0; i < a.rows(); ++i) p.at(1 + i, i) = 1;

    RationalMatrix q(a.cols(), 1 + a.cols());
    paste(q, n1, 0, y);
    for (int j = 0; j < a.cols(); ++j) q.at(j, 1 + j) = 1;

    if (p * a * q != bordered)
        throw inconsistency_error("adjoin transforms missed the bordered matrix");
    int bordered_rank = rank(bordered);
    return {std::move(bordered), std::move(p), std::move(q), bordered_rank, rank(a)};
}

SeparatedBlocks split_blocks(const RationalMatrix& a, BlockSplit s) {
    if (s.m1 < 1 || s.n1 < 1 || s.m2 < 1 || s.n2 < 1 || s.m1 + s.m2 + 1 != a.rows() ||
        s.n1 + s.n2 + 1 != a.cols())
        throw std::invalid_argument("block split does not match matrix shape");
    for (int r = 0; r < s.m1; ++r)
        for (int c = s.n1 + 1; c < a.cols(); ++c)
            if (a.at(r, c) != 0) throw std::invalid_argument("top-right block not zero");
    for (int r = s.m1 + 1; r < a.rows(); ++r)
        for (int c = 0; c < s.n1; ++c)
            if (a.at(r, c) != 0) throw std::invalid_argument("bottom-left block not zero");

    std::vector<int> rows1(s.m1), rows2(s.m2), cols1(s.n1), cols2(s.n2);
    for (int i = 0; i < s.m1; ++i) rows1[i] = i;
    for (int i = 0; i < s.m2; ++i) rows2[i] = s.m1 + 1 + i;
    for (int j = 0; j < s.n1; ++j) cols1[j] = j;
    for (int j = 0; j < s.n2; ++j) cols2[j] = s.n1 + 1 + j;
    return {submatrix(a, rows1, cols1),   submatrix(a, rows1, {s.n1}),
            submatrix(a, {s.m1}, cols1),  submatrix(a, {s.m1}, cols2),
            submatrix(a, rows2, {s.n1}),  submatrix(a, rows2, cols2),
            a.at(s.m1, s.n1)};
}

DecompCase decompose_real(const RationalMatrix& a, BlockSplit s) {
    SeparatedBlocks blk = split_blocks(a, s);
    RationalMatrix dsum = subdirect_sum(blk.a11, blk.a33, 0);
    RationalMatrix row_mid = hstack(blk.a21, blk.a23);
    RationalMatrix col_mid = vstack(blk.a12, blk.a32);

    // the proof's two kernel conditions: the middle row annihilates ker(a11 (+) a33),
    // the middle column annihilates the left kernel
    std::optional<RationalMatrix> bad_x, bad_y;
    for (const auto& k : kernel_basis(dsum))
        if (!(row_mid * k).is_zero()) {
            bad_x = k;
            break;
        }
    for (const auto& k : kernel_basis(transpose(dsum)))
        if (!(transpose(k) * col_mid).is_zero()) {
            bad_y = k;
            break;
        }

    int base = rank(a);
    DecompCase out{DecompKind::corner, std::nullopt, std::nullopt, Rational(0),
                   bad_x,              bad_y,        0,            base};
    if (!bad_x && !bad_y) {
        out.kind = DecompKind::split;
        auto v = solve(transpose(blk.a11), transpose(blk.a21));
        auto z = solve(blk.a11, blk.a12);
        if (!v || !z) throw inconsistency_error("split case lost its witnesses");
        out.v = v;
        out.z = z;
        out.corner = (transpose(*v) * (blk.a11 * *z)).at(0, 0);
        RationalMatrix r(s.m1 + 1, s.n1 + 1), t(1 + s.m2, 1 + s.n2);
        paste(r, 0, 0, blk.a11);
        paste(r, 0, s.n1, blk.a12);
        paste(r, s.m1, 0, blk.a21);
        r.at(s.m1, s.n1) = out.corner;
        t.at(0, 0) = blk.a22 - out.corner;
        paste(t, 0, 1, blk.a23);
        paste(t, 1, 0, blk.a32);
        paste(t, 1, 1, blk.a33);
        out.case_sum = rank(r) + rank(t);
    } else if (!bad_x) {
        out.kind = DecompKind::rows;
        if (!in_row_space(blk.a21, blk.a11) || !in_row_space(blk.a23, blk.a33))
            throw inconsistency_error("rows case without row-space membership");
        out.case_sum = rank(vstack(blk.a11, blk.a21)) + rank(vstack(blk.a23, blk.a33)) + 1;
    } else if (!bad_y) {
        out.kind = DecompKind::cols;
        if (!in_col_space(blk.a12, blk.a11) || !in_col_space(blk.a32, blk.a33))
            throw inconsistency_error("cols case without column-space membership");
        out.case_sum = rank(hstack(blk.a11, blk.a12)) + rank(hstack(blk.a32, blk.a33)) + 1;
    } else {
        out.kind = DecompKind::corner;
        out.case_sum = rank(blk.a11) + rank(blk.a33) + 2;
    }
    if (out.case_sum != base)
        throw inconsistency_error("decomposition case failed exact verification");
    return out;
}

}  // namespace signrank
