#include "signrank/minrank.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "signrank/generators.hpp"
#include "signrank/parallel.hpp"

namespace signrank {

SearchConfig SearchConfig::defaults() {
    SearchConfig cfg;
    cfg.grid = {make_rational(1), make_rational(-1), make_rational(2),
                make_rational(-2), make_rational(1, 2), make_rational(-1, 2)};
    return cfg;
}

void SearchConfig::validate() const {
    if (grid.empty()) throw std::invalid_argument("value grid must not be empty");
    for (const auto& v : grid)
        if (v == 0) throw std::invalid_argument("value grid must not contain 0");
    if (restarts < 0 || exhaustive_cell_cap < 1 || max_denominator < 1 || refinement_cap < 0 ||
        max_depth < 0 || sample_budget < 1)
        throw std::invalid_argument("search budgets must be positive");
}

namespace {

// the rank <= 1 member when one exists: zero rows/columns dropped, the rest must
// be fully signed and factor as eps_row * del_col, giving a +-1 outer product
std::optional<RationalMatrix> rank1_member(const GenSignPattern& a) {
    if (!a.is_plain()) throw std::invalid_argument("mr_le_1 wants a plain pattern");
    std::vector<int> rows, cols;
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c)
            if (a.at(r, c) != GenSign::zero) {
                if (rows.empty() || rows.back() != r) rows.push_back(r);
                if (std::find(cols.begin(), cols.end(), c) == cols.end()) cols.push_back(c);
            }
    if (rows.empty()) return RationalMatrix(a.rows(), a.cols());
    std::sort(cols.begin(), cols.end());
    for (int r : rows)
        for (int c : cols)
            if (a.at(r, c) == GenSign::zero) return std::nullopt;
    std::vector<int> del(cols.size()), eps(rows.size(), 1);
    for (std::size_t j = 0; j < cols.size(); ++j)
        del[j] = a.at(rows[0], cols[j]) == GenSign::plus ? 1 : -1;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        eps[i] = (a.at(rows[i], cols[0]) == GenSign::plus ? 1 : -1) * del[0];
        for (std::size_t j = 1; j < cols.size(); ++j) {
            int have = a.at(rows[i], cols[j]) == GenSign::plus ? 1 : -1;
            if (eps[i] * del[j] != have) return std::nullopt;
        }
    }
    RationalMatrix w(a.rows(), a.cols());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) w.at(rows[i], cols[j]) = eps[i] * del[j];
    return w;
}

}  // namespace

bool mr_le_1(const GenSignPattern& a) { return rank1_member(a).has_value(); }

namespace {

bool is_signed(GenSign g) { return g == GenSign::plus || g == GenSign::minus; }

struct TriangleSearch {
    const GenSignPattern& a;
    std::vector<int> best_rows, best_cols;
    std::vector<int> cur_rows, cur_cols;  // grown back to front
    long nodes = 0;
    long node_cap;

    explicit TriangleSearch(const GenSignPattern& p)
        : a(p),
          node_cap(p.rows() + p.cols() <= 12 ? std::numeric_limits<long>::max() : 200000) {}

    void run(std::uint64_t used_rows, std::uint64_t used_cols) {
        if (++nodes > node_cap) return;
        int depth = static_cast<int>(cur_rows.size());
        int headroom = std::min(free_count(used_rows, a.rows()), free_count(used_cols, a.cols()));
        if (depth + headroom <= static_cast<int>(best_rows.size())) return;
        for (int r = 0; r < a.rows(); ++r) {
            if (used_rows >> r & 1) continue;
            for (int c = 0; c < a.cols(); ++c) {
                if (used_cols >> c & 1) continue;
                if (!is_signed(a.at(r, c))) continue;
                // the new pair sits before everything chosen so far, so its row
                // must vanish on all previously chosen columns
                bool clear = true;
                for (int pc : cur_cols)
                    if (a.at(r, pc) != GenSign::zero) {
                        clear = false;
                        break;
                    }
                if (!clear) continue;
                cur_rows.push_back(r);
                cur_cols.push_back(c);
                if (cur_rows.size() > best_rows.size()) {
                    best_rows = cur_rows;
                    best_cols = cur_cols;
                }
                run(used_rows | (1ULL << r), used_cols | (1ULL << c));
                cur_rows.pop_back();
                cur_cols.pop_back();
            }
        }
    }

    static int free_count(std::uint64_t used, int n) {
        int k = 0;
        for (int i = 0; i < n; ++i)
            if (!(used >> i & 1)) ++k;
        return k;
    }
};

}  // namespace

Triangle triangle_lower_bound(const GenSignPattern& a) {
    if (a.rows() > 62 || a.cols() > 62)
        throw std::invalid_argument("triangle search caps at 62 rows or columns");
    TriangleSearch search(a);
    search.run(0, 0);
    // stored back to front; report in the definition's forward order
    std::vector<int> rows(search.best_rows.rbegin(), search.best_rows.rend());
    std::vector<int> cols(search.best_cols.rbegin(), search.best_cols.rend());
    return {static_cast<int>(rows.size()), std::move(rows), std::move(cols)};
}

namespace {

// walks the nonzero determinant-expansion terms; bails as soon as two differ in sign
struct SnsSearch {
    const GenSignPattern& a;
    int t;
    int seen_sign = 0;
    bool contradiction = false;

    void run(int row, std::uint32_t used_cols, int sign) {
        if (contradiction) return;
        if (row == t) {
            if (seen_sign == 0)
                seen_sign = sign;
            else if (seen_sign != sign)
                contradiction = true;
            return;
        }
        for (int c = 0; c < t; ++c) {
            if (used_cols >> c & 1) continue;
            GenSign g = a.at(row, c);
            if (!is_signed(g)) continue;
            int inversions = 0;
            for (int d = c + 1; d < t; ++d)
                if (used_cols >> d & 1) ++inversions;
            int s = sign * (g == GenSign::plus ? 1 : -1) * (inversions % 2 ? -1 : 1);
            run(row + 1, used_cols | (1U << c), s);
            if (contradiction) return;
        }
    }
};

bool next_combination(std::vector<int>& idx, int n) {
    int t = static_cast<int>(idx.size());
    int i = t - 1;
    while (i >= 0 && idx[i] == n - t + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
    return true;
}

}  // namespace

bool is_sign_nonsingular(const GenSignPattern& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("sign-nonsingularity wants square");
    if (!a.is_plain()) return false;
    SnsSearch search{a, a.rows()};
    search.run(0, 0, 1);
    return !search.contradiction && search.seen_sign != 0;
}

SnsResult sns_lower_bound(const GenSignPattern& a, int above) {
    int tmax = std::min({a.rows(), a.cols(), 7});
    long budget = 100000;
    for (int t = tmax; t > std::max(above, 0); --t) {
        std::vector<int> rows(t);
        for (int i = 0; i < t; ++i) rows[i] = i;
        do {
            std::vector<int> cols(t);
            for (int j = 0; j < t; ++j) cols[j] = j;
            do {
                if (--budget < 0) return {0, {}, {}};
                GenSignPattern sub(t, t);
                bool plain = true;
                for (int i = 0; i < t && plain; ++i)
                    for (int j = 0; j < t; ++j) {
                        GenSign g = a.at(rows[i], cols[j]);
                        if (g == GenSign::any) {
                            plain = false;
                            break;
                        }
                        sub.set(i, j, g);
                    }
                if (plain && is_sign_nonsingular(sub)) return {t, rows, cols};
            } while (next_combination(cols, a.cols()));
        } while (next_combination(rows, a.rows()));
    }
    return {0, {}, {}};
}

namespace {

struct FreeCell {
    int r, c;
    std::vector<Rational> options;
};

// zero cells stay fixed; signed cells take the sign-consistent grid values in grid
// order, '#' cells take 0 first and then the whole grid
std::vector<FreeCell> free_cells(const GenSignPattern& a, const SearchConfig& cfg) {
    std::vector<FreeCell> cells;
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c) {
            GenSign g = a.at(r, c);
            if (g == GenSign::zero) continue;
            FreeCell cell{r, c, {}};
            if (g == GenSign::any) cell.options.emplace_back(0);
            for (const auto& v : cfg.grid)
                if (g == GenSign::any || sign_class(v) == to_sign(g)) cell.options.push_back(v);
            cells.push_back(std::move(cell));
        }
    return cells;
}

RationalMatrix candidate_from_digits(const GenSignPattern& a, const std::vector<FreeCell>& cells,
                                     const std::vector<std::size_t>& digits) {
    RationalMatrix w(a.rows(), a.cols());
    for (std::size_t i = 0; i < cells.size(); ++i)
        w.at(cells[i].r, cells[i].c) = cells[i].options[digits[i]];
    return w;
}

std::vector<std::size_t> decode_mixed_radix(std::size_t code, const std::vector<FreeCell>& cells) {
    std::vector<std::size_t> digits(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
        digits[i] = code % cells[i].options.size();
        code /= cells[i].options.size();
    }
    return digits;
}

// fixed stride coprime to the space size; walking i -> i * stride (mod total)
// visits every code once and spreads low-rank candidates across early chunks
std::size_t coprime_stride(std::size_t total) {
    std::size_t s = 0x9e3779b97f4a7c15ULL % total;
    if (s == 0) s = 1;
    while (std::gcd(s, total) != 1) ++s;
    return s;
}

// draw 0 is the all-first-options assignment, every later draw is seeded by index
// alone so results do not depend on evaluation order
std::vector<std::size_t> sampled_digits(std::uint64_t seed, std::size_t draw,
                                        const std::vector<FreeCell>& cells) {
    if (draw == 0) return std::vector<std::size_t>(cells.size(), 0);
    Rng rng(seed ^ (0x6a09e667f3bcc909ULL + draw * 0x9e3779b97f4a7c15ULL));
    std::vector<std::size_t> digits(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i)
        digits[i] = static_cast<std::size_t>(rng.next() % cells[i].options.size());
    return digits;
}

}  // namespace

std::optional<GridResult> grid_upper_bound(const GenSignPattern& a, const SearchConfig& cfg,
                                           int stop_at) {
    cfg.validate();
    auto cells = free_cells(a, cfg);
    for (const auto& cell : cells)
        if (cell.options.empty()) return std::nullopt;  // grid lacks a needed sign
    if (cells.empty()) return GridResult{0, RationalMatrix(a.rows(), a.cols())};

    constexpr std::size_t kExhaustiveBudget = std::size_t(1) << 22;
    std::size_t total = 1;
    bool exhaustive = static_cast<int>(cells.size()) <= cfg.exhaustive_cell_cap;
    for (const auto& cell : cells) {
        if (!exhaustive) break;
        if (total > kExhaustiveBudget / cell.options.size()) {
            exhaustive = false;
            break;
        }
        total *= cell.options.size();
    }

    std::size_t space = exhaustive ? total : static_cast<std::size_t>(cfg.sample_budget);
    std::size_t stride = exhaustive ? coprime_stride(total) : 0;
    auto digits_for = [&](std::size_t i) {
        return exhaustive ? decode_mixed_radix(i * stride % total, cells)
                          : sampled_digits(cfg.seed, i, cells);
    };
    auto hit = argmin_indexed(space, stop_at, cfg.parallel, [&](std::size_t i) {
        return std::optional<int>(rank(candidate_from_digits(a, cells, digits_for(i))));
    });
    return GridResult{hit->value, candidate_from_digits(a, cells, digits_for(hit->index))};
}

namespace {

// best rational approximation with bounded denominator, by continued fractions
Rational rationalize(double x, long max_den) {
    if (!std::isfinite(x)) return Rational(0);
    bool neg = x < 0;
    double t = std::fabs(x);
    long long pp = 0, p = 1, qp = 1, q = 0;
    long long bn = 0, bd = 1;
    double best_err = t;
    auto consider = [&](long long n, long long d) {
        if (d < 1 || d > max_den) return;
        double err = std::fabs(t - static_cast<double>(n) / static_cast<double>(d));
        if (err < best_err) {
            best_err = err;
            bn = n;
            bd = d;
        }
    };
    double frac = t;
    for (int iter = 0; iter < 64; ++iter) {
        double fl = std::floor(frac);
        if (fl > 4e17) break;
        long long ai = static_cast<long long>(fl);
        long long pn = ai * p + pp, qn = ai * q + qp;
        if (qn > max_den) {
            if (q > 0) {
                long long amax = (max_den - qp) / q;
                if (amax > 0) consider(amax * p + pp, amax * q + qp);
            }
            break;
        }
        consider(pn, qn);
        pp = p;
        p = pn;
        qp = q;
        q = qn;
        double rem = frac - fl;
        if (rem < 1e-12) break;
        frac = 1.0 / rem;
    }
    return make_rational(neg ? -bn : bn, bd);
}

struct Dense {
    int rows, cols;
    std::vector<double> v;

    Dense(int r, int c) : rows(r), cols(c), v(static_cast<std::size_t>(r) * c, 0.0) {}
    double& at(int r, int c) { return v[static_cast<std::size_t>(r) * cols + c]; }
    double at(int r, int c) const { return v[static_cast<std::size_t>(r) * cols + c]; }
};

Dense matmul(const Dense& a, const Dense& b) {
    Dense out(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            double f = a.at(i, k);
            if (f == 0.0) continue;
            for (int j = 0; j < b.cols; ++j) out.at(i, j) += f * b.at(k, j);
        }
    return out;
}

std::vector<double> solve_dense(Dense m, std::vector<double> b) {
    int d = m.rows;
    for (int c = 0; c < d; ++c) {
        int piv = c;
        for (int r = c + 1; r < d; ++r)
            if (std::fabs(m.at(r, c)) > std::fabs(m.at(piv, c))) piv = r;
        for (int j = 0; j < d; ++j) std::swap(m.at(c, j), m.at(piv, j));
        std::swap(b[c], b[piv]);
        double lead = m.at(c, c);
        if (std::fabs(lead) < 1e-14) continue;
        for (int r = 0; r < d; ++r) {
            if (r == c) continue;
            double f = m.at(r, c) / lead;
            if (f == 0.0) continue;
            for (int j = c; j < d; ++j) m.at(r, j) -= f * m.at(c, j);
            b[r] -= f * b[c];
        }
    }
    std::vector<double> x(d, 0.0);
    for (int c = 0; c < d; ++c)
        if (std::fabs(m.at(c, c)) >= 1e-14) x[c] = b[c] / m.at(c, c);
    return x;
}

double penalty_and_gradient(const GenSignPattern& a, const Dense& w, Dense& g) {
    double p = 0.0;
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c) {
            double x = w.at(r, c);
            switch (a.at(r, c)) {
                case GenSign::zero:
                    p += x * x;
                    g.at(r, c) = 2.0 * x;
                    break;
                case GenSign::plus:
                case GenSign::minus: {
                    double s = a.at(r, c) == GenSign::plus ? 1.0 : -1.0;
                    double h = 1.0 - s * x;
                    if (h > 0.0) {
                        p += h * h;
                        g.at(r, c) = -2.0 * s * h;
                    } else {
                        g.at(r, c) = 0.0;
                    }
                    break;
                }
                case GenSign::any:
                    g.at(r, c) = 0.0;
                    break;
            }
        }
    return p;
}

// floats only gate whether a candidate is worth rationalizing, never acceptance
bool near_feasible(const GenSignPattern& a, const Dense& w) {
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c) {
            double x = w.at(r, c);
            GenSign g = a.at(r, c);
            if (g == GenSign::zero && std::fabs(x) > 1e-6) return false;
            if (g == GenSign::plus && x < 1e-3) return false;
            if (g == GenSign::minus && x > -1e-3) return false;
        }
    return true;
}

RationalMatrix representative_member(const GenSignPattern& a) {
    RationalMatrix w(a.rows(), a.cols());
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c) {
            GenSign g = a.at(r, c);
            if (g == GenSign::plus) w.at(r, c) = 1;
            if (g == GenSign::minus) w.at(r, c) = -1;
        }
    return w;
}

// one seeded descent; produces an exactly verified member of rank <= r or nothing
std::optional<RationalMatrix> restart_attempt(const GenSignPattern& a, int r,
                                              const SearchConfig& cfg, std::uint64_t attempt) {
    int m = a.rows(), n = a.cols();
    Rng rng(cfg.seed ^ (0x853c49e6748fea9bULL + attempt * 0xda3e39cb94b95bdbULL));
    Dense u(m, r), v(r, n);
    for (auto& x : u.v) x = 2.0 * rng.next_unit() - 1.0;
    for (auto& x : v.v) x = 2.0 * rng.next_unit() - 1.0;

    double step = 0.1;
    Dense grad(m, n);
    double last = std::numeric_limits<double>::max();
    for (int iter = 0; iter < 600; ++iter) {
        Dense w = matmul(u, v);
        if (iter % 20 == 0 && near_feasible(a, w)) break;
        double pen = penalty_and_gradient(a, w, grad);
        if (pen < 1e-16) break;
        if (pen > last)
            step *= 0.5;
        else
            step = std::min(step * 1.05, 0.5);
        if (step < 1e-7) break;
        last = pen;
        Dense vt(n, r), ut(r, m);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < n; ++j) vt.at(j, i) = v.at(i, j);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < r; ++j) ut.at(j, i) = u.at(i, j);
        Dense gu = matmul(grad, vt), gv = matmul(ut, grad);
        for (std::size_t i = 0; i < u.v.size(); ++i) u.v[i] -= step * gu.v[i];
        for (std::size_t i = 0; i < v.v.size(); ++i) v.v[i] -= step * gv.v[i];
    }
    Dense w = matmul(u, v);
    if (!near_feasible(a, w)) return std::nullopt;

    // rationalize the left factor, then rebuild each right column inside the exact
    // kernel of the rows that must vanish: zero cells come out exactly zero and the
    // product keeps rank <= r
    RationalMatrix uq(m, r);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < r; ++j) uq.at(i, j) = rationalize(u.at(i, j), cfg.max_denominator);

    RationalMatrix wq(m, n);
    for (int j = 0; j < n; ++j) {
        std::vector<int> zero_rows, live_rows;
        for (int i = 0; i < m; ++i)
            (a.at(i, j) == GenSign::zero ? zero_rows : live_rows).push_back(i);
        if (live_rows.empty()) continue;  // column forced to zero
        std::vector<RationalMatrix> basis;
        if (zero_rows.empty()) {
            for (int i = 0; i < r; ++i) {
                RationalMatrix e(r, 1);
                e.at(i, 0) = 1;
                basis.push_back(std::move(e));
            }
        } else {
            std::vector<int> all(r);
            for (int i = 0; i < r; ++i) all[i] = i;
            basis = kernel_basis(submatrix(uq, zero_rows, all));
        }
        if (basis.empty()) return std::nullopt;
        int d = static_cast<int>(basis.size());

        // least-squares fit of the float column over the admissible subspace
        Dense af(static_cast<int>(live_rows.size()), d);
        std::vector<double> bf(live_rows.size());
        for (std::size_t i = 0; i < live_rows.size(); ++i) {
            for (int k = 0; k < d; ++k) {
                double acc = 0.0;
                for (int l = 0; l < r; ++l)
                    acc += uq.at(live_rows[i], l).get_d() * basis[k].at(l, 0).get_d();
                af.at(static_cast<int>(i), k) = acc;
            }
            bf[i] = w.at(live_rows[i], j);
        }
        Dense normal(d, d);
        std::vector<double> rhs(d, 0.0);
        for (int x = 0; x < d; ++x) {
            for (int y = 0; y < d; ++y) {
                double acc = 0.0;
                for (int i = 0; i < af.rows; ++i) acc += af.at(i, x) * af.at(i, y);
                normal.at(x, y) = acc;
            }
            normal.at(x, x) += 1e-9;
            for (int i = 0; i < af.rows; ++i) rhs[x] += af.at(i, x) * bf[i];
        }
        auto coef = solve_dense(normal, rhs);

        RationalMatrix vj(r, 1);
        for (int k = 0; k < d; ++k) {
            Rational ck = rationalize(coef[k], cfg.max_denominator);
            for (int l = 0; l < r; ++l) vj.at(l, 0) += ck * basis[k].at(l, 0);
        }
        for (int i = 0; i < m; ++i) {
            Rational acc = 0;
            for (int l = 0; l < r; ++l) acc += uq.at(i, l) * vj.at(l, 0);
            wq.at(i, j) = acc;
        }
    }
    if (!is_member(wq, a)) return std::nullopt;
    if (rank(wq) > r) return std::nullopt;
    return wq;
}

}  // namespace

std::optional<RationalMatrix> local_search_upper_bound(const GenSignPattern& a, int r,
                                                       const SearchConfig& cfg) {
    cfg.validate();
    if (r < 0) return std::nullopt;
    if (r == 0) {
        RationalMatrix z(a.rows(), a.cols());
        if (is_member(z, a)) return z;
        return std::nullopt;
    }
    if (r >= std::min(a.rows(), a.cols())) {
        RationalMatrix w = representative_member(a);
        if (rank(w) <= r) return w;
        return std::nullopt;
    }
    if (cfg.restarts == 0) return std::nullopt;

    std::vector<std::optional<RationalMatrix>> slots(cfg.restarts);
    for_each_index(static_cast<std::size_t>(cfg.restarts), cfg.parallel, [&](std::size_t t) {
        slots[t] = restart_attempt(a, r, cfg, t);
    });
    // deterministic reduction: best exact rank, earliest restart on ties
    std::optional<RationalMatrix> best;
    int best_rank = std::numeric_limits<int>::max();
    for (auto& slot : slots) {
        if (!slot) continue;
        int rk = rank(*slot);
        if (rk < best_rank) {
            best_rank = rk;
            best = std::move(slot);
        }
    }
    return best;
}

MrBounds mr_bounds(const GenSignPattern& a, const SearchConfig& cfg) {
    cfg.validate();
    if (!a.is_plain()) {
        auto refs = refinements(a, cfg.refinement_cap);
        std::vector<std::optional<MrBounds>> slots(refs.size());
        for_each_index(refs.size(), cfg.parallel, [&](std::size_t i) {
            SearchConfig inner = cfg;
            inner.parallel = false;  // the refinements are the parallel axis here
            slots[i] = mr_bounds(refs[i], inner);
        });
        std::size_t lb_at = 0, ub_at = 0;
        for (std::size_t i = 1; i < slots.size(); ++i) {
            if (slots[i]->lb < slots[lb_at]->lb) lb_at = i;
            if (slots[i]->ub < slots[ub_at]->ub) ub_at = i;
        }
        int lb = slots[lb_at]->lb, ub = slots[ub_at]->ub;
        return MrBounds{lb, ub, slots[lb_at]->lb_cert, slots[ub_at]->witness, lb == ub};
    }

    int m = a.rows(), n = a.cols();
    if (a.is_zero()) return MrBounds{0, 0, LbCertificate{}, RationalMatrix(m, n), true};

    auto tri = triangle_lower_bound(a);
    int lb = tri.size;
    LbCertificate cert{LbKind::triangle, tri.rows, tri.cols};
    if (auto r1 = rank1_member(a)) return MrBounds{1, 1, std::move(cert), std::move(*r1), true};
    if (lb < 2) {
        lb = 2;
        cert = LbCertificate{LbKind::not_rank1, {}, {}};
    }
    auto sns = sns_lower_bound(a, lb);
    if (sns.size > lb) {
        lb = sns.size;
        cert = LbCertificate{LbKind::sns_submatrix, sns.rows, sns.cols};
    }
    if (lb == std::min(m, n)) {
        // every member already has rank >= lb, so any member is an exact witness
        RationalMatrix w = representative_member(a);
        return MrBounds{lb, lb, std::move(cert), std::move(w), true};
    }

    auto grid = grid_upper_bound(a, cfg, lb);
    RationalMatrix witness = grid ? std::move(grid->witness) : representative_member(a);
    int ub = grid ? grid->rank : rank(witness);
    for (int r = ub - 1; r >= std::max(lb, 1);) {
        auto w = local_search_upper_bound(a, r, cfg);
        if (!w) break;
        witness = std::move(*w);
        ub = rank(witness);
        r = ub - 1;
    }
    if (lb > ub) throw inconsistency_error("lower bound exceeded a verified witness rank");
    return MrBounds{lb, ub, std::move(cert), std::move(witness), lb == ub};
}

}  // namespace signrank
