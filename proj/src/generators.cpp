#include "signrank/generators.hpp"

namespace signrank {

Rational random_rational(Rng& rng) {
    return make_rational(rng.next_in(-9, 9), rng.next_in(1, 3));
}

Rational random_nonzero_rational(Rng& rng) {
    long num = rng.next_in(1, 9) * (rng.next_in(0, 1) ? 1 : -1);
    return make_rational(num, rng.next_in(1, 3));
}

RationalMatrix random_matrix(Rng& rng, int m, int n) {
    RationalMatrix out(m, n);
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < n; ++c) out.at(r, c) = random_rational(rng);
    return out;
}

RationalMatrix random_low_rank_matrix(Rng& rng, int m, int n, int r) {
    if (r <= 0) return RationalMatrix(m, n);
    return random_matrix(rng, m, r) * random_matrix(rng, r, n);
}

GenSignPattern random_pattern(Rng& rng, int m, int n, int zero_pct, int any_pct) {
    GenSignPattern out(m, n);
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < n; ++c) {
            long roll = rng.next_in(0, 99);
            if (roll < zero_pct)
                out.set(r, c, GenSign::zero);
            else if (roll < zero_pct + any_pct)
                out.set(r, c, GenSign::any);
            else
                out.set(r, c, rng.next_in(0, 1) ? GenSign::plus : GenSign::minus);
        }
    return out;
}

GenSignPattern random_separated_pattern(Rng& rng, BlockSplit s, int zero_pct) {
    GenSignPattern out = random_pattern(rng, s.m1 + 1 + s.m2, s.n1 + 1 + s.n2, zero_pct);
    for (int r = 0; r < s.m1; ++r)
        for (int c = s.n1 + 1; c < out.cols(); ++c) out.set(r, c, GenSign::zero);
    for (int r = s.m1 + 1; r < out.rows(); ++r)
        for (int c = 0; c < s.n1; ++c) out.set(r, c, GenSign::zero);
    return out;
}

RationalMatrix random_separated_matrix(Rng& rng, BlockSplit s, int zero_pct) {
    int m = s.m1 + 1 + s.m2, n = s.n1 + 1 + s.n2;
    RationalMatrix out(m, n);
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < n; ++c)
            out.at(r, c) =
                rng.next_in(0, 99) < zero_pct ? Rational(0) : random_nonzero_rational(rng);
    for (int r = 0; r < s.m1; ++r)
        for (int c = s.n1 + 1; c < n; ++c) out.at(r, c) = 0;
    for (int r = s.m1 + 1; r < m; ++r)
        for (int c = 0; c < s.n1; ++c) out.at(r, c) = 0;
    return out;
}

}  // namespace signrank
