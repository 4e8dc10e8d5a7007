#pragma once

#include <cstdint>

#include "signrank/pattern.hpp"
#include "signrank/rank_lab.hpp"
#include "signrank/rational_matrix.hpp"

namespace signrank {

// splitmix64; tiny, seed-stable across platforms, cheap to fork per work item
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // inclusive bounds
    long next_in(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

// numerators in [-9, 9], denominators in {1, 2, 3}
Rational random_rational(Rng& rng);
Rational random_nonzero_rational(Rng& rng);

RationalMatrix random_matrix(Rng& rng, int m, int n);

// product of m x r and r x n random factors, so rank <= r
RationalMatrix random_low_rank_matrix(Rng& rng, int m, int n, int r);

// each cell zero with probability zero_pct/100, '#' with any_pct/100, else +/-
GenSignPattern random_pattern(Rng& rng, int m, int n, int zero_pct, int any_pct = 0);

// 1-separated shape: the two off blocks zero, everything else drawn as above
GenSignPattern random_separated_pattern(Rng& rng, BlockSplit s, int zero_pct);
RationalMatrix random_separated_matrix(Rng& rng, BlockSplit s, int zero_pct);

}  // namespace signrank
