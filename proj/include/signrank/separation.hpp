#pragma once

#include <vector>

#include "signrank/pattern.hpp"

namespace signrank {

// a cut row and column plus a bipartition of the remaining indices such that the
// two off-diagonal blocks M[rows1, cols2] and M[rows2, cols1] are exactly zero;
// all four index lists are nonempty and sorted, and rows1 holds the smallest
// non-cut row (the canonical orientation)
struct Separation {
    int cut_row, cut_col;
    std::vector<int> rows1, rows2, cols1, cols2;
};

// every canonical 1-separation of m, deduplicated by (cut_row, cut_col, rows1)
// and sorted the same way; beyond 2^20 partitions per cut only the
// single-component-vs-rest splits are kept and *truncated is set
std::vector<Separation> find_1_separations(const GenSignPattern& m, bool* truncated = nullptr);

// the seven blocks in permuted order: a11 (m1 x n1), a12 (m1 x 1), a21 (1 x n1),
// a22 (1 x 1), a23 (1 x n2), a32 (m2 x 1), a33 (m2 x n2)
struct Blocks {
    GenSignPattern a11, a12, a21, a22, a23, a32, a33;
};

Blocks extract_blocks(const GenSignPattern& m, const Separation& s);

}  // namespace signrank
