#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "signrank/rational_matrix.hpp"

namespace signrank {

// thrown when an exactly-proved identity fails to verify; always a bug somewhere
struct inconsistency_error : std::logic_error {
    using std::logic_error::logic_error;
};

// exact rank over the rationals, fraction-free integer elimination
int rank(const RationalMatrix& a);

// basis of the right null space as n x 1 columns; empty iff full column rank
std::vector<RationalMatrix> kernel_basis(const RationalMatrix& a);

// one solution of a x = b (free variables 0), or nullopt if inconsistent; b is m x 1
std::optional<RationalMatrix> solve(const RationalMatrix& a, const RationalMatrix& b);

bool in_col_space(const RationalMatrix& col, const RationalMatrix& a);
bool in_row_space(const RationalMatrix& row, const RationalMatrix& a);

// k-subdirect sum: trailing k x k block of c overlaps (adds onto) the leading
// k x k block of d; k = 0 is the direct sum
RationalMatrix subdirect_sum(const RationalMatrix& c, const RationalMatrix& d, int k);

// rank(c (+)_k d) <= rank(c) + rank(d); holds for every input
bool check_subdirect_inequality(const RationalMatrix& c, const RationalMatrix& d, int k);

// rank [[0,a,0],[c,b11,B12],[0,B21,B22]] = rank(B22) + 2 for a, c != 0, witnessed
// by explicit transforms with p * bordered * q = [[0,1,0],[1,0,0],[0,0,B22]]
struct BorderedIdentity {
    RationalMatrix bordered;
    RationalMatrix p, q;
    RationalMatrix normal_form;
    int bordered_rank;
    int expected_rank;
};
BorderedIdentity bordered_rank_identity(const RationalMatrix& b, const Rational& a,
                                        const Rational& c);

// 2x2 block split of a matrix; a11 is m1 x n1, the rest inferred from the parent
struct TwoByTwoSplit {
    int m1, n1;
};

// rank [[0, xT a21, 0],[a12 y, a11, a12],[0, a21, a22]] = rank(a) whenever
// x ∈ ker(a22ᵀ) and y ∈ ker(a22), witnessed by p * a * q = bordered
struct AdjoinIdentity {
    RationalMatrix bordered;
    RationalMatrix p, q;
    int bordered_rank;
    int base_rank;
};
AdjoinIdentity adjoin_rank_identity(const RationalMatrix& a, TwoByTwoSplit split,
                                    const RationalMatrix& x, const RationalMatrix& y);

// 1-separation block shape: a11 is m1 x n1, a33 is m2 x n2, the cut row/column
// between them; parent is (m1+1+m2) x (n1+1+n2)
struct BlockSplit {
    int m1, n1, m2, n2;
};

struct SeparatedBlocks {
    RationalMatrix a11, a12, a21, a23, a32, a33;
    Rational a22;
};

// extracts the seven blocks, checking the zero blocks demanded by the shape
SeparatedBlocks split_blocks(const RationalMatrix& a, BlockSplit s);

enum class DecompKind { split, rows, cols, corner };

// which exact rank decomposition a 1-separated matrix admits, with witnesses:
//   split:  v, z solve vᵀa11 = a21, a11 z = a12; rank(R_q)+rank(S_q) = rank(a)
//           at corner q = vᵀ a11 z
//   rows:   rank([a11;a21]) + rank([a23;a33]) + 1 = rank(a), y the cokernel
//           vector separating [a12;a32]
//   cols:   rank([a11 a12]) + rank([a32 a33]) + 1 = rank(a), x the kernel
//           vector separating [a21 a23]
//   corner: rank(a11) + rank(a33) + 2 = rank(a), both x and y present
struct DecompCase {
    DecompKind kind;
    std::optional<RationalMatrix> v, z;
    Rational corner;
    std::optional<RationalMatrix> x, y;
    int case_sum;
    int base_rank;
};
DecompCase decompose_real(const RationalMatrix& a, BlockSplit s);

}  // namespace signrank
