#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "signrank/pattern.hpp"
#include "signrank/rank_lab.hpp"
#include "signrank/rational_matrix.hpp"

namespace signrank {

struct SearchConfig {
    // nonzero values candidates may take; signed cells use the sign-consistent ones,
    // '#' cells additionally use 0
    std::vector<Rational> grid;
    int restarts = 64;
    int exhaustive_cell_cap = 12;
    int max_denominator = 64;
    std::uint64_t seed = 0;
    int refinement_cap = 8;
    int max_depth = 8;
    bool try_all_separations = false;
    bool parallel = true;
    int sample_budget = 4096;

    static SearchConfig defaults();
    void validate() const;
};

enum class LbKind { all_zero, not_rank1, triangle, sns_submatrix };

// all_zero / not_rank1 carry no indices; triangle carries the ordered
// permuted-triangular rows/cols; sns_submatrix the rows/cols of a submatrix every
// realization of which is nonsingular
struct LbCertificate {
    LbKind kind = LbKind::all_zero;
    std::vector<int> rows, cols;
};

struct MrBounds {
    int lb;
    int ub;
    LbCertificate lb_cert;
    RationalMatrix witness;  // member of Q(A) with exact rank ub
    bool exact;
};

// true iff mr(a) <= 1: drop zero rows/columns, remaining cells must be nonzero and
// 2-colorable with row/column signs; plain patterns only
bool mr_le_1(const GenSignPattern& a);

// ordered rows/cols with signed diagonal and a[rows[k]][cols[l]] = 0 for l > k;
// every realization has rank >= size; '#' cells serve neither role
struct Triangle {
    int size;
    std::vector<int> rows, cols;
};
Triangle triangle_lower_bound(const GenSignPattern& a);

// every determinant-expansion term of a square plain pattern has one sign and at
// least one term is nonzero, so every realization is nonsingular
bool is_sign_nonsingular(const GenSignPattern& a);

// largest sign-nonsingular t x t submatrix found (best effort beyond desk scale);
// mr(a) >= size; size 0 when none; submatrices containing '#' are skipped
struct SnsResult {
    int size;
    std::vector<int> rows, cols;
};
SnsResult sns_lower_bound(const GenSignPattern& a, int above = 0);

struct GridResult {
    int rank;
    RationalMatrix witness;
};

// minimum exact rank over members with entries in the value grid (zero cells 0,
// signed cells sign-consistent grid values, '#' cells grid plus 0); exhaustive
// while the candidate space stays within budget, seeded sampling beyond; stops
// early once stop_at is met
std::optional<GridResult> grid_upper_bound(const GenSignPattern& a, const SearchConfig& cfg,
                                           int stop_at = 0);

// float factor descent toward a rank <= r member, rationalized and verified
// exactly; nothing unless an exact member of Q(a) with rank <= r is produced
std::optional<RationalMatrix> local_search_upper_bound(const GenSignPattern& a, int r,
                                                       const SearchConfig& cfg);

// certified interval for mr(a); generalized patterns take interval minima over
// their refinements (certificates then refer to the achieving refinement)
MrBounds mr_bounds(const GenSignPattern& a, const SearchConfig& cfg);

}  // namespace signrank
