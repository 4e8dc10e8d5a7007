#pragma once

#include <array>
#include <string>
#include <vector>

#include "signrank/minrank.hpp"
#include "signrank/pattern.hpp"
#include "signrank/separation.hpp"

namespace signrank {

// R_p = [[A11, A12],[A21, p]] and S_p = [[a22 - p, A23],[A32, A33]]; the corner
// subtraction may leave '#', and that is the only cell of S where it can appear
struct RSpair {
    Sign p;
    GenSignPattern r, s;
};

RSpair build_rs(const Blocks& blocks, Sign p);

struct TraceNode {
    std::string label;
    int lb = 0, ub = 0;
    bool exact = false;
    std::vector<TraceNode> children;
};

// the six summands around one separation:
//   T1 = mr(A11) + mr(A33) + 2          T4 = mr(R+) + mr(S+)
//   T2 = mr([A11 A12]) + mr([A32 A33]) + 1   T5 = mr(R0) + mr(S0)
//   T3 = mr([A11; A21]) + mr([A23; A33]) + 1  T6 = mr(R-) + mr(S-)
// term entries bound the term value; each term's witness is the member of the
// whole pattern its construction assembles (exact rank at most the term's ub,
// no engine certificate attached). result.lb folds in the direct engine bound;
// the term minimum contributes only when all six terms are exact. result.ub is
// the smallest term ub, tightened to the assembled witness rank if that lands
// lower; the certificate on result is the engine's.
struct FormulaReport {
    std::vector<MrBounds> terms;  // T1..T6
    MrBounds result;
    int achieving_term;  // 1-based, first term whose ub matches the term minimum
    TraceNode trace;
};

FormulaReport formula_terms(const GenSignPattern& m, const Separation& s,
                            const SearchConfig& cfg, int depth = 0);

// certified interval for mr(a): the direct engine bounds intersected with the
// formula result over the first canonical separation (all of them with
// cfg.try_all_separations) while depth allows; '#' cells are expanded into
// refinements first; a provably empty intersection raises inconsistency_error
MrBounds evaluate_mr(const GenSignPattern& a, const SearchConfig& cfg, int depth = 0);

enum class Verdict { holds, violated, indeterminate };

// T_i >= mr(m) for each term; indeterminate where either side is inexact
std::array<Verdict, 6> check_inequalities(const GenSignPattern& m, const Separation& s,
                                          const SearchConfig& cfg);

struct CrossValidation {
    long total = 0;
    long exact_both = 0;       // both engine and formula landed exact
    long matched = 0;          // ... and agreed; contract: matched == exact_both
    long skipped_inexact = 0;
    long engine_exact = 0;
    long formula_exact = 0;
};

// enumerates every sign pattern on the 1-separated shape with unit corner blocks
// (rows1 = {0}, cut 1, rest side 2; same for columns) and cross-checks the
// formula against the direct engine; shapes below 3x3 return an empty report
CrossValidation cross_validate(int rows, int cols, const SearchConfig& cfg);

}  // namespace signrank
