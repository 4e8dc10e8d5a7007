#include "signrank/formula.hpp"

#include <algorithm>
#include <stdexcept>

#include "signrank/parallel.hpp"

namespace signrank {

RSpair build_rs(const Blocks& blocks, Sign p) {
    int m1 = blocks.a11.rows(), n1 = blocks.a11.cols();
    int m2 = blocks.a33.rows(), n2 = blocks.a33.cols();
    GenSignPattern r(m1 + 1, n1 + 1), s(m2 + 1, n2 + 1);
    for (int i = 0; i < m1; ++i)
        for (int j = 0; j < n1; ++j) r.set(i, j, blocks.a11.at(i, j));
    for (int i = 0; i < m1; ++i) r.set(i, n1, blocks.a12.at(i, 0));
    for (int j = 0; j < n1; ++j) r.set(m1, j, blocks.a21.at(0, j));
    r.set(m1, n1, p);
    s.set(0, 0, sign_sub(to_sign(blocks.a22.at(0, 0)), p));
    for (int j = 0; j < n2; ++j) s.set(0, j + 1, blocks.a23.at(0, j));
    for (int i = 0; i < m2; ++i) s.set(i + 1, 0, blocks.a32.at(i, 0));
    for (int i = 0; i < m2; ++i)
        for (int j = 0; j < n2; ++j) s.set(i + 1, j + 1, blocks.a33.at(i, j));
    return RSpair{p, std::move(r), std::move(s)};
}

namespace {

Rational rep_value(GenSign g) {
    if (g == GenSign::plus) return Rational(1);
    if (g == GenSign::minus) return Rational(-1);
    return Rational(0);
}

void paste_into(RationalMatrix& dst, const RationalMatrix& src, const std::vector<int>& rows,
                const std::vector<int>& cols) {
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            dst.at(rows[i], cols[j]) = src.at(static_cast<int>(i), static_cast<int>(j));
}

std::vector<int> appended(std::vector<int> v, int extra) {
    v.push_back(extra);
    return v;
}

std::vector<int> prepended(int extra, const std::vector<int>& v) {
    std::vector<int> out{extra};
    out.insert(out.end(), v.begin(), v.end());
    return out;
}

// zero matrix + both corner witnesses + the full cut row and column as
// representative values; the cut strip adds at most rank 2
RationalMatrix assemble_corner(const GenSignPattern& m, const Separation& s,
                               const RationalMatrix& w11, const RationalMatrix& w33) {
    RationalMatrix w(m.rows(), m.cols());
    paste_into(w, w11, s.rows1, s.cols1);
    paste_into(w, w33, s.rows2, s.cols2);
    for (int j = 0; j < m.cols(); ++j) w.at(s.cut_row, j) = rep_value(m.at(s.cut_row, j));
    for (int i = 0; i < m.rows(); ++i) w.at(i, s.cut_col) = rep_value(m.at(i, s.cut_col));
    return w;
}

// stacked row-band witnesses plus one representative cut row
RationalMatrix assemble_row_bands(const GenSignPattern& m, const Separation& s,
                                  const RationalMatrix& wtop, const RationalMatrix& wbot) {
    RationalMatrix w(m.rows(), m.cols());
    paste_into(w, wtop, s.rows1, appended(s.cols1, s.cut_col));
    paste_into(w, wbot, s.rows2, prepended(s.cut_col, s.cols2));
    for (int j = 0; j < m.cols(); ++j) w.at(s.cut_row, j) = rep_value(m.at(s.cut_row, j));
    return w;
}

// stacked column-band witnesses plus one representative cut column
RationalMatrix assemble_col_bands(const GenSignPattern& m, const Separation& s,
                                  const RationalMatrix& wleft, const RationalMatrix& wright) {
    RationalMatrix w(m.rows(), m.cols());
    paste_into(w, wleft, appended(s.rows1, s.cut_row), s.cols1);
    paste_into(w, wright, prepended(s.cut_row, s.rows2), s.cols2);
    for (int i = 0; i < m.rows(); ++i) w.at(i, s.cut_col) = rep_value(m.at(i, s.cut_col));
    return w;
}

// 1-subdirect sum of the R and S witnesses; S is scaled by a positive lambda
// chosen so the overlapped corner lands back in the corner's sign class
RationalMatrix assemble_overlap(const GenSignPattern& m, const Separation& s,
                                const RationalMatrix& wr, const RationalMatrix& ws) {
    int m1 = static_cast<int>(s.rows1.size()), n1 = static_cast<int>(s.cols1.size());
    Rational cr = wr.at(m1, n1), cs = ws.at(0, 0);
    Sign target = to_sign(m.at(s.cut_row, s.cut_col));
    Rational lambda(1);
    if (cs != 0 && cr != 0) {
        if (target == Sign::zero)
            lambda = -cr / cs;
        else if (sign_class(cr) == target && sign_class(cs) != target)
            lambda = -cr / (2 * cs);
        else if (sign_class(cr) != target)
            lambda = -2 * cr / cs;
    }
    RationalMatrix w(m.rows(), m.cols());
    for (int i = 0; i < m1; ++i)
        for (int j = 0; j < n1; ++j) w.at(s.rows1[i], s.cols1[j]) = wr.at(i, j);
    for (int i = 0; i < m1; ++i) w.at(s.rows1[i], s.cut_col) = wr.at(i, n1);
    for (int j = 0; j < n1; ++j) w.at(s.cut_row, s.cols1[j]) = wr.at(m1, j);
    w.at(s.cut_row, s.cut_col) = cr + lambda * cs;
    for (std::size_t j = 0; j < s.cols2.size(); ++j)
        w.at(s.cut_row, s.cols2[j]) = lambda * ws.at(0, static_cast<int>(j) + 1);
    for (std::size_t i = 0; i < s.rows2.size(); ++i)
        w.at(s.rows2[i], s.cut_col) = lambda * ws.at(static_cast<int>(i) + 1, 0);
    for (std::size_t i = 0; i < s.rows2.size(); ++i)
        for (std::size_t j = 0; j < s.cols2.size(); ++j)
            w.at(s.rows2[i], s.cols2[j]) =
                lambda * ws.at(static_cast<int>(i) + 1, static_cast<int>(j) + 1);
    return w;
}

std::string shape_label(const GenSignPattern& a) {
    return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
}

MrBounds evaluate_impl(const GenSignPattern& a, const SearchConfig& cfg, int depth,
                       TraceNode& node);

struct SubEval {
    MrBounds bounds;
    TraceNode trace;
};

SubEval sub_eval(std::string label, const GenSignPattern& p, const SearchConfig& cfg,
                 int depth) {
    TraceNode node;
    node.label = std::move(label);
    MrBounds b = evaluate_impl(p, cfg, depth, node);
    return SubEval{std::move(b), std::move(node)};
}

MrBounds make_term(const GenSignPattern& m, const SubEval& l, const SubEval& r, int add,
                   RationalMatrix witness) {
    int lb = l.bounds.lb + r.bounds.lb + add;
    int ub = l.bounds.ub + r.bounds.ub + add;
    if (!is_member(witness, m))
        throw inconsistency_error("assembled term witness left the pattern class");
    if (rank(witness) > ub)
        throw inconsistency_error("assembled term witness overshot the term bound");
    return MrBounds{lb, ub, LbCertificate{}, std::move(witness), l.bounds.exact && r.bounds.exact};
}

FormulaReport formula_with_direct(const GenSignPattern& m, const Separation& s,
                                  const SearchConfig& cfg, int depth, const MrBounds& direct) {
    if (!m.is_plain())
        throw std::invalid_argument("formula evaluation wants a plain pattern");
    Blocks b = extract_blocks(m, s);
    int d1 = depth + 1;

    auto t1l = sub_eval("mr(A11)", b.a11, cfg, d1);
    auto t1r = sub_eval("mr(A33)", b.a33, cfg, d1);
    auto t2l = sub_eval("mr([A11 A12])", hstack(b.a11, b.a12), cfg, d1);
    auto t2r = sub_eval("mr([A32 A33])", hstack(b.a32, b.a33), cfg, d1);
    auto t3l = sub_eval("mr([A11; A21])", vstack(b.a11, b.a21), cfg, d1);
    auto t3r = sub_eval("mr([A23; A33])", vstack(b.a23, b.a33), cfg, d1);
    RSpair rsp = build_rs(b, Sign::plus);
    RSpair rs0 = build_rs(b, Sign::zero);
    RSpair rsm = build_rs(b, Sign::minus);
    auto t4l = sub_eval("mr(R+)", rsp.r, cfg, d1);
    auto t4r = sub_eval("mr(S+)", rsp.s, cfg, d1);
    auto t5l = sub_eval("mr(R0)", rs0.r, cfg, d1);
    auto t5r = sub_eval("mr(S0)", rs0.s, cfg, d1);
    auto t6l = sub_eval("mr(R-)", rsm.r, cfg, d1);
    auto t6r = sub_eval("mr(S-)", rsm.s, cfg, d1);

    std::vector<MrBounds> terms;
    terms.reserve(6);
    terms.push_back(
        make_term(m, t1l, t1r, 2, assemble_corner(m, s, t1l.bounds.witness, t1r.bounds.witness)));
    terms.push_back(make_term(
        m, t2l, t2r, 1, assemble_row_bands(m, s, t2l.bounds.witness, t2r.bounds.witness)));
    terms.push_back(make_term(
        m, t3l, t3r, 1, assemble_col_bands(m, s, t3l.bounds.witness, t3r.bounds.witness)));
    terms.push_back(make_term(
        m, t4l, t4r, 0, assemble_overlap(m, s, t4l.bounds.witness, t4r.bounds.witness)));
    terms.push_back(make_term(
        m, t5l, t5r, 0, assemble_overlap(m, s, t5l.bounds.witness, t5r.bounds.witness)));
    terms.push_back(make_term(
        m, t6l, t6r, 0, assemble_overlap(m, s, t6l.bounds.witness, t6r.bounds.witness)));

    int min_ub = terms[0].ub;
    for (const auto& t : terms) min_ub = std::min(min_ub, t.ub);
    int achieving = 1;
    while (terms[achieving - 1].ub != min_ub) ++achieving;

    RationalMatrix witness = terms[achieving - 1].witness;
    int result_ub = std::min(min_ub, rank(witness));
    bool all_exact = true;
    for (const auto& t : terms) all_exact = all_exact && t.exact;
    int result_lb = direct.lb;
    if (all_exact) {
        int min_lb = terms[0].lb;
        for (const auto& t : terms) min_lb = std::min(min_lb, t.lb);
        result_lb = std::max(result_lb, min_lb);
    }
    if (result_lb > result_ub)
        throw inconsistency_error("formula interval collapsed below its lower bound");

    TraceNode trace;
    trace.label = "formula " + shape_label(m) + " cut (" + std::to_string(s.cut_row) + "," +
                  std::to_string(s.cut_col) + ")";
    trace.lb = result_lb;
    trace.ub = result_ub;
    trace.exact = result_lb == result_ub;
    const SubEval* pairs[6][2] = {{&t1l, &t1r}, {&t2l, &t2r}, {&t3l, &t3r},
                                  {&t4l, &t4r}, {&t5l, &t5r}, {&t6l, &t6r}};
    for (int i = 0; i < 6; ++i) {
        TraceNode tn;
        tn.label = "T" + std::to_string(i + 1);
        tn.lb = terms[i].lb;
        tn.ub = terms[i].ub;
        tn.exact = terms[i].exact;
        tn.children.push_back(pairs[i][0]->trace);
        tn.children.push_back(pairs[i][1]->trace);
        trace.children.push_back(std::move(tn));
    }

    MrBounds result{result_lb, result_ub, direct.lb_cert, std::move(witness),
                    result_lb == result_ub};
    return FormulaReport{std::move(terms), std::move(result), achieving, std::move(trace)};
}

MrBounds evaluate_impl(const GenSignPattern& a, const SearchConfig& cfg, int depth,
                       TraceNode& node) {
    if (node.label.empty()) node.label = "mr " + shape_label(a);
    if (!a.is_plain()) {
        auto refs = refinements(a, cfg.refinement_cap);
        std::optional<MrBounds> by_lb, by_ub;
        for (const auto& ref : refs) {
            TraceNode child;
            child.label = "refinement";
            MrBounds rb = evaluate_impl(ref, cfg, depth, child);
            node.children.push_back(std::move(child));
            if (!by_lb || rb.lb < by_lb->lb) by_lb = rb;
            if (!by_ub || rb.ub < by_ub->ub) by_ub = std::move(rb);
        }
        node.lb = by_lb->lb;
        node.ub = by_ub->ub;
        node.exact = node.lb == node.ub;
        return MrBounds{node.lb, node.ub, by_lb->lb_cert, by_ub->witness, node.exact};
    }
    MrBounds direct = mr_bounds(a, cfg);
    int lb = direct.lb, ub = direct.ub;
    RationalMatrix witness = std::move(direct.witness);
    if (lb != ub && depth < cfg.max_depth && a.rows() >= 3 && a.cols() >= 3) {
        auto seps = find_1_separations(a);
        std::size_t take = seps.empty() ? 0 : (cfg.try_all_separations ? seps.size() : 1);
        MrBounds direct_view{lb, ub, direct.lb_cert, RationalMatrix(1, 1), false};
        for (std::size_t k = 0; k < take; ++k) {
            FormulaReport rep = formula_with_direct(a, seps[k], cfg, depth, direct_view);
            lb = std::max(lb, rep.result.lb);
            if (rep.result.ub < ub) {
                ub = rep.result.ub;
                witness = std::move(rep.result.witness);
            }
            node.children.push_back(std::move(rep.trace));
            if (lb > ub)
                throw inconsistency_error("direct and formula intervals are disjoint");
            if (lb == ub) break;
        }
    }
    node.lb = lb;
    node.ub = ub;
    node.exact = lb == ub;
    return MrBounds{lb, ub, std::move(direct.lb_cert), std::move(witness), lb == ub};
}

}  // namespace

FormulaReport formula_terms(const GenSignPattern& m, const Separation& s,
                            const SearchConfig& cfg, int depth) {
    cfg.validate();
    return formula_with_direct(m, s, cfg, depth, mr_bounds(m, cfg));
}

MrBounds evaluate_mr(const GenSignPattern& a, const SearchConfig& cfg, int depth) {
    cfg.validate();
    TraceNode scratch;
    return evaluate_impl(a, cfg, depth, scratch);
}

std::array<Verdict, 6> check_inequalities(const GenSignPattern& m, const Separation& s,
                                          const SearchConfig& cfg) {
    FormulaReport rep = formula_terms(m, s, cfg, 0);
    MrBounds mr = evaluate_mr(m, cfg, 0);
    std::array<Verdict, 6> out;
    for (int i = 0; i < 6; ++i) {
        if (!rep.terms[i].exact || !mr.exact)
            out[i] = Verdict::indeterminate;
        else
            out[i] = rep.terms[i].lb >= mr.lb ? Verdict::holds : Verdict::violated;
    }
    return out;
}

CrossValidation cross_validate(int rows, int cols, const SearchConfig& cfg) {
    cfg.validate();
    CrossValidation out;
    if (rows < 3 || cols < 3) return out;

    Separation sep{1, 1, {0}, {}, {0}, {}};
    for (int r = 2; r < rows; ++r) sep.rows2.push_back(r);
    for (int c = 2; c < cols; ++c) sep.cols2.push_back(c);

    std::vector<std::pair<int, int>> cells;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            bool off = (r == 0 && c >= 2) || (r >= 2 && c == 0);
            if (!off) cells.emplace_back(r, c);
        }
    std::size_t total = 1;
    for (std::size_t i = 0; i < cells.size(); ++i) total *= 3;

    struct Outcome {
        bool engine_exact = false, formula_exact = false;
        int engine_value = -1, formula_value = -1;
    };
    std::vector<Outcome> slots(total);
    for_each_index(total, cfg.parallel, [&](std::size_t code) {
        GenSignPattern m(rows, cols);
        std::size_t rest = code;
        for (const auto& [r, c] : cells) {
            int digit = static_cast<int>(rest % 3);
            rest /= 3;
            m.set(r, c, digit == 0 ? GenSign::zero : digit == 1 ? GenSign::plus : GenSign::minus);
        }
        SearchConfig inner = cfg;
        inner.parallel = false;
        MrBounds engine = mr_bounds(m, inner);
        FormulaReport rep = formula_with_direct(m, sep, inner, 0, engine);
        slots[code] = Outcome{engine.exact, rep.result.exact, engine.lb, rep.result.lb};
    });
    for (const auto& o : slots) {
        ++out.total;
        if (o.engine_exact) ++out.engine_exact;
        if (o.formula_exact) ++out.formula_exact;
        if (o.engine_exact && o.formula_exact) {
            ++out.exact_both;
            if (o.engine_value == o.formula_value) ++out.matched;
        } else {
            ++out.skipped_inexact;
        }
    }
    return out;
}

}  // namespace signrank
