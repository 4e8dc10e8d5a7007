#include "signrank/separation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace signrank {

namespace {

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }

    void unite(int x, int y) { parent[find(x)] = find(y); }
};

struct Component {
    std::vector<int> rows, cols;
    int key;  // smallest row, or rows() + smallest col for column-only components
};

// connected components of the nonzero bipartite graph on the non-cut rows/cols
std::vector<Component> components_without(const GenSignPattern& m, int cut_row, int cut_col) {
    std::vector<int> rs, cs;
    for (int r = 0; r < m.rows(); ++r)
        if (r != cut_row) rs.push_back(r);
    for (int c = 0; c < m.cols(); ++c)
        if (c != cut_col) cs.push_back(c);

    UnionFind uf(static_cast<int>(rs.size() + cs.size()));
    for (std::size_t i = 0; i < rs.size(); ++i)
        for (std::size_t j = 0; j < cs.size(); ++j)
            if (m.at(rs[i], cs[j]) != GenSign::zero)
                uf.unite(static_cast<int>(i), static_cast<int>(rs.size() + j));

    std::vector<Component> comps;
    std::vector<int> slot(rs.size() + cs.size(), -1);
    for (std::size_t i = 0; i < rs.size() + cs.size(); ++i) {
        int root = uf.find(static_cast<int>(i));
        if (slot[root] < 0) {
            slot[root] = static_cast<int>(comps.size());
            comps.push_back({{}, {}, 0});
        }
        if (i < rs.size())
            comps[slot[root]].rows.push_back(rs[i]);
        else
            comps[slot[root]].cols.push_back(cs[i - rs.size()]);
    }
    for (auto& comp : comps)
        comp.key = comp.rows.empty() ? m.rows() + comp.cols.front() : comp.rows.front();
    std::sort(comps.begin(), comps.end(),
              [](const Component& a, const Component& b) { return a.key < b.key; });
    return comps;
}

void collect_sides(const std::vector<Component>& comps, std::uint64_t side2_bits,
                   Separation& out) {
    out.rows1.clear();
    out.rows2.clear();
    out.cols1.clear();
    out.cols2.clear();
    for (std::size_t k = 0; k < comps.size(); ++k) {
        bool side2 = k > 0 && (side2_bits >> (k - 1) & 1);
        auto& rows = side2 ? out.rows2 : out.rows1;
        auto& cols = side2 ? out.cols2 : out.cols1;
        rows.insert(rows.end(), comps[k].rows.begin(), comps[k].rows.end());
        cols.insert(cols.end(), comps[k].cols.begin(), comps[k].cols.end());
    }
    std::sort(out.rows1.begin(), out.rows1.end());
    std::sort(out.rows2.begin(), out.rows2.end());
    std::sort(out.cols1.begin(), out.cols1.end());
    std::sort(out.cols2.begin(), out.cols2.end());
}

bool all_parts_nonempty(const Separation& s) {
    return !s.rows1.empty() && !s.rows2.empty() && !s.cols1.empty() && !s.cols2.empty();
}

}  // namespace

std::vector<Separation> find_1_separations(const GenSignPattern& m, bool* truncated) {
    if (m.rows() < 3 || m.cols() < 3)
        throw std::invalid_argument("1-separations need at least 3 rows and 3 columns");
    if (truncated) *truncated = false;

    constexpr std::uint64_t kPartitionCap = std::uint64_t(1) << 20;
    std::vector<Separation> found;
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) {
            auto comps = components_without(m, r, c);
            std::size_t nu = comps.size();
            if (nu < 2) continue;
            // the component holding the smallest non-cut row is pinned to side 1,
            // the other nu-1 choose freely
            Separation s{r, c, {}, {}, {}, {}};
            if (nu - 1 < 64 && (std::uint64_t(1) << (nu - 1)) <= kPartitionCap) {
                for (std::uint64_t bits = 1; bits < (std::uint64_t(1) << (nu - 1)); ++bits) {
                    collect_sides(comps, bits, s);
                    if (all_parts_nonempty(s)) found.push_back(s);
                }
            } else {
                if (truncated) *truncated = true;
                for (std::size_t k = 1; k < nu; ++k) {
                    collect_sides(comps, std::uint64_t(1) << (k - 1), s);
                    if (all_parts_nonempty(s)) found.push_back(s);
                }
            }
        }

    auto key_less = [](const Separation& a, const Separation& b) {
        if (a.cut_row != b.cut_row) return a.cut_row < b.cut_row;
        if (a.cut_col != b.cut_col) return a.cut_col < b.cut_col;
        if (a.rows1 != b.rows1) return a.rows1 < b.rows1;
        return a.cols1 < b.cols1;
    };
    std::sort(found.begin(), found.end(), key_less);
    found.erase(std::unique(found.begin(), found.end(),
                            [](const Separation& a, const Separation& b) {
                                return a.cut_row == b.cut_row && a.cut_col == b.cut_col &&
                                       a.rows1 == b.rows1;
                            }),
                found.end());
    return found;
}

Blocks extract_blocks(const GenSignPattern& m, const Separation& s) {
    if (!all_parts_nonempty(s))
        throw std::invalid_argument("separation needs all four index lists nonempty");
    for (int i : s.rows1)
        for (int j : s.cols2)
            if (m.at(i, j) != GenSign::zero)
                throw std::invalid_argument("top-right separation block not zero");
    for (int i : s.rows2)
        for (int j : s.cols1)
            if (m.at(i, j) != GenSign::zero)
                throw std::invalid_argument("bottom-left separation block not zero");
    std::vector<int> cut_r{s.cut_row}, cut_c{s.cut_col};
    return Blocks{submatrix(m, s.rows1, s.cols1), submatrix(m, s.rows1, cut_c),
                  submatrix(m, cut_r, s.cols1),  submatrix(m, cut_r, cut_c),
                  submatrix(m, cut_r, s.cols2),  submatrix(m, s.rows2, cut_c),
                  submatrix(m, s.rows2, s.cols2)};
}

}  // namespace signrank
