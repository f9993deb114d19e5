#ifndef SZEGO_GRAPH_COUNT_HPP
#define SZEGO_GRAPH_COUNT_HPP

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "szego/combinatorics.hpp"
#include "szego/multi_index.hpp"

namespace szego {

/// Directed loopless multigraph on {i : m(i) > 0} with in = out = m(i).
///
/// Orientation: an edge i -> j with i > j is positive (p side, pair (i, j)),
/// an edge l -> k with l < k is negative (q side, pair (k, l)).
struct MCondGraph {
  std::vector<int> vertices;
  std::vector<std::pair<int, int>> edges;  // sorted multiset of (source, target)

  static int weight(const std::pair<int, int>& e) { return e.first > e.second ? e.first - e.second : e.second - e.first; }

  int positive_weight() const {
    int w = 0;
    for (const auto& e : edges)
      if (e.first > e.second) w += weight(e);
    return w;
  }
  int negative_weight() const {
    int w = 0;
    for (const auto& e : edges)
      if (e.first < e.second) w += weight(e);
    return w;
  }
  int out_degree(int v) const {
    int d = 0;
    for (const auto& e : edges) d += e.first == v;
    return d;
  }
  int in_degree(int v) const {
    int d = 0;
    for (const auto& e : edges) d += e.second == v;
    return d;
  }

  std::string to_string() const {
    std::string out = "[";
    for (std::size_t k = 0; k < edges.size(); ++k) {
      if (k) out += ", ";
      out += "(" + std::to_string(edges[k].first) + ", " + std::to_string(edges[k].second) + ")";
    }
    return out + "]";
  }

  friend bool operator==(const MCondGraph&, const MCondGraph&) = default;
  friend auto operator<=>(const MCondGraph&, const MCondGraph&) = default;
};

inline constexpr int kGraphSizeGuard = 12;

/// All m-condition graphs, i.e. the distinct edge multisets of cycle covers
/// of the complete directed multipartite graph with m(i) copies of vertex i.
///
/// Enumerated as nonnegative integer matrices with zero diagonal and row and
/// column sums m; every such matrix is the quotient of some cycle cover.
inline std::vector<MCondGraph> enumerate_m_graphs(const MultiplicityVector& m) {
  if (m.size() > kGraphSizeGuard) {
    throw std::invalid_argument("enumerate_m_graphs: |m| = " + std::to_string(m.size()) + " exceeds guard " +
                                std::to_string(kGraphSizeGuard));
  }
  std::vector<int> verts;
  std::vector<int> demand;
  for (const auto& [v, c] : m.entries()) {
    verts.push_back(v);
    demand.push_back(c);
  }
  const std::size_t V = verts.size();
  std::vector<MCondGraph> out;
  if (V == 0) {
    out.push_back({});
    return out;
  }
  std::vector<int> in_left = demand;
  std::vector<std::vector<int>> mat(V, std::vector<int>(V, 0));
  auto emit = [&] {
    MCondGraph g;
    g.vertices = verts;
    for (std::size_t a = 0; a < V; ++a)
      for (std::size_t b = 0; b < V; ++b)
        for (int c = 0; c < mat[a][b]; ++c) g.edges.emplace_back(verts[a], verts[b]);
    out.push_back(std::move(g));
  };
  // Fill row a column by column; `left` is what row a still has to send.
  auto rec = [&](auto&& self, std::size_t a, std::size_t b, int left) -> void {
    if (a == V) {
      emit();
      return;
    }
    if (b == V) {
      if (left == 0) self(self, a + 1, 0, a + 1 < V ? demand[a + 1] : 0);
      return;
    }
    if (a == b) {
      self(self, a, b + 1, left);
      return;
    }
    // Capacity still reachable in the remaining columns of this row.
    int room = 0;
    for (std::size_t c = b + 1; c < V; ++c)
      if (c != a) room += in_left[c];
    const int hi = std::min(left, in_left[b]);
    for (int x = std::max(0, left - room); x <= hi; ++x) {
      mat[a][b] = x;
      in_left[b] -= x;
      self(self, a, b + 1, left - x);
      in_left[b] += x;
    }
    mat[a][b] = 0;
  };
  rec(rec, 0, 0, demand[0]);
  return out;
}

namespace detail {

/// Ways to split the edge multiset `avail` (pair (top, bottom) -> count)
/// into labeled color classes, each a gap sequence with the given budget.
inline std::uint64_t count_side(std::vector<std::pair<std::pair<int, int>, int>>& avail,
                                const std::vector<int>& budgets, std::size_t color) {
  if (color == budgets.size()) {
    for (const auto& [e, c] : avail)
      if (c != 0) return 0;
    return 1;
  }
  std::uint64_t total = 0;
  // Pick the pairs of this color from the top down; pairs must be disjoint
  // closed intervals, so the next top is strictly below the previous bottom.
  auto pick = [&](auto&& self, int below, int remaining) -> void {
    if (remaining == 0) {
      total += count_side(avail, budgets, color + 1);
      return;
    }
    for (auto& [e, c] : avail) {
      const auto [top, bottom] = e;
      if (c == 0 || top >= below || top - bottom > remaining) continue;
      --c;
      self(self, bottom, remaining - (top - bottom));
      ++c;
    }
  };
  pick(pick, INT32_MAX, budgets[color]);
  return total;
}

inline std::vector<std::pair<std::pair<int, int>, int>> side_edges(const MCondGraph& g, bool positive) {
  std::vector<std::pair<std::pair<int, int>, int>> out;
  for (const auto& [s, t] : g.edges) {
    if ((s > t) != positive) continue;
    const std::pair<int, int> pair = positive ? std::pair{s, t} : std::pair{t, s};
    if (!out.empty() && out.back().first == pair) {
      ++out.back().second;
    } else {
      out.emplace_back(pair, 1);
    }
  }
  return out;
}

}  // namespace detail

/// Non-overlapping colorings of G: positive edges get the |p| labeled
/// colors (p(u) of budget u), negative edges the |q| labeled colors; each
/// color class is a set of pairwise disjoint index intervals whose weights
/// add up to its budget.
inline std::uint64_t count_colorings(const MCondGraph& g, const MultiIndex& p, const MultiIndex& q) {
  if (g.positive_weight() != p.degree() || g.negative_weight() != q.degree()) {
    return 0;
  }
  auto pos = detail::side_edges(g, true);
  auto neg = detail::side_edges(g, false);
  const std::uint64_t a = detail::count_side(pos, part_degrees(p), 0);
  if (a == 0) return 0;
  return a * detail::count_side(neg, part_degrees(q), 0);
}

/// C(p, q, m) as the sum of coloring counts over all m-condition graphs.
inline std::uint64_t c_via_graphs(const MultiIndex& p, const MultiIndex& q, const MultiplicityVector& m) {
  if (p.degree() != q.degree()) {
    return 0;
  }
  std::uint64_t total = 0;
  for (const MCondGraph& g : enumerate_m_graphs(m)) total += count_colorings(g, p, q);
  return total;
}

}  // namespace szego

#endif  // SZEGO_GRAPH_COUNT_HPP
