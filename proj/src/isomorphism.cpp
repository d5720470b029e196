#include <algorithm>
#include <map>

#include "treewreath/graphs.hpp"

namespace treewreath {

namespace {

using Signature = std::pair<int, std::vector<std::pair<int, int>>>;

// Joint 1-dimensional Weisfeiler-Leman refinement over the disjoint union,
// seeded by distance from the center.
std::vector<int> refine(const GraphBall& a, const GraphBall& b, bool respect_types) {
  const std::size_t na = a.size();
  std::vector<const std::vector<Adjacency>*> adj;
  std::vector<int> color;
  for (std::size_t v = 0; v < na; ++v) {
    adj.push_back(&a.adjacency[v]);
    color.push_back(a.dist[v]);
  }
  for (std::size_t v = 0; v < b.size(); ++v) {
    adj.push_back(&b.adjacency[v]);
    color.push_back(b.dist[v]);
  }
  std::size_t classes = 0;
  while (true) {
    std::map<Signature, int> ids;
    std::vector<Signature> sigs(color.size());
    for (std::size_t v = 0; v < color.size(); ++v) {
      const int offset = v < na ? 0 : static_cast<int>(na);
      sigs[v].first = color[v];
      for (const auto& e : *adj[v]) {
        sigs[v].second.emplace_back(color[static_cast<std::size_t>(e.to + offset)], respect_types ? e.type : 0);
      }
      std::sort(sigs[v].second.begin(), sigs[v].second.end());
      ids.emplace(sigs[v], 0);
    }
    int next = 0;
    for (auto& [sig, id] : ids) id = next++;
    for (std::size_t v = 0; v < color.size(); ++v) color[v] = ids.at(sigs[v]);
    if (ids.size() == classes) return color;
    classes = ids.size();
  }
}

// Type of the edge u-w in b, or -1.
int edge_type(const GraphBall& b, int u, int w) {
  const auto& adj = b.adjacency[static_cast<std::size_t>(u)];
  auto it = std::find_if(adj.begin(), adj.end(), [w](const Adjacency& e) { return e.to == w; });
  return it != adj.end() ? it->type : -1;
}

// Backtracking assumes every vertex of `a` past the center has a neighbor
// with a smaller index, which holds when `a` is in distance order.
std::optional<std::vector<int>> match_ordered(const GraphBall& a, const GraphBall& b, bool respect_types) {
  {
    std::vector<int> da = a.dist;
    std::vector<int> db = b.dist;
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return std::nullopt;
  }
  if (a.edge_count() != b.edge_count()) return std::nullopt;
  const int n = static_cast<int>(a.size());

  const std::vector<int> color = refine(a, b, respect_types);
  auto ca = [&](int v) { return color[static_cast<std::size_t>(v)]; };
  auto cb = [&](int w) { return color[static_cast<std::size_t>(w + n)]; };
  {
    std::map<int, int> balance;
    for (int v = 0; v < n; ++v) {
      ++balance[ca(v)];
      --balance[cb(v)];
    }
    for (const auto& [c, k] : balance) {
      if (k != 0) return std::nullopt;
    }
  }
  if (ca(0) != cb(0)) return std::nullopt;

  auto type_of = [&](const Adjacency& e) { return respect_types ? e.type : 0; };
  std::vector<int> earlier(static_cast<std::size_t>(n), 0);
  std::vector<int> anchor(static_cast<std::size_t>(n), -1);
  for (int v = 1; v < n; ++v) {
    for (const auto& e : a.adjacency[static_cast<std::size_t>(v)]) {
      if (e.to < v) {
        ++earlier[static_cast<std::size_t>(v)];
        if (anchor[static_cast<std::size_t>(v)] < 0) anchor[static_cast<std::size_t>(v)] = e.to;
      }
    }
    if (anchor[static_cast<std::size_t>(v)] < 0) return std::nullopt;
  }

  std::vector<int> fwd(static_cast<std::size_t>(n), -1);
  std::vector<int> inv(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> cands(static_cast<std::size_t>(n));
  std::vector<std::size_t> pos(static_cast<std::size_t>(n), 0);

  auto fill = [&](int v) {
    auto& c = cands[static_cast<std::size_t>(v)];
    c.clear();
    pos[static_cast<std::size_t>(v)] = 0;
    const int image = fwd[static_cast<std::size_t>(anchor[static_cast<std::size_t>(v)])];
    for (const auto& e : b.adjacency[static_cast<std::size_t>(image)]) {
      if (cb(e.to) == ca(v)) c.push_back(e.to);
    }
  };
  auto consistent = [&](int v, int w) {
    for (const auto& e : a.adjacency[static_cast<std::size_t>(v)]) {
      if (e.to >= v) continue;
      const int t = edge_type(b, fwd[static_cast<std::size_t>(e.to)], w);
      if (t < 0 || (respect_types && t != type_of(e))) return false;
    }
    int mapped = 0;
    for (const auto& e : b.adjacency[static_cast<std::size_t>(w)]) {
      if (inv[static_cast<std::size_t>(e.to)] >= 0) ++mapped;
    }
    return mapped == earlier[static_cast<std::size_t>(v)];
  };

  fwd[0] = 0;
  inv[0] = 0;
  if (n == 1) return fwd;
  int v = 1;
  fill(v);
  while (v > 0) {
    auto& c = cands[static_cast<std::size_t>(v)];
    auto& p = pos[static_cast<std::size_t>(v)];
    bool placed = false;
    while (p < c.size()) {
      const int w = c[p++];
      if (inv[static_cast<std::size_t>(w)] < 0 && consistent(v, w)) {
        fwd[static_cast<std::size_t>(v)] = w;
        inv[static_cast<std::size_t>(w)] = v;
        placed = true;
        break;
      }
    }
    if (placed) {
      if (++v == n) return fwd;
      fill(v);
      continue;
    }
    --v;
    if (v == 0) break;
    inv[static_cast<std::size_t>(fwd[static_cast<std::size_t>(v)])] = -1;
    fwd[static_cast<std::size_t>(v)] = -1;
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<int>> balls_isomorphic(const GraphBall& a, const GraphBall& b, bool respect_types) {
  if (a.radius != b.radius || a.size() != b.size() || a.size() == 0) return std::nullopt;
  if (std::is_sorted(a.dist.begin(), a.dist.end())) return match_ordered(a, b, respect_types);

  std::vector<int> order(a.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    return a.dist[static_cast<std::size_t>(x)] < a.dist[static_cast<std::size_t>(y)];
  });
  std::vector<int> rank(a.size());
  for (std::size_t i = 0; i < order.size(); ++i) rank[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  GraphBall sorted = a;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto old = static_cast<std::size_t>(order[i]);
    sorted.ids[i] = a.ids[old];
    sorted.dist[i] = a.dist[old];
    sorted.adjacency[i] = a.adjacency[old];
    for (auto& e : sorted.adjacency[i]) e.to = rank[static_cast<std::size_t>(e.to)];
  }
  auto m = match_ordered(sorted, b, respect_types);
  if (!m) return std::nullopt;
  std::vector<int> out(a.size());
  for (std::size_t v = 0; v < a.size(); ++v) out[v] = (*m)[static_cast<std::size_t>(rank[v])];
  return out;
}

}  // namespace treewreath
