#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "treewreath/configs.hpp"
#include "treewreath/elements.hpp"
#include "treewreath/error.hpp"
#include "treewreath/tree.hpp"
#include "treewreath/wreath.hpp"

namespace treewreath {

/// Edge types: 1 moves the edge (or position), 2 changes a lamp, 0 untyped.
template <class V>
struct Neighbor {
  V vertex;
  int type = 0;
  std::string label;
};

std::vector<Neighbor<XVertex>> x_neighbors(int n, int d, const XVertex& x);
std::vector<Neighbor<CVertex>> c_neighbors(int n, int d, const CVertex& x);
std::vector<Neighbor<XVertex>> z_neighbors(int n, int d, const XVertex& x);

/// Vertex of the (n+1)-regular tree with a fixed end: climb `up` steps
/// toward the end from the origin, then descend along `down`. In normal
/// form down[0] != 0 whenever up > 0; child 0 of a ray vertex is the
/// previous ray vertex.
struct HoroVertex {
  int up = 0;
  std::string down;  // digits '0'..'9'

  int level() const { return up - static_cast<int>(down.size()); }
  HoroVertex parent() const;
  HoroVertex child(int k) const;
  std::string str() const { return "u" + std::to_string(up) + "d" + down; }

  friend bool operator==(const HoroVertex&, const HoroVertex&) = default;
  friend auto operator<=>(const HoroVertex&, const HoroVertex&) = default;
};

/// Vertex of DL(n,n): two horocyclic coordinates with levels summing to 0.
struct DLVertex {
  HoroVertex a;
  HoroVertex b;

  std::string str() const { return a.str() + "," + b.str(); }

  friend bool operator==(const DLVertex&, const DLVertex&) = default;
  friend auto operator<=>(const DLVertex&, const DLVertex&) = default;
};

/// One coordinate climbs while the other descends to one of n children.
std::vector<Neighbor<DLVertex>> dl_neighbors(int n, const DLVertex& x);

struct Adjacency {
  int to = 0;
  int type = 0;
  std::string label;

  friend bool operator==(const Adjacency& a, const Adjacency& b) { return a.to == b.to && a.type == b.type; }
};

/// A metric ball with vertices sorted by (distance, id). Edges are exactly
/// those with at least one endpoint strictly inside the ball.
struct GraphBall {
  std::string kind;
  int radius = 0;
  std::vector<std::string> ids;
  std::vector<int> dist;
  std::vector<std::vector<Adjacency>> adjacency;

  std::size_t size() const { return ids.size(); }
  const std::string& center() const { return ids.front(); }
  std::size_t edge_count() const;
  std::optional<int> index_of(std::string_view id) const;
  /// Number of listed neighbors of v with the given type; -1 counts all.
  int degree(int v, int type = -1) const;
};

/// Breadth-first ball. `key` maps a state to its vertex id; `expand` maps a
/// state to Neighbor<State> entries. Only the first state reaching an id is
/// expanded, so states may carry extra data (e.g. a word reaching the vertex).
template <class State, class Key, class Expand>
GraphBall bfs_ball(std::string kind, const State& center, int radius, Key key, Expand expand) {
  if (radius < 0) throw Error(ErrorKind::kRadius, "ball radius must be non-negative");
  std::map<std::string, int> found;
  std::vector<std::string> ids;
  std::vector<int> dist;
  std::vector<std::vector<std::pair<int, Adjacency>>> raw;
  std::deque<std::pair<int, State>> queue;

  auto intern = [&](std::string id, int dd) {
    auto [it, inserted] = found.emplace(std::move(id), static_cast<int>(ids.size()));
    if (inserted) {
      ids.push_back(it->first);
      dist.push_back(dd);
      raw.emplace_back();
    }
    return std::pair{it->second, inserted};
  };
  queue.emplace_back(intern(key(center), 0).first, center);
  while (!queue.empty()) {
    auto [u, state] = std::move(queue.front());
    queue.pop_front();
    if (dist[static_cast<std::size_t>(u)] >= radius) continue;
    for (auto& nb : expand(state)) {
      auto [w, inserted] = intern(key(nb.vertex), dist[static_cast<std::size_t>(u)] + 1);
      raw[static_cast<std::size_t>(u)].push_back({w, Adjacency{w, nb.type, nb.label}});
      if (dist[static_cast<std::size_t>(w)] >= radius) {
        raw[static_cast<std::size_t>(w)].push_back(
            {u, Adjacency{u, nb.type, nb.label.empty() ? std::string() : nb.label + "^-1"}});
      }
      if (inserted) queue.emplace_back(w, std::move(nb.vertex));
    }
  }

  std::vector<int> order(ids.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    return std::tie(dist[static_cast<std::size_t>(x)], ids[static_cast<std::size_t>(x)]) <
           std::tie(dist[static_cast<std::size_t>(y)], ids[static_cast<std::size_t>(y)]);
  });
  std::vector<int> rank(ids.size());
  for (std::size_t i = 0; i < order.size(); ++i) rank[static_cast<std::size_t>(order[i])] = static_cast<int>(i);

  GraphBall b;
  b.kind = std::move(kind);
  b.radius = radius;
  for (int old : order) {
    b.ids.push_back(ids[static_cast<std::size_t>(old)]);
    b.dist.push_back(dist[static_cast<std::size_t>(old)]);
    std::vector<Adjacency> adj;
    for (auto& [w, a] : raw[static_cast<std::size_t>(old)]) {
      a.to = rank[static_cast<std::size_t>(w)];
      adj.push_back(std::move(a));
    }
    std::sort(adj.begin(), adj.end(), [](const Adjacency& p, const Adjacency& q) {
      return std::tie(p.to, p.type, p.label) < std::tie(q.to, q.type, q.label);
    });
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    b.adjacency.push_back(std::move(adj));
  }
  return b;
}

/// ((0), (basepoint, base_color)).
XVertex x_origin(int base_color = 0);

GraphBall x_ball(int n, int d, const XVertex& center, int radius);
GraphBall c_ball(int n, int d, const CVertex& center, int radius);
GraphBall z_ball(int n, int d, const XVertex& center, int radius);
GraphBall dl_ball(int n, const DLVertex& center, int radius);

/// Action of G(F,F') on X: (f^g)_v = rho_{g,v} f_{g^-1 v}, edge mapped by g.
XVertex gff_act(const Instance& inst, const Element& g, const XVertex& x);

/// Action of a truncated wreath element. Throws Error(kRadius) unless the
/// truncation is complete and covers the image of the support.
XVertex wreath_act(const Instance& inst, const WreathTruncation& t, const XVertex& x);

struct ReductionStep {
  Vertex vertex;
  Permutation sigma;
  Element h;
  XVertex result;
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
  XVertex final;
};

/// Clears the lamps one at a time, farthest from the edge first, with
/// elements fixing the edge. Throws Error(kInvariant) if a step fails to
/// shrink the support by exactly one.
ReductionTrace reduce_to_zero(const Instance& inst, const XVertex& x);

/// Element (f, w) of C_n wr W_d, W_d the free product of d copies of C_2
/// acting simply transitively on the tree vertices.
struct LampWdElement {
  LampConfig lamp;
  Vertex position;

  friend bool operator==(const LampWdElement&, const LampWdElement&) = default;
};

/// (f, w)(f', w') = (f + w.f', w w').
LampWdElement lampwd_mul(int n, const LampWdElement& a, const LampWdElement& b);
/// Lamp generators (+k at the basepoint) then colors, each with its edge type.
std::vector<std::pair<LampWdElement, int>> lampwd_generators(int n, int d);

/// Cayley balls with vertices named by their orbit images.
GraphBall cayley_ball_gff(const Instance& inst, int radius);
GraphBall cayley_ball_gamma(const GammaGroup& group, int radius);
GraphBall cayley_ball_lampwd(int n, int d, int radius);

/// Same ids and same typed adjacency (labels ignored).
bool same_graph(const GraphBall& a, const GraphBall& b);

/// Center-fixing isomorphism a -> b (as a map of indices), or none.
std::optional<std::vector<int>> balls_isomorphic(const GraphBall& a, const GraphBall& b, bool respect_types);

std::string export_dot(const GraphBall& b);
std::string export_graphml(const GraphBall& b);
/// {"vertices":[ids...], "edges":[[i,j,type],...]} with i < j.
std::string export_json(const GraphBall& b);

}  // namespace treewreath
