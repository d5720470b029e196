#include "treewreath/graphs.hpp"

#include <set>

namespace treewreath {

namespace {

std::pair<Vertex, Vertex> endpoints(const EdgeRef& e) { return {e.base, e.far()}; }

}  // namespace

std::vector<Neighbor<XVertex>> x_neighbors(int n, int d, const XVertex& x) {
  std::vector<Neighbor<XVertex>> out;
  const auto [p, q] = endpoints(x.edge);
  for (const Vertex& w : {p, q}) {
    for (int c = 0; c < d; ++c) {
      if (c != x.edge.color) out.push_back({XVertex{x.config, EdgeRef::at(w, c)}, 1, {}});
    }
  }
  for (const Vertex& w : {p, q}) {
    for (int k = 0; k < n; ++k) {
      if (k == x.config.at(w)) continue;
      XVertex y = x;
      y.config.set(w, k);
      out.push_back({std::move(y), 2, {}});
    }
  }
  return out;
}

std::vector<Neighbor<CVertex>> c_neighbors(int n, int d, const CVertex& x) {
  std::vector<Neighbor<CVertex>> out;
  for (int c = 0; c < d; ++c) out.push_back({CVertex{x.config, neighbor(d, x.vertex, c)}, 1, {}});
  for (int k = 0; k < n; ++k) {
    if (k == x.config.at(x.vertex)) continue;
    CVertex y = x;
    y.config.set(x.vertex, k);
    out.push_back({std::move(y), 2, {}});
  }
  return out;
}

std::vector<Neighbor<XVertex>> z_neighbors(int n, int d, const XVertex& x) {
  std::vector<Neighbor<XVertex>> out;
  const auto [p, q] = endpoints(x.edge);
  for (const Vertex& w : {p, q}) {
    for (int c = 0; c < d; ++c) {
      if (c == x.edge.color) continue;
      for (int k = 0; k < n; ++k) {
        XVertex y{x.config, EdgeRef::at(w, c)};
        y.config.set(w, k);
        out.push_back({std::move(y), 0, {}});
      }
    }
  }
  return out;
}

HoroVertex HoroVertex::parent() const {
  HoroVertex r = *this;
  if (r.down.empty()) {
    ++r.up;
  } else {
    r.down.pop_back();
  }
  return r;
}

HoroVertex HoroVertex::child(int k) const {
  HoroVertex r = *this;
  if (r.down.empty() && r.up > 0 && k == 0) {
    --r.up;
  } else {
    r.down.push_back(static_cast<char>('0' + k));
  }
  return r;
}

std::vector<Neighbor<DLVertex>> dl_neighbors(int n, const DLVertex& x) {
  if (n < 2 || n > 10) throw Error(ErrorKind::kDomain, "DL(n,n) needs 2 <= n <= 10");
  std::vector<Neighbor<DLVertex>> out;
  const HoroVertex ap = x.a.parent();
  const HoroVertex bp = x.b.parent();
  for (int k = 0; k < n; ++k) out.push_back({DLVertex{ap, x.b.child(k)}, 0, {}});
  for (int k = 0; k < n; ++k) out.push_back({DLVertex{x.a.child(k), bp}, 0, {}});
  return out;
}

std::size_t GraphBall::edge_count() const {
  std::size_t m = 0;
  for (std::size_t v = 0; v < adjacency.size(); ++v) {
    for (const auto& a : adjacency[v]) {
      if (static_cast<std::size_t>(a.to) > v) ++m;
    }
  }
  return m;
}

std::optional<int> GraphBall::index_of(std::string_view id) const {
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (ids[i] == id) return static_cast<int>(i);
  }
  return std::nullopt;
}

int GraphBall::degree(int v, int type) const {
  const auto& adj = adjacency[static_cast<std::size_t>(v)];
  if (type < 0) return static_cast<int>(adj.size());
  return static_cast<int>(std::count_if(adj.begin(), adj.end(), [type](const Adjacency& a) { return a.type == type; }));
}

XVertex x_origin(int base_color) { return XVertex{LampConfig{}, EdgeRef{Vertex{}, base_color}}; }

namespace {

void check_params(int n, int d) {
  if (n < 2) throw Error(ErrorKind::kDomain, "lamp alphabet needs n >= 2");
  if (d < 2 || d > kMaxDegree) throw Error(ErrorKind::kDomain, "tree degree must lie in [2, 8]");
}

auto str_key = [](const auto& v) { return v.str(); };

}  // namespace

GraphBall x_ball(int n, int d, const XVertex& center, int radius) {
  check_params(n, d);
  return bfs_ball("X", center, radius, str_key, [&](const XVertex& x) { return x_neighbors(n, d, x); });
}

GraphBall c_ball(int n, int d, const CVertex& center, int radius) {
  check_params(n, d);
  return bfs_ball("C", center, radius, str_key, [&](const CVertex& x) { return c_neighbors(n, d, x); });
}

GraphBall z_ball(int n, int d, const XVertex& center, int radius) {
  check_params(n, d);
  return bfs_ball("Z", center, radius, str_key, [&](const XVertex& x) { return z_neighbors(n, d, x); });
}

GraphBall dl_ball(int n, const DLVertex& center, int radius) {
  if (center.a.level() + center.b.level() != 0) throw Error(ErrorKind::kDomain, "DL center levels must sum to 0");
  return bfs_ball("DL", center, radius, str_key, [&](const DLVertex& x) { return dl_neighbors(n, x); });
}

XVertex gff_act(const Instance& inst, const Element& g, const XVertex& x) {
  std::set<Vertex> touched;
  for (const auto& [v, k] : x.config.values()) touched.insert(v);
  for (const auto& v : deviation_set(inst, g)) touched.insert(v);
  XVertex y;
  for (const auto& w : touched) {
    const Evaluation e = evaluate(inst.rule(), g, w);
    y.config.set(e.image, inst.alpha(e.local)[static_cast<std::size_t>(x.config.at(w))]);
  }
  y.edge = apply(inst, g, x.edge);
  return y;
}

XVertex wreath_act(const Instance& inst, const WreathTruncation& t, const XVertex& x) {
  if (!t.complete) throw Error(ErrorKind::kRadius, "truncation does not contain every lamp it moves");
  std::map<Vertex, int> pulled;  // gamma(w) -> f(w)
  for (const auto& [w, k] : x.config.values()) pulled.emplace(apply(inst, t.gamma, w), k);
  XVertex y;
  for (const auto& [v, k] : pulled) y.config.set(v, t.at(v)[static_cast<std::size_t>(k)]);
  for (const auto& [v, p] : t.assignments) {
    if (!pulled.count(v)) y.config.set(v, p[0]);
  }
  y.edge = apply(inst, t.gamma, x.edge);
  return y;
}

ReductionTrace reduce_to_zero(const Instance& inst, const XVertex& x) {
  ReductionTrace trace;
  XVertex cur = x;
  const Vertex p = x.edge.base;
  const Vertex q = x.edge.far();
  while (!cur.config.empty()) {
    // Farthest lamp from the edge; the map iterates in shortlex order, so
    // the first maximum is the least vertex.
    const Vertex* pick = nullptr;
    int best = -1;
    for (const auto& [v, k] : cur.config.values()) {
      const int dv = distance(v, cur.edge);
      if (dv > best) {
        best = dv;
        pick = &v;
      }
    }
    const Vertex v0 = *pick;
    const int value = cur.config.at(v0);

    // Color of the first edge on the way from v0 to the edge.
    int toward = x.edge.color;
    if (best > 0) {
      const Vertex& target = distance(v0, p) <= distance(v0, q) ? p : q;
      const int common = common_prefix_length(v0, target);
      toward = common < v0.length() ? v0.last() : target[static_cast<std::size_t>(v0.length())];
    }

    std::optional<Permutation> sigma;
    for (const auto& s : inst.fp().elements()) {
      if (s.fixes(toward) && inst.alpha(s)[static_cast<std::size_t>(value)] == 0) {
        sigma = s;
        break;
      }
    }
    if (!sigma) {
      throw Error(ErrorKind::kInvariant, "no sigma in F'_" + std::to_string(toward) + " clears the lamp at " + v0.str());
    }
    Element h = make_portrait(inst, v0, v0, {{v0, *sigma}});
    XVertex next = gff_act(inst, h, cur);
    if (next.config.support_size() + 1 != cur.config.support_size() || next.edge != cur.edge) {
      throw Error(ErrorKind::kInvariant, "reduction step at " + v0.str() + " did not remove exactly one lamp");
    }
    trace.steps.push_back(ReductionStep{v0, *sigma, std::move(h), next});
    cur = std::move(next);
  }
  trace.final = cur;
  return trace;
}

LampWdElement lampwd_mul(int n, const LampWdElement& a, const LampWdElement& b) {
  LampWdElement r{a.lamp, word_product(a.position, b.position)};
  for (const auto& [u, k] : b.lamp.values()) {
    const Vertex v = word_product(a.position, u);
    r.lamp.set(v, (r.lamp.at(v) + k) % n);
  }
  return r;
}

std::vector<std::pair<LampWdElement, int>> lampwd_generators(int n, int d) {
  check_params(n, d);
  std::vector<std::pair<LampWdElement, int>> out;
  for (int k = 1; k < n; ++k) {
    LampWdElement g;
    g.lamp.set(Vertex{}, k);
    out.emplace_back(std::move(g), 2);
  }
  for (int c = 0; c < d; ++c) out.emplace_back(LampWdElement{{}, neighbor(d, Vertex{}, c)}, 1);
  return out;
}

GraphBall cayley_ball_gff(const Instance& inst, int radius) {
  const auto gens = generators(inst);
  std::vector<std::pair<int, std::string>> info;
  for (const auto& s : gens) {
    const auto& label = *s.letters().front().label;
    info.emplace_back(is_tree_move(inst, label) ? 1 : 2, generator_name(inst, label));
  }
  const XVertex x0 = x_origin(inst.base_color());
  return bfs_ball(
      "cayley-gff", Element{}, radius, [&](const Element& g) { return gff_act(inst, g, x0).str(); },
      [&](const Element& g) {
        std::vector<Neighbor<Element>> out;
        for (std::size_t i = 0; i < gens.size(); ++i) out.push_back({compose(g, gens[i]), info[i].first, info[i].second});
        return out;
      });
}

GraphBall cayley_ball_gamma(const GammaGroup& group, int radius) {
  const auto gens = gamma_generators(group);
  const XVertex x0{LampConfig{}, group.base_edge()};
  auto name = [](const GammaElement& s) {
    if (!s.word.empty()) return s.word_str();
    return "lamp(" + s.lamp.str() + ")";
  };
  return bfs_ball(
      "cayley-gamma", GammaElement{}, radius, [&](const GammaElement& g) { return gamma_act(group, g, x0).str(); },
      [&](const GammaElement& g) {
        std::vector<Neighbor<GammaElement>> out;
        for (const auto& s : gens) out.push_back({gamma_mul(group, g, s), gamma_is_tree_move(s) ? 1 : 2, name(s)});
        return out;
      });
}

GraphBall cayley_ball_lampwd(int n, int d, int radius) {
  const auto gens = lampwd_generators(n, d);
  return bfs_ball(
      "cayley-lampwd", LampWdElement{}, radius,
      [](const LampWdElement& g) { return CVertex{g.lamp, g.position}.str(); },
      [&](const LampWdElement& g) {
        std::vector<Neighbor<LampWdElement>> out;
        for (const auto& [s, type] : gens) {
          const std::string label = type == 1 ? "c" + s.position.str() : "lamp(" + s.lamp.str() + ")";
          out.push_back({lampwd_mul(n, g, s), type, label});
        }
        return out;
      });
}

bool same_graph(const GraphBall& a, const GraphBall& b) {
  return a.radius == b.radius && a.ids == b.ids && a.dist == b.dist && a.adjacency == b.adjacency;
}

}  // namespace treewreath
