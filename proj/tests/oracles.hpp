#pragma once

#include <map>
#include <queue>

#include "treewreath/elements.hpp"

namespace testing {

using namespace treewreath;

/// Whole-ball evaluation of a single portrait by breadth-first propagation
/// from its anchor, using unique_mapper directly rather than LocalRule.
struct BallMap {
  std::map<Vertex, std::pair<Vertex, Permutation>> at;  // v -> (image, local)
};

inline BallMap portrait_ball(const Instance& inst, const Portrait& p, int radius) {
  BallMap m;
  const int d = inst.degree();
  m.at.emplace(p.anchor, std::pair{p.anchor_image, p.deviations.at(p.anchor)});
  std::queue<Vertex> q;
  q.push(p.anchor);
  while (!q.empty()) {
    const Vertex u = q.front();
    q.pop();
    if (distance(u, p.anchor) == radius) continue;
    const auto [img, sigma] = m.at.at(u);
    for (int c = 0; c < d; ++c) {
      const Vertex w = neighbor(d, u, c);
      if (m.at.count(w)) continue;
      const Vertex wi = neighbor(d, img, sigma(c));
      auto it = p.deviations.find(w);
      const Permutation tau = it != p.deviations.end() ? it->second : *unique_mapper(inst.f(), c, sigma(c));
      m.at.emplace(w, std::pair{wi, tau});
      q.push(w);
    }
  }
  return m;
}

/// Images and local permutations of a word at each of `vs`, composing
/// per-letter ball maps right to left.
inline std::vector<std::pair<Vertex, Permutation>> word_oracle(const Instance& inst, const Element& g,
                                                               const std::vector<Vertex>& vs) {
  std::vector<std::pair<Vertex, Permutation>> cur;
  for (const auto& v : vs) cur.emplace_back(v, Permutation::identity(inst.degree()));
  for (auto it = g.letters().rbegin(); it != g.letters().rend(); ++it) {
    const Portrait& p = *it->forward;
    int radius = 0;
    for (const auto& [v, s] : cur) radius = std::max(radius, distance(v, p.anchor));
    const BallMap m = portrait_ball(inst, p, radius);
    for (auto& [v, local] : cur) {
      const auto& [img, s] = m.at.at(v);
      local = s * local;
      v = img;
    }
  }
  return cur;
}

}  // namespace testing
