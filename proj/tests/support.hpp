#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "treewreath/error.hpp"

namespace testing {

/// Kind of the Error thrown by fn, or nullopt if it returns normally.
template <class Fn>
std::optional<treewreath::ErrorKind> error_kind(Fn&& fn) {
  try {
    fn();
  } catch (const treewreath::Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

using Images = std::vector<int>;

inline Images compose_images(const Images& a, const Images& b) {
  Images r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[static_cast<std::size_t>(b[i])];
  return r;
}

/// Closure of a generating set by breadth-first multiplication.
inline std::set<Images> closure(int d, const std::vector<Images>& gens) {
  Images id(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) id[static_cast<std::size_t>(i)] = i;
  std::set<Images> seen{id};
  std::vector<Images> frontier{id};
  while (!frontier.empty()) {
    std::vector<Images> next;
    for (const auto& x : frontier) {
      for (const auto& g : gens) {
        Images y = compose_images(g, x);
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

}  // namespace testing
