#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>

#include "treewreath/tree.hpp"

namespace treewreath {

/// Finitely supported function from tree vertices to {0..n-1}. Zero values
/// are never stored.
class LampConfig {
 public:
  LampConfig() = default;

  int at(const Vertex& v) const {
    auto it = values_.find(v);
    return it == values_.end() ? 0 : it->second;
  }
  void set(const Vertex& v, int value);
  std::size_t support_size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  const std::map<Vertex, int>& values() const { return values_; }

  /// Sorted "vertex:value" pairs joined by commas; empty for the zero config.
  std::string str() const;
  static LampConfig parse(std::string_view text);

  friend bool operator==(const LampConfig&, const LampConfig&) = default;
  friend auto operator<=>(const LampConfig&, const LampConfig&) = default;

 private:
  std::map<Vertex, int> values_;
};

/// Vertex (f, e) of X_{n,d} and Z_{n,d}.
struct XVertex {
  LampConfig config;
  EdgeRef edge;

  /// "config|edge".
  std::string str() const { return config.str() + "|" + edge.str(); }
  static XVertex parse(std::string_view text);

  friend bool operator==(const XVertex&, const XVertex&) = default;
  friend auto operator<=>(const XVertex&, const XVertex&) = default;
};

/// Vertex (f, v) of the lamplighter graph C_{n,d}.
struct CVertex {
  LampConfig config;
  Vertex vertex;

  std::string str() const { return config.str() + "|" + vertex.str(); }

  friend bool operator==(const CVertex&, const CVertex&) = default;
  friend auto operator<=>(const CVertex&, const CVertex&) = default;
};

}  // namespace treewreath
