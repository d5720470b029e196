#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace treewreath {

/// A vertex of the edge-colored d-regular tree, written as a reduced word
/// over the colors {0..d-1} (no two consecutive letters equal). The empty
/// word is the basepoint; the edge between w and w.c has color c.
///
/// Letters are stored as raw color values. Ordering is shortlex (length,
/// then lexicographic), which is the canonical vertex order everywhere.
class Vertex {
 public:
  Vertex() = default;
  /// Throws Error(kDomain) if the word is not reduced.
  static Vertex from_colors(std::initializer_list<int> colors);
  static Vertex from_letters(std::string letters);
  /// Parses the digit-string form; "e" is the basepoint.
  static Vertex parse(std::string_view text);

  const std::string& letters() const { return letters_; }
  int length() const { return static_cast<int>(letters_.size()); }
  bool is_root() const { return letters_.empty(); }
  int operator[](std::size_t i) const { return static_cast<unsigned char>(letters_[i]); }
  int last() const { return static_cast<unsigned char>(letters_.back()); }
  int parity() const { return length() % 2; }

  /// In-place neighbor move with no range check on the color.
  void step(int color) {
    if (!letters_.empty() && static_cast<unsigned char>(letters_.back()) == color) {
      letters_.pop_back();
    } else {
      letters_.push_back(static_cast<char>(color));
    }
  }

  /// Digit string, "e" for the basepoint.
  std::string str() const;

  friend bool operator==(const Vertex&, const Vertex&) = default;
  friend std::strong_ordering operator<=>(const Vertex& a, const Vertex& b);

 private:
  explicit Vertex(std::string letters) : letters_(std::move(letters)) {}
  friend Vertex neighbor(int d, const Vertex& v, int color);
  friend Vertex word_product(const Vertex& u, const Vertex& w);

  std::string letters_;
};

/// An edge in canonical form: `base` is the endpoint whose word does not end
/// with `color`, and the other endpoint is base.color.
struct EdgeRef {
  Vertex base;
  int color = 0;

  Vertex far() const;
  /// Canonical form of the edge at v with the given color.
  static EdgeRef at(const Vertex& v, int color);
  /// Edge joining two adjacent vertices; throws Error(kDomain) otherwise.
  static EdgeRef between(const Vertex& u, const Vertex& w);
  bool has_endpoint(const Vertex& v) const { return v == base || v == far(); }

  /// "word:color", e.g. "e:0" or "10:2".
  std::string str() const;
  static EdgeRef parse(std::string_view text);

  friend bool operator==(const EdgeRef&, const EdgeRef&) = default;
  friend auto operator<=>(const EdgeRef&, const EdgeRef&) = default;
};

/// Move along the edge of the given color: append it, or cancel the last
/// letter when they match. Throws Error(kDomain) for an out-of-range color.
Vertex neighbor(int d, const Vertex& v, int color);

/// Reduced product u*w in the free product of d copies of C_2; also the
/// left action of u (as a tree automorphism) on the vertex w.
Vertex word_product(const Vertex& u, const Vertex& w);

int common_prefix_length(const Vertex& u, const Vertex& v);
int distance(const Vertex& u, const Vertex& v);
/// Distance from a vertex to the nearer endpoint of an edge.
int distance(const Vertex& v, const EdgeRef& e);

/// All vertices within distance R of center, in shortlex order.
std::vector<Vertex> ball(int d, const Vertex& center, int radius);
std::size_t tree_ball_size(int d, int radius);

/// Edges with both endpoints in ball(basepoint, R), sorted.
std::vector<EdgeRef> edge_ball(int d, int radius);

enum class Side { kBase, kFar };

/// True iff the geodesic from v to the chosen endpoint of e avoids the other
/// endpoint, i.e. v lies in that half-tree.
bool halftree_contains(const EdgeRef& e, Side side, const Vertex& v);

}  // namespace treewreath

template <>
struct std::hash<treewreath::Vertex> {
  std::size_t operator()(const treewreath::Vertex& v) const noexcept {
    return std::hash<std::string>{}(v.letters());
  }
};
