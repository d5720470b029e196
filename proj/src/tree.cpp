#include "treewreath/tree.hpp"

#include <algorithm>
#include <unordered_set>

#include "treewreath/error.hpp"

namespace treewreath {

namespace {

void check_reduced(const std::string& letters) {
  for (std::size_t i = 1; i < letters.size(); ++i) {
    if (letters[i] == letters[i - 1]) {
      throw Error(ErrorKind::kDomain, "vertex word is not reduced (repeated letter " +
                                          std::to_string(static_cast<unsigned char>(letters[i])) + ")");
    }
  }
}

}  // namespace

Vertex Vertex::from_colors(std::initializer_list<int> colors) {
  std::string s;
  for (int c : colors) {
    if (c < 0 || c >= 256) throw Error(ErrorKind::kDomain, "color out of range");
    s.push_back(static_cast<char>(c));
  }
  check_reduced(s);
  return Vertex(std::move(s));
}

Vertex Vertex::from_letters(std::string letters) {
  check_reduced(letters);
  return Vertex(std::move(letters));
}

Vertex Vertex::parse(std::string_view text) {
  if (text == "e") return Vertex();
  if (text.empty()) throw Error(ErrorKind::kParse, "empty vertex string (use \"e\" for the basepoint)");
  std::string s;
  for (char ch : text) {
    if (ch < '0' || ch > '9') throw Error(ErrorKind::kParse, "bad vertex string \"" + std::string(text) + "\"");
    s.push_back(static_cast<char>(ch - '0'));
  }
  check_reduced(s);
  return Vertex(std::move(s));
}

std::string Vertex::str() const {
  if (letters_.empty()) return "e";
  std::string s;
  s.reserve(letters_.size());
  for (char c : letters_) s.push_back(static_cast<char>('0' + c));
  return s;
}

std::strong_ordering operator<=>(const Vertex& a, const Vertex& b) {
  if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0) return c;
  return a.letters_.compare(b.letters_) <=> 0;
}

Vertex EdgeRef::far() const {
  std::string s = base.letters();
  s.push_back(static_cast<char>(color));
  return Vertex::from_letters(std::move(s));
}

EdgeRef EdgeRef::at(const Vertex& v, int color) {
  if (!v.is_root() && v.last() == color) {
    std::string s = v.letters();
    s.pop_back();
    return EdgeRef{Vertex::from_letters(std::move(s)), color};
  }
  return EdgeRef{v, color};
}

EdgeRef EdgeRef::between(const Vertex& u, const Vertex& w) {
  const Vertex& shorter = u.length() < w.length() ? u : w;
  const Vertex& longer = u.length() < w.length() ? w : u;
  if (longer.length() != shorter.length() + 1 ||
      longer.letters().compare(0, shorter.letters().size(), shorter.letters()) != 0) {
    throw Error(ErrorKind::kDomain, "vertices " + u.str() + " and " + w.str() + " are not adjacent");
  }
  return EdgeRef{shorter, longer.last()};
}

std::string EdgeRef::str() const { return base.str() + ":" + std::to_string(color); }

EdgeRef EdgeRef::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw Error(ErrorKind::kParse, "edge must look like word:color");
  const Vertex v = Vertex::parse(text.substr(0, colon));
  int color = 0;
  const auto tail = text.substr(colon + 1);
  if (tail.empty()) throw Error(ErrorKind::kParse, "edge color missing");
  for (char ch : tail) {
    if (ch < '0' || ch > '9') throw Error(ErrorKind::kParse, "bad edge color");
    color = color * 10 + (ch - '0');
  }
  return at(v, color);
}

Vertex neighbor(int d, const Vertex& v, int color) {
  if (color < 0 || color >= d) {
    throw Error(ErrorKind::kDomain, "color " + std::to_string(color) + " out of range for d = " + std::to_string(d));
  }
  std::string s = v.letters_;
  if (!s.empty() && static_cast<unsigned char>(s.back()) == color) {
    s.pop_back();
  } else {
    s.push_back(static_cast<char>(color));
  }
  return Vertex(std::move(s));
}

Vertex word_product(const Vertex& u, const Vertex& w) {
  std::string s = u.letters_;
  for (char c : w.letters_) {
    if (!s.empty() && s.back() == c) {
      s.pop_back();
    } else {
      s.push_back(c);
    }
  }
  return Vertex(std::move(s));
}

int common_prefix_length(const Vertex& u, const Vertex& v) {
  const auto& a = u.letters();
  const auto& b = v.letters();
  const auto n = std::min(a.size(), b.size());
  std::size_t i = 0;
  while (i < n && a[i] == b[i]) ++i;
  return static_cast<int>(i);
}

int distance(const Vertex& u, const Vertex& v) {
  return u.length() + v.length() - 2 * common_prefix_length(u, v);
}

int distance(const Vertex& v, const EdgeRef& e) {
  return std::min(distance(v, e.base), distance(v, e.far()));
}

std::vector<Vertex> ball(int d, const Vertex& center, int radius) {
  if (radius < 0) throw Error(ErrorKind::kDomain, "ball radius must be non-negative");
  std::vector<Vertex> out{center};
  std::vector<Vertex> frontier{center};
  std::unordered_set<Vertex> seen{center};
  for (int r = 0; r < radius; ++r) {
    std::vector<Vertex> next;
    for (const auto& v : frontier) {
      for (int c = 0; c < d; ++c) {
        Vertex w = neighbor(d, v, c);
        if (seen.insert(w).second) next.push_back(w);
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t tree_ball_size(int d, int radius) {
  std::size_t total = 1;
  std::size_t sphere = 1;
  for (int r = 1; r <= radius; ++r) {
    sphere *= static_cast<std::size_t>(r == 1 ? d : d - 1);
    total += sphere;
  }
  return total;
}

std::vector<EdgeRef> edge_ball(int d, int radius) {
  std::vector<EdgeRef> out;
  if (radius < 1) return out;
  for (const auto& v : ball(d, Vertex(), radius - 1)) {
    for (int c = 0; c < d; ++c) {
      if (!v.is_root() && v.last() == c) continue;
      out.push_back(EdgeRef{v, c});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool halftree_contains(const EdgeRef& e, Side side, const Vertex& v) {
  // In canonical form the far endpoint extends the base by one letter, so
  // the far half-tree is exactly the set of words with that prefix.
  const Vertex far = e.far();
  const bool in_far = v.length() >= far.length() &&
                      v.letters().compare(0, far.letters().size(), far.letters()) == 0;
  return side == Side::kFar ? in_far : !in_far;
}

}  // namespace treewreath
