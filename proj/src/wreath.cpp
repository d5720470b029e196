#include "treewreath/wreath.hpp"

#include <algorithm>
#include <numeric>

#include "treewreath/error.hpp"

namespace treewreath {

CosetPermutation rho(const Instance& inst, const Element& g, const Vertex& v) {
  const Vertex pre = apply(inst, invert(g), v);
  return inst.alpha(local_perm(inst, g, pre));
}

CosetPermutation WreathTruncation::at(const Vertex& v) const {
  if (!covers(v)) {
    throw Error(ErrorKind::kRadius, "vertex " + v.str() + " lies outside the truncation ball (center " +
                                        center.str() + ", radius " + std::to_string(radius) + ")");
  }
  auto it = assignments.find(v);
  return it == assignments.end() ? coset_identity(n) : it->second;
}

namespace {

// Positions v where rho_{g,v} moves 0: images of the deviation set.
std::vector<Vertex> moved_lamp_positions(const Instance& inst, const Element& g) {
  std::vector<Vertex> out;
  for (const auto& w : deviation_set(inst, g)) out.push_back(apply(inst, g, w));
  return out;
}

}  // namespace

int embed_radius(const Instance& inst, const Element& g) {
  int r = 0;
  for (const auto& v : moved_lamp_positions(inst, g)) r = std::max(r, v.length());
  return r;
}

WreathTruncation truncate(const Instance& inst, const Element& g, const Vertex& center, int radius) {
  if (radius < 0) throw Error(ErrorKind::kRadius, "truncation radius must be non-negative");
  WreathTruncation t;
  t.center = center;
  t.radius = radius;
  t.n = inst.n();
  t.gamma = g;
  const Element inv = invert(g);
  for (const auto& v : ball(inst.degree(), center, radius)) {
    const Vertex pre = apply(inst, inv, v);
    CosetPermutation r = inst.alpha(local_perm(inst, g, pre));
    if (!coset_is_identity(r)) t.assignments.emplace(v, std::move(r));
  }
  const auto moved = moved_lamp_positions(inst, g);
  t.complete = std::all_of(moved.begin(), moved.end(), [&](const Vertex& v) { return t.covers(v); });
  return t;
}

WreathTruncation embed(const Instance& inst, const Element& g, int radius) {
  const int need = embed_radius(inst, g);
  if (radius < need) {
    throw Error(ErrorKind::kRadius, "embedding radius " + std::to_string(radius) + " is below the required bound " +
                                        std::to_string(need));
  }
  return truncate(inst, g, Vertex(), radius);
}

WreathTruncation wreath_mul(const Instance& inst, const WreathTruncation& a, const WreathTruncation& b) {
  if (a.n != b.n) throw Error(ErrorKind::kRadius, "truncations over different lamp alphabets");
  const Element a_inv = invert(a.gamma);
  const Vertex pulled_center = apply(inst, a_inv, a.center);
  const int r = std::min(a.radius, b.radius - distance(pulled_center, b.center));
  if (r < 0) throw Error(ErrorKind::kRadius, "truncations do not overlap after translation");

  WreathTruncation t;
  t.center = a.center;
  t.radius = r;
  t.n = a.n;
  t.gamma = compose(a.gamma, b.gamma);
  for (const auto& v : ball(inst.degree(), a.center, r)) {
    CosetPermutation p = coset_compose(a.at(v), b.at(apply(inst, a_inv, v)));
    if (!coset_is_identity(p)) t.assignments.emplace(v, std::move(p));
  }
  t.complete = a.complete && b.complete;
  for (const auto& [v, p] : a.assignments) {
    if (p[0] != 0 && !t.covers(v)) t.complete = false;
  }
  for (const auto& [v, p] : b.assignments) {
    if (p[0] != 0 && !t.covers(apply(inst, a.gamma, v))) t.complete = false;
  }
  return t;
}

WreathTruncation wreath_mul(const Instance& inst, const WreathTruncation& a, const WreathTruncation& b, int radius) {
  WreathTruncation t = wreath_mul(inst, a, b);
  if (t.radius < radius) {
    throw Error(ErrorKind::kRadius, "product is only determined up to radius " + std::to_string(t.radius) +
                                        ", requested " + std::to_string(radius));
  }
  std::erase_if(t.assignments, [&](const auto& kv) { return distance(kv.first, t.center) > radius; });
  t.radius = radius;
  return t;
}

bool truncations_agree(const Instance& inst, const WreathTruncation& a, const WreathTruncation& b,
                       const Vertex& center, int radius) {
  for (const auto& v : ball(inst.degree(), center, radius)) {
    if (a.at(v) != b.at(v)) return false;
  }
  if (inst.f_regular()) return equal(inst, a.gamma, b.gamma);
  for (const auto& v : ball(inst.degree(), center, radius + 1)) {
    const auto ea = evaluate(inst.rule(), a.gamma, v);
    const auto eb = evaluate(inst.rule(), b.gamma, v);
    if (ea.image != eb.image || ea.local != eb.local) return false;
  }
  return true;
}

GammaGroup::GammaGroup(int n, int d)
    : n_(n), rule_(PermutationGroup::cyclic(d < 3 || d > kMaxDegree ? 3 : d)) {
  if (n < 2) throw Error(ErrorKind::kDomain, "lamp alphabet needs n >= 2");
  if (d < 3 || d > kMaxDegree) throw Error(ErrorKind::kDomain, "tree degree must lie in [3, 8]");
  std::vector<int> img(static_cast<std::size_t>(d));
  std::iota(img.begin(), img.end(), 1);
  img.back() = 0;
  omega_ = Permutation::from_images(img);
  v1_ = Vertex::from_colors({0});
}

Element GammaGroup::syllable(int pivot, int exponent) const {
  const int d = degree();
  Permutation s = Permutation::identity(d);
  for (int k = 0; k < ((exponent % d) + d) % d; ++k) s = omega_ * s;
  Portrait p;
  p.anchor = pivot == 0 ? v0_ : v1_;
  p.anchor_image = p.anchor;
  p.deviations.emplace(p.anchor, s);
  return Element(make_letter(rule_, std::move(p)));
}

std::string GammaElement::word_str() const {
  if (word.empty()) return "1";
  std::string s;
  for (const auto& syl : word) {
    if (!s.empty()) s += ' ';
    s += "u" + std::to_string(syl.pivot) + "^" + std::to_string(syl.exponent);
  }
  return s;
}

std::vector<GammaElement> gamma_generators(const GammaGroup& group) {
  std::vector<GammaElement> out;
  for (int pivot = 0; pivot < 2; ++pivot) {
    for (int k = 1; k < group.n(); ++k) {
      GammaElement g;
      g.lamp.set(group.pivot(pivot), k);
      out.push_back(std::move(g));
    }
  }
  for (int pivot = 0; pivot < 2; ++pivot) {
    for (int k = 1; k < group.degree(); ++k) out.push_back(GammaElement{{}, {Syllable{pivot, k}}});
  }
  return out;
}

bool gamma_is_tree_move(const GammaElement& generator) { return !generator.word.empty(); }

std::vector<Syllable> normalize_syllables(const GammaGroup& group, const std::vector<Syllable>& word) {
  const int d = group.degree();
  std::vector<Syllable> out;
  for (const auto& s : word) {
    const int e = ((s.exponent % d) + d) % d;
    if (e == 0) continue;
    if (!out.empty() && out.back().pivot == s.pivot) {
      out.back().exponent = (out.back().exponent + e) % d;
      if (out.back().exponent == 0) out.pop_back();
    } else {
      out.push_back(Syllable{s.pivot, e});
    }
  }
  return out;
}

Element gamma_tree_part(const GammaGroup& group, const GammaElement& g) {
  Element e;
  for (const auto& s : g.word) e = compose(e, group.syllable(s.pivot, s.exponent));
  return e;
}

Vertex gamma_apply(const GammaGroup& group, const GammaElement& g, const Vertex& v) {
  return evaluate(group.rule(), gamma_tree_part(group, g), v).image;
}

GammaElement gamma_mul(const GammaGroup& group, const GammaElement& a, const GammaElement& b) {
  GammaElement r;
  r.lamp = a.lamp;
  const Element tree = gamma_tree_part(group, a);
  for (const auto& [w, k] : b.lamp.values()) {
    const Vertex v = evaluate(group.rule(), tree, w).image;
    r.lamp.set(v, (r.lamp.at(v) + k) % group.n());
  }
  std::vector<Syllable> word = a.word;
  word.insert(word.end(), b.word.begin(), b.word.end());
  r.word = normalize_syllables(group, word);
  return r;
}

GammaElement gamma_inverse(const GammaGroup& group, const GammaElement& a) {
  GammaElement r;
  std::vector<Syllable> word;
  for (auto it = a.word.rbegin(); it != a.word.rend(); ++it) word.push_back(Syllable{it->pivot, -it->exponent});
  r.word = normalize_syllables(group, word);
  const Element tree_inv = invert(gamma_tree_part(group, a));
  for (const auto& [w, k] : a.lamp.values()) {
    r.lamp.set(evaluate(group.rule(), tree_inv, w).image, (group.n() - k) % group.n());
  }
  return r;
}

XVertex gamma_act(const GammaGroup& group, const GammaElement& a, const XVertex& x) {
  const Element tree = gamma_tree_part(group, a);
  XVertex r;
  r.config = a.lamp;
  for (const auto& [w, k] : x.config.values()) {
    const Vertex v = evaluate(group.rule(), tree, w).image;
    r.config.set(v, (r.config.at(v) + k) % group.n());
  }
  r.edge = EdgeRef::between(evaluate(group.rule(), tree, x.edge.base).image,
                            evaluate(group.rule(), tree, x.edge.far()).image);
  return r;
}

}  // namespace treewreath
