#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "treewreath/configs.hpp"
#include "treewreath/elements.hpp"
#include "treewreath/permgrp.hpp"
#include "treewreath/tree.hpp"

namespace treewreath {

/// rho_{g,v} = alpha(sigma(g, g^-1 v)): the lamp-alphabet permutation that
/// the embedding attaches to g at v.
CosetPermutation rho(const Instance& inst, const Element& g, const Vertex& v);

/// Ball truncation of an element ((s_v), gamma) of the semi-restricted
/// wreath product S_n wr S_{n-1} Aut(T_d). Only non-identity assignments
/// inside ball(center, radius) are stored; values outside the ball are
/// unknown, not identity.
struct WreathTruncation {
  Vertex center;
  int radius = 0;
  int n = 0;
  std::map<Vertex, CosetPermutation> assignments;
  Element gamma;
  /// True when every assignment moving 0 is known to lie inside the ball.
  bool complete = false;

  bool covers(const Vertex& v) const { return distance(v, center) <= radius; }
  /// Throws Error(kRadius) outside the ball.
  CosetPermutation at(const Vertex& v) const;
};

/// Smallest R such that every v with rho_{g,v} not fixing 0 lies within
/// distance R of the basepoint.
int embed_radius(const Instance& inst, const Element& g);

/// phi(g) = (rho_g, g) truncated to ball(basepoint, R). Throws
/// Error(kRadius) when R < embed_radius(g).
WreathTruncation embed(const Instance& inst, const Element& g, int radius);

/// (rho_g, g) on an arbitrary ball, with no coverage requirement.
WreathTruncation truncate(const Instance& inst, const Element& g, const Vertex& center, int radius);

/// (s, g)(s', g') = (v -> s_v s'_{g^-1 v}, g g'), on the largest ball around
/// a.center where both factors are known. Throws Error(kRadius) if empty.
WreathTruncation wreath_mul(const Instance& inst, const WreathTruncation& a, const WreathTruncation& b);
/// As above, cut down to `radius`; Error(kRadius) if that is not attainable.
WreathTruncation wreath_mul(const Instance& inst, const WreathTruncation& a, const WreathTruncation& b, int radius);

/// Pointwise comparison on ball(center, radius), plus equality of the tree
/// parts.
bool truncations_agree(const Instance& inst, const WreathTruncation& a, const WreathTruncation& b,
                       const Vertex& center, int radius);

/// C_n wr (C_d * C_d) with the free factor realized by the rotations u0, u1:
/// u_i fixes v_i (basepoint, resp. the vertex "0") and has local permutation
/// (0 1 ... d-1) everywhere.
class GammaGroup {
 public:
  /// Throws Error(kDomain) unless n >= 2 and 3 <= d <= kMaxDegree.
  GammaGroup(int n, int d);

  int n() const { return n_; }
  int degree() const { return rule_.degree(); }
  const LocalRule& rule() const { return rule_; }
  const Vertex& pivot(int i) const { return i == 0 ? v0_ : v1_; }
  EdgeRef base_edge() const { return EdgeRef{v0_, 0}; }
  const Permutation& rotation() const { return omega_; }

  /// Tree element u_pivot^exponent.
  Element syllable(int pivot, int exponent) const;

 private:
  int n_;
  LocalRule rule_;
  Permutation omega_;
  Vertex v0_;
  Vertex v1_;
};

struct Syllable {
  int pivot = 0;
  int exponent = 1;

  friend bool operator==(const Syllable&, const Syllable&) = default;
  friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

/// (lamp, word) with lamp values in Z_n and the word in alternating normal
/// form: adjacent syllables have different pivots, exponents in 1..d-1.
struct GammaElement {
  LampConfig lamp;
  std::vector<Syllable> word;

  /// "u0^2 u1^1"; "1" for the empty word.
  std::string word_str() const;

  friend bool operator==(const GammaElement&, const GammaElement&) = default;
  friend auto operator<=>(const GammaElement&, const GammaElement&) = default;
};

/// Lamp generators (+k at v0, then +k at v1, k = 1..n-1) followed by
/// rotations (u0^k, then u1^k, k = 1..d-1).
std::vector<GammaElement> gamma_generators(const GammaGroup& group);
bool gamma_is_tree_move(const GammaElement& generator);

std::vector<Syllable> normalize_syllables(const GammaGroup& group, const std::vector<Syllable>& word);
Element gamma_tree_part(const GammaGroup& group, const GammaElement& g);
Vertex gamma_apply(const GammaGroup& group, const GammaElement& g, const Vertex& v);

GammaElement gamma_mul(const GammaGroup& group, const GammaElement& a, const GammaElement& b);
GammaElement gamma_inverse(const GammaGroup& group, const GammaElement& a);
/// (f, gamma) . (h, e) = (v -> h(gamma^-1 v) + f(v), gamma e).
XVertex gamma_act(const GammaGroup& group, const GammaElement& a, const XVertex& x);

}  // namespace treewreath
