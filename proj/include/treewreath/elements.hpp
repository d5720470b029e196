#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "treewreath/permgrp.hpp"
#include "treewreath/tree.hpp"

namespace treewreath {

/// Forced continuation of local permutations through a semiregular group F.
///
/// If an automorphism has local permutation s at u, and its local
/// permutation at the neighbor across the edge of color c lies in F, then
/// that permutation is the unique t in F with t(c) = s(c).
class LocalRule {
 public:
  /// Throws Error(kNotSemiregular) if F has a non-trivial point stabilizer.
  explicit LocalRule(PermutationGroup f);

  const PermutationGroup& group() const { return f_; }
  int degree() const { return f_.degree(); }
  bool in_group(const Permutation& p) const { return f_.contains(p); }

  /// The unique t in F with t(color) = target, if any.
  const std::optional<Permutation>& mapper(int color, int target) const {
    return table_[static_cast<std::size_t>(color * f_.degree() + target)];
  }
  /// Throws Error(kInvalidElement) when parent(color) leaves the F-orbit of color.
  Permutation propagate(const Permutation& parent, int color) const;

 private:
  PermutationGroup f_;
  std::vector<std::optional<Permutation>> table_;
};

/// A finitary portrait: the automorphism sending `anchor` to `anchor_image`
/// whose local permutations are given by `deviations` on a finite subtree
/// containing the anchor, and propagated by the rule everywhere else.
struct Portrait {
  Vertex anchor;
  Vertex anchor_image;
  std::map<Vertex, Permutation> deviations;
  /// Vertices of the subtree whose permutation lies outside F.
  std::vector<Vertex> outside_f;
};

/// Canonical generator: fixes the pivot vertex (basepoint for pivot 0, the
/// far end of the base edge for pivot 1) with local permutation sigma there.
struct GeneratorLabel {
  int pivot = 0;
  Permutation sigma;

  friend bool operator==(const GeneratorLabel&, const GeneratorLabel&) = default;
};

/// One factor of an Element, stored with its inverse so that inversion of
/// words is free.
struct Letter {
  std::shared_ptr<const Portrait> forward;
  std::shared_ptr<const Portrait> backward;
  std::optional<GeneratorLabel> label;
};

/// A tree automorphism written as a product of letters s_1 s_2 ... s_k,
/// acting right to left. No normalization is ever performed; the empty
/// product is the identity.
class Element {
 public:
  Element() = default;
  explicit Element(Letter letter) { letters_.push_back(std::move(letter)); }

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  /// True when every letter is a canonical generator.
  bool is_generator_word() const;

  /// g * h: apply h first.
  friend Element compose(const Element& g, const Element& h);
  friend Element invert(const Element& g);

 private:
  std::vector<Letter> letters_;
};

struct Evaluation {
  Vertex image;
  Permutation local;
};

Evaluation evaluate(const LocalRule& rule, const Portrait& portrait, const Vertex& v);
/// Image of v and local permutation at v, via the cocycle rule
/// sigma(gh, v) = sigma(g, hv) sigma(h, v).
Evaluation evaluate(const LocalRule& rule, const Element& g, const Vertex& v);

/// Wraps a portrait (assumed consistent) as a letter, computing its inverse.
Letter make_letter(const LocalRule& rule, Portrait forward, std::optional<GeneratorLabel> label = std::nullopt);

/// Validated data (d, F, F', a) with F semiregular, F < F' and F' preserving
/// the F-orbits, plus everything derived from it.
class Instance {
 public:
  int degree() const { return degree_; }
  int n() const { return coset_.n(); }
  int base_color() const { return base_color_; }
  const PermutationGroup& f() const { return rule_->group(); }
  const PermutationGroup& fp() const { return fp_; }
  /// Stabilizer of the base color in F'.
  const PermutationGroup& fp_base() const { return fp_base_; }
  const Classification& f_class() const { return f_class_; }
  bool f_regular() const { return f_class_.regular; }
  const LocalRule& rule() const { return *rule_; }
  const CosetAction& cosets() const { return coset_; }
  const CosetPermutation& alpha(const Permutation& sigma) const { return coset_.alpha(sigma); }

  /// v0 is the basepoint, v1 its neighbor along the base color.
  const Vertex& pivot(int i) const { return i == 0 ? v0_ : v1_; }
  EdgeRef base_edge() const { return EdgeRef{v0_, base_color_}; }

 private:
  friend Instance make_instance(int d, PermutationGroup f, PermutationGroup fp, int base_color);

  int degree_ = 0;
  int base_color_ = 0;
  std::shared_ptr<const LocalRule> rule_;
  PermutationGroup fp_;
  PermutationGroup fp_base_;
  Classification f_class_;
  CosetAction coset_;
  Vertex v0_;
  Vertex v1_;
};

/// Throws Error(kDomain | kContainment | kEqualGroups | kNotSemiregular |
/// kOrbitViolation) naming the first violated hypothesis.
Instance make_instance(int d, PermutationGroup f, PermutationGroup fp, int base_color);

/// Non-trivial elements of F u F'_a in ascending order; the sigma-index of a
/// generator refers to this list.
std::vector<Permutation> generator_sigmas(const Instance& inst);
/// Canonical generators sorted by (pivot, sigma); size 2(d-1) + 2(n-1).
/// Throws Error(kCapability) unless F is regular.
std::vector<Element> generators(const Instance& inst);
Element generator(const Instance& inst, int pivot, const Permutation& sigma);
/// "g<pivot>.s<k>" with k the index of sigma in generator_sigmas.
std::string generator_name(const Instance& inst, const GeneratorLabel& label);
/// True iff sigma lies in F (type 1 edge) rather than F'_a (type 2).
bool is_tree_move(const Instance& inst, const GeneratorLabel& label);

Permutation local_perm(const Instance& inst, const Element& g, const Vertex& v);
Vertex apply(const Instance& inst, const Element& g, const Vertex& v);
EdgeRef apply(const Instance& inst, const Element& g, const EdgeRef& e);

/// {v : local_perm(g, v) not in F}, sorted. Candidates are the preimages of
/// each letter's own deviations under the letters to its right, which
/// contain the deviation set exactly.
std::vector<Vertex> deviation_set(const Instance& inst, const Element& g);
/// Scan radius guaranteed to cover the deviation set: 2k+1 for a word of k
/// canonical generators, otherwise the farthest candidate.
int deviation_scan_radius(const Instance& inst, const Element& g);
/// Same set computed by brute force over ball(basepoint, radius).
std::vector<Vertex> deviation_set_scan(const Instance& inst, const Element& g, int radius);

/// g is trivial iff it fixes the vertex ((0), e0) of X (all local
/// permutations in F, base edge preserved) and fixes the basepoint.
/// Throws Error(kCapability) unless F is regular.
bool is_identity(const Instance& inst, const Element& g);
bool equal(const Instance& inst, const Element& g, const Element& h);

/// Validates and wraps a portrait. Throws Error(kInvalidPortrait) naming the
/// offending vertex or edge.
Element make_portrait(const Instance& inst, const Vertex& anchor, const Vertex& anchor_image,
                      std::map<Vertex, Permutation> deviations);

/// `count` pairwise distinct conjugates l g l^-1 of a non-trivial g fixing
/// the basepoint, with each l supported in the subtree below a vertex moved
/// by g. The first conjugator is the identity.
std::vector<Element> icc_conjugates(const Instance& inst, const Element& g, int count);

}  // namespace treewreath
