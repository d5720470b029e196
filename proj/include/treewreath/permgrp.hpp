#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace treewreath {

/// Largest supported color set. Groups are stored fully enumerated, so
/// 8! elements is the practical ceiling anyway.
inline constexpr int kMaxDegree = 8;

/// A permutation of {0, ..., d-1}, d <= kMaxDegree, stored inline.
///
/// Composition reads right to left: (a * b)(x) = a(b(x)). Ordering is
/// lexicographic on the image array, which is the canonical order used for
/// group enumeration and every tie-break in the library.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(int degree);
  /// Throws Error(kMalformedPermutation) unless `images` is a bijection.
  static Permutation from_images(std::span<const int> images);
  static Permutation from_images(std::initializer_list<int> images);
  /// Product of disjoint or overlapping cycles, applied right to left.
  static Permutation from_cycles(int degree, std::initializer_list<std::initializer_list<int>> cycles);

  int degree() const { return degree_; }
  int operator()(int x) const { return img_[static_cast<std::size_t>(x)]; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  bool is_identity() const;
  bool fixes(int x) const { return (*this)(x) == x; }

  std::vector<int> images() const;
  /// Image array form, e.g. "[1,2,0]".
  std::string str() const;
  /// Cycle notation, e.g. "(0 1 2)"; the identity prints as "()".
  std::string cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::array<std::uint8_t, kMaxDegree> img_{};
  std::uint8_t degree_ = 0;
};

/// Permutation of the lamp alphabet {0, ..., n-1}; n is an index of one
/// permutation group in another and can exceed kMaxDegree.
using CosetPermutation = std::vector<int>;

CosetPermutation coset_identity(int n);
/// (a * b)(i) = a(b(i)).
CosetPermutation coset_compose(const CosetPermutation& a, const CosetPermutation& b);
CosetPermutation coset_inverse(const CosetPermutation& a);
bool coset_is_identity(const CosetPermutation& a);

class PermutationGroup {
 public:
  /// Throws Error(kDomain) for d < 2 or d > kMaxDegree and
  /// Error(kMalformedPermutation) for a bad generator.
  static PermutationGroup from_images(int degree, const std::vector<std::vector<int>>& generators);
  static PermutationGroup generated_by(int degree, std::vector<Permutation> generators);
  /// Builds a group from a list already known to be closed; generators are
  /// chosen greedily from it.
  static PermutationGroup from_closed_set(int degree, std::vector<Permutation> elements);

  static PermutationGroup trivial(int degree);
  static PermutationGroup symmetric(int degree);
  static PermutationGroup cyclic(int degree);

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  /// Sorted ascending; elements().front() is the identity.
  const std::vector<Permutation>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }

  bool contains(const Permutation& p) const;
  std::optional<std::size_t> index_of(const Permutation& p) const;
  bool is_subgroup_of(const PermutationGroup& other) const;

  friend bool operator==(const PermutationGroup& a, const PermutationGroup& b) {
    return a.degree_ == b.degree_ && a.elements_ == b.elements_;
  }

 private:
  int degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
};

struct Classification {
  bool transitive = false;
  bool semiregular = false;
  bool regular = false;
  /// Each orbit sorted; orbits ordered by least element.
  std::vector<std::vector<int>> orbits;
};

Classification classify(const PermutationGroup& g);

/// True iff every generator of `fp` maps each orbit of `f` onto itself.
/// Throws Error(kContainment) unless f is a subgroup of fp.
bool preserves_orbits(const PermutationGroup& f, const PermutationGroup& fp);

PermutationGroup point_stabilizer(const PermutationGroup& g, int a);

/// Left-multiplication action of F' on the cosets F'/F, with the cosets
/// numbered 0..n-1: coset 0 is F itself and the others follow in order of
/// their lexicographically least member.
class CosetAction {
 public:
  int n() const { return n_; }
  /// Least member of each coset; coset_reps()[0] is the identity.
  const std::vector<Permutation>& coset_reps() const { return reps_; }
  /// alpha(sigma)(i) = j iff sigma maps coset i onto coset j. Throws
  /// Error(kContainment) for sigma outside F'.
  const CosetPermutation& alpha(const Permutation& sigma) const;
  /// Index of the coset sigma*F.
  int coset_of(const Permutation& sigma) const;
  /// alpha for every element of F', parallel to F'.elements().
  const std::vector<CosetPermutation>& table() const { return alpha_; }

 private:
  friend CosetAction coset_action(const PermutationGroup& f, const PermutationGroup& fp);

  int n_ = 0;
  std::vector<Permutation> reps_;
  std::vector<Permutation> domain_;
  std::vector<int> coset_;
  std::vector<CosetPermutation> alpha_;
};

CosetAction coset_action(const PermutationGroup& f, const PermutationGroup& fp);

/// The unique tau in F with tau(b) = t, or nullopt when t is outside the
/// F-orbit of b. Throws Error(kNotSemiregular) when uniqueness fails.
std::optional<Permutation> unique_mapper(const PermutationGroup& f, int b, int t);

/// True iff every non-trivial element of B has a non-trivial power in A.
/// Throws Error(kContainment) unless A is a subgroup of B.
bool power_condition(const PermutationGroup& a, const PermutationGroup& b);

}  // namespace treewreath
