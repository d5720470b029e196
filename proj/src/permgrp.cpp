#include "treewreath/permgrp.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "treewreath/error.hpp"

namespace treewreath {

Permutation Permutation::identity(int degree) {
  if (degree < 0 || degree > kMaxDegree) {
    throw Error(ErrorKind::kDomain, "permutation degree " + std::to_string(degree) + " unsupported");
  }
  Permutation p;
  p.degree_ = static_cast<std::uint8_t>(degree);
  for (int i = 0; i < degree; ++i) p.img_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
  return p;
}

Permutation Permutation::from_images(std::span<const int> images) {
  if (images.size() > static_cast<std::size_t>(kMaxDegree)) {
    throw Error(ErrorKind::kDomain, "permutation degree " + std::to_string(images.size()) + " exceeds " +
                                        std::to_string(kMaxDegree));
  }
  const int d = static_cast<int>(images.size());
  std::array<bool, kMaxDegree> seen{};
  Permutation p;
  p.degree_ = static_cast<std::uint8_t>(d);
  for (int i = 0; i < d; ++i) {
    const int x = images[static_cast<std::size_t>(i)];
    if (x < 0 || x >= d || seen[static_cast<std::size_t>(x)]) {
      std::ostringstream os;
      os << "image array is not a bijection of {0.." << d - 1 << "}";
      throw Error(ErrorKind::kMalformedPermutation, os.str());
    }
    seen[static_cast<std::size_t>(x)] = true;
    p.img_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(x);
  }
  return p;
}

Permutation Permutation::from_images(std::initializer_list<int> images) {
  return from_images(std::span<const int>(images.begin(), images.size()));
}

Permutation Permutation::from_cycles(int degree, std::initializer_list<std::initializer_list<int>> cycles) {
  Permutation result = identity(degree);
  for (const auto& cycle : cycles) {
    std::vector<int> img(static_cast<std::size_t>(degree));
    std::iota(img.begin(), img.end(), 0);
    std::vector<int> pts(cycle);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const int from = pts[i];
      const int to = pts[(i + 1) % pts.size()];
      if (from < 0 || from >= degree) {
        throw Error(ErrorKind::kMalformedPermutation, "cycle point out of range");
      }
      img[static_cast<std::size_t>(from)] = to;
    }
    result = from_images(img) * result;
  }
  return result;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  Permutation r;
  r.degree_ = degree_;
  for (int i = 0; i < degree_; ++i) r.img_[static_cast<std::size_t>(i)] = img_[rhs.img_[static_cast<std::size_t>(i)]];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.degree_ = degree_;
  for (int i = 0; i < degree_; ++i) r.img_[img_[static_cast<std::size_t>(i)] % kMaxDegree] = static_cast<std::uint8_t>(i);
  return r;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree_; ++i) {
    if (img_[static_cast<std::size_t>(i)] != i) return false;
  }
  return true;
}

std::vector<int> Permutation::images() const {
  return std::vector<int>(img_.begin(), img_.begin() + degree_);
}

std::string Permutation::str() const {
  std::string s = "[";
  for (int i = 0; i < degree_; ++i) {
    if (i) s += ',';
    s += std::to_string(img_[static_cast<std::size_t>(i)]);
  }
  return s + "]";
}

std::string Permutation::cycles() const {
  std::string s;
  std::array<bool, kMaxDegree> done{};
  for (int i = 0; i < degree_; ++i) {
    if (done[static_cast<std::size_t>(i)] || fixes(i)) continue;
    s += '(';
    int x = i;
    bool first = true;
    while (!done[static_cast<std::size_t>(x)]) {
      done[static_cast<std::size_t>(x)] = true;
      if (!first) s += ' ';
      s += std::to_string(x);
      first = false;
      x = (*this)(x);
    }
    s += ')';
  }
  return s.empty() ? "()" : s;
}

CosetPermutation coset_identity(int n) {
  CosetPermutation p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

CosetPermutation coset_compose(const CosetPermutation& a, const CosetPermutation& b) {
  CosetPermutation r(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[static_cast<std::size_t>(b[i])];
  return r;
}

CosetPermutation coset_inverse(const CosetPermutation& a) {
  CosetPermutation r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[static_cast<std::size_t>(a[i])] = static_cast<int>(i);
  return r;
}

bool coset_is_identity(const CosetPermutation& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != static_cast<int>(i)) return false;
  }
  return true;
}

namespace {

void check_degree(int degree) {
  if (degree < 2 || degree > kMaxDegree) {
    throw Error(ErrorKind::kDomain, "group degree must lie in [2, " + std::to_string(kMaxDegree) +
                                        "], got " + std::to_string(degree));
  }
}

std::vector<Permutation> closure(int degree, const std::vector<Permutation>& gens) {
  std::set<Permutation> seen{Permutation::identity(degree)};
  std::vector<Permutation> frontier{Permutation::identity(degree)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& x : frontier) {
      for (const auto& g : gens) {
        Permutation y = g * x;
        if (seen.insert(y).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

PermutationGroup PermutationGroup::from_images(int degree, const std::vector<std::vector<int>>& generators) {
  check_degree(degree);
  std::vector<Permutation> gens;
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != degree) {
      throw Error(ErrorKind::kMalformedPermutation,
                  "generator has length " + std::to_string(g.size()) + ", expected " + std::to_string(degree));
    }
    gens.push_back(Permutation::from_images(g));
  }
  return generated_by(degree, std::move(gens));
}

PermutationGroup PermutationGroup::generated_by(int degree, std::vector<Permutation> generators) {
  check_degree(degree);
  for (const auto& g : generators) {
    if (g.degree() != degree) throw Error(ErrorKind::kMalformedPermutation, "generator degree mismatch");
  }
  PermutationGroup g;
  g.degree_ = degree;
  g.elements_ = closure(degree, generators);
  g.generators_ = std::move(generators);
  return g;
}

PermutationGroup PermutationGroup::from_closed_set(int degree, std::vector<Permutation> elements) {
  check_degree(degree);
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  PermutationGroup g;
  g.degree_ = degree;
  std::set<Permutation> span{Permutation::identity(degree)};
  for (const auto& x : elements) {
    if (span.count(x)) continue;
    g.generators_.push_back(x);
    auto c = closure(degree, g.generators_);
    span = std::set<Permutation>(c.begin(), c.end());
  }
  g.elements_ = std::move(elements);
  return g;
}

PermutationGroup PermutationGroup::trivial(int degree) { return generated_by(degree, {}); }

PermutationGroup PermutationGroup::symmetric(int degree) {
  std::vector<int> cyc(static_cast<std::size_t>(degree));
  std::iota(cyc.begin(), cyc.end(), 1);
  cyc.back() = 0;
  std::vector<int> swap(static_cast<std::size_t>(degree));
  std::iota(swap.begin(), swap.end(), 0);
  std::swap(swap[0], swap[1]);
  return from_images(degree, {cyc, swap});
}

PermutationGroup PermutationGroup::cyclic(int degree) {
  std::vector<int> cyc(static_cast<std::size_t>(degree));
  std::iota(cyc.begin(), cyc.end(), 1);
  cyc.back() = 0;
  return from_images(degree, {cyc});
}

bool PermutationGroup::contains(const Permutation& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

std::optional<std::size_t> PermutationGroup::index_of(const Permutation& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

bool PermutationGroup::is_subgroup_of(const PermutationGroup& other) const {
  if (degree_ != other.degree_) return false;
  return std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(), elements_.end());
}

Classification classify(const PermutationGroup& g) {
  Classification c;
  const int d = g.degree();
  std::vector<int> orbit_of(static_cast<std::size_t>(d), -1);
  for (int x = 0; x < d; ++x) {
    if (orbit_of[static_cast<std::size_t>(x)] >= 0) continue;
    std::set<int> orbit;
    for (const auto& s : g.elements()) orbit.insert(s(x));
    for (int y : orbit) orbit_of[static_cast<std::size_t>(y)] = static_cast<int>(c.orbits.size());
    c.orbits.emplace_back(orbit.begin(), orbit.end());
  }
  c.transitive = c.orbits.size() == 1;
  c.semiregular = std::none_of(g.elements().begin(), g.elements().end(), [d](const Permutation& s) {
    if (s.is_identity()) return false;
    for (int x = 0; x < d; ++x) {
      if (s.fixes(x)) return true;
    }
    return false;
  });
  c.regular = c.transitive && c.semiregular;
  return c;
}

namespace {

void require_subgroup(const PermutationGroup& sub, const PermutationGroup& group, const char* what) {
  if (!sub.is_subgroup_of(group)) {
    throw Error(ErrorKind::kContainment, std::string(what) + ": first group is not contained in the second");
  }
}

}  // namespace

bool preserves_orbits(const PermutationGroup& f, const PermutationGroup& fp) {
  require_subgroup(f, fp, "preserves_orbits");
  const auto orbits = classify(f).orbits;
  for (const auto& s : fp.generators()) {
    for (const auto& orbit : orbits) {
      for (int x : orbit) {
        if (!std::binary_search(orbit.begin(), orbit.end(), s(x))) return false;
      }
    }
  }
  return true;
}

PermutationGroup point_stabilizer(const PermutationGroup& g, int a) {
  if (a < 0 || a >= g.degree()) {
    throw Error(ErrorKind::kDomain, "point " + std::to_string(a) + " out of range");
  }
  std::vector<Permutation> stab;
  for (const auto& s : g.elements()) {
    if (s.fixes(a)) stab.push_back(s);
  }
  return PermutationGroup::from_closed_set(g.degree(), std::move(stab));
}

const CosetPermutation& CosetAction::alpha(const Permutation& sigma) const {
  auto it = std::lower_bound(domain_.begin(), domain_.end(), sigma);
  if (it == domain_.end() || *it != sigma) {
    throw Error(ErrorKind::kContainment, "alpha: " + sigma.cycles() + " is not in F'");
  }
  return alpha_[static_cast<std::size_t>(it - domain_.begin())];
}

int CosetAction::coset_of(const Permutation& sigma) const {
  auto it = std::lower_bound(domain_.begin(), domain_.end(), sigma);
  if (it == domain_.end() || *it != sigma) {
    throw Error(ErrorKind::kContainment, "coset_of: " + sigma.cycles() + " is not in F'");
  }
  return coset_[static_cast<std::size_t>(it - domain_.begin())];
}

CosetAction coset_action(const PermutationGroup& f, const PermutationGroup& fp) {
  require_subgroup(f, fp, "coset_action");
  CosetAction ca;
  ca.domain_ = fp.elements();
  ca.coset_.assign(ca.domain_.size(), -1);
  // Scanning in ascending order visits each coset first at its least member,
  // and the identity (least overall) opens coset 0 = F.
  for (std::size_t i = 0; i < ca.domain_.size(); ++i) {
    if (ca.coset_[i] >= 0) continue;
    const int id = static_cast<int>(ca.reps_.size());
    ca.reps_.push_back(ca.domain_[i]);
    for (const auto& x : f.elements()) {
      ca.coset_[*fp.index_of(ca.domain_[i] * x)] = id;
    }
  }
  ca.n_ = static_cast<int>(ca.reps_.size());
  ca.alpha_.reserve(ca.domain_.size());
  for (const auto& sigma : ca.domain_) {
    CosetPermutation a(static_cast<std::size_t>(ca.n_));
    for (int i = 0; i < ca.n_; ++i) {
      a[static_cast<std::size_t>(i)] = ca.coset_[*fp.index_of(sigma * ca.reps_[static_cast<std::size_t>(i)])];
    }
    ca.alpha_.push_back(std::move(a));
  }
  return ca;
}

std::optional<Permutation> unique_mapper(const PermutationGroup& f, int b, int t) {
  if (!classify(f).semiregular) {
    throw Error(ErrorKind::kNotSemiregular, "unique_mapper needs a semiregular group");
  }
  if (b < 0 || b >= f.degree() || t < 0 || t >= f.degree()) {
    throw Error(ErrorKind::kDomain, "unique_mapper: point out of range");
  }
  for (const auto& s : f.elements()) {
    if (s(b) == t) return s;
  }
  return std::nullopt;
}

bool power_condition(const PermutationGroup& a, const PermutationGroup& b) {
  require_subgroup(a, b, "power_condition");
  for (const auto& x : b.elements()) {
    if (x.is_identity()) continue;
    bool found = false;
    for (Permutation p = x; !p.is_identity(); p = p * x) {
      if (a.contains(p)) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace treewreath
