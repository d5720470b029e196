#include "treewreath/elements.hpp"

#include <algorithm>
#include <set>

#include "treewreath/error.hpp"

namespace treewreath {

LocalRule::LocalRule(PermutationGroup f) : f_(std::move(f)) {
  if (!classify(f_).semiregular) {
    throw Error(ErrorKind::kNotSemiregular, "propagation needs a semiregular group");
  }
  const int d = f_.degree();
  table_.assign(static_cast<std::size_t>(d * d), std::nullopt);
  for (const auto& s : f_.elements()) {
    for (int c = 0; c < d; ++c) table_[static_cast<std::size_t>(c * d + s(c))] = s;
  }
}

Permutation LocalRule::propagate(const Permutation& parent, int color) const {
  const auto& t = mapper(color, parent(color));
  if (!t) {
    throw Error(ErrorKind::kInvalidElement, "no element of F sends color " + std::to_string(color) + " to " +
                                                std::to_string(parent(color)));
  }
  return *t;
}

bool Element::is_generator_word() const {
  return std::all_of(letters_.begin(), letters_.end(), [](const Letter& l) { return l.label.has_value(); });
}

Element compose(const Element& g, const Element& h) {
  Element r = g;
  r.letters_.insert(r.letters_.end(), h.letters_.begin(), h.letters_.end());
  return r;
}

Element invert(const Element& g) {
  Element r;
  r.letters_.reserve(g.letters_.size());
  for (auto it = g.letters_.rbegin(); it != g.letters_.rend(); ++it) {
    Letter l{it->backward, it->forward, std::nullopt};
    if (it->label) l.label = GeneratorLabel{it->label->pivot, it->label->sigma.inverse()};
    r.letters_.push_back(std::move(l));
  }
  return r;
}

Evaluation evaluate(const LocalRule& rule, const Portrait& p, const Vertex& target) {
  Vertex cur = p.anchor;
  Vertex img = p.anchor_image;
  Permutation sigma = p.deviations.at(p.anchor);
  // The deviation subtree is connected and contains the anchor, so a
  // geodesic leaving it never comes back.
  bool inside = true;
  auto step = [&](int color) {
    img.step(sigma(color));
    cur.step(color);
    if (inside) {
      if (auto it = p.deviations.find(cur); it != p.deviations.end()) {
        sigma = it->second;
        return;
      }
      inside = false;
    }
    sigma = rule.propagate(sigma, color);
  };
  const int common = common_prefix_length(cur, target);
  while (cur.length() > common) step(cur.last());
  for (int i = common; i < target.length(); ++i) step(target[static_cast<std::size_t>(i)]);
  return {std::move(img), sigma};
}

Evaluation evaluate(const LocalRule& rule, const Element& g, const Vertex& v) {
  Evaluation acc{v, Permutation::identity(rule.degree())};
  for (auto it = g.letters().rbegin(); it != g.letters().rend(); ++it) {
    Evaluation e = evaluate(rule, *it->forward, acc.image);
    acc.local = e.local * acc.local;
    acc.image = std::move(e.image);
  }
  return acc;
}

namespace {

std::vector<Vertex> outside_group(const LocalRule& rule, const std::map<Vertex, Permutation>& devs) {
  std::vector<Vertex> out;
  for (const auto& [v, s] : devs) {
    if (!rule.in_group(s)) out.push_back(v);
  }
  return out;
}

}  // namespace

Letter make_letter(const LocalRule& rule, Portrait forward, std::optional<GeneratorLabel> label) {
  forward.outside_f = outside_group(rule, forward.deviations);
  Portrait backward;
  backward.anchor = forward.anchor_image;
  backward.anchor_image = forward.anchor;
  for (const auto& [v, s] : forward.deviations) {
    backward.deviations.emplace(evaluate(rule, forward, v).image, s.inverse());
  }
  backward.outside_f = outside_group(rule, backward.deviations);
  return Letter{std::make_shared<const Portrait>(std::move(forward)),
                std::make_shared<const Portrait>(std::move(backward)), std::move(label)};
}

Instance make_instance(int d, PermutationGroup f, PermutationGroup fp, int base_color) {
  if (d < 3 || d > kMaxDegree) {
    throw Error(ErrorKind::kDomain, "instance degree must lie in [3, " + std::to_string(kMaxDegree) + "]");
  }
  if (f.degree() != d || fp.degree() != d) {
    throw Error(ErrorKind::kDomain, "group degrees must equal d = " + std::to_string(d));
  }
  if (base_color < 0 || base_color >= d) {
    throw Error(ErrorKind::kDomain, "base color out of range");
  }
  if (!f.is_subgroup_of(fp)) throw Error(ErrorKind::kContainment, "F is not contained in F'");
  if (f == fp) throw Error(ErrorKind::kEqualGroups, "F and F' coincide");
  Classification cls = classify(f);
  if (!cls.semiregular) throw Error(ErrorKind::kNotSemiregular, "F has a non-trivial point stabilizer");
  if (!preserves_orbits(f, fp)) throw Error(ErrorKind::kOrbitViolation, "F' does not preserve the orbits of F");

  Instance inst;
  inst.degree_ = d;
  inst.base_color_ = base_color;
  inst.f_class_ = std::move(cls);
  inst.coset_ = coset_action(f, fp);
  inst.fp_base_ = point_stabilizer(fp, base_color);
  inst.rule_ = std::make_shared<const LocalRule>(std::move(f));
  inst.fp_ = std::move(fp);
  inst.v1_ = Vertex::from_colors({base_color});
  return inst;
}

namespace {

void require_regular(const Instance& inst, const char* what) {
  if (!inst.f_regular()) {
    throw Error(ErrorKind::kCapability, std::string(what) + " requires F to be regular");
  }
}

}  // namespace

std::vector<Permutation> generator_sigmas(const Instance& inst) {
  std::set<Permutation> s(inst.f().elements().begin(), inst.f().elements().end());
  s.insert(inst.fp_base().elements().begin(), inst.fp_base().elements().end());
  s.erase(Permutation::identity(inst.degree()));
  return {s.begin(), s.end()};
}

Element generator(const Instance& inst, int pivot, const Permutation& sigma) {
  require_regular(inst, "canonical generators");
  if (pivot != 0 && pivot != 1) throw Error(ErrorKind::kDomain, "pivot must be 0 or 1");
  if (sigma.is_identity() || !(inst.f().contains(sigma) || inst.fp_base().contains(sigma))) {
    throw Error(ErrorKind::kInvalidElement, "generator sigma " + sigma.cycles() + " is not in (F u F'_a) \\ {1}");
  }
  Portrait p;
  p.anchor = inst.pivot(pivot);
  p.anchor_image = inst.pivot(pivot);
  p.deviations.emplace(inst.pivot(pivot), sigma);
  return Element(make_letter(inst.rule(), std::move(p), GeneratorLabel{pivot, sigma}));
}

std::vector<Element> generators(const Instance& inst) {
  require_regular(inst, "canonical generators");
  std::vector<Element> out;
  const auto sigmas = generator_sigmas(inst);
  for (int pivot = 0; pivot < 2; ++pivot) {
    for (const auto& s : sigmas) out.push_back(generator(inst, pivot, s));
  }
  return out;
}

std::string generator_name(const Instance& inst, const GeneratorLabel& label) {
  const auto sigmas = generator_sigmas(inst);
  const auto it = std::find(sigmas.begin(), sigmas.end(), label.sigma);
  if (it == sigmas.end()) throw Error(ErrorKind::kInvalidElement, "label sigma is not a generator sigma");
  return "g" + std::to_string(label.pivot) + ".s" + std::to_string(it - sigmas.begin());
}

bool is_tree_move(const Instance& inst, const GeneratorLabel& label) { return inst.f().contains(label.sigma); }

Permutation local_perm(const Instance& inst, const Element& g, const Vertex& v) {
  return evaluate(inst.rule(), g, v).local;
}

Vertex apply(const Instance& inst, const Element& g, const Vertex& v) { return evaluate(inst.rule(), g, v).image; }

EdgeRef apply(const Instance& inst, const Element& g, const EdgeRef& e) {
  return EdgeRef::between(apply(inst, g, e.base), apply(inst, g, e.far()));
}

namespace {

std::set<Vertex> deviation_candidates(const Instance& inst, const Element& g) {
  std::set<Vertex> out;
  const auto& letters = g.letters();
  for (std::size_t j = 0; j < letters.size(); ++j) {
    for (Vertex w : letters[j].forward->outside_f) {
      // Pull w back through the letters applied before letter j.
      for (std::size_t i = j + 1; i < letters.size(); ++i) {
        w = evaluate(inst.rule(), *letters[i].backward, w).image;
      }
      out.insert(std::move(w));
    }
  }
  return out;
}

}  // namespace

std::vector<Vertex> deviation_set(const Instance& inst, const Element& g) {
  std::vector<Vertex> out;
  for (const auto& v : deviation_candidates(inst, g)) {
    if (!inst.rule().in_group(local_perm(inst, g, v))) out.push_back(v);
  }
  return out;
}

int deviation_scan_radius(const Instance& inst, const Element& g) {
  if (g.is_generator_word()) return 2 * static_cast<int>(g.length()) + 1;
  int r = 0;
  for (const auto& v : deviation_candidates(inst, g)) r = std::max(r, v.length());
  return r;
}

std::vector<Vertex> deviation_set_scan(const Instance& inst, const Element& g, int radius) {
  std::vector<Vertex> out;
  for (const auto& v : ball(inst.degree(), Vertex(), radius)) {
    if (!inst.rule().in_group(local_perm(inst, g, v))) out.push_back(v);
  }
  return out;
}

bool is_identity(const Instance& inst, const Element& g) {
  require_regular(inst, "identity test");
  if (!deviation_set(inst, g).empty()) return false;
  // With every local permutation in F, fixing the basepoint and the base
  // color forces the trivial permutation at the basepoint, and propagation
  // then forces it everywhere.
  return apply(inst, g, inst.pivot(0)) == inst.pivot(0) && apply(inst, g, inst.pivot(1)) == inst.pivot(1);
}

bool equal(const Instance& inst, const Element& g, const Element& h) {
  return is_identity(inst, compose(g, invert(h)));
}

Element make_portrait(const Instance& inst, const Vertex& anchor, const Vertex& anchor_image,
                      std::map<Vertex, Permutation> deviations) {
  const int d = inst.degree();
  auto in_range = [d](const Vertex& v) {
    for (int i = 0; i < v.length(); ++i) {
      if (v[static_cast<std::size_t>(i)] >= d) return false;
    }
    return true;
  };
  if (!in_range(anchor) || !in_range(anchor_image)) {
    throw Error(ErrorKind::kInvalidPortrait, "anchor uses a color outside {0..d-1}");
  }
  if (!deviations.count(anchor)) {
    throw Error(ErrorKind::kInvalidPortrait, "deviations must include the anchor " + anchor.str());
  }
  for (const auto& [v, s] : deviations) {
    if (!in_range(v)) throw Error(ErrorKind::kInvalidPortrait, "vertex " + v.str() + " uses a color outside {0..d-1}");
    if (s.degree() != d || !inst.fp().contains(s)) {
      throw Error(ErrorKind::kInvalidPortrait, "permutation at " + v.str() + " is not in F'");
    }
    if (v != anchor) {
      // The next vertex on the geodesic toward the anchor must be present.
      Vertex toward = v;
      if (common_prefix_length(v, anchor) == v.length()) {
        toward.step(anchor[static_cast<std::size_t>(v.length())]);
      } else {
        toward.step(v.last());
      }
      if (!deviations.count(toward)) {
        throw Error(ErrorKind::kInvalidPortrait, "deviation subtree is not connected at " + v.str());
      }
    }
  }
  for (const auto& [u, s] : deviations) {
    for (int c = 0; c < d; ++c) {
      const Vertex w = neighbor(d, u, c);
      auto it = deviations.find(w);
      if (it != deviations.end()) {
        if (s(c) != it->second(c)) {
          throw Error(ErrorKind::kInvalidPortrait,
                      "inconsistent colors on edge " + EdgeRef::between(u, w).str() + ": " + std::to_string(s(c)) +
                          " at " + u.str() + " vs " + std::to_string(it->second(c)) + " at " + w.str());
        }
      } else if (!inst.rule().mapper(c, s(c))) {
        throw Error(ErrorKind::kInvalidPortrait,
                    "cannot propagate across edge " + EdgeRef::between(u, w).str() + " into F");
      }
    }
  }
  Portrait p;
  p.anchor = anchor;
  p.anchor_image = anchor_image;
  p.deviations = std::move(deviations);
  return Element(make_letter(inst.rule(), std::move(p)));
}

std::vector<Element> icc_conjugates(const Instance& inst, const Element& g, int count) {
  require_regular(inst, "icc_conjugates");
  if (count < 1) throw Error(ErrorKind::kPrecondition, "icc_conjugates needs count >= 1");
  const Vertex root;
  if (apply(inst, g, root) != root) throw Error(ErrorKind::kPrecondition, "element does not fix the basepoint");
  if (is_identity(inst, g)) throw Error(ErrorKind::kPrecondition, "element is trivial");

  // A non-trivial element fixing the basepoint whose deviations all lie
  // within radius r must move some vertex within radius r + 1.
  const int scan = deviation_scan_radius(inst, g) + 2;
  std::optional<Vertex> moved;
  for (const auto& v : ball(inst.degree(), root, scan)) {
    if (apply(inst, g, v) != v) {
      moved = v;
      break;
    }
  }
  if (!moved) throw Error(ErrorKind::kInvariant, "no moved vertex found for a non-trivial element");

  std::vector<Element> out{g};
  Vertex anchor = *moved;
  for (int j = 1; j < count; ++j) {
    // l fixes the parent edge of the anchor, so it is the identity off the
    // subtree below the anchor.
    const int up = anchor.last();
    std::optional<Permutation> sigma;
    for (const auto& s : inst.fp().elements()) {
      if (!s.is_identity() && s.fixes(up)) {
        sigma = s;
        break;
      }
    }
    if (!sigma) throw Error(ErrorKind::kInvariant, "F' has trivial color stabilizer");
    Element lambda = make_portrait(inst, anchor, anchor, {{anchor, *sigma}});
    out.push_back(compose(compose(lambda, g), invert(lambda)));
    anchor.step(up == 0 ? 1 : 0);
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t k = i + 1; k < out.size(); ++k) {
      if (equal(inst, out[i], out[k])) {
        throw Error(ErrorKind::kInvariant, "conjugates " + std::to_string(i) + " and " + std::to_string(k) + " coincide");
      }
    }
  }
  return out;
}

}  // namespace treewreath
