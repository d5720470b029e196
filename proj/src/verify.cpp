#include "treewreath/verify.hpp"

#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "treewreath/error.hpp"
#include "treewreath/graphs.hpp"
#include "treewreath/wreath.hpp"

namespace treewreath {

bool Report::overall() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

ordered_json Report::json() const {
  ordered_json j;
  j["suite"] = suite;
  j["params"] = params;
  auto cs = ordered_json::array();
  for (const auto& c : checks) cs.push_back(ordered_json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  j["checks"] = std::move(cs);
  j["overall"] = overall();
  return j;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"cocycle", "embedding", "action",  "transitivity", "cayley",
                                              "gamma",   "dl",        "lattice", "icc"};
  return names;
}

Instance reference_instance(char which) {
  switch (which) {
    case 'A':
      return make_instance(3, PermutationGroup::cyclic(3), PermutationGroup::symmetric(3), 0);
    case 'B':
      return make_instance(4, PermutationGroup::cyclic(4),
                           PermutationGroup::generated_by(4, {Permutation::from_cycles(4, {{0, 1, 2, 3}}),
                                                              Permutation::from_cycles(4, {{1, 3}})}),
                           0);
    case 'C':
      return make_instance(4,
                           PermutationGroup::generated_by(4, {Permutation::from_cycles(4, {{0, 1}, {2, 3}}),
                                                              Permutation::from_cycles(4, {{0, 2}, {1, 3}})}),
                           PermutationGroup::symmetric(4), 0);
    default:
      throw Error(ErrorKind::kDomain, std::string("no reference instance named ") + which);
  }
}

Element random_word(const Instance& inst, std::mt19937_64& rng, int max_length) {
  const auto gens = generators(inst);
  std::uniform_int_distribution<int> len(0, max_length);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  Element g;
  for (int k = len(rng); k > 0; --k) g = compose(g, gens[pick(rng)]);
  return g;
}

std::vector<Element> all_words(const Instance& inst, int max_length) {
  const auto gens = generators(inst);
  std::vector<Element> out{Element{}};
  std::size_t layer_begin = 0;
  for (int len = 1; len <= max_length; ++len) {
    const std::size_t layer_end = out.size();
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      for (const auto& s : gens) out.push_back(compose(out[i], s));
    }
    layer_begin = layer_end;
  }
  return out;
}

namespace {

struct Battery {
  Report& report;

  void add(std::string name, bool pass, std::string detail) {
    report.checks.push_back(Check{std::move(name), pass, std::move(detail)});
  }
  // Runs fn; any library error becomes a failed check carrying its message.
  void run(const std::string& name, const std::function<std::pair<bool, std::string>()>& fn) {
    try {
      auto [pass, detail] = fn();
      add(name, pass, std::move(detail));
    } catch (const std::exception& e) {
      add(name, false, e.what());
    }
  }
};

std::string count_detail(std::size_t failures, std::size_t total, const std::string& what) {
  std::ostringstream os;
  os << failures << " failures over " << total << " " << what;
  return os.str();
}

const Instance& need_instance(const SuiteParams& p, std::optional<Instance>& storage) {
  if (p.instance) return *p.instance;
  storage = reference_instance('A');
  return *storage;
}

void record_instance(Report& r, const SuiteParams& p, const Instance& inst) {
  r.params["instance"] = p.instance ? p.instance_name : std::string("A");
  r.params["d"] = inst.degree();
  r.params["n"] = inst.n();
}

void suite_cocycle(const SuiteParams& p, Report& r) {
  std::optional<Instance> own;
  const Instance& inst = need_instance(p, own);
  const int radius = p.radius.value_or(4);
  record_instance(r, p, inst);
  r.params["radius"] = radius;
  Battery b{r};
  const auto gens = generators(inst);
  const auto vs = ball(inst.degree(), Vertex{}, radius);
  b.run("cocycle", [&] {
    std::size_t fails = 0;
    std::size_t total = 0;
    for (const auto& g : gens) {
      for (const auto& h : gens) {
        const Element gh = compose(g, h);
        for (const auto& v : vs) {
          const Vertex hv = apply(inst, h, v);
          ++total;
          if (local_perm(inst, gh, v) != local_perm(inst, g, hv) * local_perm(inst, h, v)) ++fails;
        }
      }
    }
    return std::pair{fails == 0, count_detail(fails, total, "(g, h, v) triples")};
  });
  // The local permutation must describe the action on the star of v.
  b.run("star-action", [&] {
    std::size_t fails = 0;
    std::size_t total = 0;
    for (const auto& g : gens) {
      for (const auto& h : gens) {
        const Element gh = compose(g, h);
        for (const auto& v : vs) {
          const Evaluation e = evaluate(inst.rule(), gh, v);
          for (int c = 0; c < inst.degree(); ++c) {
            ++total;
            if (apply(inst, gh, neighbor(inst.degree(), v, c)) != neighbor(inst.degree(), e.image, e.local(c))) ++fails;
          }
        }
      }
    }
    return std::pair{fails == 0, count_detail(fails, total, "star edges")};
  });
}

void suite_embedding(const SuiteParams& p, Report& r) {
  std::optional<Instance> own;
  const Instance& inst = need_instance(p, own);
  const int radius = p.radius.value_or(6);
  const int count = p.count.value_or(100);
  record_instance(r, p, inst);
  r.params["radius"] = radius;
  r.params["count"] = count;
  r.params["seed"] = p.seed;
  Battery b{r};
  std::mt19937_64 rng(p.seed);
  std::vector<std::pair<Element, Element>> pairs;
  for (int i = 0; i < count; ++i) {
    Element g = random_word(inst, rng, 6);
    Element h = random_word(inst, rng, 6);
    pairs.emplace_back(std::move(g), std::move(h));
  }
  const Vertex root;
  b.run("homomorphism", [&] {
    std::size_t fails = 0;
    for (const auto& [g, h] : pairs) {
      const WreathTruncation tg = truncate(inst, g, root, radius);
      const WreathTruncation th = truncate(inst, h, apply(inst, invert(g), root), radius);
      const WreathTruncation prod = wreath_mul(inst, tg, th, radius);
      const WreathTruncation direct = truncate(inst, compose(g, h), root, radius);
      if (!truncations_agree(inst, prod, direct, root, radius)) ++fails;
    }
    return std::pair{fails == 0, count_detail(fails, pairs.size(), "word pairs")};
  });
  b.run("lamp-finiteness", [&] {
    // Assignments moving 0 sit exactly on the image of the deviation set.
    std::size_t fails = 0;
    for (const auto& [g, h] : pairs) {
      const int need = embed_radius(inst, g);
      const WreathTruncation t = embed(inst, g, need);
      std::set<Vertex> moved;
      for (const auto& [v, perm] : t.assignments) {
        if (perm[0] != 0) moved.insert(v);
      }
      std::set<Vertex> expected;
      for (const auto& w : deviation_set(inst, g)) expected.insert(apply(inst, g, w));
      if (!t.complete || moved != expected) ++fails;
    }
    return std::pair{fails == 0, count_detail(fails, pairs.size(), "elements")};
  });
  b.run("radius-error", [&] {
    for (const auto& [g, h] : pairs) {
      const int need = embed_radius(inst, g);
      if (need == 0) continue;
      try {
        embed(inst, g, need - 1);
        return std::pair{false, std::string("embed below the bound did not throw")};
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::kRadius) return std::pair{false, std::string(e.what())};
      }
    }
    return std::pair{true, std::string("embed rejects radii below the bound")};
  });
}

// Truncation radius large enough to act on every X-vertex of the ball.
int action_radius(const Instance& inst, const Element& g, int ball_radius) {
  int r = embed_radius(inst, g);
  for (const auto& w : ball(inst.degree(), Vertex{}, ball_radius + 1)) r = std::max(r, apply(inst, g, w).length());
  return r;
}

void suite_action(const SuiteParams& p, Report& r) {
  std::optional<Instance> own;
  const Instance& inst = need_instance(p, own);
  const int radius = p.radius.value_or(2);
  const int count = p.count.value_or(50);
  record_instance(r, p, inst);
  r.params["radius"] = radius;
  r.params["count"] = count;
  r.params["seed"] = p.seed;
  Battery b{r};
  const int n = inst.n();
  const int d = inst.degree();
  const XVertex x0 = x_origin(inst.base_color());
  std::mt19937_64 rng(p.seed);
  std::vector<Element> words;
  for (int i = 0; i < count; ++i) words.push_back(random_word(inst, rng, 6));

  b.run("wreath-vs-local", [&] {
    const GraphBall xb = x_ball(n, d, x0, radius);
    std::size_t fails = 0;
    std::size_t total = 0;
    for (const auto& g : words) {
      const WreathTruncation t = truncate(inst, g, Vertex{}, action_radius(inst, g, radius));
      for (const auto& id : xb.ids) {
        const XVertex x = XVertex::parse(id);
        ++total;
        if (wreath_act(inst, t, x) != gff_act(inst, g, x)) ++fails;
      }
    }
    return std::pair{fails == 0, count_detail(fails, total, "(word, vertex) pairs")};
  });
  b.run("automorphism", [&] {
    const GraphBall xb = x_ball(n, d, x0, 3);
    std::size_t fails = 0;
    std::size_t total = 0;
    for (const auto& s : generators(inst)) {
      for (std::size_t v = 0; v < xb.size(); ++v) {
        const XVertex x = XVertex::parse(xb.ids[v]);
        const XVertex sx = gff_act(inst, s, x);
        const auto nbs = x_neighbors(n, d, sx);
        for (const auto& e : xb.adjacency[v]) {
          if (static_cast<std::size_t>(e.to) < v) continue;
          ++total;
          const XVertex sy = gff_act(inst, s, XVertex::parse(xb.ids[static_cast<std::size_t>(e.to)]));
          const bool ok = std::any_of(nbs.begin(), nbs.end(),
                                      [&](const auto& nb) { return nb.vertex == sy && nb.type == e.type; });
          if (!ok) ++fails;
        }
      }
    }
    return std::pair{fails == 0, count_detail(fails, total, "(generator, edge) pairs")};
  });
  b.run("type-preserving", [&] {
    std::size_t fails = 0;
    std::size_t total = 0;
    for (const auto& g : words) {
      for (const auto& v : ball(d, Vertex{}, 3)) {
        ++total;
        if (apply(inst, g, v).parity() != v.parity()) ++fails;
      }
    }
    return std::pair{fails == 0, count_detail(fails, total, "(word, vertex) pairs")};
  });
  b.run("identity", [&] {
    const GraphBall xb = x_ball(n, d, x0, radius);
    std::size_t fails = 0;
    for (const auto& id : xb.ids) {
      const XVertex x = XVertex::parse(id);
      if (gff_act(inst, Element{}, x) != x) ++fails;
    }
    return std::pair{fails == 0, count_detail(fails, xb.size(), "vertices")};
  });
}

void suite_transitivity(const SuiteParams& p, Report& r) {
  std::optional<Instance> own;
  const Instance& inst = need_instance(p, own);
  const int radius = p.radius.value_or(2);
  record_instance(r, p, inst);
  r.params["radius"] = radius;
  Battery b{r};
  const int n = inst.n();
  const auto vs = ball(inst.degree(), Vertex{}, radius);
  const auto edges = edge_ball(inst.degree(), radius);

  double space = static_cast<double>(edges.size());
  for (std::size_t i = 0; i < vs.size(); ++i) space *= n;
  const bool exhaustive = space <= 2.0e5;
  const int count = p.count.value_or(2000);
  r.params["exhaustive"] = exhaustive;
  if (!exhaustive) {
    r.params["count"] = count;
    r.params["seed"] = p.seed;
  }

  auto check_one = [&](const XVertex& x) {
    const ReductionTrace t = reduce_to_zero(inst, x);
    const std::size_t support = x.config.support_size();
    if (t.steps.size() != support) return false;
    for (std::size_t i = 0; i < t.steps.size(); ++i) {
      if (t.steps[i].result.config.support_size() != support - i - 1) return false;
      if (t.steps[i].result.edge != x.edge) return false;
    }
    return t.final == XVertex{LampConfig{}, x.edge};
  };

  b.run("reduce-to-zero", [&] {
    std::size_t fails = 0;
    std::size_t total = 0;
    if (exhaustive) {
      std::vector<int> digits(vs.size(), 0);
      while (true) {
        LampConfig f;
        for (std::size_t i = 0; i < vs.size(); ++i) f.set(vs[i], digits[i]);
        for (const auto& e : edges) {
          ++total;
          if (!check_one(XVertex{f, e})) ++fails;
        }
        std::size_t i = 0;
        while (i < digits.size() && ++digits[i] == n) digits[i++] = 0;
        if (i == digits.size()) break;
      }
    } else {
      std::mt19937_64 rng(p.seed);
      std::uniform_int_distribution<int> value(0, n - 1);
      std::uniform_int_distribution<std::size_t> edge(0, edges.size() - 1);
      for (int k = 0; k < count; ++k) {
        LampConfig f;
        for (const auto& v : vs) f.set(v, value(rng));
        ++total;
        if (!check_one(XVertex{f, edges[edge(rng)]})) ++fails;
      }
    }
    return std::pair{fails == 0, count_detail(fails, total, "X-vertices")};
  });
}

void suite_cayley(const SuiteParams& p, Report& r) {
  std::optional<Instance> own;
  const Instance& inst = need_instance(p, own);
  const int radius = p.radius.value_or(4);
  record_instance(r, p, inst);
  r.params["radius"] = radius;
  Battery b{r};
  const int n = inst.n();
  const int d = inst.degree();
  const XVertex x0 = x_origin(inst.base_color());

  b.run("orbit-map", [&] {
    const GraphBall cay = cayley_ball_gff(inst, radius);
    const GraphBall xb = x_ball(n, d, x0, radius);
    return std::pair{same_graph(cay, xb), std::to_string(cay.size()) + " Cayley vertices, " +
                                              std::to_string(xb.size()) + " X-vertices"};
  });

  const auto words = all_words(inst, radius);
  std::map<std::string, std::vector<std::size_t>> classes;
  b.run("word-problem", [&] {
    for (std::size_t i = 0; i < words.size(); ++i) classes[gff_act(inst, words[i], x0).str()].push_back(i);
    std::size_t fails = 0;
    std::size_t total = 0;
    for (const auto& [id, members] : classes) {
      for (std::size_t k = 1; k < members.size(); ++k) {
        ++total;
        if (!equal(inst, words[members[0]], words[members[k]])) ++fails;
      }
    }
    const std::size_t expected = x_ball(n, d, x0, radius).size();
    return std::pair{fails == 0 && classes.size() == expected,
                     count_detail(fails, total, "word pairs with equal images") + "; " +
                         std::to_string(classes.size()) + " images of " + std::to_string(words.size()) + " words"};
  });
  b.run("stabilizer", [&] {
    const auto vs = ball(d, Vertex{}, radius);
    std::size_t fails = 0;
    std::size_t fixing = 0;
    const auto it = classes.find(x0.str());
    if (it == classes.end()) return std::pair{false, std::string("no word fixes the base vertex")};
    for (std::size_t idx : it->second) {
      const Element& g = words[idx];
      ++fixing;
      bool ok = true;
      for (const auto& v : vs) {
        if (!inst.rule().in_group(local_perm(inst, g, v))) ok = false;
      }
      if (apply(inst, g, Vertex{}) == Vertex{}) {
        // Fixing the base vertex and the basepoint leaves only the identity.
        for (const auto& v : vs) {
          const Evaluation e = evaluate(inst.rule(), g, v);
          if (e.image != v || !e.local.is_identity()) ok = false;
        }
      }
      if (!ok) ++fails;
    }
    return std::pair{fails == 0, count_detail(fails, fixing, "words fixing the base vertex")};
  });
  b.run("lamplighter", [&] {
    const int rc = std::min(radius, 3);
    const GraphBall cay = cayley_ball_lampwd(n, d, rc);
    const GraphBall cb = c_ball(n, d, CVertex{}, rc);
    return std::pair{same_graph(cay, cb), std::to_string(cay.size()) + " vertices at radius " + std::to_string(rc)};
  });
}

GammaElement random_gamma(const GammaGroup& group, const std::vector<GammaElement>& gens, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len(0, 6);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  GammaElement g;
  for (int k = len(rng); k > 0; --k) g = gamma_mul(group, g, gens[pick(rng)]);
  return g;
}

void suite_gamma(const SuiteParams& p, Report& r) {
  const int n = p.n.value_or(2);
  const int d = p.d.value_or(3);
  const int radius = p.radius.value_or(3);
  const int count = p.count.value_or(50);
  r.params["n"] = n;
  r.params["d"] = d;
  r.params["radius"] = radius;
  r.params["count"] = count;
  r.params["seed"] = p.seed;
  Battery b{r};
  const GammaGroup group(n, d);
  const auto gens = gamma_generators(group);
  const XVertex x0{LampConfig{}, group.base_edge()};

  b.run("generator-count", [&] {
    const std::size_t expected = static_cast<std::size_t>(2 * (n - 1) + 2 * (d - 1));
    return std::pair{gens.size() == expected, std::to_string(gens.size()) + " generators"};
  });
  b.run("orbit-map", [&] {
    const GraphBall cay = cayley_ball_gamma(group, radius);
    const GraphBall xb = x_ball(n, d, x0, radius);
    return std::pair{same_graph(cay, xb), std::to_string(cay.size()) + " vertices"};
  });
  b.run("rotations", [&] {
    bool ok = true;
    for (int i = 0; i < 2; ++i) {
      const GammaElement u{{}, {Syllable{i, 1}}};
      GammaElement acc;
      for (int k = 0; k < d; ++k) acc = gamma_mul(group, acc, u);
      if (acc != GammaElement{}) ok = false;
      if (gamma_apply(group, u, group.pivot(i)) != group.pivot(i)) ok = false;
    }
    return std::pair{ok, std::string("u_i^d = 1 and u_i fixes v_i")};
  });
  b.run("group-axioms", [&] {
    std::mt19937_64 rng(p.seed);
    const auto vs = x_ball(n, d, x0, 1).ids;
    std::size_t fails = 0;
    for (int i = 0; i < count; ++i) {
      const GammaElement a = random_gamma(group, gens, rng);
      const GammaElement c = random_gamma(group, gens, rng);
      const GammaElement e = random_gamma(group, gens, rng);
      bool ok = gamma_mul(group, gamma_mul(group, a, c), e) == gamma_mul(group, a, gamma_mul(group, c, e));
      ok = ok && gamma_mul(group, a, gamma_inverse(group, a)) == GammaElement{};
      ok = ok && gamma_mul(group, gamma_inverse(group, a), a) == GammaElement{};
      for (const auto& id : vs) {
        const XVertex x = XVertex::parse(id);
        ok = ok && gamma_act(group, gamma_mul(group, a, c), x) == gamma_act(group, a, gamma_act(group, c, x));
      }
      if (!ok) ++fails;
    }
    return std::pair{fails == 0, count_detail(fails, static_cast<std::size_t>(count), "random triples")};
  });
}

void suite_dl(const SuiteParams& p, Report& r) {
  const int n = p.n.value_or(2);
  const int radius = p.radius.value_or(3);
  r.params["n"] = n;
  r.params["radius"] = radius;
  Battery b{r};
  const GraphBall zb = z_ball(n, 2, x_origin(0), radius);
  const GraphBall db = dl_ball(n, DLVertex{}, radius);
  b.run("degrees", [&] {
    std::size_t fails = 0;
    std::size_t total = 0;
    for (const GraphBall* g : {&zb, &db}) {
      for (std::size_t v = 0; v < g->size(); ++v) {
        if (g->dist[v] >= radius) continue;
        ++total;
        if (g->degree(static_cast<int>(v)) != 2 * n) ++fails;
      }
    }
    return std::pair{fails == 0, count_detail(fails, total, "interior vertices")};
  });
  b.run("levels", [&] {
    std::size_t fails = 0;
    for (const auto& id : db.ids) {
      const auto comma = id.find(',');
      auto level = [](const std::string& s) {
        const auto dpos = s.find('d');
        return std::stoi(s.substr(1, dpos - 1)) - static_cast<int>(s.size() - dpos - 1);
      };
      if (level(id.substr(0, comma)) + level(id.substr(comma + 1)) != 0) ++fails;
    }
    return std::pair{fails == 0, count_detail(fails, db.size(), "DL vertices")};
  });
  b.run("isomorphic", [&] {
    const auto iso = balls_isomorphic(zb, db, false);
    return std::pair{iso.has_value(), std::to_string(zb.size()) + " vs " + std::to_string(db.size()) + " vertices, " +
                                          std::to_string(zb.edge_count()) + " vs " + std::to_string(db.edge_count()) +
                                          " edges"};
  });
}

// Independent oracle: the cyclic group generated by b meets A non-trivially.
bool power_condition_oracle(const PermutationGroup& a, const PermutationGroup& b) {
  for (const auto& x : b.elements()) {
    if (x.is_identity()) continue;
    const auto cyc = PermutationGroup::generated_by(b.degree(), {x});
    bool meets = false;
    for (const auto& y : cyc.elements()) {
      if (!y.is_identity() && a.contains(y)) meets = true;
    }
    if (!meets) return false;
  }
  return true;
}

void suite_lattice(const SuiteParams& p, Report& r) {
  const PermutationGroup a = p.group_a.value_or(
      PermutationGroup::generated_by(4, {Permutation::from_cycles(4, {{0, 2}, {1, 3}})}));
  const PermutationGroup b = p.group_b.value_or(PermutationGroup::cyclic(4));
  auto gens_json = [](const PermutationGroup& g) {
    auto arr = ordered_json::array();
    for (const auto& x : g.elements()) arr.push_back(x.cycles());
    return arr;
  };
  r.params["A"] = gens_json(a);
  r.params["B"] = gens_json(b);
  Battery bat{r};
  bool value = false;
  bat.run("subgroup", [&] { return std::pair{a.is_subgroup_of(b), std::string("A <= B")}; });
  bat.run("power_condition", [&] {
    value = power_condition(a, b);
    const bool oracle = power_condition_oracle(a, b);
    return std::pair{value == oracle, std::string("power_condition = ") + (value ? "true" : "false") +
                                          ", brute force = " + (oracle ? "true" : "false")};
  });
  r.params["power_condition"] = value;
}

void suite_icc(const SuiteParams& p, Report& r) {
  std::optional<Instance> own;
  const Instance& inst = need_instance(p, own);
  const int count = p.count.value_or(20);
  record_instance(r, p, inst);
  r.params["count"] = count;
  r.params["seed"] = p.seed;
  Battery b{r};
  b.run("conjugates", [&] {
    std::mt19937_64 rng(p.seed);
    std::optional<Element> g;
    for (int attempt = 0; attempt < 10000 && !g; ++attempt) {
      Element w = random_word(inst, rng, 6);
      if (apply(inst, w, Vertex{}) == Vertex{} && !is_identity(inst, w)) g = std::move(w);
    }
    if (!g) return std::pair{false, std::string("no non-trivial element fixing the basepoint sampled")};
    const auto conj = icc_conjugates(inst, *g, count);
    std::size_t fails = 0;
    for (std::size_t i = 0; i < conj.size(); ++i) {
      if (apply(inst, conj[i], Vertex{}) != Vertex{}) ++fails;
      for (std::size_t k = i + 1; k < conj.size(); ++k) {
        if (equal(inst, conj[i], conj[k])) ++fails;
      }
    }
    return std::pair{fails == 0 && conj.size() == static_cast<std::size_t>(count),
                     std::to_string(conj.size()) + " conjugates of " + word_str(inst, *g) + ", " +
                         std::to_string(fails) + " failures"};
  });
}

}  // namespace

Report run_suite(const std::string& name, const SuiteParams& params) {
  static const std::map<std::string, void (*)(const SuiteParams&, Report&)> table{
      {"cocycle", suite_cocycle}, {"embedding", suite_embedding}, {"action", suite_action},
      {"transitivity", suite_transitivity}, {"cayley", suite_cayley}, {"gamma", suite_gamma},
      {"dl", suite_dl}, {"lattice", suite_lattice}, {"icc", suite_icc}};
  const auto it = table.find(name);
  if (it == table.end()) throw Error(ErrorKind::kUnknownSuite, "unknown suite \"" + name + "\"");
  Report r;
  r.suite = name;
  r.params = ordered_json::object();
  it->second(params, r);
  return r;
}

}  // namespace treewreath
