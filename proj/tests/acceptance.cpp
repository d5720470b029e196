// Acceptance criteria 1-11. One PASS/FAIL line per criterion; nonzero exit if
// any criterion fails or exceeds its time limit.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>

#include "treewreath/graphs.hpp"
#include "treewreath/verify.hpp"

using namespace treewreath;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Accumulates failures; `detail` keeps the first one.
struct Tally {
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::string first;

  void expect(bool ok, const std::string& what) {
    ++checked;
    if (ok) return;
    if (failed++ == 0) first = what;
  }
  Outcome outcome(const std::string& unit) const {
    std::string d = std::to_string(checked) + " " + unit + ", " + std::to_string(failed) + " failures";
    if (failed) d += " (first: " + first + ")";
    return {failed == 0, d};
  }
};

bool run(int id, const char* name, double limit, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = secs < limit;
  const bool ok = o.pass && in_time;
  std::printf("%s %2d %-28s %8.3fs (limit %gs)  %s%s\n", ok ? "PASS" : "FAIL", id, name, secs, limit,
              o.detail.c_str(), in_time ? "" : "  [time limit exceeded]");
  std::fflush(stdout);
  return ok;
}

const char kInstances[] = {'A', 'B', 'C'};

template <class Ball>
void interior_degrees(Tally& t, const GraphBall& b, const std::string& tag, Ball check) {
  for (std::size_t v = 0; v < b.size(); ++v) {
    if (b.dist[v] < b.radius) t.expect(check(static_cast<int>(v)), tag + " vertex " + b.ids[v]);
  }
}

Outcome degree_laws(char which) {
  const Instance inst = reference_instance(which);
  const int n = inst.n();
  const int d = inst.degree();
  Tally t;
  const GraphBall xb = x_ball(n, d, x_origin(), 3);
  interior_degrees(t, xb, "X", [&](int v) {
    return xb.degree(v, 1) == 2 * (d - 1) && xb.degree(v, 2) == 2 * (n - 1) && xb.degree(v) == 2 * (d - 1) + 2 * (n - 1);
  });
  const GraphBall zb = z_ball(n, d, x_origin(), 3);
  interior_degrees(t, zb, "Z", [&](int v) { return zb.degree(v) == 2 * (d - 1) * n; });
  const GraphBall cb = c_ball(n, d, CVertex{}, 3);
  interior_degrees(t, cb, "C", [&](int v) {
    return cb.degree(v, 1) == d && cb.degree(v, 2) == n - 1 && cb.degree(v) == d + n - 1;
  });
  Outcome o = t.outcome("interior vertices");
  o.detail = "instance " + std::string(1, which) + ": " + o.detail;
  return o;
}

Outcome cocycle() {
  Tally t;
  for (char which : {'A', 'B'}) {
    const Instance inst = reference_instance(which);
    const auto gens = generators(inst);
    const auto vs = ball(inst.degree(), Vertex{}, 4);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (std::size_t j = 0; j < gens.size(); ++j) {
        const Element st = compose(gens[i], gens[j]);
        for (const auto& v : vs) {
          const Evaluation et = evaluate(inst.rule(), gens[j], v);
          const Evaluation es = evaluate(inst.rule(), gens[i], et.image);
          const Evaluation est = evaluate(inst.rule(), st, v);
          t.expect(est.image == es.image && est.local == es.local * et.local,
                   std::string(1, which) + " pair " + std::to_string(i) + "," + std::to_string(j) + " at " + v.str());
        }
      }
    }
  }
  return t.outcome("(pair, vertex) checks");
}

Outcome embedding_homomorphism() {
  Tally t;
  const int radius = 6;
  for (char which : {'A', 'B'}) {
    const Instance inst = reference_instance(which);
    std::mt19937_64 rng(0);
    for (int k = 0; k < 100; ++k) {
      const Element g = random_word(inst, rng, 6);
      const Element h = random_word(inst, rng, 6);
      const Element gh = compose(g, h);
      const Element ginv = invert(g);
      const auto a = truncate(inst, g, Vertex{}, radius);
      const auto b = truncate(inst, h, apply(inst, ginv, Vertex{}), radius);
      const auto prod = wreath_mul(inst, a, b, radius);
      const auto direct = truncate(inst, gh, Vertex{}, radius);
      bool ok = truncations_agree(inst, prod, direct, Vertex{}, radius) && prod.complete == direct.complete;
      // Pointwise against the cocycle formula rho_{gh}(v) = rho_g(v) rho_h(g^-1 v).
      for (const auto& v : ball(inst.degree(), Vertex{}, radius)) {
        ok = ok && prod.at(v) == coset_compose(rho(inst, g, v), rho(inst, h, apply(inst, ginv, v)));
      }
      t.expect(ok, std::string(1, which) + " pair " + std::to_string(k));
    }
  }
  return t.outcome("word pairs");
}

Outcome action_consistency() {
  Tally t;
  const Instance inst = reference_instance('A');
  const GraphBall xb = x_ball(inst.n(), inst.degree(), x_origin(), 2);
  std::vector<XVertex> xs;
  int reach = 0;
  for (const auto& id : xb.ids) {
    xs.push_back(XVertex::parse(id));
    for (const auto& [v, k] : xs.back().config.values()) reach = std::max(reach, v.length());
  }
  std::mt19937_64 rng(0);
  for (int k = 0; k < 50; ++k) {
    const Element g = random_word(inst, rng, 6);
    // Large enough to hold every image of a lamp within `reach` of the basepoint.
    const int radius = std::max(embed_radius(inst, g), reach + 2 * static_cast<int>(g.length()) + 1);
    const auto emb = embed(inst, g, radius);
    bool ok = true;
    for (const auto& x : xs) ok = ok && wreath_act(inst, emb, x) == gff_act(inst, g, x);
    t.expect(ok, "word " + std::to_string(k));
  }
  Outcome o = t.outcome("words");
  o.detail += " on " + std::to_string(xs.size()) + " X-vertices";
  return o;
}

Outcome transitivity() {
  Tally t;
  const Instance inst = reference_instance('A');
  const auto vs = ball(3, Vertex{}, 2);
  const auto edges = edge_ball(3, 2);
  const std::size_t configs = std::size_t{1} << vs.size();  // n = 2
  for (const auto& e : edges) {
    for (std::size_t mask = 0; mask < configs; ++mask) {
      XVertex x{{}, e};
      for (std::size_t i = 0; i < vs.size(); ++i) {
        if (mask >> i & 1) x.config.set(vs[i], 1);
      }
      const auto trace = reduce_to_zero(inst, x);
      bool ok = trace.steps.size() == x.config.support_size() && trace.final == XVertex{{}, e};
      std::size_t support = x.config.support_size();
      for (const auto& s : trace.steps) {
        ok = ok && s.result.config.support_size() + 1 == support && s.result.edge == e;
        support = s.result.config.support_size();
      }
      t.expect(ok, x.str());
    }
  }
  return t.outcome("(config, edge) inputs");
}

Outcome cayley_gff() {
  Tally t;
  const Instance inst = reference_instance('A');
  const int radius = 4;
  const GraphBall cg = cayley_ball_gff(inst, radius);
  const GraphBall xb = x_ball(inst.n(), inst.degree(), x_origin(), radius);
  t.expect(same_graph(cg, xb), "Cayley ball differs from the X-ball");
  const auto typed = balls_isomorphic(cg, xb, true);
  t.expect(typed.has_value(), "no type-respecting isomorphism");

  // Word problem against the orbit map.
  const XVertex x0 = x_origin();
  std::map<std::string, Element> first;
  std::size_t collisions = 0;
  for (const auto& w : all_words(inst, 4)) {
    auto [it, inserted] = first.emplace(gff_act(inst, w, x0).str(), w);
    if (inserted) continue;
    ++collisions;
    t.expect(equal(inst, w, it->second), "words with orbit image " + it->first);
  }
  t.expect(first.size() == xb.size(), "orbit images do not fill the ball");
  Outcome o = t.outcome("checks");
  o.detail += ", " + std::to_string(collisions) + " orbit collisions";
  return o;
}

Outcome cayley_gamma() {
  Tally t;
  const GammaGroup group(2, 3);
  const int radius = 4;
  const GraphBall cg = cayley_ball_gamma(group, radius);
  const GraphBall xb = x_ball(2, 3, x_origin(), radius);
  t.expect(same_graph(cg, xb), "Cayley ball differs from the X-ball");
  t.expect(balls_isomorphic(cg, xb, true).has_value(), "no type-respecting isomorphism");

  const auto gens = gamma_generators(group);
  const XVertex x0{LampConfig{}, group.base_edge()};
  std::map<std::string, GammaElement> first;
  std::vector<GammaElement> layer{GammaElement{}};
  std::size_t collisions = 0;
  for (int len = 0; len <= radius; ++len) {
    std::vector<GammaElement> next;
    for (const auto& g : layer) {
      auto [it, inserted] = first.emplace(gamma_act(group, g, x0).str(), g);
      if (!inserted) {
        ++collisions;
        t.expect(it->second == g, "gamma words with orbit image " + it->first);
      }
      if (len < radius) {
        for (const auto& s : gens) next.push_back(gamma_mul(group, g, s));
      }
    }
    layer = std::move(next);
  }
  t.expect(first.size() == xb.size(), "orbit images do not fill the ball");
  Outcome o = t.outcome("checks");
  o.detail += ", " + std::to_string(collisions) + " orbit collisions";
  return o;
}

Outcome stabilizer() {
  Tally t;
  const Instance inst = reference_instance('A');
  const XVertex x0 = x_origin();
  const auto vs = ball(3, Vertex{}, 4);
  std::size_t fixing = 0;
  for (const auto& w : all_words(inst, 4)) {
    if (gff_act(inst, w, x0) != x0) continue;
    ++fixing;
    bool in_f = true;
    bool trivial = true;
    for (const auto& v : vs) {
      const Evaluation e = evaluate(inst.rule(), w, v);
      in_f = in_f && inst.f().contains(e.local);
      trivial = trivial && e.image == v && e.local.is_identity();
    }
    t.expect(in_f, "local permutation outside F");
    if (apply(inst, w, Vertex{}) == Vertex{}) {
      t.expect(trivial && is_identity(inst, w), "non-trivial class fixing x0 and the basepoint");
    }
  }
  Outcome o = t.outcome("checks");
  o.detail += " over " + std::to_string(fixing) + " words fixing x0";
  return o;
}

bool verify_iso(const GraphBall& a, const GraphBall& b, const std::vector<int>& m) {
  if (m.size() != a.size() || a.size() != b.size() || m[0] != 0) return false;
  std::set<int> seen(m.begin(), m.end());
  if (seen.size() != m.size()) return false;
  for (std::size_t v = 0; v < a.size(); ++v) {
    std::multiset<int> img;
    for (const auto& e : a.adjacency[v]) img.insert(m[static_cast<std::size_t>(e.to)]);
    std::multiset<int> tgt;
    for (const auto& e : b.adjacency[static_cast<std::size_t>(m[v])]) tgt.insert(e.to);
    if (img != tgt) return false;
  }
  return true;
}

Outcome diestel_leader() {
  Tally t;
  std::string sizes;
  for (int n : {2, 3}) {
    const GraphBall zb = z_ball(n, 2, x_origin(), 3);
    const GraphBall db = dl_ball(n, DLVertex{}, 3);
    const auto m = balls_isomorphic(zb, db, false);
    t.expect(m.has_value() && verify_iso(zb, db, *m), "n=" + std::to_string(n));
    sizes += (sizes.empty() ? "" : ", ") + std::string("n=") + std::to_string(n) + ": " + std::to_string(zb.size()) +
             " vertices";
  }
  Outcome o = t.outcome("ball pairs");
  o.detail += " (" + sizes + ")";
  return o;
}

Outcome lamplighter() {
  Tally t;
  const GraphBall cg = cayley_ball_lampwd(2, 3, 3);
  const GraphBall cb = c_ball(2, 3, CVertex{}, 3);
  t.expect(same_graph(cg, cb), "orbit map does not identify the balls");
  const auto m = balls_isomorphic(cg, cb, true);
  t.expect(m.has_value() && verify_iso(cg, cb, *m), "no isomorphism");
  Outcome o = t.outcome("checks");
  o.detail += " (" + std::to_string(cb.size()) + " vertices)";
  return o;
}

// Every non-identity b in B has a non-identity power in A.
bool power_brute_force(const PermutationGroup& a, const PermutationGroup& b) {
  for (const auto& x : b.elements()) {
    if (x.is_identity()) continue;
    bool hit = false;
    for (Permutation p = x; !p.is_identity(); p = p * x) hit = hit || a.contains(p);
    if (!hit) return false;
  }
  return true;
}

Outcome power() {
  Tally t;
  const auto c4 = PermutationGroup::cyclic(4);
  const auto c2 = PermutationGroup::from_images(4, {{2, 3, 0, 1}});
  const auto s3 = PermutationGroup::symmetric(3);
  const auto stab = point_stabilizer(s3, 0);
  const auto c2_small = PermutationGroup::symmetric(2);
  const auto triv = PermutationGroup::trivial(2);
  t.expect(power_condition(c2, c4), "C2 in C4");
  t.expect(!power_condition(triv, c2_small), "trivial in C2");
  t.expect(!power_condition(stab, s3), "Stab0 in Sym3");
  const std::vector<std::pair<PermutationGroup, PermutationGroup>> pairs{
      {c2, c4}, {triv, c2_small}, {stab, s3}, {PermutationGroup::cyclic(3), s3}, {c4, c4}};
  for (const auto& [a, b] : pairs) t.expect(power_condition(a, b) == power_brute_force(a, b), "brute force mismatch");
  return t.outcome("checks");
}

Outcome icc() {
  Tally t;
  const Instance inst = reference_instance('A');
  std::mt19937_64 rng(0);
  Element g;
  int tries = 0;
  do {
    g = random_word(inst, rng, 6);
    ++tries;
  } while (apply(inst, g, Vertex{}) != Vertex{} || is_identity(inst, g));
  const auto cs = icc_conjugates(inst, g, 20);
  t.expect(cs.size() == 20, "returned " + std::to_string(cs.size()) + " conjugates");
  for (std::size_t i = 0; i < cs.size(); ++i) {
    for (std::size_t j = i + 1; j < cs.size(); ++j) {
      t.expect(!equal(inst, cs[i], cs[j]), "conjugates " + std::to_string(i) + " and " + std::to_string(j));
    }
  }
  Outcome o = t.outcome("pairs");
  o.detail += ", element of length " + std::to_string(g.length()) + " after " + std::to_string(tries) + " draws";
  return o;
}

}  // namespace

int main() {
  bool ok = true;
  for (char which : kInstances) {
    const std::string name = std::string("degree-laws-") + which;
    ok = run(1, name.c_str(), 5, [which] { return degree_laws(which); }) && ok;
  }
  ok = run(2, "cocycle", 5, cocycle) && ok;
  ok = run(3, "embedding-homomorphism", 10, embedding_homomorphism) && ok;
  ok = run(4, "wreath-vs-local-action", 5, action_consistency) && ok;
  ok = run(5, "transitivity", 10, transitivity) && ok;
  ok = run(6, "cayley-gff", 20, cayley_gff) && ok;
  ok = run(6, "cayley-gamma", 20, cayley_gamma) && ok;
  ok = run(7, "stabilizer", 10, stabilizer) && ok;
  ok = run(8, "diestel-leader", 30, diestel_leader) && ok;
  ok = run(9, "lamplighter-cayley", 5, lamplighter) && ok;
  ok = run(10, "power-condition", 1, power) && ok;
  ok = run(11, "icc", 10, icc) && ok;
  std::printf("%s\n", ok ? "ALL PASS" : "SOME CRITERIA FAILED");
  return ok ? 0 : 1;
}
