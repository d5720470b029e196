#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "support.hpp"
#include "treewreath/verify.hpp"
#include "treewreath/wreath.hpp"

using namespace treewreath;
using testing::error_kind;

namespace {

Vertex V(std::string_view s) { return Vertex::parse(s); }
Permutation P(std::initializer_list<int> img) { return Permutation::from_images(img); }

// alpha by coset membership: sigma r_k F = r_j F iff r_j^-1 sigma r_k lies in F.
CosetPermutation alpha_oracle(const Instance& inst, const Permutation& sigma) {
  const auto& reps = inst.cosets().coset_reps();
  CosetPermutation out(reps.size(), -1);
  for (std::size_t k = 0; k < reps.size(); ++k) {
    for (std::size_t j = 0; j < reps.size(); ++j) {
      if (inst.f().contains(reps[j].inverse() * sigma * reps[k])) out[k] = static_cast<int>(j);
    }
  }
  return out;
}

// rho_g on ball(e, radius), from breadth-first evaluation over a larger ball.
std::map<Vertex, CosetPermutation> rho_oracle(const Instance& inst, const Element& g, int radius) {
  int reach = 0;
  for (const auto& l : g.letters()) reach = std::max(reach, distance(Vertex{}, l.forward->anchor_image) + 1);
  const auto vs = ball(inst.degree(), Vertex{}, radius + 2 * reach + static_cast<int>(g.length()));
  const auto ev = testing::word_oracle(inst, g, vs);
  std::map<Vertex, CosetPermutation> out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (ev[i].first.length() <= radius) out[ev[i].first] = alpha_oracle(inst, ev[i].second);
  }
  return out;
}

std::vector<Element> sample_words(const Instance& inst, std::uint64_t seed, int count, int max_len) {
  std::mt19937_64 rng(seed);
  std::vector<Element> out;
  for (int i = 0; i < count; ++i) out.push_back(random_word(inst, rng, max_len));
  return out;
}

}  // namespace

TEST_CASE("rho agrees with the coset oracle") {
  for (char which : {'A', 'B', 'C'}) {
    const Instance inst = reference_instance(which);
    for (const auto& s : inst.fp().elements()) CHECK(inst.alpha(s) == alpha_oracle(inst, s));
    for (const auto& g : sample_words(inst, 23, 8, 3)) {
      const auto oracle = rho_oracle(inst, g, 3);
      CHECK(oracle.size() == tree_ball_size(inst.degree(), 3));
      for (const auto& [v, r] : oracle) CHECK(rho(inst, g, v) == r);
    }
  }
}

TEST_CASE("embedding examples") {
  const Instance inst = reference_instance('A');
  const Element h = generator(inst, 0, P({0, 2, 1}));
  const WreathTruncation t = embed(inst, h, 2);
  CHECK(t.complete);
  CHECK(t.n == 2);
  CHECK(t.assignments.size() == 1);
  CHECK(t.at(Vertex{}) == CosetPermutation{1, 0});
  CHECK(t.at(V("12")) == CosetPermutation{0, 1});
  CHECK(error_kind([&] { t.at(V("120")); }) == ErrorKind::kRadius);
  CHECK(embed_radius(inst, h) == 0);

  const Element rot = generator(inst, 1, P({1, 2, 0}));
  CHECK(embed_radius(inst, rot) == 0);
  CHECK(embed(inst, rot, 3).assignments.empty());

  const Element far = make_portrait(inst, V("01"), V("01"), {{V("01"), P({0, 2, 1})}});
  CHECK(embed_radius(inst, far) == 2);
  CHECK(error_kind([&] { embed(inst, far, 1); }) == ErrorKind::kRadius);
  CHECK(embed(inst, far, 2).assignments.size() == 1);
  CHECK(error_kind([&] { truncate(inst, far, Vertex{}, -1); }) == ErrorKind::kRadius);
  CHECK_FALSE(truncate(inst, far, Vertex{}, 1).complete);
}

TEST_CASE("embedding matches rho pointwise") {
  for (char which : {'A', 'B'}) {
    const Instance inst = reference_instance(which);
    for (const auto& g : sample_words(inst, 29, 15, 4)) {
      const int need = embed_radius(inst, g);
      const int r = std::max(need, 2);
      const auto t = embed(inst, g, r);
      CHECK(t.complete);
      const auto oracle = rho_oracle(inst, g, r);
      int moved_max = 0;
      for (const auto& [v, expect] : oracle) {
        CHECK(t.at(v) == expect);
        CHECK((t.assignments.count(v) == 1) == !coset_is_identity(expect));
        if (expect[0] != 0) moved_max = std::max(moved_max, v.length());
      }
      if (r == need) CHECK(moved_max == need);
    }
  }
}

TEST_CASE("embedding is a homomorphism") {
  for (char which : {'A', 'B', 'C'}) {
    const Instance inst = reference_instance(which);
    const auto words = sample_words(inst, 31, 20, 3);
    for (std::size_t i = 0; i + 1 < words.size(); i += 2) {
      const Element& g = words[i];
      const Element& h = words[i + 1];
      const Element gh = compose(g, h);
      const int r = std::max({embed_radius(inst, g), embed_radius(inst, h), embed_radius(inst, gh), 2});
      const auto a = embed(inst, g, r);
      // Centered at g^-1 e so that the product covers ball(e, r).
      const auto b = truncate(inst, h, apply(inst, invert(g), Vertex{}), r);
      const auto prod = wreath_mul(inst, a, b, r);
      CHECK(prod.complete);
      CHECK(truncations_agree(inst, prod, embed(inst, gh, r), Vertex{}, r));
      // Pointwise cocycle rule for the lamp part.
      for (const auto& v : ball(inst.degree(), Vertex{}, r)) {
        CHECK(prod.at(v) == coset_compose(rho(inst, g, v), rho(inst, h, apply(inst, invert(g), v))));
      }
    }
  }
}

TEST_CASE("wreath_mul radius bookkeeping") {
  const Instance inst = reference_instance('A');
  const Element s = generator(inst, 1, P({1, 2, 0}));  // moves the basepoint to "0"
  const auto a = embed(inst, s, 3);
  const auto b = embed(inst, s, 3);
  const auto p = wreath_mul(inst, a, b);
  CHECK(p.radius == 3 - distance(apply(inst, invert(s), Vertex{}), Vertex{}));
  CHECK(error_kind([&] { wreath_mul(inst, a, b, 3); }) == ErrorKind::kRadius);
  CHECK(wreath_mul(inst, a, b, 1).radius == 1);
  const auto tiny = embed(inst, s, 0);
  CHECK(error_kind([&] { wreath_mul(inst, tiny, tiny); }) == ErrorKind::kRadius);
  auto other = a;
  other.n = 3;
  CHECK(error_kind([&] { wreath_mul(inst, a, other); }) == ErrorKind::kRadius);
  CHECK_FALSE(truncations_agree(inst, a, embed(inst, invert(s), 3), Vertex{}, 3));
  CHECK(truncations_agree(inst, a, embed(inst, s, 3), Vertex{}, 2));
}

TEST_CASE("gamma group construction") {
  CHECK(error_kind([] { GammaGroup(1, 3); }) == ErrorKind::kDomain);
  CHECK(error_kind([] { GammaGroup(2, 2); }) == ErrorKind::kDomain);
  CHECK(error_kind([] { GammaGroup(2, 9); }) == ErrorKind::kDomain);
  for (int n : {2, 3}) {
    for (int d : {3, 4}) {
      const GammaGroup g(n, d);
      const auto gens = gamma_generators(g);
      CHECK(gens.size() == static_cast<std::size_t>(2 * (n - 1) + 2 * (d - 1)));
      int moves = 0;
      for (const auto& x : gens) moves += gamma_is_tree_move(x) ? 1 : 0;
      CHECK(moves == 2 * (d - 1));
      for (const auto& x : gens) {
        bool has_inverse = false;
        for (const auto& y : gens) has_inverse = has_inverse || gamma_mul(g, x, y) == GammaElement{};
        CHECK(has_inverse);
      }
    }
  }
}

TEST_CASE("rotations") {
  const GammaGroup g(2, 3);
  CHECK(g.rotation() == P({1, 2, 0}));
  CHECK(g.pivot(1) == V("0"));
  const Element u0 = g.syllable(0, 1);
  const Element u1 = g.syllable(1, 1);
  CHECK(evaluate(g.rule(), u0, Vertex{}).image == Vertex{});
  CHECK(evaluate(g.rule(), u0, V("0")).image == V("1"));
  CHECK(evaluate(g.rule(), u0, V("20")).image == V("01"));
  CHECK(evaluate(g.rule(), u1, V("0")).image == V("0"));
  CHECK(evaluate(g.rule(), u1, Vertex{}).image == V("01"));
  for (const auto& v : ball(3, Vertex{}, 3)) {
    CHECK(evaluate(g.rule(), u0, v).local == g.rotation());
    CHECK(evaluate(g.rule(), u1, v).local == g.rotation());
  }
  const Element cube = compose(u0, compose(u0, u0));
  for (const auto& v : ball(3, Vertex{}, 3)) CHECK(evaluate(g.rule(), cube, v).image == v);
}

TEST_CASE("syllable normalization") {
  const GammaGroup g(2, 3);
  using S = std::vector<Syllable>;
  CHECK(normalize_syllables(g, S{{0, 1}, {0, 2}}).empty());
  CHECK(normalize_syllables(g, S{{0, 1}, {1, 3}, {0, 1}}) == S{{0, 2}});
  CHECK(normalize_syllables(g, S{{1, -1}}) == S{{1, 2}});
  CHECK(normalize_syllables(g, S{{0, 1}, {1, 1}, {1, 2}, {0, 2}}).empty());
  CHECK((GammaElement{{}, S{{0, 2}, {1, 1}}}.word_str()) == "u0^2 u1^1");
  CHECK(GammaElement{}.word_str() == "1");
}

TEST_CASE("gamma group axioms and action") {
  for (int n : {2, 3}) {
    const GammaGroup g(n, 3);
    const auto gens = gamma_generators(g);
    std::mt19937_64 rng(37);
    std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
    auto random_elem = [&] {
      GammaElement x;
      for (int i = 0; i < 5; ++i) x = gamma_mul(g, x, gens[pick(rng)]);
      return x;
    };
    XVertex origin{LampConfig{}, g.base_edge()};
    for (int trial = 0; trial < 30; ++trial) {
      const GammaElement a = random_elem();
      const GammaElement b = random_elem();
      const GammaElement c = random_elem();
      CHECK(gamma_mul(g, gamma_mul(g, a, b), c) == gamma_mul(g, a, gamma_mul(g, b, c)));
      CHECK(gamma_mul(g, a, gamma_inverse(g, a)) == GammaElement{});
      CHECK(gamma_mul(g, gamma_inverse(g, a), a) == GammaElement{});
      CHECK(gamma_mul(g, a, GammaElement{}) == a);
      CHECK(gamma_act(g, gamma_mul(g, a, b), origin) == gamma_act(g, a, gamma_act(g, b, origin)));
      for (const auto& v : ball(3, Vertex{}, 2)) {
        CHECK(gamma_apply(g, gamma_mul(g, a, b), v) == gamma_apply(g, a, gamma_apply(g, b, v)));
      }
      for (std::size_t i = 1; i < a.word.size(); ++i) CHECK(a.word[i].pivot != a.word[i - 1].pivot);
      for (const auto& [v, k] : a.lamp.values()) CHECK((k > 0 && k < n));
    }
  }
}

TEST_CASE("gamma generators move the origin to neighbors") {
  const GammaGroup g(2, 3);
  const XVertex origin{LampConfig{}, g.base_edge()};
  for (const auto& x : gamma_generators(g)) {
    const XVertex y = gamma_act(g, x, origin);
    CHECK(y != origin);
    if (gamma_is_tree_move(x)) {
      CHECK(y.config.empty());
      // The new edge shares the pivot with the base edge.
      const Vertex p = g.pivot(x.word.front().pivot);
      CHECK((y.edge.base == p || y.edge.far() == p));
    } else {
      CHECK(y.edge == origin.edge);
      CHECK(y.config.support_size() == 1);
    }
  }
}
