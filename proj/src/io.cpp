#include "treewreath/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "treewreath/error.hpp"

namespace treewreath {

namespace {

std::vector<std::vector<int>> image_lists(const nlohmann::json& j, const char* field) {
  if (!j.is_array()) throw Error(ErrorKind::kParse, std::string(field) + " must be an array of image arrays");
  std::vector<std::vector<int>> out;
  for (const auto& g : j) {
    if (!g.is_array()) throw Error(ErrorKind::kParse, std::string(field) + " entries must be arrays");
    std::vector<int> img;
    for (const auto& x : g) {
      if (!x.is_number_integer()) throw Error(ErrorKind::kParse, std::string(field) + " images must be integers");
      img.push_back(x.get<int>());
    }
    out.push_back(std::move(img));
  }
  return out;
}

int int_field(const nlohmann::json& j, const char* field) {
  if (!j.contains(field)) throw Error(ErrorKind::kParse, std::string("instance is missing \"") + field + "\"");
  if (!j[field].is_number_integer()) throw Error(ErrorKind::kParse, std::string("\"") + field + "\" must be an integer");
  return j[field].get<int>();
}

const nlohmann::json& array_field(const nlohmann::json& j, const char* field) {
  if (!j.contains(field)) throw Error(ErrorKind::kParse, std::string("instance is missing \"") + field + "\"");
  return j[field];
}

ordered_json group_json(const PermutationGroup& g) {
  ordered_json j;
  const Classification c = classify(g);
  j["order"] = g.order();
  j["transitive"] = c.transitive;
  j["semiregular"] = c.semiregular;
  j["regular"] = c.regular;
  j["orbits"] = c.orbits;
  auto elems = ordered_json::array();
  for (const auto& p : g.elements()) elems.push_back(p.cycles());
  j["elements"] = std::move(elems);
  return j;
}

}  // namespace

Instance parse_instance(const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorKind::kParse, "instance must be a JSON object");
  const int d = int_field(j, "d");
  const int a = int_field(j, "base_color");
  if (d < 3 || d > kMaxDegree) throw Error(ErrorKind::kDomain, "instance degree must lie in [3, 8]");
  auto f = PermutationGroup::from_images(d, image_lists(array_field(j, "F"), "F"));
  auto fp = PermutationGroup::from_images(d, image_lists(array_field(j, "Fprime"), "Fprime"));
  return make_instance(d, std::move(f), std::move(fp), a);
}

Instance parse_instance_text(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::kParse, std::string("invalid JSON: ") + e.what());
  }
  return parse_instance(j);
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kParse, "cannot open instance file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_instance_text(ss.str());
}

ordered_json instance_json(const Instance& inst) {
  ordered_json j;
  j["d"] = inst.degree();
  j["base_color"] = inst.base_color();
  j["n"] = inst.n();
  j["F"] = group_json(inst.f());
  j["Fprime"] = group_json(inst.fp());
  j["Fprime_base_order"] = inst.fp_base().order();
  auto reps = ordered_json::array();
  for (const auto& r : inst.cosets().coset_reps()) reps.push_back(r.cycles());
  j["coset_reps"] = std::move(reps);
  auto sig = ordered_json::array();
  for (const auto& s : generator_sigmas(inst)) {
    ordered_json e;
    e["sigma"] = s.cycles();
    e["alpha"] = inst.alpha(s);
    e["type"] = inst.f().contains(s) ? 1 : 2;
    sig.push_back(std::move(e));
  }
  j["generator_sigmas"] = std::move(sig);
  if (inst.f_regular()) {
    auto gens = ordered_json::array();
    for (const auto& g : generators(inst)) {
      const auto& label = *g.letters().front().label;
      ordered_json e;
      e["name"] = generator_name(inst, label);
      e["pivot"] = label.pivot;
      e["sigma"] = label.sigma.cycles();
      e["type"] = is_tree_move(inst, label) ? 1 : 2;
      gens.push_back(std::move(e));
    }
    j["generators"] = std::move(gens);
  }
  return j;
}

PermutationGroup parse_group(const nlohmann::json& j, int degree) {
  auto gens = image_lists(j, "group");
  if (!gens.empty()) degree = static_cast<int>(gens.front().size());
  return PermutationGroup::from_images(degree, gens);
}

std::string word_str(const Instance& inst, const Element& g) {
  if (g.length() == 0) return "1";
  std::string s;
  for (const auto& l : g.letters()) {
    if (!s.empty()) s += ' ';
    if (l.label) {
      s += generator_name(inst, *l.label);
    } else {
      s += "[" + portrait_json(*l.forward).dump() + "]";
    }
  }
  return s;
}

Element parse_word(const Instance& inst, std::string_view text) {
  const auto sigmas = generator_sigmas(inst);
  Element out;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    if (tok == "1") continue;
    bool inverse = false;
    if (tok.size() > 3 && tok.ends_with("^-1")) {
      inverse = true;
      tok.resize(tok.size() - 3);
    }
    int pivot = -1;
    int k = -1;
    char trailing = 0;
    if (std::sscanf(tok.c_str(), "g%d.s%d%c", &pivot, &k, &trailing) != 2 || k < 0 ||
        k >= static_cast<int>(sigmas.size())) {
      throw Error(ErrorKind::kParse, "bad generator token \"" + tok + "\"");
    }
    Element g = generator(inst, pivot, sigmas[static_cast<std::size_t>(k)]);
    out = compose(out, inverse ? invert(g) : g);
  }
  return out;
}

ordered_json portrait_json(const Portrait& p) {
  ordered_json j;
  j["anchor"] = p.anchor.str();
  j["anchor_image"] = p.anchor_image.str();
  auto devs = ordered_json::array();
  for (const auto& [v, s] : p.deviations) devs.push_back(ordered_json{{"vertex", v.str()}, {"perm", s.images()}});
  j["deviations"] = std::move(devs);
  return j;
}

ordered_json truncation_json(const WreathTruncation& t, const Instance& inst) {
  ordered_json j;
  j["center"] = t.center.str();
  j["radius"] = t.radius;
  j["complete"] = t.complete;
  auto as = ordered_json::array();
  for (const auto& [v, p] : t.assignments) as.push_back(ordered_json{{"vertex", v.str()}, {"perm", p}});
  j["assignments"] = std::move(as);
  j["gamma"] = word_str(inst, t.gamma);
  return j;
}

ordered_json gamma_json(const GammaElement& g) {
  ordered_json j;
  auto lamp = ordered_json::array();
  for (const auto& [v, k] : g.lamp.values()) lamp.push_back(ordered_json{{"vertex", v.str()}, {"value", k}});
  j["lamp"] = std::move(lamp);
  j["word"] = g.word_str();
  return j;
}

ordered_json reduction_json(const XVertex& start, const ReductionTrace& trace) {
  ordered_json j;
  j["start"] = start.str();
  auto steps = ordered_json::array();
  for (const auto& s : trace.steps) {
    ordered_json e;
    e["vertex"] = s.vertex.str();
    e["sigma"] = s.sigma.cycles();
    e["h"] = portrait_json(*s.h.letters().front().forward);
    e["result"] = s.result.str();
    e["support"] = s.result.config.support_size();
    steps.push_back(std::move(e));
  }
  j["steps"] = std::move(steps);
  j["final"] = trace.final.str();
  return j;
}

}  // namespace treewreath
