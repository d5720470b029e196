#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "treewreath/error.hpp"
#include "treewreath/graphs.hpp"
#include "treewreath/io.hpp"
#include "treewreath/verify.hpp"

using namespace treewreath;

namespace {

struct ExportFlags {
  bool dot = false;
  bool graphml = false;
  bool json = false;

  void attach(CLI::App* cmd) {
    auto* d = cmd->add_flag("--dot", dot, "Emit Graphviz DOT");
    auto* g = cmd->add_flag("--graphml", graphml, "Emit GraphML");
    auto* j = cmd->add_flag("--json", json, "Emit adjacency JSON");
    d->excludes(g)->excludes(j);
    g->excludes(j);
  }
};

void print_ball(const GraphBall& b, const ExportFlags& fmt, ordered_json summary) {
  if (fmt.dot) {
    std::cout << export_dot(b);
  } else if (fmt.graphml) {
    std::cout << export_graphml(b);
  } else if (fmt.json) {
    std::cout << export_json(b) << "\n";
  } else {
    summary["center"] = b.center();
    summary["vertices"] = b.size();
    summary["edges"] = b.edge_count();
    std::cout << summary.dump(2) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tree automorphism groups with almost prescribed local action, their wreath embeddings and graphs"};
  app.require_subcommand(1);

  std::string inst_path;
  auto* inspect = app.add_subcommand("inspect", "Validate an instance file and print its derived data");
  inspect->add_option("instance", inst_path, "Instance JSON file")->required();

  std::string graph;
  int n = 2;
  int d = 3;
  int radius = 2;
  ExportFlags ball_fmt;
  auto* ball_cmd = app.add_subcommand("ball", "Build a ball of X, C, Z or DL around its base vertex");
  ball_cmd->add_option("--graph", graph, "x | c | z | dl")->required()->check(CLI::IsMember({"x", "c", "z", "dl"}));
  ball_cmd->add_option("--n", n, "Lamp alphabet size");
  ball_cmd->add_option("--d", d, "Tree degree (ignored for dl)");
  ball_cmd->add_option("--radius", radius, "Ball radius")->required();
  ball_fmt.attach(ball_cmd);

  std::string config_text;
  std::string edge_text;
  auto* reduce = app.add_subcommand("reduce", "Trace the support reduction of an X-vertex");
  reduce->add_option("instance", inst_path, "Instance JSON file")->required();
  reduce->add_option("--config", config_text, "Lamp configuration \"v:k,...\"");
  reduce->add_option("--edge", edge_text, "Edge \"word:color\"")->required();

  ExportFlags cayley_fmt;
  auto* cayley = app.add_subcommand("cayley", "Cayley ball of G(F,F')* named by orbit images in X");
  cayley->add_option("instance", inst_path, "Instance JSON file")->required();
  cayley->add_option("--radius", radius, "Ball radius")->required();
  cayley_fmt.attach(cayley);

  std::string suite;
  std::string instance_opt;
  std::optional<int> opt_n;
  std::optional<int> opt_d;
  std::optional<int> opt_count;
  std::optional<int> opt_radius;
  std::uint64_t seed = 0;
  std::string group_a;
  std::string group_b;
  auto* verify = app.add_subcommand("verify", "Run a named verification suite and print its report");
  verify->add_option("--suite", suite, "Suite name")->required();
  verify->add_option("--instance", instance_opt, "Instance JSON file (default: reference instance A)");
  verify->add_option("--n", opt_n, "Lamp alphabet size (gamma, dl)");
  verify->add_option("--d", opt_d, "Tree degree (gamma) or group degree (lattice)");
  verify->add_option("--seed", seed, "Seed for randomized checks");
  verify->add_option("--count", opt_count, "Number of random samples");
  verify->add_option("--group-a", group_a, "Subgroup A as a JSON array of image arrays (lattice)");
  verify->add_option("--group-b", group_b, "Group B as a JSON array of image arrays (lattice)");
  verify->add_option("--radius", opt_radius, "Radius");

  auto* compare = app.add_subcommand("compare-dl", "Search for a center-fixing isomorphism Z_{n,2} ball -> DL(n,n) ball");
  compare->add_option("--n", n, "Lamp alphabet size")->required();
  compare->add_option("--radius", radius, "Ball radius")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*inspect) {
      std::cout << instance_json(load_instance(inst_path)).dump(2) << "\n";
      return 0;
    }
    if (*ball_cmd) {
      ordered_json s;
      s["graph"] = graph;
      s["n"] = n;
      if (graph != "dl") s["d"] = d;
      s["radius"] = radius;
      GraphBall b;
      if (graph == "x") {
        b = x_ball(n, d, x_origin(0), radius);
      } else if (graph == "c") {
        b = c_ball(n, d, CVertex{}, radius);
      } else if (graph == "z") {
        b = z_ball(n, d, x_origin(0), radius);
      } else {
        b = dl_ball(n, DLVertex{}, radius);
      }
      print_ball(b, ball_fmt, std::move(s));
      return 0;
    }
    if (*reduce) {
      const Instance inst = load_instance(inst_path);
      const XVertex x{LampConfig::parse(config_text), EdgeRef::parse(edge_text)};
      for (const auto& [v, k] : x.config.values()) {
        if (k >= inst.n()) throw Error(ErrorKind::kDomain, "lamp value at " + v.str() + " exceeds n - 1");
      }
      std::cout << reduction_json(x, reduce_to_zero(inst, x)).dump(2) << "\n";
      return 0;
    }
    if (*cayley) {
      const Instance inst = load_instance(inst_path);
      const GraphBall b = cayley_ball_gff(inst, radius);
      ordered_json s;
      s["radius"] = radius;
      s["matches_x_ball"] = same_graph(b, x_ball(inst.n(), inst.degree(), x_origin(inst.base_color()), radius));
      print_ball(b, cayley_fmt, std::move(s));
      return 0;
    }
    if (*verify) {
      SuiteParams p;
      if (!instance_opt.empty()) {
        p.instance = load_instance(instance_opt);
        p.instance_name = instance_opt;
      }
      p.n = opt_n;
      p.d = opt_d;
      p.count = opt_count;
      p.radius = opt_radius;
      p.seed = seed;
      auto group = [&](const std::string& text, int degree) {
        nlohmann::json j;
        try {
          j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
          throw Error(ErrorKind::kParse, std::string("invalid group JSON: ") + e.what());
        }
        return parse_group(j, degree);
      };
      // An empty generator list for A takes its degree from B.
      if (!group_b.empty()) p.group_b = group(group_b, opt_d.value_or(4));
      if (!group_a.empty()) p.group_a = group(group_a, p.group_b ? p.group_b->degree() : opt_d.value_or(4));
      const Report r = run_suite(suite, p);
      std::cout << r.json().dump(2) << "\n";
      return r.overall() ? 0 : 1;
    }
    if (*compare) {
      const GraphBall zb = z_ball(n, 2, x_origin(0), radius);
      const GraphBall db = dl_ball(n, DLVertex{}, radius);
      const auto iso = balls_isomorphic(zb, db, false);
      ordered_json j;
      j["n"] = n;
      j["radius"] = radius;
      j["z_vertices"] = zb.size();
      j["dl_vertices"] = db.size();
      j["z_edges"] = zb.edge_count();
      j["dl_edges"] = db.edge_count();
      j["isomorphic"] = iso.has_value();
      if (iso) {
        auto m = ordered_json::object();
        for (std::size_t i = 0; i < iso->size(); ++i) m[zb.ids[i]] = db.ids[static_cast<std::size_t>((*iso)[i])];
        j["mapping"] = std::move(m);
      }
      std::cout << j.dump(2) << "\n";
      return iso ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
