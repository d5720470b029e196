#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "treewreath/elements.hpp"
#include "treewreath/io.hpp"

namespace treewreath {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Report {
  std::string suite;
  ordered_json params;
  std::vector<Check> checks;

  bool overall() const;
  ordered_json json() const;
};

/// Inputs shared by all suites; each suite reads what it needs and records
/// the values it used in Report::params.
struct SuiteParams {
  std::optional<Instance> instance;
  std::string instance_name = "A";
  std::optional<int> n;
  std::optional<int> d;
  std::optional<int> radius;
  std::optional<int> count;
  std::uint64_t seed = 0;
  std::optional<PermutationGroup> group_a;
  std::optional<PermutationGroup> group_b;
};

const std::vector<std::string>& suite_names();
/// Throws Error(kUnknownSuite) for names outside suite_names().
Report run_suite(const std::string& name, const SuiteParams& params);

/// Reference instances: A = (3, C3, Sym3), B = (4, C4, D4), C = (4, Klein, Sym4).
Instance reference_instance(char which);

/// Uniformly random length in [0, max_length], uniform generators.
Element random_word(const Instance& inst, std::mt19937_64& rng, int max_length);

/// All generator words of length <= max_length in lexicographic order of
/// generator indices, shortest first.
std::vector<Element> all_words(const Instance& inst, int max_length);

}  // namespace treewreath
