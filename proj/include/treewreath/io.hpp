#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "treewreath/elements.hpp"
#include "treewreath/graphs.hpp"
#include "treewreath/wreath.hpp"

namespace treewreath {

using ordered_json = nlohmann::ordered_json;

/// {"d":3,"F":[[1,2,0]],"Fprime":[[1,2,0],[1,0,2]],"base_color":0}.
/// Throws Error(kParse) for missing or mistyped fields; group and instance
/// validation errors propagate unchanged.
Instance parse_instance(const nlohmann::json& j);
Instance parse_instance_text(std::string_view text);
Instance load_instance(const std::string& path);
ordered_json instance_json(const Instance& inst);

/// Array of image arrays; an empty array gives the trivial group of `degree`.
PermutationGroup parse_group(const nlohmann::json& j, int degree);

/// Generator words as "g0.s1 g1.s0" (rightmost factor acts first), "1" for
/// the identity. Non-generator letters are written as "[portrait]".
std::string word_str(const Instance& inst, const Element& g);
/// Accepts "g<pivot>.s<k>" tokens, optionally suffixed "^-1", and "1".
Element parse_word(const Instance& inst, std::string_view text);

ordered_json portrait_json(const Portrait& p);
ordered_json truncation_json(const WreathTruncation& t, const Instance& inst);
ordered_json gamma_json(const GammaElement& g);
ordered_json reduction_json(const XVertex& start, const ReductionTrace& trace);

}  // namespace treewreath
