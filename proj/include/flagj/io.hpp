#pragma once

// JSON configs and report serialization. Rationals travel as strings ("p/q"), Gaussian
// rationals as "p/q+r/si"; plain JSON integers are accepted, floats are rejected.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "flagj/classify.hpp"
#include "flagj/gacs.hpp"
#include "flagj/liealg.hpp"
#include "flagj/rootsystem.hpp"
#include "flagj/twisted.hpp"

namespace flagj {

using Json = nlohmann::ordered_json;

struct RunConfig {
  AlgebraSpec algebra;
  std::optional<RegularElement> H;
  std::optional<Structure> structure;
  std::optional<std::vector<std::size_t>> theta;  // simple-root positions
  SeedMap seeds;
  std::optional<std::vector<int>> signs;
  std::optional<InvariantTwoForm> omega;
};

/// The algebra comes from the config ("algebra": {"family":"A","rank":3} or "A3") unless
/// given explicitly; both present and different is an error. Throws InputError.
RunConfig parse_config(const Json& j, const std::optional<AlgebraSpec>& algebra);
Json load_json_file(const std::string& path);

Rational rational_from_json(const Json& j, const std::string& what);
Gaussian gaussian_from_json(const Json& j, const std::string& what);

Structure structure_from_json(const Json& j, const RootSystem& rs);
Json structure_to_json(const Structure& s, const RootSystem& rs);
Json block_to_json(const RootJ& j);
InvariantTwoForm two_form_from_json(const Json& j, const RootSystem& rs);
Json two_form_to_json(const InvariantTwoForm& w, const RootSystem& rs);
Json three_form_to_json(const InvariantThreeForm& om, const RootSystem& rs);
Json signed_selection_to_json(const std::vector<int>& p, const RootSystem& rs);

}  // namespace flagj
