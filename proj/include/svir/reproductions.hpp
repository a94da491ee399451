#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "svir/superalgebra.hpp"

namespace svir {

/// Outcome of one built-in reproduction: one JSON object per case.
struct LemmaReport {
  std::string name;
  nlohmann::ordered_json cases = nlohmann::ordered_json::array();
  bool pass = true;

  nlohmann::ordered_json to_json() const;
};

/// "lemma3.3", "lemma4.4i", "lemma4.4ii", "lemma4.7", "lemma4.1-derivation".
const std::vector<std::string>& lemma_names();

/// Runs a named reproduction. `family` only matters for lemma3.3, which runs
/// the half-integer sector when given svir12 (svir0 otherwise). Throws
/// std::invalid_argument for an unknown name.
LemmaReport run_lemma(std::string_view name, Family family = Family::SVir0);

}  // namespace svir
