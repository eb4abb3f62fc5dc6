#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "dast/engine.hpp"
#include "dast/judgment.hpp"

namespace dast {

using Json = nlohmann::json;  // object keys serialize sorted

/// Rounds to 12 significant digits so reports serialize identically across
/// runs and platforms.
double round12(double v);

Json lattice_to_json(const Lattice& lattice);
Lattice lattice_from_json(const Json& j);
Lattice load_lattice_file(const std::string& path);

Json judgment_to_json(const JudgmentVector& j);
JudgmentVector judgment_from_json(const Json& j);
JudgmentVector load_judgment_file(const std::string& path);

Json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace dast
