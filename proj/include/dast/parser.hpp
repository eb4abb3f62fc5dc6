#pragma once

#include <string>

#include "dast/logic.hpp"

namespace dast {

struct ParseOptions {
  /// Require every symbol used in rules/facts to be declared as an intuition.
  bool strict_symbols = false;
};

/// Parses rule-file source text. Throws Parse on syntax errors and
/// Validation on structural ones (range restriction, cyclic bindings, ...).
SemanticLogic parse_logic(const std::string& source, const ParseOptions& options = {});

SemanticLogic load_logic_file(const std::string& path, const ParseOptions& options = {});

}  // namespace dast
