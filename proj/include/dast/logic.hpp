#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dast/term.hpp"

namespace dast {

/// A production rule: fire when all premises match, assert the conclusions.
struct Rule {
  int id = 0;  // unique across the whole logic, assigned in source order
  std::string theory;
  std::vector<Term> premises;     // non-empty
  std::vector<Term> conclusions;  // non-empty, variables a subset of premise variables
  std::optional<std::string> tag;

  bool operator==(const Rule& other) const = default;
};

/// A named bundle of intuition symbols, rules and ground facts.
struct Theory {
  std::string name;
  std::vector<std::string> intuitions;  // declaration order, no duplicates
  std::vector<Rule> rules;
  std::vector<Term> facts;  // ground modulo `#` text symbols

  bool operator==(const Theory& other) const = default;
};

/// `define #Sym = term`: maps a text symbol to the term it abbreviates.
struct Binding {
  std::string symbol;  // includes the leading '#'
  Term value;
  int theory_index = -1;  // theory block the define appeared in; -1 = top level

  bool operator==(const Binding& other) const = default;
};

struct SemanticLogic {
  std::vector<Theory> theories;
  std::vector<Binding> bindings;  // declaration order

  bool operator==(const SemanticLogic& other) const = default;

  const Binding* find_binding(const std::string& symbol) const;
  const Rule* find_rule(int id) const;
  std::vector<const Rule*> all_rules() const;  // ascending id
  /// Theory index owning rule `id`, or -1.
  int theory_of_rule(int id) const;

  /// Expands `#` text symbols in `t` recursively. Throws Validation on
  /// unknown symbols or cyclic definitions.
  Term expand(const Term& t) const;

  /// Initial working memory for a text: the designated binding's expansion
  /// plus every theory fact (expanded). A text that is itself a `#` symbol
  /// selects that binding; otherwise the default symbol `#S` is used; if no
  /// binding applies, words of the text matching intuition symbols become
  /// atoms. Throws Validation when nothing applies.
  std::vector<Term> quantize(const std::string& text) const;

  /// Stable identifier derived from the canonical rendering.
  std::string id() const;
};

struct LogicStats {
  int theory_count = 0;
  int dependency_count = 0;     // ordered theory pairs linked by symbol use
  int model_element_count = 0;  // distinct non-operator symbols
  int operator_count = 0;       // distinct infix-position / punctuation symbols
  int rule_count = 0;           // rules after alternative expansion

  bool operator==(const LogicStats& other) const = default;
};

LogicStats logic_stats(const SemanticLogic& logic);

/// Canonical source text; parse_logic(render_logic(x)) is structurally x.
std::string render_logic(const SemanticLogic& logic);

/// Structural checks beyond syntax: range restriction, ground facts, binding
/// expansion, and (optionally) intuition coverage of every used symbol.
void validate_logic(const SemanticLogic& logic, bool strict_symbols = false);

}  // namespace dast
