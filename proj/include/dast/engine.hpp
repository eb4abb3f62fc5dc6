#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dast/error.hpp"
#include "dast/logic.hpp"
#include "dast/term.hpp"

namespace dast {

struct DerivationLimits {
  int max_iterations = 10000;  // forward-chaining rounds
  int max_term_depth = 64;     // nesting depth of any produced term
};

/// One derivation step. Axiom nodes carry the initial terms (rule_id == 0,
/// level 1, no premises); every other node records the rule fired, the nodes
/// whose terms the premises matched, and the terms newly added by the firing.
struct LatticeNode {
  int id = 0;  // 1-based, ascending in creation order
  int level = 1;
  int rule_id = 0;  // 0 = axiom
  std::optional<std::string> rule_tag;
  std::vector<Term> terms;
  std::vector<int> premises;

  bool is_axiom() const { return rule_id == 0; }
  bool operator==(const LatticeNode& other) const = default;
};

struct Lattice {
  std::string logic_id;
  std::string text;
  std::vector<LatticeNode> nodes;

  bool operator==(const Lattice& other) const = default;

  /// Every term in the closure, in production order.
  std::vector<Term> terms() const;
  bool contains(const Term& t) const;
  const LatticeNode* producer(const Term& t) const;
};

/// Thrown when a derivation guard trips; carries what was derived so far.
class LimitError : public Error {
 public:
  LimitError(std::string message, Lattice partial)
      : Error(ErrorKind::Limit, std::move(message)), partial_(std::move(partial)) {}
  const Lattice& partial() const { return partial_; }

 private:
  Lattice partial_;
};

/// All substitutions under which every premise of `premises` matches a
/// working-memory term or one of its subterms. Deterministic order: premises
/// joined left to right; candidates enumerated in memory insertion order,
/// then pre-order within each term; duplicates keep the first occurrence.
std::vector<Subst> match(const std::vector<Term>& premises, const std::vector<Term>& memory);

/// Instantiates the rule's conclusions under one substitution.
std::vector<Term> apply_rule(const Rule& rule, const Subst& binding);

/// Forward chaining to fixpoint. Rules fire in ascending id order; terms
/// produced in a round become matchable in the next round; a term is only
/// ever produced once. Throws LimitError when a guard trips.
Lattice derive(const std::vector<Term>& initial, const SemanticLogic& logic,
               const DerivationLimits& limits = {});

}  // namespace dast
