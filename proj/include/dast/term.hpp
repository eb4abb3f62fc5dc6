#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

namespace dast {

/// Ground and pattern terms of the rule language.
///
/// A term is one of:
///   Atom      -- a bare symbol: `Unseen`, `Attention-Policy`, `#S`
///   Var       -- a `$`-prefixed metavariable: `$A` (stored without the `$`)
///   Compound  -- head applied to arguments: `How(Ability(See(Unseen)))`;
///                the head may itself be a metavariable (`$A($B)`)
///   Infix     -- binary operator application: `(See <> Unseen)`, `(How is-a Question)`
class Term {
 public:
  enum class Kind { Atom, Var, Compound, Infix };

  Term() : kind_(Kind::Atom) {}

  static Term atom(std::string name);
  static Term var(std::string name);
  static Term compound(std::string head, std::vector<Term> args, bool head_is_var = false);
  static Term infix(std::string op, Term lhs, Term rhs);

  Kind kind() const { return kind_; }
  bool is_atom() const { return kind_ == Kind::Atom; }
  bool is_var() const { return kind_ == Kind::Var; }
  bool is_compound() const { return kind_ == Kind::Compound; }
  bool is_infix() const { return kind_ == Kind::Infix; }

  /// Atom name, variable name (without `$`), compound head, or infix operator.
  const std::string& symbol() const { return symbol_; }
  /// Compound only: whether the head position holds a metavariable.
  bool head_is_var() const { return head_is_var_; }
  /// Compound arguments; for Infix exactly {lhs, rhs}.
  const std::vector<Term>& args() const { return args_; }

  bool is_ground() const;
  int depth() const;
  void collect_vars(std::set<std::string>& out) const;
  /// All symbols occurring in the term (heads, operators, atoms); no variables.
  void collect_symbols(std::set<std::string>& out) const;
  /// Pre-order enumeration: the term itself, then subterms left to right.
  void subterms(std::vector<const Term*>& out) const;

  /// Canonical text form; infix terms are always parenthesized.
  std::string str() const;

  bool operator==(const Term& other) const;
  bool operator!=(const Term& other) const { return !(*this == other); }
  bool operator<(const Term& other) const;  // lexicographic on structure

 private:
  Kind kind_;
  std::string symbol_;
  bool head_is_var_ = false;
  std::vector<Term> args_;
};

using Subst = std::map<std::string, Term>;

/// Structural match of a pattern against one ground term (no subterm descent).
/// Extends `binding` on success; leaves it untouched on failure.
bool match_term(const Term& pattern, const Term& ground, Subst& binding);

/// Replaces variables by their bindings. Throws Validation on unbound
/// variables or on a head variable bound to a non-atom.
Term substitute(const Term& pattern, const Subst& binding);

/// Parses one term from canonical text (the same syntax rule files use).
Term parse_term(const std::string& text);

}  // namespace dast
