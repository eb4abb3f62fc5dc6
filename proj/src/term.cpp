#include "dast/term.hpp"

#include <algorithm>
#include <sstream>

#include "dast/error.hpp"

namespace dast {

Term Term::atom(std::string name) {
  Term t;
  t.kind_ = Kind::Atom;
  t.symbol_ = std::move(name);
  return t;
}

Term Term::var(std::string name) {
  Term t;
  t.kind_ = Kind::Var;
  t.symbol_ = std::move(name);
  return t;
}

Term Term::compound(std::string head, std::vector<Term> args, bool head_is_var) {
  Term t;
  t.kind_ = Kind::Compound;
  t.symbol_ = std::move(head);
  t.head_is_var_ = head_is_var;
  t.args_ = std::move(args);
  return t;
}

Term Term::infix(std::string op, Term lhs, Term rhs) {
  Term t;
  t.kind_ = Kind::Infix;
  t.symbol_ = std::move(op);
  t.args_.push_back(std::move(lhs));
  t.args_.push_back(std::move(rhs));
  return t;
}

bool Term::is_ground() const {
  if (kind_ == Kind::Var) return false;
  if (kind_ == Kind::Compound && head_is_var_) return false;
  return std::all_of(args_.begin(), args_.end(), [](const Term& a) { return a.is_ground(); });
}

int Term::depth() const {
  int d = 0;
  for (const Term& a : args_) d = std::max(d, a.depth());
  return d + 1;
}

void Term::collect_vars(std::set<std::string>& out) const {
  if (kind_ == Kind::Var) out.insert(symbol_);
  if (kind_ == Kind::Compound && head_is_var_) out.insert(symbol_);
  for (const Term& a : args_) a.collect_vars(out);
}

void Term::collect_symbols(std::set<std::string>& out) const {
  if (kind_ != Kind::Var && !(kind_ == Kind::Compound && head_is_var_)) out.insert(symbol_);
  for (const Term& a : args_) a.collect_symbols(out);
}

void Term::subterms(std::vector<const Term*>& out) const {
  out.push_back(this);
  for (const Term& a : args_) a.subterms(out);
}

std::string Term::str() const {
  switch (kind_) {
    case Kind::Atom:
      return symbol_;
    case Kind::Var:
      return "$" + symbol_;
    case Kind::Compound: {
      std::ostringstream os;
      if (head_is_var_) os << '$';
      os << symbol_ << '(';
      for (size_t i = 0; i < args_.size(); ++i) {
        if (i) os << ", ";
        os << args_[i].str();
      }
      os << ')';
      return os.str();
    }
    case Kind::Infix:
      return "(" + args_[0].str() + " " + symbol_ + " " + args_[1].str() + ")";
  }
  return {};
}

bool Term::operator==(const Term& other) const {
  return kind_ == other.kind_ && symbol_ == other.symbol_ && head_is_var_ == other.head_is_var_ &&
         args_ == other.args_;
}

bool Term::operator<(const Term& other) const {
  if (kind_ != other.kind_) return kind_ < other.kind_;
  if (symbol_ != other.symbol_) return symbol_ < other.symbol_;
  if (head_is_var_ != other.head_is_var_) return head_is_var_ < other.head_is_var_;
  return args_ < other.args_;
}

namespace {

bool bind_or_check(const std::string& name, const Term& value, Subst& binding) {
  auto it = binding.find(name);
  if (it == binding.end()) {
    binding.emplace(name, value);
    return true;
  }
  return it->second == value;
}

}  // namespace

bool match_term(const Term& pattern, const Term& ground, Subst& binding) {
  Subst scratch = binding;
  bool ok = [&]() {
    switch (pattern.kind()) {
      case Term::Kind::Var:
        return bind_or_check(pattern.symbol(), ground, scratch);
      case Term::Kind::Atom:
        return ground.is_atom() && ground.symbol() == pattern.symbol();
      case Term::Kind::Compound: {
        if (!ground.is_compound() || ground.args().size() != pattern.args().size()) return false;
        if (pattern.head_is_var()) {
          // Head variables range over symbols only.
          if (!bind_or_check(pattern.symbol(), Term::atom(ground.symbol()), scratch)) return false;
        } else if (ground.symbol() != pattern.symbol()) {
          return false;
        }
        for (size_t i = 0; i < pattern.args().size(); ++i)
          if (!match_term(pattern.args()[i], ground.args()[i], scratch)) return false;
        return true;
      }
      case Term::Kind::Infix: {
        if (!ground.is_infix() || ground.symbol() != pattern.symbol()) return false;
        return match_term(pattern.args()[0], ground.args()[0], scratch) &&
               match_term(pattern.args()[1], ground.args()[1], scratch);
      }
    }
    return false;
  }();
  if (ok) binding = std::move(scratch);
  return ok;
}

Term substitute(const Term& pattern, const Subst& binding) {
  switch (pattern.kind()) {
    case Term::Kind::Var: {
      auto it = binding.find(pattern.symbol());
      if (it == binding.end())
        throw validation_error("unbound variable $" + pattern.symbol() + " in conclusion");
      return it->second;
    }
    case Term::Kind::Atom:
      return pattern;
    case Term::Kind::Compound: {
      std::string head = pattern.symbol();
      if (pattern.head_is_var()) {
        auto it = binding.find(pattern.symbol());
        if (it == binding.end())
          throw validation_error("unbound variable $" + pattern.symbol() + " in head position");
        if (!it->second.is_atom())
          throw validation_error("head variable $" + pattern.symbol() + " bound to non-atom " +
                                 it->second.str());
        head = it->second.symbol();
      }
      std::vector<Term> args;
      args.reserve(pattern.args().size());
      for (const Term& a : pattern.args()) args.push_back(substitute(a, binding));
      return Term::compound(std::move(head), std::move(args));
    }
    case Term::Kind::Infix:
      return Term::infix(pattern.symbol(), substitute(pattern.args()[0], binding),
                         substitute(pattern.args()[1], binding));
  }
  return pattern;
}

}  // namespace dast
