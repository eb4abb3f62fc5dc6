#include "dast/logic.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "dast/error.hpp"

namespace dast {

namespace {

bool is_text_symbol(const std::string& s) { return !s.empty() && s[0] == '#'; }

bool is_punctuation_name(const std::string& s) {
  return !s.empty() && std::none_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '-' || c == '_' || c == '#' || c >= 0x80;
  });
}

Term expand_rec(const SemanticLogic& logic, const Term& t, std::set<std::string>& active) {
  if (t.is_atom() && is_text_symbol(t.symbol())) {
    const Binding* b = logic.find_binding(t.symbol());
    if (!b) throw validation_error("undefined text symbol " + t.symbol());
    if (!active.insert(t.symbol()).second)
      throw validation_error("cyclic binding through " + t.symbol());
    Term out = expand_rec(logic, b->value, active);
    active.erase(t.symbol());
    return out;
  }
  if (t.is_atom() || t.is_var()) return t;
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (const Term& a : t.args()) args.push_back(expand_rec(logic, a, active));
  if (t.is_infix()) return Term::infix(t.symbol(), std::move(args[0]), std::move(args[1]));
  return Term::compound(t.symbol(), std::move(args), t.head_is_var());
}

void collect_infix_ops(const Term& t, std::set<std::string>& out) {
  if (t.is_infix()) out.insert(t.symbol());
  for (const Term& a : t.args()) collect_infix_ops(a, out);
}

uint64_t fnv1a64(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

const Binding* SemanticLogic::find_binding(const std::string& symbol) const {
  for (const Binding& b : bindings)
    if (b.symbol == symbol) return &b;
  return nullptr;
}

const Rule* SemanticLogic::find_rule(int id) const {
  for (const Theory& t : theories)
    for (const Rule& r : t.rules)
      if (r.id == id) return &r;
  return nullptr;
}

std::vector<const Rule*> SemanticLogic::all_rules() const {
  std::vector<const Rule*> out;
  for (const Theory& t : theories)
    for (const Rule& r : t.rules) out.push_back(&r);
  std::sort(out.begin(), out.end(), [](const Rule* a, const Rule* b) { return a->id < b->id; });
  return out;
}

int SemanticLogic::theory_of_rule(int id) const {
  for (size_t i = 0; i < theories.size(); ++i)
    for (const Rule& r : theories[i].rules)
      if (r.id == id) return static_cast<int>(i);
  return -1;
}

Term SemanticLogic::expand(const Term& t) const {
  std::set<std::string> active;
  return expand_rec(*this, t, active);
}

std::vector<Term> SemanticLogic::quantize(const std::string& text) const {
  std::vector<Term> initial;
  const Binding* designated = nullptr;
  if (is_text_symbol(text)) {
    designated = find_binding(text);
    if (!designated) throw validation_error("no binding for text symbol " + text);
  } else {
    designated = find_binding("#S");
  }
  if (designated) {
    initial.push_back(expand(designated->value));
  } else {
    // Fallback: words that name intuition symbols become atoms.
    std::set<std::string> intuitions;
    for (const Theory& t : theories) intuitions.insert(t.intuitions.begin(), t.intuitions.end());
    std::string word;
    std::vector<Term> matched;
    auto flush = [&]() {
      if (!word.empty() && intuitions.count(word)) matched.push_back(Term::atom(word));
      word.clear();
    };
    for (unsigned char c : text) {
      if (std::isalnum(c) || c == '-' || c == '_' || c >= 0x80)
        word.push_back(static_cast<char>(c));
      else
        flush();
    }
    flush();
    bool has_facts = std::any_of(theories.begin(), theories.end(),
                                 [](const Theory& t) { return !t.facts.empty(); });
    if (matched.empty() && !has_facts)
      throw validation_error("text quantizes to nothing: no binding and no symbol matches");
    for (Term& t : matched) {
      if (std::find(initial.begin(), initial.end(), t) == initial.end())
        initial.push_back(std::move(t));
    }
  }
  for (const Theory& t : theories)
    for (const Term& f : t.facts) {
      Term e = expand(f);
      if (std::find(initial.begin(), initial.end(), e) == initial.end())
        initial.push_back(std::move(e));
    }
  return initial;
}

std::string SemanticLogic::id() const {
  std::ostringstream os;
  os << "sl-" << std::hex << fnv1a64(render_logic(*this));
  return os.str();
}

LogicStats logic_stats(const SemanticLogic& logic) {
  LogicStats s;
  s.theory_count = static_cast<int>(logic.theories.size());

  std::set<std::string> ops;
  std::set<std::string> mentioned;
  auto absorb = [&](const Term& t) {
    collect_infix_ops(t, ops);
    t.collect_symbols(mentioned);
  };
  for (const Theory& t : logic.theories) {
    s.rule_count += static_cast<int>(t.rules.size());
    mentioned.insert(t.intuitions.begin(), t.intuitions.end());
    for (const Rule& r : t.rules) {
      for (const Term& p : r.premises) absorb(p);
      for (const Term& c : r.conclusions) absorb(c);
    }
    for (const Term& f : t.facts) absorb(f);
  }
  for (const Binding& b : logic.bindings) absorb(b.value);

  for (const std::string& sym : mentioned)
    if (is_punctuation_name(sym)) ops.insert(sym);
  int model = 0;
  for (const std::string& sym : mentioned)
    if (!is_text_symbol(sym) && !ops.count(sym)) ++model;
  s.model_element_count = model;
  s.operator_count = static_cast<int>(ops.size());

  // dependency: (T1, T2) with T1 != T2 and some rule/fact of T1 mentioning an
  // intuition declared by T2.
  std::vector<std::set<std::string>> used(logic.theories.size());
  for (size_t i = 0; i < logic.theories.size(); ++i) {
    const Theory& t = logic.theories[i];
    for (const Rule& r : t.rules) {
      for (const Term& p : r.premises) p.collect_symbols(used[i]);
      for (const Term& c : r.conclusions) c.collect_symbols(used[i]);
    }
    for (const Term& f : t.facts) f.collect_symbols(used[i]);
  }
  for (size_t i = 0; i < logic.theories.size(); ++i)
    for (size_t j = 0; j < logic.theories.size(); ++j) {
      if (i == j) continue;
      const auto& decl = logic.theories[j].intuitions;
      bool linked = std::any_of(decl.begin(), decl.end(),
                                [&](const std::string& sym) { return used[i].count(sym) > 0; });
      if (linked) ++s.dependency_count;
    }
  return s;
}

namespace {

std::string render_list_term(const Term& t) { return t.str(); }

std::string render_rule(const Rule& r) {
  std::ostringstream os;
  os << "rule";
  if (r.tag) os << '[' << *r.tag << ']';
  os << ": ";
  for (size_t i = 0; i < r.premises.size(); ++i) {
    if (i) os << " And ";
    os << render_list_term(r.premises[i]);
  }
  os << " ==> ";
  for (size_t i = 0; i < r.conclusions.size(); ++i) {
    if (i) os << " And ";
    os << render_list_term(r.conclusions[i]);
  }
  return os.str();
}

}  // namespace

std::string render_logic(const SemanticLogic& logic) {
  std::ostringstream os;
  for (const Binding& b : logic.bindings)
    if (b.theory_index < 0) os << "define " << b.symbol << " = " << b.value.str() << "\n";
  for (size_t i = 0; i < logic.theories.size(); ++i) {
    const Theory& t = logic.theories[i];
    if (i || !logic.bindings.empty()) os << "\n";
    os << "theory " << t.name << ":\n";
    if (!t.intuitions.empty()) {
      os << "  intuitions: ";
      for (size_t k = 0; k < t.intuitions.size(); ++k) {
        if (k) os << ", ";
        os << t.intuitions[k];
      }
      os << "\n";
    }
    for (const Binding& b : logic.bindings)
      if (b.theory_index == static_cast<int>(i))
        os << "  define " << b.symbol << " = " << b.value.str() << "\n";
    for (const Term& f : t.facts) os << "  fact: " << f.str() << "\n";
    for (const Rule& r : t.rules) os << "  " << render_rule(r) << "\n";
  }
  return os.str();
}

void validate_logic(const SemanticLogic& logic, bool strict_symbols) {
  std::set<std::string> theory_names;
  for (const Theory& t : logic.theories)
    if (!theory_names.insert(t.name).second)
      throw validation_error("duplicate theory name " + t.name);

  std::set<std::string> bound;
  for (const Binding& b : logic.bindings) {
    if (!bound.insert(b.symbol).second)
      throw validation_error("duplicate binding for " + b.symbol);
  }
  for (const Binding& b : logic.bindings) {
    Term expanded = logic.expand(b.value);  // throws on cycles/unknowns
    if (!expanded.is_ground())
      throw validation_error("binding " + b.symbol + " expands to a non-ground term");
  }

  for (const Theory& t : logic.theories) {
    for (const Term& f : t.facts) {
      if (!f.is_ground())
        throw validation_error("fact " + f.str() + " in " + t.name + " contains variables");
      logic.expand(f);
    }
    for (const Rule& r : t.rules) {
      if (r.premises.empty())
        throw validation_error("rule " + std::to_string(r.id) + " has no premises");
      if (r.conclusions.empty())
        throw validation_error("rule " + std::to_string(r.id) + " has no conclusions");
      std::set<std::string> pvars, cvars;
      for (const Term& p : r.premises) p.collect_vars(pvars);
      for (const Term& c : r.conclusions) c.collect_vars(cvars);
      for (const std::string& v : cvars)
        if (!pvars.count(v))
          throw validation_error("rule " + std::to_string(r.id) + " concludes with $" + v +
                                 " which no premise binds");
    }
  }

  if (strict_symbols) {
    std::set<std::string> declared;
    for (const Theory& t : logic.theories)
      declared.insert(t.intuitions.begin(), t.intuitions.end());
    std::set<std::string> used;
    for (const Theory& t : logic.theories) {
      for (const Rule& r : t.rules) {
        for (const Term& p : r.premises) p.collect_symbols(used);
        for (const Term& c : r.conclusions) c.collect_symbols(used);
      }
      for (const Term& f : t.facts) f.collect_symbols(used);
    }
    for (const std::string& sym : used)
      if (!is_text_symbol(sym) && !declared.count(sym))
        throw validation_error("symbol " + sym + " is not declared as an intuition of any theory");
  }
}

}  // namespace dast
