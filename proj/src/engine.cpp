#include "dast/engine.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace dast {

std::vector<Term> Lattice::terms() const {
  std::vector<Term> out;
  for (const LatticeNode& n : nodes) out.insert(out.end(), n.terms.begin(), n.terms.end());
  return out;
}

bool Lattice::contains(const Term& t) const { return producer(t) != nullptr; }

const LatticeNode* Lattice::producer(const Term& t) const {
  for (const LatticeNode& n : nodes)
    for (const Term& u : n.terms)
      if (u == t) return &n;
  return nullptr;
}

namespace {

/// Insertion-ordered term store with producer tracking.
class WorkingMemory {
 public:
  bool contains(const Term& t) const { return index_.count(t.str()) > 0; }

  int producer_of(size_t pos) const { return producers_[pos]; }
  const Term& at(size_t pos) const { return terms_[pos]; }
  size_t size() const { return terms_.size(); }

  bool add(const Term& t, int producer_node) {
    auto [it, inserted] = index_.emplace(t.str(), terms_.size());
    if (!inserted) return false;
    terms_.push_back(t);
    producers_.push_back(producer_node);
    return true;
  }

 private:
  std::vector<Term> terms_;
  std::vector<int> producers_;
  std::unordered_map<std::string, size_t> index_;
};

struct MatchHit {
  Subst binding;
  std::vector<size_t> sources;  // memory index matched by each premise
};

/// Joins premises left to right against memory positions [0, limit).
void match_into(const std::vector<Term>& premises, const WorkingMemory& wm, size_t limit,
                std::vector<MatchHit>& out) {
  std::vector<MatchHit> partial{{Subst{}, {}}};
  for (const Term& premise : premises) {
    std::vector<MatchHit> next;
    for (const MatchHit& hit : partial) {
      for (size_t pos = 0; pos < limit; ++pos) {
        std::vector<const Term*> subs;
        wm.at(pos).subterms(subs);
        for (const Term* candidate : subs) {
          Subst binding = hit.binding;
          if (!match_term(premise, *candidate, binding)) continue;
          MatchHit extended{std::move(binding), hit.sources};
          extended.sources.push_back(pos);
          next.push_back(std::move(extended));
        }
      }
    }
    partial = std::move(next);
    if (partial.empty()) return;
  }
  // Deduplicate by substitution, first hit wins.
  std::set<std::string> seen;
  for (MatchHit& hit : partial) {
    std::string key;
    for (const auto& [var, value] : hit.binding) key += var + "=" + value.str() + ";";
    if (seen.insert(key).second) out.push_back(std::move(hit));
  }
}

/// Variables in head position anywhere in the rule; they may only bind atoms.
std::set<std::string> head_vars(const Rule& rule) {
  std::set<std::string> vars;
  auto scan = [&](const Term& t, auto&& self) -> void {
    if (t.is_compound() && t.head_is_var()) vars.insert(t.symbol());
    for (const Term& a : t.args()) self(a, self);
  };
  for (const Term& p : rule.premises) scan(p, scan);
  for (const Term& c : rule.conclusions) scan(c, scan);
  return vars;
}

}  // namespace

std::vector<Subst> match(const std::vector<Term>& premises, const std::vector<Term>& memory) {
  WorkingMemory wm;
  for (const Term& t : memory) wm.add(t, 0);
  std::vector<MatchHit> hits;
  match_into(premises, wm, wm.size(), hits);
  std::vector<Subst> out;
  out.reserve(hits.size());
  for (MatchHit& h : hits) out.push_back(std::move(h.binding));
  return out;
}

std::vector<Term> apply_rule(const Rule& rule, const Subst& binding) {
  std::vector<Term> out;
  out.reserve(rule.conclusions.size());
  for (const Term& c : rule.conclusions) out.push_back(substitute(c, binding));
  return out;
}

Lattice derive(const std::vector<Term>& initial, const SemanticLogic& logic,
               const DerivationLimits& limits) {
  if (limits.max_iterations <= 0 || limits.max_term_depth <= 0)
    throw validation_error("derivation limits must be positive");

  Lattice lattice;
  lattice.logic_id = logic.id();

  WorkingMemory wm;
  for (const Term& t : initial) {
    if (!t.is_ground())
      throw validation_error("initial term " + t.str() + " is not ground");
    if (wm.contains(t)) continue;
    LatticeNode node;
    node.id = static_cast<int>(lattice.nodes.size()) + 1;
    node.terms.push_back(t);
    lattice.nodes.push_back(node);
    wm.add(t, node.id);
  }

  std::vector<const Rule*> rules = logic.all_rules();
  std::vector<std::set<std::string>> rule_head_vars;
  rule_head_vars.reserve(rules.size());
  for (const Rule* r : rules) rule_head_vars.push_back(head_vars(*r));

  for (int round = 1;; ++round) {
    if (round > limits.max_iterations)
      throw LimitError("derivation exceeded " + std::to_string(limits.max_iterations) +
                           " iterations",
                       lattice);
    const size_t snapshot = wm.size();
    bool added_any = false;

    for (size_t ri = 0; ri < rules.size(); ++ri) {
      const Rule& rule = *rules[ri];
      std::vector<MatchHit> hits;
      match_into(rule.premises, wm, snapshot, hits);
      for (const MatchHit& hit : hits) {
        bool heads_ok = std::all_of(
            rule_head_vars[ri].begin(), rule_head_vars[ri].end(), [&](const std::string& v) {
              auto it = hit.binding.find(v);
              return it == hit.binding.end() || it->second.is_atom();
            });
        if (!heads_ok) continue;

        std::vector<Term> produced = apply_rule(rule, hit.binding);
        for (const Term& t : produced)
          if (t.depth() > limits.max_term_depth)
            throw LimitError("term " + t.str() + " exceeds depth " +
                                 std::to_string(limits.max_term_depth),
                             lattice);

        std::vector<Term> fresh;
        for (Term& t : produced)
          if (!wm.contains(t) &&
              std::find(fresh.begin(), fresh.end(), t) == fresh.end())
            fresh.push_back(std::move(t));
        if (fresh.empty()) continue;

        LatticeNode node;
        node.id = static_cast<int>(lattice.nodes.size()) + 1;
        node.rule_id = rule.id;
        node.rule_tag = rule.tag;
        int level = 0;
        for (size_t src : hit.sources) {
          int producer = wm.producer_of(src);
          if (std::find(node.premises.begin(), node.premises.end(), producer) ==
              node.premises.end())
            node.premises.push_back(producer);
          level = std::max(level, lattice.nodes[producer - 1].level);
        }
        node.level = level + 1;
        node.terms = std::move(fresh);
        for (const Term& t : node.terms) wm.add(t, node.id);
        lattice.nodes.push_back(std::move(node));
        added_any = true;
      }
    }
    if (!added_any) break;
  }
  return lattice;
}

}  // namespace dast
