#include "dast/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "dast/error.hpp"

namespace dast {

NodeValues node_complexity(const Lattice& lattice, const ComplexityOptions& options) {
  NodeValues values;
  for (const LatticeNode& node : lattice.nodes) {  // premises always precede the node
    if (node.is_axiom()) {
      values[node.id] = 1.0;
      continue;
    }
    double product = 1.0;
    for (int premise : node.premises) product *= values.at(premise);
    double weight = 1.0;
    if (options.schema == ComplexitySchema::Tagged && node.rule_tag) {
      auto it = options.tag_weights.find(*node.rule_tag);
      if (it != options.tag_weights.end()) weight = it->second;
    }
    if (weight <= 0.0) throw validation_error("tag weight must be positive");
    values[node.id] = 1.0 + weight * product;
  }
  return values;
}

NodeValues log_normalize(const NodeValues& values, double base) {
  if (base <= 1.0) throw validation_error("log base must exceed 1");
  NodeValues out;
  const double denom = std::log(base);
  for (const auto& [id, v] : values) out[id] = std::log(v + 1.0) / denom;
  return out;
}

int dastex(const Lattice& lattice, const SemanticLogic& logic) {
  if (lattice.logic_id != logic.id())
    throw validation_error("lattice was derived from a different logic (id mismatch)");

  std::set<int> fired_theories;
  std::set<std::string> initial_symbols;
  std::vector<Term> initial_terms;
  for (const LatticeNode& node : lattice.nodes) {
    if (node.is_axiom()) {
      for (const Term& t : node.terms) {
        t.collect_symbols(initial_symbols);
        initial_terms.push_back(t);
      }
    } else {
      int theory = logic.theory_of_rule(node.rule_id);
      if (theory >= 0) fired_theories.insert(theory);
    }
  }

  int involved = 0;
  for (size_t i = 0; i < logic.theories.size(); ++i) {
    const Theory& t = logic.theories[i];
    bool hit = fired_theories.count(static_cast<int>(i)) > 0;
    if (!hit)
      hit = std::any_of(t.intuitions.begin(), t.intuitions.end(),
                        [&](const std::string& sym) { return initial_symbols.count(sym) > 0; });
    if (!hit)
      hit = std::any_of(t.facts.begin(), t.facts.end(), [&](const Term& f) {
        Term e = logic.expand(f);
        return std::find(initial_terms.begin(), initial_terms.end(), e) != initial_terms.end();
      });
    if (hit) ++involved;
  }
  return involved;
}

SemanticPoint semantic_point(const Lattice& lattice, const NodeValues& values,
                             const SemanticPointOptions& options) {
  std::set<int> referenced;
  for (const LatticeNode& n : lattice.nodes)
    for (int p : n.premises) referenced.insert(p);

  std::vector<const LatticeNode*> selected;
  switch (options.policy) {
    case DimensionPolicy::MaximalNodes:
      for (const LatticeNode& n : lattice.nodes)
        if (!referenced.count(n.id)) selected.push_back(&n);
      break;
    case DimensionPolicy::AllNodes:
      for (const LatticeNode& n : lattice.nodes) selected.push_back(&n);
      break;
    case DimensionPolicy::TopK: {
      if (options.top_k <= 0) throw validation_error("top-k must be positive");
      for (const LatticeNode& n : lattice.nodes) selected.push_back(&n);
      std::stable_sort(selected.begin(), selected.end(),
                       [&](const LatticeNode* a, const LatticeNode* b) {
                         double va = values.at(a->id), vb = values.at(b->id);
                         if (va != vb) return va > vb;
                         return a->id < b->id;
                       });
      if (selected.size() > static_cast<size_t>(options.top_k))
        selected.resize(static_cast<size_t>(options.top_k));
      break;
    }
  }

  SemanticPoint point;
  for (const LatticeNode* n : selected) {
    double v = values.at(n->id);
    for (const Term& t : n->terms) point[t.str()] = v;
  }
  return point;
}

double overall_complexity(const SemanticPoint& point) {
  double sum = 0.0;
  for (const auto& [_, v] : point) sum += v * v;
  return std::sqrt(sum);
}

std::vector<double> relative_complexity(const std::vector<double>& values) {
  double total = 0.0;
  for (double v : values) {
    if (v < 0.0) throw validation_error("complexity values must be non-negative");
    total += v;
  }
  if (total == 0.0) throw validation_error("relative complexity of an all-zero vector");
  std::vector<double> out;
  out.reserve(values.size());
  for (double v : values) out.push_back(v / total);
  return out;
}

}  // namespace dast
