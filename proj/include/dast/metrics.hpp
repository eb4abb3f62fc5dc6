#pragma once

#include <map>
#include <string>
#include <vector>

#include "dast/engine.hpp"
#include "dast/logic.hpp"

namespace dast {

enum class ComplexitySchema { Product, Tagged };

struct ComplexityOptions {
  ComplexitySchema schema = ComplexitySchema::Product;
  /// Tagged schema: multiplier applied to the premise product, by rule tag.
  std::map<std::string, double> tag_weights;
};

/// node id -> complexity value. Axioms get 1; every other node gets
/// 1 + (weight *) product of its premise node values. All values >= 1.
using NodeValues = std::map<int, double>;

NodeValues node_complexity(const Lattice& lattice, const ComplexityOptions& options = {});

/// v -> log_base(v + 1), order preserving. Base must exceed 1.
NodeValues log_normalize(const NodeValues& values, double base = 2.0);

/// Number of involved theories: a theory counts when one of its rules fired
/// in the lattice or one of its facts / intuition symbols occurs among the
/// initial (axiom) terms. Throws Validation when the lattice was not derived
/// from `logic`.
int dastex(const Lattice& lattice, const SemanticLogic& logic);

enum class DimensionPolicy { MaximalNodes, AllNodes, TopK };

struct SemanticPointOptions {
  DimensionPolicy policy = DimensionPolicy::MaximalNodes;
  int top_k = 3;
};

/// A point in semantic space: canonical term -> value of its producing node.
/// Dimensions come from nodes with no successors by default.
using SemanticPoint = std::map<std::string, double>;

SemanticPoint semantic_point(const Lattice& lattice, const NodeValues& values,
                             const SemanticPointOptions& options = {});

/// Euclidean norm over the point's dimensions.
double overall_complexity(const SemanticPoint& point);

/// Each value divided by the total; all-zero input is an error.
std::vector<double> relative_complexity(const std::vector<double>& values);

}  // namespace dast
