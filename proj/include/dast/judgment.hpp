#pragma once

#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace dast {

/// One filled five-sentence bracket. Components hold sentence indices (1..5);
/// human answers are singletons, automatic answers may hold tie sets.
struct JudgmentVector {
  std::set<int> a;  // winner of sentences 4 vs 5
  std::set<int> b;  // winner of sentences 2 vs 3
  std::set<int> c;  // winner of a vs b
  std::set<int> d;  // winner of c vs sentence 1

  bool operator==(const JudgmentVector& other) const = default;
};

struct HumanJudgmentSet {
  std::vector<std::string> participant_ids;
  std::vector<JudgmentVector> judgments;          // singletons, same length as ids
  std::vector<int> agreements;                    // empty, or same length as judgments
  bool has_agreements() const { return !agreements.empty(); }
  size_t size() const { return judgments.size(); }
};

/// Runs the bracket on the five sentence complexities. Strictly greater wins;
/// on a tie the contenders merge and the set advances by its maximum value.
JudgmentVector dast_judge(const std::array<double, 5>& complexities);

/// Loads `participant_id,a,b,c,d[,agreement]` CSV. Throws Data on malformed
/// rows, indices outside 1..5, or agreement outside {0,20,40,60,80,100}.
HumanJudgmentSet load_judgments_csv(const std::string& path);
HumanJudgmentSet parse_judgments_csv(const std::string& content);

/// Component match: the human's singleton answer is a member of the
/// machine's (possibly tied) answer set.
bool component_matches(const std::set<int>& machine, const std::set<int>& human);

/// Share of humans whose final answer d matches the machine's.
double overall_result_precision(const JudgmentVector& machine, const HumanJudgmentSet& humans);

/// Share of humans matching on all four components.
double no_deviation_precision(const JudgmentVector& machine, const HumanJudgmentSet& humans);

/// Matching components across all humans, out of 4 * |humans|.
double comp_steps_precision(const JudgmentVector& machine, const HumanJudgmentSet& humans);

/// Shares of humans deviating in exactly 0..4 components; sums to 1.
std::array<double, 5> deviation_distribution(const JudgmentVector& machine,
                                             const HumanJudgmentSet& humans);

/// Shares of final answers naming each sentence 1..5.
std::array<double, 5> vote_values(const HumanJudgmentSet& humans);

/// Shares over the 16 consistent bracket fillings, sorted ascending.
/// Throws Validation when a judgment is not bracket-consistent.
std::array<double, 16> path_distribution(const HumanJudgmentSet& humans);

/// overall_result_precision per agreement level present in the set.
std::map<int, double> consensus_classes(const JudgmentVector& machine,
                                        const HumanJudgmentSet& humans);

struct PrecisionReport {
  double overall = 0.0;
  double no_deviation = 0.0;
  double comp_steps = 0.0;
  std::array<double, 5> deviation_shares{};
};

PrecisionReport precision_report(const JudgmentVector& machine, const HumanJudgmentSet& humans);

}  // namespace dast
