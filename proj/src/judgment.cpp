#include "dast/judgment.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "dast/error.hpp"

namespace dast {

namespace {

double set_max(const std::array<double, 5>& values, const std::set<int>& members) {
  double best = 0.0;
  for (int i : members) best = std::max(best, values[i - 1]);
  return best;
}

std::set<int> winner(const std::array<double, 5>& values, const std::set<int>& lhs,
                     const std::set<int>& rhs) {
  double vl = set_max(values, lhs), vr = set_max(values, rhs);
  if (vl > vr) return lhs;
  if (vr > vl) return rhs;
  std::set<int> merged = lhs;
  merged.insert(rhs.begin(), rhs.end());
  return merged;
}

int singleton(const std::set<int>& s, const std::string& what) {
  if (s.size() != 1) throw validation_error("human judgment component " + what + " must be a single index");
  return *s.begin();
}

std::vector<std::string> split_csv_row(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.push_back("");
  return out;
}

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

int parse_index(const std::string& field, int line) {
  std::string t = trim(field);
  if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
    throw data_error("expected a sentence index, got '" + field + "'", line);
  int v = std::stoi(t);
  if (v < 1 || v > 5) throw data_error("sentence index " + t + " outside 1..5", line);
  return v;
}

}  // namespace

JudgmentVector dast_judge(const std::array<double, 5>& complexities) {
  for (double v : complexities)
    if (v < 0.0) throw validation_error("complexities must be non-negative");
  JudgmentVector j;
  j.a = winner(complexities, {4}, {5});
  j.b = winner(complexities, {2}, {3});
  j.c = winner(complexities, j.a, j.b);
  j.d = winner(complexities, j.c, {1});
  return j;
}

HumanJudgmentSet parse_judgments_csv(const std::string& content) {
  std::istringstream in(content);
  std::string line;
  if (!std::getline(in, line)) throw data_error("empty judgment CSV");
  std::vector<std::string> header = split_csv_row(trim(line));
  for (std::string& h : header) h = trim(h);
  bool with_agreement = false;
  const std::vector<std::string> base = {"participant_id", "a", "b", "c", "d"};
  if (header.size() == 6 && header[5] == "agreement")
    with_agreement = true;
  else if (header.size() != 5)
    throw data_error("judgment CSV header must be participant_id,a,b,c,d[,agreement]");
  for (size_t i = 0; i < base.size(); ++i)
    if (header[i] != base[i])
      throw data_error("judgment CSV header must be participant_id,a,b,c,d[,agreement]");

  HumanJudgmentSet set;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    std::string t = trim(line);
    if (t.empty()) continue;
    std::vector<std::string> fields = split_csv_row(t);
    if (fields.size() != header.size())
      throw data_error("expected " + std::to_string(header.size()) + " fields", line_no);
    JudgmentVector j;
    j.a = {parse_index(fields[1], line_no)};
    j.b = {parse_index(fields[2], line_no)};
    j.c = {parse_index(fields[3], line_no)};
    j.d = {parse_index(fields[4], line_no)};
    set.participant_ids.push_back(trim(fields[0]));
    set.judgments.push_back(j);
    if (with_agreement) {
      std::string a = trim(fields[5]);
      if (a.empty() || a.find_first_not_of("0123456789") != std::string::npos)
        throw data_error("agreement must be a percentage, got '" + fields[5] + "'", line_no);
      int level = std::stoi(a);
      if (level % 20 != 0 || level < 0 || level > 100)
        throw data_error("agreement level must be one of 0,20,40,60,80,100", line_no);
      set.agreements.push_back(level);
    }
  }
  if (set.judgments.empty()) throw data_error("judgment CSV has no rows");
  return set;
}

HumanJudgmentSet load_judgments_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_judgments_csv(buf.str());
}

bool component_matches(const std::set<int>& machine, const std::set<int>& human) {
  if (human.size() != 1) throw validation_error("human judgment component must be a single index");
  return machine.count(*human.begin()) > 0;
}

namespace {

int matching_components(const JudgmentVector& machine, const JudgmentVector& human) {
  return static_cast<int>(component_matches(machine.a, human.a)) +
         static_cast<int>(component_matches(machine.b, human.b)) +
         static_cast<int>(component_matches(machine.c, human.c)) +
         static_cast<int>(component_matches(machine.d, human.d));
}

}  // namespace

double overall_result_precision(const JudgmentVector& machine, const HumanJudgmentSet& humans) {
  if (humans.size() == 0) throw validation_error("no judgments");
  int hits = 0;
  for (const JudgmentVector& h : humans.judgments)
    if (component_matches(machine.d, h.d)) ++hits;
  return static_cast<double>(hits) / static_cast<double>(humans.size());
}

double no_deviation_precision(const JudgmentVector& machine, const HumanJudgmentSet& humans) {
  if (humans.size() == 0) throw validation_error("no judgments");
  int hits = 0;
  for (const JudgmentVector& h : humans.judgments)
    if (matching_components(machine, h) == 4) ++hits;
  return static_cast<double>(hits) / static_cast<double>(humans.size());
}

double comp_steps_precision(const JudgmentVector& machine, const HumanJudgmentSet& humans) {
  if (humans.size() == 0) throw validation_error("no judgments");
  int hits = 0;
  for (const JudgmentVector& h : humans.judgments) hits += matching_components(machine, h);
  return static_cast<double>(hits) / (4.0 * static_cast<double>(humans.size()));
}

std::array<double, 5> deviation_distribution(const JudgmentVector& machine,
                                             const HumanJudgmentSet& humans) {
  if (humans.size() == 0) throw validation_error("no judgments");
  std::array<double, 5> shares{};
  for (const JudgmentVector& h : humans.judgments)
    shares[4 - matching_components(machine, h)] += 1.0;
  for (double& s : shares) s /= static_cast<double>(humans.size());
  return shares;
}

std::array<double, 5> vote_values(const HumanJudgmentSet& humans) {
  if (humans.size() == 0) throw validation_error("no judgments");
  std::array<double, 5> shares{};
  for (const JudgmentVector& h : humans.judgments) shares[singleton(h.d, "d") - 1] += 1.0;
  for (double& s : shares) s /= static_cast<double>(humans.size());
  return shares;
}

std::array<double, 16> path_distribution(const HumanJudgmentSet& humans) {
  if (humans.size() == 0) throw validation_error("no judgments");
  std::array<double, 16> shares{};
  for (const JudgmentVector& h : humans.judgments) {
    int a = singleton(h.a, "a"), b = singleton(h.b, "b");
    int c = singleton(h.c, "c"), d = singleton(h.d, "d");
    if (a != 4 && a != 5) throw validation_error("inconsistent bracket: a must be 4 or 5");
    if (b != 2 && b != 3) throw validation_error("inconsistent bracket: b must be 2 or 3");
    if (c != a && c != b) throw validation_error("inconsistent bracket: c must equal a or b");
    if (d != c && d != 1) throw validation_error("inconsistent bracket: d must equal c or 1");
    int path = (a == 5 ? 1 : 0) | (b == 3 ? 2 : 0) | (c == b ? 4 : 0) | (d == 1 ? 8 : 0);
    shares[path] += 1.0;
  }
  for (double& s : shares) s /= static_cast<double>(humans.size());
  std::sort(shares.begin(), shares.end());
  return shares;
}

std::map<int, double> consensus_classes(const JudgmentVector& machine,
                                        const HumanJudgmentSet& humans) {
  if (!humans.has_agreements())
    throw validation_error("judgment set carries no agreement levels");
  if (humans.agreements.size() != humans.size())
    throw data_error("agreement column is partially filled");
  std::map<int, std::pair<int, int>> counts;  // level -> (hits, total)
  for (size_t i = 0; i < humans.size(); ++i) {
    auto& [hits, total] = counts[humans.agreements[i]];
    ++total;
    if (component_matches(machine.d, humans.judgments[i].d)) ++hits;
  }
  std::map<int, double> out;
  for (const auto& [level, ht] : counts)
    out[level] = static_cast<double>(ht.first) / static_cast<double>(ht.second);
  return out;
}

PrecisionReport precision_report(const JudgmentVector& machine, const HumanJudgmentSet& humans) {
  PrecisionReport r;
  r.overall = overall_result_precision(machine, humans);
  r.no_deviation = no_deviation_precision(machine, humans);
  r.comp_steps = comp_steps_precision(machine, humans);
  r.deviation_shares = deviation_distribution(machine, humans);
  return r;
}

}  // namespace dast
