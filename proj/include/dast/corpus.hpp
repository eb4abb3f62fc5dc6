#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dast {

/// One paragraph annotated with difficulty metrics. `metrics` holds whatever
/// numeric columns the CSV provided (word_count, fixation_time_ms, dastex,
/// readability_level, flesch_kincaid, gunning_fog, smog, ari, coleman_liau,
/// dast_eval_time_min).
struct ParagraphRecord {
  std::string id;
  std::string topic;
  std::string genre_class;  // "history-literature" or "geography-science"
  std::string variant;      // "simple" or "hard"
  std::map<std::string, double> metrics;

  double metric(const std::string& name) const;
  bool has_metric(const std::string& name) const { return metrics.count(name) > 0; }
};

/// A simple/hard paragraph pair on one topic.
struct PairRecord {
  std::string topic;
  ParagraphRecord simple;
  ParagraphRecord hard;
};

/// Loads the paired corpus CSV; pairs come back sorted by topic. Throws Data
/// on schema violations, missing variants, or duplicated variants.
std::vector<PairRecord> load_corpus_csv(const std::string& path);
std::vector<PairRecord> parse_corpus_csv(const std::string& content);

/// Ratio of a metric between the simple and hard variant: F(simple)/F(hard).
double difficulty_ratio(double simple_value, double hard_value);

/// mean(simple values) / mean(hard values) over all pairs.
double overall_difficulty_ratio(const std::string& metric, const std::vector<PairRecord>& pairs);

/// Per-pair ratios sorted ascending and scaled so the maximum is 1.
std::vector<double> dr_curve(const std::string& metric, const std::vector<PairRecord>& pairs);

/// 100 * |dr - reference_dr| / reference_dr.
double dr_error_pct(double dr, double reference_dr);

/// Largest coordinate distance between two scaled curves of equal length.
double curve_distance(const std::vector<double>& lhs, const std::vector<double>& rhs);

struct TextStats {
  int sentences = 0;
  int words = 0;
  int syllables = 0;
  double words_per_sentence = 0.0;
  double syllables_per_word = 0.0;
};

/// Counts sentences ([.!?] runs), words (alphanumeric runs with internal
/// apostrophes/hyphens) and syllables (maximal vowel groups, trailing silent
/// 'e' dropped, minimum one per word).
TextStats text_stats(const std::string& text);

/// 0.39 * words-per-sentence + 11.8 * syllables-per-word - 15.59.
double flesch_kincaid(double words_per_sentence, double syllables_per_word);
double flesch_kincaid(const std::string& text);

struct RegressionResult {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

/// Ordinary least squares of y on x. Constant y gives slope 0 and R^2 = 0;
/// constant x is an error.
RegressionResult linear_regression(const std::vector<double>& x, const std::vector<double>& y);

struct ExponentialFit {
  double amplitude = 0.0;  // a in y = a * exp(b x)
  double rate = 0.0;       // b
  double r_squared = 0.0;  // in log space
};

/// Log-linear least squares; requires every y > 0.
ExponentialFit exponential_fit(const std::vector<double>& x, const std::vector<double>& y);

/// Per genre class, regression of the measure's per-pair DR (y) on the
/// dastex per-pair DR (x), excluding the listed topics. `measure` is
/// "fixation_time_ms" or "fixation_time_per_word".
std::map<std::string, RegressionResult> genre_split_regression(
    const std::vector<PairRecord>& pairs, const std::string& measure,
    const std::vector<std::string>& excluded_topics = {});

}  // namespace dast
