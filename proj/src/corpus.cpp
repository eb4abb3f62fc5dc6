#include "dast/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include "dast/error.hpp"

namespace dast {

namespace {

const std::vector<std::string> kCorpusColumns = {
    "id",         "topic",          "genre_class", "variant",     "word_count",
    "fixation_time_ms", "readability_level", "flesch_kincaid", "gunning_fog", "smog",
    "ari",        "coleman_liau",   "dastex",      "dast_eval_time_min"};

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_row(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) out.push_back(trim(field));
  if (!line.empty() && line.back() == ',') out.push_back("");
  return out;
}

double parse_number(const std::string& field, int line) {
  try {
    size_t used = 0;
    double v = std::stod(field, &used);
    if (used != field.size()) throw std::invalid_argument(field);
    return v;
  } catch (const std::exception&) {
    throw data_error("expected a number, got '" + field + "'", line);
  }
}

}  // namespace

double ParagraphRecord::metric(const std::string& name) const {
  auto it = metrics.find(name);
  if (it == metrics.end())
    throw data_error("paragraph " + id + " has no metric " + name);
  return it->second;
}

std::vector<PairRecord> parse_corpus_csv(const std::string& content) {
  std::istringstream in(content);
  std::string line;
  if (!std::getline(in, line)) throw data_error("empty corpus CSV");
  std::vector<std::string> header = split_row(trim(line));
  if (header.size() < 4 || header[0] != "id" || header[1] != "topic" ||
      header[2] != "genre_class" || header[3] != "variant")
    throw data_error("corpus CSV must start with id,topic,genre_class,variant");
  for (size_t i = 4; i < header.size(); ++i) {
    if (std::find(kCorpusColumns.begin() + 4, kCorpusColumns.end(), header[i]) ==
        kCorpusColumns.end())
      throw data_error("unknown corpus column " + header[i]);
  }

  std::map<std::string, PairRecord> by_topic;
  std::map<std::string, int> seen_variants;  // topic+variant -> line
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    std::string t = trim(line);
    if (t.empty()) continue;
    std::vector<std::string> fields = split_row(t);
    if (fields.size() != header.size())
      throw data_error("expected " + std::to_string(header.size()) + " fields", line_no);
    ParagraphRecord rec;
    rec.id = fields[0];
    rec.topic = fields[1];
    rec.genre_class = fields[2];
    rec.variant = fields[3];
    if (rec.genre_class != "history-literature" && rec.genre_class != "geography-science")
      throw data_error("unknown genre_class " + rec.genre_class, line_no);
    if (rec.variant != "simple" && rec.variant != "hard")
      throw data_error("variant must be simple or hard, got " + rec.variant, line_no);
    for (size_t i = 4; i < header.size(); ++i) {
      if (fields[i].empty()) continue;  // metric omitted for this paragraph
      double v = parse_number(fields[i], line_no);
      if (header[i] == "word_count" && v <= 0)
        throw data_error("word_count must be positive", line_no);
      rec.metrics[header[i]] = v;
    }
    std::string key = rec.topic + "/" + rec.variant;
    if (seen_variants.count(key))
      throw data_error("duplicate " + rec.variant + " paragraph for topic " + rec.topic, line_no);
    seen_variants[key] = line_no;
    PairRecord& pair = by_topic[rec.topic];
    pair.topic = rec.topic;
    (rec.variant == "simple" ? pair.simple : pair.hard) = std::move(rec);
  }
  if (by_topic.empty()) throw data_error("corpus CSV has no rows");

  std::vector<PairRecord> pairs;
  for (auto& [topic, pair] : by_topic) {
    if (pair.simple.id.empty() || pair.hard.id.empty())
      throw data_error("topic " + topic + " is missing one variant");
    if (pair.simple.genre_class != pair.hard.genre_class)
      throw data_error("topic " + topic + " has mismatched genre classes");
    pairs.push_back(std::move(pair));
  }
  return pairs;  // std::map already ordered by topic
}

std::vector<PairRecord> load_corpus_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_corpus_csv(buf.str());
}

double difficulty_ratio(double simple_value, double hard_value) {
  if (hard_value == 0.0) throw validation_error("difficulty ratio with zero hard value");
  return simple_value / hard_value;
}

namespace {

double pair_metric(const PairRecord& pair, const ParagraphRecord& rec, const std::string& metric) {
  if (metric == "fixation_time_per_word")
    return rec.metric("fixation_time_ms") / rec.metric("word_count");
  (void)pair;
  return rec.metric(metric);
}

}  // namespace

double overall_difficulty_ratio(const std::string& metric, const std::vector<PairRecord>& pairs) {
  if (pairs.empty()) throw validation_error("no pairs");
  double simple_sum = 0.0, hard_sum = 0.0;
  for (const PairRecord& p : pairs) {
    simple_sum += pair_metric(p, p.simple, metric);
    hard_sum += pair_metric(p, p.hard, metric);
  }
  return difficulty_ratio(simple_sum / pairs.size(), hard_sum / pairs.size());
}

std::vector<double> dr_curve(const std::string& metric, const std::vector<PairRecord>& pairs) {
  if (pairs.empty()) throw validation_error("no pairs");
  std::vector<double> ratios;
  ratios.reserve(pairs.size());
  for (const PairRecord& p : pairs) {
    double r = difficulty_ratio(pair_metric(p, p.simple, metric), pair_metric(p, p.hard, metric));
    if (r <= 0.0) throw validation_error("difficulty ratios must be positive for curves");
    ratios.push_back(r);
  }
  std::sort(ratios.begin(), ratios.end());
  double top = ratios.back();
  for (double& r : ratios) r /= top;
  return ratios;
}

double dr_error_pct(double dr, double reference_dr) {
  if (reference_dr == 0.0) throw validation_error("error against a zero reference");
  return 100.0 * std::abs(dr - reference_dr) / reference_dr;
}

double curve_distance(const std::vector<double>& lhs, const std::vector<double>& rhs) {
  if (lhs.size() != rhs.size()) throw validation_error("curves differ in length");
  double best = 0.0;
  for (size_t i = 0; i < lhs.size(); ++i) best = std::max(best, std::abs(lhs[i] - rhs[i]));
  return best;
}

namespace {

bool word_char(unsigned char c) { return std::isalnum(c) || c == '\'' || c == '-'; }

bool vowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u' || c == 'y';
}

int syllables_in(std::string word) {
  std::string letters;
  for (char c : word)
    if (std::isalpha(static_cast<unsigned char>(c))) letters.push_back(std::tolower(c));
  if (letters.empty()) return 1;
  if (letters.size() > 1 && letters.back() == 'e') letters.pop_back();  // silent e
  int groups = 0;
  bool in_group = false;
  for (char c : letters) {
    if (vowel(c)) {
      if (!in_group) ++groups;
      in_group = true;
    } else {
      in_group = false;
    }
  }
  return std::max(groups, 1);
}

}  // namespace

TextStats text_stats(const std::string& text) {
  TextStats stats;
  std::string word;
  int words_in_sentence = 0;
  auto end_word = [&]() {
    if (word.empty()) return;
    ++stats.words;
    ++words_in_sentence;
    stats.syllables += syllables_in(word);
    word.clear();
  };
  auto end_sentence = [&]() {
    if (words_in_sentence > 0) ++stats.sentences;
    words_in_sentence = 0;
  };
  for (unsigned char c : text) {
    if (word_char(c)) {
      word.push_back(static_cast<char>(c));
      continue;
    }
    end_word();
    if (c == '.' || c == '!' || c == '?') end_sentence();
  }
  end_word();
  end_sentence();
  if (stats.words == 0) throw validation_error("text has no words");
  if (stats.sentences == 0) stats.sentences = 1;  // unterminated text counts as one sentence
  stats.words_per_sentence = static_cast<double>(stats.words) / stats.sentences;
  stats.syllables_per_word = static_cast<double>(stats.syllables) / stats.words;
  return stats;
}

double flesch_kincaid(double words_per_sentence, double syllables_per_word) {
  if (words_per_sentence <= 0 || syllables_per_word <= 0)
    throw validation_error("rates must be positive");
  return 0.39 * words_per_sentence + 11.8 * syllables_per_word - 15.59;
}

double flesch_kincaid(const std::string& text) {
  TextStats s = text_stats(text);
  return flesch_kincaid(s.words_per_sentence, s.syllables_per_word);
}

RegressionResult linear_regression(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw validation_error("regression inputs differ in length");
  const size_t n = x.size();
  if (n < 2) throw validation_error("regression needs at least two points");
  double mx = 0.0, my = 0.0;
  for (size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0) throw validation_error("regression with constant x is degenerate");
  RegressionResult r;
  r.slope = sxy / sxx;
  r.intercept = my - r.slope * mx;
  if (syy == 0.0) {
    r.r_squared = 0.0;  // constant y: no variance to explain
  } else {
    double ss_res = 0.0;
    for (size_t i = 0; i < n; ++i) {
      double e = y[i] - (r.intercept + r.slope * x[i]);
      ss_res += e * e;
    }
    r.r_squared = 1.0 - ss_res / syy;
  }
  return r;
}

ExponentialFit exponential_fit(const std::vector<double>& x, const std::vector<double>& y) {
  std::vector<double> logs;
  logs.reserve(y.size());
  for (double v : y) {
    if (v <= 0.0) throw validation_error("exponential fit needs positive y values");
    logs.push_back(std::log(v));
  }
  RegressionResult lin = linear_regression(x, logs);
  ExponentialFit fit;
  fit.amplitude = std::exp(lin.intercept);
  fit.rate = lin.slope;
  fit.r_squared = lin.r_squared;
  return fit;
}

std::map<std::string, RegressionResult> genre_split_regression(
    const std::vector<PairRecord>& pairs, const std::string& measure,
    const std::vector<std::string>& excluded_topics) {
  std::map<std::string, std::pair<std::vector<double>, std::vector<double>>> groups;
  for (const PairRecord& p : pairs) {
    if (std::find(excluded_topics.begin(), excluded_topics.end(), p.topic) !=
        excluded_topics.end())
      continue;
    double x = difficulty_ratio(pair_metric(p, p.simple, "dastex"),
                                pair_metric(p, p.hard, "dastex"));
    double y = difficulty_ratio(pair_metric(p, p.simple, measure),
                                pair_metric(p, p.hard, measure));
    groups[p.simple.genre_class].first.push_back(x);
    groups[p.simple.genre_class].second.push_back(y);
  }
  std::map<std::string, RegressionResult> out;
  for (const auto& [genre, xy] : groups) out[genre] = linear_regression(xy.first, xy.second);
  return out;
}

}  // namespace dast
