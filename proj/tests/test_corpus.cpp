#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "dast/corpus.hpp"
#include "dast/error.hpp"
#include "helpers.hpp"

using namespace dast;

namespace {

const char* kHeader = "id,topic,genre_class,variant,word_count,fixation_time_ms,dastex\n";

std::vector<PairRecord> tiny_corpus() {
  return parse_corpus_csv(std::string(kHeader) +
                          "a-s,alpha,history-literature,simple,80,20000,20\n"
                          "a-h,alpha,history-literature,hard,100,40000,40\n"
                          "b-s,beta,geography-science,simple,90,30000,30\n"
                          "b-h,beta,geography-science,hard,120,37500,40\n");
}

}  // namespace

TEST_CASE("corpus CSV parses into topic-sorted pairs") {
  std::vector<PairRecord> pairs = tiny_corpus();
  REQUIRE(pairs.size() == 2);
  CHECK(pairs[0].topic == "alpha");
  CHECK(pairs[1].topic == "beta");
  CHECK(pairs[0].simple.id == "a-s");
  CHECK(pairs[0].hard.metric("fixation_time_ms") == 40000.0);
  CHECK(pairs[0].simple.has_metric("word_count"));
  CHECK_FALSE(pairs[0].simple.has_metric("smog"));
  CHECK_THROWS_AS(pairs[0].simple.metric("smog"), Error);
}

TEST_CASE("corpus CSV rejects structural defects") {
  CHECK_THROWS_AS(parse_corpus_csv(""), Error);
  CHECK_THROWS_AS(parse_corpus_csv("nope\n"), Error);
  CHECK_THROWS_AS(parse_corpus_csv("id,topic,genre_class,variant,bogus_metric\n"), Error);
  // Missing hard variant.
  CHECK_THROWS_AS(
      parse_corpus_csv(std::string(kHeader) + "a-s,alpha,history-literature,simple,80,1,1\n"),
      Error);
  // Duplicated variant.
  CHECK_THROWS_AS(parse_corpus_csv(std::string(kHeader) +
                                   "a-s,alpha,history-literature,simple,80,1,1\n"
                                   "a-s2,alpha,history-literature,simple,81,1,1\n"
                                   "a-h,alpha,history-literature,hard,100,1,1\n"),
                  Error);
  // Unknown genre class, bad variant, short row, non-numeric cell.
  CHECK_THROWS_AS(parse_corpus_csv(std::string(kHeader) + "x,t,essay,simple,80,1,1\n"), Error);
  CHECK_THROWS_AS(
      parse_corpus_csv(std::string(kHeader) + "x,t,history-literature,medium,80,1,1\n"), Error);
  CHECK_THROWS_AS(parse_corpus_csv(std::string(kHeader) + "x,t,history-literature,simple,80\n"),
                  Error);
  CHECK_THROWS_AS(
      parse_corpus_csv(std::string(kHeader) + "x,t,history-literature,simple,eighty,1,1\n"),
      Error);
  CHECK_THROWS_AS(
      parse_corpus_csv(std::string(kHeader) + "x,t,history-literature,simple,-5,1,1\n"), Error);

  try {
    parse_corpus_csv(std::string(kHeader) + "x,t,history-literature,simple,80,oops,1\n");
    FAIL("expected a data error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Data);
    CHECK(e.line() == 2);
  }
}

TEST_CASE("difficulty ratios divide simple by hard") {
  CHECK(difficulty_ratio(3.0, 4.0) == 0.75);
  CHECK_THROWS_AS(difficulty_ratio(1.0, 0.0), Error);

  std::vector<PairRecord> pairs = tiny_corpus();
  // Means: simple (20+30)/2 = 25, hard (40+40)/2 = 40.
  CHECK(overall_difficulty_ratio("dastex", pairs) == doctest::Approx(0.625).epsilon(1e-12));
  // Derived per-word rate: simple 250/275, hard 400/312.5.
  double per_word = overall_difficulty_ratio("fixation_time_per_word", pairs);
  CHECK(per_word == doctest::Approx((250.0 + 1000.0 / 3.0) / 2.0 /
                                    ((400.0 + 312.5) / 2.0)));
  CHECK_THROWS_AS(overall_difficulty_ratio("smog", pairs), Error);
  CHECK_THROWS_AS(overall_difficulty_ratio("dastex", {}), Error);
}

TEST_CASE("the ratio curve sorts ascending and tops out at one") {
  std::vector<PairRecord> pairs = parse_corpus_csv(std::string(kHeader) +
                                                   "a-s,alpha,history-literature,simple,50,1,4\n"
                                                   "a-h,alpha,history-literature,hard,50,1,10\n"
                                                   "b-s,beta,geography-science,simple,50,1,8\n"
                                                   "b-h,beta,geography-science,hard,50,1,10\n"
                                                   "c-s,gamma,geography-science,simple,50,1,6\n"
                                                   "c-h,gamma,geography-science,hard,50,1,10\n");
  // Per-pair ratios 0.4, 0.8, 0.6 scale to 0.5, 0.75, 1.0 once sorted.
  std::vector<double> curve = dr_curve("dastex", pairs);
  REQUIRE(curve.size() == 3);
  CHECK(curve[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(curve[1] == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(curve[2] == 1.0);
  for (size_t i = 1; i < curve.size(); ++i) CHECK(curve[i] >= curve[i - 1]);
}

TEST_CASE("rescaling a metric leaves its curve untouched") {
  std::vector<PairRecord> pairs = tiny_corpus();
  std::vector<double> before = dr_curve("fixation_time_ms", pairs);
  for (PairRecord& p : pairs) {
    p.simple.metrics["fixation_time_ms"] *= 1000.0;
    p.hard.metrics["fixation_time_ms"] *= 1000.0;
  }
  std::vector<double> after = dr_curve("fixation_time_ms", pairs);
  REQUIRE(before.size() == after.size());
  for (size_t i = 0; i < before.size(); ++i)
    CHECK(after[i] == doctest::Approx(before[i]).epsilon(1e-12));
}

TEST_CASE("error percentage and curve distance") {
  CHECK(dr_error_pct(0.64, 0.62) == doctest::Approx(100.0 * 0.02 / 0.62));
  CHECK(dr_error_pct(0.62, 0.62) == 0.0);
  CHECK_THROWS_AS(dr_error_pct(0.5, 0.0), Error);

  CHECK(curve_distance({0.1, 0.5, 1.0}, {0.2, 0.4, 1.0}) == doctest::Approx(0.1));
  CHECK_THROWS_AS(curve_distance({0.1}, {0.1, 0.2}), Error);
}

TEST_CASE("text statistics count sentences, words and syllables") {
  TextStats hello = text_stats("Hello world.");
  CHECK(hello.sentences == 1);
  CHECK(hello.words == 2);
  CHECK(hello.syllables == 3);
  CHECK(hello.words_per_sentence == 2.0);

  TextStats abc = text_stats("A. B. C.");
  CHECK(abc.sentences == 3);
  CHECK(abc.words == 3);
  CHECK(abc.syllables == 3);

  CHECK(text_stats("strengths").syllables == 1);
  CHECK(text_stats("strengths").sentences == 1);  // unterminated text is one sentence
  CHECK(text_stats("made").syllables == 1);      // trailing silent e
  CHECK(text_stats("banana").syllables == 3);
  CHECK(text_stats("readable").syllables == 2);  // 'ea' is one vowel group
  CHECK(text_stats("Stop! Really? Yes.").sentences == 3);
  CHECK(text_stats("it's well-known").words == 2);
  CHECK_THROWS_AS(text_stats("?! ... ,"), Error);
  CHECK_THROWS_AS(text_stats(""), Error);
}

TEST_CASE("grade level formula and monotonicity") {
  CHECK(flesch_kincaid(10.0, 1.5) == doctest::Approx(6.01).epsilon(1e-12));
  CHECK(flesch_kincaid("Hello world.") ==
        doctest::Approx(0.39 * 2.0 + 11.8 * 1.5 - 15.59));
  CHECK_THROWS_AS(flesch_kincaid(0.0, 1.0), Error);

  // Longer sentences and heavier words only raise the grade.
  for (double wps = 2.0; wps <= 30.0; wps += 3.0)
    for (double spw = 1.0; spw <= 2.4; spw += 0.2) {
      CHECK(flesch_kincaid(wps + 1.0, spw) > flesch_kincaid(wps, spw));
      CHECK(flesch_kincaid(wps, spw + 0.1) > flesch_kincaid(wps, spw));
    }
}

TEST_CASE("linear regression recovers exact lines") {
  RegressionResult r = linear_regression({1, 2, 3, 4}, {3, 5, 7, 9});  // y = 2x + 1
  CHECK(r.slope == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(r.intercept == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.r_squared == doctest::Approx(1.0).epsilon(1e-12));

  RegressionResult flat = linear_regression({1, 2, 3}, {4, 4, 4});
  CHECK(flat.slope == 0.0);
  CHECK(flat.r_squared == 0.0);  // no variance to explain

  CHECK_THROWS_AS(linear_regression({1, 1, 1}, {1, 2, 3}), Error);
  CHECK_THROWS_AS(linear_regression({1}, {1}), Error);
  CHECK_THROWS_AS(linear_regression({1, 2}, {1, 2, 3}), Error);
}

TEST_CASE("residuals orthogonal to the design give a closed-form r-squared") {
  // x symmetric around zero, residuals c * (1,-1,-1,1): both moments vanish,
  // so R^2 = 1 - 4c^2 / (slope^2 * 20 + 4c^2); c^2 = 85/83 lands on 0.83.
  const double c = std::sqrt(85.0 / 83.0);
  std::vector<double> x = {-3, -1, 1, 3};
  std::vector<double> y;
  for (size_t i = 0; i < x.size(); ++i) {
    double residual = c * ((i == 0 || i == 3) ? 1.0 : -1.0);
    y.push_back(2.0 + x[i] + residual);
  }
  RegressionResult r = linear_regression(x, y);
  CHECK(r.slope == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.intercept == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(r.r_squared == doctest::Approx(0.83).epsilon(1e-12));
}

TEST_CASE("exponential fit works in log space") {
  std::vector<double> x = {0, 1, 2, 3};
  std::vector<double> y;
  for (double v : x) y.push_back(3.0 * std::exp(0.5 * v));
  ExponentialFit fit = exponential_fit(x, y);
  CHECK(fit.amplitude == doctest::Approx(3.0).epsilon(1e-9));
  CHECK(fit.rate == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(fit.r_squared == doctest::Approx(1.0).epsilon(1e-9));
  CHECK_THROWS_AS(exponential_fit({0, 1}, {1.0, -2.0}), Error);
}

TEST_CASE("the shipped corpus reproduces its frozen ratio table") {
  std::vector<PairRecord> pairs = load_corpus_csv(test::fixture_path("scanpath_pairs.csv"));
  REQUIRE(pairs.size() == 16);

  const std::map<std::string, double> expected = {
      {"dastex", 0.64},         {"fixation_time_ms", 0.62}, {"word_count", 0.71},
      {"readability_level", 0.58}, {"flesch_kincaid", 0.52},  {"gunning_fog", 0.54},
      {"coleman_liau", 0.79},   {"smog", 0.68},             {"ari", 0.46},
  };
  for (const auto& [metric, want] : expected) {
    CAPTURE(metric);
    CHECK(overall_difficulty_ratio(metric, pairs) == doctest::Approx(want).epsilon(1e-9));
  }

  // Both genre halves regress cleanly on the dastex ratios.
  std::map<std::string, RegressionResult> split = genre_split_regression(pairs, "fixation_time_ms");
  REQUIRE(split.size() == 2);
  for (const auto& [genre, r] : split) {
    CAPTURE(genre);
    CHECK(r.r_squared >= 0.0);
    CHECK(r.r_squared <= 1.0);
  }

  // Excluding one half's topics leaves only the other.
  std::vector<std::string> history;
  for (const PairRecord& p : pairs)
    if (p.simple.genre_class == "history-literature") history.push_back(p.topic);
  std::map<std::string, RegressionResult> rest =
      genre_split_regression(pairs, "fixation_time_per_word", history);
  CHECK(rest.size() == 1);
  CHECK(rest.count("geography-science") == 1);
}
