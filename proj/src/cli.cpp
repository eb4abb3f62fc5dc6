#include "dast/cli.hpp"

#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "dast/corpus.hpp"
#include "dast/error.hpp"
#include "dast/json_io.hpp"
#include "dast/markov.hpp"
#include "dast/metrics.hpp"
#include "dast/parser.hpp"

namespace dast::cli {

namespace {

struct OutputOptions {
  std::string out_path;  // empty = stdout
  std::string format = "json";
};

void emit(const OutputOptions& out, const std::string& content) {
  if (out.out_path.empty())
    std::cout << content;
  else
    write_text_file(out.out_path, content);
}

void emit_json(const OutputOptions& out, const Json& j) { emit(out, j.dump(2) + "\n"); }

/// Common knobs for commands that derive a lattice.
struct DeriveArgs {
  std::string logic_path;
  std::string text;
  std::vector<std::string> bindings;  // SYM or SYM=TERM
  DerivationLimits limits;
};

void add_derive_flags(CLI::App* cmd, DeriveArgs& args) {
  cmd->add_option("--logic", args.logic_path, "rule file")->required();
  cmd->add_option("--text", args.text, "text to quantize (or a #symbol naming a binding)");
  cmd->add_option("--binding", args.bindings,
                  "binding to quantize: SYM for an existing one, SYM=TERM to add one");
  cmd->add_option("--max-iter", args.limits.max_iterations, "derivation round limit");
  cmd->add_option("--max-depth", args.limits.max_term_depth, "produced term depth limit");
}

/// Applies SYM=TERM binding overrides; returns the text to quantize.
std::string resolve_binding(SemanticLogic& logic, const std::string& spec) {
  size_t eq = spec.find('=');
  if (eq == std::string::npos) return spec;
  std::string sym = spec.substr(0, eq);
  Term value = parse_term(spec.substr(eq + 1));
  for (Binding& b : logic.bindings)
    if (b.symbol == sym) {
      b.value = value;
      return sym;
    }
  logic.bindings.push_back(Binding{sym, std::move(value), -1});
  return sym;
}

Lattice run_derivation(DeriveArgs& args, SemanticLogic& logic, const std::string& text) {
  std::vector<Term> initial = logic.quantize(text);
  Lattice lattice = derive(initial, logic, args.limits);
  lattice.text = text;
  return lattice;
}

struct ComplexityArgs {
  std::string schema = "product";
  std::vector<std::string> tag_weights;  // TAG=W
  std::string dims = "maximal";
  double log_base = 2.0;
  bool log_normalized = false;
};

void add_complexity_flags(CLI::App* cmd, ComplexityArgs& args) {
  cmd->add_option("--schema", args.schema, "complexity schema")
      ->check(CLI::IsMember({"product", "tagged"}));
  cmd->add_option("--tag-weight", args.tag_weights, "tagged schema weight, TAG=W");
  cmd->add_option("--dims", args.dims, "dimension policy: maximal, all, or top:K");
  cmd->add_option("--log-base", args.log_base, "base for --log-normalize");
  cmd->add_flag("--log-normalize", args.log_normalized, "report log-normalized values");
}

ComplexityOptions complexity_options(const ComplexityArgs& args) {
  ComplexityOptions opt;
  opt.schema = args.schema == "tagged" ? ComplexitySchema::Tagged : ComplexitySchema::Product;
  for (const std::string& spec : args.tag_weights) {
    size_t eq = spec.find('=');
    if (eq == std::string::npos)
      throw validation_error("--tag-weight expects TAG=W, got " + spec);
    try {
      opt.tag_weights[spec.substr(0, eq)] = std::stod(spec.substr(eq + 1));
    } catch (const std::exception&) {
      throw validation_error("bad weight in --tag-weight " + spec);
    }
  }
  return opt;
}

SemanticPointOptions point_options(const std::string& dims) {
  SemanticPointOptions opt;
  if (dims == "maximal") {
    opt.policy = DimensionPolicy::MaximalNodes;
  } else if (dims == "all") {
    opt.policy = DimensionPolicy::AllNodes;
  } else if (dims.rfind("top:", 0) == 0) {
    opt.policy = DimensionPolicy::TopK;
    try {
      opt.top_k = std::stoi(dims.substr(4));
    } catch (const std::exception&) {
      throw validation_error("bad --dims value " + dims);
    }
  } else {
    throw validation_error("--dims must be maximal, all, or top:K");
  }
  return opt;
}

Json complexity_report(const Lattice& lattice, const SemanticLogic* logic,
                       const ComplexityArgs& args) {
  NodeValues values = node_complexity(lattice, complexity_options(args));
  Json report;
  report["schema"] = args.schema;
  report["dimension_policy"] = args.dims;
  if (args.log_normalized) {
    values = log_normalize(values, args.log_base);
    report["log_base"] = round12(args.log_base);
  }
  Json node_values = Json::array();
  for (const auto& [id, v] : values) {
    Json entry;
    entry["id"] = id;
    entry["value"] = round12(v);
    node_values.push_back(std::move(entry));
  }
  report["node_values"] = std::move(node_values);
  SemanticPoint point = semantic_point(lattice, values, point_options(args.dims));
  Json dims;
  for (const auto& [term, v] : point) dims[term] = round12(v);
  report["dimensions"] = std::move(dims);
  report["overall_complexity"] = round12(overall_complexity(point));
  if (logic)
    report["dastex"] = dastex(lattice, *logic);
  else
    report["dastex"] = nullptr;
  return report;
}

int cmd_validate(const std::string& path, bool strict) {
  SemanticLogic logic = load_logic_file(path, ParseOptions{strict});
  LogicStats stats = logic_stats(logic);
  Json j;
  j["dependency_count"] = stats.dependency_count;
  j["logic_id"] = logic.id();
  j["model_element_count"] = stats.model_element_count;
  j["operator_count"] = stats.operator_count;
  j["rule_count"] = stats.rule_count;
  j["theory_count"] = stats.theory_count;
  std::cout << j.dump(2) << "\n";
  return 0;
}

double scalar_complexity(const Lattice& lattice, const SemanticLogic& logic,
                         const ComplexityArgs& args, const std::string& mode) {
  if (mode == "dastex") return static_cast<double>(dastex(lattice, logic));
  NodeValues values = node_complexity(lattice, complexity_options(args));
  if (args.log_normalized) values = log_normalize(values, args.log_base);
  return overall_complexity(semantic_point(lattice, values, point_options(args.dims)));
}

Json score_report(const JudgmentVector& machine, const HumanJudgmentSet& humans) {
  PrecisionReport p = precision_report(machine, humans);
  Json j;
  j["comp_steps"] = round12(p.comp_steps);
  j["judgment_count"] = static_cast<int>(humans.size());
  j["no_deviation"] = round12(p.no_deviation);
  j["overall"] = round12(p.overall);
  Json dev = Json::array();
  for (double s : p.deviation_shares) dev.push_back(round12(s));
  j["deviation_shares"] = std::move(dev);
  Json votes = Json::array();
  for (double s : vote_values(humans)) votes.push_back(round12(s));
  j["vote_values"] = std::move(votes);
  Json paths = Json::array();
  for (double s : path_distribution(humans)) paths.push_back(round12(s));
  j["path_distribution"] = std::move(paths);
  if (humans.has_agreements()) {
    Json consensus;
    for (const auto& [level, precision] : consensus_classes(machine, humans))
      consensus[std::to_string(level)] = round12(precision);
    j["consensus"] = std::move(consensus);
  } else {
    j["consensus"] = nullptr;
  }
  return j;
}

std::string score_csv(const Json& report) {
  std::ostringstream os;
  os << "metric,value\n";
  os << "overall," << report["overall"].dump() << "\n";
  os << "no_deviation," << report["no_deviation"].dump() << "\n";
  os << "comp_steps," << report["comp_steps"].dump() << "\n";
  for (size_t i = 0; i < report["deviation_shares"].size(); ++i)
    os << "deviation_" << i << "," << report["deviation_shares"][i].dump() << "\n";
  for (size_t i = 0; i < report["vote_values"].size(); ++i)
    os << "vote_" << (i + 1) << "," << report["vote_values"][i].dump() << "\n";
  for (size_t i = 0; i < report["path_distribution"].size(); ++i)
    os << "path_" << (i + 1) << "," << report["path_distribution"][i].dump() << "\n";
  if (!report["consensus"].is_null())
    for (const auto& [level, precision] : report["consensus"].items())
      os << "consensus_" << level << "," << precision.dump() << "\n";
  return os.str();
}

const std::vector<std::string> kCorpusMetrics = {
    "word_count", "fixation_time_ms", "readability_level", "flesch_kincaid", "gunning_fog",
    "smog",       "ari",              "coleman_liau",      "dastex",         "dast_eval_time_min"};

Json corpus_report(const std::vector<PairRecord>& pairs,
                   const std::vector<std::string>& references) {
  std::vector<std::string> included;
  Json omitted = Json::object();
  for (const std::string& m : kCorpusMetrics) {
    bool everywhere = true;
    for (const PairRecord& p : pairs)
      if (!p.simple.has_metric(m) || !p.hard.has_metric(m)) everywhere = false;
    if (everywhere)
      included.push_back(m);
    else
      omitted[m] = "not present on every paragraph";
  }
  if (included.empty()) throw data_error("no metric is present on every paragraph");

  std::map<std::string, double> overall;
  std::map<std::string, std::vector<double>> curves;
  for (const std::string& m : included) {
    overall[m] = overall_difficulty_ratio(m, pairs);
    curves[m] = dr_curve(m, pairs);
  }

  std::vector<std::string> refs = references.empty() ? included : references;
  for (const std::string& r : refs)
    if (!overall.count(r)) throw validation_error("reference metric " + r + " not in corpus");

  Json metrics = Json::object();
  for (const std::string& m : included) {
    Json jm;
    jm["overall_dr"] = round12(overall[m]);
    Json per_pair = Json::array();
    for (const PairRecord& p : pairs)
      per_pair.push_back(round12(difficulty_ratio(
          m == "fixation_time_per_word"
              ? p.simple.metric("fixation_time_ms") / p.simple.metric("word_count")
              : p.simple.metric(m),
          m == "fixation_time_per_word"
              ? p.hard.metric("fixation_time_ms") / p.hard.metric("word_count")
              : p.hard.metric(m))));
    jm["per_pair_dr"] = std::move(per_pair);
    Json curve = Json::array();
    for (double v : curves[m]) curve.push_back(round12(v));
    jm["curve"] = std::move(curve);
    Json errors = Json::object();
    for (const std::string& r : refs)
      errors[r] = round12(dr_error_pct(overall[m], overall[r]));
    jm["error_pct"] = std::move(errors);
    metrics[m] = std::move(jm);
  }

  Json distances = Json::object();
  for (const std::string& a : included) {
    Json row = Json::object();
    for (const std::string& b : included)
      if (a != b) row[b] = round12(curve_distance(curves[a], curves[b]));
    distances[a] = std::move(row);
  }

  Json topics = Json::array();
  for (const PairRecord& p : pairs) topics.push_back(p.topic);

  Json j;
  j["curve_distances"] = std::move(distances);
  j["metrics"] = std::move(metrics);
  j["omitted"] = std::move(omitted);
  j["pair_count"] = static_cast<int>(pairs.size());
  j["topics"] = std::move(topics);
  return j;
}

std::string corpus_csv(const Json& report) {
  std::vector<std::string> metrics;
  for (const auto& [name, _] : report["metrics"].items()) metrics.push_back(name);
  std::ostringstream os;
  os << "metric,overall_dr";
  for (const std::string& m : metrics) os << ",error_vs_" << m;
  size_t curve_len = report["metrics"][metrics.front()]["curve"].size();
  for (size_t i = 1; i <= curve_len; ++i) os << ",curve_" << i;
  os << "\n";
  for (const std::string& m : metrics) {
    const Json& jm = report["metrics"][m];
    os << m << "," << jm["overall_dr"].dump();
    for (const std::string& other : metrics) {
      os << ",";
      if (jm["error_pct"].contains(other)) os << jm["error_pct"][other].dump();
    }
    for (const Json& v : jm["curve"]) os << "," << v.dump();
    os << "\n";
  }
  return os.str();
}

int dispatch(const std::vector<std::string>& args) {
  CLI::App app{"dast: semantic lattices, complexity metrics, and judgment scoring"};
  app.require_subcommand(1);

  // validate
  auto* validate = app.add_subcommand("validate", "check a rule file and print its stats");
  std::string validate_path;
  bool no_strict = false;
  validate->add_option("path", validate_path, "rule file")->required();
  validate->add_flag("--no-strict", no_strict, "skip the intuition coverage check");

  // derive
  auto* derive_cmd = app.add_subcommand("derive", "derive the semantic lattice for a text");
  DeriveArgs derive_args;
  OutputOptions derive_out;
  bool terms_only = false;
  add_derive_flags(derive_cmd, derive_args);
  derive_cmd->add_flag("--terms-only", terms_only, "print the closure terms, one per line");
  derive_cmd->add_option("--out", derive_out.out_path, "write output to a file");
  derive_cmd->add_option("--format", derive_out.format)->check(CLI::IsMember({"json"}));

  // complexity
  auto* complexity_cmd = app.add_subcommand("complexity", "complexity values for a lattice");
  DeriveArgs cx_derive;
  ComplexityArgs cx_args;
  OutputOptions cx_out;
  std::string cx_lattice_path, cx_logic_path, cx_text;
  std::vector<std::string> cx_bindings;
  complexity_cmd->add_option("--lattice", cx_lattice_path, "previously derived lattice JSON");
  complexity_cmd->add_option("--logic", cx_logic_path, "rule file");
  complexity_cmd->add_option("--text", cx_text, "text to quantize");
  complexity_cmd->add_option("--binding", cx_bindings, "binding to quantize");
  complexity_cmd->add_option("--max-iter", cx_derive.limits.max_iterations);
  complexity_cmd->add_option("--max-depth", cx_derive.limits.max_term_depth);
  add_complexity_flags(complexity_cmd, cx_args);
  complexity_cmd->add_option("--out", cx_out.out_path);
  complexity_cmd->add_option("--format", cx_out.format)->check(CLI::IsMember({"json"}));

  // compare
  auto* compare_cmd = app.add_subcommand("compare", "judge five sentences through the bracket");
  DeriveArgs cmp_args;
  ComplexityArgs cmp_cx;
  OutputOptions cmp_out;
  std::string cmp_mode = "overall";
  add_derive_flags(compare_cmd, cmp_args);
  add_complexity_flags(compare_cmd, cmp_cx);
  compare_cmd->add_option("--complexity", cmp_mode, "scalar to compare")
      ->check(CLI::IsMember({"overall", "dastex"}));
  compare_cmd->add_option("--out", cmp_out.out_path);
  compare_cmd->add_option("--format", cmp_out.format)->check(CLI::IsMember({"json"}));

  // score
  auto* score_cmd = app.add_subcommand("score", "score human judgments against a bracket result");
  std::string score_dj, score_hj;
  OutputOptions score_out;
  score_cmd->add_option("--dj", score_dj, "bracket result JSON")->required();
  score_cmd->add_option("--hj", score_hj, "human judgments CSV")->required();
  score_cmd->add_option("--out", score_out.out_path);
  score_cmd->add_option("--format", score_out.format)->check(CLI::IsMember({"json", "csv"}));

  // corpus
  auto* corpus_cmd = app.add_subcommand("corpus", "difficulty-ratio analysis of a paired corpus");
  std::string corpus_path;
  std::vector<std::string> corpus_refs;
  OutputOptions corpus_out;
  corpus_cmd->add_option("--csv", corpus_path, "paired corpus CSV")->required();
  corpus_cmd->add_option("--reference", corpus_refs, "restrict error columns to these metrics");
  corpus_cmd->add_option("--out", corpus_out.out_path);
  corpus_cmd->add_option("--format", corpus_out.format)->check(CLI::IsMember({"json", "csv"}));

  // markov
  auto* markov_cmd = app.add_subcommand("markov", "deviation model: pmf, simulation, fitting");
  OutputOptions markov_out;
  double markov_alpha = -1.0;
  std::string markov_alphas, markov_fit;
  std::uint64_t markov_n = 0, markov_seed = 0;
  markov_cmd->add_option("--alpha", markov_alpha, "shared deviation probability");
  markov_cmd->add_option("--alphas", markov_alphas, "four comma-separated probabilities");
  markov_cmd->add_option("--simulate", markov_n, "simulate this many participants");
  markov_cmd->add_option("--seed", markov_seed, "simulation seed");
  markov_cmd->add_option("--fit", markov_fit, "five observed shares to fit an alpha to");
  markov_cmd->add_option("--out", markov_out.out_path);
  markov_cmd->add_option("--format", markov_out.format)->check(CLI::IsMember({"json"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (validate->parsed()) return cmd_validate(validate_path, !no_strict);

  if (derive_cmd->parsed()) {
    SemanticLogic logic = load_logic_file(derive_args.logic_path);
    std::string text = derive_args.text;
    for (const std::string& spec : derive_args.bindings) text = resolve_binding(logic, spec);
    if (text.empty()) throw validation_error("derive needs --text or --binding");
    try {
      Lattice lattice = run_derivation(derive_args, logic, text);
      if (terms_only) {
        std::ostringstream os;
        for (const Term& t : lattice.terms()) os << t.str() << "\n";
        emit(derive_out, os.str());
      } else {
        emit_json(derive_out, lattice_to_json(lattice));
      }
      return 0;
    } catch (const LimitError& e) {
      Lattice partial = e.partial();
      partial.text = text;
      emit_json(derive_out, lattice_to_json(partial));
      throw;
    }
  }

  if (complexity_cmd->parsed()) {
    std::optional<SemanticLogic> logic;
    if (!cx_logic_path.empty()) logic = load_logic_file(cx_logic_path);
    Lattice lattice;
    if (!cx_lattice_path.empty()) {
      lattice = load_lattice_file(cx_lattice_path);
    } else {
      if (!logic) throw validation_error("complexity needs --lattice or --logic");
      std::string text = cx_text;
      for (const std::string& spec : cx_bindings) text = resolve_binding(*logic, spec);
      if (text.empty()) throw validation_error("complexity needs --text or --binding");
      cx_derive.logic_path = cx_logic_path;
      lattice = run_derivation(cx_derive, *logic, text);
    }
    emit_json(cx_out, complexity_report(lattice, logic ? &*logic : nullptr, cx_args));
    return 0;
  }

  if (compare_cmd->parsed()) {
    if (cmp_args.bindings.size() != 5)
      throw validation_error("compare needs exactly five --binding sentences");
    SemanticLogic logic = load_logic_file(cmp_args.logic_path);
    std::array<double, 5> complexities{};
    Json sentences = Json::array();
    for (size_t i = 0; i < 5; ++i) {
      std::string text = resolve_binding(logic, cmp_args.bindings[i]);
      Lattice lattice = run_derivation(cmp_args, logic, text);
      complexities[i] = scalar_complexity(lattice, logic, cmp_cx, cmp_mode);
      Json s;
      s["complexity"] = round12(complexities[i]);
      s["text"] = text;
      sentences.push_back(std::move(s));
    }
    Json j;
    j["judgment"] = judgment_to_json(dast_judge(complexities));
    j["mode"] = cmp_mode;
    j["sentences"] = std::move(sentences);
    emit_json(cmp_out, j);
    return 0;
  }

  if (score_cmd->parsed()) {
    JudgmentVector machine = load_judgment_file(score_dj);
    HumanJudgmentSet humans = load_judgments_csv(score_hj);
    Json report = score_report(machine, humans);
    if (score_out.format == "csv")
      emit(score_out, score_csv(report));
    else
      emit_json(score_out, report);
    return 0;
  }

  if (corpus_cmd->parsed()) {
    std::vector<PairRecord> pairs = load_corpus_csv(corpus_path);
    Json report = corpus_report(pairs, corpus_refs);
    if (corpus_out.format == "csv")
      emit(corpus_out, corpus_csv(report));
    else
      emit_json(corpus_out, report);
    return 0;
  }

  if (markov_cmd->parsed()) {
    DeviationModel model;
    if (!markov_alphas.empty()) {
      std::array<double, 4> alphas{};
      std::istringstream in(markov_alphas);
      std::string field;
      size_t i = 0;
      while (std::getline(in, field, ',')) {
        if (i >= 4) throw validation_error("--alphas takes exactly four values");
        try {
          alphas[i++] = std::stod(field);
        } catch (const std::exception&) {
          throw validation_error("bad probability '" + field + "' in --alphas");
        }
      }
      if (i != 4) throw validation_error("--alphas takes exactly four values");
      model = make_model(alphas);
    } else if (markov_alpha >= 0.0) {
      model = make_model(markov_alpha);
    } else if (markov_fit.empty()) {
      throw validation_error("markov needs --alpha, --alphas, or --fit");
    }

    Json j;
    if (!markov_alphas.empty() || markov_alpha >= 0.0) {
      Json alphas = Json::array();
      for (double a : model.alphas) alphas.push_back(round12(a));
      j["alphas"] = std::move(alphas);
      Json pmf = Json::array();
      for (double p : deviation_pmf(model)) pmf.push_back(round12(p));
      j["pmf"] = std::move(pmf);
      if (markov_n > 0) {
        Json sim;
        sim["n"] = markov_n;
        sim["seed"] = markov_seed;
        Json shares = Json::array();
        for (double s : simulate(model, markov_n, markov_seed)) shares.push_back(round12(s));
        sim["pmf"] = std::move(shares);
        j["simulated"] = std::move(sim);
      }
    }
    if (!markov_fit.empty()) {
      std::array<double, 5> observed{};
      std::istringstream in(markov_fit);
      std::string field;
      size_t i = 0;
      while (std::getline(in, field, ',')) {
        if (i >= 5) throw validation_error("--fit takes exactly five shares");
        try {
          observed[i++] = std::stod(field);
        } catch (const std::exception&) {
          throw validation_error("bad share '" + field + "' in --fit");
        }
      }
      if (i != 5) throw validation_error("--fit takes exactly five shares");
      AlphaFit fit = fit_alpha(observed);
      Json jf;
      jf["alpha"] = round12(fit.alpha);
      jf["residual"] = round12(fit.residual);
      j["fit"] = std::move(jf);
    }
    emit_json(markov_out, j);
    return 0;
  }

  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args) {
  try {
    return dispatch(args);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::Io:
        return 1;
      case ErrorKind::Parse:
      case ErrorKind::Validation:
        return 2;
      case ErrorKind::Limit:
        return 3;
      case ErrorKind::Data:
        return 4;
    }
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace dast::cli
