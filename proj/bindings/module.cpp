// Python bindings for the core library. Thin: every entry point delegates to
// the C++ API; errors surface as dast.Error with the C++ message.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <set>
#include <string>
#include <vector>

#include "dast/corpus.hpp"
#include "dast/engine.hpp"
#include "dast/json_io.hpp"
#include "dast/judgment.hpp"
#include "dast/markov.hpp"
#include "dast/metrics.hpp"
#include "dast/parser.hpp"

namespace py = pybind11;
using namespace dast;

namespace {

ParseOptions parse_options(bool strict_symbols) {
  ParseOptions options;
  options.strict_symbols = strict_symbols;
  return options;
}

ComplexityOptions complexity_options(ComplexitySchema schema,
                                     const std::map<std::string, double>& tag_weights) {
  ComplexityOptions options;
  options.schema = schema;
  options.tag_weights = tag_weights;
  return options;
}

}  // namespace

PYBIND11_MODULE(_dast, m) {
  m.doc() = "Semantic-complexity core: rule files, derivation lattices, "
            "complexity metrics, judgment scoring, corpus analysis.";

  py::register_exception<Error>(m, "Error");

  // --- terms -------------------------------------------------------------
  py::class_<Term>(m, "Term")
      .def(py::init<>())
      .def_static("atom", &Term::atom, py::arg("name"))
      .def_static("var", &Term::var, py::arg("name"))
      .def_static("compound", &Term::compound, py::arg("head"), py::arg("args"),
                  py::arg("head_is_var") = false)
      .def_static("infix", &Term::infix, py::arg("op"), py::arg("lhs"), py::arg("rhs"))
      .def_property_readonly("symbol", &Term::symbol)
      .def_property_readonly("args", &Term::args)
      .def_property_readonly("head_is_var", &Term::head_is_var)
      .def("is_atom", &Term::is_atom)
      .def("is_var", &Term::is_var)
      .def("is_compound", &Term::is_compound)
      .def("is_infix", &Term::is_infix)
      .def("is_ground", &Term::is_ground)
      .def("depth", &Term::depth)
      .def("symbols",
           [](const Term& t) {
             std::set<std::string> out;
             t.collect_symbols(out);
             return out;
           })
      .def("variables",
           [](const Term& t) {
             std::set<std::string> out;
             t.collect_vars(out);
             return out;
           })
      .def("subterms",
           [](const Term& t) {
             std::vector<const Term*> out;
             t.subterms(out);
             std::vector<Term> copies;
             copies.reserve(out.size());
             for (const Term* s : out) copies.push_back(*s);
             return copies;
           })
      .def("__str__", &Term::str)
      .def("__repr__", [](const Term& t) { return "Term(" + t.str() + ")"; })
      .def("__eq__", [](const Term& a, const Term& b) { return a == b; })
      .def("__lt__", [](const Term& a, const Term& b) { return a < b; })
      .def("__hash__", [](const Term& t) { return py::hash(py::str(t.str())); });

  m.def("parse_term", &parse_term, py::arg("text"));

  // --- rule files ----------------------------------------------------------
  py::class_<Rule>(m, "Rule")
      .def_readonly("id", &Rule::id)
      .def_readonly("theory", &Rule::theory)
      .def_readonly("premises", &Rule::premises)
      .def_readonly("conclusions", &Rule::conclusions)
      .def_readonly("tag", &Rule::tag);

  py::class_<Theory>(m, "Theory")
      .def_readonly("name", &Theory::name)
      .def_readonly("intuitions", &Theory::intuitions)
      .def_readonly("rules", &Theory::rules)
      .def_readonly("facts", &Theory::facts);

  py::class_<SemanticLogic>(m, "SemanticLogic")
      .def_readonly("theories", &SemanticLogic::theories)
      .def("quantize", &SemanticLogic::quantize, py::arg("text"))
      .def("expand", &SemanticLogic::expand, py::arg("term"))
      .def("id", &SemanticLogic::id)
      .def("render", [](const SemanticLogic& logic) { return render_logic(logic); })
      .def("__eq__",
           [](const SemanticLogic& a, const SemanticLogic& b) { return a == b; });

  py::class_<LogicStats>(m, "LogicStats")
      .def_readonly("theory_count", &LogicStats::theory_count)
      .def_readonly("dependency_count", &LogicStats::dependency_count)
      .def_readonly("model_element_count", &LogicStats::model_element_count)
      .def_readonly("operator_count", &LogicStats::operator_count)
      .def_readonly("rule_count", &LogicStats::rule_count);

  m.def(
      "parse_logic",
      [](const std::string& source, bool strict_symbols) {
        return parse_logic(source, parse_options(strict_symbols));
      },
      py::arg("source"), py::arg("strict_symbols") = false);
  m.def(
      "load_logic_file",
      [](const std::string& path, bool strict_symbols) {
        return load_logic_file(path, parse_options(strict_symbols));
      },
      py::arg("path"), py::arg("strict_symbols") = false);
  m.def("render_logic", &render_logic, py::arg("logic"));
  m.def("logic_stats", &logic_stats, py::arg("logic"));
  m.def("validate_logic", &validate_logic, py::arg("logic"),
        py::arg("strict_symbols") = false);

  // --- derivation ----------------------------------------------------------
  py::class_<LatticeNode>(m, "LatticeNode")
      .def_readonly("id", &LatticeNode::id)
      .def_readonly("level", &LatticeNode::level)
      .def_readonly("rule_id", &LatticeNode::rule_id)
      .def_readonly("rule_tag", &LatticeNode::rule_tag)
      .def_readonly("terms", &LatticeNode::terms)
      .def_readonly("premises", &LatticeNode::premises)
      .def("is_axiom", &LatticeNode::is_axiom);

  py::class_<Lattice>(m, "Lattice")
      .def_readonly("logic_id", &Lattice::logic_id)
      .def_readonly("text", &Lattice::text)
      .def_readonly("nodes", &Lattice::nodes)
      .def("terms", &Lattice::terms)
      .def("contains", &Lattice::contains, py::arg("term"))
      .def("to_json", [](const Lattice& l) { return lattice_to_json(l).dump(2); })
      .def_static("from_json",
                  [](const std::string& text) {
                    return lattice_from_json(Json::parse(text));
                  },
                  py::arg("text"))
      .def("__eq__", [](const Lattice& a, const Lattice& b) { return a == b; })
      .def("__len__", [](const Lattice& l) { return l.nodes.size(); });

  m.def(
      "derive",
      [](const std::vector<Term>& initial, const SemanticLogic& logic, int max_iterations,
         int max_term_depth) {
        DerivationLimits limits;
        limits.max_iterations = max_iterations;
        limits.max_term_depth = max_term_depth;
        return derive(initial, logic, limits);
      },
      py::arg("initial"), py::arg("logic"), py::arg("max_iterations") = 10000,
      py::arg("max_term_depth") = 64);

  // --- complexity ------------------------------------------------------------
  py::enum_<ComplexitySchema>(m, "ComplexitySchema")
      .value("Product", ComplexitySchema::Product)
      .value("Tagged", ComplexitySchema::Tagged);

  py::enum_<DimensionPolicy>(m, "DimensionPolicy")
      .value("MaximalNodes", DimensionPolicy::MaximalNodes)
      .value("AllNodes", DimensionPolicy::AllNodes)
      .value("TopK", DimensionPolicy::TopK);

  m.def(
      "node_complexity",
      [](const Lattice& lattice, ComplexitySchema schema,
         const std::map<std::string, double>& tag_weights) {
        return node_complexity(lattice, complexity_options(schema, tag_weights));
      },
      py::arg("lattice"), py::arg("schema") = ComplexitySchema::Product,
      py::arg("tag_weights") = std::map<std::string, double>{});
  m.def("log_normalize", &log_normalize, py::arg("values"), py::arg("base") = 2.0);
  m.def("dastex", &dastex, py::arg("lattice"), py::arg("logic"));
  m.def(
      "semantic_point",
      [](const Lattice& lattice, const NodeValues& values, DimensionPolicy policy, int top_k) {
        SemanticPointOptions options;
        options.policy = policy;
        options.top_k = top_k;
        return semantic_point(lattice, values, options);
      },
      py::arg("lattice"), py::arg("values"),
      py::arg("policy") = DimensionPolicy::MaximalNodes, py::arg("top_k") = 3);
  m.def("overall_complexity", &overall_complexity, py::arg("point"));
  m.def("relative_complexity", &relative_complexity, py::arg("values"));

  // --- judgment scoring -----------------------------------------------------
  py::class_<JudgmentVector>(m, "JudgmentVector")
      .def(py::init([](std::set<int> a, std::set<int> b, std::set<int> c, std::set<int> d) {
             JudgmentVector j;
             j.a = std::move(a);
             j.b = std::move(b);
             j.c = std::move(c);
             j.d = std::move(d);
             return j;
           }),
           py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"))
      .def_readonly("a", &JudgmentVector::a)
      .def_readonly("b", &JudgmentVector::b)
      .def_readonly("c", &JudgmentVector::c)
      .def_readonly("d", &JudgmentVector::d)
      .def("to_json", [](const JudgmentVector& j) { return judgment_to_json(j).dump(2); })
      .def("__eq__",
           [](const JudgmentVector& x, const JudgmentVector& y) { return x == y; });

  py::class_<HumanJudgmentSet>(m, "HumanJudgmentSet")
      .def_readonly("participant_ids", &HumanJudgmentSet::participant_ids)
      .def_readonly("judgments", &HumanJudgmentSet::judgments)
      .def_readonly("agreements", &HumanJudgmentSet::agreements)
      .def("has_agreements", &HumanJudgmentSet::has_agreements)
      .def("__len__", &HumanJudgmentSet::size);

  py::class_<PrecisionReport>(m, "PrecisionReport")
      .def_readonly("overall", &PrecisionReport::overall)
      .def_readonly("no_deviation", &PrecisionReport::no_deviation)
      .def_readonly("comp_steps", &PrecisionReport::comp_steps)
      .def_readonly("deviation_shares", &PrecisionReport::deviation_shares);

  m.def("dast_judge", &dast_judge, py::arg("complexities"));
  m.def("load_judgments_csv", &load_judgments_csv, py::arg("path"));
  m.def("parse_judgments_csv", &parse_judgments_csv, py::arg("content"));
  m.def("load_judgment_file", &load_judgment_file, py::arg("path"));
  m.def("component_matches", &component_matches, py::arg("machine"), py::arg("human"));
  m.def("overall_result_precision", &overall_result_precision, py::arg("machine"),
        py::arg("humans"));
  m.def("no_deviation_precision", &no_deviation_precision, py::arg("machine"),
        py::arg("humans"));
  m.def("comp_steps_precision", &comp_steps_precision, py::arg("machine"), py::arg("humans"));
  m.def("deviation_distribution", &deviation_distribution, py::arg("machine"),
        py::arg("humans"));
  m.def("vote_values", &vote_values, py::arg("humans"));
  m.def("path_distribution", &path_distribution, py::arg("humans"));
  m.def("consensus_classes", &consensus_classes, py::arg("machine"), py::arg("humans"));
  m.def("precision_report", &precision_report, py::arg("machine"), py::arg("humans"));

  // --- paired corpus ----------------------------------------------------------
  py::class_<ParagraphRecord>(m, "ParagraphRecord")
      .def_readonly("id", &ParagraphRecord::id)
      .def_readonly("topic", &ParagraphRecord::topic)
      .def_readonly("genre_class", &ParagraphRecord::genre_class)
      .def_readonly("variant", &ParagraphRecord::variant)
      .def_readonly("metrics", &ParagraphRecord::metrics)
      .def("metric", &ParagraphRecord::metric, py::arg("name"))
      .def("has_metric", &ParagraphRecord::has_metric, py::arg("name"));

  py::class_<PairRecord>(m, "PairRecord")
      .def_readonly("topic", &PairRecord::topic)
      .def_readonly("simple", &PairRecord::simple)
      .def_readonly("hard", &PairRecord::hard);

  py::class_<TextStats>(m, "TextStats")
      .def_readonly("sentences", &TextStats::sentences)
      .def_readonly("words", &TextStats::words)
      .def_readonly("syllables", &TextStats::syllables)
      .def_readonly("words_per_sentence", &TextStats::words_per_sentence)
      .def_readonly("syllables_per_word", &TextStats::syllables_per_word);

  py::class_<RegressionResult>(m, "RegressionResult")
      .def_readonly("slope", &RegressionResult::slope)
      .def_readonly("intercept", &RegressionResult::intercept)
      .def_readonly("r_squared", &RegressionResult::r_squared);

  py::class_<ExponentialFit>(m, "ExponentialFit")
      .def_readonly("amplitude", &ExponentialFit::amplitude)
      .def_readonly("rate", &ExponentialFit::rate)
      .def_readonly("r_squared", &ExponentialFit::r_squared);

  m.def("load_corpus_csv", &load_corpus_csv, py::arg("path"));
  m.def("parse_corpus_csv", &parse_corpus_csv, py::arg("content"));
  m.def("difficulty_ratio", &difficulty_ratio, py::arg("simple_value"), py::arg("hard_value"));
  m.def("overall_difficulty_ratio", &overall_difficulty_ratio, py::arg("metric"),
        py::arg("pairs"));
  m.def("dr_curve", &dr_curve, py::arg("metric"), py::arg("pairs"));
  m.def("dr_error_pct", &dr_error_pct, py::arg("dr"), py::arg("reference_dr"));
  m.def("curve_distance", &curve_distance, py::arg("lhs"), py::arg("rhs"));
  m.def("text_stats", &text_stats, py::arg("text"));
  m.def("flesch_kincaid",
        py::overload_cast<double, double>(&flesch_kincaid),
        py::arg("words_per_sentence"), py::arg("syllables_per_word"));
  m.def("flesch_kincaid", py::overload_cast<const std::string&>(&flesch_kincaid),
        py::arg("text"));
  m.def("linear_regression", &linear_regression, py::arg("x"), py::arg("y"));
  m.def("exponential_fit", &exponential_fit, py::arg("x"), py::arg("y"));
  m.def("genre_split_regression", &genre_split_regression, py::arg("pairs"),
        py::arg("measure"), py::arg("excluded_topics") = std::vector<std::string>{});

  // --- deviation model -----------------------------------------------------
  py::class_<DeviationModel>(m, "DeviationModel")
      .def_readonly("alphas", &DeviationModel::alphas);

  py::class_<AlphaFit>(m, "AlphaFit")
      .def_readonly("alpha", &AlphaFit::alpha)
      .def_readonly("residual", &AlphaFit::residual);

  m.def("make_model", py::overload_cast<const std::array<double, 4>&>(&make_model),
        py::arg("alphas"));
  m.def("make_model", py::overload_cast<double>(&make_model), py::arg("shared_alpha"));
  m.def("deviation_pmf", &deviation_pmf, py::arg("model"));
  m.def("simulate", &simulate, py::arg("model"), py::arg("participants"), py::arg("seed"));
  m.def("fit_alpha", &fit_alpha, py::arg("observed"));
}
