#include "dast/json_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "dast/error.hpp"

namespace dast {

double round12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return std::strtod(buf, nullptr);
}

Json lattice_to_json(const Lattice& lattice) {
  Json nodes = Json::array();
  for (const LatticeNode& n : lattice.nodes) {
    Json jn;
    jn["id"] = n.id;
    jn["level"] = n.level;
    jn["premises"] = n.premises;
    if (n.is_axiom())
      jn["rule"] = "axiom";
    else
      jn["rule"] = n.rule_id;
    if (n.rule_tag) jn["tag"] = *n.rule_tag;
    Json terms = Json::array();
    for (const Term& t : n.terms) terms.push_back(t.str());
    jn["terms"] = std::move(terms);
    nodes.push_back(std::move(jn));
  }
  Json j;
  j["logic_id"] = lattice.logic_id;
  j["nodes"] = std::move(nodes);
  j["text"] = lattice.text;
  return j;
}

Lattice lattice_from_json(const Json& j) {
  try {
    Lattice lattice;
    lattice.logic_id = j.at("logic_id").get<std::string>();
    lattice.text = j.value("text", std::string{});
    for (const Json& jn : j.at("nodes")) {
      LatticeNode n;
      n.id = jn.at("id").get<int>();
      n.level = jn.at("level").get<int>();
      n.premises = jn.at("premises").get<std::vector<int>>();
      const Json& rule = jn.at("rule");
      n.rule_id = rule.is_string() ? 0 : rule.get<int>();
      if (jn.contains("tag")) n.rule_tag = jn.at("tag").get<std::string>();
      for (const Json& ts : jn.at("terms")) n.terms.push_back(parse_term(ts.get<std::string>()));
      lattice.nodes.push_back(std::move(n));
    }
    return lattice;
  } catch (const Json::exception& e) {
    throw data_error(std::string("malformed lattice JSON: ") + e.what());
  }
}

Lattice load_lattice_file(const std::string& path) {
  return lattice_from_json(load_json_file(path));
}

namespace {

Json index_set(const std::set<int>& s) {
  Json arr = Json::array();
  for (int i : s) arr.push_back(i);
  return arr;
}

}  // namespace

Json judgment_to_json(const JudgmentVector& j) {
  Json out;
  out["a"] = index_set(j.a);
  out["b"] = index_set(j.b);
  out["c"] = index_set(j.c);
  out["d"] = index_set(j.d);
  return out;
}

JudgmentVector judgment_from_json(const Json& j) {
  try {
    JudgmentVector v;
    auto read = [&](const char* key) {
      std::set<int> s;
      for (const Json& i : j.at(key)) {
        int idx = i.get<int>();
        if (idx < 1 || idx > 5) throw data_error("sentence index outside 1..5 in judgment JSON");
        s.insert(idx);
      }
      if (s.empty()) throw data_error(std::string("empty component ") + key + " in judgment JSON");
      return s;
    };
    v.a = read("a");
    v.b = read("b");
    v.c = read("c");
    v.d = read("d");
    return v;
  } catch (const Json::exception& e) {
    throw data_error(std::string("malformed judgment JSON: ") + e.what());
  }
}

JudgmentVector load_judgment_file(const std::string& path) {
  return judgment_from_json(load_json_file(path));
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw data_error(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw io_error("cannot open " + path + " for writing");
  out << content;
  if (!out) throw io_error("failed writing " + path);
}

}  // namespace dast
