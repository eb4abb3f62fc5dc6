#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "dast/parser.hpp"

#ifndef DAST_FIXTURE_DIR
#error "DAST_FIXTURE_DIR must point at the fixtures directory"
#endif

namespace dast::test {

inline std::string fixture_path(const std::string& name) {
  return std::string(DAST_FIXTURE_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline SemanticLogic fixture_logic(const std::string& name) {
  return load_logic_file(fixture_path(name));
}

}  // namespace dast::test
