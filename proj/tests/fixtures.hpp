#ifndef ZETAKIRCH_TESTS_FIXTURES_HPP
#define ZETAKIRCH_TESTS_FIXTURES_HPP

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "zetakirch/graph.hpp"

inline std::string fixture_path(const std::string& name) {
  return std::string(ZETAKIRCH_FIXTURE_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline zetakirch::WeightedGraph load_graph(const std::string& name) {
  return zetakirch::WeightedGraph::parse(read_file(fixture_path(name)));
}

#endif
