#pragma once

#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ppg/ppg_format.hpp"

namespace fixture {

inline std::string path(const std::string& name) {
  return std::string(PPG_FIXTURE_DIR) + "/" + name;
}

inline std::string text(const std::string& name) {
  std::ifstream in(path(name), std::ios::binary);
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline ppg::PpgDocument doc(const std::string& name) {
  return ppg::parse_ppg(text(name));
}

inline ppg::POPGraph to_pop_file(const std::string& name) {
  return ppg::to_pop(doc(name));
}

inline ppg::ProgressiveGraph gamma_graph() {
  return ppg::ProgressiveGraph::validate(doc("gamma.ppg").graph);
}

inline ppg::PAGraph gamma_pa() { return ppg::to_pa(doc("gamma.ppg")); }

/// Γ ordered 1, 2, ..., 19 (the labels are the ranks).
inline ppg::POPGraph gamma_pop() {
  std::vector<ppg::EdgeId> ids;
  for (int k = 1; k <= 19; ++k) ids.emplace_back(std::to_string(k));
  return ppg::validate_planar_order(gamma_graph(),
                                    std::span<const ppg::EdgeId>(ids));
}

inline std::vector<ppg::EdgeId> ids(std::initializer_list<const char*> names) {
  std::vector<ppg::EdgeId> out;
  for (const char* n : names) out.emplace_back(n);
  return out;
}

inline std::vector<std::string> strings(const std::vector<ppg::EdgeId>& ids) {
  std::vector<std::string> out;
  for (const auto& e : ids) out.push_back(e.str());
  return out;
}

}  // namespace fixture
