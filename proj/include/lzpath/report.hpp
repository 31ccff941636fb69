#pragma once

#include <string>
#include <vector>

namespace lzpath {

// Outcome of one verification sweep; counterexamples carry canonical keys.
struct CheckReport {
  CheckReport() = default;
  explicit CheckReport(std::string n) : name(std::move(n)) {}

  std::string name;
  bool ok = true;
  std::size_t checked = 0;
  std::vector<std::string> counterexamples;

  void count() { ++checked; }
  void fail(std::string key) {
    ok = false;
    if (counterexamples.size() < 16) counterexamples.push_back(std::move(key));
  }
};

}  // namespace lzpath
