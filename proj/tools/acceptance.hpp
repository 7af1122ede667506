#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace kipas::acceptance {

struct Criterion {
  int id = 0;
  std::string key;
  std::string title;
};

struct Outcome {
  Criterion criterion;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct Options {
  std::uint64_t seed = 0;
  int threads = 1;
  // Keys (or ids, or aliases) to run; empty runs everything.
  std::vector<std::string> only;
};

const std::vector<Criterion>& criteria();

// Throws std::invalid_argument for an unknown key in `only`.
std::vector<Outcome> run(const Options& options);

}  // namespace kipas::acceptance
