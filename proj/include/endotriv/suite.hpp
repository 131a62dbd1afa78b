#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "endotriv/abelian.hpp"

namespace endotriv {

struct SuiteRow {
  int id = 0;
  std::string title;
  bool pass = false;
  /// Known not to hold as stated; reported but not counted as a failure.
  bool expected_red = false;
  std::string detail;
  double seconds = 0;
  /// Wall-clock limit; 0 for none.
  double limit = 0;
};

/// Diagram of small finite abelian groups with random homomorphisms.
Diagram random_diagram(std::mt19937_64& rng, std::size_t max_objects = 5, std::size_t max_arrows = 7);

/// The reproduction suite, one row per acceptance criterion. `progress`
/// is called after each row.
std::vector<SuiteRow> acceptance_suite(const std::function<void(const SuiteRow&)>& progress = {});

/// Row ids that are expected to fail.
std::vector<int> expected_red_rows();

}  // namespace endotriv
