#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "grasshard/graph.hpp"

namespace grasshard::verify {

struct Options {
  std::uint64_t seed = 1;
  int nmax = 6;
  int starts = 20;
  int iters = 500;
  bool nesterov = false;
};

struct Check {
  std::string name;
  int cases = 0;
  int failures = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
};

struct Result {
  std::string suite;
  bool passed = true;
  std::vector<Check> checks;
  // First few failing cases, human readable.
  std::vector<std::string> failures;

  int cases() const;
  int failure_count() const;
};

std::vector<std::string> suite_names();
// Throws InvalidArgument for unknown suites and NotImplemented for the
// nesterov suite unless enabled.
Result run(const std::string& suite, const Options& opts);
std::string to_json(const Result& r);

// Complete, cycle (n >= 3), path and empty graphs for n = 1..nmax, then 50
// G(n, 1/2) graphs with seeds 0..49 and n = 2 + seed % 5 (skipped if > nmax).
std::vector<Graph> standard_graphs(int nmax);

// The (c, s) representatives of the same O(2) x O(1) coset in O(3).
std::pair<Eigen::MatrixXd, Eigen::MatrixXd> cs_pair(double c, double s);

}  // namespace grasshard::verify
