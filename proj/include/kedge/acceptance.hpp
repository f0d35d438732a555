#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "kedge/geometry.hpp"

namespace kedge {

struct AcceptanceOptions {
  std::size_t trials = 500;  // random sets for criteria 7 and 8
  std::size_t nmin = 5;
  std::size_t nmax = 12;
  int rmax = 5;  // largest S_r audited by criterion 5
  std::uint64_t seed = 20070611;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool correct = false;
  double seconds = 0;
  double budget_seconds = 0;
  std::string detail;

  bool passed() const { return correct && seconds <= budget_seconds; }
};

/// Criterion ids for "bounds", "identity", "central", "constructions" or "all".
std::vector<int> criteria_for_scope(const std::string& scope);

CriterionResult run_criterion(int id, const AcceptanceOptions& options = {});

std::vector<CriterionResult> run_acceptance(const std::string& scope, const AcceptanceOptions& options = {});

/// The random general-position sets shared by criteria 7 and 8.
std::vector<std::vector<Point>> identity_corpus(const AcceptanceOptions& options);

/// "PASS [7] identity suite (0.41 s / 60 s): ..." style line.
std::string format_result(const CriterionResult& r);

}  // namespace kedge
