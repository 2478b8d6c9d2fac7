#pragma once

// JSON reports for the command-line front end.  Every report is a pure
// function of its arguments, so serialising it gives byte-stable output.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "quiverpic/presentation.hpp"
#include "quiverpic/quiver.hpp"
#include "quiverpic/weights.hpp"

namespace quiverpic {

using Json = nlohmann::ordered_json;

Json roots_to_json(const std::vector<Root>& roots);

Json roots_report(const SignVector& eps);
Json cells_report(const SignVector& eps, std::optional<int> degree);
/// method is "fast" (basic weights) or "snf" (full Smith normal form).
Json homology_report(const SignVector& eps, const std::string& method);
Json weights_report(int n, std::optional<int> degree, const std::optional<Weight>& weight);
Json decompose_report(const SignVector& eps, const Weight& w, const std::optional<std::vector<int>>& cut);
Json presentation_report(const Presentation& p);
Json ring_report(int n, std::optional<int> degree);
Json complex_report(const SignVector& eps);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyBounds {
  int snf_max = 6;
  int enum_max = 9;
};

/// Property checks for one orientation; checks whose bound is below n are
/// reported as skipped (pass with a detail note).
std::vector<CheckResult> verify_orientation(const SignVector& eps, const VerifyBounds& bounds);
Json verify_report(const SignVector& eps, const std::vector<CheckResult>& results);

}  // namespace quiverpic
