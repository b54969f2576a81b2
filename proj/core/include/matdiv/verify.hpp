#pragma once

#include <matdiv/scene.hpp>

#include <random>
#include <string>
#include <vector>

namespace matdiv {

enum class CheckStatus { pass, fail, skip };

std::string check_status_str(CheckStatus s);

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    std::string detail;  // computed data, or the reason for a skip/failure
};

// Invertible Taylor unit: unipotent-lower * unipotent-upper * nonzero
// diagonal constant term, plus random higher-order terms.
MatSeries random_unit_series(int n, long horizon, std::mt19937_64& rng);
// unit * diag(z^d) * unit with |d_i| <= max_pole.
MatSeries random_germ_series(int n, long max_pole, long horizon, std::mt19937_64& rng);

// The property suite behind `verify-all`: flag nesting, flag equality,
// grading closure, reduction invariance, localization injectivity, section
// dimension, and the quotient report.  Checks whose preconditions a scene
// does not meet come back as skips with the reason spelled out.
std::vector<CheckResult> verify_scene(const Scene& scene);

// True when nothing failed (skips are fine).
bool all_passed(const std::vector<CheckResult>& results);

}  // namespace matdiv
