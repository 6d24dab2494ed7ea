#pragma once

#include <optional>
#include <vector>

#include "logsurf/qvec.hpp"
#include "logsurf/rational.hpp"

namespace logsurf {

// Exact cone-membership test at desk scale: find x >= 0 with
// sum_i x_i * generators[i] = target, by phase-1 simplex with Bland's
// rule (finite termination, no tolerances).
std::optional<std::vector<Rat>> nonnegative_combination(
    const std::vector<QVec>& generators, const QVec& target);

}  // namespace logsurf
