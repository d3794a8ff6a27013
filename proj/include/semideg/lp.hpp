#pragma once

#include <optional>
#include <vector>

#include "semideg/rat.hpp"

namespace semideg {

// Exact feasibility for A w >= b, w >= 0 (all entries of b must be
// nonnegative). Returns a feasible w or nullopt.
std::optional<std::vector<Rat>> lp_feasible(
    const std::vector<std::vector<Rat>>& A, const std::vector<Rat>& b);

} // namespace semideg
