#pragma once
#include <functional>
#include <string>
#include <vector>

#include "hrg/params.hpp"
#include "hrg/rng.hpp"

namespace hrg {

struct check_result {
  std::string name;
  bool pass = false;
  std::string detail;
};

// The ten release criteria. Every parameter, seed, and tolerance is pinned in
// the implementation; the suite is deterministic. Runs the named criteria
// (all of them when `names` is empty), reporting each result as it completes.
std::vector<check_result> acceptance_battery(
    const std::vector<std::string>& names = {},
    const std::function<void(const check_result&)>& on_result = {});

// Regime-scaled spot checks at user-chosen parameters; throws
// std::domain_error when zeta/alpha >= 2 (the closed forms need it).
std::vector<check_result> validate_battery(const model_params& p, sample_seed seed);

}  // namespace hrg
