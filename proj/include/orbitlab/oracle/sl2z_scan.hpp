#pragma once

#include <cstdint>
#include <vector>

#include "orbitlab/matgroup/sl2z.hpp"

namespace orbitlab::oracle {

/// Every integer matrix with entries in [-m, m]^4, determinant 1 and squared
/// Frobenius norm <= bound, where m = floor(sqrt(bound)). Sorted.
std::vector<matgroup::LatticeElement> sl2z_entry_scan(std::int64_t norm_sq_bound);

}  // namespace orbitlab::oracle
