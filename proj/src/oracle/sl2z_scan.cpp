#include "orbitlab/oracle/sl2z_scan.hpp"

#include <algorithm>
#include <cmath>

namespace orbitlab::oracle {

std::vector<matgroup::LatticeElement> sl2z_entry_scan(std::int64_t norm_sq_bound) {
  std::int64_t m = 0;
  while ((m + 1) * (m + 1) <= norm_sq_bound) ++m;
  std::vector<matgroup::LatticeElement> out;
  for (std::int64_t a = -m; a <= m; ++a)
    for (std::int64_t b = -m; b <= m; ++b)
      for (std::int64_t c = -m; c <= m; ++c)
        for (std::int64_t d = -m; d <= m; ++d)
          if (a * d - b * c == 1 && a * a + b * b + c * c + d * d <= norm_sq_bound) out.push_back({a, b, c, d});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace orbitlab::oracle
