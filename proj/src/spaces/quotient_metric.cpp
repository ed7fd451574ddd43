#include "orbitlab/spaces/quotient_metric.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

#include "orbitlab/errors.hpp"

namespace orbitlab::spaces {

SchreierMetric::SchreierMetric(const freegroup::PermutationHom& hom) : n_(hom.degree()) {
  constexpr auto unset = std::numeric_limits<std::uint32_t>::max();
  table_.assign(n_ * n_, unset);
  const int alphabet = 2 * hom.rank();
  // Row x1: BFS from x1; w x2 = x1 iff w^-1 x1 = x2 and l(w) = l(w^-1).
  for (std::size_t src = 0; src < n_; ++src) {
    std::uint32_t* row = &table_[src * n_];
    std::deque<std::uint32_t> queue{static_cast<std::uint32_t>(src)};
    row[src] = 0;
    while (!queue.empty()) {
      const auto x = queue.front();
      queue.pop_front();
      for (int l = 0; l < alphabet; ++l) {
        const auto y = hom.act(static_cast<freegroup::Letter>(l), x);
        if (row[y] == unset) {
          row[y] = row[x] + 1;
          queue.push_back(y);
        }
      }
    }
    for (std::size_t y = 0; y < n_; ++y) {
      if (row[y] == unset) throw ConfigError("Schreier metric needs a transitive action");
      diameter_ = std::max(diameter_, row[y]);
    }
  }
}

double RotationQuotientMetric::group_distance(const Eigen::Matrix3d& g, const Eigen::Matrix3d& h) {
  const Eigen::Matrix3d q = g * h.transpose();
  return std::acos(std::clamp((q.trace() - 1.0) / 2.0, -1.0, 1.0));
}

double RotationQuotientMetric::distance(const Eigen::Vector3d& x1, const Eigen::Vector3d& x2) {
  return std::atan2(x1.cross(x2).norm(), x1.dot(x2));
}

}  // namespace orbitlab::spaces
