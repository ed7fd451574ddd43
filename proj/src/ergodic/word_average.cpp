#include "orbitlab/ergodic/word_average.hpp"

#include <array>
#include <cmath>

namespace orbitlab::ergodic {

namespace {

// Uniform cells of side h over [-1, 1]^3 holding grid point indices.
class CellGrid {
 public:
  CellGrid(const std::vector<Eigen::Vector3d>& points, double h)
      : h_(h), side_(std::max(1, static_cast<int>(std::ceil(2.0 / h)))) {
    cells_.resize(static_cast<std::size_t>(side_) * side_ * side_);
    for (std::size_t j = 0; j < points.size(); ++j) cells_[index(cell_of(points[j]))].push_back(static_cast<std::uint32_t>(j));
  }

  template <class Visit>
  void near(const Eigen::Vector3d& p, Visit&& visit) const {
    const auto c = cell_of(p);
    for (int dx = -1; dx <= 1; ++dx)
      for (int dy = -1; dy <= 1; ++dy)
        for (int dz = -1; dz <= 1; ++dz) {
          const std::array<int, 3> q{c[0] + dx, c[1] + dy, c[2] + dz};
          if (q[0] < 0 || q[1] < 0 || q[2] < 0 || q[0] >= side_ || q[1] >= side_ || q[2] >= side_) continue;
          for (auto j : cells_[index(q)]) visit(j);
        }
  }

 private:
  std::array<int, 3> cell_of(const Eigen::Vector3d& p) const {
    std::array<int, 3> c{};
    for (int k = 0; k < 3; ++k) c[static_cast<std::size_t>(k)] = std::clamp(static_cast<int>(std::floor((p[k] + 1.0) / h_)), 0, side_ - 1);
    return c;
  }
  std::size_t index(const std::array<int, 3>& c) const {
    return (static_cast<std::size_t>(c[0]) * side_ + c[1]) * side_ + c[2];
  }

  double h_;
  int side_;
  std::vector<std::vector<std::uint32_t>> cells_;
};

}  // namespace

RadialSphereSums::RadialSphereSums(const std::vector<Eigen::Matrix3d>& generators, const Eigen::Vector3d& centre,
                                   const holder::RadialProfile& profile, double scale,
                                   const std::vector<Eigen::Vector3d>& grid, int n_max,
                                   const EnumerationBudget& budget, int threads)
    : rank_(static_cast<int>(generators.size())) {
  if (rank_ < 2) throw ConfigError("need at least two rotation generators");
  budget.require(freegroup::ball_size(rank_, n_max), "sphere orbit");
  std::vector<Eigen::Matrix3d> letters;
  for (const auto& g : generators) {
    letters.push_back(g);
    letters.push_back(g.transpose());
  }
  const CellGrid cells(grid, std::max(profile.radius, 1e-3));
  const double radius = profile.radius;
  using Acc = std::vector<std::vector<CompensatedSum>>;
  auto run = [&](int first, Acc& acc) {
    // Extending on the left visits gamma c for the reversed word; reversal
    // is a bijection of each sphere, so sphere sums are unchanged.
    freegroup::walk_ball(
        rank_, n_max, Eigen::Vector3d(centre), [&](freegroup::Letter l, const Eigen::Vector3d& p) -> Eigen::Vector3d { return letters[l] * p; },
        [&](int depth, const Eigen::Vector3d& p) {
          cells.near(p, [&](std::uint32_t j) {
            const double d = (grid[j] - p).norm();
            if (d < radius) acc[static_cast<std::size_t>(depth)][j].add(scale * profile(d));
          });
        },
        first);
  };
  auto shard = [&](int first) {
    Acc acc(static_cast<std::size_t>(n_max) + 1, std::vector<CompensatedSum>(grid.size()));
    run(first, acc);
    return acc;
  };
  const auto shards = freegroup::run_shards<Acc>(rank_, threads, shard);
  Acc identity(static_cast<std::size_t>(n_max) + 1, std::vector<CompensatedSum>(grid.size()));
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double d = (grid[j] - centre).norm();
    if (d < radius) identity[0][j].add(scale * profile(d));
  }
  sums_.assign(static_cast<std::size_t>(n_max) + 1, std::vector<double>(grid.size(), 0.0));
  for (std::size_t k = 0; k < sums_.size(); ++k)
    for (std::size_t j = 0; j < grid.size(); ++j) {
      CompensatedSum s = identity[k][j];
      for (const auto& sh : shards) s.merge(sh[k][j]);
      sums_[k][j] = s.value();
    }
  orbit_points_ = freegroup::ball_size(rank_, n_max);
}

std::vector<double> RadialSphereSums::ball_average(int n) const {
  const auto size = static_cast<double>(freegroup::ball_size(rank_, n));
  std::vector<double> out(sums_.front().size());
  for (std::size_t j = 0; j < out.size(); ++j) {
    CompensatedSum s;
    for (int k = 0; k <= n; ++k) s.add(sums_[static_cast<std::size_t>(k)][j]);
    out[j] = s.value() / size;
  }
  return out;
}

}  // namespace orbitlab::ergodic
