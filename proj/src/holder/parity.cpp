#include <deque>

#include "orbitlab/holder/audit.hpp"

namespace orbitlab::holder {

std::optional<std::vector<double>> parity_vector(const freegroup::PermutationHom& hom) {
  const std::size_t n = hom.degree();
  std::vector<int> colour(n, 0);
  colour[0] = 1;
  std::deque<std::uint32_t> queue{0};
  while (!queue.empty()) {
    const auto x = queue.front();
    queue.pop_front();
    for (int l = 0; l < 2 * hom.rank(); ++l) {
      const auto y = hom.act(static_cast<freegroup::Letter>(l), x);
      if (colour[y] == 0) {
        colour[y] = -colour[x];
        queue.push_back(y);
      } else if (colour[y] == colour[x]) {
        return std::nullopt;
      }
    }
  }
  std::vector<double> f0(n);
  for (std::size_t x = 0; x < n; ++x) {
    if (colour[x] == 0) throw ConfigError("parity vector needs a transitive action");
    f0[x] = colour[x];
  }
  return f0;
}

}  // namespace orbitlab::holder
