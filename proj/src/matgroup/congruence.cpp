#include "orbitlab/matgroup/congruence.hpp"

#include <limits>
#include <stdexcept>

namespace orbitlab::matgroup {

namespace {
constexpr auto kMissing = std::numeric_limits<std::uint32_t>::max();

std::uint32_t mod(std::int64_t v, int n) {
  const std::int64_t r = v % n;
  return static_cast<std::uint32_t>(r < 0 ? r + n : r);
}
}  // namespace

CongruenceQuotient::CongruenceQuotient(int modulus) : modulus_(modulus) {
  if (modulus < 2 || modulus > 64) throw std::invalid_argument("congruence modulus must be in [2, 64]");
  const auto n = static_cast<std::uint32_t>(modulus);
  lookup_.assign(static_cast<std::size_t>(n) * n * n * n, kMissing);
  elements_.push_back({1 % n, 0, 0, 1 % n});
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      for (std::uint32_t c = 0; c < n; ++c)
        for (std::uint32_t d = 0; d < n; ++d) {
          if ((static_cast<std::uint64_t>(a) * d + static_cast<std::uint64_t>(n - b) * c) % n != 1 % n) continue;
          if (a == 1 % n && b == 0 && c == 0 && d == 1 % n) continue;
          elements_.push_back({a, b, c, d});
        }
  for (std::uint32_t i = 0; i < elements_.size(); ++i) {
    const auto& e = elements_[i];
    lookup_[((e[0] * n + e[1]) * n + e[2]) * n + e[3]] = i;
  }
  const std::size_t m = elements_.size();
  table_.resize(m * m);
  inverse_.resize(m);
  for (std::uint32_t i = 0; i < m; ++i) {
    const auto& x = elements_[i];
    for (std::uint32_t j = 0; j < m; ++j) {
      const auto& y = elements_[j];
      table_[i * m + j] = index_of({(x[0] * y[0] + x[1] * y[2]) % n, (x[0] * y[1] + x[1] * y[3]) % n,
                                    (x[2] * y[0] + x[3] * y[2]) % n, (x[2] * y[1] + x[3] * y[3]) % n});
    }
    inverse_[i] = index_of({x[3], (n - x[1]) % n, (n - x[2]) % n, x[0]});
  }
}

std::uint32_t CongruenceQuotient::index_of(const Entries& e) const {
  const auto n = static_cast<std::uint32_t>(modulus_);
  const auto idx = lookup_[((e[0] * n + e[1]) * n + e[2]) * n + e[3]];
  if (idx == kMissing) throw std::invalid_argument("entries do not form an element of SL2(Z/N)");
  return idx;
}

std::uint32_t CongruenceQuotient::reduce(const LatticeElement& g) const {
  return index_of({mod(g.a, modulus_), mod(g.b, modulus_), mod(g.c, modulus_), mod(g.d, modulus_)});
}

freegroup::Permutation CongruenceQuotient::left_multiplication(std::uint32_t g) const {
  freegroup::Permutation p(order());
  for (std::uint32_t x = 0; x < order(); ++x) p[x] = multiply(g, x);
  return p;
}

freegroup::PermutationHom CongruenceQuotient::regular_action(const std::vector<LatticeElement>& generators) const {
  std::vector<freegroup::Permutation> images;
  for (const auto& g : generators) images.push_back(left_multiplication(reduce(g)));
  return freegroup::PermutationHom(std::move(images));
}

}  // namespace orbitlab::matgroup
