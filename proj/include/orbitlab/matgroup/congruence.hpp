#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "orbitlab/freegroup/hom.hpp"
#include "orbitlab/matgroup/sl2z.hpp"

namespace orbitlab::matgroup {

/// SL_2(Z/N) with a full multiplication table. Elements are indexed
/// 0..order-1; index 0 is the identity.
class CongruenceQuotient {
 public:
  using Entries = std::array<std::uint32_t, 4>;  // a, b, c, d mod N

  explicit CongruenceQuotient(int modulus);

  int modulus() const { return modulus_; }
  std::size_t order() const { return elements_.size(); }
  const Entries& element(std::uint32_t i) const { return elements_[i]; }
  std::uint32_t multiply(std::uint32_t x, std::uint32_t y) const { return table_[x * order() + y]; }
  std::uint32_t inverse(std::uint32_t x) const { return inverse_[x]; }
  std::uint32_t index_of(const Entries& e) const;
  /// Reduction homomorphism SL_2(Z) -> SL_2(Z/N).
  std::uint32_t reduce(const LatticeElement& g) const;

  /// Left-multiplication permutation by element g.
  freegroup::Permutation left_multiplication(std::uint32_t g) const;
  /// F_r -> SL_2(Z/N) -> Sym(SL_2(Z/N)) for the given generator images.
  freegroup::PermutationHom regular_action(const std::vector<LatticeElement>& generators) const;

 private:
  int modulus_;
  std::vector<Entries> elements_;
  std::vector<std::uint32_t> lookup_;  // N^4 table, entries -> index
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> inverse_;
};

}  // namespace orbitlab::matgroup
