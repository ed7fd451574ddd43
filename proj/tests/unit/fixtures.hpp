#pragma once

// Small actions shared by the unit tests.

#include "orbitlab/freegroup/hom.hpp"
#include "orbitlab/freegroup/profinite.hpp"
#include "orbitlab/matgroup/congruence.hpp"

namespace fixtures {

using orbitlab::freegroup::PermutationHom;

inline std::vector<orbitlab::matgroup::LatticeElement> sl2_generators() {
  return {orbitlab::matgroup::LatticeElement::make(1, 1, 0, 1), orbitlab::matgroup::LatticeElement::make(1, 0, 1, 1)};
}

/// F2 -> SL2(Z/N) acting on itself by left multiplication.
inline PermutationHom sl2_regular(int modulus) {
  return orbitlab::matgroup::CongruenceQuotient(modulus).regular_action(sl2_generators());
}

/// F2 -> S4 by (0 1) and (0 1 2 3): 24-point regular action is not needed;
/// this is the natural 4-point action.
inline PermutationHom s4_natural() { return PermutationHom({{1, 0, 2, 3}, {1, 2, 3, 0}}); }

/// F2 acting on the 3 nonzero vectors of (Z/2)^2 through SL2(Z/2): (1,0),
/// (0,1), (1,1). The stabiliser of (1,0) contains the kernel of the regular
/// action of SL2(Z/2), so {this, sl2_regular(2)} is a nested chain.
inline PermutationHom sl2_mod2_on_vectors() { return PermutationHom({{0, 2, 1}, {2, 1, 0}}); }

/// Even cycle of length 2m with both generators shifting: bipartite.
inline PermutationHom even_cycle(std::uint32_t m) {
  std::vector<std::uint32_t> shift(2 * m);
  for (std::uint32_t i = 0; i < 2 * m; ++i) shift[i] = (i + 1) % (2 * m);
  return PermutationHom({shift, shift});
}

inline orbitlab::freegroup::SubgroupChain mod2_chain() {
  return orbitlab::freegroup::SubgroupChain({sl2_mod2_on_vectors(), sl2_regular(2)});
}

/// Indices 6, 48, 384: kernels mod 2, 4, 8 of the regular actions.
inline orbitlab::freegroup::SubgroupChain dyadic_chain() {
  return orbitlab::freegroup::SubgroupChain({sl2_regular(2), sl2_regular(4), sl2_regular(8)});
}

}  // namespace fixtures
