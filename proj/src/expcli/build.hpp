#pragma once

// Construction of library objects from validated config fragments, shared by
// validation (which builds them to surface structural errors) and runners.

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "orbitlab/expcli/config.hpp"
#include "orbitlab/freegroup/hom.hpp"
#include "orbitlab/freegroup/profinite.hpp"
#include "orbitlab/matgroup/congruence.hpp"
#include "orbitlab/matgroup/sl2z.hpp"
#include "orbitlab/matgroup/norm_ball.hpp"

namespace orbitlab::expcli::detail {

/// A finite F_r-set. `group` and `generator_images` are set for the regular
/// action of SL_2(Z/N), which has the histogram fast path; `chain` is set
/// when the quotient is the deepest level of a subgroup chain.
struct BuiltQuotient {
  std::string type;
  std::optional<matgroup::CongruenceQuotient> group;
  std::vector<std::uint32_t> generator_images;
  std::optional<freegroup::PermutationHom> hom;
  std::optional<freegroup::SubgroupChain> chain;

  const freegroup::PermutationHom& action() const { return *hom; }
};

/// ConfigError on any structural problem (bad permutation, modulus out of
/// range, non-nested chain, intransitive level).
BuiltQuotient build_quotient(const Json& spec);

/// Size of the quotient without building its tables where possible.
std::size_t quotient_degree(const Json& spec);
std::uint64_t sl2_mod_order(int modulus);

matgroup::LatticeElement lattice_from_json(const Json& j);
std::vector<double> doubles(const Json& j);
Eigen::Vector2d vec2(const Json& j);
Eigen::Vector3d vec3(const Json& j);

/// Rotation generators: {"type": "norm5_quaternions"} or axis-angle pairs.
std::vector<Eigen::Matrix3d> sphere_generators(const Json& spec);

/// V(t) from {"alpha", "beta", "scale"} or "cardinality".
matgroup::Normalization normalization_from_json(const Json& j);

/// Thresholds T given either as a list or as {"base": 2, "from": 6, "to": 12}.
std::vector<double> thresholds_from_json(const Json& j);

template <class T>
T value_or(const Json& obj, const char* key, T fallback) {
  if (!obj.is_object()) return fallback;
  auto it = obj.find(key);
  return it == obj.end() ? fallback : it->get<T>();
}

}  // namespace orbitlab::expcli::detail
