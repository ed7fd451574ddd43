#include "build.hpp"

#include <cmath>

#include "orbitlab/errors.hpp"
#include "orbitlab/matgroup/float_matrix.hpp"

namespace orbitlab::expcli::detail {

namespace {

std::vector<freegroup::Permutation> permutation_images(const Json& spec) {
  std::vector<freegroup::Permutation> out;
  for (const auto& img : spec.at("images")) out.push_back(img.get<freegroup::Permutation>());
  return out;
}

BuiltQuotient build_level(const Json& spec) {
  BuiltQuotient q;
  q.type = spec.at("type").get<std::string>();
  try {
    if (q.type == "sl2_mod") {
      const int modulus = spec.at("modulus").get<int>();
      if (modulus < 2 || modulus > 16) throw ConfigError("sl2_mod modulus must lie in [2, 16]");
      q.group.emplace(modulus);
      std::vector<matgroup::LatticeElement> gens;
      for (const auto& g : spec.at("generators")) gens.push_back(lattice_from_json(g));
      if (gens.size() < 2) throw ConfigError("need at least two generators");
      for (const auto& g : gens) q.generator_images.push_back(q.group->reduce(g));
      q.hom.emplace(q.group->regular_action(gens));
    } else if (q.type == "permutations") {
      q.hom.emplace(permutation_images(spec));
    } else {
      throw ConfigError("unknown quotient type '" + q.type + "'");
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed quotient: ") + e.what());
  }
  return q;
}

}  // namespace

BuiltQuotient build_quotient(const Json& spec) {
  if (spec.value("type", "") != "chain") return build_level(spec);
  std::vector<freegroup::PermutationHom> levels;
  for (const auto& lv : spec.at("levels")) levels.push_back(build_level(lv).action());
  BuiltQuotient q;
  q.type = "chain";
  q.chain.emplace(std::move(levels));
  q.hom.emplace(q.chain->level(q.chain->depth() - 1));
  return q;
}

std::uint64_t sl2_mod_order(int modulus) {
  // N^3 prod_{p | N} (1 - p^-2)
  double order = std::pow(modulus, 3);
  int n = modulus;
  for (int p = 2; p <= n; ++p) {
    if (n % p) continue;
    order *= 1.0 - 1.0 / (p * p);
    while (n % p == 0) n /= p;
  }
  return static_cast<std::uint64_t>(std::llround(order));
}

std::size_t quotient_degree(const Json& spec) {
  const auto type = spec.value("type", "");
  if (type == "sl2_mod") return sl2_mod_order(spec.at("modulus").get<int>());
  if (type == "permutations") return spec.at("images").at(0).size();
  if (type == "chain") return quotient_degree(spec.at("levels").back());
  return 0;
}

matgroup::LatticeElement lattice_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4) throw ConfigError("a matrix is written [a, b, c, d]");
  try {
    return matgroup::LatticeElement::make(j[0].get<std::int64_t>(), j[1].get<std::int64_t>(),
                                          j[2].get<std::int64_t>(), j[3].get<std::int64_t>());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

std::vector<double> doubles(const Json& j) { return j.get<std::vector<double>>(); }

Eigen::Vector2d vec2(const Json& j) {
  const auto v = doubles(j);
  if (v.size() != 2) throw ConfigError("expected a 2-vector");
  return {v[0], v[1]};
}

Eigen::Vector3d vec3(const Json& j) {
  const auto v = doubles(j);
  if (v.size() != 3) throw ConfigError("expected a 3-vector");
  return {v[0], v[1], v[2]};
}

matgroup::Normalization normalization_from_json(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "cardinality") return matgroup::Normalization::cardinality();
  const double scale = j.contains("scale") && j.at("scale").is_number() ? j.at("scale").get<double>() : 1.0;
  return matgroup::Normalization::power_exp(j.at("alpha").get<double>(), j.value("beta", 1.0), scale);
}

std::vector<double> thresholds_from_json(const Json& j) {
  if (j.is_array()) return doubles(j);
  const double base = j.value("base", 2.0);
  std::vector<double> out;
  for (int k = j.at("from").get<int>(); k <= j.at("to").get<int>(); ++k) out.push_back(std::pow(base, k));
  return out;
}

std::vector<Eigen::Matrix3d> sphere_generators(const Json& g) {
  std::vector<Eigen::Matrix3d> out;
  if (g.at("type") == "norm5_quaternions") {
    for (const auto& r : matgroup::norm5_quaternion_rotations()) out.push_back(r.matrix());
  } else {
    for (const auto& r : g.at("rotations")) {
      const auto v = r.get<std::vector<double>>();
      const Eigen::Vector3d axis(v[0], v[1], v[2]);
      if (!(axis.norm() > 0.0)) throw ConfigError("rotation axis must be nonzero");
      out.push_back(matgroup::rotation(axis.normalized(), v[3]).matrix());
    }
  }
  return out;
}

}  // namespace orbitlab::expcli::detail
