#include "orbitlab/spaces/space.hpp"

namespace orbitlab::spaces {

std::string to_string(SpaceKind kind) {
  switch (kind) {
    case SpaceKind::sphere2: return "sphere2";
    case SpaceKind::circle: return "circle";
    case SpaceKind::plane: return "plane";
    case SpaceKind::desitter: return "desitter";
    case SpaceKind::finite_coset: return "finite_coset";
    case SpaceKind::profinite_level: return "profinite_level";
  }
  return "unknown";
}

}  // namespace orbitlab::spaces
