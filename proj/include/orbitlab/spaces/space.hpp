#pragma once

#include <string>

namespace orbitlab::spaces {

enum class SpaceKind { sphere2, circle, plane, desitter, finite_coset, profinite_level };

std::string to_string(SpaceKind kind);

/// Metric balls D_eps(x) are taken open, d(x, y) < eps, on every space. On
/// continuous spaces this differs from the closed ball by a null set; on the
/// profinite levels it makes mu(D_eps) = eps at eps = 1/index.
inline bool in_open_ball(double distance, double eps) { return distance < eps; }

}  // namespace orbitlab::spaces
