#pragma once

namespace orbitlab::ergodic {

/// E^{a/(a+rho)}: the uniform bound obtained from an L^p error E for a-Hoelder
/// functions on a space of local dimension rho. Throws DomainError unless
/// a in (0,1], rho > 0 and E in (0,1).
double predict_uniform_rate(double a, double rho, double e);
/// eps = E^{1/(a+rho)}, the radius balancing eps^-rho E against eps^a.
double balance_epsilon(double a, double rho, double e);
/// eps^-rho E + eps^a.
double balanced_sum(double a, double rho, double e, double eps);
/// E_bar^{m/(m+rho)} with m = min(a0, a), E_bar a windowed sup of the series.
double transitive_rate(double a0, double a, double rho, double e_bar);

}  // namespace orbitlab::ergodic
