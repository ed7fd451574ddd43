#include "orbitlab/matgroup/sl2z.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <ostream>
#include <stdexcept>

#include "orbitlab/numeric.hpp"

namespace orbitlab::matgroup {

namespace {
std::int64_t mul(std::int64_t x, std::int64_t y) {
  std::int64_t out;
  if (__builtin_mul_overflow(x, y, &out)) throw std::overflow_error("SL2(Z) entry overflow");
  return out;
}
std::int64_t add(std::int64_t x, std::int64_t y) {
  std::int64_t out;
  if (__builtin_add_overflow(x, y, &out)) throw std::overflow_error("SL2(Z) entry overflow");
  return out;
}
}  // namespace

LatticeElement LatticeElement::make(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  LatticeElement g{a, b, c, d};
  if (g.determinant() != 1) throw std::invalid_argument("matrix is not in SL2(Z): determinant != 1");
  return g;
}

std::int64_t LatticeElement::norm_sq() const {
  return add(add(mul(a, a), mul(b, b)), add(mul(c, c), mul(d, d)));
}

LatticeElement operator*(const LatticeElement& x, const LatticeElement& y) {
  return {add(mul(x.a, y.a), mul(x.b, y.c)), add(mul(x.a, y.b), mul(x.b, y.d)), add(mul(x.c, y.a), mul(x.d, y.c)),
          add(mul(x.c, y.b), mul(x.d, y.d))};
}

double matrix_norm(const LatticeElement& g, NormKind kind) {
  if (kind == NormKind::max)
    return static_cast<double>(std::max({std::llabs(g.a), std::llabs(g.b), std::llabs(g.c), std::llabs(g.d)}));
  return std::sqrt(static_cast<double>(g.norm_sq()));
}

std::int64_t strict_norm_sq_bound(double t) {
  const double e2t = std::exp(2.0 * t);
  if (!(e2t < 9.0e18)) throw std::overflow_error("norm threshold too large");
  auto n = static_cast<std::int64_t>(std::ceil(e2t)) - 1;
  // Guard the rounding of exp: keep the largest integer n with n < e^{2t}.
  while (n >= 0 && 0.5 * std::log(static_cast<double>(n)) >= t) --n;
  while (0.5 * std::log(static_cast<double>(n + 1)) < t) ++n;
  return n;
}

std::int64_t strict_norm_sq_bound_T(double T) {
  if (!(T >= 0) || T * T > 9.0e18) throw std::invalid_argument("norm threshold out of range");
  const double t2 = T * T;
  const double fl = std::floor(t2);
  return static_cast<std::int64_t>(fl) - (fl == t2 ? 1 : 0);
}

std::int64_t closed_norm_sq_bound(double T) {
  if (!(T >= 0) || T * T > 9.0e18) throw std::invalid_argument("norm threshold out of range");
  return static_cast<std::int64_t>(std::floor(T * T + 1e-9));
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  a = std::llabs(a);
  b = std::llabs(b);
  while (b != 0) {
    const std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::pair<std::int64_t, std::int64_t> unimodular_completion(std::int64_t a, std::int64_t b) {
  // Extended Euclid on (a, b): x*a + y*b = g.
  std::int64_t old_r = a, r = b, old_x = 1, x = 0, old_y = 0, y = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_x - q * x;
    old_x = x;
    x = t;
    t = old_y - q * y;
    old_y = y;
    y = t;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_x = -old_x;
    old_y = -old_y;
  }
  if (old_r != 1) throw std::invalid_argument("top row is not primitive");
  // a*d0 - b*c0 = 1 with d0 = x, c0 = -y.
  return {-old_y, old_x};
}

std::pair<std::int64_t, std::int64_t> bottom_row_range(std::int64_t a, std::int64_t b, std::int64_t c0,
                                                       std::int64_t d0, std::int64_t bound) {
  const __int128 s = static_cast<__int128>(a) * a + static_cast<__int128>(b) * b;
  const __int128 p = static_cast<__int128>(a) * c0 + static_cast<__int128>(b) * d0;
  const __int128 q = static_cast<__int128>(c0) * c0 + static_cast<__int128>(d0) * d0;
  const __int128 room = static_cast<__int128>(bound) - s;
  auto fits = [&](std::int64_t k) {
    const __int128 kk = k;
    return s * kk * kk + 2 * p * kk + q <= room;
  };
  if (room < 0) return {1, 0};
  const double sd = static_cast<double>(s), pd = static_cast<double>(p);
  const double disc = pd * pd - sd * (static_cast<double>(q) - static_cast<double>(room));
  const double centre = -pd / sd;
  const double half = disc > 0 ? std::sqrt(disc) / sd : 0.0;
  auto lo = static_cast<std::int64_t>(std::floor(centre - half));
  auto hi = static_cast<std::int64_t>(std::ceil(centre + half));
  // Shrink to the exact integer range; the quadratic is convex in k.
  const auto kc = static_cast<std::int64_t>(std::llround(centre));
  while (lo <= hi && !fits(lo)) ++lo;
  while (hi >= lo && !fits(hi)) --hi;
  if (lo > hi) {
    if (fits(kc)) lo = hi = kc;
    else return {1, 0};
  }
  while (fits(lo - 1)) --lo;
  while (fits(hi + 1)) ++hi;
  return {lo, hi};
}

std::uint64_t predicted_sl2z_ball_size(std::int64_t norm_sq_bound) {
  return static_cast<std::uint64_t>(6.0 * static_cast<double>(norm_sq_bound) + 64.0);
}

std::uint64_t count_sl2z_ball(std::int64_t norm_sq_bound) {
  if (norm_sq_bound < 2) return 0;
  std::uint64_t total = 0;
  const auto amax = static_cast<std::int64_t>(std::sqrt(static_cast<double>(norm_sq_bound))) + 1;
  for (std::int64_t a = -amax; a <= amax; ++a) {
    const std::int64_t rem = norm_sq_bound - a * a;
    if (rem < 0) continue;
    auto bmax = static_cast<std::int64_t>(std::sqrt(static_cast<double>(rem)));
    while (bmax * bmax > rem) --bmax;
    while ((bmax + 1) * (bmax + 1) <= rem) ++bmax;
    for (std::int64_t b = -bmax; b <= bmax; ++b) {
      if (gcd64(a, b) != 1) continue;
      const auto [c0, d0] = unimodular_completion(a, b);
      const auto [lo, hi] = bottom_row_range(a, b, c0, d0, norm_sq_bound);
      if (hi >= lo) total += static_cast<std::uint64_t>(hi - lo + 1);
    }
  }
  return total;
}

void write_ball_csv(std::ostream& out, std::int64_t norm_sq_bound, const EnumerationBudget& budget) {
  out << "a,b,c,d,norm\n";
  enumerate_sl2z_ball(norm_sq_bound, budget, [&out](const LatticeElement& g) {
    out << g.a << ',' << g.b << ',' << g.c << ',' << g.d << ',' << format_double(matrix_norm(g, NormKind::euclidean))
        << '\n';
  });
}

}  // namespace orbitlab::matgroup
