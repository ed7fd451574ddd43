#include "orbitlab/expcli/config.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "build.hpp"
#include "orbitlab/errors.hpp"
#include "orbitlab/freegroup/enumerate.hpp"
#include "orbitlab/numeric.hpp"

namespace orbitlab::expcli {

namespace {

constexpr std::pair<ExperimentKind, const char*> kKindNames[] = {
    {ExperimentKind::free_quotient, "free_quotient"},       {ExperimentKind::free_sphere2, "free_sphere2"},
    {ExperimentKind::lattice_quotient, "lattice_quotient"}, {ExperimentKind::plane_infinite, "plane_infinite"},
    {ExperimentKind::boundary_circle, "boundary_circle"},   {ExperimentKind::desitter, "desitter"},
    {ExperimentKind::ratio, "ratio"},                       {ExperimentKind::monotonicity_audit, "monotonicity_audit"},
};

// Collects diagnostics while walking the document. Accessors return nullptr
// (after recording an error) when a field is missing or has the wrong type,
// so checks of dependent fields can simply be skipped.
class Checker {
 public:
  explicit Checker(std::vector<Diagnostic>& out) : out_(out) {}

  void error(const std::string& path, const std::string& msg) { out_.push_back({Diagnostic::Severity::error, path, msg}); }
  void warning(const std::string& path, const std::string& msg) {
    out_.push_back({Diagnostic::Severity::warning, path, msg});
  }
  void info(const std::string& path, const std::string& msg) { out_.push_back({Diagnostic::Severity::info, path, msg}); }

  const Json* field(const Json& obj, const std::string& path, const char* key, bool required) {
    if (!obj.is_object()) return nullptr;
    auto it = obj.find(key);
    if (it == obj.end()) {
      if (required) error(path + "/" + key, "required field is missing");
      return nullptr;
    }
    return &*it;
  }

  const Json* object(const Json& obj, const std::string& path, const char* key, bool required = true) {
    const Json* f = field(obj, path, key, required);
    if (f && !f->is_object()) {
      error(path + "/" + key, "expected an object");
      return nullptr;
    }
    return f;
  }

  const Json* array(const Json& obj, const std::string& path, const char* key, bool required = true,
                    std::size_t min_size = 1) {
    const Json* f = field(obj, path, key, required);
    if (!f) return nullptr;
    if (!f->is_array()) {
      error(path + "/" + key, "expected an array");
      return nullptr;
    }
    if (f->size() < min_size) {
      error(path + "/" + key, "expected at least " + std::to_string(min_size) + " entries");
      return nullptr;
    }
    return f;
  }

  std::optional<double> number(const Json& obj, const std::string& path, const char* key, bool required, double lo,
                               double hi, bool open_lo = false) {
    const Json* f = field(obj, path, key, required);
    if (!f) return std::nullopt;
    if (!f->is_number()) {
      error(path + "/" + key, "expected a number");
      return std::nullopt;
    }
    const double v = f->get<double>();
    if (!std::isfinite(v) || v < lo || v > hi || (open_lo && v == lo)) {
      error(path + "/" + key, "value " + format_double(v) + " outside " + (open_lo ? "(" : "[") + format_double(lo) +
                                  ", " + format_double(hi) + "]");
      return std::nullopt;
    }
    return v;
  }

  std::optional<std::int64_t> integer(const Json& obj, const std::string& path, const char* key, bool required,
                                      std::int64_t lo, std::int64_t hi) {
    const Json* f = field(obj, path, key, required);
    if (!f) return std::nullopt;
    if (!f->is_number_integer()) {
      error(path + "/" + key, "expected an integer");
      return std::nullopt;
    }
    const auto v = f->get<std::int64_t>();
    if (v < lo || v > hi) {
      error(path + "/" + key, "value " + std::to_string(v) + " outside [" + std::to_string(lo) + ", " +
                                  std::to_string(hi) + "]");
      return std::nullopt;
    }
    return v;
  }

  std::optional<std::string> choice(const Json& obj, const std::string& path, const char* key, bool required,
                                    std::initializer_list<const char*> allowed) {
    const Json* f = field(obj, path, key, required);
    if (!f) return std::nullopt;
    if (f->is_string())
      for (const char* a : allowed)
        if (f->get<std::string>() == a) return f->get<std::string>();
    std::string list;
    for (const char* a : allowed) list += std::string(list.empty() ? "" : ", ") + a;
    error(path + "/" + key, "expected one of: " + list);
    return std::nullopt;
  }

  /// Numeric vector of a fixed size (0 = any size >= 1).
  std::optional<std::vector<double>> vector(const Json& obj, const std::string& path, const char* key, bool required,
                                            std::size_t size) {
    const Json* f = field(obj, path, key, required);
    if (!f) return std::nullopt;
    if (!f->is_array() || (size && f->size() != size) || f->empty()) {
      error(path + "/" + key, size ? "expected " + std::to_string(size) + " numbers" : "expected a list of numbers");
      return std::nullopt;
    }
    std::vector<double> out;
    for (const auto& v : *f) {
      if (!v.is_number() || !std::isfinite(v.get<double>())) {
        error(path + "/" + key, "expected finite numbers");
        return std::nullopt;
      }
      out.push_back(v.get<double>());
    }
    return out;
  }

  /// Increasing thresholds T > 1, as a list or {base, from, to}.
  std::optional<std::vector<double>> thresholds(const Json& obj, const std::string& path, const char* key,
                                                bool required = true, double max_t = 1e6) {
    const Json* f = field(obj, path, key, required);
    if (!f) return std::nullopt;
    const std::string p = path + "/" + key;
    std::vector<double> t;
    if (f->is_object()) {
      auto base = number(*f, p, "base", false, 1.0, 16.0, true);
      auto from = integer(*f, p, "from", true, 0, 64);
      auto to = integer(*f, p, "to", true, 0, 64);
      if (!from || !to) return std::nullopt;
      if (!base && f->contains("base")) return std::nullopt;
      t = detail::thresholds_from_json(*f);
    } else if (auto v = vector(obj, path, key, required, 0)) {
      t = *v;
    } else {
      return std::nullopt;
    }
    if (t.size() < 2) {
      error(p, "need at least two thresholds");
      return std::nullopt;
    }
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (!(t[i] > 1.0) || t[i] > max_t) {
        error(p, "thresholds must lie in (1, " + format_double(max_t) + "]");
        return std::nullopt;
      }
      if (i && !(t[i] > t[i - 1])) {
        error(p, "thresholds must be strictly increasing");
        return std::nullopt;
      }
    }
    return t;
  }

  void budget(const std::string& path, std::uint64_t predicted, std::uint64_t limit, const std::string& what) {
    const std::string msg = what + ": predicted " + std::to_string(predicted) + " elements";
    if (predicted > limit)
      warning(path, msg + " exceed budget " + std::to_string(limit) + "; the run would stop with exit code 3");
    else
      info(path, msg);
  }

  void unknown_keys(const Json& obj, const std::string& path, std::initializer_list<const char*> known) {
    if (!obj.is_object()) return;
    for (auto it = obj.begin(); it != obj.end(); ++it) {
      bool ok = false;
      for (const char* k : known) ok = ok || it.key() == k;
      if (!ok) warning(path + "/" + it.key(), "unknown field is ignored");
    }
  }

 private:
  std::vector<Diagnostic>& out_;
};

void check_quotient(Checker& c, const Json& doc, const std::string& path, const char* key) {
  const Json* q = c.object(doc, path, key);
  if (!q) return;
  const std::string p = path + "/" + key;
  auto type = c.choice(*q, p, "type", true, {"sl2_mod", "permutations", "chain"});
  if (!type) return;
  if (*type == "chain") {
    const Json* levels = c.array(*q, p, "levels", true, 1);
    if (!levels) return;
    for (std::size_t i = 0; i < levels->size(); ++i)
      if ((*levels)[i].value("type", "") == "chain") c.error(p + "/levels/" + std::to_string(i), "chains do not nest");
  } else if (*type == "sl2_mod") {
    c.integer(*q, p, "modulus", true, 2, 16);
    c.array(*q, p, "generators", true, 2);
  } else {
    c.array(*q, p, "images", true, 2);
  }
  try {
    detail::build_quotient(*q);
  } catch (const Error& e) {
    c.error(p, e.what());
  } catch (const std::exception& e) {
    c.error(p, std::string("malformed quotient: ") + e.what());
  }
}

int quotient_rank(const Json& q) {
  if (q.value("type", "") == "chain") return quotient_rank(q.at("levels").at(0));
  if (q.contains("generators")) return static_cast<int>(q.at("generators").size());
  if (q.contains("images")) return static_cast<int>(q.at("images").size());
  return 2;
}

void check_finite_functions(Checker& c, const Json& doc, const std::string& path, std::size_t degree) {
  const Json* fs = c.array(doc, path, "functions");
  if (!fs) return;
  for (std::size_t i = 0; i < fs->size(); ++i) {
    const std::string p = path + "/functions/" + std::to_string(i);
    const Json& f = (*fs)[i];
    auto type = c.choice(f, p, "type", true, {"delta", "table", "bump"});
    if (!type) continue;
    if (*type == "delta") {
      c.integer(f, p, "point", true, 0, degree ? static_cast<std::int64_t>(degree) - 1 : INT32_MAX);
    } else if (*type == "table") {
      if (auto v = c.vector(f, p, "values", true, 0); v && degree && v->size() != degree)
        c.error(p + "/values", "table has " + std::to_string(v->size()) + " values for " + std::to_string(degree) +
                                   " points");
    } else {
      c.integer(f, p, "centre", true, 0, degree ? static_cast<std::int64_t>(degree) - 1 : INT32_MAX);
      auto radius = c.number(f, p, "radius", true, 0.0, 1e9, true);
      c.number(f, p, "exponent", false, 0.0, 1.0, true);
      if (radius && degree && *radius < 1.0 / static_cast<double>(degree))
        c.error(p + "/radius", "bump radius below the metric resolution 1/|X|");
    }
  }
}

void check_free_quotient(Checker& c, const Json& doc, std::uint64_t budget) {
  check_quotient(c, doc, "", "quotient");
  const Json* q = c.field(doc, "", "quotient", false);
  std::size_t degree = 0;
  int rank = 2;
  if (q && q->is_object()) {
    try {
      degree = detail::quotient_degree(*q);
      rank = quotient_rank(*q);
    } catch (const std::exception&) {
    }
  }
  auto radius = c.integer(doc, "", "radius_max", true, 2, 40);
  if (radius && *radius % 2) c.error("/radius_max", "balls B_2n are even; radius_max must be even");
  auto method = c.choice(doc, "", "method", false, {"auto", "enumerate", "recursion"});
  c.choice(doc, "", "limit", false, {"free_parity", "mean"});
  if (const Json* rate = c.object(doc, "", "rate", false)) {
    c.number(*rate, "/rate", "a", false, 0.0, 1.0, true);
    c.number(*rate, "/rate", "rho", false, 0.0, 64.0, true);
    c.number(*rate, "/rate", "audit_constant", false, 0.0, 1e12, true);
  }
  c.integer(doc, "", "oracle_radius_max", false, 0, 40);
  check_finite_functions(c, doc, "", degree);
  if (degree > 400) c.warning("/quotient", "spectral reference is dense; quotients above 400 points are slow");
  if (radius) {
    const auto ball = freegroup::ball_size(rank, static_cast<int>(*radius));
    const bool per_point = method && *method == "enumerate";
    if (!(method && *method == "recursion"))
      c.budget("/radius_max", per_point ? ball * std::max<std::size_t>(degree, 1) : ball, budget, "word ball");
  }
  c.unknown_keys(doc, "", {"schema_version", "kind", "seed", "budget", "threads", "output_dir", "description",
                           "quotient", "radius_max", "method", "limit", "rate", "functions", "oracle_radius_max"});
}

void check_sphere(Checker& c, const Json& doc, std::uint64_t budget) {
  int rank = 3;
  if (const Json* g = c.object(doc, "", "generators")) {
    auto type = c.choice(*g, "/generators", "type", true, {"norm5_quaternions", "axis_angle"});
    if (type && *type == "axis_angle") {
      if (const Json* rots = c.array(*g, "/generators", "rotations", true, 2)) {
        rank = static_cast<int>(rots->size());
        for (const auto& r : *rots)
          if (!r.is_array() || r.size() != 4) c.error("/generators/rotations", "each rotation is [x, y, z, angle]");
      }
    }
  }
  if (const Json* f = c.object(doc, "", "function")) {
    auto type = c.choice(*f, "/function", "type", true, {"smooth_bump", "bump", "indicator"});
    if (auto centre = c.vector(*f, "/function", "centre", true, 3)) {
      const double n = std::hypot((*centre)[0], (*centre)[1], (*centre)[2]);
      if (!(n > 0.0)) c.error("/function/centre", "centre must be a nonzero vector");
    }
    c.number(*f, "/function", "radius", true, 0.0, 2.0, true);
    c.number(*f, "/function", "exponent", false, 0.0, 1.0, true);
    if (type && *type == "indicator")
      c.warning("/function", "indicators are not Hoelder; the off-grid bound is not certified");
  }
  c.integer(doc, "", "grid_points", false, 10, 1000000);
  auto radius = c.integer(doc, "", "radius_max", true, 2, 24);
  if (radius && *radius % 2) c.error("/radius_max", "balls B_2n are even; radius_max must be even");
  if (radius) c.budget("/radius_max", freegroup::ball_size(rank, static_cast<int>(*radius)), budget, "word ball");
  c.unknown_keys(doc, "", {"schema_version", "kind", "seed", "budget", "threads", "output_dir", "description",
                           "generators", "function", "grid_points", "radius_max"});
}

std::uint64_t lattice_ball(double T) {
  return matgroup::predicted_sl2z_ball_size(matgroup::strict_norm_sq_bound_T(T));
}

void check_lattice(Checker& c, const Json& doc, std::uint64_t budget) {
  c.integer(doc, "", "modulus", true, 2, 16);
  if (auto t = c.thresholds(doc, "", "thresholds")) c.budget("/thresholds", lattice_ball(t->back()), budget, "lattice ball");
  c.thresholds(doc, "", "count_thresholds", false, 1e5);
  if (const Json* f = c.object(doc, "", "function", false)) {
    c.choice(*f, "/function", "type", true, {"delta"});
    if (const Json* e = c.field(*f, "/function", "element", false)) {
      try {
        detail::lattice_from_json(*e);
      } catch (const Error& err) {
        c.error("/function/element", err.what());
      }
    }
  }
  c.unknown_keys(doc, "", {"schema_version", "kind", "seed", "budget", "threads", "output_dir", "description",
                           "modulus", "thresholds", "count_thresholds", "function"});
}

void check_normalization(Checker& c, const Json& doc, const std::string& path, bool alpha_required, bool allow_unit) {
  const Json* n = c.field(doc, path, "normalization", true);
  if (!n) return;
  const std::string p = path + "/normalization";
  if (n->is_string()) {
    if (n->get<std::string>() != "cardinality") c.error(p, "expected \"cardinality\" or an object");
    return;
  }
  if (!n->is_object()) {
    c.error(p, "expected \"cardinality\" or an object");
    return;
  }
  c.number(*n, p, "alpha", alpha_required, 0.0, 16.0);
  c.number(*n, p, "beta", false, 1.0, 16.0);
  if (const Json* s = c.field(*n, p, "scale", false)) {
    if (s->is_string()) {
      if (!allow_unit || s->get<std::string>() != "unit_mass") c.error(p + "/scale", "expected a positive number");
    } else {
      c.number(*n, p, "scale", false, 0.0, 1e300, true);
    }
  }
}

void check_binning(Checker& c, const Json& doc, const std::string& path, const char* a, const char* b) {
  if (const Json* bin = c.object(doc, path, "binning", false)) {
    c.integer(*bin, path + "/binning", a, false, 1, 4096);
    c.integer(*bin, path + "/binning", b, false, 1, 4096);
  }
}

// Touched elements of the strip enumeration: every hit plus the rows tried,
// both of order T R / |x| (the limit density integrates to about 7.6 R/|x|).
std::uint64_t plane_elements(double T, double R, const Eigen::Vector2d& x) {
  return static_cast<std::uint64_t>(16.0 * R * T / std::min(1.0, x.norm()) + 1e4);
}

void check_plane_point(Checker& c, const std::vector<double>& v, const std::string& path) {
  if (v[1] == 0.0 || v[0] == 0.0)
    c.error(path, "points on an axis have rational slope and a discrete orbit");
  else if (std::abs(v[0] / v[1] - std::round(v[0] / v[1])) < 1e-12)
    c.warning(path, "rational slope: the orbit is discrete");
}

void check_plane(Checker& c, const Json& doc, std::uint64_t budget) {
  std::vector<Eigen::Vector2d> pts;
  if (const Json* points = c.array(doc, "", "points")) {
    for (std::size_t i = 0; i < points->size(); ++i) {
      const std::string p = "/points/" + std::to_string(i);
      const Json& v = (*points)[i];
      if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
        c.error(p, "expected [x1, x2]");
        continue;
      }
      check_plane_point(c, v.get<std::vector<double>>(), p);
      pts.push_back(detail::vec2(v));
    }
  }
  auto R = c.number(doc, "", "radius", true, 1.0, 1e3, true);
  auto t = c.thresholds(doc, "", "thresholds", true, 1e9);
  check_binning(c, doc, "", "radial_bins", "angular_bins");
  check_normalization(c, doc, "", true, true);
  if (t && R)
    for (const auto& x : pts) c.budget("/thresholds", plane_elements(t->back(), *R, x), budget, "plane strip");
  c.unknown_keys(doc, "", {"schema_version", "kind", "seed", "budget", "threads", "output_dir", "description",
                           "points", "radius", "thresholds", "binning", "normalization"});
}

void check_circle(Checker& c, const Json& doc, std::uint64_t budget) {
  if (auto t = c.thresholds(doc, "", "thresholds", true, 1e5))
    c.budget("/thresholds", lattice_ball(t->back()), budget, "lattice ball");
  if (const Json* f = c.object(doc, "", "function")) {
    c.choice(*f, "/function", "type", true, {"bump", "smooth_bump"});
    c.number(*f, "/function", "centre", true, -1e6, 1e6);
    c.number(*f, "/function", "radius", true, 0.0, std::numbers::pi / 2, true);
    c.number(*f, "/function", "exponent", false, 0.0, 1.0, true);
  }
  c.integer(doc, "", "grid_points", false, 1, 100000);
  c.unknown_keys(doc, "", {"schema_version", "kind", "seed", "budget", "threads", "output_dir", "description",
                           "thresholds", "function", "grid_points"});
}

void check_desitter(Checker& c, const Json& doc, std::uint64_t budget) {
  if (const Json* p = c.object(doc, "", "point")) {
    c.number(*p, "/point", "z", true, -1e6, 1e6);
    c.number(*p, "/point", "phi", true, -1e6, 1e6);
  }
  if (auto t = c.thresholds(doc, "", "thresholds", true, 1e5))
    c.budget("/thresholds", lattice_ball(t->back()), budget, "lattice ball");
  c.number(doc, "", "filtration_radius", true, 0.0, 1e6, true);
  check_binning(c, doc, "", "z_bins", "phi_bins");
  check_normalization(c, doc, "", true, false);
  c.unknown_keys(doc, "", {"schema_version", "kind", "seed", "budget", "threads", "output_dir", "description",
                           "point", "thresholds", "filtration_radius", "binning", "normalization"});
}

void check_ratio(Checker& c, const Json& doc, std::uint64_t budget) {
  const Json* fin = c.object(doc, "", "finite", false);
  const Json* pl = c.object(doc, "", "plane", false);
  if (!fin && !pl) c.error("", "a ratio experiment needs a finite or a plane part");
  if (fin) {
    check_quotient(c, *fin, "/finite", "quotient");
    std::size_t degree = 0;
    int rank = 2;
    try {
      degree = detail::quotient_degree(fin->at("quotient"));
      rank = quotient_rank(fin->at("quotient"));
    } catch (const std::exception&) {
    }
    const auto hi = degree ? static_cast<std::int64_t>(degree) - 1 : INT32_MAX;
    c.integer(*fin, "/finite", "x", true, 0, hi);
    for (const char* key : {"A1", "A2"})
      if (const Json* a = c.array(*fin, "/finite", key))
        for (const auto& v : *a)
          if (!v.is_number_integer() || v.get<std::int64_t>() < 0 || v.get<std::int64_t>() > hi)
            c.error(std::string("/finite/") + key, "expected point indices of the quotient");
    auto radius = c.integer(*fin, "/finite", "radius_max", true, 2, 40);
    if (radius && *radius % 2) c.error("/finite/radius_max", "balls B_2n are even; radius_max must be even");
    if (radius)
      c.budget("/finite/radius_max", freegroup::ball_size(rank, static_cast<int>(*radius)), budget, "word ball");
  }
  if (pl) {
    std::optional<std::vector<double>> x = c.vector(*pl, "/plane", "point", true, 2);
    if (x) check_plane_point(c, *x, "/plane/point");
    for (const char* key : {"A1", "A2"})
      if (auto a = c.vector(*pl, "/plane", key, true, 2); a && !((*a)[0] > 0.0 && (*a)[1] > (*a)[0]))
        c.error(std::string("/plane/") + key, "annulus [r1, r2] needs 0 < r1 < r2");
    auto R = c.number(*pl, "/plane", "radius", true, 1.0, 1e3, true);
    auto t = c.thresholds(*pl, "/plane", "thresholds", true, 1e9);
    check_binning(c, *pl, "/plane", "radial_bins", "angular_bins");
    if (R)
      for (const char* key : {"A1", "A2"})
        if (pl->contains(key) && (*pl)[key].is_array() && (*pl)[key].size() == 2 && (*pl)[key][1].is_number() &&
            (*pl)[key][1].get<double>() > *R)
          c.error(std::string("/plane/") + key, "annulus leaves the enumerated disc |y| <= radius");
    if (t && R && x) c.budget("/plane/thresholds", plane_elements(t->back(), *R, detail::vec2(pl->at("point"))), budget, "plane strip");
  }
  c.unknown_keys(doc, "", {"schema_version", "kind", "seed", "budget", "threads", "output_dir", "description",
                           "finite", "plane"});
}

void check_monotone(Checker& c, const Json& doc, std::uint64_t budget) {
  if (auto eps = c.vector(doc, "", "eps", true, 0)) {
    for (double e : *eps)
      if (!(e > 0.0 && e <= 1.0)) c.error("/eps", "eps values must lie in (0, 1]");
    if (eps->size() < 2) c.warning("/eps", "a0 needs at least two eps values");
  }
  c.integer(doc, "", "samples_per_eps", false, 1, 100000);
  if (auto t = c.thresholds(doc, "", "thresholds", true, 1e4))
    c.budget("/thresholds", lattice_ball(2.0 * t->back()), budget, "lattice ball at T e^kappa");
  check_normalization(c, doc, "", false, false);
  c.unknown_keys(doc, "", {"schema_version", "kind", "seed", "budget", "threads", "output_dir", "description",
                           "eps", "samples_per_eps", "thresholds", "normalization"});
}

}  // namespace

std::string to_string(ExperimentKind kind) {
  for (const auto& [k, name] : kKindNames)
    if (k == kind) return name;
  return "unknown";
}

std::optional<ExperimentKind> kind_from_string(const std::string& s) {
  for (const auto& [k, name] : kKindNames)
    if (s == name) return k;
  return std::nullopt;
}

std::string to_string(Diagnostic::Severity s) {
  switch (s) {
    case Diagnostic::Severity::error: return "error";
    case Diagnostic::Severity::warning: return "warning";
    case Diagnostic::Severity::info: return "info";
  }
  return "?";
}

bool has_errors(const std::vector<Diagnostic>& diagnostics) {
  for (const auto& d : diagnostics)
    if (d.severity == Diagnostic::Severity::error) return true;
  return false;
}

Json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

Json apply_overrides(Json doc, const Overrides& o) {
  if (!doc.is_object()) return doc;
  if (o.seed) doc["seed"] = *o.seed;
  if (o.budget) doc["budget"]["max_elements"] = *o.budget;
  if (o.threads) doc["threads"] = *o.threads;
  if (o.output_dir) doc["output_dir"] = *o.output_dir;
  return doc;
}

std::vector<Diagnostic> validate(const Json& doc) {
  std::vector<Diagnostic> out;
  Checker c(out);
  if (!doc.is_object()) {
    c.error("", "a config is a JSON object");
    return out;
  }
  if (auto v = c.integer(doc, "", "schema_version", false, 0, 1000); v && *v != kSchemaVersion)
    c.error("/schema_version", "unsupported schema version " + std::to_string(*v));
  c.integer(doc, "", "seed", true, 0, INT64_MAX);
  if (const Json* s = c.field(doc, "", "seed", false); s && s->is_number_unsigned() && !s->is_number_integer())
    c.error("/seed", "expected an integer");
  std::uint64_t budget = EnumerationBudget{}.max_elements;
  if (const Json* b = c.object(doc, "", "budget", false)) {
    if (auto m = c.integer(*b, "/budget", "max_elements", true, 1, INT64_MAX)) budget = static_cast<std::uint64_t>(*m);
  }
  c.integer(doc, "", "threads", false, 1, 256);
  if (const Json* o = c.field(doc, "", "output_dir", false); o && !o->is_string())
    c.error("/output_dir", "expected a string");
  auto kind_name = c.choice(doc, "", "kind", true,
                            {"free_quotient", "free_sphere2", "lattice_quotient", "plane_infinite", "boundary_circle",
                             "desitter", "ratio", "monotonicity_audit"});
  if (!kind_name) return out;
  try {
    switch (*kind_from_string(*kind_name)) {
      case ExperimentKind::free_quotient: check_free_quotient(c, doc, budget); break;
      case ExperimentKind::free_sphere2: check_sphere(c, doc, budget); break;
      case ExperimentKind::lattice_quotient: check_lattice(c, doc, budget); break;
      case ExperimentKind::plane_infinite: check_plane(c, doc, budget); break;
      case ExperimentKind::boundary_circle: check_circle(c, doc, budget); break;
      case ExperimentKind::desitter: check_desitter(c, doc, budget); break;
      case ExperimentKind::ratio: check_ratio(c, doc, budget); break;
      case ExperimentKind::monotonicity_audit: check_monotone(c, doc, budget); break;
    }
  } catch (const std::exception& e) {
    // A malformed fragment that slipped past the field checks.
    c.error("", std::string("malformed config: ") + e.what());
  }
  return out;
}

ExperimentConfig parse_config(const Json& doc) {
  const auto diagnostics = validate(doc);
  if (has_errors(diagnostics)) {
    std::ostringstream msg;
    msg << "invalid config";
    for (const auto& d : diagnostics)
      if (d.severity == Diagnostic::Severity::error) msg << "\n  " << (d.path.empty() ? "/" : d.path) << ": " << d.message;
    throw ConfigError(msg.str());
  }
  ExperimentConfig cfg;
  cfg.kind = *kind_from_string(doc.at("kind").get<std::string>());
  cfg.seed = doc.at("seed").get<std::uint64_t>();
  if (doc.contains("budget")) cfg.budget.max_elements = doc.at("budget").at("max_elements").get<std::uint64_t>();
  cfg.threads = doc.value("threads", 1);
  cfg.output_dir = doc.value("output_dir", std::string("out/") + to_string(cfg.kind));
  cfg.document = doc;
  return cfg;
}

}  // namespace orbitlab::expcli
