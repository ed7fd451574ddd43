#pragma once

// Result records: one JSON document per run plus one flat CSV per series.
// Everything under "payload" is a pure function of the config (seed
// included); wall-clock time and the code version live outside it so the
// payload hash is stable across machines and reruns.

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "orbitlab/ergodic/series.hpp"
#include "orbitlab/expcli/config.hpp"

namespace orbitlab::expcli {

/// A (t, value) trajectory for CSV export. `norm` is the error norm for
/// error series and a free tag ("ratio", "mass", ...) otherwise.
struct NamedSeries {
  std::string name;
  std::string norm;
  std::vector<double> t;
  std::vector<double> value;
  std::map<std::string, std::string> metadata;

  static NamedSeries from(std::string name, const ergodic::ErrorSeries& s);
  std::uint64_t metadata_hash() const;
};

struct ResultRecord {
  Json config;
  std::string code_version;
  /// "ok", "budget_exceeded" or "invariant_violation"; a non-ok record keeps
  /// whatever was computed before the failure, flagged invalid.
  std::string status = "ok";
  std::string message;
  Json payload = Json::object();
  std::vector<NamedSeries> series;
  double wall_clock_seconds = 0.0;

  bool valid() const { return status == "ok"; }
  /// FNV-1a of the canonical payload text, series included.
  std::string payload_hash() const;
  /// Payload with the series folded in; the hashed document.
  Json canonical_payload() const;
  Json to_json() const;
};

/// Writes record.json and series/<name>.csv under `dir`, creating it.
void write_record(const ResultRecord& record, const std::filesystem::path& dir);

/// Human-readable digest of a record directory: status, hashes, headline
/// numbers and series endpoints. ConfigError if no record is found.
std::string report(const std::filesystem::path& dir);

}  // namespace orbitlab::expcli
