#pragma once

// Experiment declarations. A config is one JSON document; `validate` reports
// every problem it can find without running anything, and `parse_config`
// refuses a document with any error-level diagnostic.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "orbitlab/budget.hpp"

namespace orbitlab::expcli {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

enum class ExperimentKind {
  free_quotient,
  free_sphere2,
  lattice_quotient,
  plane_infinite,
  boundary_circle,
  desitter,
  ratio,
  monotonicity_audit
};

std::string to_string(ExperimentKind kind);
std::optional<ExperimentKind> kind_from_string(const std::string& s);

struct Diagnostic {
  enum class Severity { error, warning, info };
  Severity severity = Severity::error;
  std::string path;  // JSON pointer of the offending field
  std::string message;
};

std::string to_string(Diagnostic::Severity s);
bool has_errors(const std::vector<Diagnostic>& diagnostics);

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::free_quotient;
  std::uint64_t seed = 0;
  EnumerationBudget budget;
  int threads = 1;
  std::string output_dir;
  /// The full document after command-line overrides; runners read their
  /// kind-specific fields from it.
  Json document;
};

struct Overrides {
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> budget;
  std::optional<int> threads;
  std::optional<std::string> output_dir;
};

/// Reads a JSON file; ConfigError on I/O or syntax errors.
Json load_json(const std::filesystem::path& path);

/// Applies overrides to the document (seed, budget.max_elements, threads,
/// output_dir), so the echoed config is what actually ran.
Json apply_overrides(Json document, const Overrides& overrides);

/// Schema checks, required fields, predicted element counts against the
/// budget and certificate gaps. Never throws.
std::vector<Diagnostic> validate(const Json& document);

/// ConfigError listing every error diagnostic when validation fails.
ExperimentConfig parse_config(const Json& document);

}  // namespace orbitlab::expcli
