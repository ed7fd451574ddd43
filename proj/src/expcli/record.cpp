#include "orbitlab/expcli/record.hpp"

#include <fstream>
#include <sstream>

#include "orbitlab/errors.hpp"
#include "orbitlab/numeric.hpp"

namespace orbitlab::expcli {

NamedSeries NamedSeries::from(std::string name, const ergodic::ErrorSeries& s) {
  return {std::move(name), ergodic::to_string(s.norm), s.t, s.value, s.metadata};
}

std::uint64_t NamedSeries::metadata_hash() const {
  // Same text as ErrorSeries::metadata_hash: the norm, then sorted key=value lines.
  std::string text = norm + '\n';
  for (const auto& [k, v] : metadata) text += k + '=' + v + '\n';
  return fnv1a(text);
}

Json ResultRecord::canonical_payload() const {
  Json p = payload;
  Json s = Json::object();
  for (const auto& ser : series) {
    s[ser.name] = {{"norm", ser.norm},
                   {"t", ser.t},
                   {"value", ser.value},
                   {"metadata", ser.metadata},
                   {"metadata_hash", hex64(ser.metadata_hash())}};
  }
  p["series"] = std::move(s);
  p["status"] = status;
  return p;
}

std::string ResultRecord::payload_hash() const { return hex64(fnv1a(canonical_payload().dump())); }

Json ResultRecord::to_json() const {
  return {{"format", "orbitlab-record"},
          {"schema_version", kSchemaVersion},
          {"code_version", code_version},
          {"config", config},
          {"status", status},
          {"valid", valid()},
          {"message", message},
          {"payload", canonical_payload()},
          {"payload_hash", payload_hash()},
          {"wall_clock_seconds", wall_clock_seconds}};
}

void write_record(const ResultRecord& record, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir / "series");
  {
    std::ofstream out(dir / "record.json");
    if (!out) throw ConfigError("cannot write " + (dir / "record.json").string());
    out << record.to_json().dump(2) << '\n';
  }
  for (const auto& s : record.series) {
    std::ofstream out(dir / "series" / (s.name + ".csv"));
    if (!out) throw ConfigError("cannot write series " + s.name);
    const std::string hash = hex64(s.metadata_hash());
    out << "t,value,norm,metadata_hash\n";
    for (std::size_t i = 0; i < s.t.size(); ++i)
      out << format_double(s.t[i]) << ',' << format_double(s.value[i]) << ',' << s.norm << ',' << hash << '\n';
  }
}

namespace {

void print_scalars(std::ostream& out, const Json& j, const std::string& prefix, int depth) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
    if (it->is_object() && depth < 3)
      print_scalars(out, *it, key, depth + 1);
    else if (it->is_primitive())
      out << "  " << key << " = " << it->dump() << '\n';
  }
}

}  // namespace

std::string report(const std::filesystem::path& dir) {
  const auto path = std::filesystem::is_directory(dir) ? dir / "record.json" : dir;
  std::ifstream in(path);
  if (!in) throw ConfigError("no record at " + path.string());
  Json rec;
  try {
    rec = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
  std::ostringstream out;
  const Json& payload = rec.at("payload");
  const std::string recomputed = hex64(fnv1a(payload.dump()));
  out << "record     " << path.string() << '\n'
      << "kind       " << rec.at("config").value("kind", "?") << '\n'
      << "seed       " << rec.at("config").value("seed", Json()).dump() << '\n'
      << "status     " << rec.value("status", "?") << (rec.value("valid", false) ? "" : " (invalid)") << '\n'
      << "hash       " << rec.value("payload_hash", "?")
      << (recomputed == rec.value("payload_hash", "") ? " (verified)" : " (MISMATCH: " + recomputed + ")") << '\n'
      << "version    " << rec.value("code_version", "?") << '\n'
      << "wall clock " << format_double(rec.value("wall_clock_seconds", 0.0)) << " s\n";
  if (!rec.value("message", "").empty()) out << "message    " << rec.value("message", "") << '\n';
  if (payload.contains("summary")) {
    out << "summary\n";
    print_scalars(out, payload.at("summary"), "", 0);
  }
  if (payload.contains("series") && !payload.at("series").empty()) {
    out << "series\n";
    for (auto it = payload.at("series").begin(); it != payload.at("series").end(); ++it) {
      const auto& t = it->at("t");
      const auto& v = it->at("value");
      out << "  " << it.key() << " [" << it->value("norm", "") << "] " << t.size() << " points";
      if (!t.empty())
        out << ", first (" << t.front().dump() << ", " << v.front().dump() << "), last (" << t.back().dump() << ", "
            << v.back().dump() << ")";
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace orbitlab::expcli
