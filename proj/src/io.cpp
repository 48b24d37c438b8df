#include "distgame/io.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

#include "distgame/version.hpp"

namespace distgame::io {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void atomic_write_text(const std::filesystem::path& path, std::string_view content) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw std::runtime_error("cannot open '" + tmp.string() + "' for writing");
    }
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) {
      throw std::runtime_error("short write to '" + tmp.string() + "'");
    }
  }
  std::filesystem::rename(tmp, path);
}

std::filesystem::path manifest_path_for(const std::filesystem::path& primary_output) {
  return primary_output.string() + ".manifest.json";
}

namespace {

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

void write_manifest(const RunManifest& manifest, const std::filesystem::path& path) {
  nlohmann::ordered_json j;
  j["command"] = manifest.command;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [key, value] : manifest.parameters) {
    params[key] = value;
  }
  j["parameters"] = std::move(params);
  j["seed"] = manifest.seed;
  j["tool_version"] = manifest.tool_version.empty() ? kVersion : manifest.tool_version;
  j["outputs"] = manifest.outputs;
  j["generated_at"] = utc_timestamp();
  atomic_write_text(path, j.dump(2) + "\n");
}

std::string reports_to_json(const std::vector<VerificationReport>& reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& report : reports) {
    nlohmann::ordered_json j;
    j["suite"] = report.suite;
    j["trials"] = report.trials;
    j["max_abs_diff"] = report.max_abs_diff;
    j["max_rel_diff"] = report.max_rel_diff;
    j["tolerance"] = report.tolerance;
    j["pass"] = report.pass;
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

void write_reports(const std::vector<VerificationReport>& reports,
                   const std::filesystem::path& path) {
  atomic_write_text(path, reports_to_json(reports));
}

}  // namespace distgame::io
