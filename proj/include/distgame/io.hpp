#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "distgame/verify.hpp"

namespace distgame::io {

/// Shortest text that round-trips the double exactly (17 significant digits,
/// '.' decimal separator regardless of locale).
std::string format_double(double v);

/// Write-then-rename so readers never observe a partial file.
void atomic_write_text(const std::filesystem::path& path, std::string_view content);

/// Provenance record emitted beside every data file, listing all outputs of
/// the command that produced them. Written last.
struct RunManifest {
  std::string command;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::uint64_t seed = 0;
  std::string tool_version;
  std::vector<std::string> outputs;
};

std::filesystem::path manifest_path_for(const std::filesystem::path& primary_output);
void write_manifest(const RunManifest& manifest, const std::filesystem::path& path);

/// Reports serialize as a JSON array of objects with the fixed key order
/// suite, trials, max_abs_diff, max_rel_diff, tolerance, pass.
std::string reports_to_json(const std::vector<VerificationReport>& reports);
void write_reports(const std::vector<VerificationReport>& reports,
                   const std::filesystem::path& path);

}  // namespace distgame::io
