#pragma once
//---------------------------------------------------------------------------
#include "tracar/config.hpp"
#include <filesystem>
#include <string>
#include <vector>
//---------------------------------------------------------------------------
namespace tracar {
//---------------------------------------------------------------------------
enum class Command { profile, plan, breakpoint, recommend, sensitivity };
//---------------------------------------------------------------------------
std::string toString(Command command);
Command commandFromString(const std::string& text);
//---------------------------------------------------------------------------
/// Outcome of one pipeline run: a machine-readable report (JSON text), a
/// human-readable summary, and the artifact files written
struct RunResult {
   std::string reportJson;
   std::string reportText;
   std::vector<std::filesystem::path> artifacts;
};
//---------------------------------------------------------------------------
/// Execute one command against a validated config. Artifacts land in
/// config.outputDir, written atomically; reruns with identical config and
/// seeds produce byte-identical files.
///
///   profile      throughput profile file per technology in the pair
///   plan         cheapest-setup grid CSV per technology
///   breakpoint   classification CSV + breakpoint report
///   recommend    trend fit, technology choice, setup comparison, schedule
///   sensitivity  (price, ratio) curve for the configured sweep
RunResult runCommand(Command command, const RunConfig& config);
//---------------------------------------------------------------------------
} // namespace tracar
