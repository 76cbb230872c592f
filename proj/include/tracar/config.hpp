#pragma once
//---------------------------------------------------------------------------
#include "tracar/advisor.hpp"
#include "tracar/model.hpp"
#include "tracar/planner.hpp"
#include "tracar/simulator.hpp"
#include <array>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>
//---------------------------------------------------------------------------
namespace tracar {
//---------------------------------------------------------------------------
/// min/max/steps description of one demand-grid axis
struct GridAxis {
   double min = 0;
   double max = 0;
   uint32_t steps = 1;

   /// Inclusive linspace; steps = 1 yields {min}
   std::vector<double> points() const;
};
//---------------------------------------------------------------------------
struct TrendSpec {
   std::vector<Observation> observations;
   int horizonYears = 5;
   ExtrapolationMode mode = ExtrapolationMode::throughOrigin;
};
//---------------------------------------------------------------------------
struct SensitivitySpec {
   SweepParameter parameter = SweepParameter::alternativePrice;
   std::vector<double> values;
};
//---------------------------------------------------------------------------
/// Everything one pipeline run needs, resolvable entirely from defaults.
/// Precedence: --set overrides > config file > TRACAR_OUT (output dir
/// only) > built-in defaults.
struct RunConfig {
   CostBook book;
   ServerModel server;
   WorkloadMix workload;
   SimulationParams sim;
   std::vector<double> memoryFractions;
   /// The two technologies a breakpoint run compares, by catalog name
   std::array<std::string, 2> pair;
   GridAxis capacityAxis;
   GridAxis throughputAxis;
   double extraCostE = 0;
   /// Optional pre-recorded profile file per technology name; technologies
   /// without an entry are profiled by simulation
   std::map<std::string, std::filesystem::path> profilePaths;
   TrendSpec trend;
   std::optional<SensitivitySpec> sensitivity;
   std::filesystem::path outputDir;
   unsigned jobs = 0;

   DemandGrid demandGrid() const;
};
//---------------------------------------------------------------------------
/// Built-in defaults (stock price book, 50/50 workload, 10x10 grid)
RunConfig defaultRunConfig();
//---------------------------------------------------------------------------
/// Parse a config document, layering it over the defaults. Throws
/// Error::config on malformed JSON, unknown keys, or invalid values.
/// `overrides` are dotted-path assignments like
/// "book.dram_usd_per_gb=6.25"; they win over the document.
RunConfig parseRunConfig(const std::string& json, const std::vector<std::string>& overrides = {});
RunConfig loadRunConfig(const std::filesystem::path& path, const std::vector<std::string>& overrides = {});
//---------------------------------------------------------------------------
} // namespace tracar
