#include "tracar/pipeline.hpp"
#include "tracar/errors.hpp"
#include "tracar/format.hpp"
#include "tracar/fsutil.hpp"
#include "tracar/profile_io.hpp"
//---------------------------------------------------------------------------
#include <cstdio>
#include <json.hpp>
//---------------------------------------------------------------------------
namespace tracar {
//---------------------------------------------------------------------------
using nlohmann::json;
//---------------------------------------------------------------------------
std::string toString(Command command)
{
   switch (command) {
      case Command::profile: return "profile";
      case Command::plan: return "plan";
      case Command::breakpoint: return "breakpoint";
      case Command::recommend: return "recommend";
      case Command::sensitivity: return "sensitivity";
   }
   return "unknown";
}
//---------------------------------------------------------------------------
Command commandFromString(const std::string& text)
{
   if (text == "profile")
      return Command::profile;
   if (text == "plan")
      return Command::plan;
   if (text == "breakpoint")
      return Command::breakpoint;
   if (text == "recommend")
      return Command::recommend;
   if (text == "sensitivity")
      return Command::sensitivity;
   throw Error::invalidArgument("unknown command '" + text +
                                "' (want profile, plan, breakpoint, recommend, or sensitivity)");
}
//---------------------------------------------------------------------------
namespace {
//---------------------------------------------------------------------------
std::string fmtMoneyCsv(Money money)
{
   char buffer[40];
   std::snprintf(buffer, sizeof(buffer), "%lld.%02lld",
                 static_cast<long long>(money.cents / 100), static_cast<long long>(money.cents % 100));
   return buffer;
}
//---------------------------------------------------------------------------
std::string fmtRatio(double value)
{
   char buffer[40];
   std::snprintf(buffer, sizeof(buffer), "%.3f", value);
   return buffer;
}
//---------------------------------------------------------------------------
std::string degenerateName(BreakpointDegenerate degenerate)
{
   switch (degenerate) {
      case BreakpointDegenerate::none: return "none";
      case BreakpointDegenerate::allTech1: return "all_tech1";
      case BreakpointDegenerate::allTech2: return "all_tech2";
   }
   return "unknown";
}
//---------------------------------------------------------------------------
json setupToJson(const SetupCandidate& setup)
{
   return json{
       {"technology", setup.technology},
       {"n_nodes", setup.nNodes},
       {"dram_gb_per_node", setup.dramGbPerNode},
       {"storage_gb_per_node", setup.storageGbPerNode},
       {"memory_fraction", setup.memoryFraction},
       {"achieved_tps", setup.achievedTps},
       {"cost",
        {{"dram_usd", setup.cost.dramUsd.usd()},
         {"storage_usd", setup.cost.storageUsd.usd()},
         {"processor_usd", setup.cost.processorUsd.usd()},
         {"misc_usd", setup.cost.miscUsd.usd()},
         {"total_usd", setup.cost.totalUsd.usd()}}},
   };
}
//---------------------------------------------------------------------------
json breakpointToJson(const BreakpointLine& line)
{
   json crossings = json::array();
   for (const auto& point : line.crossings)
      crossings.push_back({{"capacity_gb", point.capacityGb}, {"crossing_tps", point.crossingTps}});
   return json{
       {"premium", line.premiumTechnology},
       {"alternative", line.alternativeTechnology},
       {"extra_cost_e", line.extraCostE},
       {"degenerate", degenerateName(line.degenerate)},
       {"ratio_khz_per_tb", line.ratioKhzPerTb},
       {"ratio_fit", "through_origin_least_squares"},
       {"crossings", crossings},
       {"non_monotone_capacities", line.nonMonotoneCapacities},
   };
}
//---------------------------------------------------------------------------
std::string crossingsCsv(const BreakpointLine& line)
{
   std::string out = "capacity_gb,crossing_tps\n";
   for (const auto& point : line.crossings) {
      out += formatDouble(point.capacityGb);
      out += ',';
      out += formatDouble(point.crossingTps);
      out += '\n';
   }
   return out;
}
//---------------------------------------------------------------------------
/// The two technologies of the run, premium (higher USD/GB) first
struct ResolvedPair {
   TechProfile premium;
   TechProfile alternative;
};
//---------------------------------------------------------------------------
TechProfile resolveProfile(const RunConfig& config, const std::string& name)
{
   TechProfile result;
   result.technology = config.book.technology(name);
   auto it = config.profilePaths.find(name);
   if (it != config.profilePaths.end()) {
      result.profile = loadProfile(it->second);
      if (result.profile.technology != name)
         throw Error::config("profile file '" + it->second.string() + "' describes technology '" +
                             result.profile.technology + "', expected '" + name + "'");
   } else {
      result.profile = getThroughputMem(config.workload, result.technology, config.memoryFractions, config.sim);
   }
   return result;
}
//---------------------------------------------------------------------------
ResolvedPair resolvePair(const RunConfig& config)
{
   TechProfile first = resolveProfile(config, config.pair[0]);
   TechProfile second = resolveProfile(config, config.pair[1]);
   bool firstIsPremium = first.technology.usdPerGb > second.technology.usdPerGb ||
                         (first.technology.usdPerGb == second.technology.usdPerGb &&
                          first.technology.name < second.technology.name);
   if (firstIsPremium)
      return {std::move(first), std::move(second)};
   return {std::move(second), std::move(first)};
}
//---------------------------------------------------------------------------
BreakpointInputs makeBreakpointInputs(const RunConfig& config, ResolvedPair pair)
{
   BreakpointInputs inputs;
   inputs.grid = config.demandGrid();
   inputs.premium = std::move(pair.premium);
   inputs.alternative = std::move(pair.alternative);
   inputs.server = config.server;
   inputs.book = config.book;
   inputs.extraCostE = config.extraCostE;
   inputs.jobs = config.jobs;
   return inputs;
}
//---------------------------------------------------------------------------
class ArtifactWriter {
   public:
   explicit ArtifactWriter(const std::filesystem::path& directory) : directory_(directory)
   {
      std::error_code ec;
      std::filesystem::create_directories(directory_, ec);
      if (ec)
         throw Error::io("cannot create output directory '" + directory_.string() + "': " + ec.message());
   }

   std::filesystem::path write(const std::string& filename, const std::string& contents)
   {
      auto path = directory_ / filename;
      atomicWriteFile(path, contents);
      written_.push_back(path);
      return path;
   }

   std::filesystem::path writeJson(const std::string& filename, const json& doc)
   {
      return write(filename, doc.dump(2) + "\n");
   }

   const std::vector<std::filesystem::path>& written() const { return written_; }

   private:
   std::filesystem::path directory_;
   std::vector<std::filesystem::path> written_;
};
//---------------------------------------------------------------------------
std::string setupGridCsv(const SetupGrid& grid)
{
   std::string out = "capacity_gb,throughput_tps,feasible,n_nodes,dram_gb_per_node,storage_gb_per_node,"
                     "memory_fraction,achieved_tps,dram_usd,storage_usd,processor_usd,misc_usd,total_usd\n";
   size_t nThroughputs = grid.demand.throughputsTps.size();
   for (size_t ci = 0; ci < grid.demand.capacitiesGb.size(); ++ci) {
      for (size_t ti = 0; ti < nThroughputs; ++ti) {
         out += formatDouble(grid.demand.capacitiesGb[ci]);
         out += ',';
         out += formatDouble(grid.demand.throughputsTps[ti]);
         const auto& cell = grid.cell(ci, ti);
         if (!cell) {
            out += ",no,,,,,,,,,,\n";
            continue;
         }
         out += ",yes,";
         out += std::to_string(cell->nNodes);
         out += ',';
         out += formatDouble(cell->dramGbPerNode);
         out += ',';
         out += formatDouble(cell->storageGbPerNode);
         out += ',';
         out += formatDouble(cell->memoryFraction);
         out += ',';
         out += formatDouble(cell->achievedTps);
         out += ',';
         out += fmtMoneyCsv(cell->cost.dramUsd);
         out += ',';
         out += fmtMoneyCsv(cell->cost.storageUsd);
         out += ',';
         out += fmtMoneyCsv(cell->cost.processorUsd);
         out += ',';
         out += fmtMoneyCsv(cell->cost.miscUsd);
         out += ',';
         out += fmtMoneyCsv(cell->cost.totalUsd);
         out += '\n';
      }
   }
   return out;
}
//---------------------------------------------------------------------------
std::string classificationCsv(const SetupGrid& premiumGrid, const SetupGrid& alternativeGrid, double extraCostE)
{
   std::string out = "capacity_gb,throughput_tps,total_usd_" + premiumGrid.technology + ",total_usd_" +
                     alternativeGrid.technology + ",preferred\n";
   size_t nThroughputs = premiumGrid.demand.throughputsTps.size();
   for (size_t ci = 0; ci < premiumGrid.demand.capacitiesGb.size(); ++ci) {
      for (size_t ti = 0; ti < nThroughputs; ++ti) {
         const auto& premium = premiumGrid.cell(ci, ti);
         const auto& alternative = alternativeGrid.cell(ci, ti);
         out += formatDouble(premiumGrid.demand.capacitiesGb[ci]);
         out += ',';
         out += formatDouble(premiumGrid.demand.throughputsTps[ti]);
         out += ',';
         out += premium ? fmtMoneyCsv(premium->cost.totalUsd) : std::string();
         out += ',';
         out += alternative ? fmtMoneyCsv(alternative->cost.totalUsd) : std::string();
         out += ',';
         if (!premium && !alternative)
            out += "infeasible";
         else if (!alternative)
            out += premiumGrid.technology;
         else if (!premium)
            out += alternativeGrid.technology;
         else {
            double cost1 = static_cast<double>(premium->cost.totalUsd.cents);
            double cost2 = static_cast<double>(alternative->cost.totalUsd.cents);
            out += cost1 <= (1.0 + extraCostE) * cost2 ? premiumGrid.technology : alternativeGrid.technology;
         }
         out += '\n';
      }
   }
   return out;
}
//---------------------------------------------------------------------------
std::string breakpointText(const BreakpointLine& line)
{
   char buffer[256];
   std::string out = "TRaCaR breakpoint\n";
   std::snprintf(buffer, sizeof(buffer), "premium:     %s vs %s\n", line.premiumTechnology.c_str(),
                 line.alternativeTechnology.c_str());
   out += buffer;
   std::snprintf(buffer, sizeof(buffer), "extra cost:  %.1f%%\n", line.extraCostE * 100.0);
   out += buffer;
   if (line.degenerate != BreakpointDegenerate::none) {
      out += "degenerate:  " + degenerateName(line.degenerate) + " (";
      out += line.degenerate == BreakpointDegenerate::allTech1 ? line.premiumTechnology
                                                               : line.alternativeTechnology;
      out += " is cheaper over the whole grid)\n";
      return out;
   }
   std::snprintf(buffer, sizeof(buffer), "ratio:       %s KHz/TB over %zu crossings\n",
                 fmtRatio(line.ratioKhzPerTb).c_str(), line.crossings.size());
   out += buffer;
   if (!line.nonMonotoneCapacities.empty()) {
      std::snprintf(buffer, sizeof(buffer),
                    "warning:     %zu capacity column(s) flipped preference more than once; lowest crossing used\n",
                    line.nonMonotoneCapacities.size());
      out += buffer;
   }
   return out;
}
//---------------------------------------------------------------------------
void appendComparisonTable(std::string& out, const SetupCandidate& left, const SetupCandidate& right)
{
   char buffer[256];
   auto row = [&](const char* item, Money a, Money b) {
      std::snprintf(buffer, sizeof(buffer), "%-20s %-19s %s\n", item, a.toString().c_str(), b.toString().c_str());
      out += buffer;
   };
   std::string leftHead = left.technology + " (" + std::to_string(left.nNodes) + " nodes)";
   std::string rightHead = right.technology + " (" + std::to_string(right.nNodes) + " nodes)";
   std::snprintf(buffer, sizeof(buffer), "%-20s %-19s %s\n", "item", leftHead.c_str(), rightHead.c_str());
   out += buffer;
   row("DRAM", left.cost.dramUsd, right.cost.dramUsd);
   row("secondary storage", left.cost.storageUsd, right.cost.storageUsd);
   row("processor", left.cost.processorUsd, right.cost.processorUsd);
   row("miscellaneous", left.cost.miscUsd, right.cost.miscUsd);
   row("TOTAL", left.cost.totalUsd, right.cost.totalUsd);
}
//---------------------------------------------------------------------------
std::string comparisonCsv(const SetupCandidate& chosen, const SetupCandidate& alternative)
{
   std::string out = "item," + chosen.technology + "," + alternative.technology + "\n";
   auto moneyRow = [&](const char* item, Money a, Money b) {
      out += item;
      out += ',';
      out += fmtMoneyCsv(a);
      out += ',';
      out += fmtMoneyCsv(b);
      out += '\n';
   };
   out += "n_nodes," + std::to_string(chosen.nNodes) + "," + std::to_string(alternative.nNodes) + "\n";
   out += "dram_gb_per_node," + formatDouble(chosen.dramGbPerNode) + "," + formatDouble(alternative.dramGbPerNode) + "\n";
   out += "storage_gb_per_node," + formatDouble(chosen.storageGbPerNode) + "," + formatDouble(alternative.storageGbPerNode) + "\n";
   out += "memory_fraction," + formatDouble(chosen.memoryFraction) + "," + formatDouble(alternative.memoryFraction) + "\n";
   moneyRow("dram_usd", chosen.cost.dramUsd, alternative.cost.dramUsd);
   moneyRow("storage_usd", chosen.cost.storageUsd, alternative.cost.storageUsd);
   moneyRow("processor_usd", chosen.cost.processorUsd, alternative.cost.processorUsd);
   moneyRow("misc_usd", chosen.cost.miscUsd, alternative.cost.miscUsd);
   moneyRow("total_usd", chosen.cost.totalUsd, alternative.cost.totalUsd);
   return out;
}
//---------------------------------------------------------------------------
std::string scheduleCsv(const std::vector<ScheduleRow>& schedule)
{
   std::string out = "year,capacity_gb,throughput_tps,n_nodes,new_nodes,dram_gb_per_node,"
                     "storage_gb_per_node,memory_fraction,total_usd\n";
   for (const auto& row : schedule) {
      out += std::to_string(row.year);
      out += ',';
      out += formatDouble(row.demand.capacityGb);
      out += ',';
      out += formatDouble(row.demand.throughputTps);
      out += ',';
      out += std::to_string(row.setup.nNodes);
      out += ',';
      out += std::to_string(row.newNodes);
      out += ',';
      out += formatDouble(row.setup.dramGbPerNode);
      out += ',';
      out += formatDouble(row.setup.storageGbPerNode);
      out += ',';
      out += formatDouble(row.setup.memoryFraction);
      out += ',';
      out += fmtMoneyCsv(row.setup.cost.totalUsd);
      out += '\n';
   }
   return out;
}
//---------------------------------------------------------------------------
RunResult runProfile(const RunConfig& config, ArtifactWriter& writer)
{
   RunResult result;
   json report{{"command", "profile"}, {"profiles", json::array()}};
   std::string text = "throughput profiles\n";
   for (const auto& name : config.pair) {
      TechProfile tech = resolveProfile(config, name);
      writer.write(name + ".profile", serializeProfile(tech.profile));
      json points = json::array();
      for (const auto& point : tech.profile.points)
         points.push_back({{"memory_fraction", point.memoryFraction},
                           {"faults_per_txn", point.faultsPerTxn},
                           {"tps_per_node", point.tpsPerNode}});
      report["profiles"].push_back({{"technology", name},
                                    {"provenance", toString(tech.profile.provenance)},
                                    {"seed", tech.profile.seed},
                                    {"points", points}});
      char buffer[128];
      std::snprintf(buffer, sizeof(buffer), "  %-8s %zu points, provenance %s\n", name.c_str(),
                    tech.profile.points.size(), toString(tech.profile.provenance).c_str());
      text += buffer;
   }
   result.reportJson = report.dump(2) + "\n";
   result.reportText = text;
   return result;
}
//---------------------------------------------------------------------------
RunResult runPlan(const RunConfig& config, ArtifactWriter& writer)
{
   ResolvedPair pair = resolvePair(config);
   DemandGrid grid = config.demandGrid();

   RunResult result;
   json report{{"command", "plan"}, {"grids", json::array()}};
   std::string text = "cheapest-setup grids\n";
   for (const TechProfile* tech : {&pair.premium, &pair.alternative}) {
      SetupGrid setups = planGrid(grid, tech->technology, tech->profile, config.server, config.book, config.jobs);
      writer.write("setups_" + tech->technology.name + ".csv", setupGridCsv(setups));
      size_t feasible = 0;
      for (const auto& cell : setups.cells)
         feasible += cell.has_value() ? 1 : 0;
      report["grids"].push_back({{"technology", tech->technology.name},
                                 {"cells", setups.cells.size()},
                                 {"feasible_cells", feasible}});
      char buffer[128];
      std::snprintf(buffer, sizeof(buffer), "  %-8s %zu of %zu cells feasible\n",
                    tech->technology.name.c_str(), feasible, setups.cells.size());
      text += buffer;
   }
   result.reportJson = report.dump(2) + "\n";
   result.reportText = text;
   return result;
}
//---------------------------------------------------------------------------
RunResult runBreakpoint(const RunConfig& config, ArtifactWriter& writer)
{
   BreakpointInputs inputs = makeBreakpointInputs(config, resolvePair(config));
   SetupGrid premiumGrid = planGrid(inputs.grid, inputs.premium.technology, inputs.premium.profile,
                                    inputs.server, inputs.book, inputs.jobs);
   SetupGrid alternativeGrid = planGrid(inputs.grid, inputs.alternative.technology, inputs.alternative.profile,
                                        inputs.server, inputs.book, inputs.jobs);
   BreakpointLine line = computeBreakpoint(premiumGrid, alternativeGrid, inputs.extraCostE);

   writer.write("classification.csv", classificationCsv(premiumGrid, alternativeGrid, inputs.extraCostE));
   writer.write("crossings.csv", crossingsCsv(line));
   writer.writeJson("breakpoint.json", breakpointToJson(line));

   RunResult result;
   json report = breakpointToJson(line);
   report["command"] = "breakpoint";
   result.reportJson = report.dump(2) + "\n";
   result.reportText = breakpointText(line);
   return result;
}
//---------------------------------------------------------------------------
RunResult runRecommend(const RunConfig& config, ArtifactWriter& writer)
{
   if (config.trend.observations.size() < 2)
      throw Error::config("recommend needs at least two trend.observations");

   Trend trend = fitTrend(config.trend.observations);
   BreakpointInputs inputs = makeBreakpointInputs(config, resolvePair(config));
   BreakpointLine line = computeBreakpointFor(inputs);
   DemandPoint horizon = extrapolate(trend, config.trend.horizonYears, config.trend.mode);
   Recommendation rec = recommend(trend, line, horizon, inputs.premium, inputs.alternative,
                                  config.server, config.book);

   std::vector<ScheduleRow> schedule;
   if (config.trend.horizonYears >= 1) {
      const TechProfile& chosen =
          rec.chosenTechnology == inputs.premium.technology.name ? inputs.premium : inputs.alternative;
      schedule = serverSchedule(trend, config.trend.horizonYears, chosen, config.server, config.book);
   }

   json report{
       {"command", "recommend"},
       {"trend",
        {{"ratio_khz_per_tb", trend.ratioKhzPerTb},
         {"capacity_growth_gb_per_year", trend.capacityGrowthGbPerYear},
         {"throughput_growth_tps_per_year", trend.throughputGrowthTpsPerYear},
         {"base",
          {{"t_years", trend.base.tYears},
           {"capacity_gb", trend.base.capacityGb},
           {"throughput_tps", trend.base.throughputTps}}}}},
       {"breakpoint", breakpointToJson(line)},
       {"chosen_technology", rec.chosenTechnology},
       {"horizon",
        {{"years", config.trend.horizonYears},
         {"mode", toString(config.trend.mode)},
         {"capacity_gb", horizon.capacityGb},
         {"throughput_tps", horizon.throughputTps}}},
   };
   // Two comparisons against the breakpoint: the growth-slope ratio and the
   // horizon point's own rate-per-capacity ratio. They coincide in
   // through-origin mode and differ in affine mode.
   double horizonRatio = horizon.throughputTps / horizon.capacityGb;
   report["horizon_point_ratio_khz_per_tb"] = horizonRatio;
   report["margin_khz_per_tb"] = rec.margin ? json(*rec.margin) : json(nullptr);
   report["horizon_point_margin_khz_per_tb"] =
       rec.margin ? json(horizonRatio - line.ratioKhzPerTb) : json(nullptr);
   report["horizon_setup"] = rec.horizonSetup ? setupToJson(*rec.horizonSetup) : json(nullptr);
   report["alternative_setup"] = rec.alternativeSetup ? setupToJson(*rec.alternativeSetup) : json(nullptr);
   report["savings_fraction"] = rec.savingsFraction ? json(*rec.savingsFraction) : json(nullptr);
   if (!schedule.empty()) {
      json rows = json::array();
      for (const auto& row : schedule)
         rows.push_back({{"year", row.year},
                         {"capacity_gb", row.demand.capacityGb},
                         {"throughput_tps", row.demand.throughputTps},
                         {"n_nodes", row.setup.nNodes},
                         {"new_nodes", row.newNodes},
                         {"total_usd", row.setup.cost.totalUsd.usd()}});
      report["schedule"] = rows;
   }

   char buffer[256];
   std::string text = "TRaCaR recommendation\n";
   std::snprintf(buffer, sizeof(buffer), "trend ratio:       %s KHz/TB (+%.0f GB/yr, +%.0f tps/yr)\n",
                 fmtRatio(trend.ratioKhzPerTb).c_str(), trend.capacityGrowthGbPerYear,
                 trend.throughputGrowthTpsPerYear);
   text += buffer;
   if (line.degenerate == BreakpointDegenerate::none) {
      std::snprintf(buffer, sizeof(buffer), "breakpoint ratio:  %s KHz/TB (premium %s vs %s, E = %.1f%%)\n",
                    fmtRatio(line.ratioKhzPerTb).c_str(), line.premiumTechnology.c_str(),
                    line.alternativeTechnology.c_str(), line.extraCostE * 100.0);
      text += buffer;
      std::snprintf(buffer, sizeof(buffer), "margin:            %+.3f KHz/TB (trend slope), %+.3f KHz/TB (horizon point)\n",
                    *rec.margin, horizon.throughputTps / horizon.capacityGb - line.ratioKhzPerTb);
      text += buffer;
   } else {
      text += "breakpoint:        degenerate, " + degenerateName(line.degenerate) + "\n";
   }
   text += "chosen technology: " + rec.chosenTechnology + "\n";
   std::snprintf(buffer, sizeof(buffer), "horizon demand:    %.0f GB at %.0f tps (%d years, %s)\n",
                 horizon.capacityGb, horizon.throughputTps, config.trend.horizonYears,
                 toString(config.trend.mode).c_str());
   text += buffer;
   if (rec.horizonSetup && rec.alternativeSetup) {
      text += "\nsetup comparison at the horizon demand\n";
      appendComparisonTable(text, *rec.horizonSetup, *rec.alternativeSetup);
      std::snprintf(buffer, sizeof(buffer), "\nsavings vs alternative: %.2f%%\n", *rec.savingsFraction * 100.0);
      text += buffer;
   } else if (rec.horizonSetup) {
      text += "\nalternative technology cannot meet the horizon demand\n";
      appendComparisonTable(text, *rec.horizonSetup, *rec.horizonSetup);
   } else if (rec.alternativeSetup) {
      text += "\nchosen technology cannot meet the horizon demand; alternative shown\n";
      appendComparisonTable(text, *rec.alternativeSetup, *rec.alternativeSetup);
   }

   writer.write("recommendation.txt", text);
   writer.writeJson("recommendation.json", report);
   if (rec.horizonSetup && rec.alternativeSetup)
      writer.write("comparison.csv", comparisonCsv(*rec.horizonSetup, *rec.alternativeSetup));
   if (!schedule.empty())
      writer.write("schedule.csv", scheduleCsv(schedule));

   RunResult result;
   result.reportJson = report.dump(2) + "\n";
   result.reportText = text;
   return result;
}
//---------------------------------------------------------------------------
RunResult runSensitivity(const RunConfig& config, ArtifactWriter& writer)
{
   if (!config.sensitivity)
      throw Error::config("sensitivity command requires a sensitivity section in the config");

   BreakpointInputs inputs = makeBreakpointInputs(config, resolvePair(config));
   auto sweep = sensitivitySweep(config.sensitivity->parameter, config.sensitivity->values, inputs);

   std::string parameterName = toString(config.sensitivity->parameter);
   std::string csv = "parameter,value,ratio_khz_per_tb,degenerate\n";
   json points = json::array();
   for (const auto& point : sweep) {
      csv += parameterName;
      csv += ',';
      csv += formatDouble(point.value);
      csv += ',';
      csv += formatDouble(point.line.ratioKhzPerTb);
      csv += ',';
      csv += degenerateName(point.line.degenerate);
      csv += '\n';
      points.push_back({{"value", point.value},
                        {"ratio_khz_per_tb", point.line.ratioKhzPerTb},
                        {"degenerate", degenerateName(point.line.degenerate)}});
   }
   writer.write("sensitivity.csv", csv);
   json report{{"command", "sensitivity"},
               {"parameter", parameterName},
               {"premium", inputs.premium.technology.name},
               {"alternative", inputs.alternative.technology.name},
               {"points", points}};
   writer.writeJson("sensitivity.json", report);

   RunResult result;
   result.reportJson = report.dump(2) + "\n";
   std::string text = "sensitivity sweep over " + parameterName + "\n";
   for (const auto& point : sweep) {
      char buffer[96];
      std::snprintf(buffer, sizeof(buffer), "  %-10.4f -> %s KHz/TB%s\n", point.value,
                    fmtRatio(point.line.ratioKhzPerTb).c_str(),
                    point.line.degenerate == BreakpointDegenerate::none ? "" : " (degenerate)");
      text += buffer;
   }
   result.reportText = text;
   return result;
}
//---------------------------------------------------------------------------
} // namespace
//---------------------------------------------------------------------------
RunResult runCommand(Command command, const RunConfig& config)
{
   ArtifactWriter writer(config.outputDir);
   RunResult result;
   switch (command) {
      case Command::profile: result = runProfile(config, writer); break;
      case Command::plan: result = runPlan(config, writer); break;
      case Command::breakpoint: result = runBreakpoint(config, writer); break;
      case Command::recommend: result = runRecommend(config, writer); break;
      case Command::sensitivity: result = runSensitivity(config, writer); break;
   }
   result.artifacts = writer.written();
   for (const auto& path : result.artifacts)
      result.reportText += "wrote " + path.string() + "\n";
   return result;
}
//---------------------------------------------------------------------------
} // namespace tracar
