#include "tracar/config.hpp"
#include "tracar/errors.hpp"
#include "tracar/fsutil.hpp"
//---------------------------------------------------------------------------
#include <algorithm>
#include <cstdlib>
#include <json.hpp>
//---------------------------------------------------------------------------
namespace tracar {
//---------------------------------------------------------------------------
using nlohmann::json;
//---------------------------------------------------------------------------
std::vector<double> GridAxis::points() const
{
   if (steps < 1)
      throw Error::config("grid axis needs at least one step");
   if (!(min > 0.0) || max < min)
      throw Error::config("grid axis requires 0 < min <= max");
   std::vector<double> out;
   out.reserve(steps);
   if (steps == 1) {
      out.push_back(min);
      return out;
   }
   double stride = (max - min) / static_cast<double>(steps - 1);
   for (uint32_t i = 0; i < steps; ++i)
      out.push_back(min + stride * static_cast<double>(i));
   return out;
}
//---------------------------------------------------------------------------
DemandGrid RunConfig::demandGrid() const
{
   DemandGrid grid{capacityAxis.points(), throughputAxis.points()};
   validateDemandGrid(grid);
   return grid;
}
//---------------------------------------------------------------------------
namespace {
//---------------------------------------------------------------------------
json defaultConfigJson()
{
   return json{
       {"book",
        {{"dram_usd_per_gb", 5.50},
         {"processor_usd_per_node", 400.0},
         {"misc_usd_per_node", 1000.0},
         {"technologies",
          json::array({{{"name", "3dxp"},
                        {"usd_per_gb", 1.20},
                        {"read_latency_us", 10.0},
                        {"write_latency_us", 10.0},
                        {"queue_depth", 4},
                        {"max_gb_per_node", 32768.0}},
                       {{"name", "flash"},
                        {"usd_per_gb", 0.20},
                        {"read_latency_us", 80.0},
                        {"write_latency_us", 60.0},
                        {"queue_depth", 16},
                        {"max_gb_per_node", 32768.0}}})}}},
       {"server", {{"max_dram_gb_per_node", 1024.0}, {"max_nodes", 1024}}},
       {"workload",
        {{"read_fraction", 0.5},
         {"hot_key_fraction", 0.2},
         {"hot_mass_fraction", 0.8},
         {"n_transactions", 1000000},
         {"dataset_gb", 1.0},
         {"key_size_bytes", 16},
         {"value_size_bytes", 100},
         {"page_size_bytes", 4096}}},
       {"simulation",
        {{"t_cpu_us", 10.0},
         {"seed", 42},
         {"node_pages", 1},
         {"memory_fractions", json::array({0.005, 0.01, 0.02, 0.05, 0.1, 0.2, 0.5, 1.0})}}},
       {"pair", json::array({"3dxp", "flash"})},
       {"grid",
        {{"capacity_gb", {{"min", 10000.0}, {"max", 100000.0}, {"steps", 10}}},
         {"throughput_tps", {{"min", 20000.0}, {"max", 200000.0}, {"steps", 10}}}}},
       {"extra_cost_e", 0.0},
       {"profiles", json::object()},
       {"trend",
        {{"observations", json::array()}, {"horizon_years", 5}, {"mode", "through_origin"}}},
       {"sensitivity", nullptr},
       {"output", {{"dir", nullptr}}},
       {"jobs", 0},
   };
}
//---------------------------------------------------------------------------
/// Keys allowed inside objects whose shape the defaults do not show
const std::map<std::string, std::vector<std::string>> extraSchemas = {
    {"technologies[]", {"name", "usd_per_gb", "read_latency_us", "write_latency_us", "queue_depth", "max_gb_per_node"}},
    {"observations[]", {"t_years", "capacity_gb", "throughput_tps"}},
    {"sensitivity", {"parameter", "values"}},
};
//---------------------------------------------------------------------------
void checkKnownKeys(const json& doc, const json& schema, const std::string& path)
{
   if (!doc.is_object())
      return;
   for (auto it = doc.begin(); it != doc.end(); ++it) {
      std::string childPath = path.empty() ? it.key() : path + "." + it.key();
      if (!schema.is_object() || !schema.contains(it.key()))
         throw Error::config("unknown config key '" + childPath + "'");
      const json& childSchema = schema.at(it.key());
      if (it.value().is_object()) {
         // "profiles" keys are technology names; a null schema slot (e.g.
         // "sensitivity") is validated field-by-field during conversion
         if (it.key() == "profiles" || childSchema.is_null())
            continue;
         checkKnownKeys(it.value(), childSchema, childPath);
      } else if (it.value().is_array() && childSchema.is_array() && !childSchema.empty() &&
                 childSchema.front().is_object()) {
         for (const auto& element : it.value())
            checkKnownKeys(element, childSchema.front(), childPath + "[]");
      }
   }
}
//---------------------------------------------------------------------------
void checkListedKeys(const json& doc, const std::string& schemaName, const std::string& path)
{
   if (!doc.is_object())
      throw Error::config("config key '" + path + "' must be an object");
   const auto& allowed = extraSchemas.at(schemaName);
   for (auto it = doc.begin(); it != doc.end(); ++it)
      if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end())
         throw Error::config("unknown config key '" + path + "." + it.key() + "'");
}
//---------------------------------------------------------------------------
double getNumber(const json& doc, const std::string& path)
{
   if (!doc.is_number())
      throw Error::config("config key '" + path + "' must be a number");
   return doc.get<double>();
}
//---------------------------------------------------------------------------
uint64_t getUint(const json& doc, const std::string& path)
{
   if (doc.is_number_unsigned())
      return doc.get<uint64_t>();
   if (doc.is_number_integer() && doc.get<int64_t>() >= 0)
      return static_cast<uint64_t>(doc.get<int64_t>());
   throw Error::config("config key '" + path + "' must be a non-negative integer");
}
//---------------------------------------------------------------------------
int64_t getInt(const json& doc, const std::string& path)
{
   if (!doc.is_number_integer())
      throw Error::config("config key '" + path + "' must be an integer");
   return doc.get<int64_t>();
}
//---------------------------------------------------------------------------
std::string getString(const json& doc, const std::string& path)
{
   if (!doc.is_string())
      throw Error::config("config key '" + path + "' must be a string");
   return doc.get<std::string>();
}
//---------------------------------------------------------------------------
std::vector<double> getNumberArray(const json& doc, const std::string& path)
{
   if (!doc.is_array())
      throw Error::config("config key '" + path + "' must be an array of numbers");
   std::vector<double> out;
   out.reserve(doc.size());
   for (const auto& element : doc)
      out.push_back(getNumber(element, path + "[]"));
   return out;
}
//---------------------------------------------------------------------------
GridAxis parseGridAxis(const json& doc, const std::string& path)
{
   GridAxis axis;
   axis.min = getNumber(doc.at("min"), path + ".min");
   axis.max = getNumber(doc.at("max"), path + ".max");
   axis.steps = static_cast<uint32_t>(getUint(doc.at("steps"), path + ".steps"));
   return axis;
}
//---------------------------------------------------------------------------
void validateBook(const CostBook& book)
{
   if (!(book.dramUsdPerGb > 0.0) || !(book.processorUsdPerNode > 0.0) || !(book.miscUsdPerNode > 0.0))
      throw Error::config("all cost book prices must be positive");
   if (book.technologies.empty())
      throw Error::config("cost book lists no storage technologies");
   for (const auto& tech : book.technologies) {
      if (tech.name.empty())
         throw Error::config("storage technology without a name");
      if (!(tech.usdPerGb > 0.0))
         throw Error::config("technology '" + tech.name + "': usd_per_gb must be positive");
      if (!(tech.readLatencyUs > 0.0) || !(tech.writeLatencyUs > 0.0))
         throw Error::config("technology '" + tech.name + "': latencies must be positive");
      if (tech.queueDepth < 1)
         throw Error::config("technology '" + tech.name + "': queue_depth must be at least 1");
      if (!(tech.maxGbPerNode > 0.0))
         throw Error::config("technology '" + tech.name + "': max_gb_per_node must be positive");
   }
   for (size_t i = 0; i < book.technologies.size(); ++i)
      for (size_t j = i + 1; j < book.technologies.size(); ++j)
         if (book.technologies[i].name == book.technologies[j].name)
            throw Error::config("duplicate technology name '" + book.technologies[i].name + "'");
}
//---------------------------------------------------------------------------
RunConfig fromJson(const json& doc)
{
   RunConfig config;

   const json& bookDoc = doc.at("book");
   config.book.dramUsdPerGb = getNumber(bookDoc.at("dram_usd_per_gb"), "book.dram_usd_per_gb");
   config.book.processorUsdPerNode = getNumber(bookDoc.at("processor_usd_per_node"), "book.processor_usd_per_node");
   config.book.miscUsdPerNode = getNumber(bookDoc.at("misc_usd_per_node"), "book.misc_usd_per_node");
   config.book.technologies.clear();
   for (const auto& techDoc : bookDoc.at("technologies")) {
      checkListedKeys(techDoc, "technologies[]", "book.technologies[]");
      StorageTechnology tech;
      tech.name = getString(techDoc.at("name"), "book.technologies[].name");
      tech.usdPerGb = getNumber(techDoc.at("usd_per_gb"), "book.technologies[].usd_per_gb");
      tech.readLatencyUs = getNumber(techDoc.at("read_latency_us"), "book.technologies[].read_latency_us");
      tech.writeLatencyUs = getNumber(techDoc.at("write_latency_us"), "book.technologies[].write_latency_us");
      tech.queueDepth = static_cast<uint32_t>(getUint(techDoc.at("queue_depth"), "book.technologies[].queue_depth"));
      tech.maxGbPerNode = getNumber(techDoc.at("max_gb_per_node"), "book.technologies[].max_gb_per_node");
      config.book.technologies.push_back(std::move(tech));
   }
   validateBook(config.book);

   const json& serverDoc = doc.at("server");
   config.server.maxDramGbPerNode = getNumber(serverDoc.at("max_dram_gb_per_node"), "server.max_dram_gb_per_node");
   config.server.maxNodes = getUint(serverDoc.at("max_nodes"), "server.max_nodes");
   if (!(config.server.maxDramGbPerNode > 0.0) || config.server.maxNodes < 1)
      throw Error::config("server limits must be positive");

   const json& workloadDoc = doc.at("workload");
   config.workload.readFraction = getNumber(workloadDoc.at("read_fraction"), "workload.read_fraction");
   config.workload.hotKeyFraction = getNumber(workloadDoc.at("hot_key_fraction"), "workload.hot_key_fraction");
   config.workload.hotMassFraction = getNumber(workloadDoc.at("hot_mass_fraction"), "workload.hot_mass_fraction");
   config.workload.nTransactions = getUint(workloadDoc.at("n_transactions"), "workload.n_transactions");
   config.workload.datasetGb = getNumber(workloadDoc.at("dataset_gb"), "workload.dataset_gb");
   config.workload.keySizeBytes = static_cast<uint32_t>(getUint(workloadDoc.at("key_size_bytes"), "workload.key_size_bytes"));
   config.workload.valueSizeBytes = static_cast<uint32_t>(getUint(workloadDoc.at("value_size_bytes"), "workload.value_size_bytes"));
   config.workload.pageSizeBytes = static_cast<uint32_t>(getUint(workloadDoc.at("page_size_bytes"), "workload.page_size_bytes"));
   try {
      validateWorkload(config.workload);
   } catch (const Error& e) {
      throw Error::config(std::string("workload: ") + e.what());
   }

   const json& simDoc = doc.at("simulation");
   config.sim.tCpuUs = getNumber(simDoc.at("t_cpu_us"), "simulation.t_cpu_us");
   config.sim.seed = getUint(simDoc.at("seed"), "simulation.seed");
   config.sim.nodePages = static_cast<uint32_t>(getUint(simDoc.at("node_pages"), "simulation.node_pages"));
   config.memoryFractions = getNumberArray(simDoc.at("memory_fractions"), "simulation.memory_fractions");
   if (!(config.sim.tCpuUs > 0.0))
      throw Error::config("simulation.t_cpu_us must be positive");
   if (config.sim.nodePages < 1)
      throw Error::config("simulation.node_pages must be at least 1");
   if (config.memoryFractions.empty())
      throw Error::config("simulation.memory_fractions must not be empty");
   for (size_t i = 0; i < config.memoryFractions.size(); ++i) {
      if (!(config.memoryFractions[i] > 0.0 && config.memoryFractions[i] <= 1.0))
         throw Error::config("simulation.memory_fractions must lie in (0,1]");
      if (i > 0 && config.memoryFractions[i] <= config.memoryFractions[i - 1])
         throw Error::config("simulation.memory_fractions must be strictly ascending");
   }

   const json& pairDoc = doc.at("pair");
   if (!pairDoc.is_array() || pairDoc.size() != 2)
      throw Error::config("pair must list exactly two technology names");
   config.pair[0] = getString(pairDoc.at(0), "pair[0]");
   config.pair[1] = getString(pairDoc.at(1), "pair[1]");
   if (config.pair[0] == config.pair[1])
      throw Error::config("pair must name two different technologies");
   for (const auto& name : config.pair) {
      try {
         config.book.technology(name);
      } catch (const Error&) {
         throw Error::config("pair names technology '" + name + "' missing from the cost book");
      }
   }

   config.capacityAxis = parseGridAxis(doc.at("grid").at("capacity_gb"), "grid.capacity_gb");
   config.throughputAxis = parseGridAxis(doc.at("grid").at("throughput_tps"), "grid.throughput_tps");
   config.capacityAxis.points();   // axis invariants hold before any computation
   config.throughputAxis.points();

   config.extraCostE = getNumber(doc.at("extra_cost_e"), "extra_cost_e");
   if (config.extraCostE < 0.0)
      throw Error::config("extra_cost_e must be non-negative");

   for (auto it = doc.at("profiles").begin(); it != doc.at("profiles").end(); ++it) {
      try {
         config.book.technology(it.key());
      } catch (const Error&) {
         throw Error::config("profiles names technology '" + it.key() + "' missing from the cost book");
      }
      config.profilePaths[it.key()] = getString(it.value(), "profiles." + it.key());
   }

   const json& trendDoc = doc.at("trend");
   for (const auto& obsDoc : trendDoc.at("observations")) {
      checkListedKeys(obsDoc, "observations[]", "trend.observations[]");
      Observation obs;
      obs.tYears = getNumber(obsDoc.at("t_years"), "trend.observations[].t_years");
      obs.capacityGb = getNumber(obsDoc.at("capacity_gb"), "trend.observations[].capacity_gb");
      obs.throughputTps = getNumber(obsDoc.at("throughput_tps"), "trend.observations[].throughput_tps");
      config.trend.observations.push_back(obs);
   }
   config.trend.horizonYears = static_cast<int>(getInt(trendDoc.at("horizon_years"), "trend.horizon_years"));
   if (config.trend.horizonYears < 0)
      throw Error::config("trend.horizon_years must be non-negative");
   try {
      config.trend.mode = extrapolationModeFromString(getString(trendDoc.at("mode"), "trend.mode"));
   } catch (const Error& e) {
      throw Error::config(std::string("trend.mode: ") + e.what());
   }

   if (doc.contains("sensitivity") && !doc.at("sensitivity").is_null()) {
      checkListedKeys(doc.at("sensitivity"), "sensitivity", "sensitivity");
      SensitivitySpec spec;
      try {
         spec.parameter = sweepParameterFromString(getString(doc.at("sensitivity").at("parameter"), "sensitivity.parameter"));
      } catch (const Error& e) {
         throw Error::config(std::string("sensitivity.parameter: ") + e.what());
      }
      spec.values = getNumberArray(doc.at("sensitivity").at("values"), "sensitivity.values");
      if (spec.values.empty())
         throw Error::config("sensitivity.values must not be empty");
      config.sensitivity = std::move(spec);
   }

   const json& outputDoc = doc.at("output");
   if (outputDoc.contains("dir") && !outputDoc.at("dir").is_null())
      config.outputDir = getString(outputDoc.at("dir"), "output.dir");
   else if (const char* env = std::getenv("TRACAR_OUT"); env && *env)
      config.outputDir = env;
   else
      config.outputDir = "tracar-out";

   config.jobs = static_cast<unsigned>(getUint(doc.at("jobs"), "jobs"));
   config.sim.jobs = config.jobs;
   return config;
}
//---------------------------------------------------------------------------
json parseOverride(const std::string& assignment)
{
   auto eq = assignment.find('=');
   if (eq == std::string::npos || eq == 0)
      throw Error::config("override '" + assignment + "' is not of the form key.path=value");
   std::string path = assignment.substr(0, eq);
   std::string valueText = assignment.substr(eq + 1);

   json value;
   {
      json parsed = json::parse(valueText, nullptr, false);
      value = parsed.is_discarded() ? json(valueText) : parsed;
   }

   // Build the nested single-key patch from the dotted path, innermost first
   std::vector<std::string> keys;
   size_t start = 0;
   while (true) {
      auto dot = path.find('.', start);
      std::string key = path.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
      if (key.empty())
         throw Error::config("override '" + assignment + "' has an empty path segment");
      keys.push_back(key);
      if (dot == std::string::npos)
         break;
      start = dot + 1;
   }
   json patch = value;
   for (auto it = keys.rbegin(); it != keys.rend(); ++it)
      patch = json{{*it, patch}};
   return patch;
}
//---------------------------------------------------------------------------
} // namespace
//---------------------------------------------------------------------------
RunConfig parseRunConfig(const std::string& jsonText, const std::vector<std::string>& overrides)
{
   json doc = defaultConfigJson();
   if (!jsonText.empty()) {
      json user = json::parse(jsonText, nullptr, false);
      if (user.is_discarded())
         throw Error::config("config is not valid JSON");
      if (!user.is_object())
         throw Error::config("config root must be a JSON object");
      doc.merge_patch(user);
   }
   for (const auto& assignment : overrides)
      doc.merge_patch(parseOverride(assignment));

   checkKnownKeys(doc, defaultConfigJson(), "");
   try {
      return fromJson(doc);
   } catch (const Error&) {
      throw;
   } catch (const json::exception& e) {
      throw Error::config(std::string("config: ") + e.what());
   }
}
//---------------------------------------------------------------------------
RunConfig loadRunConfig(const std::filesystem::path& path, const std::vector<std::string>& overrides)
{
   std::string contents;
   try {
      contents = readFile(path);
   } catch (const Error& e) {
      throw Error::config(std::string("cannot read config: ") + e.what());
   }
   return parseRunConfig(contents, overrides);
}
//---------------------------------------------------------------------------
} // namespace tracar
