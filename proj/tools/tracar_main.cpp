// Command-line front end. Links only the C API, the same surface other
// language bindings would use.
#include "tracar.h"
//---------------------------------------------------------------------------
#include <CLI11.hpp>
#include <cstdio>
#include <memory>
#include <string>
#include <vector>
//---------------------------------------------------------------------------
namespace {
//---------------------------------------------------------------------------
struct CommonOptions {
   std::string configPath;
   std::vector<std::string> sets;
   std::string outputDir;
   int jobs = -1;
   bool quiet = false;
};
//---------------------------------------------------------------------------
void addCommonOptions(CLI::App* cmd, CommonOptions& options)
{
   cmd->add_option("-c,--config", options.configPath, "JSON config file (defaults used when omitted)");
   cmd->add_option("-s,--set", options.sets, "override a config key, e.g. --set book.dram_usd_per_gb=6.25")
       ->take_all();
   cmd->add_option("-o,--out", options.outputDir, "output directory (overrides config and TRACAR_OUT)");
   cmd->add_option("-j,--jobs", options.jobs, "worker threads; 0 = all cores");
   cmd->add_flag("-q,--quiet", options.quiet, "suppress the report on stdout");
}
//---------------------------------------------------------------------------
int runSubcommand(const std::string& command, const CommonOptions& options)
{
   using RunHandle = std::unique_ptr<tracar_run, decltype(&tracar_run_free)>;

   tracar_run* raw = nullptr;
   tracar_status status = options.configPath.empty()
                              ? tracar_run_new(nullptr, &raw)
                              : tracar_run_new_from_file(options.configPath.c_str(), &raw);
   RunHandle run(raw, &tracar_run_free);
   if (status != TRACAR_OK) {
      std::fprintf(stderr, "error: %s\n", run ? tracar_run_error(run.get()) : "cannot create run");
      return tracar_status_exit_code(status);
   }

   std::vector<std::string> sets = options.sets;
   if (!options.outputDir.empty())
      sets.push_back("output.dir=" + options.outputDir);
   if (options.jobs >= 0)
      sets.push_back("jobs=" + std::to_string(options.jobs));
   for (const auto& assignment : sets) {
      status = tracar_run_set(run.get(), assignment.c_str());
      if (status != TRACAR_OK) {
         std::fprintf(stderr, "error: %s\n", tracar_run_error(run.get()));
         return tracar_status_exit_code(status);
      }
   }

   status = tracar_run_execute(run.get(), command.c_str());
   if (status != TRACAR_OK) {
      std::fprintf(stderr, "error: %s\n", tracar_run_error(run.get()));
      return tracar_status_exit_code(status);
   }
   if (!options.quiet)
      std::fputs(tracar_run_report_text(run.get()), stdout);
   return 0;
}
//---------------------------------------------------------------------------
} // namespace
//---------------------------------------------------------------------------
int main(int argc, char** argv)
{
   CLI::App app{"tracar - storage technology selection and server provisioning from demand trends"};
   app.require_subcommand(1);
   app.set_version_flag("--version", std::string("tracar ") + tracar_version());

   struct Subcommand {
      const char* name;
      const char* help;
   };
   constexpr Subcommand subcommands[] = {
       {"profile", "simulate (or import) throughput-vs-memory profiles for the technology pair"},
       {"plan", "compute the cheapest valid setup for every demand grid cell"},
       {"breakpoint", "classify the demand grid between the two technologies and fit the breakpoint ratio"},
       {"recommend", "fit the growth trend, pick a technology, and emit the setup comparison and schedule"},
       {"sensitivity", "recompute the breakpoint ratio across a price sweep"},
   };

   std::vector<std::pair<std::string, CommonOptions>> invocations;
   invocations.reserve(std::size(subcommands));
   for (const auto& sub : subcommands) {
      auto& slot = invocations.emplace_back(sub.name, CommonOptions{});
      addCommonOptions(app.add_subcommand(sub.name, sub.help), slot.second);
   }

   CLI11_PARSE(app, argc, argv);

   for (const auto& [name, options] : invocations)
      if (app.get_subcommand(name)->parsed())
         return runSubcommand(name, options);
   return 0;
}
