#include "tracar.h"
//---------------------------------------------------------------------------
#include "tracar/config.hpp"
#include "tracar/errors.hpp"
#include "tracar/fsutil.hpp"
#include "tracar/pipeline.hpp"
//---------------------------------------------------------------------------
#include <algorithm>
#include <string>
#include <vector>
//---------------------------------------------------------------------------
// The opaque handle keeps the raw config text plus accumulated overrides;
// parsing and validation happen at execute time so overrides can still fix
// an invalid document.
struct tracar_run {
   std::string configJson;
   std::vector<std::string> overrides;
   std::string reportJson;
   std::string reportText;
   std::string lastError;
};
//---------------------------------------------------------------------------
namespace {
//---------------------------------------------------------------------------
tracar_status statusOf(tracar::ErrorCode code)
{
   switch (code) {
      case tracar::ErrorCode::invalidArgument: return TRACAR_INVALID_ARGUMENT;
      case tracar::ErrorCode::config: return TRACAR_CONFIG_ERROR;
      case tracar::ErrorCode::infeasible: return TRACAR_INFEASIBLE;
      case tracar::ErrorCode::io: return TRACAR_IO_ERROR;
      case tracar::ErrorCode::internal: return TRACAR_INTERNAL_ERROR;
   }
   return TRACAR_INTERNAL_ERROR;
}
//---------------------------------------------------------------------------
/// Error messages cross the C boundary as a single line
std::string oneLine(std::string text)
{
   std::replace(text.begin(), text.end(), '\n', ' ');
   return text;
}
//---------------------------------------------------------------------------
template <typename Fn>
tracar_status guarded(tracar_run* run, Fn&& fn)
{
   try {
      fn();
      run->lastError.clear();
      return TRACAR_OK;
   } catch (const tracar::Error& e) {
      run->lastError = oneLine(e.what());
      return statusOf(e.code());
   } catch (const std::exception& e) {
      run->lastError = oneLine(e.what());
      return TRACAR_INTERNAL_ERROR;
   } catch (...) {
      run->lastError = "unknown error";
      return TRACAR_INTERNAL_ERROR;
   }
}
//---------------------------------------------------------------------------
} // namespace
//---------------------------------------------------------------------------
extern "C" {
//---------------------------------------------------------------------------
const char* tracar_version(void)
{
   return "1.0.0";
}
//---------------------------------------------------------------------------
int tracar_status_exit_code(tracar_status status)
{
   switch (status) {
      case TRACAR_OK: return 0;
      case TRACAR_CONFIG_ERROR: return 2;
      case TRACAR_INFEASIBLE: return 3;
      case TRACAR_IO_ERROR: return 4;
      default: return 1;
   }
}
//---------------------------------------------------------------------------
tracar_status tracar_run_new(const char* config_json, tracar_run** out_run)
{
   if (!out_run)
      return TRACAR_INVALID_ARGUMENT;
   auto* run = new tracar_run;
   run->configJson = config_json ? config_json : "";
   *out_run = run;
   return TRACAR_OK;
}
//---------------------------------------------------------------------------
tracar_status tracar_run_new_from_file(const char* path, tracar_run** out_run)
{
   if (!out_run)
      return TRACAR_INVALID_ARGUMENT;
   auto* run = new tracar_run;
   *out_run = run;
   if (!path) {
      run->lastError = "config path is null";
      return TRACAR_INVALID_ARGUMENT;
   }
   return guarded(run, [&] {
      try {
         run->configJson = tracar::readFile(path);
      } catch (const tracar::Error& e) {
         // An unreadable config file is a config problem to the caller
         throw tracar::Error::config(e.what());
      }
   });
}
//---------------------------------------------------------------------------
tracar_status tracar_run_set(tracar_run* run, const char* assignment)
{
   if (!run)
      return TRACAR_INVALID_ARGUMENT;
   if (!assignment || !*assignment) {
      run->lastError = "override is empty";
      return TRACAR_CONFIG_ERROR;
   }
   run->overrides.emplace_back(assignment);
   return TRACAR_OK;
}
//---------------------------------------------------------------------------
tracar_status tracar_run_execute(tracar_run* run, const char* command)
{
   if (!run)
      return TRACAR_INVALID_ARGUMENT;
   if (!command) {
      run->lastError = "command is null";
      return TRACAR_INVALID_ARGUMENT;
   }
   return guarded(run, [&] {
      tracar::Command cmd = tracar::commandFromString(command);
      tracar::RunConfig config = tracar::parseRunConfig(run->configJson, run->overrides);
      tracar::RunResult result = tracar::runCommand(cmd, config);
      run->reportJson = std::move(result.reportJson);
      run->reportText = std::move(result.reportText);
   });
}
//---------------------------------------------------------------------------
const char* tracar_run_report_json(const tracar_run* run)
{
   return run ? run->reportJson.c_str() : "";
}
//---------------------------------------------------------------------------
const char* tracar_run_report_text(const tracar_run* run)
{
   return run ? run->reportText.c_str() : "";
}
//---------------------------------------------------------------------------
const char* tracar_run_error(const tracar_run* run)
{
   return run ? run->lastError.c_str() : "";
}
//---------------------------------------------------------------------------
void tracar_run_free(tracar_run* run)
{
   delete run;
}
//---------------------------------------------------------------------------
} // extern "C"
