#include "tracar/profile_io.hpp"
#include "tracar/errors.hpp"
#include "tracar/format.hpp"
#include "tracar/fsutil.hpp"
//---------------------------------------------------------------------------
#include <charconv>
#include <cstdio>
#include <sstream>
//---------------------------------------------------------------------------
namespace tracar {
//---------------------------------------------------------------------------
namespace {
//---------------------------------------------------------------------------
constexpr int formatMajorVersion = 1;
constexpr const char* headerPrefix = "# tracar-profile v";
//---------------------------------------------------------------------------
double parseDouble(const std::string& field, const std::string& where)
{
   double value = 0;
   auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
   if (ec != std::errc{} || ptr != field.data() + field.size())
      throw Error::io(where + ": bad numeric field '" + field + "'");
   return value;
}
//---------------------------------------------------------------------------
uint64_t parseSeed(const std::string& field, const std::string& where)
{
   uint64_t value = 0;
   auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
   if (ec != std::errc{} || ptr != field.data() + field.size())
      throw Error::io(where + ": bad seed field '" + field + "'");
   return value;
}
//---------------------------------------------------------------------------
std::vector<std::string> splitCsvLine(const std::string& line)
{
   std::vector<std::string> fields;
   std::string field;
   std::istringstream in(line);
   while (std::getline(in, field, ','))
      fields.push_back(field);
   return fields;
}
//---------------------------------------------------------------------------
} // namespace
//---------------------------------------------------------------------------
std::string serializeProfile(const ThroughputProfile& profile)
{
   std::string out = headerPrefix + std::to_string(formatMajorVersion) + "\n";
   out += "# technology,read_fraction,memory_fraction,faults_per_txn,tps_per_node,seed,provenance\n";
   for (const auto& point : profile.points) {
      out += profile.technology;
      out += ',';
      out += formatDouble(profile.workload.readFraction);
      out += ',';
      out += formatDouble(point.memoryFraction);
      out += ',';
      out += formatDouble(point.faultsPerTxn);
      out += ',';
      out += formatDouble(point.tpsPerNode);
      out += ',';
      out += std::to_string(profile.seed);
      out += ',';
      out += toString(profile.provenance);
      out += '\n';
   }
   return out;
}
//---------------------------------------------------------------------------
ThroughputProfile parseProfile(const std::string& contents, const std::string& sourceName)
{
   std::istringstream in(contents);
   std::string line;
   if (!std::getline(in, line) || line.rfind(headerPrefix, 0) != 0)
      throw Error::io(sourceName + ": not a tracar profile file");
   int major = 0;
   {
      std::string versionText = line.substr(std::string(headerPrefix).size());
      auto [ptr, ec] = std::from_chars(versionText.data(), versionText.data() + versionText.size(), major);
      if (ec != std::errc{})
         throw Error::io(sourceName + ": malformed version header '" + line + "'");
      (void)ptr;
   }
   if (major != formatMajorVersion)
      throw Error::io(sourceName + ": unsupported profile format major version " + std::to_string(major));

   ThroughputProfile profile;
   profile.workload = WorkloadMix{};
   bool first = true;
   size_t lineNo = 1;
   while (std::getline(in, line)) {
      ++lineNo;
      if (line.empty() || line[0] == '#')
         continue;
      auto fields = splitCsvLine(line);
      std::string where = sourceName + ":" + std::to_string(lineNo);
      if (fields.size() != 7)
         throw Error::io(where + ": expected 7 fields, got " + std::to_string(fields.size()));

      ProfilePoint point;
      double readFraction = parseDouble(fields[1], where);
      point.memoryFraction = parseDouble(fields[2], where);
      point.faultsPerTxn = parseDouble(fields[3], where);
      point.tpsPerNode = parseDouble(fields[4], where);
      uint64_t seed = parseSeed(fields[5], where);
      Provenance provenance = provenanceFromString(fields[6]);

      if (!(point.memoryFraction > 0.0 && point.memoryFraction <= 1.0))
         throw Error::io(where + ": memory fraction out of (0,1]");
      if (!(point.tpsPerNode > 0.0))
         throw Error::io(where + ": tps_per_node must be positive");

      if (first) {
         profile.technology = fields[0];
         profile.workload.readFraction = readFraction;
         profile.seed = seed;
         profile.provenance = provenance;
         first = false;
      } else if (fields[0] != profile.technology) {
         throw Error::io(where + ": mixed technologies in one profile file");
      }
      profile.points.push_back(point);
   }
   if (profile.points.empty())
      throw Error::io(sourceName + ": profile has no points");
   return profile;
}
//---------------------------------------------------------------------------
void saveProfile(const ThroughputProfile& profile, const std::filesystem::path& path)
{
   atomicWriteFile(path, serializeProfile(profile));
}
//---------------------------------------------------------------------------
ThroughputProfile loadProfile(const std::filesystem::path& path)
{
   return parseProfile(readFile(path), path.string());
}
//---------------------------------------------------------------------------
} // namespace tracar
