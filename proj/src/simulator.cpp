#include "tracar/simulator.hpp"
#include "tracar/errors.hpp"
#include "tracar/lru.hpp"
#include "tracar/parallel.hpp"
//---------------------------------------------------------------------------
#include <algorithm>
#include <cmath>
//---------------------------------------------------------------------------
namespace tracar {
//---------------------------------------------------------------------------
std::string toString(Provenance provenance)
{
   return provenance == Provenance::simulated ? "simulated" : "measured-fixture";
}
//---------------------------------------------------------------------------
Provenance provenanceFromString(const std::string& text)
{
   if (text == "simulated")
      return Provenance::simulated;
   if (text == "measured-fixture")
      return Provenance::measuredFixture;
   throw Error::invalidArgument("unknown provenance '" + text + "'");
}
//---------------------------------------------------------------------------
namespace {
//---------------------------------------------------------------------------
// One trace entry: leaf index in the low bits, write flag in the top bit
constexpr uint64_t writeBit = 1ull << 63;
//---------------------------------------------------------------------------
std::vector<uint64_t> generateTrace(const BTreeModel& tree, const WorkloadMix& workload,
                                    const ZipfSpec& zipf, uint64_t seed, uint64_t length)
{
   ZipfSampler sampler(zipf);
   std::mt19937_64 rng(seed);
   double writeFraction = 1.0 - workload.readFraction;

   std::vector<uint64_t> trace(length);
   for (auto& entry : trace) {
      uint64_t rank = sampler.sample(rng);
      bool write = nextUnitDouble(rng) < writeFraction;
      entry = leafOfRank(tree, rank) | (write ? writeBit : 0);
   }
   return trace;
}
//---------------------------------------------------------------------------
double replayFraction(const BTreeModel& tree, std::span<const uint64_t> trace,
                      uint64_t warmupTxns, uint64_t measuredTxns, double fraction)
{
   auto capacity = std::max<uint64_t>(1, static_cast<uint64_t>(fraction * static_cast<double>(tree.nPages)));
   LruPageCache cache(capacity);
   std::vector<uint8_t> seen(tree.nPages, 0);
   std::vector<uint64_t> path;
   path.reserve(tree.height);

   uint64_t countedFaults = 0;
   for (uint64_t t = 0; t < trace.size(); ++t) {
      uint64_t leaf = trace[t] & ~writeBit;
      bool write = (trace[t] & writeBit) != 0;
      pagePath(tree, leaf, path);
      for (uint64_t page : path) {
         bool miss = cache.touch(page, write);
         if (miss && t >= warmupTxns && seen[page])
            ++countedFaults;
         seen[page] = 1;
      }
   }
   return static_cast<double>(countedFaults) / static_cast<double>(measuredTxns);
}
//---------------------------------------------------------------------------
} // namespace
//---------------------------------------------------------------------------
MissCurve simulateMissCurve(const BTreeModel& tree, const WorkloadMix& workload, const ZipfSpec& zipf,
                            std::span<const double> memoryFractions, uint64_t seed, unsigned jobs)
{
   if (memoryFractions.empty())
      throw Error::invalidArgument("memory fraction sweep is empty");
   for (size_t i = 0; i < memoryFractions.size(); ++i) {
      if (!(memoryFractions[i] > 0.0 && memoryFractions[i] <= 1.0))
         throw Error::invalidArgument("memory fractions must lie in (0,1]");
      if (i > 0 && memoryFractions[i] <= memoryFractions[i - 1])
         throw Error::invalidArgument("memory fractions must be strictly ascending");
   }
   if (zipf.nItems != tree.nKeys)
      throw Error::invalidArgument("zipf distribution not calibrated for this tree's key count");
   if (workload.nTransactions == 0)
      throw Error::invalidArgument("n_transactions must be positive");
   if (!(workload.readFraction >= 0.0 && workload.readFraction <= 1.0))
      throw Error::invalidArgument("read_fraction must be in [0,1]");

   uint64_t warmup = std::min(workload.nTransactions / 10, tree.nPages);
   auto trace = generateTrace(tree, workload, zipf, seed, warmup + workload.nTransactions);

   MissCurve curve;
   curve.seed = seed;
   curve.nTransactions = workload.nTransactions;
   curve.points.resize(memoryFractions.size());
   parallelFor(memoryFractions.size(), jobs, [&](size_t i) {
      curve.points[i].memoryFraction = memoryFractions[i];
      curve.points[i].faultsPerTxn =
          replayFraction(tree, trace, warmup, workload.nTransactions, memoryFractions[i]);
   });
   return curve;
}
//---------------------------------------------------------------------------
double throughputFromMisses(double faultsPerTxn, double writeFraction,
                            const StorageTechnology& tech, double tCpuUs)
{
   if (faultsPerTxn < 0.0)
      throw Error::invalidArgument("faults per transaction must be non-negative");
   if (!(tCpuUs > 0.0))
      throw Error::invalidArgument("cpu time per transaction must be positive");
   if (!(writeFraction >= 0.0 && writeFraction <= 1.0))
      throw Error::invalidArgument("write fraction must be in [0,1]");

   double tDevUs = tech.readLatencyUs * (1.0 - writeFraction) + tech.writeLatencyUs * writeFraction;
   double latencyUs = tCpuUs + faultsPerTxn * tDevUs;
   return static_cast<double>(tech.queueDepth) * 1e6 / latencyUs;
}
//---------------------------------------------------------------------------
ThroughputProfile getThroughputMem(const WorkloadMix& workload, const StorageTechnology& tech,
                                   std::span<const double> memoryFractions, const SimulationParams& params)
{
   validateWorkload(workload);
   if (memoryFractions.empty())
      throw Error::invalidArgument("memory fraction sweep is empty");

   uint64_t nKeys = keyCount(workload);
   double exponent = calibrateZipf(nKeys, workload.hotKeyFraction, workload.hotMassFraction);
   BTreeModel tree = buildBtreeLayout(nKeys, workload.keySizeBytes, workload.valueSizeBytes,
                                      workload.pageSizeBytes, params.nodePages);
   ZipfSpec zipf{nKeys, exponent, params.seed};
   MissCurve curve = simulateMissCurve(tree, workload, zipf, memoryFractions, params.seed, params.jobs);

   ThroughputProfile profile;
   profile.technology = tech.name;
   profile.workload = workload;
   profile.provenance = Provenance::simulated;
   profile.seed = params.seed;
   profile.points.reserve(curve.points.size());
   double writeFraction = 1.0 - workload.readFraction;
   for (const auto& point : curve.points) {
      ProfilePoint out;
      out.memoryFraction = point.memoryFraction;
      out.faultsPerTxn = point.faultsPerTxn;
      out.tpsPerNode = throughputFromMisses(point.faultsPerTxn, writeFraction, tech, params.tCpuUs);
      profile.points.push_back(out);
   }
   return profile;
}
//---------------------------------------------------------------------------
} // namespace tracar
