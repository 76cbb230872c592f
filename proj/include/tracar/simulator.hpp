#pragma once
//---------------------------------------------------------------------------
#include "tracar/btree.hpp"
#include "tracar/model.hpp"
#include "tracar/zipf.hpp"
#include <span>
#include <string>
#include <vector>
//---------------------------------------------------------------------------
// Software stand-in for profiling a database on real devices: a zipfian
// b-tree workload replayed through an LRU page cache, then a latency model
// that turns page-fault rates into per-node transaction rates.
//---------------------------------------------------------------------------
namespace tracar {
//---------------------------------------------------------------------------
/// Mean secondary-storage page faults per transaction at each resident-
/// memory fraction, for one seeded trace.
///
/// Fault accounting: the replayed trace is warmup + nTransactions long,
/// with warmup = min(nTransactions/10, nPages). Faults are counted over
/// the measured window only, and a page's first-ever access (cold miss)
/// is never charged: at fraction 1.0 nothing is ever evicted, so the
/// fault rate is exactly zero.
struct MissCurvePoint {
   double memoryFraction = 0;
   double faultsPerTxn = 0;
};
struct MissCurve {
   std::vector<MissCurvePoint> points;
   uint64_t seed = 0;
   uint64_t nTransactions = 0;
};
//---------------------------------------------------------------------------
enum class Provenance { simulated, measuredFixture };
//---------------------------------------------------------------------------
std::string toString(Provenance provenance);
Provenance provenanceFromString(const std::string& text);
//---------------------------------------------------------------------------
/// Per-node throughput as a function of resident-memory fraction for one
/// (technology, workload) pair. Points are ordered by ascending fraction;
/// tps is non-increasing as the fraction shrinks.
struct ProfilePoint {
   double memoryFraction = 0;
   double faultsPerTxn = 0;
   double tpsPerNode = 0;
};
struct ThroughputProfile {
   std::string technology;
   WorkloadMix workload;
   std::vector<ProfilePoint> points;
   Provenance provenance = Provenance::simulated;
   uint64_t seed = 0;
};
//---------------------------------------------------------------------------
/// Knobs of the simulation that are not part of the workload itself
struct SimulationParams {
   /// In-memory transaction cost (b-tree traversal), microseconds
   double tCpuUs = 10.0;
   uint64_t seed = 42;
   /// B-tree node size in pages
   uint32_t nodePages = 1;
   /// Worker threads for the sweep; 0 = hardware concurrency
   unsigned jobs = 1;
};
//---------------------------------------------------------------------------
/// Replay one seeded zipfian trace against an LRU page cache of
/// floor(f * nPages) pages (minimum 1) for every fraction f. The same
/// trace is shared by all fractions, so miss counts are exactly
/// non-increasing in cache size. Deterministic for a fixed seed,
/// independent of worker count.
MissCurve simulateMissCurve(const BTreeModel& tree, const WorkloadMix& workload, const ZipfSpec& zipf,
                            std::span<const double> memoryFractions, uint64_t seed, unsigned jobs = 1);
//---------------------------------------------------------------------------
/// Mean transaction latency is tCpuUs + faultsPerTxn * tDev with
/// tDev = readLatency * (1-writeFraction) + writeLatency * writeFraction;
/// the device sustains queueDepth concurrent accesses, so
/// tps = queueDepth * 1e6 / latency.
double throughputFromMisses(double faultsPerTxn, double writeFraction,
                            const StorageTechnology& tech, double tCpuUs);
//---------------------------------------------------------------------------
/// Full profiling pipeline for one technology: calibrate the zipf skew to
/// the workload's hot-set target, lay out the b-tree, simulate the miss
/// curve over the sweep, and convert fault rates to per-node throughput.
ThroughputProfile getThroughputMem(const WorkloadMix& workload, const StorageTechnology& tech,
                                   std::span<const double> memoryFractions, const SimulationParams& params);
//---------------------------------------------------------------------------
} // namespace tracar
