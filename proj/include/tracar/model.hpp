#pragma once
//---------------------------------------------------------------------------
#include "tracar/money.hpp"
#include <cstdint>
#include <string>
#include <vector>
//---------------------------------------------------------------------------
// Domain types shared by every module: storage technologies, the price
// book, server limits, workload description, and the cost arithmetic.
// All types are immutable values after construction; all free functions
// here are pure and safe to call concurrently.
//---------------------------------------------------------------------------
namespace tracar {
//---------------------------------------------------------------------------
/// One secondary-storage technology and its device characteristics
struct StorageTechnology {
   std::string name;
   /// Device price, USD per GB (device cost is linear in capacity)
   double usdPerGb = 0;
   /// Random-access read latency for one page, microseconds
   double readLatencyUs = 0;
   /// Random-access write latency for one page, microseconds
   double writeLatencyUs = 0;
   /// Concurrent outstanding accesses the device sustains without queuing penalty
   uint32_t queueDepth = 1;
   /// Maximum secondary-storage capacity attachable to one node, GB
   double maxGbPerNode = 0;
};
//---------------------------------------------------------------------------
/// Price book for a complete setup: DRAM, per-node fixed costs, and the
/// catalog of storage technologies under consideration
struct CostBook {
   double dramUsdPerGb = 5.50;
   double processorUsdPerNode = 400.0;
   /// Server equipment and maintenance, one-time per node
   double miscUsdPerNode = 1000.0;
   std::vector<StorageTechnology> technologies;

   /// Lookup by name; throws Error::invalidArgument if absent
   const StorageTechnology& technology(const std::string& name) const;
};
//---------------------------------------------------------------------------
/// Per-node limits of the server platform and the cluster-size search ceiling
struct ServerModel {
   double maxDramGbPerNode = 1024.0;
   uint64_t maxNodes = 1024;
};
//---------------------------------------------------------------------------
/// Key-value workload description used for profiling
struct WorkloadMix {
   /// Fraction of transactions that are reads, in [0,1]
   double readFraction = 0.5;
   /// Fraction of keys receiving the hot access mass
   double hotKeyFraction = 0.2;
   /// Fraction of accesses that go to the hot keys
   double hotMassFraction = 0.8;
   /// Measured transactions per simulation run
   uint64_t nTransactions = 1'000'000;
   /// Reference per-node dataset size for profiling, GB (1 GB = 1e9 bytes)
   double datasetGb = 1.0;
   uint32_t keySizeBytes = 16;
   uint32_t valueSizeBytes = 100;
   uint32_t pageSizeBytes = 4096;
};
//---------------------------------------------------------------------------
/// A single (dataset size, transaction rate) requirement
struct DemandPoint {
   double capacityGb = 0;
   double throughputTps = 0;
};
//---------------------------------------------------------------------------
/// Cost of a complete setup, split the way a quote would be; total is the
/// exact sum of the four components
struct CostBreakdown {
   Money dramUsd;
   Money storageUsd;
   Money processorUsd;
   Money miscUsd;
   Money totalUsd;
};
//---------------------------------------------------------------------------
/// A concrete cluster configuration for one technology, with its cost
struct SetupCandidate {
   std::string technology;
   uint64_t nNodes = 0;
   double dramGbPerNode = 0;
   /// Per-node share of the dataset; the full dataset resides on secondary storage
   double storageGbPerNode = 0;
   /// dram / storage per node, in (0,1]
   double memoryFraction = 0;
   /// Cluster throughput this configuration achieves
   double achievedTps = 0;
   CostBreakdown cost;
};
//---------------------------------------------------------------------------
/// Which limit a candidate setup violates
enum class SetupViolation {
   dramExceedsNodeLimit,
   storageExceedsDeviceLimit,
   tooManyNodes,
   dramExceedsDataset
};
//---------------------------------------------------------------------------
/// Verdict of validateSetup: valid iff no violations; all violated
/// constraints are listed, not just the first
struct SetupValidity {
   std::vector<SetupViolation> violations;
   bool valid() const { return violations.empty(); }
};
//---------------------------------------------------------------------------
std::string toString(SetupViolation violation);
//---------------------------------------------------------------------------
/// Cost of n nodes, each with the given DRAM and storage capacity.
/// Each component is the full product rounded to the cent once; the total
/// is the exact sum. Throws Error::invalidArgument on nNodes = 0, negative
/// quantities, or zero DRAM and storage both.
CostBreakdown setupCost(uint64_t nNodes, double dramGbPerNode, double storageGbPerNode,
                        const StorageTechnology& tech, const CostBook& book);
//---------------------------------------------------------------------------
/// Check a candidate against the server platform and device limits.
/// Returns a verdict, never throws.
SetupValidity validateSetup(const SetupCandidate& candidate, const ServerModel& server,
                            const StorageTechnology& tech);
//---------------------------------------------------------------------------
/// Throws Error::invalidArgument when a WorkloadMix invariant is broken
void validateWorkload(const WorkloadMix& workload);
//---------------------------------------------------------------------------
/// Number of key-value entries the reference dataset holds
uint64_t keyCount(const WorkloadMix& workload);
//---------------------------------------------------------------------------
/// Price book with the built-in defaults: DRAM 5.50, flash 0.20 and
/// 3dxp 1.20 USD/GB, $400 processors, $1,000 equipment and maintenance.
/// Flash latencies are configurable defaults, not measurements.
CostBook defaultCostBook();
ServerModel defaultServerModel();
//---------------------------------------------------------------------------
} // namespace tracar
