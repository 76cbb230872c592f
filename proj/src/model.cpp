#include "tracar/model.hpp"
#include "tracar/errors.hpp"
//---------------------------------------------------------------------------
#include <cmath>
//---------------------------------------------------------------------------
namespace tracar {
//---------------------------------------------------------------------------
const StorageTechnology& CostBook::technology(const std::string& name) const
{
   for (auto& tech : technologies)
      if (tech.name == name)
         return tech;
   throw Error::invalidArgument("unknown storage technology '" + name + "'");
}
//---------------------------------------------------------------------------
std::string toString(SetupViolation violation)
{
   switch (violation) {
      case SetupViolation::dramExceedsNodeLimit: return "dram exceeds per-node DRAM limit";
      case SetupViolation::storageExceedsDeviceLimit: return "storage exceeds per-node device limit";
      case SetupViolation::tooManyNodes: return "node count exceeds cluster limit";
      case SetupViolation::dramExceedsDataset: return "dram exceeds per-node dataset";
   }
   return "unknown violation";
}
//---------------------------------------------------------------------------
CostBreakdown setupCost(uint64_t nNodes, double dramGbPerNode, double storageGbPerNode,
                        const StorageTechnology& tech, const CostBook& book)
{
   if (nNodes < 1)
      throw Error::invalidArgument("setup cost requires at least one node");
   if (dramGbPerNode < 0 || storageGbPerNode < 0)
      throw Error::invalidArgument("negative capacity in setup cost");
   if (dramGbPerNode == 0 && storageGbPerNode == 0)
      throw Error::invalidArgument("setup has neither DRAM nor storage");

   auto n = static_cast<double>(nNodes);
   CostBreakdown cost;
   cost.dramUsd = Money::fromUsd(n * dramGbPerNode * book.dramUsdPerGb);
   cost.storageUsd = Money::fromUsd(n * storageGbPerNode * tech.usdPerGb);
   cost.processorUsd = Money::fromUsd(n * book.processorUsdPerNode);
   cost.miscUsd = Money::fromUsd(n * book.miscUsdPerNode);
   cost.totalUsd = cost.dramUsd + cost.storageUsd + cost.processorUsd + cost.miscUsd;
   return cost;
}
//---------------------------------------------------------------------------
SetupValidity validateSetup(const SetupCandidate& candidate, const ServerModel& server,
                            const StorageTechnology& tech)
{
   SetupValidity verdict;
   if (candidate.dramGbPerNode > server.maxDramGbPerNode)
      verdict.violations.push_back(SetupViolation::dramExceedsNodeLimit);
   if (candidate.storageGbPerNode > tech.maxGbPerNode)
      verdict.violations.push_back(SetupViolation::storageExceedsDeviceLimit);
   if (candidate.nNodes > server.maxNodes)
      verdict.violations.push_back(SetupViolation::tooManyNodes);
   if (candidate.dramGbPerNode > candidate.storageGbPerNode)
      verdict.violations.push_back(SetupViolation::dramExceedsDataset);
   return verdict;
}
//---------------------------------------------------------------------------
void validateWorkload(const WorkloadMix& workload)
{
   if (workload.readFraction < 0.0 || workload.readFraction > 1.0)
      throw Error::invalidArgument("read_fraction must be in [0,1]");
   if (!(workload.hotKeyFraction > 0.0 && workload.hotKeyFraction < workload.hotMassFraction && workload.hotMassFraction < 1.0))
      throw Error::invalidArgument("require 0 < hot_key_fraction < hot_mass_fraction < 1");
   if (workload.nTransactions == 0)
      throw Error::invalidArgument("n_transactions must be positive");
   if (workload.datasetGb <= 0.0)
      throw Error::invalidArgument("dataset_gb must be positive");
   if (workload.keySizeBytes == 0 || workload.valueSizeBytes == 0)
      throw Error::invalidArgument("key and value sizes must be positive");
   if (workload.pageSizeBytes == 0 || (workload.pageSizeBytes & (workload.pageSizeBytes - 1)) != 0)
      throw Error::invalidArgument("page_size_bytes must be a power of two");
}
//---------------------------------------------------------------------------
uint64_t keyCount(const WorkloadMix& workload)
{
   double entryBytes = static_cast<double>(workload.keySizeBytes) + static_cast<double>(workload.valueSizeBytes);
   return static_cast<uint64_t>(workload.datasetGb * 1e9 / entryBytes);
}
//---------------------------------------------------------------------------
CostBook defaultCostBook()
{
   CostBook book;
   book.dramUsdPerGb = 5.50;
   book.processorUsdPerNode = 400.0;
   book.miscUsdPerNode = 1000.0;
   book.technologies = {
       {"3dxp", 1.20, 10.0, 10.0, 4, 32768.0},
       {"flash", 0.20, 80.0, 60.0, 16, 32768.0},
   };
   return book;
}
//---------------------------------------------------------------------------
ServerModel defaultServerModel()
{
   return {1024.0, 1024};
}
//---------------------------------------------------------------------------
} // namespace tracar
