#include "tracar/planner.hpp"
#include "tracar/errors.hpp"
#include "tracar/parallel.hpp"
//---------------------------------------------------------------------------
#include <algorithm>
#include <cmath>
//---------------------------------------------------------------------------
namespace tracar {
//---------------------------------------------------------------------------
bool DemandGrid::sameShape(const DemandGrid& other) const
{
   return capacitiesGb == other.capacitiesGb && throughputsTps == other.throughputsTps;
}
//---------------------------------------------------------------------------
void validateDemandGrid(const DemandGrid& grid)
{
   auto checkAxis = [](const std::vector<double>& axis, const char* name) {
      if (axis.empty())
         throw Error::invalidArgument(std::string("demand grid axis '") + name + "' is empty");
      for (size_t i = 0; i < axis.size(); ++i) {
         if (!(axis[i] > 0.0))
            throw Error::invalidArgument(std::string("demand grid axis '") + name + "' must be positive");
         if (i > 0 && axis[i] <= axis[i - 1])
            throw Error::invalidArgument(std::string("demand grid axis '") + name + "' must be strictly ascending");
      }
   };
   checkAxis(grid.capacitiesGb, "capacity");
   checkAxis(grid.throughputsTps, "throughput");
}
//---------------------------------------------------------------------------
namespace {
//---------------------------------------------------------------------------
/// Profile points sorted by ascending memory fraction
std::vector<ProfilePoint> sortedPoints(const ThroughputProfile& profile)
{
   if (profile.points.empty())
      throw Error::invalidArgument("throughput profile has no points");
   auto points = profile.points;
   std::sort(points.begin(), points.end(),
             [](const ProfilePoint& a, const ProfilePoint& b) { return a.memoryFraction < b.memoryFraction; });
   for (size_t i = 0; i < points.size(); ++i) {
      if (!(points[i].memoryFraction > 0.0 && points[i].memoryFraction <= 1.0))
         throw Error::invalidArgument("profile memory fractions must lie in (0,1]");
      if (!(points[i].tpsPerNode > 0.0))
         throw Error::invalidArgument("profile throughput must be positive");
      if (i > 0 && points[i].memoryFraction == points[i - 1].memoryFraction)
         throw Error::invalidArgument("profile has duplicate memory fractions");
   }
   return points;
}
//---------------------------------------------------------------------------
std::string infeasibilityReason(const DemandPoint& demand, const StorageTechnology& tech,
                                const std::vector<ProfilePoint>& points, const ServerModel& server)
{
   char buffer[192];
   // Capacity binding: even maxNodes nodes leave more data per node than one node may attach
   if (demand.capacityGb / static_cast<double>(server.maxNodes) > tech.maxGbPerNode) {
      std::snprintf(buffer, sizeof(buffer),
                    "capacity %.0f GB needs more than %llu nodes at %.0f GB per node",
                    demand.capacityGb, static_cast<unsigned long long>(server.maxNodes), tech.maxGbPerNode);
      return buffer;
   }
   double bestTps = 0;
   for (const auto& point : points)
      bestTps = std::max(bestTps, point.tpsPerNode);
   if (demand.throughputTps / static_cast<double>(server.maxNodes) > bestTps) {
      std::snprintf(buffer, sizeof(buffer),
                    "throughput %.0f tps exceeds %llu nodes at best per-node rate %.0f tps",
                    demand.throughputTps, static_cast<unsigned long long>(server.maxNodes), bestTps);
      return buffer;
   }
   return "no (nodes, memory fraction) pair satisfies the DRAM and device limits together";
}
//---------------------------------------------------------------------------
} // namespace
//---------------------------------------------------------------------------
std::optional<SetupCandidate> findCheapestSetup(const DemandPoint& demand, const StorageTechnology& tech,
                                                const ThroughputProfile& profile, const ServerModel& server,
                                                const CostBook& book, std::string* whyInfeasible)
{
   if (!(demand.capacityGb > 0.0 && demand.throughputTps > 0.0))
      throw Error::invalidArgument("demand point must be positive");
   auto points = sortedPoints(profile);

   std::optional<SetupCandidate> best;
   for (uint64_t n = 1; n <= server.maxNodes; ++n) {
      double storagePerNode = demand.capacityGb / static_cast<double>(n);
      if (storagePerNode > tech.maxGbPerNode)
         continue; // more nodes shrink the per-node share
      double requiredPerNode = demand.throughputTps / static_cast<double>(n);
      for (const auto& point : points) {
         double dramPerNode = point.memoryFraction * storagePerNode;
         if (dramPerNode > server.maxDramGbPerNode)
            break; // dram grows with the fraction; nothing later fits either
         if (point.tpsPerNode < requiredPerNode)
            continue;
         // For a fixed node count the cost is non-decreasing in the
         // fraction, so the first feasible point is this n's optimum and
         // the designated tie-break winner.
         SetupCandidate candidate;
         candidate.technology = tech.name;
         candidate.nNodes = n;
         candidate.dramGbPerNode = dramPerNode;
         candidate.storageGbPerNode = storagePerNode;
         candidate.memoryFraction = point.memoryFraction;
         candidate.achievedTps = static_cast<double>(n) * point.tpsPerNode;
         candidate.cost = setupCost(n, dramPerNode, storagePerNode, tech, book);
         if (!best || candidate.cost.totalUsd < best->cost.totalUsd)
            best = std::move(candidate);
         break;
      }
   }

   if (!best && whyInfeasible)
      *whyInfeasible = infeasibilityReason(demand, tech, points, server);
   return best;
}
//---------------------------------------------------------------------------
SetupCandidate cheapestSetup(const DemandPoint& demand, const StorageTechnology& tech,
                             const ThroughputProfile& profile, const ServerModel& server,
                             const CostBook& book)
{
   std::string reason;
   auto best = findCheapestSetup(demand, tech, profile, server, book, &reason);
   if (!best)
      throw Error::infeasible("no feasible " + tech.name + " setup: " + reason);
   return *best;
}
//---------------------------------------------------------------------------
SetupGrid planGrid(const DemandGrid& grid, const StorageTechnology& tech, const ThroughputProfile& profile,
                   const ServerModel& server, const CostBook& book, unsigned jobs)
{
   validateDemandGrid(grid);
   SetupGrid result;
   result.demand = grid;
   result.technology = tech.name;
   result.cells.resize(grid.cellCount());

   size_t nThroughputs = grid.throughputsTps.size();
   parallelFor(grid.cellCount(), jobs, [&](size_t i) {
      DemandPoint demand{grid.capacitiesGb[i / nThroughputs], grid.throughputsTps[i % nThroughputs]};
      result.cells[i] = findCheapestSetup(demand, tech, profile, server, book);
   });
   return result;
}
//---------------------------------------------------------------------------
namespace {
//---------------------------------------------------------------------------
enum class CellPreference { tech1, tech2, infeasible };
//---------------------------------------------------------------------------
CellPreference classifyCell(const std::optional<SetupCandidate>& premium,
                            const std::optional<SetupCandidate>& alternative, double extraCostE)
{
   if (!premium && !alternative)
      return CellPreference::infeasible;
   if (!alternative)
      return CellPreference::tech1;
   if (!premium)
      return CellPreference::tech2;
   double cost1 = static_cast<double>(premium->cost.totalUsd.cents);
   double cost2 = static_cast<double>(alternative->cost.totalUsd.cents);
   return cost1 <= (1.0 + extraCostE) * cost2 ? CellPreference::tech1 : CellPreference::tech2;
}
//---------------------------------------------------------------------------
} // namespace
//---------------------------------------------------------------------------
BreakpointLine computeBreakpoint(const SetupGrid& premiumGrid, const SetupGrid& alternativeGrid,
                                 double extraCostE)
{
   if (!premiumGrid.demand.sameShape(alternativeGrid.demand))
      throw Error::invalidArgument("setup grids cover different demand grids");
   if (extraCostE < 0.0)
      throw Error::invalidArgument("extra cost fraction must be non-negative");

   const DemandGrid& demand = premiumGrid.demand;
   size_t nCapacities = demand.capacitiesGb.size();
   size_t nThroughputs = demand.throughputsTps.size();

   BreakpointLine line;
   line.extraCostE = extraCostE;
   line.premiumTechnology = premiumGrid.technology;
   line.alternativeTechnology = alternativeGrid.technology;

   size_t tech1Cells = 0, tech2Cells = 0, classifiedCells = 0;
   for (size_t ci = 0; ci < nCapacities; ++ci) {
      bool sawTech1 = false;
      bool flipped = false;
      std::optional<double> crossing;
      for (size_t ti = 0; ti < nThroughputs; ++ti) {
         auto preference = classifyCell(premiumGrid.cell(ci, ti), alternativeGrid.cell(ci, ti), extraCostE);
         if (preference == CellPreference::infeasible)
            continue;
         ++classifiedCells;
         if (preference == CellPreference::tech1) {
            ++tech1Cells;
            if (!sawTech1) {
               sawTech1 = true;
               crossing = demand.throughputsTps[ti];
            }
         } else {
            ++tech2Cells;
            if (sawTech1)
               flipped = true; // preference fell back below a premium cell
         }
      }
      if (crossing)
         line.crossings.push_back({demand.capacitiesGb[ci], *crossing});
      if (flipped)
         line.nonMonotoneCapacities.push_back(demand.capacitiesGb[ci]);
   }

   if (classifiedCells == 0)
      throw Error::invalidArgument("demand grid has no cell feasible for either technology");
   if (tech2Cells == 0) {
      line.degenerate = BreakpointDegenerate::allTech1;
      return line;
   }
   if (tech1Cells == 0) {
      line.degenerate = BreakpointDegenerate::allTech2;
      return line;
   }

   // Through-origin least squares over the crossing points, in TB and KHz
   double sumCr = 0, sumCc = 0;
   for (const auto& point : line.crossings) {
      double capacityTb = point.capacityGb / 1000.0;
      double rateKhz = point.crossingTps / 1000.0;
      sumCr += capacityTb * rateKhz;
      sumCc += capacityTb * capacityTb;
   }
   line.ratioKhzPerTb = sumCc > 0 ? sumCr / sumCc : 0.0;
   return line;
}
//---------------------------------------------------------------------------
BreakpointLine computeBreakpointFor(const BreakpointInputs& inputs)
{
   SetupGrid premiumGrid = planGrid(inputs.grid, inputs.premium.technology, inputs.premium.profile,
                                    inputs.server, inputs.book, inputs.jobs);
   SetupGrid alternativeGrid = planGrid(inputs.grid, inputs.alternative.technology, inputs.alternative.profile,
                                        inputs.server, inputs.book, inputs.jobs);
   return computeBreakpoint(premiumGrid, alternativeGrid, inputs.extraCostE);
}
//---------------------------------------------------------------------------
std::string toString(SweepParameter parameter)
{
   switch (parameter) {
      case SweepParameter::premiumPrice: return "tech1_price";
      case SweepParameter::alternativePrice: return "tech2_price";
      case SweepParameter::dramPrice: return "dram_price";
   }
   return "unknown";
}
//---------------------------------------------------------------------------
SweepParameter sweepParameterFromString(const std::string& text)
{
   if (text == "tech1_price")
      return SweepParameter::premiumPrice;
   if (text == "tech2_price")
      return SweepParameter::alternativePrice;
   if (text == "dram_price")
      return SweepParameter::dramPrice;
   throw Error::invalidArgument("unknown sweep parameter '" + text + "' (want tech1_price, tech2_price, or dram_price)");
}
//---------------------------------------------------------------------------
std::vector<SweepPoint> sensitivitySweep(SweepParameter parameter, std::span<const double> values,
                                         const BreakpointInputs& inputs)
{
   if (values.empty())
      throw Error::invalidArgument("sensitivity sweep has no values");
   for (size_t i = 0; i < values.size(); ++i) {
      if (!(values[i] > 0.0))
         throw Error::invalidArgument("sweep values must be positive");
      if (i > 0 && values[i] <= values[i - 1])
         throw Error::invalidArgument("sweep values must be strictly ascending");
   }

   std::vector<SweepPoint> sweep;
   sweep.reserve(values.size());
   for (double value : values) {
      BreakpointInputs adjusted = inputs;
      switch (parameter) {
         case SweepParameter::premiumPrice: adjusted.premium.technology.usdPerGb = value; break;
         case SweepParameter::alternativePrice: adjusted.alternative.technology.usdPerGb = value; break;
         case SweepParameter::dramPrice: adjusted.book.dramUsdPerGb = value; break;
      }
      sweep.push_back({value, computeBreakpointFor(adjusted)});
   }
   return sweep;
}
//---------------------------------------------------------------------------
} // namespace tracar
