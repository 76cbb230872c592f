#pragma once
//---------------------------------------------------------------------------
#include "tracar/model.hpp"
#include "tracar/simulator.hpp"
#include <optional>
#include <span>
#include <vector>
//---------------------------------------------------------------------------
// Cheapest-valid-configuration search per demand point, grid classification
// between two technologies, breakpoint-ratio extraction, the extra-cost
// variant, and price-sensitivity sweeps.
//---------------------------------------------------------------------------
namespace tracar {
//---------------------------------------------------------------------------
/// Rectangular set of (capacity, throughput) requirements
struct DemandGrid {
   std::vector<double> capacitiesGb;
   std::vector<double> throughputsTps;

   size_t cellCount() const { return capacitiesGb.size() * throughputsTps.size(); }
   bool sameShape(const DemandGrid& other) const;
};
//---------------------------------------------------------------------------
/// Throws Error::invalidArgument unless both axes are non-empty, strictly
/// ascending, and positive
void validateDemandGrid(const DemandGrid& grid);
//---------------------------------------------------------------------------
/// Cheapest setup (or infeasible) for every grid cell of one technology.
/// Cells are stored row-major: cell(ci, ti) = cells[ci * throughputs + ti].
struct SetupGrid {
   DemandGrid demand;
   std::string technology;
   std::vector<std::optional<SetupCandidate>> cells;

   const std::optional<SetupCandidate>& cell(size_t capacityIdx, size_t throughputIdx) const
   {
      return cells[capacityIdx * demand.throughputsTps.size() + throughputIdx];
   }
};
//---------------------------------------------------------------------------
/// The technology-preference boundary over a demand grid, summarized as the
/// slope of a through-origin line in KHz/TB (numerically equal to tps/GB)
enum class BreakpointDegenerate { none, allTech1, allTech2 };
//---------------------------------------------------------------------------
struct CrossingPoint {
   double capacityGb = 0;
   double crossingTps = 0;
};
//---------------------------------------------------------------------------
struct BreakpointLine {
   double ratioKhzPerTb = 0;
   std::vector<CrossingPoint> crossings;
   double extraCostE = 0;
   BreakpointDegenerate degenerate = BreakpointDegenerate::none;
   /// tech1 of the E% rule: the technology with higher USD/GB
   std::string premiumTechnology;
   std::string alternativeTechnology;
   /// Capacity columns whose preference flipped more than once; the lowest
   /// crossing was used for those
   std::vector<double> nonMonotoneCapacities;
};
//---------------------------------------------------------------------------
/// One technology plus the profile that describes it
struct TechProfile {
   StorageTechnology technology;
   ThroughputProfile profile;
};
//---------------------------------------------------------------------------
/// Cheapest feasible (node count, memory fraction) pair for one demand
/// point, searching n in [1, maxNodes] and fractions over the profile's
/// sampled points (no interpolation). Per-node capacity is capacity/n and
/// per-node required rate throughput/n; a pair is feasible iff the profile
/// meets the per-node rate and the setup passes validateSetup. Ties are
/// broken by fewer nodes, then lower memory fraction. Returns nullopt when
/// no pair fits; the binding constraint is reported via whyInfeasible.
std::optional<SetupCandidate> findCheapestSetup(const DemandPoint& demand, const StorageTechnology& tech,
                                                const ThroughputProfile& profile, const ServerModel& server,
                                                const CostBook& book, std::string* whyInfeasible = nullptr);
//---------------------------------------------------------------------------
/// As findCheapestSetup, but throws Error::infeasible instead of returning nullopt
SetupCandidate cheapestSetup(const DemandPoint& demand, const StorageTechnology& tech,
                             const ThroughputProfile& profile, const ServerModel& server,
                             const CostBook& book);
//---------------------------------------------------------------------------
/// Cell-wise findCheapestSetup; infeasible cells are marked, not fatal.
/// Cells are independent and may be computed on `jobs` workers.
SetupGrid planGrid(const DemandGrid& grid, const StorageTechnology& tech, const ThroughputProfile& profile,
                   const ServerModel& server, const CostBook& book, unsigned jobs = 1);
//---------------------------------------------------------------------------
/// Classify each cell between the premium grid (tech1) and the alternative
/// grid: tech1 is preferred iff cost1 <= (1+extraCostE) * cost2, or the
/// alternative is infeasible there. Per capacity column the crossing is the
/// lowest throughput preferring tech1; the ratio is the least-squares slope
/// of a through-origin line over the crossings. Grids must share one
/// demand grid.
BreakpointLine computeBreakpoint(const SetupGrid& premiumGrid, const SetupGrid& alternativeGrid,
                                 double extraCostE);
//---------------------------------------------------------------------------
/// Everything one breakpoint computation needs. The premium slot must hold
/// the technology with the higher USD/GB.
struct BreakpointInputs {
   DemandGrid grid;
   TechProfile premium;
   TechProfile alternative;
   ServerModel server;
   CostBook book;
   double extraCostE = 0;
   unsigned jobs = 1;
};
//---------------------------------------------------------------------------
/// planGrid for both technologies, then computeBreakpoint
BreakpointLine computeBreakpointFor(const BreakpointInputs& inputs);
//---------------------------------------------------------------------------
/// Which price a sensitivity sweep varies
enum class SweepParameter { premiumPrice, alternativePrice, dramPrice };
//---------------------------------------------------------------------------
std::string toString(SweepParameter parameter);
SweepParameter sweepParameterFromString(const std::string& text);
//---------------------------------------------------------------------------
struct SweepPoint {
   double value = 0;
   BreakpointLine line;
};
//---------------------------------------------------------------------------
/// Re-run the plan + breakpoint pipeline once per price value, everything
/// else (profiles, seeds, premium designation) held fixed. Values must be
/// positive and ascending.
std::vector<SweepPoint> sensitivitySweep(SweepParameter parameter, std::span<const double> values,
                                         const BreakpointInputs& inputs);
//---------------------------------------------------------------------------
} // namespace tracar
