#pragma once
//---------------------------------------------------------------------------
#include "tracar/planner.hpp"
#include <optional>
#include <span>
//---------------------------------------------------------------------------
// Provider-facing workflow: fit a growth trend from observations, compare
// it to the breakpoint, recommend a technology, extrapolate a horizon
// demand, and emit a multi-year provisioning schedule.
//---------------------------------------------------------------------------
namespace tracar {
//---------------------------------------------------------------------------
/// One measurement of the dataset: size and offered load at a point in time
struct Observation {
   double tYears = 0;
   double capacityGb = 0;
   double throughputTps = 0;
};
//---------------------------------------------------------------------------
/// Linear growth of capacity and load over time. The ratio is the
/// throughput slope over the capacity slope, in KHz/TB (= tps/GB).
struct Trend {
   double ratioKhzPerTb = 0;
   /// Earliest observation; anchor of affine extrapolation
   Observation base;
   double capacityGrowthGbPerYear = 0;
   double throughputGrowthTpsPerYear = 0;
};
//---------------------------------------------------------------------------
/// Least-squares linear fits of capacity(t) and throughput(t); with two
/// observations this is the difference quotient. Throws
/// Error::invalidArgument on fewer than two observations, coincident
/// times, or non-positive capacity growth.
Trend fitTrend(std::span<const Observation> observations);
//---------------------------------------------------------------------------
enum class ExtrapolationMode {
   /// Capacity grows affinely; throughput lies exactly on the trend ray
   throughOrigin,
   /// Both axes grow affinely from the base observation
   affine
};
//---------------------------------------------------------------------------
std::string toString(ExtrapolationMode mode);
ExtrapolationMode extrapolationModeFromString(const std::string& text);
//---------------------------------------------------------------------------
DemandPoint extrapolate(const Trend& trend, double horizonYears, ExtrapolationMode mode);
//---------------------------------------------------------------------------
/// Technology choice plus the horizon setups under both technologies.
/// chosenTechnology is the premium technology iff the trend ratio exceeds
/// the breakpoint ratio; a tie selects the non-premium technology.
struct Recommendation {
   std::string chosenTechnology;
   double trendRatio = 0;
   double breakpointRatio = 0;
   /// trend - breakpoint; unset when the breakpoint is degenerate
   std::optional<double> margin;
   bool breakpointDegenerate = false;
   /// Cheapest setup at the horizon demand under the chosen technology
   std::optional<SetupCandidate> horizonSetup;
   /// Same demand under the other technology, for comparison
   std::optional<SetupCandidate> alternativeSetup;
   /// 1 - chosen/alternative total; set when both setups exist
   std::optional<double> savingsFraction;
};
//---------------------------------------------------------------------------
/// techA/techB may come in either order; the premium one is the higher
/// USD/GB. Throws Error::infeasible when the horizon demand fits neither
/// technology.
Recommendation recommend(const Trend& trend, const BreakpointLine& breakpoint, const DemandPoint& horizonDemand,
                         const TechProfile& techA, const TechProfile& techB, const ServerModel& server,
                         const CostBook& book);
//---------------------------------------------------------------------------
/// Yearly provisioning plan along the affine trend
struct ScheduleRow {
   int year = 0;
   DemandPoint demand;
   SetupCandidate setup;
   /// Nodes added over the previous year, never negative
   uint64_t newNodes = 0;
};
//---------------------------------------------------------------------------
/// Cheapest setup per year k = 0..horizonYears at the affine demand.
/// Throws Error::infeasible naming the first year that cannot be met.
std::vector<ScheduleRow> serverSchedule(const Trend& trend, int horizonYears, const TechProfile& tech,
                                        const ServerModel& server, const CostBook& book);
//---------------------------------------------------------------------------
} // namespace tracar
