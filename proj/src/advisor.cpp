#include "tracar/advisor.hpp"
#include "tracar/errors.hpp"
//---------------------------------------------------------------------------
#include <algorithm>
#include <cmath>
//---------------------------------------------------------------------------
namespace tracar {
//---------------------------------------------------------------------------
namespace {
//---------------------------------------------------------------------------
/// Least-squares slope of y over t
double slope(std::span<const Observation> observations, double Observation::*axis)
{
   double n = static_cast<double>(observations.size());
   double tMean = 0, yMean = 0;
   for (const auto& obs : observations) {
      tMean += obs.tYears;
      yMean += obs.*axis;
   }
   tMean /= n;
   yMean /= n;

   double num = 0, den = 0;
   for (const auto& obs : observations) {
      num += (obs.tYears - tMean) * (obs.*axis - yMean);
      den += (obs.tYears - tMean) * (obs.tYears - tMean);
   }
   if (den == 0.0)
      throw Error::invalidArgument("observations must span at least two distinct times");
   return num / den;
}
//---------------------------------------------------------------------------
} // namespace
//---------------------------------------------------------------------------
Trend fitTrend(std::span<const Observation> observations)
{
   if (observations.size() < 2)
      throw Error::invalidArgument("trend undefined: need at least two observations");
   for (const auto& obs : observations)
      if (!(obs.capacityGb > 0.0 && obs.throughputTps > 0.0))
         throw Error::invalidArgument("observations must have positive capacity and throughput");

   Trend trend;
   trend.capacityGrowthGbPerYear = slope(observations, &Observation::capacityGb);
   trend.throughputGrowthTpsPerYear = slope(observations, &Observation::throughputTps);
   if (!(trend.capacityGrowthGbPerYear > 0.0))
      throw Error::invalidArgument("trend undefined: capacity growth must be positive");
   // KHz/TB equals tps/GB, so no unit factor appears here
   trend.ratioKhzPerTb = trend.throughputGrowthTpsPerYear / trend.capacityGrowthGbPerYear;

   trend.base = *std::min_element(observations.begin(), observations.end(),
                                  [](const Observation& a, const Observation& b) { return a.tYears < b.tYears; });
   return trend;
}
//---------------------------------------------------------------------------
std::string toString(ExtrapolationMode mode)
{
   return mode == ExtrapolationMode::throughOrigin ? "through_origin" : "affine";
}
//---------------------------------------------------------------------------
ExtrapolationMode extrapolationModeFromString(const std::string& text)
{
   if (text == "through_origin")
      return ExtrapolationMode::throughOrigin;
   if (text == "affine")
      return ExtrapolationMode::affine;
   throw Error::invalidArgument("unknown extrapolation mode '" + text + "' (want through_origin or affine)");
}
//---------------------------------------------------------------------------
DemandPoint extrapolate(const Trend& trend, double horizonYears, ExtrapolationMode mode)
{
   if (horizonYears < 0.0)
      throw Error::invalidArgument("horizon must be non-negative");

   DemandPoint demand;
   demand.capacityGb = trend.base.capacityGb + trend.capacityGrowthGbPerYear * horizonYears;
   if (mode == ExtrapolationMode::affine)
      demand.throughputTps = trend.base.throughputTps + trend.throughputGrowthTpsPerYear * horizonYears;
   else
      demand.throughputTps = trend.ratioKhzPerTb * demand.capacityGb;
   return demand;
}
//---------------------------------------------------------------------------
Recommendation recommend(const Trend& trend, const BreakpointLine& breakpoint, const DemandPoint& horizonDemand,
                         const TechProfile& techA, const TechProfile& techB, const ServerModel& server,
                         const CostBook& book)
{
   // The premium technology of the breakpoint rule is the pricier one per GB
   bool aIsPremium = techA.technology.usdPerGb > techB.technology.usdPerGb ||
                     (techA.technology.usdPerGb == techB.technology.usdPerGb &&
                      techA.technology.name < techB.technology.name);
   const TechProfile& premium = aIsPremium ? techA : techB;
   const TechProfile& alternative = aIsPremium ? techB : techA;

   Recommendation rec;
   rec.trendRatio = trend.ratioKhzPerTb;
   rec.breakpointRatio = breakpoint.ratioKhzPerTb;
   rec.breakpointDegenerate = breakpoint.degenerate != BreakpointDegenerate::none;

   bool choosePremium;
   if (breakpoint.degenerate == BreakpointDegenerate::allTech1)
      choosePremium = true; // premium cheaper everywhere on the grid
   else if (breakpoint.degenerate == BreakpointDegenerate::allTech2)
      choosePremium = false;
   else {
      choosePremium = trend.ratioKhzPerTb > breakpoint.ratioKhzPerTb;
      rec.margin = trend.ratioKhzPerTb - breakpoint.ratioKhzPerTb;
   }
   const TechProfile& chosen = choosePremium ? premium : alternative;
   const TechProfile& other = choosePremium ? alternative : premium;
   rec.chosenTechnology = chosen.technology.name;

   rec.horizonSetup = findCheapestSetup(horizonDemand, chosen.technology, chosen.profile, server, book);
   rec.alternativeSetup = findCheapestSetup(horizonDemand, other.technology, other.profile, server, book);
   if (!rec.horizonSetup && !rec.alternativeSetup)
      throw Error::infeasible("horizon demand is infeasible under both technologies");
   if (rec.horizonSetup && rec.alternativeSetup)
      rec.savingsFraction = 1.0 - static_cast<double>(rec.horizonSetup->cost.totalUsd.cents) /
                                      static_cast<double>(rec.alternativeSetup->cost.totalUsd.cents);
   return rec;
}
//---------------------------------------------------------------------------
std::vector<ScheduleRow> serverSchedule(const Trend& trend, int horizonYears, const TechProfile& tech,
                                        const ServerModel& server, const CostBook& book)
{
   if (horizonYears < 1)
      throw Error::invalidArgument("schedule horizon must be at least one year");

   std::vector<ScheduleRow> schedule;
   schedule.reserve(static_cast<size_t>(horizonYears) + 1);
   uint64_t previousNodes = 0;
   for (int year = 0; year <= horizonYears; ++year) {
      ScheduleRow row;
      row.year = year;
      row.demand = extrapolate(trend, year, ExtrapolationMode::affine);
      std::string reason;
      auto setup = findCheapestSetup(row.demand, tech.technology, tech.profile, server, book, &reason);
      if (!setup)
         throw Error::infeasible("year " + std::to_string(year) + " demand is infeasible: " + reason);
      row.setup = *setup;
      row.newNodes = row.setup.nNodes > previousNodes ? row.setup.nNodes - previousNodes : 0;
      previousNodes = row.setup.nNodes;
      schedule.push_back(std::move(row));
   }
   return schedule;
}
//---------------------------------------------------------------------------
} // namespace tracar
