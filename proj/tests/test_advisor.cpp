#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
//---------------------------------------------------------------------------
#include "oracle.hpp"
#include "tracar/advisor.hpp"
#include "tracar/errors.hpp"
#include <cmath>
#include <random>
//---------------------------------------------------------------------------
using namespace tracar;
using namespace tracar::testing;
//---------------------------------------------------------------------------
namespace {
//---------------------------------------------------------------------------
/// The running example: 1 TB at 20 Ktps, one year later 11 TB at 40 Ktps
std::vector<Observation> exampleObservations()
{
   return {{0.0, 1000.0, 20000.0}, {1.0, 11000.0, 40000.0}};
}
//---------------------------------------------------------------------------
BreakpointLine plainBreakpoint(double ratio)
{
   BreakpointLine line;
   line.ratioKhzPerTb = ratio;
   line.premiumTechnology = "3dxp";
   line.alternativeTechnology = "flash";
   return line;
}
//---------------------------------------------------------------------------
struct FixturePair {
   CostBook book = defaultCostBook();
   ServerModel server = defaultServerModel();
   TechProfile premium{defaultCostBook().technology("3dxp"), loadFixtureProfile("f1_3dxp.profile")};
   TechProfile alternative{defaultCostBook().technology("flash"), loadFixtureProfile("f1_flash.profile")};
};
//---------------------------------------------------------------------------
} // namespace
//---------------------------------------------------------------------------
TEST_CASE("trend fitting")
{
   SUBCASE("the two-point example yields exactly 2 KHz/TB")
   {
      auto trend = fitTrend(exampleObservations());
      CHECK(trend.ratioKhzPerTb == 2.0);
      CHECK(trend.capacityGrowthGbPerYear == 10000.0);
      CHECK(trend.throughputGrowthTpsPerYear == 20000.0);
      CHECK(trend.base.tYears == 0.0);
      CHECK(trend.base.capacityGb == 1000.0);
   }
   SUBCASE("three collinear points recover the endpoint line")
   {
      auto obs = exampleObservations();
      obs.push_back({0.5, 6000.0, 30000.0});
      auto trend = fitTrend(obs);
      auto endpoints = fitTrend(exampleObservations());
      CHECK(trend.ratioKhzPerTb == doctest::Approx(endpoints.ratioKhzPerTb).epsilon(1e-12));
      CHECK(trend.capacityGrowthGbPerYear == doctest::Approx(endpoints.capacityGrowthGbPerYear).epsilon(1e-12));
   }
   SUBCASE("failure modes")
   {
      std::vector<Observation> one{{0.0, 1000.0, 20000.0}};
      CHECK_THROWS_AS(fitTrend(one), Error);

      std::vector<Observation> sameTime{{1.0, 1000.0, 20000.0}, {1.0, 2000.0, 30000.0}};
      CHECK_THROWS_AS(fitTrend(sameTime), Error);

      std::vector<Observation> flatCapacity{{0.0, 1000.0, 20000.0}, {1.0, 1000.0, 30000.0}};
      CHECK_THROWS_AS(fitTrend(flatCapacity), Error);

      std::vector<Observation> shrinking{{0.0, 2000.0, 20000.0}, {1.0, 1000.0, 30000.0}};
      CHECK_THROWS_AS(fitTrend(shrinking), Error);
   }
   SUBCASE("scaling both axes by the same factor leaves the ratio alone")
   {
      auto base = fitTrend(exampleObservations());
      for (double alpha : {2.0, 0.25, 1024.0}) { // powers of two scale exactly
         auto obs = exampleObservations();
         for (auto& o : obs) {
            o.capacityGb *= alpha;
            o.throughputTps *= alpha;
         }
         CHECK(fitTrend(obs).ratioKhzPerTb == base.ratioKhzPerTb);
      }
      auto obs = exampleObservations();
      for (auto& o : obs) {
         o.capacityGb *= 3.7;
         o.throughputTps *= 3.7;
      }
      CHECK(fitTrend(obs).ratioKhzPerTb == doctest::Approx(base.ratioKhzPerTb).epsilon(1e-12));
   }
}
//---------------------------------------------------------------------------
TEST_CASE("extrapolation")
{
   auto trend = fitTrend(exampleObservations());

   SUBCASE("zero horizon in affine mode returns the base observation")
   {
      auto demand = extrapolate(trend, 0.0, ExtrapolationMode::affine);
      CHECK(demand.capacityGb == trend.base.capacityGb);
      CHECK(demand.throughputTps == trend.base.throughputTps);
   }
   SUBCASE("through-origin throughput sits on the trend ray")
   {
      // base 10 TB growing 10 TB/yr reaches 60 TB after 5 years
      Trend bigger = trend;
      bigger.base = {0.0, 10000.0, 20000.0};
      auto demand = extrapolate(bigger, 5.0, ExtrapolationMode::throughOrigin);
      CHECK(demand.capacityGb == 60000.0);
      CHECK(demand.throughputTps == 120000.0);
   }
   SUBCASE("affine five-year point of the running example")
   {
      auto demand = extrapolate(trend, 5.0, ExtrapolationMode::affine);
      CHECK(demand.capacityGb == 51000.0);
      CHECK(demand.throughputTps == 120000.0);
   }
   SUBCASE("negative horizon is rejected")
   {
      CHECK_THROWS_AS(extrapolate(trend, -1.0, ExtrapolationMode::affine), Error);
   }
   SUBCASE("mode names round-trip")
   {
      CHECK((extrapolationModeFromString("affine") == ExtrapolationMode::affine));
      CHECK((extrapolationModeFromString("through_origin") == ExtrapolationMode::throughOrigin));
      CHECK_THROWS_AS(extrapolationModeFromString("quadratic"), Error);
   }
}
//---------------------------------------------------------------------------
TEST_CASE("recommendation")
{
   FixturePair fx;
   DemandPoint tablePoint{60000.0, 120000.0};

   SUBCASE("a 2.0 trend against a 1.24 breakpoint selects the premium technology")
   {
      auto trend = fitTrend(exampleObservations());
      auto rec = recommend(trend, plainBreakpoint(1.24), tablePoint, fx.premium, fx.alternative, fx.server, fx.book);
      CHECK(rec.chosenTechnology == "3dxp");
      REQUIRE(rec.margin.has_value());
      CHECK(*rec.margin == doctest::Approx(0.76));
      REQUIRE(rec.horizonSetup.has_value());
      REQUIRE(rec.alternativeSetup.has_value());
      CHECK(rec.horizonSetup->cost.totalUsd.cents == 8115000);
      CHECK(rec.alternativeSetup->cost.totalUsd.cents == 10130000);
      REQUIRE(rec.savingsFraction.has_value());
      // 1 - 81150/101300, reported exactly
      CHECK(*rec.savingsFraction == doctest::Approx(0.19891412).epsilon(1e-6));
      CHECK(std::round(*rec.savingsFraction * 1e4) / 1e4 == 0.1989);
   }
   SUBCASE("a 1.0 trend selects the alternative")
   {
      Trend slow = fitTrend(exampleObservations());
      slow.ratioKhzPerTb = 1.0;
      auto rec = recommend(slow, plainBreakpoint(1.24), tablePoint, fx.premium, fx.alternative, fx.server, fx.book);
      CHECK(rec.chosenTechnology == "flash");
   }
   SUBCASE("a tie resolves to the non-premium technology")
   {
      Trend tie = fitTrend(exampleObservations());
      tie.ratioKhzPerTb = 1.24;
      auto rec = recommend(tie, plainBreakpoint(1.24), tablePoint, fx.premium, fx.alternative, fx.server, fx.book);
      CHECK(rec.chosenTechnology == "flash");
   }
   SUBCASE("argument order of the technology pair does not matter")
   {
      auto trend = fitTrend(exampleObservations());
      auto rec = recommend(trend, plainBreakpoint(1.24), tablePoint, fx.alternative, fx.premium, fx.server, fx.book);
      CHECK(rec.chosenTechnology == "3dxp");
   }
   SUBCASE("degenerate breakpoints pick the universally cheaper side")
   {
      auto trend = fitTrend(exampleObservations());
      auto allPremium = plainBreakpoint(0.0);
      allPremium.degenerate = BreakpointDegenerate::allTech1;
      auto rec1 = recommend(trend, allPremium, tablePoint, fx.premium, fx.alternative, fx.server, fx.book);
      CHECK(rec1.chosenTechnology == "3dxp");
      CHECK(rec1.breakpointDegenerate);
      CHECK_FALSE(rec1.margin.has_value());

      auto allAlternative = plainBreakpoint(0.0);
      allAlternative.degenerate = BreakpointDegenerate::allTech2;
      auto rec2 = recommend(trend, allAlternative, tablePoint, fx.premium, fx.alternative, fx.server, fx.book);
      CHECK(rec2.chosenTechnology == "flash");
   }
   SUBCASE("horizon infeasible under both technologies")
   {
      auto trend = fitTrend(exampleObservations());
      DemandPoint absurd{1e9, 1e9};
      CHECK_THROWS_AS(
          recommend(trend, plainBreakpoint(1.24), absurd, fx.premium, fx.alternative, fx.server, fx.book), Error);
   }
   SUBCASE("choice always follows the sign test on fuzzed ratios")
   {
      std::mt19937_64 rng(5);
      auto trend = fitTrend(exampleObservations());
      for (int i = 0; i < 300; ++i) {
         trend.ratioKhzPerTb = static_cast<double>(rng() % 4000) / 1000.0;
         double breakpointRatio = static_cast<double>(rng() % 4000) / 1000.0;
         auto rec = recommend(trend, plainBreakpoint(breakpointRatio), tablePoint, fx.premium, fx.alternative,
                              fx.server, fx.book);
         bool expectPremium = trend.ratioKhzPerTb > breakpointRatio;
         CHECK(rec.chosenTechnology == (expectPremium ? "3dxp" : "flash"));
      }
   }
}
//---------------------------------------------------------------------------
TEST_CASE("server schedule")
{
   FixturePair fx;

   SUBCASE("zero growth provisions everything in year zero")
   {
      Trend flat;
      flat.base = {0.0, 20000.0, 30000.0};
      flat.capacityGrowthGbPerYear = 0.0;
      flat.throughputGrowthTpsPerYear = 0.0;
      flat.ratioKhzPerTb = 1.5;
      auto schedule = serverSchedule(flat, 4, fx.premium, fx.server, fx.book);
      REQUIRE(schedule.size() == 5);
      CHECK(schedule[0].newNodes == schedule[0].setup.nNodes);
      for (size_t year = 1; year < schedule.size(); ++year) {
         CHECK(schedule[year].newNodes == 0);
         CHECK(schedule[year].setup.nNodes == schedule[0].setup.nNodes);
      }
   }
   SUBCASE("growing demand never schedules node removals and telescopes")
   {
      auto trend = fitTrend(exampleObservations());
      auto schedule = serverSchedule(trend, 6, fx.premium, fx.server, fx.book);
      REQUIRE(schedule.size() == 7);
      uint64_t total = 0, previous = 0;
      for (const auto& row : schedule) {
         CHECK(row.setup.nNodes >= previous);
         previous = row.setup.nNodes;
         total += row.newNodes;
      }
      CHECK(total == schedule.back().setup.nNodes);
   }
   SUBCASE("each year equals an independent search at that year's demand")
   {
      auto trend = fitTrend(exampleObservations());
      auto schedule = serverSchedule(trend, 5, fx.premium, fx.server, fx.book);
      auto demand5 = extrapolate(trend, 5.0, ExtrapolationMode::affine);
      auto oracle = bruteForceCheapestSetup(demand5, fx.premium.technology, fx.premium.profile, fx.server, fx.book);
      REQUIRE(oracle.has_value());
      CHECK(sameCandidate(schedule[5].setup, *oracle));
      CHECK(schedule[5].demand.capacityGb == demand5.capacityGb);
   }
   SUBCASE("an infeasible year is named")
   {
      Trend explosive;
      explosive.base = {0.0, 1000.0, 20000.0};
      explosive.capacityGrowthGbPerYear = 2e7; // beyond the whole cluster by year 2
      explosive.throughputGrowthTpsPerYear = 10000.0;
      explosive.ratioKhzPerTb = 1.0;
      CHECK_THROWS_WITH_AS(serverSchedule(explosive, 5, fx.premium, fx.server, fx.book),
                           doctest::Contains("year 2"), Error);
   }
   SUBCASE("horizon must be at least one year")
   {
      auto trend = fitTrend(exampleObservations());
      CHECK_THROWS_AS(serverSchedule(trend, 0, fx.premium, fx.server, fx.book), Error);
   }
}
