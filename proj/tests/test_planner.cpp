#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
//---------------------------------------------------------------------------
#include "oracle.hpp"
#include "tracar/errors.hpp"
#include <random>
#include <set>
//---------------------------------------------------------------------------
using namespace tracar;
using namespace tracar::testing;
//---------------------------------------------------------------------------
namespace {
//---------------------------------------------------------------------------
/// Grids over the fixture demand range used throughout this file
DemandGrid fixtureGrid()
{
   return {{20000, 40000, 60000, 80000}, {20000, 60000, 120000, 180000, 240000}};
}
//---------------------------------------------------------------------------
/// Inject a synthetic cost surface: totals are costFn(capacityTb, rateKhz)
SetupGrid injectGrid(const DemandGrid& demand, std::string technology, double (*costFn)(double, double))
{
   SetupGrid grid;
   grid.demand = demand;
   grid.technology = std::move(technology);
   for (double capacity : demand.capacitiesGb) {
      for (double throughput : demand.throughputsTps) {
         SetupCandidate cell;
         cell.technology = grid.technology;
         cell.nNodes = 1;
         cell.dramGbPerNode = 1;
         cell.storageGbPerNode = capacity;
         cell.memoryFraction = 0.1;
         cell.achievedTps = throughput;
         cell.cost.totalUsd = Money::fromUsd(costFn(capacity / 1000.0, throughput / 1000.0));
         grid.cells.emplace_back(cell);
      }
   }
   return grid;
}
//---------------------------------------------------------------------------
std::set<std::pair<size_t, size_t>> premiumCells(const SetupGrid& premium, const SetupGrid& alt, double e)
{
   std::set<std::pair<size_t, size_t>> cells;
   for (size_t ci = 0; ci < premium.demand.capacitiesGb.size(); ++ci)
      for (size_t ti = 0; ti < premium.demand.throughputsTps.size(); ++ti) {
         const auto& p = premium.cell(ci, ti);
         const auto& a = alt.cell(ci, ti);
         bool preferPremium = false;
         if (p && !a)
            preferPremium = true;
         else if (p && a)
            preferPremium = static_cast<double>(p->cost.totalUsd.cents) <=
                            (1.0 + e) * static_cast<double>(a->cost.totalUsd.cents);
         if (preferPremium)
            cells.insert({ci, ti});
      }
   return cells;
}
//---------------------------------------------------------------------------
} // namespace
//---------------------------------------------------------------------------
TEST_CASE("cheapest setup on the shipped fixture reproduces the reference configurations")
{
   CostBook book = defaultCostBook();
   ServerModel server = defaultServerModel();
   DemandPoint demand{60000, 120000};

   auto profile3dxp = loadFixtureProfile("f1_3dxp.profile");
   auto profileFlash = loadFixtureProfile("f1_flash.profile");

   SUBCASE("3dxp: 3 nodes at 300 GB DRAM each, $81,150 total")
   {
      auto setup = cheapestSetup(demand, book.technology("3dxp"), profile3dxp, server, book);
      CHECK(setup.nNodes == 3);
      CHECK(setup.memoryFraction == 0.015);
      CHECK(setup.dramGbPerNode == doctest::Approx(300.0));
      CHECK(setup.storageGbPerNode == doctest::Approx(20000.0));
      CHECK(setup.cost.dramUsd.cents == 495000);
      CHECK(setup.cost.storageUsd.cents == 7200000);
      CHECK(setup.cost.totalUsd.cents == 8115000);
      CHECK(setup.achievedTps >= demand.throughputTps);

      auto oracle = bruteForceCheapestSetup(demand, book.technology("3dxp"), profile3dxp, server, book);
      REQUIRE(oracle.has_value());
      CHECK(sameCandidate(setup, *oracle));
   }
   SUBCASE("flash: 19 nodes at 600 GB DRAM each, $101,300 total")
   {
      auto setup = cheapestSetup(demand, book.technology("flash"), profileFlash, server, book);
      CHECK(setup.nNodes == 19);
      CHECK(setup.memoryFraction == 0.19);
      CHECK(setup.dramGbPerNode == doctest::Approx(600.0));
      CHECK(setup.cost.dramUsd.cents == 6270000);
      CHECK(setup.cost.storageUsd.cents == 1200000);
      CHECK(setup.cost.totalUsd.cents == 10130000);

      auto oracle = bruteForceCheapestSetup(demand, book.technology("flash"), profileFlash, server, book);
      REQUIRE(oracle.has_value());
      CHECK(sameCandidate(setup, *oracle));
   }
}
//---------------------------------------------------------------------------
TEST_CASE("cheapest setup basics")
{
   CostBook book = defaultCostBook();
   ServerModel server{1024.0, 64};
   const auto& tech = book.technology("flash");

   SUBCASE("throughput-insensitive profile picks minimal fraction and node count")
   {
      auto profile = makeProfile("flash", {{0.01, 5000}, {0.1, 5000}, {0.9, 5000}});
      auto setup = cheapestSetup({1000, 9000}, tech, profile, server, book);
      CHECK(setup.nNodes == 2); // 9000 tps needs two 5000 tps nodes
      CHECK(setup.memoryFraction == 0.01);
   }
   SUBCASE("unreachable rate reports the binding constraint")
   {
      auto profile = makeProfile("flash", {{0.5, 100}});
      std::string reason;
      CHECK_FALSE(findCheapestSetup({1000, 100'000}, tech, profile, server, book, &reason).has_value());
      CHECK(reason.find("throughput") != std::string::npos);
      CHECK_THROWS_AS(cheapestSetup({1000, 100'000}, tech, profile, server, book), Error);
      try {
         cheapestSetup({1000, 100'000}, tech, profile, server, book);
      } catch (const Error& e) {
         CHECK((e.code() == ErrorCode::infeasible));
      }
   }
   SUBCASE("capacity beyond every node reports the capacity constraint")
   {
      auto profile = makeProfile("flash", {{0.5, 1'000'000}});
      // 64 nodes x 32768 GB per node < 3e6 GB
      std::string reason;
      CHECK_FALSE(findCheapestSetup({3'000'000, 100}, tech, profile, server, book, &reason).has_value());
      CHECK(reason.find("capacity") != std::string::npos);
   }
   SUBCASE("cost ties resolve to the lowest memory fraction")
   {
      // capacity so small that every fraction's DRAM rounds to the same
      // cent, leaving the tie-break to decide
      auto profile = makeProfile("flash", {{0.1, 1000}, {0.2, 1000}, {0.5, 1000}});
      DemandPoint demand{0.01, 500};
      auto setup = cheapestSetup(demand, tech, profile, server, book);
      CHECK(setup.nNodes == 1);
      CHECK(setup.memoryFraction == 0.1);
      auto oracle = bruteForceCheapestSetup(demand, tech, profile, server, book);
      REQUIRE(oracle.has_value());
      CHECK(sameCandidate(setup, *oracle));
   }
   SUBCASE("demand must be positive")
   {
      auto profile = makeProfile("flash", {{0.5, 1000}});
      CHECK_THROWS_AS(cheapestSetup({0, 100}, tech, profile, server, book), Error);
   }
   SUBCASE("empty profile is rejected")
   {
      ThroughputProfile empty;
      empty.technology = "flash";
      CHECK_THROWS_AS(cheapestSetup({1000, 100}, tech, empty, server, book), Error);
   }
   SUBCASE("duplicate profile fractions are rejected")
   {
      auto profile = makeProfile("flash", {{0.1, 500}, {0.1, 2000}});
      CHECK_THROWS_AS(cheapestSetup({1000, 100}, tech, profile, server, book), Error);
   }
}
//---------------------------------------------------------------------------
TEST_CASE("plan grid")
{
   CostBook book = defaultCostBook();
   ServerModel server = defaultServerModel();
   const auto& tech = book.technology("3dxp");
   auto profile = loadFixtureProfile("f1_3dxp.profile");

   SUBCASE("a 1x1 grid equals the single-point search")
   {
      DemandGrid grid{{60000}, {120000}};
      auto setups = planGrid(grid, tech, profile, server, book);
      REQUIRE(setups.cells.size() == 1);
      REQUIRE(setups.cell(0, 0).has_value());
      auto single = cheapestSetup({60000, 120000}, tech, profile, server, book);
      CHECK(sameCandidate(*setups.cell(0, 0), single));
   }
   SUBCASE("every cell equals the brute-force oracle")
   {
      auto grid = fixtureGrid();
      auto setups = planGrid(grid, tech, profile, server, book, 4);
      for (size_t ci = 0; ci < grid.capacitiesGb.size(); ++ci)
         for (size_t ti = 0; ti < grid.throughputsTps.size(); ++ti) {
            DemandPoint demand{grid.capacitiesGb[ci], grid.throughputsTps[ti]};
            auto oracle = bruteForceCheapestSetup(demand, tech, profile, server, book);
            REQUIRE(setups.cell(ci, ti).has_value() == oracle.has_value());
            if (oracle)
               CHECK(sameCandidate(*setups.cell(ci, ti), *oracle));
         }
   }
   SUBCASE("cost never falls along either axis")
   {
      auto grid = fixtureGrid();
      auto setups = planGrid(grid, tech, profile, server, book);
      for (size_t ci = 0; ci < grid.capacitiesGb.size(); ++ci)
         for (size_t ti = 0; ti < grid.throughputsTps.size(); ++ti) {
            if (!setups.cell(ci, ti))
               continue;
            auto total = setups.cell(ci, ti)->cost.totalUsd.cents;
            if (ci > 0 && setups.cell(ci - 1, ti))
               CHECK(total >= setups.cell(ci - 1, ti)->cost.totalUsd.cents);
            if (ti > 0 && setups.cell(ci, ti - 1))
               CHECK(total >= setups.cell(ci, ti - 1)->cost.totalUsd.cents);
         }
   }
   SUBCASE("infeasible cells are marked, not fatal")
   {
      DemandGrid grid{{60000}, {120000, 1e9}};
      auto setups = planGrid(grid, tech, profile, server, book);
      CHECK(setups.cell(0, 0).has_value());
      CHECK_FALSE(setups.cell(0, 1).has_value());
   }
   SUBCASE("grid axes are validated")
   {
      CHECK_THROWS_AS(planGrid({{}, {1}}, tech, profile, server, book), Error);
      CHECK_THROWS_AS(planGrid({{2, 1}, {1}}, tech, profile, server, book), Error);
      CHECK_THROWS_AS(planGrid({{-1, 1}, {1}}, tech, profile, server, book), Error);
   }
}
//---------------------------------------------------------------------------
TEST_CASE("planner equals exhaustive enumeration on randomized instances")
{
   std::mt19937_64 rng(2024);
   auto randint = [&](uint64_t lo, uint64_t hi) { return lo + rng() % (hi - lo + 1); };

   for (int instance = 0; instance < 25; ++instance) {
      CostBook book;
      book.dramUsdPerGb = static_cast<double>(randint(1, 1200)) / 100.0;
      book.processorUsdPerNode = static_cast<double>(randint(50, 1000));
      book.miscUsdPerNode = static_cast<double>(randint(100, 3000));
      StorageTechnology tech{"t", static_cast<double>(randint(5, 300)) / 100.0, 10, 10, 4,
                             static_cast<double>(randint(500, 40000))};
      book.technologies = {tech};
      ServerModel server{static_cast<double>(randint(64, 2048)), randint(1, 64)};

      ThroughputProfile profile;
      profile.technology = "t";
      size_t nPoints = randint(1, 16);
      double fraction = 0;
      double tps = static_cast<double>(randint(50, 2000));
      for (size_t p = 0; p < nPoints; ++p) {
         fraction += static_cast<double>(randint(1, 60)) / 1000.0;
         if (fraction > 1.0)
            break;
         profile.points.push_back({fraction, 0.0, tps});
         tps += static_cast<double>(randint(0, 3000));
      }
      if (profile.points.empty())
         profile.points.push_back({0.5, 0.0, tps});

      DemandGrid grid;
      size_t nCapacities = randint(1, 10), nThroughputs = randint(1, 10);
      double capacity = 0, throughput = 0;
      for (size_t i = 0; i < nCapacities; ++i)
         grid.capacitiesGb.push_back(capacity += static_cast<double>(randint(100, 50000)));
      for (size_t i = 0; i < nThroughputs; ++i)
         grid.throughputsTps.push_back(throughput += static_cast<double>(randint(100, 40000)));

      auto setups = planGrid(grid, tech, profile, server, book, 2);
      for (size_t ci = 0; ci < nCapacities; ++ci)
         for (size_t ti = 0; ti < nThroughputs; ++ti) {
            DemandPoint demand{grid.capacitiesGb[ci], grid.throughputsTps[ti]};
            auto oracle = bruteForceCheapestSetup(demand, tech, profile, server, book);
            REQUIRE(setups.cell(ci, ti).has_value() == oracle.has_value());
            if (oracle)
               CHECK(sameCandidate(*setups.cell(ci, ti), *oracle));
         }
   }
}
//---------------------------------------------------------------------------
TEST_CASE("breakpoint classification")
{
   SUBCASE("identical cost surfaces are degenerate all-premium")
   {
      auto demand = fixtureGrid();
      auto surface = [](double c, double r) { return 2.0 * c + r; };
      auto premium = injectGrid(demand, "t1", surface);
      auto alt = injectGrid(demand, "t2", surface);
      auto line = computeBreakpoint(premium, alt, 0.0);
      CHECK((line.degenerate == BreakpointDegenerate::allTech1));
   }
   SUBCASE("linear cost planes cross at ratio 1 in matched units")
   {
      DemandGrid demand;
      for (int i = 1; i <= 8; ++i) {
         demand.capacitiesGb.push_back(1000.0 * i); // i TB
         demand.throughputsTps.push_back(1000.0 * i); // i KHz
      }
      auto premium = injectGrid(demand, "t1", +[](double c, double r) { return 2.0 * c + r; });
      auto alt = injectGrid(demand, "t2", +[](double c, double r) { return c + 2.0 * r; });
      auto line = computeBreakpoint(premium, alt, 0.0);
      REQUIRE((line.degenerate == BreakpointDegenerate::none));
      // 2C+R <= C+2R exactly when R >= C, so each column crosses at R = C
      REQUIRE(line.crossings.size() == 8);
      for (const auto& crossing : line.crossings)
         CHECK(crossing.crossingTps == crossing.capacityGb);
      CHECK(line.ratioKhzPerTb == doctest::Approx(1.0).epsilon(1e-9));
      CHECK(line.nonMonotoneCapacities.empty());
   }
   SUBCASE("premium-only and alternative-only degeneracy")
   {
      auto demand = fixtureGrid();
      auto cheap = injectGrid(demand, "t1", +[](double c, double r) { return c + r; });
      auto pricey = injectGrid(demand, "t2", +[](double c, double r) { return 10.0 * (c + r); });
      CHECK((computeBreakpoint(cheap, pricey, 0.0).degenerate == BreakpointDegenerate::allTech1));
      CHECK((computeBreakpoint(pricey, cheap, 0.0).degenerate == BreakpointDegenerate::allTech2));
   }
   SUBCASE("a column that flips twice is flagged and uses the lowest crossing")
   {
      DemandGrid demand{{1000}, {1000, 2000, 3000}};
      SetupGrid premium = injectGrid(demand, "t1", +[](double, double) { return 1.0; });
      SetupGrid alt = injectGrid(demand, "t2", +[](double, double) { return 1.0; });
      // premium wins at the bottom and top, loses in the middle
      alt.cells[0]->cost.totalUsd = Money::fromUsd(2.0);
      premium.cells[1]->cost.totalUsd = Money::fromUsd(3.0);
      alt.cells[2]->cost.totalUsd = Money::fromUsd(2.0);
      auto line = computeBreakpoint(premium, alt, 0.0);
      REQUIRE(line.crossings.size() == 1);
      CHECK(line.crossings[0].crossingTps == 1000.0);
      REQUIRE(line.nonMonotoneCapacities.size() == 1);
      CHECK(line.nonMonotoneCapacities[0] == 1000.0);
   }
   SUBCASE("shape mismatch and negative extra cost are rejected")
   {
      auto demand = fixtureGrid();
      auto other = DemandGrid{{1000}, {1000}};
      auto a = injectGrid(demand, "t1", +[](double c, double r) { return c + r; });
      auto b = injectGrid(other, "t2", +[](double c, double r) { return c + r; });
      CHECK_THROWS_AS(computeBreakpoint(a, b, 0.0), Error);
      auto c = injectGrid(demand, "t2", +[](double cc, double rr) { return cc + rr; });
      CHECK_THROWS_AS(computeBreakpoint(a, c, -0.1), Error);
   }
}
//---------------------------------------------------------------------------
TEST_CASE("fixture breakpoint behaves like a real grid")
{
   CostBook book = defaultCostBook();
   ServerModel server = defaultServerModel();
   BreakpointInputs inputs;
   inputs.grid = fixtureGrid();
   inputs.premium = {book.technology("3dxp"), loadFixtureProfile("f1_3dxp.profile")};
   inputs.alternative = {book.technology("flash"), loadFixtureProfile("f1_flash.profile")};
   inputs.server = server;
   inputs.book = book;

   auto premiumGrid = planGrid(inputs.grid, inputs.premium.technology, inputs.premium.profile, server, book);
   auto altGrid = planGrid(inputs.grid, inputs.alternative.technology, inputs.alternative.profile, server, book);

   SUBCASE("baseline is non-degenerate with a crossing per column")
   {
      auto line = computeBreakpoint(premiumGrid, altGrid, 0.0);
      CHECK((line.degenerate == BreakpointDegenerate::none));
      CHECK(line.ratioKhzPerTb > 0.0);
      CHECK(line.crossings.size() == inputs.grid.capacitiesGb.size());
      for (const auto& crossing : line.crossings) {
         CHECK(crossing.crossingTps >= inputs.grid.throughputsTps.front());
         CHECK(crossing.crossingTps <= inputs.grid.throughputsTps.back());
      }
   }
   SUBCASE("classification matches direct cost recomputation")
   {
      auto line = computeBreakpoint(premiumGrid, altGrid, 0.05);
      auto cells = premiumCells(premiumGrid, altGrid, 0.05);
      // every crossing is the lowest premium cell of its column
      for (const auto& crossing : line.crossings) {
         size_t ci = 0;
         while (inputs.grid.capacitiesGb[ci] != crossing.capacityGb)
            ++ci;
         size_t ti = 0;
         while (inputs.grid.throughputsTps[ti] != crossing.crossingTps)
            ++ti;
         CHECK(cells.count({ci, ti}) == 1);
         for (size_t below = 0; below < ti; ++below)
            CHECK(cells.count({ci, below}) == 0);
      }
   }
   SUBCASE("raising the extra cost only grows the premium region")
   {
      std::vector<double> es{0.0, 0.05, 0.10, 0.20};
      std::set<std::pair<size_t, size_t>> previous;
      double previousRatio = std::numeric_limits<double>::infinity();
      for (double e : es) {
         auto cells = premiumCells(premiumGrid, altGrid, e);
         for (const auto& cell : previous)
            CHECK(cells.count(cell) == 1);
         auto line = computeBreakpoint(premiumGrid, altGrid, e);
         if (line.degenerate == BreakpointDegenerate::none) {
            CHECK(line.ratioKhzPerTb <= previousRatio);
            previousRatio = line.ratioKhzPerTb;
         }
         previous = std::move(cells);
      }
   }
}
//---------------------------------------------------------------------------
TEST_CASE("sensitivity sweeps")
{
   CostBook book = defaultCostBook();
   BreakpointInputs inputs;
   inputs.grid = fixtureGrid();
   inputs.premium = {book.technology("3dxp"), loadFixtureProfile("f1_3dxp.profile")};
   inputs.alternative = {book.technology("flash"), loadFixtureProfile("f1_flash.profile")};
   inputs.server = defaultServerModel();
   inputs.book = book;

   SUBCASE("a singleton sweep at the current price is the identity")
   {
      auto baseline = computeBreakpointFor(inputs);
      double values[] = {0.20};
      auto sweep = sensitivitySweep(SweepParameter::alternativePrice, values, inputs);
      REQUIRE(sweep.size() == 1);
      CHECK(sweep[0].line.ratioKhzPerTb == baseline.ratioKhzPerTb);
      CHECK(sweep[0].line.crossings.size() == baseline.crossings.size());
   }
   SUBCASE("cheaper flash pushes the breakpoint ratio up")
   {
      double values[] = {0.05, 0.10, 0.15, 0.20};
      auto sweep = sensitivitySweep(SweepParameter::alternativePrice, values, inputs);
      for (const auto& point : sweep)
         CHECK((point.line.degenerate == BreakpointDegenerate::none));
      // iterate prices downward: ratio must never fall
      for (size_t i = sweep.size() - 1; i > 0; --i)
         CHECK(sweep[i - 1].line.ratioKhzPerTb >= sweep[i].line.ratioKhzPerTb);
   }
   SUBCASE("cheaper 3dxp pulls the breakpoint ratio down")
   {
      // below ~$0.9/GB the premium wins the whole fixture grid
      double values[] = {0.90, 1.00, 1.10, 1.20};
      auto sweep = sensitivitySweep(SweepParameter::premiumPrice, values, inputs);
      for (const auto& point : sweep)
         CHECK((point.line.degenerate == BreakpointDegenerate::none));
      for (size_t i = sweep.size() - 1; i > 0; --i)
         CHECK(sweep[i - 1].line.ratioKhzPerTb <= sweep[i].line.ratioKhzPerTb);
   }
   SUBCASE("values must be positive and ascending")
   {
      double bad[] = {0.2, 0.1};
      CHECK_THROWS_AS(sensitivitySweep(SweepParameter::dramPrice, bad, inputs), Error);
      double zero[] = {0.0, 0.1};
      CHECK_THROWS_AS(sensitivitySweep(SweepParameter::dramPrice, zero, inputs), Error);
      std::vector<double> empty;
      CHECK_THROWS_AS(sensitivitySweep(SweepParameter::dramPrice, empty, inputs), Error);
   }
   SUBCASE("sweep parameter names round-trip")
   {
      CHECK((sweepParameterFromString("tech1_price") == SweepParameter::premiumPrice));
      CHECK((sweepParameterFromString("tech2_price") == SweepParameter::alternativePrice));
      CHECK((sweepParameterFromString("dram_price") == SweepParameter::dramPrice));
      CHECK_THROWS_AS(sweepParameterFromString("nvme_price"), Error);
   }
}
