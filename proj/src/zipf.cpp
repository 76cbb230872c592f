#include "tracar/zipf.hpp"
#include "tracar/errors.hpp"
//---------------------------------------------------------------------------
#include <algorithm>
#include <cmath>
#include <cstdio>
//---------------------------------------------------------------------------
namespace tracar {
//---------------------------------------------------------------------------
namespace {
//---------------------------------------------------------------------------
/// Probability mass of ranks 1..hot under exponent s, with rank logs
/// precomputed so one evaluation is a single pass of exp calls
double massOfTopRanks(const std::vector<double>& logRank, uint64_t hot, double s)
{
   double hotSum = 0.0, totalSum = 0.0;
   for (uint64_t i = 0; i < logRank.size(); ++i) {
      double w = std::exp(-s * logRank[i]);
      totalSum += w;
      if (i < hot)
         hotSum += w;
   }
   return hotSum / totalSum;
}
//---------------------------------------------------------------------------
} // namespace
//---------------------------------------------------------------------------
double calibrateZipf(uint64_t nItems, double hotKeyFraction, double hotMassFraction)
{
   if (nItems < 10)
      throw Error::invalidArgument("zipf calibration needs at least 10 items");
   if (!(hotKeyFraction > 0.0 && hotKeyFraction < 1.0))
      throw Error::invalidArgument("hot_key_fraction must be in (0,1)");
   if (!(hotMassFraction > hotKeyFraction && hotMassFraction < 1.0))
      throw Error::invalidArgument("require hot_key_fraction < hot_mass_fraction < 1");

   auto hot = static_cast<uint64_t>(std::ceil(hotKeyFraction * static_cast<double>(nItems)));
   hot = std::min(hot, nItems);

   std::vector<double> logRank(nItems);
   for (uint64_t i = 0; i < nItems; ++i)
      logRank[i] = std::log(static_cast<double>(i + 1));

   constexpr double tolerance = 1e-3;
   constexpr double loBracket = 0.0, hiBracket = 16.0;

   // The mass of a fixed top set is strictly increasing in s, so the
   // bracket endpoints bound everything reachable.
   double massLo = massOfTopRanks(logRank, hot, loBracket);
   double massHi = massOfTopRanks(logRank, hot, hiBracket);
   if (std::abs(massLo - hotMassFraction) <= tolerance)
      return loBracket;
   if (hotMassFraction < massLo || hotMassFraction > massHi) {
      char msg[160];
      std::snprintf(msg, sizeof(msg),
                    "zipf target mass %.6f unreachable for s in [0,16]: achievable range [%.6f, %.6f]",
                    hotMassFraction, massLo, massHi);
      throw Error::invalidArgument(msg);
   }

   double lo = loBracket, hi = hiBracket;
   for (int iter = 0; iter < 200; ++iter) {
      double mid = 0.5 * (lo + hi);
      double mass = massOfTopRanks(logRank, hot, mid);
      if (std::abs(mass - hotMassFraction) <= tolerance)
         return mid;
      if (mass < hotMassFraction)
         lo = mid;
      else
         hi = mid;
   }
   throw Error::internal("zipf bisection failed to converge");
}
//---------------------------------------------------------------------------
ZipfSampler::ZipfSampler(const ZipfSpec& spec)
{
   if (spec.nItems == 0)
      throw Error::invalidArgument("zipf sampler needs at least one item");
   if (spec.exponent < 0.0)
      throw Error::invalidArgument("zipf exponent must be non-negative");

   cdf_.resize(spec.nItems);
   double sum = 0.0;
   for (uint64_t i = 0; i < spec.nItems; ++i) {
      sum += std::exp(-spec.exponent * std::log(static_cast<double>(i + 1)));
      cdf_[i] = sum;
   }
   double inv = 1.0 / sum;
   for (auto& c : cdf_)
      c *= inv;
   cdf_.back() = 1.0;
}
//---------------------------------------------------------------------------
uint64_t ZipfSampler::sample(std::mt19937_64& rng) const
{
   double u = nextUnitDouble(rng);
   auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
   if (it == cdf_.end())
      --it;
   return static_cast<uint64_t>(it - cdf_.begin()) + 1;
}
//---------------------------------------------------------------------------
} // namespace tracar
