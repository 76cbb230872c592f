#pragma once
//---------------------------------------------------------------------------
#include <cstdint>
#include <random>
#include <vector>
//---------------------------------------------------------------------------
namespace tracar {
//---------------------------------------------------------------------------
/// A rank-frequency distribution: probability of rank i proportional to
/// i^(-exponent), ranks 1..nItems
struct ZipfSpec {
   uint64_t nItems = 0;
   double exponent = 0;
   uint64_t seed = 0;
};
//---------------------------------------------------------------------------
/// Uniform double in [0,1) from the top 53 bits of one engine draw.
/// std::uniform_real_distribution is implementation-defined; this is not.
inline double nextUnitDouble(std::mt19937_64& rng)
{
   return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}
//---------------------------------------------------------------------------
/// Find the exponent s such that the top ceil(hotKeyFraction * nItems)
/// ranks carry hotMassFraction of the total probability mass, within 1e-3,
/// by bisection on s in [0, 16]. Throws Error::invalidArgument when the
/// target is unreachable inside the bracket, reporting the achieved bounds.
double calibrateZipf(uint64_t nItems, double hotKeyFraction, double hotMassFraction);
//---------------------------------------------------------------------------
/// Draws ranks from a ZipfSpec by CDF inversion. Construction is O(n),
/// sampling O(log n). Deterministic for a given engine state.
class ZipfSampler {
   public:
   explicit ZipfSampler(const ZipfSpec& spec);

   /// 1-based rank
   uint64_t sample(std::mt19937_64& rng) const;

   uint64_t itemCount() const { return cdf_.size(); }

   private:
   std::vector<double> cdf_;
};
//---------------------------------------------------------------------------
} // namespace tracar
