#include "tracar/money.hpp"
//---------------------------------------------------------------------------
#include <cmath>
#include <cstdlib>
//---------------------------------------------------------------------------
namespace tracar {
//---------------------------------------------------------------------------
Money Money::fromUsd(double usd)
// llround rounds half away from zero, so $x.005 becomes x+1 cents for
// positive amounts and symmetrically for negative ones
{
   return Money{std::llround(usd * 100.0)};
}
//---------------------------------------------------------------------------
std::string Money::toString() const
{
   int64_t absCents = cents < 0 ? -cents : cents;
   int64_t dollars = absCents / 100;
   int64_t rest = absCents % 100;

   std::string digits = std::to_string(dollars);
   std::string grouped;
   grouped.reserve(digits.size() + digits.size() / 3);
   for (size_t i = 0; i < digits.size(); ++i) {
      if (i != 0 && (digits.size() - i) % 3 == 0)
         grouped += ',';
      grouped += digits[i];
   }

   std::string out = cents < 0 ? "-$" : "$";
   out += grouped;
   out += '.';
   out += static_cast<char>('0' + rest / 10);
   out += static_cast<char>('0' + rest % 10);
   return out;
}
//---------------------------------------------------------------------------
} // namespace tracar
