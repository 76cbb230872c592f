#include "tracar/format.hpp"
//---------------------------------------------------------------------------
#include <cstdio>
#include <cstdlib>
//---------------------------------------------------------------------------
namespace tracar {
//---------------------------------------------------------------------------
std::string formatDouble(double value)
{
   char buffer[40];
   // integral values print without exponent or decimals
   if (value == static_cast<double>(static_cast<long long>(value)) && value > -1e15 && value < 1e15) {
      std::snprintf(buffer, sizeof(buffer), "%lld", static_cast<long long>(value));
      return buffer;
   }
   for (int precision = 1; precision <= 17; ++precision) {
      std::snprintf(buffer, sizeof(buffer), "%.*g", precision, value);
      if (std::strtod(buffer, nullptr) == value)
         break;
   }
   return buffer;
}
//---------------------------------------------------------------------------
} // namespace tracar
