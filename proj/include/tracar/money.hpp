#pragma once
//---------------------------------------------------------------------------
#include <cstdint>
#include <string>
//---------------------------------------------------------------------------
namespace tracar {
//---------------------------------------------------------------------------
/// USD amount held as an exact integer number of cents. Products of
/// fractional quantities and prices are rounded to the cent once, when the
/// Money value is formed; sums of Money values never drift.
struct Money {
   int64_t cents = 0;

   constexpr Money() = default;
   constexpr explicit Money(int64_t cents) : cents(cents) {}

   /// Round a real dollar amount to the nearest cent (half away from zero)
   static Money fromUsd(double usd);
   static constexpr Money fromCents(int64_t cents) { return Money{cents}; }

   double usd() const { return static_cast<double>(cents) / 100.0; }

   constexpr Money operator+(Money other) const { return Money{cents + other.cents}; }
   constexpr Money operator-(Money other) const { return Money{cents - other.cents}; }
   constexpr Money operator*(int64_t factor) const { return Money{cents * factor}; }
   Money& operator+=(Money other) { cents += other.cents; return *this; }
   auto operator<=>(const Money&) const = default;

   /// "$81,150.00" style, locale independent
   std::string toString() const;
};
//---------------------------------------------------------------------------
} // namespace tracar
