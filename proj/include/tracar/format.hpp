#pragma once
//---------------------------------------------------------------------------
#include <string>
//---------------------------------------------------------------------------
namespace tracar {
//---------------------------------------------------------------------------
/// Shortest decimal form that parses back to exactly the same double,
/// locale independent. Used everywhere artifacts must be byte-stable.
std::string formatDouble(double value);
//---------------------------------------------------------------------------
} // namespace tracar
