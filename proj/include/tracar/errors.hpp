#pragma once
//---------------------------------------------------------------------------
#include <stdexcept>
#include <string>
//---------------------------------------------------------------------------
namespace tracar {
//---------------------------------------------------------------------------
/// Failure category; maps 1:1 onto the C API status codes and CLI exit codes
enum class ErrorCode {
   invalidArgument,
   config,
   infeasible,
   io,
   internal
};
//---------------------------------------------------------------------------
/// The library's only exception type. Everything thrown across a module
/// boundary is an Error; the C API layer turns it back into a status code.
class Error : public std::runtime_error {
   public:
   Error(ErrorCode code, std::string message) : std::runtime_error(std::move(message)), code_(code) {}

   ErrorCode code() const noexcept { return code_; }

   static Error invalidArgument(std::string message) { return {ErrorCode::invalidArgument, std::move(message)}; }
   static Error config(std::string message) { return {ErrorCode::config, std::move(message)}; }
   static Error infeasible(std::string message) { return {ErrorCode::infeasible, std::move(message)}; }
   static Error io(std::string message) { return {ErrorCode::io, std::move(message)}; }
   static Error internal(std::string message) { return {ErrorCode::internal, std::move(message)}; }

   private:
   ErrorCode code_;
};
//---------------------------------------------------------------------------
} // namespace tracar
