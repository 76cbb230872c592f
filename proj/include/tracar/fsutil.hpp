#pragma once
//---------------------------------------------------------------------------
#include <filesystem>
#include <string>
//---------------------------------------------------------------------------
namespace tracar {
//---------------------------------------------------------------------------
/// Write contents to a sibling temp file and rename it over the target, so
/// readers never observe a partial artifact. Throws Error::io on failure.
void atomicWriteFile(const std::filesystem::path& path, const std::string& contents);
//---------------------------------------------------------------------------
/// Read a whole file; throws Error::io if it cannot be opened
std::string readFile(const std::filesystem::path& path);
//---------------------------------------------------------------------------
} // namespace tracar
