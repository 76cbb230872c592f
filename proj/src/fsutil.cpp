#include "tracar/fsutil.hpp"
#include "tracar/errors.hpp"
//---------------------------------------------------------------------------
#include <cstdio>
#include <fstream>
#include <sstream>
//---------------------------------------------------------------------------
namespace tracar {
//---------------------------------------------------------------------------
void atomicWriteFile(const std::filesystem::path& path, const std::string& contents)
{
   std::filesystem::path temp = path;
   temp += ".tmp";
   {
      std::ofstream out(temp, std::ios::binary | std::ios::trunc);
      if (!out)
         throw Error::io("cannot open '" + temp.string() + "' for writing");
      out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
      out.flush();
      if (!out) {
         std::error_code ignored;
         std::filesystem::remove(temp, ignored);
         throw Error::io("write failed for '" + temp.string() + "'");
      }
   }
   std::error_code ec;
   std::filesystem::rename(temp, path, ec);
   if (ec) {
      std::error_code ignored;
      std::filesystem::remove(temp, ignored);
      throw Error::io("cannot rename '" + temp.string() + "' to '" + path.string() + "': " + ec.message());
   }
}
//---------------------------------------------------------------------------
std::string readFile(const std::filesystem::path& path)
{
   std::ifstream in(path, std::ios::binary);
   if (!in)
      throw Error::io("cannot open '" + path.string() + "'");
   std::ostringstream buffer;
   buffer << in.rdbuf();
   return buffer.str();
}
//---------------------------------------------------------------------------
} // namespace tracar
