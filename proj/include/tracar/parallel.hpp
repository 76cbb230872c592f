#pragma once
//---------------------------------------------------------------------------
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>
//---------------------------------------------------------------------------
namespace tracar {
//---------------------------------------------------------------------------
/// Run body(i) for i in [0, count) on up to `jobs` worker threads.
/// jobs = 0 means hardware concurrency. Workers pull indices from a shared
/// counter, so results written by index are identical for any worker count.
/// The first exception thrown by a body is rethrown on the caller.
template <typename Body>
void parallelFor(size_t count, unsigned jobs, Body&& body)
{
   if (jobs == 0)
      jobs = std::thread::hardware_concurrency();
   if (jobs <= 1 || count <= 1) {
      for (size_t i = 0; i < count; ++i)
         body(i);
      return;
   }

   std::atomic<size_t> next{0};
   std::atomic<bool> failed{false};
   std::exception_ptr error;
   std::mutex errorLock;

   auto worker = [&] {
      while (!failed.load(std::memory_order_relaxed)) {
         size_t i = next.fetch_add(1, std::memory_order_relaxed);
         if (i >= count)
            return;
         try {
            body(i);
         } catch (...) {
            std::lock_guard guard(errorLock);
            if (!error)
               error = std::current_exception();
            failed.store(true, std::memory_order_relaxed);
            return;
         }
      }
   };

   std::vector<std::thread> pool;
   unsigned nThreads = static_cast<unsigned>(std::min<size_t>(jobs, count));
   pool.reserve(nThreads);
   for (unsigned t = 0; t < nThreads; ++t)
      pool.emplace_back(worker);
   for (auto& thread : pool)
      thread.join();
   if (error)
      std::rethrow_exception(error);
}
//---------------------------------------------------------------------------
} // namespace tracar
