#pragma once
//---------------------------------------------------------------------------
#include <cstdint>
#include <list>
#include <unordered_map>
//---------------------------------------------------------------------------
namespace tracar {
//---------------------------------------------------------------------------
/// Page cache with least-recently-used replacement. Counts raw hits and
/// misses (compulsory and capacity alike); the miss-curve layer on top
/// decides which misses it charges.
class LruPageCache {
   public:
   explicit LruPageCache(uint64_t capacityPages);

   /// Access one page; returns true on a miss. A write marks the page dirty.
   bool touch(uint64_t pageId, bool write);

   uint64_t capacity() const { return capacity_; }
   uint64_t size() const { return index_.size(); }
   uint64_t hits() const { return hits_; }
   uint64_t misses() const { return misses_; }
   uint64_t dirtyEvictions() const { return dirtyEvictions_; }

   private:
   struct Entry {
      uint64_t page;
      bool dirty;
   };

   uint64_t capacity_;
   std::list<Entry> order_; // front = most recently used
   std::unordered_map<uint64_t, std::list<Entry>::iterator> index_;
   uint64_t hits_ = 0;
   uint64_t misses_ = 0;
   uint64_t dirtyEvictions_ = 0;
};
//---------------------------------------------------------------------------
} // namespace tracar
