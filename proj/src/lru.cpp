#include "tracar/lru.hpp"
#include "tracar/errors.hpp"
//---------------------------------------------------------------------------
namespace tracar {
//---------------------------------------------------------------------------
LruPageCache::LruPageCache(uint64_t capacityPages) : capacity_(capacityPages)
{
   if (capacity_ == 0)
      throw Error::invalidArgument("LRU cache capacity must be at least one page");
   index_.reserve(capacity_ * 2);
}
//---------------------------------------------------------------------------
bool LruPageCache::touch(uint64_t pageId, bool write)
{
   auto it = index_.find(pageId);
   if (it != index_.end()) {
      ++hits_;
      it->second->dirty |= write;
      order_.splice(order_.begin(), order_, it->second);
      return false;
   }

   ++misses_;
   if (index_.size() == capacity_) {
      const Entry& victim = order_.back();
      if (victim.dirty)
         ++dirtyEvictions_;
      index_.erase(victim.page);
      order_.pop_back();
   }
   order_.push_front(Entry{pageId, write});
   index_.emplace(pageId, order_.begin());
   return true;
}
//---------------------------------------------------------------------------
} // namespace tracar
