#include "tracar/btree.hpp"
#include "tracar/errors.hpp"
//---------------------------------------------------------------------------
namespace tracar {
//---------------------------------------------------------------------------
static constexpr uint64_t childRefBytes = 8;
//---------------------------------------------------------------------------
BTreeModel buildBtreeLayout(uint64_t nKeys, uint32_t keySizeBytes, uint32_t valueSizeBytes,
                            uint32_t pageSizeBytes, uint32_t nodePages)
{
   if (nKeys == 0)
      throw Error::invalidArgument("b-tree layout needs at least one key");
   if (keySizeBytes == 0 || valueSizeBytes == 0 || pageSizeBytes == 0 || nodePages == 0)
      throw Error::invalidArgument("b-tree layout sizes must be positive");

   BTreeModel tree;
   tree.nKeys = nKeys;
   tree.nodeSizeBytes = static_cast<uint64_t>(pageSizeBytes) * nodePages;
   tree.fanout = tree.nodeSizeBytes / (keySizeBytes + childRefBytes);
   tree.leafCapacity = tree.nodeSizeBytes / (static_cast<uint64_t>(keySizeBytes) + valueSizeBytes);
   if (tree.fanout < 2 || tree.leafCapacity < 2)
      throw Error::invalidArgument("node too small to fit two entries");

   uint64_t width = (nKeys + tree.leafCapacity - 1) / tree.leafCapacity;
   tree.levelWidths.push_back(width);
   tree.nPages = width;
   while (width > 1) {
      width = (width + tree.fanout - 1) / tree.fanout;
      tree.levelWidths.push_back(width);
      tree.nPages += width;
   }
   tree.height = static_cast<uint32_t>(tree.levelWidths.size());
   return tree;
}
//---------------------------------------------------------------------------
void pagePath(const BTreeModel& tree, uint64_t leafIndex, std::vector<uint64_t>& out)
{
   out.resize(tree.height);
   uint64_t index = leafIndex;
   uint64_t offset = 0;
   // Walk leaf -> root; emit root first so the replay order is top-down
   for (uint32_t level = 0; level < tree.height; ++level) {
      out[tree.height - 1 - level] = offset + index;
      offset += tree.levelWidths[level];
      index /= tree.fanout;
   }
}
//---------------------------------------------------------------------------
} // namespace tracar
