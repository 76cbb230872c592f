#pragma once
//---------------------------------------------------------------------------
#include <cstdint>
#include <vector>
//---------------------------------------------------------------------------
namespace tracar {
//---------------------------------------------------------------------------
/// Static layout of a b-tree over page-aligned, page-multiple nodes.
/// The tree never mutates during a run; only its page geometry matters.
struct BTreeModel {
   uint64_t nKeys = 0;
   /// Children per interior node
   uint64_t fanout = 0;
   /// Entries per leaf node
   uint64_t leafCapacity = 0;
   /// Levels including the leaf level; a single-leaf tree has height 1
   uint32_t height = 0;
   uint64_t nPages = 0;
   uint64_t nodeSizeBytes = 0;
   /// Pages per level, leaf level first, root last
   std::vector<uint64_t> levelWidths;
};
//---------------------------------------------------------------------------
/// Compute the layout: fanout = node / (key + 8-byte child ref),
/// leaf capacity = node / (key + value), minimal height covering nKeys,
/// page count as the sum over full levels. Throws Error::invalidArgument
/// if a node cannot fit two entries.
BTreeModel buildBtreeLayout(uint64_t nKeys, uint32_t keySizeBytes, uint32_t valueSizeBytes,
                            uint32_t pageSizeBytes, uint32_t nodePages = 1);
//---------------------------------------------------------------------------
/// Leaf index holding a 1-based key rank when keys fill leaves in rank order
inline uint64_t leafOfRank(const BTreeModel& tree, uint64_t rank)
{
   return (rank - 1) / tree.leafCapacity;
}
//---------------------------------------------------------------------------
/// Page ids on the root-to-leaf path of the given leaf, root first.
/// Ids are dense: leaves come first, then each interior level upward.
/// `out` is overwritten and sized to the tree height.
void pagePath(const BTreeModel& tree, uint64_t leafIndex, std::vector<uint64_t>& out);
//---------------------------------------------------------------------------
} // namespace tracar
