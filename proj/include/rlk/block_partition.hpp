#pragma once

#include <string>
#include <vector>

#include "rlk/errors.hpp"

namespace rlk {

/// Set partition of the node index set {0..n-1}. Canonical form: each
/// block sorted ascending, blocks ordered by their minimum element, so
/// structural equality is partition equality.
class BlockPartition {
public:
    BlockPartition() : n_(0) {}

    /// Validates disjoint nonempty covering blocks and canonicalizes.
    static BlockPartition from_blocks(int n, std::vector<std::vector<int>> blocks);

    /// assignment[i] = arbitrary id of the block containing node i.
    static BlockPartition from_assignment(const std::vector<int>& assignment);

    static BlockPartition singletons(int n);

    int n() const { return n_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }

    /// Index of the block containing node i.
    int block_of(int i) const;

    /// True when every block of this partition lies inside a single block
    /// of the coarser partition.
    bool refines(const BlockPartition& coarser) const;

    /// 1-based display form, e.g. "{1,2}{3}".
    std::string str() const;

    friend bool operator==(const BlockPartition& a, const BlockPartition& b) = default;

private:
    int n_;
    std::vector<std::vector<int>> blocks_;
    std::vector<int> block_index_;  // node -> position in blocks_
};

}  // namespace rlk
