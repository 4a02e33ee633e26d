#include "rlk/block_partition.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace rlk {

BlockPartition BlockPartition::from_blocks(int n, std::vector<std::vector<int>> blocks) {
    if (n < 0) throw InvalidBlocks("node count must be nonnegative");
    std::vector<int> seen(static_cast<size_t>(n), 0);
    for (auto& b : blocks) {
        if (b.empty()) throw InvalidBlocks("empty block");
        std::sort(b.begin(), b.end());
        for (int i : b) {
            if (i < 0 || i >= n) throw InvalidBlocks("node index out of range");
            if (seen[static_cast<size_t>(i)]++) throw InvalidBlocks("node appears in two blocks");
        }
    }
    for (int i = 0; i < n; ++i)
        if (!seen[static_cast<size_t>(i)]) throw InvalidBlocks("node missing from all blocks");
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });

    BlockPartition p;
    p.n_ = n;
    p.blocks_ = std::move(blocks);
    p.block_index_.assign(static_cast<size_t>(n), -1);
    for (size_t bi = 0; bi < p.blocks_.size(); ++bi)
        for (int i : p.blocks_[bi]) p.block_index_[static_cast<size_t>(i)] = static_cast<int>(bi);
    return p;
}

BlockPartition BlockPartition::from_assignment(const std::vector<int>& assignment) {
    std::map<int, std::vector<int>> groups;
    for (size_t i = 0; i < assignment.size(); ++i)
        groups[assignment[i]].push_back(static_cast<int>(i));
    std::vector<std::vector<int>> blocks;
    blocks.reserve(groups.size());
    for (auto& [id, members] : groups) blocks.push_back(std::move(members));
    return from_blocks(static_cast<int>(assignment.size()), std::move(blocks));
}

BlockPartition BlockPartition::singletons(int n) {
    std::vector<std::vector<int>> blocks;
    blocks.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) blocks.push_back({i});
    return from_blocks(n, std::move(blocks));
}

int BlockPartition::block_of(int i) const {
    if (i < 0 || i >= n_) throw InvalidBlocks("node index out of range");
    return block_index_[static_cast<size_t>(i)];
}

bool BlockPartition::refines(const BlockPartition& coarser) const {
    if (n_ != coarser.n_) throw InvalidBlocks("partitions over different node sets");
    for (const auto& b : blocks_) {
        int target = coarser.block_of(b.front());
        for (int i : b)
            if (coarser.block_of(i) != target) return false;
    }
    return true;
}

std::string BlockPartition::str() const {
    std::ostringstream out;
    for (const auto& b : blocks_) {
        out << '{';
        for (size_t j = 0; j < b.size(); ++j) {
            if (j) out << ',';
            out << (b[j] + 1);
        }
        out << '}';
    }
    return out.str();
}

}  // namespace rlk
