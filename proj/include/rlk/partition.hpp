#pragma once

#include <gmpxx.h>

#include <vector>

#include "rlk/block_partition.hpp"

namespace rlk {

using BigInt = mpz_class;

/// Multiset of block sizes, stored weakly decreasing.
class BlockProfile {
public:
    explicit BlockProfile(std::vector<int> parts);
    static BlockProfile of(const BlockPartition& p);

    const std::vector<int>& parts() const { return parts_; }
    int n() const;
    int block_count() const { return static_cast<int>(parts_.size()); }

    friend bool operator==(const BlockProfile& a, const BlockProfile& b) = default;

private:
    std::vector<int> parts_;
};

inline constexpr int kDefaultEnumerationGuard = 12;

/// All set partitions of {0..n-1} via restricted growth strings, in the
/// strings' lexicographic order. Throws TooLarge past the guard.
std::vector<BlockPartition> enumerate_partitions(int n, int guard = kDefaultEnumerationGuard);

/// Stirling numbers of the second kind, S(n,k) = k·S(n-1,k) + S(n-1,k-1).
BigInt stirling2(int n, int k);

/// Bell numbers, B_n = Σ_k S(n,k).
BigInt bell(int n);

/// Number of partitions with the given profile: n!/(∏λ_i!·∏m_s!), where
/// m_s counts parts of size s.
BigInt profile_multiplicity(const BlockProfile& lambda);

struct DimensionTriple {
    int dim_node;
    int dim_geom;
    int dim_rel;
    friend bool operator==(const DimensionTriple&, const DimensionTriple&) = default;
};

/// (n, k, n-k) for a partition with k blocks.
DimensionTriple dimension_law(int n, const BlockPartition& p);

/// Merge the named blocks (indices into p.blocks()) into one; the block
/// count drops by |which|-1.
BlockPartition coalesce(const BlockPartition& p, const std::vector<int>& which);

/// Split one block into the given m >= 2 parts; the block count rises by
/// m-1. Inverse to coalesce on matching arguments.
BlockPartition thicken(const BlockPartition& p, int block,
                       const std::vector<std::vector<int>>& split);

}  // namespace rlk
