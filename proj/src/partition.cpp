#include "rlk/partition.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace rlk {

BlockProfile::BlockProfile(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw InvalidBlocks("profile needs at least one part");
    for (int p : parts_)
        if (p <= 0) throw InvalidBlocks("profile parts must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
}

BlockProfile BlockProfile::of(const BlockPartition& p) {
    std::vector<int> parts;
    parts.reserve(p.blocks().size());
    for (const auto& b : p.blocks()) parts.push_back(static_cast<int>(b.size()));
    return BlockProfile(std::move(parts));
}

int BlockProfile::n() const {
    int total = 0;
    for (int p : parts_) total += p;
    return total;
}

std::vector<BlockPartition> enumerate_partitions(int n, int guard) {
    if (n < 0) throw InvalidBlocks("node count must be nonnegative");
    if (n > guard)
        throw TooLarge("partition enumeration capped at n = " + std::to_string(guard) +
                       "; got n = " + std::to_string(n));
    std::vector<BlockPartition> out;
    if (n == 0) {
        out.push_back(BlockPartition::from_blocks(0, {}));
        return out;
    }
    // Restricted growth strings: a[0] = 0, a[i] <= 1 + max(a[0..i-1]).
    std::vector<int> a(static_cast<size_t>(n), 0);
    std::vector<int> maxima(static_cast<size_t>(n), 0);  // maxima[i] = max of a[0..i]
    while (true) {
        out.push_back(BlockPartition::from_assignment(a));
        int i = n - 1;
        while (i > 0) {
            if (a[static_cast<size_t>(i)] <= maxima[static_cast<size_t>(i - 1)]) break;
            --i;
        }
        if (i == 0) break;
        ++a[static_cast<size_t>(i)];
        maxima[static_cast<size_t>(i)] =
            std::max(maxima[static_cast<size_t>(i - 1)], a[static_cast<size_t>(i)]);
        for (int j = i + 1; j < n; ++j) {
            a[static_cast<size_t>(j)] = 0;
            maxima[static_cast<size_t>(j)] = maxima[static_cast<size_t>(j - 1)];
        }
    }
    return out;
}

BigInt stirling2(int n, int k) {
    if (n < 0 || k < 0) throw InvalidBlocks("stirling2 arguments must be nonnegative");
    if (k > n) return 0;
    if (n == 0) return 1;  // S(0,0); k > n handled above
    if (k == 0) return 0;
    // One row of the triangle at a time.
    std::vector<BigInt> row(static_cast<size_t>(k) + 1, 0);
    row[0] = 1;  // S(0,0)
    for (int m = 1; m <= n; ++m) {
        for (int j = std::min(m, k); j >= 1; --j)
            row[static_cast<size_t>(j)] =
                j * row[static_cast<size_t>(j)] + row[static_cast<size_t>(j) - 1];
        row[0] = 0;
    }
    return row[static_cast<size_t>(k)];
}

BigInt bell(int n) {
    if (n < 0) throw InvalidBlocks("bell argument must be nonnegative");
    BigInt total = 0;
    for (int k = 0; k <= n; ++k) total += stirling2(n, k);
    return total;
}

BigInt profile_multiplicity(const BlockProfile& lambda) {
    BigInt numerator;
    mpz_fac_ui(numerator.get_mpz_t(), static_cast<unsigned long>(lambda.n()));
    BigInt denominator = 1;
    std::map<int, int> size_counts;
    for (int part : lambda.parts()) {
        BigInt f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(part));
        denominator *= f;
        ++size_counts[part];
    }
    for (const auto& [size, count] : size_counts) {
        BigInt f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(count));
        denominator *= f;
    }
    return numerator / denominator;
}

DimensionTriple dimension_law(int n, const BlockPartition& p) {
    if (p.n() != n) throw InvalidBlocks("partition is not over an n-node set");
    int k = p.block_count();
    return DimensionTriple{n, k, n - k};
}

BlockPartition coalesce(const BlockPartition& p, const std::vector<int>& which) {
    std::set<int> picked(which.begin(), which.end());
    if (picked.size() < 2) throw InvalidBlocks("coalesce needs at least two distinct blocks");
    for (int b : picked)
        if (b < 0 || b >= p.block_count()) throw InvalidBlocks("block index out of range");
    std::vector<std::vector<int>> blocks;
    std::vector<int> merged;
    for (int b = 0; b < p.block_count(); ++b) {
        const auto& members = p.blocks()[static_cast<size_t>(b)];
        if (picked.count(b))
            merged.insert(merged.end(), members.begin(), members.end());
        else
            blocks.push_back(members);
    }
    blocks.push_back(std::move(merged));
    return BlockPartition::from_blocks(p.n(), std::move(blocks));
}

BlockPartition thicken(const BlockPartition& p, int block,
                       const std::vector<std::vector<int>>& split) {
    if (block < 0 || block >= p.block_count()) throw InvalidSplit("block index out of range");
    if (split.size() < 2) throw InvalidSplit("split needs at least two parts");
    const auto& target = p.blocks()[static_cast<size_t>(block)];
    std::set<int> remaining(target.begin(), target.end());
    for (const auto& part : split) {
        if (part.empty()) throw InvalidSplit("empty split part");
        for (int i : part)
            if (!remaining.erase(i)) throw InvalidSplit("split part is not a subset of the block");
    }
    if (!remaining.empty()) throw InvalidSplit("split does not cover the block");
    std::vector<std::vector<int>> blocks;
    for (int b = 0; b < p.block_count(); ++b)
        if (b != block) blocks.push_back(p.blocks()[static_cast<size_t>(b)]);
    for (const auto& part : split) blocks.push_back(part);
    return BlockPartition::from_blocks(p.n(), std::move(blocks));
}

}  // namespace rlk
