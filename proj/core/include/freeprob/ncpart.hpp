#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace freeprob {

/// A non-crossing partition of {1..n}, kept in canonical form: blocks
/// sorted by their minima, elements ascending within each block.
/// Equality and ordering are structural on this form.
struct NcPartition {
    int n = 0;
    std::vector<std::vector<int>> blocks;

    bool operator==(const NcPartition&) const = default;

    /// Debug form "{1,4,5}{2,3}".
    std::string str() const;
};

/// A total colour assignment block-index -> {1,2}, indexed in the
/// canonical block order of the partition it belongs to.
using Colouring = std::vector<int>;

inline constexpr int kDefaultGroundSetCeiling = 14;

/// All of NC(n) in lexicographic order of the block-of-element sequence.
/// Throws std::domain_error for n < 1 or n > ceiling.
std::vector<NcPartition> enumerate_nc(int n, int ceiling = kDefaultGroundSetCeiling);

/// Per-block outer flags: true = outer, false = inner. A block V is inner
/// iff some block W has min(W) < min(V) and max(W) > max(V).
std::vector<bool> classify_blocks(const NcPartition& pi);

/// The inner/outer colouring: 1 on outer blocks, 2 on inner ones.
Colouring inner_outer_colouring(const NcPartition& pi);

/// Reverse refinement: pi <= rho iff every block of rho is a union of
/// blocks of pi.
bool leq_refinement(const NcPartition& pi, const NcPartition& rho);

/// pi << rho: pi <= rho and each block W of rho has min(W), max(W)
/// inside a single block of pi.
bool ll_leq(const NcPartition& pi, const NcPartition& rho);

/// All 2^(n-1) interval partitions of {1..n}, canonically ordered.
std::vector<NcPartition> interval_partitions(int n, int ceiling = kDefaultGroundSetCeiling);

/// The unique interval partition rho with pi << rho; its blocks are the
/// convex hulls of the outer blocks of pi.
NcPartition interval_hull(const NcPartition& pi);

/// Indices of the rho-special blocks of pi (blocks sharing both endpoints
/// with a block of rho). Requires pi << rho.
std::vector<std::size_t> special_blocks(const NcPartition& pi, const NcPartition& rho);

/// The colouring o_{pi,rho}: 1 on rho-special blocks, 2 elsewhere.
/// Requires pi << rho.
Colouring special_colouring(const NcPartition& pi, const NcPartition& rho);

/// Builds a canonical NcPartition from a list of blocks (any order).
/// Validates disjointness, coverage and the non-crossing condition.
NcPartition make_partition(int n, std::vector<std::vector<int>> blocks);

}  // namespace freeprob
