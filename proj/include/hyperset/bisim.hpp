#ifndef HYPERSET_BISIM_HPP
#define HYPERSET_BISIM_HPP

#include <cstdint>
#include <vector>

#include "hyperset/apg.hpp"

namespace hyperset {

// A block partition over the nodes of one system.  Blocks are numbered by
// first occurrence scanning nodes in ascending order, so two partitions of
// the same node set compare equal iff they have the same blocks.
struct Partition {
    std::vector<std::uint32_t> block_of;      // node -> block
    std::vector<std::vector<NodeId>> blocks;  // block -> members, ascending

    // Normalizes an arbitrary block assignment (renumber + member lists).
    static Partition from_assignment(const std::vector<std::uint32_t>& raw);

    std::size_t block_count() const noexcept { return blocks.size(); }

    bool same_block(NodeId a, NodeId b) const { return block_of[a] == block_of[b]; }

    // Mutual consistency of block_of and blocks (the type invariant).
    bool consistent() const;

    friend bool operator==(const Partition&, const Partition&) = default;
};

struct MinimizeResult {
    ApgSystem quotient;
    std::vector<NodeId> class_of;  // node -> quotient node
    Partition partition;
};

// Coarsest bisimulation partition and its block graph.  Set mode runs
// Paige-Tarjan ("process the smaller half"); Multiset mode runs signature
// refinement with multiplicity counting.  No two distinct quotient nodes are
// bisimilar, and Set-mode quotient child lists are duplicate-free.
MinimizeResult minimize(const ApgSystem& sys, Mode mode);

// True iff x in sysA and y in sysB are bisimilar (over the disjoint union).
bool bisimilar(const ApgSystem& sysA, NodeId x, const ApgSystem& sysB, NodeId y,
               Mode mode);

// Independent oracle: coarsest stable partition by global signature
// recomputation each round, O(n^2 * rounds).  Must agree with minimize on
// every input; kept deliberately naive.
Partition naive_refine_oracle(const ApgSystem& sys, Mode mode);

}  // namespace hyperset

#endif  // HYPERSET_BISIM_HPP
