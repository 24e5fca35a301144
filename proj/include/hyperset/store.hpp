#ifndef HYPERSET_STORE_HPP
#define HYPERSET_STORE_HPP

#include <deque>
#include <shared_mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "hyperset/apg.hpp"
#include "hyperset/bisim.hpp"

namespace hyperset {

// Canonical numbering and equation text of the subgraph reachable from
// `root`.  The numbering is label-free: signature refinement down to
// singleton blocks (initial blocks by out-degree and a root marker, each
// round renumbered by sorted signatures), then BFS from the root visiting
// children in rank order.  Requires the reachable part to be bisimulation-
// minimal for the mode; equal hypersets always produce byte-identical text.
std::string canonical_equation_text(const ApgSystem& sys, NodeId root, Mode mode);

// The per-process table of canonical hypersets.  Every stored node is one
// node of a bisimulation-minimal graph; no two stored nodes of the same mode
// are bisimilar, so handle identity is set (or multiset) equality.  All
// methods are safe to call concurrently; handles may be shared freely
// between threads.
class CanonStore {
public:
    static CanonStore& global();

    CanonStore() = default;
    CanonStore(const CanonStore&) = delete;
    CanonStore& operator=(const CanonStore&) = delete;

    // Canonicalizes the subgraph reachable from `root` and returns the
    // handle of the root's class.  Any representation of the same hyperset
    // interns to the identical handle.
    HypersetId intern(const ApgSystem& sys, NodeId root, Mode mode);

    // Handle of every node's class, in node order.
    std::vector<HypersetId> intern_all(const ApgSystem& sys, Mode mode);

    // The hyperset whose children are exactly `elems` (up to dedup and
    // reorder in Set mode).  Inverse of children().
    HypersetId compose(std::span<const HypersetId> elems, Mode mode);

    // Child handles: duplicate-free and sorted by the canonical order in Set
    // mode, canonical multiplicities in Multiset mode.
    std::vector<HypersetId> children(HypersetId h) const;

    std::size_t child_count(HypersetId h) const;

    // Handle identity; throws on mode mismatch.
    bool equal(HypersetId a, HypersetId b) const;

    // Strict total order, consistent with equal and stable across runs and
    // insertion orders: shortlex comparison of the canonical texts.
    Ordering order(HypersetId a, HypersetId b) const;

    // The canonical serialization ("x0 = {...};" equations) of h.
    std::string canonical_text(HypersetId h) const;

    // Materializes the stored minimal graph of h, nodes in canonical
    // numbering order with the root at index 0.
    RootedSystem system_of(HypersetId h) const;

    std::size_t size() const;
    HypersetId handle_at(std::size_t i) const;  // enumeration for sweeps

private:
    struct Node {
        Mode mode;
        std::vector<HypersetId> kids;  // sorted canonically
        std::string canon;
    };

    struct VecHash {
        std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept {
            std::size_t h = 0x811c9dc5u;
            for (std::uint32_t x : v) h = (h ^ x) * 0x01000193u * 0x9e3779b9u + 1;
            return h;
        }
    };

    const Node& node(HypersetId h) const;  // caller holds a lock
    HypersetId get_or_insert_locked(Mode mode, std::string text,
                                    const std::vector<std::uint32_t>* child_key);
    void sort_canonically_locked(std::vector<HypersetId>& kids) const;

    mutable std::shared_mutex mutex_;
    std::deque<Node> nodes_;
    std::unordered_map<std::string, std::uint32_t> by_text_[2];
    std::unordered_map<std::vector<std::uint32_t>, std::uint32_t, VecHash>
        by_children_[2];
};

// Conveniences over the global store.
inline HypersetId intern(const ApgSystem& sys, NodeId root, Mode mode) {
    return CanonStore::global().intern(sys, root, mode);
}
inline std::vector<HypersetId> intern_all(const ApgSystem& sys, Mode mode) {
    return CanonStore::global().intern_all(sys, mode);
}
inline HypersetId compose(std::span<const HypersetId> elems, Mode mode) {
    return CanonStore::global().compose(elems, mode);
}
inline HypersetId compose(std::initializer_list<HypersetId> elems, Mode mode) {
    return CanonStore::global().compose(std::span<const HypersetId>(elems), mode);
}
inline std::vector<HypersetId> children(HypersetId h) {
    return CanonStore::global().children(h);
}
inline bool equal(HypersetId a, HypersetId b) {
    return CanonStore::global().equal(a, b);
}
inline Ordering order(HypersetId a, HypersetId b) {
    return CanonStore::global().order(a, b);
}

}  // namespace hyperset

#endif  // HYPERSET_STORE_HPP
