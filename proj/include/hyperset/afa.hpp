#ifndef HYPERSET_AFA_HPP
#define HYPERSET_AFA_HPP

#include <span>
#include <vector>

#include "hyperset/store.hpp"

namespace hyperset {

// The solution of a graph: one hyperset per node, with a fallback value
// (the empty set) for everything outside the node table, which is what the
// decoration equivalence forces for sets that never occur as edge sources.
struct Decoration {
    std::vector<HypersetId> values;  // aligned with the decorated system
    HypersetId fallback;             // the empty set of the decoration's mode
};

// The unique decoration of a system: assignment(x) = intern(sys, x, mode).
// Nodes with no out-edges decorate to the empty set.
Decoration decorate(const ApgSystem& sys, Mode mode);

// The hyperset { <names[x], names[y]> : edge (x, y) } encoding the edge
// relation of `sys` over the given node names.  The naming must be injective
// (two nodes with equal names would merge edges); throws Error otherwise.
HypersetId encode_graph(const ApgSystem& sys, std::span<const HypersetId> names);

// A graph re-read from a hyperset of pairs: nodes are the pair components,
// edges the decoded pairs.
struct DecodedGraph {
    ApgSystem system;
    std::vector<HypersetId> names;  // node -> the hyperset naming it
};

// Throws NotAGraphError when some element of g is not an ordered pair.
DecodedGraph decode_graph(HypersetId g);

// Solves g as a graph: decorate(decode_graph(g), Set), with nodes absent as
// edge sources mapping to the empty set.
Decoration afa_decorate(HypersetId g);

// Checks the decoration equivalence for d against g: for every node x and
// every z in elements(d(x)) some edge (x, y) has d(y) = z, and for every
// edge (x, y), d(y) is a member of d(x).
bool verify_decoration(HypersetId g, const Decoration& d);

}  // namespace hyperset

#endif  // HYPERSET_AFA_HPP
