#include "hyperset/afa.hpp"

#include <unordered_map>

#include "hyperset/settheory.hpp"

namespace hyperset {

Decoration decorate(const ApgSystem& sys, Mode mode) {
    Decoration d;
    d.values = intern_all(sys, mode);
    d.fallback = compose({}, mode);
    return d;
}

HypersetId encode_graph(const ApgSystem& sys, std::span<const HypersetId> names) {
    if (names.size() != sys.node_count())
        throw Error("encode_graph: one name per node required");

    std::unordered_map<HypersetId, NodeId> seen;
    for (NodeId v = 0; v < sys.node_count(); ++v) {
        auto [it, fresh] = seen.emplace(names[v], v);
        if (!fresh)
            throw Error("encode_graph: node naming is not injective (nodes " +
                        std::to_string(it->second) + " and " + std::to_string(v) +
                        " denote equal hypersets)");
    }

    std::vector<HypersetId> pairs;
    for (NodeId v = 0; v < sys.node_count(); ++v)
        for (NodeId c : sys.children(v))
            pairs.push_back(kuratowski_pair(names[v], names[c]));
    return tuple(pairs);
}

DecodedGraph decode_graph(HypersetId g) {
    DecodedGraph dg;
    std::unordered_map<HypersetId, NodeId> node_of;
    auto get_node = [&](HypersetId name) {
        auto [it, fresh] = node_of.emplace(name, kNoNode);
        if (fresh) {
            it->second = dg.system.add_node();
            dg.names.push_back(name);
        }
        return it->second;
    };

    for (HypersetId e : elements(g)) {
        auto pair = decode_pair(e);
        if (!pair) throw NotAGraphError();
        NodeId from = get_node(pair->first);
        NodeId to = get_node(pair->second);
        dg.system.add_edge(from, to);
    }
    return dg;
}

Decoration afa_decorate(HypersetId g) {
    DecodedGraph dg = decode_graph(g);
    return decorate(dg.system, Mode::Set);
}

bool verify_decoration(HypersetId g, const Decoration& d) {
    DecodedGraph dg = decode_graph(g);
    if (d.values.size() != dg.system.node_count()) return false;

    for (NodeId x = 0; x < dg.system.node_count(); ++x) {
        // Forward: every edge (x, y) puts d(y) into d(x).
        for (NodeId y : dg.system.children(x))
            if (!member(d.values[y], d.values[x])) return false;

        // Backward: every element of d(x) is reached by some edge.
        for (HypersetId z : elements(d.values[x])) {
            bool witnessed = false;
            for (NodeId y : dg.system.children(x)) {
                if (equal(d.values[y], z)) {
                    witnessed = true;
                    break;
                }
            }
            if (!witnessed) return false;
        }
    }
    return true;
}

}  // namespace hyperset
