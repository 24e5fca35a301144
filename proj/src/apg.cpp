#include "hyperset/apg.hpp"

#include <unordered_map>

namespace hyperset {

ApgSystem from_equations(
    const std::vector<std::pair<std::string, std::vector<std::string>>>& defs) {
    ApgSystem sys;
    std::unordered_map<std::string, NodeId> node_of;
    auto get_node = [&](const std::string& name) {
        auto it = node_of.find(name);
        if (it != node_of.end()) return it->second;
        NodeId v = sys.add_node(name);
        node_of.emplace(name, v);
        return v;
    };

    std::unordered_map<std::string, bool> defined;
    for (const auto& [name, kids] : defs) {
        if (defined[name]) throw DuplicateNameError(name);
        defined[name] = true;
        NodeId v = get_node(name);
        for (const auto& kid : kids) sys.add_edge(v, get_node(kid));
    }
    return sys;
}

std::optional<NodeId> node_by_label(const ApgSystem& sys, std::string_view label) {
    for (NodeId v = 0; v < sys.node_count(); ++v)
        if (sys.label(v) == label) return v;
    return std::nullopt;
}

RestrictResult reachable_restrict(const ApgSystem& sys, NodeId root) {
    if (!sys.valid_node(root)) throw Error("invalid root node " + std::to_string(root));

    RestrictResult res;
    res.to_new.assign(sys.node_count(), kNoNode);

    // BFS keeps a stable new numbering with the root first.
    std::vector<NodeId> queue{root};
    res.to_new[root] = 0;
    res.to_old.push_back(root);
    for (std::size_t i = 0; i < queue.size(); ++i) {
        NodeId v = queue[i];
        for (NodeId c : sys.children(v)) {
            if (res.to_new[c] != kNoNode) continue;
            res.to_new[c] = static_cast<NodeId>(res.to_old.size());
            res.to_old.push_back(c);
            queue.push_back(c);
        }
    }

    for (NodeId v : res.to_old) res.system.add_node(sys.label(v));
    for (NodeId v : res.to_old) {
        NodeId nv = res.to_new[v];
        for (NodeId c : sys.children(v)) res.system.add_edge(nv, res.to_new[c]);
    }
    res.root = 0;
    return res;
}

}  // namespace hyperset
