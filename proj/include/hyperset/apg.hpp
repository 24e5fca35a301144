#ifndef HYPERSET_APG_HPP
#define HYPERSET_APG_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hyperset/types.hpp"

namespace hyperset {

// A finite system of set equations as a directed multigraph: node k stands
// for one unknown, its ordered (possibly repeated) child list for the
// right-hand side.  Edge multiplicities matter only in Multiset mode.
// Mutable while being built; passed by const reference afterwards.
class ApgSystem {
public:
    NodeId add_node(std::string label = {}) {
        children_.emplace_back();
        labels_.push_back(std::move(label));
        return static_cast<NodeId>(children_.size() - 1);
    }

    void add_edge(NodeId from, NodeId to) {
        require(from);
        require(to);
        children_[from].push_back(to);
        ++edge_count_;
    }

    std::size_t node_count() const noexcept { return children_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }

    std::span<const NodeId> children(NodeId v) const {
        require(v);
        return children_[v];
    }

    const std::string& label(NodeId v) const {
        require(v);
        return labels_[v];
    }

    void set_label(NodeId v, std::string label) {
        require(v);
        labels_[v] = std::move(label);
    }

    bool valid_node(NodeId v) const noexcept { return v < children_.size(); }

private:
    void require(NodeId v) const {
        if (!valid_node(v)) throw Error("invalid node id " + std::to_string(v));
    }

    std::vector<std::vector<NodeId>> children_;
    std::vector<std::string> labels_;
    std::size_t edge_count_ = 0;
};

// A system together with a distinguished root node.
struct RootedSystem {
    ApgSystem system;
    NodeId root = 0;
};

// Builds a system from (name, child names) equations.  One node per distinct
// name; a name that is only referenced becomes a childless node.  Throws
// DuplicateNameError when a name is defined twice.
ApgSystem from_equations(
    const std::vector<std::pair<std::string, std::vector<std::string>>>& defs);

// First node carrying the given label, if any.
std::optional<NodeId> node_by_label(const ApgSystem& sys, std::string_view label);

// The subsystem induced by the nodes reachable from `root`, with edge order
// preserved.  `to_new` maps old node ids to new ones (kNoNode when dropped).
struct RestrictResult {
    ApgSystem system;
    NodeId root = 0;
    std::vector<NodeId> to_new;
    std::vector<NodeId> to_old;
};

RestrictResult reachable_restrict(const ApgSystem& sys, NodeId root);

}  // namespace hyperset

#endif  // HYPERSET_APG_HPP
