#include "hyperset/store.hpp"

#include <algorithm>
#include <cassert>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace hyperset {

namespace {

struct CanonicalNumbering {
    std::vector<NodeId> canon_of;  // original node -> canonical index (kNoNode if unreachable)
    std::vector<NodeId> order;     // canonical index -> original node
};

// Label-free canonical numbering of the part reachable from `root`.  The
// graph must be minimal for the mode: refinement has to reach singleton
// blocks, which makes the numbering a complete invariant of the pointed
// graph up to isomorphism.
CanonicalNumbering canonical_numbering(const ApgSystem& sys, NodeId root, Mode mode) {
    std::vector<NodeId> reach;
    std::vector<NodeId> local(sys.node_count(), kNoNode);
    reach.push_back(root);
    local[root] = 0;
    for (std::size_t i = 0; i < reach.size(); ++i)
        for (NodeId c : sys.children(reach[i]))
            if (local[c] == kNoNode) {
                local[c] = static_cast<NodeId>(reach.size());
                reach.push_back(c);
            }
    const std::size_t k = reach.size();

    std::vector<std::vector<std::uint32_t>> kids(k);
    for (std::size_t i = 0; i < k; ++i) {
        for (NodeId c : sys.children(reach[i])) kids[i].push_back(local[c]);
        std::sort(kids[i].begin(), kids[i].end());
        if (mode == Mode::Set)
            kids[i].erase(std::unique(kids[i].begin(), kids[i].end()), kids[i].end());
    }

    // Initial blocks by (out-degree, root marker).
    std::vector<std::uint32_t> block(k, 0);
    std::size_t count;
    {
        std::vector<std::size_t> idx(k);
        std::iota(idx.begin(), idx.end(), 0);
        auto key = [&](std::size_t i) {
            return std::pair<std::size_t, bool>(kids[i].size(), i == 0);
        };
        std::sort(idx.begin(), idx.end(),
                  [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
        std::uint32_t next = 0;
        for (std::size_t i = 0; i < k; ++i) {
            if (i > 0 && key(idx[i]) != key(idx[i - 1])) ++next;
            block[idx[i]] = next;
        }
        count = k == 0 ? 0 : next + 1u;
    }

    // Refine by sorted signatures until every block is a singleton.
    while (count < k) {
        std::vector<std::vector<std::uint32_t>> sig(k);
        for (std::size_t i = 0; i < k; ++i) {
            auto& s = sig[i];
            s.reserve(kids[i].size() + 1);
            s.push_back(block[i]);
            for (std::uint32_t c : kids[i]) s.push_back(block[c]);
            std::sort(s.begin() + 1, s.end());
            if (mode == Mode::Set)
                s.erase(std::unique(s.begin() + 1, s.end()), s.end());
        }
        std::vector<std::size_t> idx(k);
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end(),
                  [&](std::size_t a, std::size_t b) { return sig[a] < sig[b]; });
        std::uint32_t next = 0;
        for (std::size_t i = 0; i < k; ++i) {
            if (i > 0 && sig[idx[i]] != sig[idx[i - 1]]) ++next;
            block[idx[i]] = next;
        }
        std::size_t new_count = next + 1u;
        if (new_count == count)
            throw std::logic_error(
                "canonical numbering requires a bisimulation-minimal graph");
        count = new_count;
    }

    // BFS from the root, visiting children in rank order.
    CanonicalNumbering cn;
    cn.canon_of.assign(sys.node_count(), kNoNode);
    cn.order.reserve(k);
    std::vector<std::uint32_t> queue{0};
    std::vector<std::uint8_t> visited(k, 0);
    visited[0] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        std::uint32_t i = queue[head];
        cn.canon_of[reach[i]] = static_cast<NodeId>(cn.order.size());
        cn.order.push_back(reach[i]);
        std::vector<std::uint32_t> next(kids[i]);
        std::sort(next.begin(), next.end(), [&](std::uint32_t a, std::uint32_t b) {
            return block[a] < block[b];
        });
        for (std::uint32_t c : next) {
            if (visited[c]) continue;
            visited[c] = 1;
            queue.push_back(c);
        }
    }
    return cn;
}

void append_equation(std::string& out, NodeId lhs, const std::vector<NodeId>& kids) {
    out += 'x';
    out += std::to_string(lhs);
    out += " = {";
    for (std::size_t i = 0; i < kids.size(); ++i) {
        if (i > 0) out += ", ";
        out += 'x';
        out += std::to_string(kids[i]);
    }
    out += "};\n";
}

}  // namespace

std::string canonical_equation_text(const ApgSystem& sys, NodeId root, Mode mode) {
    if (!sys.valid_node(root)) throw Error("invalid root node " + std::to_string(root));
    CanonicalNumbering cn = canonical_numbering(sys, root, mode);
    std::string out;
    for (std::size_t ci = 0; ci < cn.order.size(); ++ci) {
        NodeId v = cn.order[ci];
        std::vector<NodeId> kids;
        for (NodeId c : sys.children(v)) kids.push_back(cn.canon_of[c]);
        std::sort(kids.begin(), kids.end());
        if (mode == Mode::Set) kids.erase(std::unique(kids.begin(), kids.end()), kids.end());
        append_equation(out, static_cast<NodeId>(ci), kids);
    }
    return out;
}

// ── CanonStore ───────────────────────────────────────────────────────────────

CanonStore& CanonStore::global() {
    static CanonStore store;
    return store;
}

const CanonStore::Node& CanonStore::node(HypersetId h) const {
    if (!h.valid() || h.index() >= nodes_.size())
        throw Error("invalid hyperset handle");
    const Node& n = nodes_[h.index()];
    if (n.mode != h.mode()) throw Error("corrupt hyperset handle");
    return n;
}

void CanonStore::sort_canonically_locked(std::vector<HypersetId>& kids) const {
    std::sort(kids.begin(), kids.end(), [&](HypersetId a, HypersetId b) {
        const std::string& sa = nodes_[a.index()].canon;
        const std::string& sb = nodes_[b.index()].canon;
        if (sa.size() != sb.size()) return sa.size() < sb.size();
        return sa < sb;
    });
}

HypersetId CanonStore::intern(const ApgSystem& sys, NodeId root, Mode mode) {
    RestrictResult restricted = reachable_restrict(sys, root);
    std::vector<HypersetId> handles = intern_all(restricted.system, mode);
    return handles[restricted.root];
}

std::vector<HypersetId> CanonStore::intern_all(const ApgSystem& sys, Mode mode) {
    MinimizeResult min = minimize(sys, mode);
    const ApgSystem& quotient = min.quotient;
    const std::size_t k = quotient.node_count();

    // Self-contained canonical text per quotient node; no store access yet.
    std::vector<std::string> texts(k);
    for (NodeId q = 0; q < k; ++q)
        texts[q] = canonical_equation_text(quotient, q, mode);

    std::vector<std::uint32_t> idx(k, 0);
    {
        std::unique_lock lock(mutex_);
        const int m = static_cast<int>(mode);
        std::vector<bool> fresh(k, false);
        for (NodeId q = 0; q < k; ++q) {
            auto it = by_text_[m].find(texts[q]);
            if (it != by_text_[m].end()) {
                idx[q] = it->second;
                continue;
            }
            std::uint32_t id = static_cast<std::uint32_t>(nodes_.size());
            nodes_.push_back(Node{mode, {}, texts[q]});
            by_text_[m].emplace(texts[q], id);
            idx[q] = id;
            fresh[q] = true;
        }
        for (NodeId q = 0; q < k; ++q) {
            if (!fresh[q]) continue;
            std::vector<HypersetId> kids;
            for (NodeId c : quotient.children(q))
                kids.push_back(HypersetId(idx[c], mode));
            sort_canonically_locked(kids);
            nodes_[idx[q]].kids = std::move(kids);

            std::vector<std::uint32_t> child_key;
            for (HypersetId kid : nodes_[idx[q]].kids) child_key.push_back(kid.index());
            std::sort(child_key.begin(), child_key.end());
            auto [it, inserted] = by_children_[m].emplace(std::move(child_key), idx[q]);
            assert(inserted);  // two stored nodes with equal child lists would be bisimilar
            (void)it;
            (void)inserted;
        }
    }

    std::vector<HypersetId> result;
    result.reserve(sys.node_count());
    for (NodeId v = 0; v < sys.node_count(); ++v)
        result.push_back(HypersetId(idx[min.class_of[v]], mode));
    return result;
}

HypersetId CanonStore::compose(std::span<const HypersetId> elems, Mode mode) {
    for (HypersetId h : elems) {
        if (!h.valid()) throw Error("invalid hyperset handle");
        if (h.mode() != mode)
            throw ModeMismatchError("compose: element mode does not match " +
                                    std::string(mode_name(mode)) + " mode");
    }

    std::vector<HypersetId> sorted(elems.begin(), elems.end());
    std::vector<std::uint32_t> child_key;
    ApgSystem closure;
    {
        std::shared_lock lock(mutex_);
        for (HypersetId h : elems) node(h);  // validate against the table
        sort_canonically_locked(sorted);
        if (mode == Mode::Set)
            sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

        for (HypersetId h : sorted) child_key.push_back(h.index());
        std::sort(child_key.begin(), child_key.end());
        auto it = by_children_[static_cast<int>(mode)].find(child_key);
        if (it != by_children_[static_cast<int>(mode)].end())
            return HypersetId(it->second, mode);

        // New node: materialize the store closure of the children so the
        // canonical text can be computed self-contained.
        NodeId root = closure.add_node();
        std::unordered_map<std::uint32_t, NodeId> to_local;
        std::vector<std::uint32_t> queue;
        for (std::uint32_t i : child_key)
            if (to_local.emplace(i, static_cast<NodeId>(to_local.size() + 1)).second) {
                closure.add_node();
                queue.push_back(i);
            }
        for (std::size_t head = 0; head < queue.size(); ++head) {
            std::uint32_t i = queue[head];
            for (HypersetId kid : nodes_[i].kids) {
                auto [kit, freshKid] =
                    to_local.emplace(kid.index(), static_cast<NodeId>(to_local.size() + 1));
                if (freshKid) {
                    closure.add_node();
                    queue.push_back(kid.index());
                }
                closure.add_edge(to_local[i], kit->second);
            }
        }
        for (HypersetId h : sorted) closure.add_edge(root, to_local[h.index()]);
    }

    std::string text = canonical_equation_text(closure, 0, mode);

    std::unique_lock lock(mutex_);
    const int m = static_cast<int>(mode);
    auto it = by_text_[m].find(text);
    if (it != by_text_[m].end()) return HypersetId(it->second, mode);

    std::uint32_t id = static_cast<std::uint32_t>(nodes_.size());
    nodes_.push_back(Node{mode, std::move(sorted), text});
    by_text_[m].emplace(std::move(text), id);
    auto [cit, inserted] = by_children_[m].emplace(std::move(child_key), id);
    assert(inserted);
    (void)cit;
    (void)inserted;
    return HypersetId(id, mode);
}

std::vector<HypersetId> CanonStore::children(HypersetId h) const {
    std::shared_lock lock(mutex_);
    return node(h).kids;
}

std::size_t CanonStore::child_count(HypersetId h) const {
    std::shared_lock lock(mutex_);
    return node(h).kids.size();
}

bool CanonStore::equal(HypersetId a, HypersetId b) const {
    if (!a.valid() || !b.valid()) throw Error("invalid hyperset handle");
    if (a.mode() != b.mode())
        throw ModeMismatchError("equal: handles of different modes");
    return a == b;
}

Ordering CanonStore::order(HypersetId a, HypersetId b) const {
    if (!a.valid() || !b.valid()) throw Error("invalid hyperset handle");
    if (a.mode() != b.mode())
        throw ModeMismatchError("order: handles of different modes");
    if (a == b) return Ordering::Equal;
    std::shared_lock lock(mutex_);
    const std::string& sa = node(a).canon;
    const std::string& sb = node(b).canon;
    if (sa.size() != sb.size())
        return sa.size() < sb.size() ? Ordering::Less : Ordering::Greater;
    return sa < sb ? Ordering::Less : Ordering::Greater;
}

std::string CanonStore::canonical_text(HypersetId h) const {
    std::shared_lock lock(mutex_);
    return node(h).canon;
}

RootedSystem CanonStore::system_of(HypersetId h) const {
    ApgSystem raw;
    {
        std::shared_lock lock(mutex_);
        node(h);
        std::unordered_map<std::uint32_t, NodeId> to_local;
        std::vector<std::uint32_t> queue{h.index()};
        to_local.emplace(h.index(), raw.add_node());
        for (std::size_t head = 0; head < queue.size(); ++head) {
            std::uint32_t i = queue[head];
            for (HypersetId kid : nodes_[i].kids) {
                auto [it, freshKid] = to_local.try_emplace(kid.index());
                if (freshKid) {
                    it->second = raw.add_node();
                    queue.push_back(kid.index());
                }
                raw.add_edge(to_local[i], it->second);
            }
        }
    }

    // Renumber so node i is the canonical x_i, matching canonical_text(h).
    CanonicalNumbering cn = canonical_numbering(raw, 0, h.mode());
    RootedSystem out;
    out.root = 0;
    for (std::size_t ci = 0; ci < cn.order.size(); ++ci) out.system.add_node();
    for (std::size_t ci = 0; ci < cn.order.size(); ++ci) {
        NodeId v = cn.order[ci];
        std::vector<NodeId> kids;
        for (NodeId c : raw.children(v)) kids.push_back(cn.canon_of[c]);
        std::sort(kids.begin(), kids.end());
        if (h.mode() == Mode::Set)
            kids.erase(std::unique(kids.begin(), kids.end()), kids.end());
        for (NodeId c : kids) out.system.add_edge(static_cast<NodeId>(ci), c);
    }
    return out;
}

std::size_t CanonStore::size() const {
    std::shared_lock lock(mutex_);
    return nodes_.size();
}

HypersetId CanonStore::handle_at(std::size_t i) const {
    std::shared_lock lock(mutex_);
    if (i >= nodes_.size()) throw Error("handle index out of range");
    return HypersetId(static_cast<std::uint32_t>(i), nodes_[i].mode);
}

}  // namespace hyperset
