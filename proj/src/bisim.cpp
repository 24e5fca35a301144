#include "hyperset/bisim.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <unordered_map>

namespace hyperset {

namespace {

// ── Paige-Tarjan relational coarsest partition ──────────────────────────────
// Computes the coarsest partition stable under the (deduplicated) edge
// relation, i.e. plain bisimilarity.  Keeps the fine partition Q and a
// coarser partition of X-blocks; Q stays stable w.r.t. every X-block, and
// each pass splits off the smaller half B of a compound X-block and
// three-way-splits Q against B and S\B using per-(node, X-block) edge
// counters.  O((n + m) log n).

constexpr std::uint32_t kNone = static_cast<std::uint32_t>(-1);

class PaigeTarjan {
public:
    explicit PaigeTarjan(const ApgSystem& sys) { build(sys); }

    std::vector<std::uint32_t> run() {
        while (!worklist_.empty()) {
            std::uint32_t xid = worklist_.back();
            worklist_.pop_back();
            xblocks_[xid].queued = false;
            if (xblocks_[xid].qblocks.size() < 2) continue;
            split_pass(xid);
        }
        return block_of_;  // internal block ids; caller normalizes
    }

private:
    struct QBlock {
        std::vector<NodeId> members;
        std::uint32_t xblock = 0;
        std::uint32_t pos_in_xblock = 0;
    };
    struct XBlock {
        std::vector<std::uint32_t> qblocks;
        bool queued = false;
    };

    void build(const ApgSystem& sys) {
        n_ = sys.node_count();
        block_of_.assign(n_, 0);
        pos_in_block_.assign(n_, 0);
        seen_.assign(n_, 0);
        old_counter_.assign(n_, 0);
        new_counter_.assign(n_, 0);
        if (n_ == 0) return;

        // Duplicate edges carry no information under set semantics.
        std::vector<std::vector<NodeId>> out(n_);
        for (NodeId v = 0; v < n_; ++v) {
            auto kids = sys.children(v);
            out[v].assign(kids.begin(), kids.end());
            std::sort(out[v].begin(), out[v].end());
            out[v].erase(std::unique(out[v].begin(), out[v].end()), out[v].end());
        }

        // In-adjacency, flattened and grouped by target node.
        std::size_t m = 0;
        for (const auto& o : out) m += o.size();
        in_begin_.assign(n_ + 1, 0);
        for (NodeId v = 0; v < n_; ++v)
            for (NodeId c : out[v]) ++in_begin_[c + 1];
        for (std::size_t i = 0; i < n_; ++i) in_begin_[i + 1] += in_begin_[i];
        in_src_.assign(m, 0);
        edge_counter_.assign(m, 0);
        {
            std::vector<std::uint32_t> fill(in_begin_.begin(), in_begin_.end() - 1);
            std::vector<std::uint32_t> cnt_of_src(n_, kNone);
            for (NodeId v = 0; v < n_; ++v)
                if (!out[v].empty())
                    cnt_of_src[v] = alloc_counter(static_cast<long long>(out[v].size()));
            for (NodeId v = 0; v < n_; ++v)
                for (NodeId c : out[v]) {
                    in_src_[fill[c]] = v;
                    edge_counter_[fill[c]] = cnt_of_src[v];
                    ++fill[c];
                }
        }

        // Initial partition, stable w.r.t. the universe: leaves | non-leaves.
        std::uint32_t non_leaf = kNone;
        std::uint32_t leaf = kNone;
        for (NodeId v = 0; v < n_; ++v) {
            std::uint32_t& q = out[v].empty() ? leaf : non_leaf;
            if (q == kNone) q = alloc_qblock();
            attach(v, q);
        }
        xblocks_.push_back(XBlock{});
        for (std::uint32_t q : {non_leaf, leaf}) {
            if (q == kNone) continue;
            qblocks_[q].xblock = 0;
            qblocks_[q].pos_in_xblock = static_cast<std::uint32_t>(xblocks_[0].qblocks.size());
            xblocks_[0].qblocks.push_back(q);
        }
        maybe_queue(0);
    }

    void split_pass(std::uint32_t xid) {
        // Splitter: the smaller of the first two Q-blocks of the compound S.
        std::uint32_t q0 = xblocks_[xid].qblocks[0];
        std::uint32_t q1 = xblocks_[xid].qblocks[1];
        std::uint32_t b =
            qblocks_[q0].members.size() <= qblocks_[q1].members.size() ? q0 : q1;

        // Detach B into a fresh X-block of its own.
        xblock_remove(xid, b);
        std::uint32_t nx = static_cast<std::uint32_t>(xblocks_.size());
        xblocks_.push_back(XBlock{});
        xblocks_[nx].qblocks.push_back(b);
        qblocks_[b].xblock = nx;
        qblocks_[b].pos_in_xblock = 0;
        maybe_queue(xid);

        // Scan 1: walk the edges into B, re-pointing each from the shared
        // (x, S) counter to a fresh (x, B) counter.  Afterwards the old
        // counter holds count(x, S\B).
        ++pass_;
        std::vector<NodeId> touched;
        const std::vector<NodeId> b_members = qblocks_[b].members;  // snapshot
        for (NodeId y : b_members) {
            for (std::uint32_t e = in_begin_[y]; e < in_begin_[y + 1]; ++e) {
                NodeId x = in_src_[e];
                std::uint32_t c = edge_counter_[e];
                if (seen_[x] != pass_) {
                    seen_[x] = pass_;
                    touched.push_back(x);
                    old_counter_[x] = c;
                    new_counter_[x] = alloc_counter(0);
                }
                assert(old_counter_[x] == c);
                --counter_val_[c];
                ++counter_val_[new_counter_[x]];
                edge_counter_[e] = new_counter_[x];
            }
        }

        // Scan 2: split every block met by pre(B) into members outside /
        // inside pre(B).
        split_step(touched, [](NodeId) { return true; });

        // Scan 3: within pre(B), split off the nodes with no edge left into
        // S\B (their old counter drained to zero).
        split_step(touched,
                   [&](NodeId x) { return counter_val_[old_counter_[x]] == 0; });

        for (NodeId x : touched)
            if (counter_val_[old_counter_[x]] == 0) free_counter(old_counter_[x]);
    }

    template <class Pred>
    void split_step(const std::vector<NodeId>& xs, Pred&& pred) {
        ++split_;
        std::vector<std::uint32_t> affected;
        for (NodeId x : xs) {
            if (!pred(x)) continue;
            std::uint32_t d = block_of_[x];
            if (mate_stamp_[d] != split_) {
                mate_stamp_[d] = split_;
                std::uint32_t md = alloc_qblock();
                mate_of_[d] = md;
                std::uint32_t xb = qblocks_[d].xblock;
                qblocks_[md].xblock = xb;
                qblocks_[md].pos_in_xblock =
                    static_cast<std::uint32_t>(xblocks_[xb].qblocks.size());
                xblocks_[xb].qblocks.push_back(md);
                affected.push_back(d);
            }
            detach(x);
            attach(x, mate_of_[d]);
        }
        for (std::uint32_t d : affected) {
            if (qblocks_[d].members.empty()) {
                // Everything moved: the mate replaces d, no real split happened.
                xblock_remove(qblocks_[d].xblock, d);
                free_qblock(d);
            } else {
                maybe_queue(qblocks_[d].xblock);
            }
        }
    }

    void detach(NodeId v) {
        QBlock& q = qblocks_[block_of_[v]];
        std::uint32_t p = pos_in_block_[v];
        NodeId last = q.members.back();
        q.members[p] = last;
        pos_in_block_[last] = p;
        q.members.pop_back();
    }

    void attach(NodeId v, std::uint32_t q) {
        pos_in_block_[v] = static_cast<std::uint32_t>(qblocks_[q].members.size());
        qblocks_[q].members.push_back(v);
        block_of_[v] = q;
    }

    void xblock_remove(std::uint32_t xid, std::uint32_t q) {
        auto& list = xblocks_[xid].qblocks;
        std::uint32_t p = qblocks_[q].pos_in_xblock;
        std::uint32_t last = list.back();
        list[p] = last;
        qblocks_[last].pos_in_xblock = p;
        list.pop_back();
    }

    void maybe_queue(std::uint32_t xid) {
        if (xblocks_[xid].qblocks.size() >= 2 && !xblocks_[xid].queued) {
            xblocks_[xid].queued = true;
            worklist_.push_back(xid);
        }
    }

    std::uint32_t alloc_counter(long long v) {
        if (!counter_free_.empty()) {
            std::uint32_t c = counter_free_.back();
            counter_free_.pop_back();
            counter_val_[c] = v;
            return c;
        }
        counter_val_.push_back(v);
        return static_cast<std::uint32_t>(counter_val_.size() - 1);
    }

    void free_counter(std::uint32_t c) { counter_free_.push_back(c); }

    std::uint32_t alloc_qblock() {
        if (!qblock_free_.empty()) {
            std::uint32_t q = qblock_free_.back();
            qblock_free_.pop_back();
            qblocks_[q] = QBlock{};
            return q;
        }
        qblocks_.push_back(QBlock{});
        mate_stamp_.push_back(0);
        mate_of_.push_back(0);
        return static_cast<std::uint32_t>(qblocks_.size() - 1);
    }

    void free_qblock(std::uint32_t q) { qblock_free_.push_back(q); }

    std::size_t n_ = 0;
    std::vector<std::uint32_t> in_begin_;
    std::vector<NodeId> in_src_;
    std::vector<std::uint32_t> edge_counter_;
    std::vector<long long> counter_val_;
    std::vector<std::uint32_t> counter_free_;
    std::vector<std::uint32_t> block_of_;
    std::vector<std::uint32_t> pos_in_block_;
    std::vector<QBlock> qblocks_;
    std::vector<std::uint32_t> qblock_free_;
    std::vector<XBlock> xblocks_;
    std::vector<std::uint32_t> worklist_;
    std::vector<std::uint32_t> seen_;
    std::vector<std::uint32_t> old_counter_;
    std::vector<std::uint32_t> new_counter_;
    std::vector<std::uint32_t> mate_stamp_;
    std::vector<std::uint32_t> mate_of_;
    std::uint32_t pass_ = 0;
    std::uint32_t split_ = 0;
};

// ── signature refinement with multiplicity counting (Multiset mode) ─────────
// Rounds of (own block, sorted child blocks with repeats) signatures; new
// block ids are assigned in sorted signature order, so the numbering is
// deterministic.  Stops when the block count is stationary.

std::vector<std::uint32_t> refine_by_signatures(const ApgSystem& sys) {
    const std::size_t n = sys.node_count();
    std::vector<std::uint32_t> block(n, 0);
    if (n == 0) return block;
    std::size_t count = 1;
    for (std::size_t round = 0; round <= n; ++round) {
        std::vector<std::vector<std::uint32_t>> sig(n);
        for (NodeId v = 0; v < n; ++v) {
            auto kids = sys.children(v);
            auto& s = sig[v];
            s.reserve(kids.size() + 1);
            s.push_back(block[v]);
            for (NodeId c : kids) s.push_back(block[c]);
            std::sort(s.begin() + 1, s.end());
        }
        std::vector<NodeId> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](NodeId a, NodeId b) { return sig[a] < sig[b]; });
        std::vector<std::uint32_t> next(n, 0);
        std::size_t new_count = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++new_count;
            next[order[i]] = static_cast<std::uint32_t>(new_count);
        }
        ++new_count;
        block.swap(next);
        if (new_count == count) break;
        count = new_count;
    }
    return block;
}

}  // namespace

// ── Partition ────────────────────────────────────────────────────────────────

Partition Partition::from_assignment(const std::vector<std::uint32_t>& raw) {
    Partition p;
    p.block_of.assign(raw.size(), 0);
    std::unordered_map<std::uint32_t, std::uint32_t> remap;
    for (std::size_t v = 0; v < raw.size(); ++v) {
        auto [it, fresh] =
            remap.try_emplace(raw[v], static_cast<std::uint32_t>(p.blocks.size()));
        if (fresh) p.blocks.emplace_back();
        p.block_of[v] = it->second;
        p.blocks[it->second].push_back(static_cast<NodeId>(v));
    }
    return p;
}

bool Partition::consistent() const {
    std::size_t total = 0;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty()) return false;
        NodeId prev = kNoNode;
        for (NodeId v : blocks[b]) {
            if (v >= block_of.size() || block_of[v] != b) return false;
            if (prev != kNoNode && v <= prev) return false;
            prev = v;
            ++total;
        }
    }
    if (total != block_of.size()) return false;
    for (std::uint32_t b : block_of)
        if (b >= blocks.size()) return false;
    return true;
}

// ── minimize / bisimilar ─────────────────────────────────────────────────────

MinimizeResult minimize(const ApgSystem& sys, Mode mode) {
    std::vector<std::uint32_t> raw =
        mode == Mode::Set ? PaigeTarjan(sys).run() : refine_by_signatures(sys);

    MinimizeResult res;
    res.partition = Partition::from_assignment(raw);
    const Partition& part = res.partition;

    res.class_of.assign(sys.node_count(), 0);
    for (NodeId v = 0; v < sys.node_count(); ++v) res.class_of[v] = part.block_of[v];

    for (std::size_t b = 0; b < part.block_count(); ++b)
        res.quotient.add_node(sys.label(part.blocks[b][0]));
    for (std::size_t b = 0; b < part.block_count(); ++b) {
        // All members agree on child classes (with counts, in Multiset mode),
        // so any representative works; take the smallest for determinism.
        NodeId rep = part.blocks[b][0];
        std::vector<NodeId> kids;
        for (NodeId c : sys.children(rep)) kids.push_back(part.block_of[c]);
        std::sort(kids.begin(), kids.end());
        if (mode == Mode::Set)
            kids.erase(std::unique(kids.begin(), kids.end()), kids.end());
        for (NodeId c : kids) res.quotient.add_edge(static_cast<NodeId>(b), c);
    }
    return res;
}

bool bisimilar(const ApgSystem& sysA, NodeId x, const ApgSystem& sysB, NodeId y,
               Mode mode) {
    if (!sysA.valid_node(x)) throw Error("invalid node id " + std::to_string(x));
    if (!sysB.valid_node(y)) throw Error("invalid node id " + std::to_string(y));

    ApgSystem both;
    for (NodeId v = 0; v < sysA.node_count(); ++v) both.add_node(sysA.label(v));
    for (NodeId v = 0; v < sysB.node_count(); ++v) both.add_node(sysB.label(v));
    const NodeId offset = static_cast<NodeId>(sysA.node_count());
    for (NodeId v = 0; v < sysA.node_count(); ++v)
        for (NodeId c : sysA.children(v)) both.add_edge(v, c);
    for (NodeId v = 0; v < sysB.node_count(); ++v)
        for (NodeId c : sysB.children(v)) both.add_edge(offset + v, offset + c);

    return minimize(both, mode).partition.same_block(x, offset + y);
}

}  // namespace hyperset
