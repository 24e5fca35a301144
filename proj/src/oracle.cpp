#include <algorithm>
#include <map>
#include <vector>

#include "hyperset/bisim.hpp"

namespace hyperset {

// Deliberately primitive cross-check for minimize: every round recomputes
// every node's full signature from scratch and renumbers via an ordered map,
// sharing no machinery with the production algorithms.  O(n^2 * rounds).
Partition naive_refine_oracle(const ApgSystem& sys, Mode mode) {
    const std::size_t n = sys.node_count();
    std::vector<std::uint32_t> block(n, 0);
    std::size_t count = n == 0 ? 0 : 1;
    bool changed = n > 0;
    while (changed) {
        changed = false;
        std::map<std::vector<std::uint32_t>, std::uint32_t> ids;
        std::vector<std::uint32_t> next(n);
        for (NodeId v = 0; v < n; ++v) {
            std::vector<std::uint32_t> key;
            key.push_back(block[v]);
            for (NodeId c : sys.children(v)) key.push_back(block[c]);
            std::sort(key.begin() + 1, key.end());
            if (mode == Mode::Set)
                key.erase(std::unique(key.begin() + 1, key.end()), key.end());
            auto [it, fresh] =
                ids.try_emplace(std::move(key), static_cast<std::uint32_t>(ids.size()));
            (void)fresh;
            next[v] = it->second;
        }
        if (ids.size() != count) {
            changed = true;
            count = ids.size();
        }
        block.swap(next);
    }
    return Partition::from_assignment(block);
}

}  // namespace hyperset
