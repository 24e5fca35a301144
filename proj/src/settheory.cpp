#include "hyperset/settheory.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace hyperset {

namespace {

void require_set_mode(HypersetId h, const char* op) {
    if (!h.valid()) throw Error("invalid hyperset handle");
    if (h.mode() != Mode::Set)
        throw ModeMismatchError(std::string(op) + ": requires a Set-mode hyperset");
}

}  // namespace

HypersetId empty_set() { return compose({}, Mode::Set); }

bool member(HypersetId z, HypersetId x) {
    require_set_mode(z, "member");
    require_set_mode(x, "member");
    auto& store = CanonStore::global();
    std::vector<HypersetId> kids = store.children(x);
    return std::binary_search(kids.begin(), kids.end(), z,
                              [&](HypersetId a, HypersetId b) {
                                  return store.order(a, b) == Ordering::Less;
                              });
}

std::vector<HypersetId> elements(HypersetId x) {
    require_set_mode(x, "elements");
    return children(x);
}

HypersetId tuple(std::span<const HypersetId> v) { return compose(v, Mode::Set); }

HypersetId separation(HypersetId x, const Predicate& p) {
    require_set_mode(x, "separation");
    std::vector<HypersetId> kept;
    for (HypersetId z : children(x))
        if (p(z)) kept.push_back(z);
    return compose(kept, Mode::Set);
}

HypersetId replace(HypersetId u, const Transform& r) {
    require_set_mode(u, "replace");
    std::vector<HypersetId> image;
    for (HypersetId z : children(u)) {
        HypersetId y = r(z);
        require_set_mode(y, "replace");
        image.push_back(y);
    }
    return compose(image, Mode::Set);
}

HypersetId big_union(HypersetId u) {
    require_set_mode(u, "big_union");
    std::vector<HypersetId> flat;
    for (HypersetId x : children(u))
        for (HypersetId z : children(x)) flat.push_back(z);
    return compose(flat, Mode::Set);
}

HypersetId kuratowski_pair(HypersetId a, HypersetId b) {
    require_set_mode(a, "kuratowski_pair");
    require_set_mode(b, "kuratowski_pair");
    return tuple({tuple({a}), tuple({a, b})});
}

std::optional<std::pair<HypersetId, HypersetId>> decode_pair(HypersetId p) {
    require_set_mode(p, "decode_pair");
    std::vector<HypersetId> outer = children(p);
    if (outer.size() == 1) {
        // {{a}} decodes as (a, a).
        std::vector<HypersetId> inner = children(outer[0]);
        if (inner.size() != 1) return std::nullopt;
        return std::pair(inner[0], inner[0]);
    }
    if (outer.size() != 2) return std::nullopt;
    for (int which = 0; which < 2; ++which) {
        std::vector<HypersetId> single = children(outer[which]);
        std::vector<HypersetId> both = children(outer[1 - which]);
        if (single.size() != 1 || both.size() != 2) continue;
        HypersetId a = single[0];
        if (both[0] == a) return std::pair(a, both[1]);
        if (both[1] == a) return std::pair(a, both[0]);
    }
    return std::nullopt;
}

bool is_operation(HypersetId a, HypersetId b, HypersetId f) {
    require_set_mode(a, "is_operation");
    require_set_mode(b, "is_operation");
    require_set_mode(f, "is_operation");

    std::unordered_map<HypersetId, std::vector<HypersetId>> images;
    for (HypersetId e : children(f)) {
        auto pair = decode_pair(e);
        if (!pair) return false;  // some element of f is not a pair
        auto [x, y] = *pair;
        if (!member(x, a) || !member(y, b)) return false;
        images[x].push_back(y);
    }
    for (HypersetId x : children(a)) {
        auto it = images.find(x);
        if (it == images.end() || it->second.size() != 1) return false;
    }
    return true;
}

HypersetId exponentiation(HypersetId a, HypersetId b, std::size_t limit) {
    require_set_mode(a, "exponentiation");
    require_set_mode(b, "exponentiation");
    std::vector<HypersetId> dom = children(a);
    std::vector<HypersetId> cod = children(b);

    std::size_t total = 1;
    for (std::size_t i = 0; i < dom.size(); ++i) {
        if (cod.empty()) {
            total = 0;
            break;
        }
        if (total > limit / cod.size())
            throw ExponentiationLimitError(
                "exponentiation would enumerate more than " + std::to_string(limit) +
                " functions");
        total *= cod.size();
    }
    if (total > limit)
        throw ExponentiationLimitError(
            "exponentiation would enumerate more than " + std::to_string(limit) +
            " functions");

    std::vector<HypersetId> graphs;
    if (total > 0) {
        std::vector<std::size_t> digits(dom.size(), 0);
        for (std::size_t count = 0; count < total; ++count) {
            std::vector<HypersetId> pairs;
            pairs.reserve(dom.size());
            for (std::size_t i = 0; i < dom.size(); ++i)
                pairs.push_back(kuratowski_pair(dom[i], cod[digits[i]]));
            graphs.push_back(tuple(pairs));
            for (std::size_t i = 0; i < dom.size(); ++i) {
                if (++digits[i] < cod.size()) break;
                digits[i] = 0;
            }
        }
    }
    return tuple(graphs);
}

HypersetId successor(HypersetId x) {
    require_set_mode(x, "successor");
    return big_union(tuple({x, tuple({x})}));
}

HypersetId numeral(unsigned n) {
    HypersetId v = empty_set();
    for (unsigned i = 0; i < n; ++i) v = successor(v);
    return v;
}

HypersetId quine_atom() {
    ApgSystem sys;
    NodeId q = sys.add_node("q");
    sys.add_edge(q, q);
    return intern(sys, q, Mode::Set);
}

bool is_accessible(HypersetId x) {
    require_set_mode(x, "is_accessible");
    // Iterative three-color DFS over the stored canonical graph; a back edge
    // is a membership cycle.
    enum : std::uint8_t { White, Grey, Black };
    std::unordered_map<std::uint32_t, std::uint8_t> color;
    struct Frame {
        HypersetId h;
        std::vector<HypersetId> kids;
        std::size_t next = 0;
    };
    std::vector<Frame> stack;
    stack.push_back({x, children(x)});
    color[x.index()] = Grey;
    while (!stack.empty()) {
        Frame& top = stack.back();
        if (top.next == top.kids.size()) {
            color[top.h.index()] = Black;
            stack.pop_back();
            continue;
        }
        HypersetId kid = top.kids[top.next++];
        auto it = color.find(kid.index());
        if (it == color.end()) {
            color[kid.index()] = Grey;
            stack.push_back({kid, children(kid)});
        } else if (it->second == Grey) {
            return false;
        }
    }
    return true;
}

bool is_natural_number_set(HypersetId n) {
    require_set_mode(n, "is_natural_number_set");
    std::vector<HypersetId> elems = children(n);

    std::vector<HypersetId> closure = elems;
    closure.push_back(empty_set());
    for (HypersetId v : elems) closure.push_back(successor(v));

    for (HypersetId u : closure) {
        bool lhs = member(u, n);
        bool rhs = equal(u, empty_set());
        for (HypersetId v : elems) {
            if (rhs) break;
            rhs = equal(u, successor(v));
        }
        if (lhs != rhs) return false;
    }
    return true;
}

std::size_t cardinality(HypersetId x) {
    return CanonStore::global().child_count(x);
}

}  // namespace hyperset
