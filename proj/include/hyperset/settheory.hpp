#ifndef HYPERSET_SETTHEORY_HPP
#define HYPERSET_SETTHEORY_HPP

#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hyperset/store.hpp"

namespace hyperset {

// Total decision procedure over canonical hypersets.  Determinism in the
// denoted set is automatic, since handles are canonical.
using Predicate = std::function<bool(HypersetId)>;
using Transform = std::function<HypersetId(HypersetId)>;

inline constexpr std::size_t kDefaultExponentLimit = 1'000'000;

// The empty set (Set mode).
HypersetId empty_set();

// True iff z is an element of x.  Set mode; binary search over the
// canonically sorted child list.
bool member(HypersetId z, HypersetId x);

// The elements of x, canonically sorted.
std::vector<HypersetId> elements(HypersetId x);

// Finite unordered tupling {v0, ..., vk}; duplicates collapse.
HypersetId tuple(std::span<const HypersetId> v);
inline HypersetId tuple(std::initializer_list<HypersetId> v) {
    return tuple(std::span<const HypersetId>(v));
}

// { z in x | p(z) }.
HypersetId separation(HypersetId x, const Predicate& p);

// { r(z) : z in u }, the image of u under r.
HypersetId replace(HypersetId u, const Transform& r);

// Union of the elements of u.
HypersetId big_union(HypersetId u);

// Kuratowski ordered pair {{a}, {a, b}}.
HypersetId kuratowski_pair(HypersetId a, HypersetId b);

// The unique (a, b) with p = kuratowski_pair(a, b), if p has that shape.
// The degenerate singleton {{a}} decodes as (a, a).
std::optional<std::pair<HypersetId, HypersetId>> decode_pair(HypersetId p);

// True iff f is the graph of a function from the elements of a to the
// elements of b: every element of f is a pair, every x in a has exactly one
// y with <x,y> in f, and every pair component lands in a resp. b.
bool is_operation(HypersetId a, HypersetId b, HypersetId f);

// The set of all function graphs from elements(a) to elements(b).  Throws
// ExponentiationLimitError when |b|^|a| exceeds `limit`.
HypersetId exponentiation(HypersetId a, HypersetId b,
                          std::size_t limit = kDefaultExponentLimit);

// x ∪ {x}.
HypersetId successor(HypersetId x);

// Von Neumann numeral: successor iterated n times from the empty set.
HypersetId numeral(unsigned n);

// The unique set q = {q} (a one-node self-loop).
HypersetId quine_atom();

// True iff the membership relation below x is free of cycles, i.e. no
// membership cycle is reachable from x.
bool is_accessible(HypersetId x);

// Mechanical check of the natural-number-set condition: for every u in the
// finite closure elements(n) ∪ {∅} ∪ successor(elements(n)),
//   u ∈ n  ⇔  u = ∅ or u = successor(v) for some v ∈ n.
bool is_natural_number_set(HypersetId n);

// Number of children of x (with multiplicity in Multiset mode).
std::size_t cardinality(HypersetId x);

}  // namespace hyperset

#endif  // HYPERSET_SETTHEORY_HPP
