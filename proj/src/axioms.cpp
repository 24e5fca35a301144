#include "hyperset/axioms.hpp"

#include <algorithm>
#include <ostream>

#include "hyperset/afa.hpp"
#include "hyperset/bisim.hpp"
#include "hyperset/textio.hpp"

namespace hyperset {

ApgSystem random_system(Rng& rng, int max_nodes) {
    ApgSystem sys;
    const std::uint64_t n = rng.range(1, static_cast<std::uint64_t>(max_nodes));
    for (std::uint64_t v = 0; v < n; ++v) sys.add_node();
    const std::uint64_t m = rng.below(3 * n + 1);
    for (std::uint64_t e = 0; e < m; ++e) {
        // two draws, sequenced (argument evaluation order is unspecified)
        NodeId from = static_cast<NodeId>(rng.below(n));
        NodeId to = static_cast<NodeId>(rng.below(n));
        sys.add_edge(from, to);
    }
    return sys;
}

HypersetId random_handle(Rng& rng, int max_nodes, Mode mode) {
    ApgSystem sys = random_system(rng, max_nodes);
    NodeId root = static_cast<NodeId>(rng.below(sys.node_count()));
    return intern(sys, root, mode);
}

namespace {

// Bisimulation-preserving transformations for the representation-
// independence suite.

ApgSystem permute_nodes(Rng& rng, const ApgSystem& sys, std::vector<NodeId>& perm) {
    const std::size_t n = sys.node_count();
    perm.resize(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<NodeId>(i);
    for (std::size_t i = n; i > 1; --i)
        std::swap(perm[i - 1], perm[rng.below(i)]);

    ApgSystem out;
    for (std::size_t i = 0; i < n; ++i) out.add_node();
    for (NodeId v = 0; v < n; ++v) {
        std::vector<NodeId> kids(sys.children(v).begin(), sys.children(v).end());
        for (std::size_t i = kids.size(); i > 1; --i)
            std::swap(kids[i - 1], kids[rng.below(i)]);
        for (NodeId c : kids) out.add_edge(perm[v], perm[c]);
    }
    return out;
}

// Clones a node and redirects each incoming edge to either copy.  The clone
// keeps the exact child list, so the transformation preserves bisimilarity
// in both modes.
ApgSystem duplicate_node(Rng& rng, const ApgSystem& sys) {
    const NodeId victim = static_cast<NodeId>(rng.below(sys.node_count()));
    ApgSystem out;
    for (NodeId v = 0; v < sys.node_count(); ++v) out.add_node();
    const NodeId clone = out.add_node();
    for (NodeId v = 0; v < sys.node_count(); ++v)
        for (NodeId c : sys.children(v)) {
            NodeId target = c;
            if (c == victim && rng.percent(50)) target = clone;
            out.add_edge(v, target);
        }
    for (NodeId c : sys.children(victim)) out.add_edge(clone, c);
    return out;
}

struct Suite {
    std::string name;
    int cases = 0;
    int failures = 0;

    void check(bool ok) {
        ++cases;
        if (!ok) ++failures;
    }
};

using HandlePool = std::vector<HypersetId>;

HypersetId pick(Rng& rng, const HandlePool& pool) {
    return pool[rng.below(pool.size())];
}

HandlePool base_pool() {
    HandlePool pool;
    pool.push_back(empty_set());
    pool.push_back(quine_atom());
    for (unsigned i = 1; i <= 3; ++i) pool.push_back(numeral(i));
    pool.push_back(tuple({quine_atom(), numeral(1)}));
    pool.push_back(tuple({tuple({empty_set()})}));
    return pool;
}

// ── individual suites ────────────────────────────────────────────────────────

Suite suite_oracle(Rng rng, int cases, int max_nodes, Mode mode) {
    Suite s{std::string("oracle-equivalence-") + mode_name(mode)};
    for (int i = 0; i < cases; ++i) {
        ApgSystem sys = random_system(rng, max_nodes);
        Partition fast = minimize(sys, mode).partition;
        Partition naive = naive_refine_oracle(sys, mode);
        s.check(fast == naive && fast.consistent());
    }
    return s;
}

Suite suite_set_coarsens_multiset(Rng rng, int cases, int max_nodes) {
    Suite s{"set-coarsens-multiset"};
    for (int i = 0; i < cases; ++i) {
        ApgSystem sys = random_system(rng, max_nodes);
        Partition set_part = minimize(sys, Mode::Set).partition;
        Partition multi_part = minimize(sys, Mode::Multiset).partition;
        bool ok = true;
        for (const auto& block : multi_part.blocks)
            for (NodeId v : block)
                ok = ok && set_part.same_block(block[0], v);
        s.check(ok);
    }
    return s;
}

Suite suite_intern_idempotence(Rng rng, int cases, int max_nodes) {
    Suite s{"intern-idempotence"};
    for (int i = 0; i < cases; ++i) {
        Mode mode = rng.percent(50) ? Mode::Set : Mode::Multiset;
        HypersetId h = random_handle(rng, max_nodes, mode);
        RootedSystem stored = CanonStore::global().system_of(h);
        s.check(intern(stored.system, stored.root, mode) == h);
    }
    return s;
}

Suite suite_representation_independence(Rng rng, int cases, int max_nodes) {
    Suite s{"representation-independence"};
    for (int i = 0; i < cases; ++i) {
        Mode mode = rng.percent(50) ? Mode::Set : Mode::Multiset;
        ApgSystem sys = random_system(rng, max_nodes);
        NodeId root = static_cast<NodeId>(rng.below(sys.node_count()));
        HypersetId expected = intern(sys, root, mode);

        ApgSystem blown = sys;
        for (int k = rng.below(3); k > 0; --k) blown = duplicate_node(rng, blown);
        std::vector<NodeId> perm;
        ApgSystem shuffled = permute_nodes(rng, blown, perm);
        s.check(intern(shuffled, perm[root], mode) == expected);
    }
    return s;
}

Suite suite_extensionality(Rng rng, int cases, int max_nodes) {
    Suite s{"extensionality"};
    for (int i = 0; i < cases; ++i) {
        HypersetId a = random_handle(rng, max_nodes, Mode::Set);
        HypersetId b = rng.percent(30) ? a : random_handle(rng, max_nodes, Mode::Set);
        std::vector<HypersetId> probes = elements(a);
        for (HypersetId z : elements(b)) probes.push_back(z);
        bool agree = true;
        for (HypersetId z : probes)
            agree = agree && (member(z, a) == member(z, b));
        s.check(equal(a, b) == agree);
    }
    return s;
}

Suite suite_tupling(Rng rng, int cases, int max_nodes, bool inject_fault) {
    Suite s{"tupling"};
    HandlePool pool = base_pool();
    for (int i = 0; i < cases; ++i) {
        std::vector<HypersetId> v;
        for (std::uint64_t k = rng.below(5); k > 0; --k)
            v.push_back(rng.percent(50) ? pick(rng, pool)
                                        : random_handle(rng, max_nodes, Mode::Set));
        HypersetId t = tuple(v);

        std::vector<HypersetId> probes = v;
        probes.push_back(empty_set());
        probes.push_back(pick(rng, pool));
        bool ok = true;
        for (HypersetId z : probes) {
            bool expected = false;
            for (HypersetId entry : v) expected = expected || equal(entry, z);
            if (inject_fault && i == 0) expected = !expected;
            ok = ok && (member(z, t) == expected);
        }
        s.check(ok);
    }
    return s;
}

Suite suite_separation(Rng rng, int cases, int max_nodes) {
    Suite s{"separation"};
    std::vector<Predicate> predicates = {
        [](HypersetId) { return true; },
        [](HypersetId) { return false; },
        [](HypersetId z) { return is_accessible(z); },
        [](HypersetId z) { return cardinality(z) % 2 == 0; },
        [](HypersetId z) { return member(empty_set(), z); },
    };
    for (int i = 0; i < cases; ++i) {
        HypersetId x = random_handle(rng, max_nodes, Mode::Set);
        const Predicate& p = predicates[rng.below(predicates.size())];
        HypersetId u = separation(x, p);
        bool ok = true;
        std::vector<HypersetId> probes = elements(x);
        probes.push_back(empty_set());
        probes.push_back(quine_atom());
        for (HypersetId z : probes)
            ok = ok && (member(z, u) == (member(z, x) && p(z)));
        s.check(ok);
    }
    return s;
}

Suite suite_replace(Rng rng, int cases, int max_nodes) {
    Suite s{"replace"};
    std::vector<Transform> transforms = {
        [](HypersetId z) { return z; },
        [](HypersetId z) { return successor(z); },
        [](HypersetId) { return empty_set(); },
        [](HypersetId z) { return tuple({z}); },
    };
    for (int i = 0; i < cases; ++i) {
        HypersetId u = random_handle(rng, max_nodes, Mode::Set);
        const Transform& r = transforms[rng.below(transforms.size())];
        HypersetId v = replace(u, r);
        bool ok = true;
        for (HypersetId z : elements(u)) ok = ok && member(r(z), v);
        for (HypersetId w : elements(v)) {
            bool witnessed = false;
            for (HypersetId z : elements(u)) witnessed = witnessed || equal(r(z), w);
            ok = ok && witnessed;
        }
        s.check(ok);
    }
    return s;
}

Suite suite_big_union(Rng rng, int cases, int max_nodes) {
    Suite s{"big-union"};
    for (int i = 0; i < cases; ++i) {
        HypersetId u = random_handle(rng, max_nodes, Mode::Set);
        HypersetId flat = big_union(u);
        bool ok = true;
        for (HypersetId x : elements(u))
            for (HypersetId z : elements(x)) ok = ok && member(z, flat);
        for (HypersetId z : elements(flat)) {
            bool witnessed = false;
            for (HypersetId x : elements(u)) witnessed = witnessed || member(z, x);
            ok = ok && witnessed;
        }
        s.check(ok);
    }
    return s;
}

Suite suite_pairing(Rng rng, int cases, int max_nodes) {
    Suite s{"pairing-injectivity"};
    HandlePool pool = base_pool();
    auto draw = [&](Rng& r) {
        return r.percent(60) ? pick(r, pool) : random_handle(r, max_nodes, Mode::Set);
    };
    for (int i = 0; i < cases; ++i) {
        HypersetId a = draw(rng);
        HypersetId b = draw(rng);
        HypersetId c = rng.percent(50) ? a : draw(rng);
        HypersetId d = rng.percent(50) ? b : draw(rng);
        bool lhs = equal(kuratowski_pair(a, b), kuratowski_pair(c, d));
        bool rhs = equal(a, c) && equal(b, d);
        bool ok = lhs == rhs;
        auto decoded = decode_pair(kuratowski_pair(a, b));
        ok = ok && decoded && equal(decoded->first, a) && equal(decoded->second, b);
        s.check(ok);
    }
    return s;
}

Suite suite_exponentiation(Rng rng, int cases, std::size_t max_exp) {
    Suite s{"exponentiation-membership"};
    HandlePool pool = base_pool();
    for (int i = 0; i < cases; ++i) {
        // Domains and codomains of size 0..3, drawn without repeats.
        std::vector<HypersetId> dom, cod;
        for (std::uint64_t k = rng.below(4); dom.size() < k;) {
            HypersetId z = pick(rng, pool);
            bool dup = false;
            for (HypersetId w : dom) dup = dup || equal(w, z);
            if (!dup) dom.push_back(z);
        }
        for (std::uint64_t k = rng.below(4); cod.size() < k;) {
            HypersetId z = pick(rng, pool);
            bool dup = false;
            for (HypersetId w : cod) dup = dup || equal(w, z);
            if (!dup) cod.push_back(z);
        }
        HypersetId a = tuple(dom);
        HypersetId b = tuple(cod);
        std::size_t expected = 1;
        for (std::size_t k = 0; k < dom.size(); ++k) expected *= cod.size();

        if (expected > max_exp) {
            bool threw = false;
            try {
                (void)exponentiation(a, b, max_exp);
            } catch (const ExponentiationLimitError&) {
                threw = true;
            }
            s.check(threw);
            continue;
        }

        HypersetId exp = exponentiation(a, b, max_exp);
        bool ok = cardinality(exp) == expected;

        for (HypersetId f : elements(exp)) {
            ok = ok && is_operation(a, b, f);
            if (!dom.empty() && !elements(f).empty()) {
                // Dropping one pair breaks totality.
                HypersetId broken_pair = elements(f)[0];
                HypersetId smaller =
                    separation(f, [&](HypersetId e) { return !equal(e, broken_pair); });
                ok = ok && !is_operation(a, b, smaller) && !member(smaller, exp);
            }
            // A stray non-pair element breaks the graph shape.
            HypersetId junk = big_union(tuple({f, tuple({empty_set()})}));
            ok = ok && !is_operation(a, b, junk) && !member(junk, exp);
            break;  // one function per case keeps the suite fast
        }
        s.check(ok);
    }
    return s;
}

Suite suite_afa(Rng rng, int cases, int max_nodes) {
    Suite s{"afa-verification"};
    for (int i = 0; i < cases; ++i) {
        ApgSystem sys = random_system(rng, std::min(max_nodes, 10));
        std::vector<HypersetId> names;
        for (NodeId v = 0; v < sys.node_count(); ++v)
            names.push_back(numeral(static_cast<unsigned>(v)));
        HypersetId g = encode_graph(sys, names);
        Decoration d = afa_decorate(g);
        bool ok = verify_decoration(g, d);

        // Pipeline coherence against decorating the raw system directly.
        Decoration direct = decorate(sys, Mode::Set);
        DecodedGraph dg = decode_graph(g);
        for (NodeId v = 0; v < sys.node_count(); ++v) {
            HypersetId via_graph = d.fallback;
            for (NodeId w = 0; w < dg.names.size(); ++w)
                if (equal(dg.names[w], names[v])) via_graph = d.values[w];
            ok = ok && equal(via_graph, direct.values[v]);
        }

        // Any corruption of a loaded node must be rejected.
        for (NodeId w = 0; w < dg.system.node_count(); ++w) {
            if (dg.system.children(w).empty()) continue;
            Decoration corrupt = d;
            corrupt.values[w] = empty_set();
            ok = ok && !verify_decoration(g, corrupt);
            break;
        }
        s.check(ok);
    }
    return s;
}

Suite suite_roundtrip(Rng rng, int cases, int max_nodes) {
    Suite s{"print-roundtrip"};
    for (int i = 0; i < cases; ++i) {
        Mode mode = rng.percent(50) ? Mode::Set : Mode::Multiset;
        HypersetId h = random_handle(rng, max_nodes, mode);
        LoweredSystem lowered = lower(parse(print_canonical(h)));
        s.check(intern(lowered.system, lowered.names.at("x0"), mode) == h);
    }
    return s;
}

}  // namespace

std::vector<SuiteResult> run_axiom_suites(const AxiomsOptions& opts,
                                          std::ostream* log) {
    auto sub = [&](std::uint64_t salt) { return Rng(opts.seed * 0x100000001b3ull + salt); };

    std::vector<Suite> suites;
    suites.push_back(suite_oracle(sub(1), opts.cases, opts.max_nodes, Mode::Set));
    suites.push_back(suite_oracle(sub(2), opts.cases, opts.max_nodes, Mode::Multiset));
    suites.push_back(suite_set_coarsens_multiset(sub(3), opts.cases, opts.max_nodes));
    suites.push_back(suite_intern_idempotence(sub(4), opts.cases, opts.max_nodes));
    suites.push_back(
        suite_representation_independence(sub(5), opts.cases, opts.max_nodes));
    suites.push_back(suite_extensionality(sub(6), opts.cases, opts.max_nodes));
    suites.push_back(suite_tupling(sub(7), opts.cases, opts.max_nodes, opts.inject_fault));
    suites.push_back(suite_separation(sub(8), opts.cases, opts.max_nodes));
    suites.push_back(suite_replace(sub(9), opts.cases, opts.max_nodes));
    suites.push_back(suite_big_union(sub(10), opts.cases, opts.max_nodes));
    suites.push_back(suite_pairing(sub(11), opts.cases, opts.max_nodes));
    suites.push_back(suite_exponentiation(sub(12), opts.cases, opts.max_exp));
    suites.push_back(suite_afa(sub(13), opts.cases, opts.max_nodes));
    suites.push_back(suite_roundtrip(sub(14), opts.cases, opts.max_nodes));

    std::vector<SuiteResult> results;
    for (const Suite& s : suites) {
        results.push_back(SuiteResult{s.name, s.cases, s.failures});
        if (log) {
            if (s.failures == 0)
                *log << "  " << s.name << ": ok (" << s.cases << " cases)\n";
            else
                *log << "  " << s.name << ": FAILED (" << s.failures << " of "
                     << s.cases << " cases)\n";
        }
    }
    return results;
}

bool all_passed(const std::vector<SuiteResult>& results) {
    for (const SuiteResult& r : results)
        if (r.failures != 0) return false;
    return true;
}

}  // namespace hyperset
