// Acceptance suite: runs every criterion end to end and prints one pass/fail
// line per criterion.  Exit code 0 iff all criteria hold.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "hyperset/afa.hpp"
#include "hyperset/axioms.hpp"
#include "hyperset/bisim.hpp"
#include "hyperset/settheory.hpp"
#include "hyperset/textio.hpp"

using namespace hyperset;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int num, const std::string& name, bool ok, const std::string& note = {}) {
    std::printf("criterion %2d  %-34s %s%s%s\n", num, name.c_str(),
                ok ? "PASS" : "FAIL", note.empty() ? "" : "  ", note.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return {};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string golden_path(const std::string& name) {
    return std::string(HYPERSET_TEST_DIR) + "/golden/" + name;
}

// Mode-appropriate membership: z occurs among the children of x.
bool contains(HypersetId x, HypersetId z) {
    for (HypersetId kid : children(x))
        if (kid == z) return true;
    return false;
}

long vm_peak_kb() {
    std::ifstream in("/proc/self/status");
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind("VmHWM:", 0) == 0) {
            long kb = 0;
            std::sscanf(line.c_str(), "VmHWM: %ld", &kb);
            return kb;
        }
    }
    return -1;
}

// ── criteria ─────────────────────────────────────────────────────────────────

void criterion_1_figure1() {
    auto start = Clock::now();
    // The three-equation cyclic system keeps its three sets pairwise distinct
    // under counting equality, where an edge contributes exactly one
    // membership; all nine ordered pairs of the table are checked.
    LoweredSystem ls = lower(parse("x = {x, y, z}; y = {x, z}; z = {x};"));
    Decoration d = decorate(ls.system, Mode::Multiset);

    bool ok = d.values.size() == 3;
    ok = ok && d.values[0] != d.values[1] && d.values[0] != d.values[2] &&
         d.values[1] != d.values[2];

    bool edge[3][3] = {};
    for (NodeId v = 0; v < 3 && ok; ++v)
        for (NodeId c : ls.system.children(v)) edge[v][c] = true;
    int matches = 0;
    for (NodeId a = 0; a < 3; ++a)
        for (NodeId b = 0; b < 3; ++b) {
            bool got = contains(d.values[a], d.values[b]);
            if (got == edge[a][b]) ++matches;
        }
    ok = ok && matches == 9;

    // In set mode the same system collapses: the all-relation is a
    // bisimulation, so every node solves to the one-element self-loop.
    Decoration set_d = decorate(ls.system, Mode::Set);
    ok = ok && set_d.values[0] == quine_atom() && set_d.values[1] == quine_atom() &&
         set_d.values[2] == quine_atom();

    double elapsed = ms_since(start);
    ok = ok && elapsed < 10.0;
    char note[64];
    std::snprintf(note, sizeof note, "(%.2f ms)", elapsed);
    report(1, "figure-1 reproduction", ok, note);
}

void criterion_2_quine() {
    ApgSystem sys = from_equations({{"q", {"q"}}});
    HypersetId q = intern(sys, 0, Mode::Set);

    RootedSystem stored = CanonStore::global().system_of(q);
    bool ok = stored.system.node_count() == 1 &&
              stored.system.children(0).size() == 1 &&
              stored.system.children(0)[0] == 0;

    ok = ok && member(q, q);
    ok = ok && equal(q, tuple({q}));
    ok = ok && successor(q) == q;
    ok = ok && !is_accessible(q);

    ApgSystem cycle = from_equations({{"y", {"z"}}, {"z", {"y"}}});
    ok = ok && intern(cycle, 0, Mode::Set) == q;

    report(2, "quine atom", ok);
}

void criterion_3_oracle() {
    auto start = Clock::now();
    Rng rng(30003);
    bool ok = true;
    for (int i = 0; i < 1000 && ok; ++i) {
        ApgSystem sys = random_system(rng, 50);
        for (Mode mode : {Mode::Set, Mode::Multiset}) {
            Partition fast = minimize(sys, mode).partition;
            Partition naive = naive_refine_oracle(sys, mode);
            ok = ok && fast == naive;
        }
    }
    double elapsed = ms_since(start);
    ok = ok && elapsed < 30000.0;
    char note[64];
    std::snprintf(note, sizeof note, "(1000 systems, %.0f ms)", elapsed);
    report(3, "oracle equivalence", ok, note);
}

void criterion_4_extensionality() {
    Rng rng(40004);
    bool ok = true;
    for (int i = 0; i < 500 && ok; ++i) {
        HypersetId a = random_handle(rng, 30, Mode::Set);
        HypersetId b = rng.percent(25) ? a : random_handle(rng, 30, Mode::Set);
        std::vector<HypersetId> probes = elements(a);
        for (HypersetId z : elements(b)) probes.push_back(z);
        bool agree = true;
        for (HypersetId z : probes) agree = agree && (member(z, a) == member(z, b));
        ok = equal(a, b) == agree;
    }

    // Idempotence over every handle interned so far, both modes.
    auto& store = CanonStore::global();
    const std::size_t count = store.size();
    for (std::size_t i = 0; i < count && ok; ++i) {
        HypersetId h = store.handle_at(i);
        RootedSystem stored = store.system_of(h);
        ok = store.intern(stored.system, stored.root, h.mode()) == h;
    }
    char note[64];
    std::snprintf(note, sizeof note, "(%zu interned handles)", count);
    report(4, "extensionality and idempotence", ok, note);
}

void criterion_5_axiom_suites() {
    AxiomsOptions opts;
    opts.seed = 50005;
    opts.cases = 500;
    std::vector<SuiteResult> results = run_axiom_suites(opts, nullptr);

    const std::vector<std::string> required = {
        "tupling",        "separation",          "replace",
        "big-union",      "pairing-injectivity", "exponentiation-membership",
    };
    bool ok = true;
    for (const std::string& name : required) {
        bool found = false;
        for (const SuiteResult& r : results)
            if (r.name == name) {
                found = true;
                ok = ok && r.failures == 0 && r.cases == opts.cases;
            }
        ok = ok && found;
    }

    // Exponentiation cardinality law for all |a|, |b| <= 3.
    std::vector<HypersetId> pool{empty_set(), numeral(1), numeral(2), quine_atom(),
                                 tuple({quine_atom(), numeral(1)})};
    for (std::size_t na = 0; na <= 3 && ok; ++na)
        for (std::size_t nb = 0; nb <= 3 && ok; ++nb) {
            std::vector<HypersetId> a(pool.begin(), pool.begin() + na);
            std::vector<HypersetId> b(pool.begin(), pool.begin() + nb);
            std::size_t expected = 1;
            for (std::size_t k = 0; k < na; ++k) expected *= nb;
            ok = cardinality(exponentiation(tuple(a), tuple(b))) == expected;
        }

    report(5, "axiom suites (500 cases each)", ok);
}

void criterion_6_afa() {
    Rng rng(60006);
    bool ok = true;
    for (int i = 0; i < 200 && ok; ++i) {
        ApgSystem sys = random_system(rng, 15);
        std::vector<HypersetId> names;
        for (NodeId v = 0; v < sys.node_count(); ++v)
            names.push_back(numeral(static_cast<unsigned>(v)));
        HypersetId g = encode_graph(sys, names);
        ok = verify_decoration(g, afa_decorate(g));

        // relabeling and edge permutation leave the decoration (and its
        // canonical text) unchanged
        Decoration base = decorate(sys, Mode::Set);
        std::vector<NodeId> perm(sys.node_count());
        for (std::size_t v = 0; v < perm.size(); ++v) perm[v] = static_cast<NodeId>(v);
        for (std::size_t v = perm.size(); v > 1; --v)
            std::swap(perm[v - 1], perm[rng.below(v)]);
        ApgSystem shuffled;
        for (std::size_t v = 0; v < sys.node_count(); ++v) shuffled.add_node();
        for (NodeId v = 0; v < sys.node_count(); ++v) {
            std::vector<NodeId> kids(sys.children(v).begin(), sys.children(v).end());
            for (std::size_t k = kids.size(); k > 1; --k)
                std::swap(kids[k - 1], kids[rng.below(k)]);
            for (NodeId c : kids) shuffled.add_edge(perm[v], perm[c]);
        }
        Decoration moved = decorate(shuffled, Mode::Set);
        for (NodeId v = 0; v < sys.node_count() && ok; ++v) {
            ok = moved.values[perm[v]] == base.values[v] &&
                 print_canonical(moved.values[perm[v]]) ==
                     print_canonical(base.values[v]);
        }
    }
    report(6, "afa verification (200 graphs)", ok);
}

void criterion_7_mode_distinction() {
    ApgSystem sys = from_equations({{"x", {"a", "a"}}, {"x2", {"a"}}, {"a", {}}});
    NodeId x = *node_by_label(sys, "x");
    NodeId x2 = *node_by_label(sys, "x2");
    bool ok = intern(sys, x, Mode::Multiset) != intern(sys, x2, Mode::Multiset);
    ok = ok && intern(sys, x, Mode::Set) == intern(sys, x2, Mode::Set);

    // Set partition coarsens the multiset partition on the criterion-3
    // population.
    Rng rng(30003);
    for (int i = 0; i < 1000 && ok; ++i) {
        ApgSystem rnd = random_system(rng, 50);
        Partition set_part = minimize(rnd, Mode::Set).partition;
        Partition multi_part = minimize(rnd, Mode::Multiset).partition;
        for (const auto& block : multi_part.blocks)
            for (NodeId v : block) ok = ok && set_part.same_block(block[0], v);
    }
    report(7, "multiset/set distinction", ok);
}

void criterion_8_roundtrip() {
    Rng rng(80008);
    bool ok = true;
    for (int i = 0; i < 500 && ok; ++i) {
        Mode mode = rng.percent(50) ? Mode::Set : Mode::Multiset;
        HypersetId h = random_handle(rng, 30, mode);
        LoweredSystem ls = lower(parse(print_canonical(h)));
        ok = intern(ls.system, ls.names.at("x0"), mode) == h;
    }

    ok = ok && print_canonical(empty_set()) == read_file(golden_path("empty.txt"));
    ok = ok && print_canonical(quine_atom()) == read_file(golden_path("quine.txt"));
    for (unsigned n = 0; n <= 5 && ok; ++n)
        ok = print_canonical(numeral(n)) ==
             read_file(golden_path("numeral" + std::to_string(n) + ".txt"));

    report(8, "round-trip and golden files", ok);
}

void criterion_9_performance() {
    Rng rng(90009);
    ApgSystem sys;
    const std::size_t n = 100000;
    const std::size_t m = 300000;
    for (std::size_t v = 0; v < n; ++v) sys.add_node();
    for (std::size_t e = 0; e < m; ++e) {
        NodeId from = static_cast<NodeId>(rng.below(n));
        NodeId to = static_cast<NodeId>(rng.below(n));
        sys.add_edge(from, to);
    }

    auto start = Clock::now();
    MinimizeResult res = minimize(sys, Mode::Set);
    double elapsed = ms_since(start);

    long peak_kb = vm_peak_kb();
    bool ok = res.partition.block_count() > 0 && res.partition.consistent();
    ok = ok && elapsed < 5000.0;
    ok = ok && peak_kb > 0 && peak_kb < 1024 * 1024;
    char note[96];
    std::snprintf(note, sizeof note, "(%.0f ms, peak %.0f MB, %zu blocks)", elapsed,
                  peak_kb / 1024.0, res.partition.block_count());
    report(9, "minimize performance at 1e5 nodes", ok, note);
}

void criterion_10_natural_number_sets() {
    bool ok = !is_natural_number_set(empty_set());
    ok = ok && !is_natural_number_set(tuple({empty_set(), tuple({empty_set()})}));

    // {q}: the quine atom is a fixed point of the successor operation
    // (q = q ∪ {q}), so the successor direction of the condition holds with
    // q as its own witness; the u = ∅ direction fails because ∅ ∉ {q}.
    // Golden value frozen from the direct checker: false.
    ok = ok && !is_natural_number_set(tuple({quine_atom()}));

    report(10, "natural-number-set checker", ok);
}

}  // namespace

int main() {
    std::printf("hyperset acceptance suite\n");
    criterion_1_figure1();
    criterion_2_quine();
    criterion_3_oracle();
    criterion_4_extensionality();
    criterion_5_axiom_suites();
    criterion_6_afa();
    criterion_7_mode_distinction();
    criterion_8_roundtrip();
    criterion_9_performance();
    criterion_10_natural_number_sets();
    if (g_failures == 0) {
        std::printf("all 10 criteria passed\n");
        return 0;
    }
    std::printf("%d criteria failed\n", g_failures);
    return 1;
}
