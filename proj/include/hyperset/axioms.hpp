#ifndef HYPERSET_AXIOMS_HPP
#define HYPERSET_AXIOMS_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hyperset/apg.hpp"
#include "hyperset/settheory.hpp"

namespace hyperset {

// Deterministic splitmix64 stream.  Hand-rolled so that seeded runs produce
// identical case lists on every platform and standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n); returns 0 for n == 0.
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

    // Uniform in [lo, hi], inclusive.
    std::uint64_t range(std::uint64_t lo, std::uint64_t hi) {
        return lo + below(hi - lo + 1);
    }

    bool percent(int p) { return below(100) < static_cast<std::uint64_t>(p); }

private:
    std::uint64_t state_;
};

// Random equation system: node count uniform in 1..max_nodes, edge count
// uniform in 0..3n, endpoints uniform.
ApgSystem random_system(Rng& rng, int max_nodes);

// A random canonical hyperset: random system interned at a random root.
HypersetId random_handle(Rng& rng, int max_nodes, Mode mode);

struct AxiomsOptions {
    std::uint64_t seed = 1;
    int cases = 200;
    int max_nodes = 30;
    std::size_t max_exp = kDefaultExponentLimit;
    bool inject_fault = false;  // corrupt one tupling case; harness self-check
};

struct SuiteResult {
    std::string name;
    int cases = 0;
    int failures = 0;
    bool passed() const { return failures == 0; }
};

// Runs the full property suite on seeded random systems, one line per suite
// to `log` when non-null.  Output is deterministic given the options.
std::vector<SuiteResult> run_axiom_suites(const AxiomsOptions& opts,
                                          std::ostream* log);

bool all_passed(const std::vector<SuiteResult>& results);

}  // namespace hyperset

#endif  // HYPERSET_AXIOMS_HPP
