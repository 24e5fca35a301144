// Command-line front end: solve equation files by unique decoration, compare
// and query canonical hypersets, and run the randomized property suites.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hyperset/afa.hpp"
#include "hyperset/axioms.hpp"
#include "hyperset/settheory.hpp"
#include "hyperset/textio.hpp"

namespace {

constexpr int kExitOk = 0;        // success / positive verdict
constexpr int kExitUsage = 1;     // usage or parse error
constexpr int kExitSemantic = 2;  // unknown root, not a graph, limits
constexpr int kExitNegative = 3;  // negative verdict

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw hyperset::Error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

hyperset::LoweredSystem load(const std::string& path, bool strict) {
    return hyperset::lower(hyperset::parse(read_file(path)), strict);
}

// A root name that never occurs in the file denotes the empty set, unless
// strict mode asks for an error.
hyperset::NodeId root_node(hyperset::LoweredSystem& ls, const std::string& name,
                           bool strict) {
    auto it = ls.names.find(name);
    if (it != ls.names.end()) return it->second;
    if (strict) throw hyperset::UndefinedNameError(name);
    return ls.system.add_node(name);
}

struct SolveArgs {
    std::string file;
    std::string root;
    bool multiset = false;
    bool strict = false;
    std::string format = "text";
};

struct EqArgs {
    std::string file_a, root_a, file_b, root_b;
    bool multiset = false;
    bool strict = false;
};

struct MemberArgs {
    std::string file, z, x;
    bool strict = false;
};

struct WfArgs {
    std::string file, root;
    bool strict = false;
};

struct DotArgs {
    std::string file;
    std::string root;
    bool strict = false;
};

struct AxiomArgs {
    std::uint64_t seed = 1;
    int cases = 200;
    std::size_t max_exp = hyperset::kDefaultExponentLimit;
    bool inject_fault = false;
};

int cmd_solve(const SolveArgs& args) {
    auto ls = load(args.file, args.strict);
    hyperset::NodeId root = root_node(ls, args.root, args.strict);
    hyperset::Mode mode = args.multiset ? hyperset::Mode::Multiset : hyperset::Mode::Set;
    hyperset::HypersetId h = hyperset::intern(ls.system, root, mode);
    if (args.format == "dot")
        std::cout << hyperset::to_dot(h);
    else
        std::cout << hyperset::print_canonical(h);
    return kExitOk;
}

int cmd_eq(const EqArgs& args) {
    hyperset::Mode mode = args.multiset ? hyperset::Mode::Multiset : hyperset::Mode::Set;
    auto ls_a = load(args.file_a, args.strict);
    auto ls_b = load(args.file_b, args.strict);
    hyperset::HypersetId a =
        hyperset::intern(ls_a.system, root_node(ls_a, args.root_a, args.strict), mode);
    hyperset::HypersetId b =
        hyperset::intern(ls_b.system, root_node(ls_b, args.root_b, args.strict), mode);
    bool eq = hyperset::equal(a, b);
    std::cout << (eq ? "equal\n" : "not equal\n");
    return eq ? kExitOk : kExitNegative;
}

int cmd_member(const MemberArgs& args) {
    auto ls = load(args.file, args.strict);
    hyperset::NodeId zn = root_node(ls, args.z, args.strict);
    hyperset::NodeId xn = root_node(ls, args.x, args.strict);
    hyperset::HypersetId z = hyperset::intern(ls.system, zn, hyperset::Mode::Set);
    hyperset::HypersetId x = hyperset::intern(ls.system, xn, hyperset::Mode::Set);
    bool yes = hyperset::member(z, x);
    std::cout << (yes ? "member\n" : "not a member\n");
    return yes ? kExitOk : kExitNegative;
}

int cmd_wf(const WfArgs& args) {
    auto ls = load(args.file, args.strict);
    hyperset::HypersetId h =
        hyperset::intern(ls.system, root_node(ls, args.root, args.strict),
                         hyperset::Mode::Set);
    bool acc = hyperset::is_accessible(h);
    std::cout << (acc ? "accessible\n" : "non-wellfounded\n");
    return acc ? kExitOk : kExitNegative;
}

int cmd_dot(const DotArgs& args) {
    auto ls = load(args.file, args.strict);
    if (args.root.empty()) {
        std::cout << hyperset::to_dot(ls.system);
    } else {
        hyperset::NodeId root = root_node(ls, args.root, args.strict);
        auto restricted = hyperset::reachable_restrict(ls.system, root);
        std::cout << hyperset::to_dot(restricted.system);
    }
    return kExitOk;
}

int cmd_axioms(const AxiomArgs& args) {
    hyperset::AxiomsOptions opts;
    opts.seed = args.seed;
    opts.cases = args.cases;
    opts.max_exp = args.max_exp;
    opts.inject_fault = args.inject_fault;
    std::cout << "axioms: seed=" << opts.seed << " cases=" << opts.cases
              << " max-nodes=" << opts.max_nodes << "\n";
    auto results = hyperset::run_axiom_suites(opts, &std::cout);
    if (hyperset::all_passed(results)) {
        std::cout << "all suites passed\n";
        return kExitOk;
    }
    int failed = 0;
    for (const auto& r : results) failed += r.failures != 0;
    std::cout << failed << " suite(s) failed\n";
    return kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite non-wellfounded set calculator"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    auto* solve = app.add_subcommand(
        "solve", "solve an equation file and print the root's canonical form");
    solve->add_option("file", solve_args.file, "equation file")->required();
    solve->add_option("--root", solve_args.root, "root identifier")->required();
    solve->add_flag("--multiset", solve_args.multiset, "multiset mode");
    solve->add_flag("--strict", solve_args.strict, "reject undefined identifiers");
    solve->add_option("--format", solve_args.format, "output format")
        ->check(CLI::IsMember({"text", "dot"}));

    EqArgs eq_args;
    auto* eq = app.add_subcommand("eq", "test two roots for set equality");
    eq->add_option("file-a", eq_args.file_a)->required();
    eq->add_option("root-a", eq_args.root_a)->required();
    eq->add_option("file-b", eq_args.file_b)->required();
    eq->add_option("root-b", eq_args.root_b)->required();
    eq->add_flag("--multiset", eq_args.multiset, "multiset mode");
    eq->add_flag("--strict", eq_args.strict, "reject undefined identifiers");

    MemberArgs member_args;
    auto* member = app.add_subcommand("member", "test whether Z is an element of X");
    member->add_option("file", member_args.file)->required();
    member->add_option("z", member_args.z)->required();
    member->add_option("x", member_args.x)->required();
    member->add_flag("--strict", member_args.strict, "reject undefined identifiers");

    WfArgs wf_args;
    auto* wf = app.add_subcommand("wf", "report whether the root is accessible");
    wf->add_option("file", wf_args.file)->required();
    wf->add_option("root", wf_args.root)->required();
    wf->add_flag("--strict", wf_args.strict, "reject undefined identifiers");

    DotArgs dot_args;
    auto* dot = app.add_subcommand("dot", "emit the system (or a root) as DOT");
    dot->add_option("file", dot_args.file)->required();
    dot->add_option("--root", dot_args.root, "restrict to the part reachable here");
    dot->add_flag("--strict", dot_args.strict, "reject undefined identifiers");

    AxiomArgs axiom_args;
    auto* axioms = app.add_subcommand("axioms", "run the randomized property suites");
    axioms->add_option("--seed", axiom_args.seed, "PRNG seed");
    axioms->add_option("--cases", axiom_args.cases, "cases per suite")
        ->check(CLI::PositiveNumber);
    axioms->add_option("--max-exp", axiom_args.max_exp,
                       "largest exponentiation to enumerate");
    axioms->add_flag("--inject-fault", axiom_args.inject_fault,
                     "deliberately fail one case (harness self-check)")
        ->group("");  // hidden

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (const char* env = std::getenv("HYPERSET_MAX_EXP"))
        axiom_args.max_exp = std::strtoull(env, nullptr, 10);

    try {
        if (solve->parsed()) return cmd_solve(solve_args);
        if (eq->parsed()) return cmd_eq(eq_args);
        if (member->parsed()) return cmd_member(member_args);
        if (wf->parsed()) return cmd_wf(wf_args);
        if (dot->parsed()) return cmd_dot(dot_args);
        if (axioms->parsed()) return cmd_axioms(axiom_args);
    } catch (const hyperset::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const hyperset::UndefinedNameError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSemantic;
    } catch (const hyperset::NotAGraphError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSemantic;
    } catch (const hyperset::ExponentiationLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSemantic;
    } catch (const hyperset::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
