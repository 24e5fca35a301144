#include <doctest.h>

#include <fstream>
#include <sstream>

#include "hyperset/axioms.hpp"
#include "hyperset/settheory.hpp"
#include "hyperset/textio.hpp"

using namespace hyperset;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string golden_path(const std::string& name) {
    return std::string(HYPERSET_TEST_DIR) + "/golden/" + name;
}

HypersetId intern_text(const std::string& text, const std::string& root,
                       Mode mode = Mode::Set) {
    LoweredSystem ls = lower(parse(text));
    return intern(ls.system, ls.names.at(root), mode);
}

}  // namespace

TEST_CASE("parse") {
    SUBCASE("three equations") {
        SystemAst ast = parse("x = {x, y, z}; y = {x, z}; z = {x};");
        REQUIRE(ast.statements.size() == 3);
        CHECK(ast.statements[0].name == "x");
        CHECK(ast.statements[0].expr.items.size() == 3);
    }
    SUBCASE("self-loop") {
        SystemAst ast = parse("q = {q};");
        REQUIRE(ast.statements.size() == 1);
        CHECK(ast.statements[0].expr.kind == SetExpr::Kind::Tuple);
    }
    SUBCASE("empty braces") {
        SystemAst ast = parse("a = {};");
        CHECK(ast.statements[0].expr.items.empty());
    }
    SUBCASE("comments and whitespace are insignificant") {
        SystemAst ast = parse("# intro\n  a = { b ,\tc };\n# trailing");
        REQUIRE(ast.statements.size() == 1);
        CHECK(ast.statements[0].expr.items.size() == 2);
    }
    SUBCASE("identifiers may contain primes and digits") {
        SystemAst ast = parse("n' = {n'9_x};");
        CHECK(ast.statements[0].name == "n'");
    }
    SUBCASE("pair sugar") {
        SystemAst ast = parse("p = (a, b);");
        CHECK(ast.statements[0].expr.kind == SetExpr::Kind::Pair);
    }
    SUBCASE("syntax errors carry positions") {
        try {
            parse("a = {b,\n};");
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.line() == 2);
            CHECK(e.column() == 1);
        }
        CHECK_THROWS_AS(parse("a = ;"), ParseError);
        CHECK_THROWS_AS(parse("a == {};"), ParseError);
        CHECK_THROWS_AS(parse("a = {b};;"), ParseError);
        CHECK_THROWS_AS(parse("a = (b);"), ParseError);
        CHECK_THROWS_AS(parse("$ = {};"), ParseError);
    }
    SUBCASE("duplicate definitions are rejected at parse time") {
        CHECK_THROWS_AS(parse("a = {}; a = {a};"), ParseError);
    }
}

TEST_CASE("lower") {
    SUBCASE("named nodes and edge counts") {
        LoweredSystem ls = lower(parse("x = {x, y, z}; y = {x, z}; z = {x};"));
        CHECK(ls.system.node_count() == 3);
        CHECK(ls.system.edge_count() == 6);
    }
    SUBCASE("anonymous braces get their own nodes") {
        LoweredSystem ls = lower(parse("a = {{}, {b}};"));
        // a, b, and two anonymous nodes
        CHECK(ls.system.node_count() == 4);
    }
    SUBCASE("undefined identifiers become childless nodes") {
        LoweredSystem ls = lower(parse("a = {b};"));
        CHECK(ls.system.children(ls.names.at("b")).empty());
    }
    SUBCASE("strict mode rejects undefined identifiers") {
        CHECK_THROWS_AS(lower(parse("a = {b};"), true), UndefinedNameError);
        CHECK_NOTHROW(lower(parse("a = {b}; b = {};"), true));
    }
    SUBCASE("alias statements merge identifiers") {
        LoweredSystem ls = lower(parse("a = b; b = {c}; c = {};"));
        CHECK(ls.names.at("a") == ls.names.at("b"));
        CHECK(ls.system.children(ls.names.at("a")).size() == 1);
        CHECK_THROWS_AS(lower(parse("a = {}; b = {b}; a = b;")), ParseError);
    }
    SUBCASE("unconstrained aliases denote the empty set") {
        LoweredSystem self = lower(parse("x = x;"));
        CHECK(self.system.children(self.names.at("x")).empty());
        LoweredSystem cycle = lower(parse("x = y; y = x;"));
        CHECK(cycle.names.at("x") == cycle.names.at("y"));
        CHECK(cycle.system.children(cycle.names.at("x")).empty());
    }
    SUBCASE("pair sugar lowers to the kuratowski shape") {
        HypersetId p = intern_text("p = (a, b); a = {}; b = {a};", "p");
        HypersetId a = empty_set();
        HypersetId b = tuple({a});
        CHECK(p == kuratowski_pair(a, b));
    }
    SUBCASE("degenerate pair still decodes") {
        HypersetId p = intern_text("p = (a, a); a = {};", "p");
        CHECK(p == kuratowski_pair(empty_set(), empty_set()));
    }
}

TEST_CASE("print_canonical matches the frozen golden files") {
    CHECK(print_canonical(empty_set()) == read_file(golden_path("empty.txt")));
    CHECK(print_canonical(quine_atom()) == read_file(golden_path("quine.txt")));
    for (unsigned n = 0; n <= 5; ++n)
        CHECK(print_canonical(numeral(n)) ==
              read_file(golden_path("numeral" + std::to_string(n) + ".txt")));
}

TEST_CASE("print_canonical shapes") {
    CHECK(print_canonical(quine_atom()) == "x0 = {x0};\n");
    CHECK(print_canonical(empty_set()) == "x0 = {};\n");
    CHECK(print_canonical(numeral(2)) == "x0 = {x1, x2};\nx1 = {};\nx2 = {x1};\n");

    SUBCASE("construction history does not matter") {
        HypersetId via_equations = intern_text("s = {e, o}; o = {e}; e = {};", "s");
        CHECK(print_canonical(via_equations) == print_canonical(numeral(2)));
    }
    SUBCASE("multiset text keeps multiplicities") {
        ApgSystem sys = from_equations({{"x", {"a", "a"}}, {"a", {}}});
        HypersetId h = intern(sys, 0, Mode::Multiset);
        CHECK(print_canonical(h) == "x0 = {x1, x1};\nx1 = {};\n");
    }
}

TEST_CASE("round-trip through the printer and parser") {
    Rng rng(73737);
    for (int i = 0; i < 200; ++i) {
        Mode mode = rng.percent(50) ? Mode::Set : Mode::Multiset;
        HypersetId h = random_handle(rng, 30, mode);
        LoweredSystem ls = lower(parse(print_canonical(h)));
        REQUIRE(intern(ls.system, ls.names.at("x0"), mode) == h);
    }
}

TEST_CASE("to_dot") {
    SUBCASE("empty set graph") {
        std::string dot = to_dot(empty_set());
        CHECK(dot == "digraph hyperset {\n  n0 [label=\"x0\"];\n}\n");
    }
    SUBCASE("quine atom has one self-edge") {
        std::string dot = to_dot(quine_atom());
        CHECK(dot ==
              "digraph hyperset {\n  n0 [label=\"x0\"];\n  n0 -> n0;\n}\n");
    }
    SUBCASE("three-node cyclic system keeps labels and six edges") {
        LoweredSystem ls = lower(parse("x = {x, y, z}; y = {x, z}; z = {x};"));
        std::string dot = to_dot(ls.system);
        CHECK(dot.find("label=\"x\"") != std::string::npos);
        std::size_t edges = 0;
        for (std::size_t pos = dot.find("->"); pos != std::string::npos;
             pos = dot.find("->", pos + 1))
            ++edges;
        CHECK(edges == 6);
    }
    SUBCASE("handles print deterministically") {
        CHECK(to_dot(numeral(2)) == to_dot(intern_text("s = {e, o}; o = {e}; e = {};", "s")));
    }
}

TEST_CASE("parser totality on fuzzed inputs") {
    Rng rng(12121);
    const std::string alphabet = "ab{}(),;= \n#'_0xX";
    for (int i = 0; i < 3000; ++i) {
        std::string input;
        for (std::uint64_t k = rng.below(40); k > 0; --k)
            input += alphabet[rng.below(alphabet.size())];
        try {
            LoweredSystem ls = lower(parse(input));
            (void)ls;
        } catch (const ParseError&) {
            // positioned failure is the expected outcome for junk
        }
    }
    SUBCASE("byte-level junk either parses or raises ParseError") {
        Rng bytes(999);
        for (int i = 0; i < 500; ++i) {
            std::string input;
            for (std::uint64_t k = bytes.below(24); k > 0; --k)
                input += static_cast<char>(bytes.below(256));
            try {
                parse(input);
            } catch (const ParseError&) {
            }
        }
    }
}
