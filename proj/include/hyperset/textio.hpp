#ifndef HYPERSET_TEXTIO_HPP
#define HYPERSET_TEXTIO_HPP

#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hyperset/store.hpp"

namespace hyperset {

// Surface syntax for systems of set equations:
//
//   system := stmt*
//   stmt   := IDENT "=" expr ";"
//   expr   := IDENT
//           | "{" [ expr ("," expr)* ] "}"
//           | "(" expr "," expr ")"          pair sugar (Kuratowski)
//
// "#" starts a comment running to end of line; whitespace is insignificant;
// identifiers match [A-Za-z_][A-Za-z0-9_']*.

struct SourcePos {
    int line = 1;
    int column = 1;
};

struct SetExpr {
    enum class Kind { Ident, Tuple, Pair };
    Kind kind = Kind::Tuple;
    std::string ident;           // Kind::Ident
    std::vector<SetExpr> items;  // Tuple: any arity; Pair: exactly two
    SourcePos pos;
};

struct Statement {
    std::string name;
    SetExpr expr;
    SourcePos pos;
};

struct SystemAst {
    std::vector<Statement> statements;
};

// Throws ParseError (with position) on syntax errors and duplicate
// definitions.
SystemAst parse(std::string_view text);

struct LoweredSystem {
    ApgSystem system;
    std::unordered_map<std::string, NodeId> names;
};

// One node per identifier and per anonymous subexpression; pair sugar lowers
// to Kuratowski nodes.  An identifier that is only referenced becomes a
// childless node; with `strict` it throws UndefinedNameError instead.
LoweredSystem lower(const SystemAst& ast, bool strict = false);

// The canonical equation block of h: "x0 = {...};" per line over the
// canonical numbering, root first.  Equal handles print byte-identically,
// and parsing + interning the output returns h.
std::string print_canonical(HypersetId h);

// Graphviz DOT rendering of a raw system (labels where present).
std::string to_dot(const ApgSystem& sys);

// DOT rendering of the canonical graph of h; node ids follow the canonical
// numbering.
std::string to_dot(HypersetId h);

}  // namespace hyperset

#endif  // HYPERSET_TEXTIO_HPP
