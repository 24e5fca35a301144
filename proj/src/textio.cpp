#include "hyperset/textio.hpp"

#include <cctype>
#include <functional>
#include <numeric>
#include <unordered_set>

namespace hyperset {

namespace {

// ── lexer ────────────────────────────────────────────────────────────────────

enum class Tok { Ident, Equals, LBrace, RBrace, LParen, RParen, Comma, Semi, End };

const char* token_name(Tok t) {
    switch (t) {
        case Tok::Ident: return "identifier";
        case Tok::Equals: return "'='";
        case Tok::LBrace: return "'{'";
        case Tok::RBrace: return "'}'";
        case Tok::LParen: return "'('";
        case Tok::RParen: return "')'";
        case Tok::Comma: return "','";
        case Tok::Semi: return "';'";
        case Tok::End: return "end of input";
    }
    return "?";
}

struct Token {
    Tok kind;
    std::string text;
    SourcePos pos;
};

bool is_ident_start(char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
}

bool is_ident_char(char c) {
    return is_ident_start(c) || (c >= '0' && c <= '9') || c == '\'';
}

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        skip_trivia();
        SourcePos pos{line_, col_};
        if (at_end()) return {Tok::End, {}, pos};
        char c = peek();
        if (is_ident_start(c)) {
            std::string text;
            while (!at_end() && is_ident_char(peek())) text += advance();
            return {Tok::Ident, std::move(text), pos};
        }
        advance();
        switch (c) {
            case '=': return {Tok::Equals, "=", pos};
            case '{': return {Tok::LBrace, "{", pos};
            case '}': return {Tok::RBrace, "}", pos};
            case '(': return {Tok::LParen, "(", pos};
            case ')': return {Tok::RParen, ")", pos};
            case ',': return {Tok::Comma, ",", pos};
            case ';': return {Tok::Semi, ";", pos};
            default: break;
        }
        std::string shown = std::isprint(static_cast<unsigned char>(c))
                                ? std::string(1, c)
                                : "\\x" + std::to_string(static_cast<unsigned char>(c));
        throw ParseError("unexpected character '" + shown + "'", pos.line, pos.column);
    }

private:
    bool at_end() const { return i_ >= src_.size(); }
    char peek() const { return src_[i_]; }

    char advance() {
        char c = src_[i_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void skip_trivia() {
        while (!at_end()) {
            char c = peek();
            if (c == '#') {
                while (!at_end() && peek() != '\n') advance();
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance();
            } else {
                break;
            }
        }
    }

    std::string_view src_;
    std::size_t i_ = 0;
    int line_ = 1;
    int col_ = 1;
};

// ── parser ───────────────────────────────────────────────────────────────────

class Parser {
public:
    explicit Parser(std::string_view src) : lex_(src), cur_(lex_.next()) {}

    SystemAst parse_system() {
        SystemAst ast;
        std::unordered_set<std::string> defined;
        while (cur_.kind != Tok::End) {
            Statement st;
            st.pos = cur_.pos;
            st.name = expect(Tok::Ident).text;
            if (!defined.insert(st.name).second)
                throw ParseError("duplicate definition of '" + st.name + "'",
                                 st.pos.line, st.pos.column);
            expect(Tok::Equals);
            st.expr = parse_expr();
            expect(Tok::Semi);
            ast.statements.push_back(std::move(st));
        }
        return ast;
    }

private:
    SetExpr parse_expr() {
        SetExpr e;
        e.pos = cur_.pos;
        switch (cur_.kind) {
            case Tok::Ident:
                e.kind = SetExpr::Kind::Ident;
                e.ident = advance().text;
                return e;
            case Tok::LBrace:
                advance();
                e.kind = SetExpr::Kind::Tuple;
                if (cur_.kind != Tok::RBrace) {
                    e.items.push_back(parse_expr());
                    while (cur_.kind == Tok::Comma) {
                        advance();
                        e.items.push_back(parse_expr());
                    }
                }
                expect(Tok::RBrace);
                return e;
            case Tok::LParen:
                advance();
                e.kind = SetExpr::Kind::Pair;
                e.items.push_back(parse_expr());
                expect(Tok::Comma);
                e.items.push_back(parse_expr());
                expect(Tok::RParen);
                return e;
            default:
                throw ParseError(std::string("expected an expression, found ") +
                                     token_name(cur_.kind),
                                 cur_.pos.line, cur_.pos.column);
        }
    }

    Token advance() {
        Token t = std::move(cur_);
        cur_ = lex_.next();
        return t;
    }

    Token expect(Tok kind) {
        if (cur_.kind != kind)
            throw ParseError(std::string("expected ") + token_name(kind) + ", found " +
                                 token_name(cur_.kind),
                             cur_.pos.line, cur_.pos.column);
        return advance();
    }

    Lexer lex_;
    Token cur_;
};

std::string escape_dot(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

std::string emit_dot(const ApgSystem& sys,
                     const std::function<std::string(NodeId)>& label_of) {
    std::string out = "digraph hyperset {\n";
    for (NodeId v = 0; v < sys.node_count(); ++v)
        out += "  n" + std::to_string(v) + " [label=\"" + escape_dot(label_of(v)) +
               "\"];\n";
    for (NodeId v = 0; v < sys.node_count(); ++v)
        for (NodeId c : sys.children(v))
            out += "  n" + std::to_string(v) + " -> n" + std::to_string(c) + ";\n";
    out += "}\n";
    return out;
}

}  // namespace

SystemAst parse(std::string_view text) { return Parser(text).parse_system(); }

LoweredSystem lower(const SystemAst& ast, bool strict) {
    // Slot per distinct identifier (defined or referenced).
    std::unordered_map<std::string, std::uint32_t> slot_of;
    std::vector<std::string> slot_name;
    auto get_slot = [&](const std::string& name) {
        auto [it, fresh] = slot_of.emplace(name, slot_name.size());
        if (fresh) slot_name.push_back(name);
        return it->second;
    };
    std::function<void(const SetExpr&)> collect = [&](const SetExpr& e) {
        if (e.kind == SetExpr::Kind::Ident) {
            get_slot(e.ident);
            return;
        }
        for (const SetExpr& item : e.items) collect(item);
    };
    for (const Statement& st : ast.statements) {
        get_slot(st.name);
        collect(st.expr);
    }

    if (strict) {
        std::unordered_set<std::string> defined;
        for (const Statement& st : ast.statements) defined.insert(st.name);
        for (const std::string& name : slot_name)
            if (!defined.count(name)) throw UndefinedNameError(name);
    }

    // Alias statements (x = y) merge identifiers; each alias class may carry
    // at most one structural definition.
    std::vector<std::uint32_t> parent(slot_name.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::uint32_t(std::uint32_t)> find = [&](std::uint32_t s) {
        while (parent[s] != s) s = parent[s] = parent[parent[s]];
        return s;
    };
    for (const Statement& st : ast.statements)
        if (st.expr.kind == SetExpr::Kind::Ident)
            parent[find(get_slot(st.name))] = find(get_slot(st.expr.ident));

    std::vector<const Statement*> def_of(slot_name.size(), nullptr);
    for (const Statement& st : ast.statements) {
        if (st.expr.kind == SetExpr::Kind::Ident) continue;
        std::uint32_t r = find(get_slot(st.name));
        if (def_of[r])
            throw ParseError("'" + st.name + "' is aliased to '" + def_of[r]->name +
                                 "', which already has a definition",
                             st.pos.line, st.pos.column);
        def_of[r] = &st;
    }

    LoweredSystem out;
    std::vector<NodeId> node_of(slot_name.size(), kNoNode);
    for (std::uint32_t s = 0; s < slot_name.size(); ++s) {
        std::uint32_t r = find(s);
        if (node_of[r] == kNoNode) node_of[r] = out.system.add_node(slot_name[r]);
        node_of[s] = node_of[r];
    }
    for (std::uint32_t s = 0; s < slot_name.size(); ++s)
        out.names.emplace(slot_name[s], node_of[s]);

    // Kuratowski lowering of pair sugar: (a, b) becomes {{a}, {a, b}} at the
    // graph level, so decorations satisfy the pairing structure by
    // construction.
    std::function<NodeId(const SetExpr&)> lower_node;
    auto attach_pair = [&](NodeId v, const SetExpr& e) {
        NodeId a = lower_node(e.items[0]);
        NodeId b = lower_node(e.items[1]);
        NodeId single = out.system.add_node();
        out.system.add_edge(single, a);
        NodeId both = out.system.add_node();
        out.system.add_edge(both, a);
        out.system.add_edge(both, b);
        out.system.add_edge(v, single);
        out.system.add_edge(v, both);
    };
    lower_node = [&](const SetExpr& e) -> NodeId {
        switch (e.kind) {
            case SetExpr::Kind::Ident:
                return node_of[get_slot(e.ident)];
            case SetExpr::Kind::Tuple: {
                NodeId v = out.system.add_node();
                for (const SetExpr& item : e.items)
                    out.system.add_edge(v, lower_node(item));
                return v;
            }
            case SetExpr::Kind::Pair: {
                NodeId v = out.system.add_node();
                attach_pair(v, e);
                return v;
            }
        }
        throw Error("unreachable expression kind");
    };

    for (const Statement& st : ast.statements) {
        if (st.expr.kind == SetExpr::Kind::Ident) continue;
        NodeId v = node_of[get_slot(st.name)];
        if (st.expr.kind == SetExpr::Kind::Tuple) {
            for (const SetExpr& item : st.expr.items)
                out.system.add_edge(v, lower_node(item));
        } else {
            attach_pair(v, st.expr);
        }
    }
    return out;
}

std::string print_canonical(HypersetId h) {
    return CanonStore::global().canonical_text(h);
}

std::string to_dot(const ApgSystem& sys) {
    return emit_dot(sys, [&](NodeId v) {
        const std::string& l = sys.label(v);
        return l.empty() ? "n" + std::to_string(v) : l;
    });
}

std::string to_dot(HypersetId h) {
    RootedSystem rooted = CanonStore::global().system_of(h);
    const ApgSystem& sys = rooted.system;
    return emit_dot(sys, [](NodeId v) { return "x" + std::to_string(v); });
}

}  // namespace hyperset
