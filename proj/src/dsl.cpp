#include "catkit/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace catkit::dsl {

TermPtr make_gen(std::string name, int line, int col) {
    auto t = std::make_shared<Term>();
    t->kind = Term::Kind::gen;
    t->name = std::move(name);
    t->line = line;
    t->col = col;
    return t;
}

TermPtr make_id(std::vector<std::string> object, int line, int col) {
    auto t = std::make_shared<Term>();
    t->kind = Term::Kind::id;
    t->object = std::move(object);
    t->line = line;
    t->col = col;
    return t;
}

TermPtr make_compose(TermPtr first, TermPtr then) {
    auto t = std::make_shared<Term>();
    t->kind = Term::Kind::compose;
    t->line = first->line;
    t->col = first->col;
    t->a = std::move(first);
    t->b = std::move(then);
    return t;
}

TermPtr make_tensor(TermPtr lhs, TermPtr rhs) {
    auto t = std::make_shared<Term>();
    t->kind = Term::Kind::tensor;
    t->line = lhs->line;
    t->col = lhs->col;
    t->a = std::move(lhs);
    t->b = std::move(rhs);
    return t;
}

TermPtr make_dagger(TermPtr inner, int line, int col) {
    auto t = std::make_shared<Term>();
    t->kind = Term::Kind::dagger;
    t->line = line;
    t->col = col;
    t->a = std::move(inner);
    return t;
}

bool same_term(const TermPtr& s, const TermPtr& t) {
    if (s->kind != t->kind) return false;
    switch (s->kind) {
        case Term::Kind::gen: return s->name == t->name;
        case Term::Kind::id: return s->object == t->object;
        case Term::Kind::dagger: return same_term(s->a, t->a);
        case Term::Kind::compose:
        case Term::Kind::tensor: return same_term(s->a, t->a) && same_term(s->b, t->b);
    }
    return false;
}

namespace {

std::string object_expr_string(const std::vector<std::string>& object) {
    if (object.empty()) return "0";
    bool all_circles = std::all_of(object.begin(), object.end(),
                                   [](const std::string& n) { return n == "circle"; });
    if (all_circles) return std::to_string(object.size());
    std::string out;
    for (std::size_t i = 0; i < object.size(); ++i) {
        if (i > 0) out += " * ";
        out += object[i];
    }
    return out;
}

int precedence(const TermPtr& t) {
    switch (t->kind) {
        case Term::Kind::compose: return 0;
        case Term::Kind::tensor: return 1;
        default: return 2;
    }
}

// A child printed at level L wraps itself in parentheses when it binds looser
// than L. Right operands of the left-associative binary forms demand one level
// more than the operator itself, so parse(print(t)) rebuilds the same tree.
std::string print_at(const TermPtr& t, int level) {
    std::string out;
    switch (t->kind) {
        case Term::Kind::gen: out = t->name; break;
        case Term::Kind::id: out = "id[" + object_expr_string(t->object) + "]"; break;
        case Term::Kind::dagger: out = "dag(" + print_at(t->a, 0) + ")"; break;
        case Term::Kind::compose:
            out = print_at(t->a, 0) + " ; " + print_at(t->b, 1);
            break;
        case Term::Kind::tensor:
            out = print_at(t->a, 1) + " * " + print_at(t->b, 2);
            break;
    }
    if (precedence(t) < level) return "(" + out + ")";
    return out;
}

struct Token {
    enum class Kind { ident, number, semi, star, lparen, rparen, lbracket, rbracket, arrow, colon, end };
    Kind kind;
    std::string text;
    int line, col;
};

const char* token_name(Token::Kind k) {
    switch (k) {
        case Token::Kind::ident: return "identifier";
        case Token::Kind::number: return "number";
        case Token::Kind::semi: return "';'";
        case Token::Kind::star: return "'*'";
        case Token::Kind::lparen: return "'('";
        case Token::Kind::rparen: return "')'";
        case Token::Kind::lbracket: return "'['";
        case Token::Kind::rbracket: return "']'";
        case Token::Kind::arrow: return "'->'";
        case Token::Kind::colon: return "':'";
        case Token::Kind::end: return "end of input";
    }
    return "?";
}

std::vector<Token> lex(const std::string& text) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k) {
            if (text[i + k] == '\n') { ++line; col = 1; }
            else ++col;
        }
        i += n;
    };
    while (i < text.size()) {
        char c = text[i];
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') advance(1);
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) { advance(1); continue; }
        int tl = line, tc = col;
        if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
            out.push_back({Token::Kind::arrow, "->", tl, tc});
            advance(2);
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
                ++j;
            out.push_back({Token::Kind::ident, text.substr(i, j - i), tl, tc});
            advance(j - i);
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            out.push_back({Token::Kind::number, text.substr(i, j - i), tl, tc});
            advance(j - i);
            continue;
        }
        Token::Kind kind;
        switch (c) {
            case ';': kind = Token::Kind::semi; break;
            case '*': kind = Token::Kind::star; break;
            case '(': kind = Token::Kind::lparen; break;
            case ')': kind = Token::Kind::rparen; break;
            case '[': kind = Token::Kind::lbracket; break;
            case ']': kind = Token::Kind::rbracket; break;
            case ':': kind = Token::Kind::colon; break;
            default:
                throw ParseError(tl, tc, std::string("unexpected character '") + c + "'");
        }
        out.push_back({kind, std::string(1, c), tl, tc});
        advance(1);
    }
    out.push_back({Token::Kind::end, "", line, col});
    return out;
}

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    TermPtr parse_expr() {
        TermPtr t = parse_term();
        while (peek().kind == Token::Kind::semi) {
            take();
            t = make_compose(t, parse_term());
        }
        return t;
    }

    std::vector<std::string> parse_object_expr() {
        const Token& tok = peek();
        if (tok.kind == Token::Kind::number) {
            take();
            long n = std::stol(tok.text);
            return std::vector<std::string>(static_cast<std::size_t>(n), "circle");
        }
        if (tok.kind != Token::Kind::ident)
            throw ParseError(tok.line, tok.col,
                             std::string("expected atom or number, found ") + token_name(tok.kind));
        std::vector<std::string> atoms;
        atoms.push_back(take().text);
        while (peek().kind == Token::Kind::star) {
            take();
            atoms.push_back(expect(Token::Kind::ident).text);
        }
        return atoms;
    }

    const Token& peek() const { return tokens_[pos_]; }
    Token take() { return tokens_[pos_++]; }

    Token expect(Token::Kind kind) {
        const Token& tok = peek();
        if (tok.kind != kind)
            throw ParseError(tok.line, tok.col, std::string("expected ") + token_name(kind) +
                                                    ", found " + token_name(tok.kind));
        return take();
    }

private:
    TermPtr parse_term() {
        TermPtr t = parse_factor();
        while (peek().kind == Token::Kind::star) {
            take();
            t = make_tensor(t, parse_factor());
        }
        return t;
    }

    TermPtr parse_factor() {
        const Token& tok = peek();
        if (tok.kind == Token::Kind::lparen) {
            take();
            TermPtr t = parse_expr();
            expect(Token::Kind::rparen);
            return t;
        }
        if (tok.kind == Token::Kind::ident) {
            Token name = take();
            if (name.text == "id") {
                expect(Token::Kind::lbracket);
                std::vector<std::string> object = parse_object_expr();
                expect(Token::Kind::rbracket);
                return make_id(std::move(object), name.line, name.col);
            }
            if (name.text == "dag") {
                expect(Token::Kind::lparen);
                TermPtr inner = parse_expr();
                expect(Token::Kind::rparen);
                return make_dagger(std::move(inner), name.line, name.col);
            }
            return make_gen(name.text, name.line, name.col);
        }
        throw ParseError(tok.line, tok.col,
                         std::string("expected identifier, 'id', 'dag' or '(', found ") +
                             token_name(tok.kind));
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

} // namespace

std::string print_term(const TermPtr& t) { return print_at(t, 0); }

std::string print_object_expr(const std::vector<std::string>& object) {
    return object_expr_string(object);
}

TermPtr parse(const std::string& text) {
    Parser p(lex(text));
    TermPtr t = p.parse_expr();
    const Token& tail = p.peek();
    if (tail.kind != Token::Kind::end)
        throw ParseError(tail.line, tail.col,
                         std::string("expected ';', '*' or end of input, found ") +
                             token_name(tail.kind));
    return t;
}

bool Signature::has_atom(const std::string& name) const {
    return std::find(atoms.begin(), atoms.end(), name) != atoms.end();
}

Signature Signature::parse(const std::string& text) {
    Signature sig;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw.substr(0, raw.find('#'));
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;

        Parser p(lex(line));
        Token head = p.expect(Token::Kind::ident);
        if (head.text == "obj") {
            Token name = p.expect(Token::Kind::ident);
            p.expect(Token::Kind::end);
            if (sig.has_atom(name.text))
                throw ParseError(lineno, name.col, "duplicate object '" + name.text + "'");
            sig.atoms.push_back(name.text);
        } else if (head.text == "gen") {
            Token name = p.expect(Token::Kind::ident);
            p.expect(Token::Kind::colon);
            GenDecl decl;
            decl.dom = p.parse_object_expr();
            p.expect(Token::Kind::arrow);
            decl.cod = p.parse_object_expr();
            p.expect(Token::Kind::end);
            if (name.text == "id" || name.text == "dag")
                throw ParseError(lineno, name.col, "'" + name.text + "' is a reserved name");
            if (!sig.generators.emplace(name.text, std::move(decl)).second)
                throw ParseError(lineno, name.col, "duplicate generator '" + name.text + "'");
        } else {
            throw ParseError(lineno, head.col, "expected 'obj' or 'gen', found '" + head.text + "'");
        }
    }
    return sig;
}

Signature Signature::cob2_builtin() {
    Signature sig;
    sig.atoms = {"circle"};
    const std::string c = "circle";
    sig.generators["cup"] = {{}, {c}};
    sig.generators["cap"] = {{c}, {}};
    sig.generators["pants"] = {{c, c}, {c}};
    sig.generators["copants"] = {{c}, {c, c}};
    sig.generators["swap"] = {{c, c}, {c, c}};
    return sig;
}

namespace {

// Pushes daggers inward. Under a dagger, composition order flips and the
// operands of a composite are themselves daggered; tensor order is preserved.
TermPtr push_dagger(const TermPtr& t, bool flipped) {
    switch (t->kind) {
        case Term::Kind::gen: {
            TermPtr g = make_gen(t->name, t->line, t->col);
            return flipped ? make_dagger(g, t->line, t->col) : g;
        }
        case Term::Kind::id:
            return make_id(t->object, t->line, t->col);
        case Term::Kind::dagger:
            return push_dagger(t->a, !flipped);
        case Term::Kind::compose:
            if (flipped)
                return make_compose(push_dagger(t->b, true), push_dagger(t->a, true));
            return make_compose(push_dagger(t->a, false), push_dagger(t->b, false));
        case Term::Kind::tensor:
            return make_tensor(push_dagger(t->a, flipped), push_dagger(t->b, flipped));
    }
    throw TypeError("malformed term");
}

TermPtr annotate(const TermPtr& t, const Signature& sig) {
    auto out = std::make_shared<Term>(*t);
    out->annotated = true;
    switch (t->kind) {
        case Term::Kind::gen: {
            auto it = sig.generators.find(t->name);
            if (it == sig.generators.end())
                throw TypeError("unknown generator '" + t->name + "' at " +
                                std::to_string(t->line) + ":" + std::to_string(t->col));
            out->dom = it->second.dom;
            out->cod = it->second.cod;
            break;
        }
        case Term::Kind::id: {
            for (const std::string& atom : t->object)
                if (!sig.has_atom(atom))
                    throw TypeError("unknown object '" + atom + "' at " + std::to_string(t->line) +
                                    ":" + std::to_string(t->col));
            out->dom = t->object;
            out->cod = t->object;
            break;
        }
        case Term::Kind::dagger: {
            out->a = annotate(t->a, sig);
            out->dom = out->a->cod;
            out->cod = out->a->dom;
            break;
        }
        case Term::Kind::compose: {
            out->a = annotate(t->a, sig);
            out->b = annotate(t->b, sig);
            if (out->a->cod != out->b->dom)
                throw TypeError("cannot compose " + object_expr_string(out->a->dom) + " -> " +
                                object_expr_string(out->a->cod) + " with " +
                                object_expr_string(out->b->dom) + " -> " +
                                object_expr_string(out->b->cod) + " at " +
                                std::to_string(out->b->line) + ":" + std::to_string(out->b->col));
            out->dom = out->a->dom;
            out->cod = out->b->cod;
            break;
        }
        case Term::Kind::tensor: {
            out->a = annotate(t->a, sig);
            out->b = annotate(t->b, sig);
            out->dom = out->a->dom;
            out->dom.insert(out->dom.end(), out->b->dom.begin(), out->b->dom.end());
            out->cod = out->a->cod;
            out->cod.insert(out->cod.end(), out->b->cod.begin(), out->b->cod.end());
            break;
        }
    }
    return out;
}

} // namespace

TermPtr typecheck(const TermPtr& t, const Signature& sig) {
    return annotate(push_dagger(t, false), sig);
}

} // namespace catkit::dsl
