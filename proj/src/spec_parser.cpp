#include "amalgam/spec_parser.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "amalgam/ideal.hpp"

namespace amalgam {

ParseError::ParseError(int line_, int col_, const std::string& expected_,
                       const std::string& found_)
    : InvalidParameter("parse error at line " + std::to_string(line_) +
                       ", col " + std::to_string(col_) + ": expected " +
                       expected_ + ", got " + found_),
      line(line_), col(col_), expected(expected_), found(found_) {}

namespace {

struct Token {
    enum class Kind { Ident, Int, LParen, RParen, Comma, End };
    Kind kind;
    std::string text;
    int line, col;
};

struct Lexer {
    const std::string& src;
    size_t pos = 0;
    int line = 1, col = 1;
    Token current;

    explicit Lexer(const std::string& s) : src(s) { advance(); }

    void bump(char c) {
        if (c == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++pos;
    }

    void advance() {
        while (pos < src.size() && std::isspace((unsigned char)src[pos]))
            bump(src[pos]);
        const int l = line, c = col;
        if (pos >= src.size()) {
            current = {Token::Kind::End, "", l, c};
            return;
        }
        const char ch = src[pos];
        if (ch == '(') {
            bump(ch);
            current = {Token::Kind::LParen, "(", l, c};
        } else if (ch == ')') {
            bump(ch);
            current = {Token::Kind::RParen, ")", l, c};
        } else if (ch == ',') {
            bump(ch);
            current = {Token::Kind::Comma, ",", l, c};
        } else if (std::isdigit((unsigned char)ch)) {
            std::string t;
            while (pos < src.size() && std::isdigit((unsigned char)src[pos])) {
                t += src[pos];
                bump(src[pos]);
            }
            current = {Token::Kind::Int, t, l, c};
        } else if (std::isalpha((unsigned char)ch) || ch == '_') {
            std::string t;
            while (pos < src.size() &&
                   (std::isalnum((unsigned char)src[pos]) || src[pos] == '_')) {
                t += src[pos];
                bump(src[pos]);
            }
            current = {Token::Kind::Ident, t, l, c};
        } else {
            current = {Token::Kind::Ident, std::string(1, ch), l, c};
            bump(ch);
        }
    }

    // A path may contain characters outside the normal token set; read the
    // raw text up to the closing parenthesis.
    std::string read_path() {
        std::string out = current.text;  // tokens already consumed belong to it
        while (pos < src.size() && src[pos] != ')' && src[pos] != ',' &&
               !std::isspace((unsigned char)src[pos])) {
            out += src[pos];
            bump(src[pos]);
        }
        advance();
        return out;
    }
};

struct Parser {
    Lexer lex;

    explicit Parser(const std::string& s) : lex(s) {}

    [[noreturn]] void fail(const std::string& expected) {
        const auto& t = lex.current;
        throw ParseError(t.line, t.col, expected,
                         t.kind == Token::Kind::End ? "end of input"
                                                    : "'" + t.text + "'");
    }

    void expect(Token::Kind kind, const char* what) {
        if (lex.current.kind != kind) fail(what);
        lex.advance();
    }

    int expect_int() {
        if (lex.current.kind != Token::Kind::Int) fail("an integer");
        int v = std::stoi(lex.current.text);
        lex.advance();
        return v;
    }

    std::vector<Elem> int_list_in_parens() {
        expect(Token::Kind::LParen, "'('");
        std::vector<Elem> out;
        if (lex.current.kind != Token::Kind::RParen) {
            out.push_back(expect_int());
            while (lex.current.kind == Token::Kind::Comma) {
                lex.advance();
                out.push_back(expect_int());
            }
        }
        expect(Token::Kind::RParen, "')'");
        return out;
    }

    std::vector<Elem> ideal() {
        if (lex.current.kind != Token::Kind::Ident || lex.current.text != "ideal")
            fail("'ideal'");
        lex.advance();
        return int_list_in_parens();
    }

    SpecNode::Hom hom() {
        if (lex.current.kind != Token::Kind::Ident)
            fail("'identity', 'reduction' or 'map'");
        const std::string kw = lex.current.text;
        if (kw == "identity") {
            lex.advance();
            return {SpecNode::Hom::Kind::Identity, {}};
        }
        if (kw == "reduction") {
            lex.advance();
            return {SpecNode::Hom::Kind::Reduction, {}};
        }
        if (kw == "map") {
            lex.advance();
            return {SpecNode::Hom::Kind::Explicit, int_list_in_parens()};
        }
        fail("'identity', 'reduction' or 'map'");
    }

    SpecNode spec() {
        if (lex.current.kind != Token::Kind::Ident) fail("a ring constructor");
        const std::string kw = lex.current.text;
        SpecNode node;
        if (kw == "zmod") {
            lex.advance();
            expect(Token::Kind::LParen, "'('");
            node.kind = SpecNode::Kind::Zmod;
            node.n = expect_int();
            expect(Token::Kind::RParen, "')'");
        } else if (kw == "product") {
            lex.advance();
            expect(Token::Kind::LParen, "'('");
            node.kind = SpecNode::Kind::Product;
            node.children.push_back(spec());
            expect(Token::Kind::Comma, "','");
            node.children.push_back(spec());
            expect(Token::Kind::RParen, "')'");
        } else if (kw == "tables") {
            lex.advance();
            expect(Token::Kind::LParen, "'('");
            node.kind = SpecNode::Kind::Tables;
            if (lex.current.kind == Token::Kind::RParen) fail("a file path");
            node.name = lex.read_path();
            if (lex.current.kind != Token::Kind::RParen) fail("')'");
            lex.advance();
        } else if (kw == "fixture") {
            lex.advance();
            expect(Token::Kind::LParen, "'('");
            node.kind = SpecNode::Kind::Fixture;
            if (lex.current.kind != Token::Kind::Ident) fail("a fixture name");
            node.name = lex.current.text;
            lex.advance();
            expect(Token::Kind::RParen, "')'");
        } else if (kw == "quotient") {
            lex.advance();
            expect(Token::Kind::LParen, "'('");
            node.kind = SpecNode::Kind::Quotient;
            node.children.push_back(spec());
            expect(Token::Kind::Comma, "','");
            node.generators = ideal();
            expect(Token::Kind::RParen, "')'");
        } else if (kw == "amalgam") {
            lex.advance();
            expect(Token::Kind::LParen, "'('");
            node.kind = SpecNode::Kind::Amalgam;
            node.children.push_back(spec());
            expect(Token::Kind::Comma, "','");
            node.children.push_back(spec());
            expect(Token::Kind::Comma, "','");
            node.hom = hom();
            expect(Token::Kind::Comma, "','");
            node.generators = ideal();
            expect(Token::Kind::RParen, "')'");
        } else if (kw == "duplication") {
            lex.advance();
            expect(Token::Kind::LParen, "'('");
            node.kind = SpecNode::Kind::Duplication;
            node.children.push_back(spec());
            expect(Token::Kind::Comma, "','");
            node.generators = ideal();
            expect(Token::Kind::RParen, "')'");
        } else {
            fail("a ring constructor");
        }
        return node;
    }
};

std::string print_ideal(const std::vector<Elem>& gens) {
    std::string out = "ideal(";
    for (size_t i = 0; i < gens.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(gens[i]);
    }
    return out + ")";
}

std::string print_hom(const SpecNode::Hom& h) {
    switch (h.kind) {
        case SpecNode::Hom::Kind::Identity:
            return "identity";
        case SpecNode::Hom::Kind::Reduction:
            return "reduction";
        case SpecNode::Hom::Kind::Explicit: {
            std::string out = "map(";
            for (size_t i = 0; i < h.map.size(); ++i) {
                if (i) out += ", ";
                out += std::to_string(h.map[i]);
            }
            return out + ")";
        }
    }
    return "";
}

// True iff the ring carries the canonical zmod tables (index = residue).
bool is_canonical_zmod(const FiniteRing& r) {
    const int n = r.order();
    if (r.zero() != 0 || r.one() != 1 % n) return false;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (r.add(i, j) != (i + j) % n || r.mul(i, j) != (i * j) % n)
                return false;
    return true;
}

RingHom eval_hom(const SpecNode::Hom& h, const RingPtr& a, const RingPtr& b) {
    switch (h.kind) {
        case SpecNode::Hom::Kind::Identity: {
            if (!a->same_tables(*b))
                throw InvalidParameter(
                    "identity hom requires identical domain and codomain tables");
            std::vector<Elem> map(a->order());
            for (int i = 0; i < a->order(); ++i) map[i] = i;
            return make_hom(a, b, std::move(map));
        }
        case SpecNode::Hom::Kind::Reduction: {
            if (!is_canonical_zmod(*a) || !is_canonical_zmod(*b))
                throw InvalidParameter("reduction hom requires zmod rings");
            if (a->order() % b->order() != 0)
                throw InvalidParameter(
                    "reduction hom requires the codomain order to divide the domain order");
            std::vector<Elem> map(a->order());
            for (int i = 0; i < a->order(); ++i) map[i] = i % b->order();
            return make_hom(a, b, std::move(map));
        }
        case SpecNode::Hom::Kind::Explicit:
            return make_hom(a, b, h.map);
    }
    throw InvalidParameter("unknown hom kind");
}

}  // namespace

SpecNode parse_spec(const std::string& text) {
    Parser p(text);
    SpecNode node = p.spec();
    if (p.lex.current.kind != Token::Kind::End) p.fail("end of input");
    return node;
}

std::string print_spec(const SpecNode& s) {
    switch (s.kind) {
        case SpecNode::Kind::Zmod:
            return "zmod(" + std::to_string(s.n) + ")";
        case SpecNode::Kind::Product:
            return "product(" + print_spec(s.children[0]) + ", " +
                   print_spec(s.children[1]) + ")";
        case SpecNode::Kind::Tables:
            return "tables(" + s.name + ")";
        case SpecNode::Kind::Fixture:
            return "fixture(" + s.name + ")";
        case SpecNode::Kind::Quotient:
            return "quotient(" + print_spec(s.children[0]) + ", " +
                   print_ideal(s.generators) + ")";
        case SpecNode::Kind::Amalgam:
            return "amalgam(" + print_spec(s.children[0]) + ", " +
                   print_spec(s.children[1]) + ", " + print_hom(s.hom) + ", " +
                   print_ideal(s.generators) + ")";
        case SpecNode::Kind::Duplication:
            return "duplication(" + print_spec(s.children[0]) + ", " +
                   print_ideal(s.generators) + ")";
    }
    return "";
}

EvalResult eval_spec(const SpecNode& s, const Caps& caps) {
    switch (s.kind) {
        case SpecNode::Kind::Zmod:
            return {make_zmod(s.n), std::nullopt};
        case SpecNode::Kind::Product: {
            auto a = eval_spec(s.children[0], caps);
            auto b = eval_spec(s.children[1], caps);
            return {make_product(a.ring, b.ring).ring, std::nullopt};
        }
        case SpecNode::Kind::Tables:
            return {read_table_file(s.name), std::nullopt};
        case SpecNode::Kind::Fixture: {
            for (const auto& f : builtin_fixtures())
                if (f.name == s.name) return {f.ring, std::nullopt};
            throw InvalidParameter("unknown fixture '" + s.name + "'");
        }
        case SpecNode::Kind::Quotient: {
            auto r = eval_spec(s.children[0], caps);
            auto i = ideal_generated(r.ring, s.generators);
            return {quotient_ring(r.ring, i).ring, std::nullopt};
        }
        case SpecNode::Kind::Amalgam: {
            auto a = eval_spec(s.children[0], caps);
            auto b = eval_spec(s.children[1], caps);
            auto f = eval_hom(s.hom, a.ring, b.ring);
            auto j = ideal_generated(b.ring, s.generators);
            auto w = amalgamate(a.ring, b.ring, f, j, caps);
            auto ring = w.ring;
            return {ring, std::move(w)};
        }
        case SpecNode::Kind::Duplication: {
            auto a = eval_spec(s.children[0], caps);
            auto i = ideal_generated(a.ring, s.generators);
            auto w = duplication(a.ring, i, caps);
            auto ring = w.ring;
            return {ring, std::move(w)};
        }
    }
    throw InvalidParameter("unknown spec node");
}

RingPtr read_table_stream(std::istream& in, const std::string& label) {
    auto expect_word = [&](const char* word) {
        std::string w;
        if (!(in >> w) || w != word)
            throw InvalidParameter("table format: expected '" +
                                   std::string(word) + "'");
    };
    expect_word("order");
    int n = 0;
    if (!(in >> n) || n < 1)
        throw InvalidParameter("table format: bad order");
    RingTables t;
    t.order = n;
    t.add.resize((size_t)n * n);
    t.mul.resize((size_t)n * n);
    for (auto* table : {&t.add, &t.mul})
        for (int i = 0; i < n * n; ++i)
            if (!(in >> (*table)[i]))
                throw InvalidParameter("table format: missing table entry");
    expect_word("zero");
    if (!(in >> t.zero)) throw InvalidParameter("table format: missing zero");
    expect_word("one");
    if (!(in >> t.one)) throw InvalidParameter("table format: missing one");
    t.label = label;
    return FiniteRing::from_tables(std::move(t));
}

RingPtr read_table_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open table file '" + path + "'");
    return read_table_stream(in, "tables(" + path + ")");
}

const std::vector<Fixture>& builtin_fixtures() {
    static const std::vector<Fixture> fixtures = [] {
        // Z2[t]/(t^2): indices 0, 1, t, 1+t.
        const std::string z2t2 =
            "order 4\n"
            "0 1 2 3\n"
            "1 0 3 2\n"
            "2 3 0 1\n"
            "3 2 1 0\n"
            "0 0 0 0\n"
            "0 1 2 3\n"
            "0 2 0 2\n"
            "0 3 2 1\n"
            "zero 0\n"
            "one 1\n";
        // Z4[t]/(2t, t^2): index a + 4b codes a + b*t.
        const std::string z4 =
            "order 8\n"
            "0 1 2 3 4 5 6 7\n"
            "1 2 3 0 5 6 7 4\n"
            "2 3 0 1 6 7 4 5\n"
            "3 0 1 2 7 4 5 6\n"
            "4 5 6 7 0 1 2 3\n"
            "5 6 7 4 1 2 3 0\n"
            "6 7 4 5 2 3 0 1\n"
            "7 4 5 6 3 0 1 2\n"
            "0 0 0 0 0 0 0 0\n"
            "0 1 2 3 4 5 6 7\n"
            "0 2 0 2 0 2 0 2\n"
            "0 3 2 1 4 7 6 5\n"
            "0 4 0 4 0 4 0 4\n"
            "0 5 2 7 4 1 6 3\n"
            "0 6 0 6 0 6 0 6\n"
            "0 7 2 5 4 3 6 1\n"
            "zero 0\n"
            "one 1\n";
        std::vector<Fixture> out;
        for (const auto& [name, text] :
             {std::pair<std::string, std::string>{"z2_t2", z2t2},
              std::pair<std::string, std::string>{"z4_2t_t2", z4}}) {
            std::istringstream in(text);
            out.push_back({name, read_table_stream(in, "fixture(" + name + ")"),
                           text});
        }
        return out;
    }();
    return fixtures;
}

}  // namespace amalgam
