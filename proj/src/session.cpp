#include "codim1/session.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace codim1 {

namespace {

// ---------------------------------------------------------------- lexer ---

struct Token {
    enum class Type {
        ident,
        integer,
        string_lit,
        lparen,
        rparen,
        lbrace,
        rbrace,
        lbracket,
        rbracket,
        comma,
        equals,
        colon,
        plus,
        minus,
        star,
        slash,
        caret,
        arrow,
        end
    };
    Type type = Type::end;
    std::string text;
    long long value = 0;
    int line = 1;
    int col = 1;
};

[[noreturn]] void fail_at(int line, int col, const std::string& msg) {
    throw input_error("line " + std::to_string(line) + ", column " + std::to_string(col) +
                      ": " + msg);
}

[[noreturn]] void fail_at(const Token& t, const std::string& msg) {
    fail_at(t.line, t.col, msg);
}

std::vector<Token> lex(const std::string& text) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto push = [&](Token::Type ty, std::string s, long long v, int l, int c) {
        out.push_back(Token{ty, std::move(s), v, l, c});
    };
    while (i < text.size()) {
        char c = text[i];
        if (c == '\n') {
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (c == ' ' || c == '\t' || c == '\r') {
            ++col;
            ++i;
            continue;
        }
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') ++i;
            continue;
        }
        int tl = line, tc = col;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) ||
                                       text[j] == '_'))
                ++j;
            push(Token::Type::ident, text.substr(i, j - i), 0, tl, tc);
            col += static_cast<int>(j - i);
            i = j;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            if (j - i > 18) fail_at(tl, tc, "integer literal too large");
            long long v = std::stoll(text.substr(i, j - i));
            push(Token::Type::integer, text.substr(i, j - i), v, tl, tc);
            col += static_cast<int>(j - i);
            i = j;
            continue;
        }
        if (c == '"') {
            std::size_t j = i + 1;
            while (j < text.size() && text[j] != '"' && text[j] != '\n') ++j;
            if (j >= text.size() || text[j] != '"')
                fail_at(tl, tc, "unterminated string literal");
            push(Token::Type::string_lit, text.substr(i + 1, j - i - 1), 0, tl, tc);
            col += static_cast<int>(j - i + 1);
            i = j + 1;
            continue;
        }
        if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
            push(Token::Type::arrow, "->", 0, tl, tc);
            col += 2;
            i += 2;
            continue;
        }
        Token::Type ty;
        switch (c) {
            case '(': ty = Token::Type::lparen; break;
            case ')': ty = Token::Type::rparen; break;
            case '{': ty = Token::Type::lbrace; break;
            case '}': ty = Token::Type::rbrace; break;
            case '[': ty = Token::Type::lbracket; break;
            case ']': ty = Token::Type::rbracket; break;
            case ',': ty = Token::Type::comma; break;
            case '=': ty = Token::Type::equals; break;
            case ':': ty = Token::Type::colon; break;
            case '+': ty = Token::Type::plus; break;
            case '-': ty = Token::Type::minus; break;
            case '*': ty = Token::Type::star; break;
            case '/': ty = Token::Type::slash; break;
            case '^': ty = Token::Type::caret; break;
            default:
                fail_at(tl, tc, std::string("unexpected character '") + c + "'");
        }
        push(ty, std::string(1, c), 0, tl, tc);
        ++col;
        ++i;
    }
    out.push_back(Token{Token::Type::end, "", 0, line, col});
    return out;
}

const char* type_name(Token::Type t) {
    switch (t) {
        case Token::Type::ident: return "a name";
        case Token::Type::integer: return "an integer";
        case Token::Type::string_lit: return "a string";
        case Token::Type::lparen: return "'('";
        case Token::Type::rparen: return "')'";
        case Token::Type::lbrace: return "'{'";
        case Token::Type::rbrace: return "'}'";
        case Token::Type::lbracket: return "'['";
        case Token::Type::rbracket: return "']'";
        case Token::Type::comma: return "','";
        case Token::Type::equals: return "'='";
        case Token::Type::colon: return "':'";
        case Token::Type::plus: return "'+'";
        case Token::Type::minus: return "'-'";
        case Token::Type::star: return "'*'";
        case Token::Type::slash: return "'/'";
        case Token::Type::caret: return "'^'";
        case Token::Type::arrow: return "'->'";
        case Token::Type::end: return "end of input";
    }
    return "?";
}

// ------------------------------------------------------ token stream -----

class Stream {
public:
    explicit Stream(std::vector<Token> toks) : toks_(std::move(toks)) {}

    const Token& peek(std::size_t ahead = 0) const {
        std::size_t i = pos_ + ahead;
        return i < toks_.size() ? toks_[i] : toks_.back();
    }
    const Token& next() {
        const Token& t = peek();
        if (pos_ + 1 < toks_.size()) ++pos_;
        return t;
    }
    bool at(Token::Type t) const { return peek().type == t; }
    bool accept(Token::Type t) {
        if (!at(t)) return false;
        next();
        return true;
    }
    static std::string describe(const Token& t) {
        bool worded = t.type == Token::Type::ident || t.type == Token::Type::integer ||
                      t.type == Token::Type::string_lit;
        std::string s = type_name(t.type);
        if (worded && !t.text.empty()) s += " '" + t.text + "'";
        return s;
    }
    const Token& expect(Token::Type t, const std::string& what) {
        if (!at(t)) fail_at(peek(), "expected " + what + ", got " + describe(peek()));
        return next();
    }
    bool at_keyword(const std::string& kw) const {
        return at(Token::Type::ident) && peek().text == kw;
    }
    bool accept_keyword(const std::string& kw) {
        if (!at_keyword(kw)) return false;
        next();
        return true;
    }
    void expect_keyword(const std::string& kw) {
        if (!accept_keyword(kw))
            fail_at(peek(), "expected '" + kw + "', got " + describe(peek()));
    }
    // hyphenated keyword, e.g. not-in-support
    bool at_hyphen_keyword(const std::vector<std::string>& parts) const {
        std::size_t ahead = 0;
        for (std::size_t p = 0; p < parts.size(); ++p) {
            const Token& t = peek(ahead++);
            if (t.type != Token::Type::ident || t.text != parts[p]) return false;
            if (p + 1 < parts.size() && peek(ahead++).type != Token::Type::minus) return false;
        }
        return true;
    }
    void consume_hyphen_keyword(const std::vector<std::string>& parts) {
        for (std::size_t p = 0; p < parts.size(); ++p) {
            expect_keyword(parts[p]);
            if (p + 1 < parts.size()) expect(Token::Type::minus, "'-'");
        }
    }

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

// ------------------------------------------------- polynomial parsing ----

constexpr std::uint32_t kMaxExponent = 64;
constexpr int kMaxDepth = 256;

Polynomial parse_expr(Stream& st, const RingPtr& ring, int depth);

Polynomial parse_base(Stream& st, const RingPtr& ring, int depth) {
    if (depth > kMaxDepth) fail_at(st.peek(), "expression nested too deeply");
    const Token& t = st.peek();
    if (t.type == Token::Type::integer) {
        st.next();
        return Polynomial::constant(ring, Scalar::from_int(ring->field(), t.value));
    }
    if (t.type == Token::Type::ident) {
        st.next();
        auto i = ring->var_index(t.text);
        if (!i) fail_at(t, "unknown variable '" + t.text + "' in " + ring->str());
        return Polynomial::variable(ring, *i);
    }
    if (t.type == Token::Type::lparen) {
        st.next();
        Polynomial e = parse_expr(st, ring, depth + 1);
        st.expect(Token::Type::rparen, "')'");
        return e;
    }
    fail_at(t, "expected a variable, an integer, or '('");
}

Polynomial parse_factor(Stream& st, const RingPtr& ring, int depth) {
    Polynomial base = parse_base(st, ring, depth);
    if (st.at(Token::Type::caret)) { // a single exponent; towers do not chain
        st.next();
        const Token& e = st.expect(Token::Type::integer, "an exponent");
        if (e.value < 0 || e.value > static_cast<long long>(kMaxExponent))
            fail_at(e, "exponent must be between 0 and " + std::to_string(kMaxExponent));
        base = base.pow(static_cast<std::uint32_t>(e.value));
    }
    return base;
}

Polynomial parse_term(Stream& st, const RingPtr& ring, int depth) {
    Polynomial acc = parse_factor(st, ring, depth);
    while (true) {
        if (st.at(Token::Type::star)) {
            st.next();
            acc = acc * parse_factor(st, ring, depth);
        } else if (st.at(Token::Type::slash)) {
            st.next();
            const Token& d = st.expect(Token::Type::integer, "an integer denominator");
            Scalar den = Scalar::from_int(ring->field(), d.value);
            if (den.is_zero()) fail_at(d, "division by zero in a coefficient");
            acc = acc * (Scalar::one(ring->field()) / den);
        } else {
            break;
        }
    }
    return acc;
}

Polynomial parse_expr(Stream& st, const RingPtr& ring, int depth) {
    if (depth > kMaxDepth) fail_at(st.peek(), "expression nested too deeply");
    bool neg = false;
    if (st.accept(Token::Type::minus))
        neg = true;
    else
        st.accept(Token::Type::plus);
    Polynomial acc = parse_term(st, ring, depth);
    if (neg) acc = -acc;
    while (st.at(Token::Type::plus) || st.at(Token::Type::minus)) {
        bool minus = st.next().type == Token::Type::minus;
        Polynomial t = parse_term(st, ring, depth);
        acc = minus ? acc - t : acc + t;
    }
    return acc;
}

long long parse_signed_int(Stream& st, long long bound, const char* what) {
    bool neg = false;
    if (st.accept(Token::Type::minus))
        neg = true;
    else
        st.accept(Token::Type::plus);
    const Token& t = st.expect(Token::Type::integer, "an integer");
    if (t.value > bound)
        fail_at(t, std::string(what) + " out of range (|value| <= " + std::to_string(bound) +
                       ")");
    return neg ? -t.value : t.value;
}

std::vector<std::int64_t> parse_int_vector(Stream& st, long long bound, const char* what) {
    st.expect(Token::Type::lparen, "'('");
    std::vector<std::int64_t> v;
    v.push_back(parse_signed_int(st, bound, what));
    while (st.accept(Token::Type::comma)) v.push_back(parse_signed_int(st, bound, what));
    st.expect(Token::Type::rparen, "')'");
    return v;
}

// Lattice coordinates feed monomial exponents, so they share the exponent
// cap; intersection-form data merely needs to stay far from overflow.
constexpr long long kMaxLatticeCoord = 64;
constexpr long long kMaxFormEntry = 1'000'000;

// ------------------------------------------------------- the parser ------

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : st_(std::move(toks)) {}

    Session run() {
        while (!st_.at(Token::Type::end)) {
            const Token& t = st_.peek();
            if (t.type != Token::Type::ident)
                fail_at(t, "expected a declaration or a task");
            if (t.text == "ring")
                ring_decl();
            else if (t.text == "algebra")
                algebra_decl();
            else if (t.text == "ideal")
                ideal_decl();
            else if (t.text == "map")
                map_decl();
            else if (t.text == "witness")
                witness_decl();
            else if (t.text == "certificate")
                certificate_decl();
            else if (t.text == "monoid")
                monoid_decl();
            else if (t.text == "embedding")
                embedding_decl();
            else if (t.text == "lattice")
                lattice_decl();
            else if (t.text == "class")
                class_decl();
            else if (t.text == "config")
                config_decl();
            else if (t.text == "task")
                task_decl();
            else
                fail_at(t, "unknown declaration '" + t.text + "'");
        }
        return std::move(s_);
    }

private:
    Stream st_;
    Session s_;
    std::set<std::string> names_;

    std::string fresh_name() {
        const Token& t = st_.expect(Token::Type::ident, "a name");
        if (names_.count(t.text)) fail_at(t, "duplicate name '" + t.text + "'");
        names_.insert(t.text);
        return t.text;
    }

    template <typename T>
    const T& resolve(const T* p, const Token& t, const char* kind) {
        if (!p) fail_at(t, std::string("unknown ") + kind + " '" + t.text + "'");
        return *p;
    }

    CoeffField parse_field() {
        const Token& t = st_.expect(Token::Type::ident, "a coefficient field (Q or Fp(p))");
        if (t.text == "Q") return CoeffField::rationals();
        if (t.text == "Fp") {
            st_.expect(Token::Type::lparen, "'('");
            const Token& p = st_.expect(Token::Type::integer, "a prime");
            st_.expect(Token::Type::rparen, "')'");
            if (p.value < 2 || p.value > 2147483647LL)
                fail_at(p, "prime modulus must lie below 2^31");
            try {
                return CoeffField::prime(static_cast<std::uint32_t>(p.value));
            } catch (const error& e) {
                fail_at(p, e.what());
            }
        }
        fail_at(t, "unknown coefficient field '" + t.text + "' (use Q or Fp(p))");
    }

    void ring_decl() {
        st_.expect_keyword("ring");
        std::string name = fresh_name();
        st_.expect(Token::Type::equals, "'='");
        CoeffField field = parse_field();
        st_.expect(Token::Type::lbracket, "'['");
        std::vector<std::string> vars;
        vars.push_back(st_.expect(Token::Type::ident, "a variable name").text);
        while (st_.accept(Token::Type::comma))
            vars.push_back(st_.expect(Token::Type::ident, "a variable name").text);
        const Token& close = st_.peek();
        st_.expect(Token::Type::rbracket, "']'");
        try {
            s_.rings.push_back({name, PolyRing::make(vars, field)});
        } catch (const error& e) {
            fail_at(close, e.what());
        }
        s_.order.emplace_back(Session::DeclKind::ring, s_.rings.size() - 1);
    }

    void algebra_decl() {
        st_.expect_keyword("algebra");
        std::string name = fresh_name();
        st_.expect(Token::Type::equals, "'='");
        const Token& rt = st_.expect(Token::Type::ident, "a ring name");
        const auto& rd = resolve(s_.find_ring(rt.text), rt, "ring");
        st_.expect(Token::Type::slash, "'/'");
        st_.expect(Token::Type::lparen, "'('");
        std::vector<Polynomial> gens;
        if (!st_.at(Token::Type::rparen)) {
            gens.push_back(parse_expr(st_, rd.ring, 0));
            while (st_.accept(Token::Type::comma)) gens.push_back(parse_expr(st_, rd.ring, 0));
        }
        const Token& close = st_.peek();
        st_.expect(Token::Type::rparen, "')'");
        PresentedAlgebra::Flags flags;
        while (true) {
            if (st_.accept_keyword("domain"))
                flags.is_domain = true;
            else if (st_.accept_keyword("factorial"))
                flags.is_factorial_ambient = true;
            else
                break;
        }
        try {
            s_.algebras.push_back({name, rt.text, PresentedAlgebra::make(rd.ring, gens, flags)});
        } catch (const error& e) {
            fail_at(close, e.what());
        }
        s_.order.emplace_back(Session::DeclKind::algebra, s_.algebras.size() - 1);
    }

    void ideal_decl() {
        st_.expect_keyword("ideal");
        std::string name = fresh_name();
        st_.expect_keyword("in");
        const Token& at = st_.expect(Token::Type::ident, "an algebra name");
        AlgebraPtr alg = s_.algebra_handle(at.text);
        if (!alg) fail_at(at, "unknown algebra '" + at.text + "'");
        st_.expect(Token::Type::equals, "'='");
        st_.expect(Token::Type::lparen, "'('");
        std::vector<Polynomial> gens;
        if (!st_.at(Token::Type::rparen)) {
            gens.push_back(parse_expr(st_, alg->ring(), 0));
            while (st_.accept(Token::Type::comma))
                gens.push_back(parse_expr(st_, alg->ring(), 0));
        }
        const Token& close = st_.peek();
        st_.expect(Token::Type::rparen, "')'");
        try {
            s_.ideals.push_back({name, at.text, IdealInAlgebra::make(alg, gens)});
        } catch (const error& e) {
            fail_at(close, e.what());
        }
        s_.order.emplace_back(Session::DeclKind::ideal, s_.ideals.size() - 1);
    }

    void map_decl() {
        st_.expect_keyword("map");
        std::string name = fresh_name();
        st_.expect(Token::Type::colon, "':'");
        const Token& srct = st_.expect(Token::Type::ident, "a source algebra");
        AlgebraPtr src = s_.algebra_handle(srct.text);
        if (!src) fail_at(srct, "unknown algebra '" + srct.text + "'");
        st_.expect(Token::Type::arrow, "'->'");
        const Token& tgtt = st_.expect(Token::Type::ident, "a target algebra");
        AlgebraPtr tgt = s_.algebra_handle(tgtt.text);
        if (!tgt) fail_at(tgtt, "unknown algebra '" + tgtt.text + "'");
        st_.expect(Token::Type::lbrace, "'{'");

        std::vector<bool> assigned(src->ring()->arity(), false);
        std::vector<Polynomial> images(src->ring()->arity(), Polynomial::zero(tgt->ring()));
        if (!st_.at(Token::Type::rbrace)) {
            do {
                const Token& vt = st_.expect(Token::Type::ident, "a source variable");
                auto vi = src->ring()->var_index(vt.text);
                if (!vi) fail_at(vt, "'" + vt.text + "' is not a variable of the source ring");
                if (assigned[*vi]) fail_at(vt, "variable '" + vt.text + "' assigned twice");
                st_.expect(Token::Type::arrow, "'->'");
                images[*vi] = parse_expr(st_, tgt->ring(), 0);
                assigned[*vi] = true;
            } while (st_.accept(Token::Type::comma));
        }
        const Token& close = st_.peek();
        st_.expect(Token::Type::rbrace, "'}'");
        for (std::size_t i = 0; i < assigned.size(); ++i)
            if (!assigned[i])
                fail_at(close, "no image for source variable '" + src->ring()->vars()[i] + "'");
        try {
            s_.maps.push_back({name, srct.text, tgtt.text, AlgebraMap(src, tgt, images)});
        } catch (const error& e) {
            fail_at(close, e.what());
        }
        s_.order.emplace_back(Session::DeclKind::map_, s_.maps.size() - 1);
    }

    void witness_decl() {
        st_.expect_keyword("witness");
        std::string name = fresh_name();
        st_.expect(Token::Type::equals, "'='");
        st_.expect_keyword("map");
        const Token& mt = st_.expect(Token::Type::ident, "a map name");
        resolve(s_.find_map(mt.text), mt, "map");
        st_.expect_keyword("height");
        const Token& ht = st_.expect(Token::Type::integer, "a height");
        s_.witnesses.push_back({name, mt.text, ht.value});
        s_.order.emplace_back(Session::DeclKind::witness, s_.witnesses.size() - 1);
    }

    void certificate_decl() {
        st_.expect_keyword("certificate");
        std::string name = fresh_name();
        st_.expect_keyword("for");
        const Token& it = st_.expect(Token::Type::ident, "an ideal name");
        const auto& id = resolve(s_.find_ideal(it.text), it, "ideal");
        const RingPtr& ring = id.ideal.algebra()->ring();
        st_.expect(Token::Type::lbrace, "'{'");
        AffinenessCertificate cert;
        cert.name = name;
        while (st_.at_keyword("section")) {
            st_.next();
            st_.expect(Token::Type::lbrace, "'{'");
            SectionChart sec;
            do {
                st_.expect(Token::Type::lparen, "'('");
                Polynomial num = parse_expr(st_, ring, 0);
                st_.expect(Token::Type::comma, "','");
                Polynomial den = parse_expr(st_, ring, 0);
                st_.expect(Token::Type::rparen, "')'");
                sec.charts.emplace_back(std::move(num), std::move(den));
            } while (st_.accept(Token::Type::comma));
            st_.expect(Token::Type::rbrace, "'}'");
            cert.sections.push_back(std::move(sec));
        }
        const Token& close = st_.peek();
        st_.expect(Token::Type::rbrace, "'}'");
        if (cert.sections.empty()) fail_at(close, "certificate has no sections");
        s_.certificates.push_back({name, it.text, std::move(cert)});
        s_.order.emplace_back(Session::DeclKind::certificate, s_.certificates.size() - 1);
    }

    void monoid_decl() {
        st_.expect_keyword("monoid");
        std::string name = fresh_name();
        st_.expect(Token::Type::equals, "'='");
        st_.expect_keyword("rank");
        const Token& rt = st_.expect(Token::Type::integer, "a rank");
        if (rt.value < 1 || rt.value > 16) fail_at(rt, "rank must be between 1 and 16");
        st_.expect_keyword("generators");
        std::vector<std::vector<std::int64_t>> gens;
        gens.push_back(parse_int_vector(st_, kMaxLatticeCoord, "generator coordinate"));
        while (st_.accept(Token::Type::comma))
            gens.push_back(parse_int_vector(st_, kMaxLatticeCoord, "generator coordinate"));
        bool positive = st_.accept_keyword("positive");
        bool normal = st_.accept_keyword("normal");
        const Token& here = st_.peek();
        try {
            auto m = AffineMonoid::make(static_cast<std::size_t>(rt.value), std::move(gens),
                                        positive, normal);
            auto pres = toric_presentation(m, CoeffField::rationals());
            s_.monoids.push_back({name, std::move(m), std::move(pres)});
        } catch (const error& e) {
            fail_at(here, e.what());
        }
        s_.order.emplace_back(Session::DeclKind::monoid, s_.monoids.size() - 1);
    }

    void embedding_decl() {
        st_.expect_keyword("embedding");
        std::string name = fresh_name();
        st_.expect_keyword("for");
        const Token& mt = st_.expect(Token::Type::ident, "a monoid name");
        const auto& md = resolve(s_.find_monoid(mt.text), mt, "monoid");
        st_.expect(Token::Type::equals, "'='");
        st_.expect_keyword("split");
        const Token& st = st_.expect(Token::Type::integer, "the free rank s");
        const Token& kt = st_.expect(Token::Type::integer, "the non-negative rank k");
        if (st.value < 0 || kt.value < 0 || st.value + kt.value > 16)
            fail_at(st, "split ranks must be non-negative with s + k <= 16");
        st_.expect_keyword("images");
        std::vector<std::vector<std::int64_t>> images;
        images.push_back(parse_int_vector(st_, kMaxLatticeCoord, "image coordinate"));
        while (st_.accept(Token::Type::comma))
            images.push_back(parse_int_vector(st_, kMaxLatticeCoord, "image coordinate"));
        const Token& here = st_.peek();
        st_.expect_keyword("intersection"); // mandatory assertion keyword
        IntersectionEmbedding e{static_cast<std::size_t>(st.value),
                                static_cast<std::size_t>(kt.value), std::move(images), true};
        try {
            verify_embedding(md.monoid, e);
        } catch (const error& ex) {
            fail_at(here, ex.what());
        }
        s_.embeddings.push_back({name, mt.text, std::move(e)});
        s_.order.emplace_back(Session::DeclKind::embedding, s_.embeddings.size() - 1);
    }

    void lattice_decl() {
        st_.expect_keyword("lattice");
        std::string name = fresh_name();
        st_.expect(Token::Type::equals, "'='");
        if (st_.accept_keyword("blowup")) {
            const Token& nt = st_.expect(Token::Type::integer, "a point count");
            if (nt.value < 0 || nt.value > 64) fail_at(nt, "point count must be between 0 and 64");
            s_.lattices.push_back({name, blowup_lattice(static_cast<std::size_t>(nt.value)),
                                   true, static_cast<std::size_t>(nt.value)});
        } else {
            st_.expect_keyword("matrix");
            st_.expect(Token::Type::lbracket, "'['");
            std::vector<std::vector<std::int64_t>> rows;
            do {
                st_.expect(Token::Type::lbracket, "'['");
                std::vector<std::int64_t> row;
                row.push_back(parse_signed_int(st_, kMaxFormEntry, "intersection number"));
                while (st_.accept(Token::Type::comma))
                    row.push_back(parse_signed_int(st_, kMaxFormEntry, "intersection number"));
                st_.expect(Token::Type::rbracket, "']'");
                rows.push_back(std::move(row));
            } while (st_.accept(Token::Type::comma));
            st_.expect(Token::Type::rbracket, "']'");
            st_.expect_keyword("labels");
            st_.expect(Token::Type::lparen, "'('");
            std::vector<std::string> labels;
            labels.push_back(st_.expect(Token::Type::ident, "a label").text);
            while (st_.accept(Token::Type::comma))
                labels.push_back(st_.expect(Token::Type::ident, "a label").text);
            const Token& close = st_.peek();
            st_.expect(Token::Type::rparen, "')'");
            try {
                s_.lattices.push_back({name, PicardLattice::make(rows, labels), false, 0});
            } catch (const error& e) {
                fail_at(close, e.what());
            }
        }
        s_.order.emplace_back(Session::DeclKind::lattice, s_.lattices.size() - 1);
    }

    void class_decl() {
        st_.expect_keyword("class");
        std::string name = fresh_name();
        st_.expect_keyword("in");
        const Token& lt = st_.expect(Token::Type::ident, "a lattice name");
        const auto& ld = resolve(s_.find_lattice(lt.text), lt, "lattice");
        st_.expect(Token::Type::equals, "'='");

        std::vector<std::int64_t> coeffs(ld.lattice->rank(), 0);
        bool first = true;
        while (true) {
            std::int64_t sign = 1;
            if (st_.accept(Token::Type::minus))
                sign = -1;
            else if (st_.accept(Token::Type::plus))
                sign = 1;
            else if (!first)
                break;
            std::int64_t coeff = 1;
            if (st_.at(Token::Type::integer)) {
                const Token& ct = st_.next();
                if (ct.value > kMaxFormEntry)
                    fail_at(ct, "coefficient out of range (|value| <= " +
                                    std::to_string(kMaxFormEntry) + ")");
                coeff = ct.value;
                st_.expect(Token::Type::star, "'*' between coefficient and basis label");
            }
            const Token& bt = st_.expect(Token::Type::ident, "a basis label");
            auto bi = ld.lattice->label_index(bt.text);
            if (!bi) fail_at(bt, "unknown basis label '" + bt.text + "'");
            coeffs[*bi] += sign * coeff;
            first = false;
        }
        bool effective = st_.accept_keyword("effective");
        s_.classes.push_back(
            {name, lt.text, DivClass::make(ld.lattice, std::move(coeffs)), effective});
        s_.order.emplace_back(Session::DeclKind::divclass, s_.classes.size() - 1);
    }

    void config_decl() {
        st_.expect_keyword("config");
        std::string name = fresh_name();
        st_.expect_keyword("in");
        const Token& lt = st_.expect(Token::Type::ident, "a lattice name");
        const auto& ld = resolve(s_.find_lattice(lt.text), lt, "lattice");
        st_.expect(Token::Type::lbrace, "'{'");

        Session::ConfigDecl cfg;
        cfg.name = name;
        cfg.lattice_name = lt.text;
        std::vector<std::pair<std::string, DivClass>> comps, tests;
        std::vector<std::int64_t> coeffs;
        while (!st_.at(Token::Type::rbrace)) {
            if (st_.accept_keyword("component")) {
                const Token& ct = st_.expect(Token::Type::ident, "a class name");
                const auto& cd = resolve(s_.find_class(ct.text), ct, "class");
                if (!cd.effective)
                    fail_at(ct, "component class '" + ct.text +
                                    "' must be declared effective");
                if (cd.lattice_name != lt.text)
                    fail_at(ct, "class '" + ct.text + "' lives in lattice '" +
                                    cd.lattice_name + "', not '" + lt.text + "'");
                st_.expect_keyword("coeff");
                const Token& vt = st_.expect(Token::Type::integer, "a coefficient");
                if (vt.value > kMaxFormEntry)
                    fail_at(vt, "coefficient out of range (|value| <= " +
                                    std::to_string(kMaxFormEntry) + ")");
                comps.emplace_back(ct.text, cd.divclass);
                coeffs.push_back(vt.value);
                cfg.components.emplace_back(ct.text, vt.value);
            } else if (st_.accept_keyword("test")) {
                const Token& ct = st_.expect(Token::Type::ident, "a class name");
                const auto& cd = resolve(s_.find_class(ct.text), ct, "class");
                if (!cd.effective)
                    fail_at(ct, "test class '" + ct.text + "' must be declared effective");
                if (cd.lattice_name != lt.text)
                    fail_at(ct, "class '" + ct.text + "' lives in lattice '" +
                                    cd.lattice_name + "', not '" + lt.text + "'");
                st_.consume_hyphen_keyword({"not", "in", "support"});
                tests.emplace_back(ct.text, cd.divclass);
                cfg.tests.push_back(ct.text);
            } else if (st_.accept_keyword("assume")) {
                cfg.assumptions.push_back(
                    st_.expect(Token::Type::string_lit, "a quoted assumption").text);
            } else {
                fail_at(st_.peek(), "expected 'component', 'test', 'assume', or '}'");
            }
        }
        const Token& close = st_.peek();
        st_.expect(Token::Type::rbrace, "'}'");
        try {
            cfg.config = CurveConfig::make(ld.lattice, std::move(comps), std::move(coeffs),
                                           std::move(tests), cfg.assumptions);
        } catch (const error& e) {
            fail_at(close, e.what());
        }
        s_.configs.push_back(std::move(cfg));
        s_.order.emplace_back(Session::DeclKind::config, s_.configs.size() - 1);
    }

    void task_decl() {
        const Token& tt = st_.peek();
        st_.expect_keyword("task");
        Session::Task task;
        task.line = tt.line;
        if (st_.at_hyphen_keyword({"monoid", "affine"})) {
            st_.consume_hyphen_keyword({"monoid", "affine"});
            task.kind = Session::TaskKind::monoid_affine;
            const Token& it = st_.expect(Token::Type::ident, "an ideal name");
            const auto& id = resolve(s_.find_ideal(it.text), it, "ideal");
            task.subject = it.text;
            st_.expect_keyword("via");
            const Token& et = st_.expect(Token::Type::ident, "an embedding name");
            const auto& ed = resolve(s_.find_embedding(et.text), et, "embedding");
            if (id.algebra_name != ed.monoid_name)
                fail_at(et, "ideal '" + it.text + "' lives in '" + id.algebra_name +
                                "', not in monoid '" + ed.monoid_name + "'");
            task.via = et.text;
        } else if (st_.accept_keyword("ledger")) {
            task.kind = Session::TaskKind::ledger;
            const Token& it = st_.expect(Token::Type::ident, "an ideal name");
            resolve(s_.find_ideal(it.text), it, "ideal");
            task.subject = it.text;
            if (st_.accept_keyword("using")) {
                do {
                    if (st_.at_hyphen_keyword({"sections", "finitely", "generated"})) break;
                    const Token& et = st_.expect(Token::Type::ident, "an evidence name");
                    const auto* w = s_.find_witness(et.text);
                    const auto* c = s_.find_certificate(et.text);
                    if (!w && !c)
                        fail_at(et, "unknown evidence '" + et.text +
                                        "' (expected a witness or a certificate)");
                    if (c && c->ideal_name != task.subject)
                        fail_at(et, "certificate '" + et.text + "' is for ideal '" +
                                        c->ideal_name + "', not '" + task.subject + "'");
                    task.evidence.push_back(et.text);
                } while (st_.accept(Token::Type::comma));
            }
            if (st_.at_hyphen_keyword({"sections", "finitely", "generated"})) {
                st_.consume_hyphen_keyword({"sections", "finitely", "generated"});
                task.sections_finitely_generated = true;
            }
        } else if (st_.accept_keyword("surface")) {
            task.kind = Session::TaskKind::surface;
            const Token& ct = st_.expect(Token::Type::ident, "a config name");
            resolve(s_.find_config(ct.text), ct, "config");
            task.subject = ct.text;
        } else if (st_.accept_keyword("purity")) {
            task.kind = Session::TaskKind::purity;
            const Token& it = st_.expect(Token::Type::ident, "an ideal name");
            const auto& id = resolve(s_.find_ideal(it.text), it, "ideal");
            task.subject = it.text;
            st_.expect_keyword("via");
            const Token& mt = st_.expect(Token::Type::ident, "a map name");
            const auto& md = resolve(s_.find_map(mt.text), mt, "map");
            if (md.source_name != id.algebra_name)
                fail_at(mt, "map '" + mt.text + "' starts at '" + md.source_name +
                                "', but the ideal lives in '" + id.algebra_name + "'");
            task.via = mt.text;
        } else {
            fail_at(st_.peek(),
                    "expected 'ledger', 'monoid-affine', 'surface', or 'purity'");
        }
        s_.tasks.push_back(std::move(task));
    }
};

std::string field_str(const CoeffField& f) {
    if (f.is_rational()) return "Q";
    return "Fp(" + std::to_string(f.p) + ")";
}

} // namespace

// ------------------------------------------------------------- session ---

const Session::RingDecl* Session::find_ring(const std::string& n) const {
    for (const auto& d : rings)
        if (d.name == n) return &d;
    return nullptr;
}
const Session::AlgebraDecl* Session::find_algebra(const std::string& n) const {
    for (const auto& d : algebras)
        if (d.name == n) return &d;
    return nullptr;
}
const Session::IdealDecl* Session::find_ideal(const std::string& n) const {
    for (const auto& d : ideals)
        if (d.name == n) return &d;
    return nullptr;
}
const Session::MapDecl* Session::find_map(const std::string& n) const {
    for (const auto& d : maps)
        if (d.name == n) return &d;
    return nullptr;
}
const Session::WitnessDecl* Session::find_witness(const std::string& n) const {
    for (const auto& d : witnesses)
        if (d.name == n) return &d;
    return nullptr;
}
const Session::CertificateDecl* Session::find_certificate(const std::string& n) const {
    for (const auto& d : certificates)
        if (d.name == n) return &d;
    return nullptr;
}
const Session::MonoidDecl* Session::find_monoid(const std::string& n) const {
    for (const auto& d : monoids)
        if (d.name == n) return &d;
    return nullptr;
}
const Session::EmbeddingDecl* Session::find_embedding(const std::string& n) const {
    for (const auto& d : embeddings)
        if (d.name == n) return &d;
    return nullptr;
}
const Session::LatticeDecl* Session::find_lattice(const std::string& n) const {
    for (const auto& d : lattices)
        if (d.name == n) return &d;
    return nullptr;
}
const Session::ClassDecl* Session::find_class(const std::string& n) const {
    for (const auto& d : classes)
        if (d.name == n) return &d;
    return nullptr;
}
const Session::ConfigDecl* Session::find_config(const std::string& n) const {
    for (const auto& d : configs)
        if (d.name == n) return &d;
    return nullptr;
}

AlgebraPtr Session::algebra_handle(const std::string& n) const {
    if (const auto* a = find_algebra(n)) return a->algebra;
    if (const auto* m = find_monoid(n)) return m->presentation.algebra;
    return nullptr;
}

Polynomial parse_polynomial(const std::string& text, const RingPtr& ring) {
    Stream st(lex(text));
    Polynomial p = parse_expr(st, ring, 0);
    if (!st.at(Token::Type::end))
        fail_at(st.peek(), "unexpected trailing input after the polynomial");
    return p;
}

Session parse_session(const std::string& text) {
    return Parser(lex(text)).run();
}

std::string render_session(const Session& s) {
    std::string out;
    auto poly_list = [](const std::vector<Polynomial>& ps) {
        std::string t;
        for (std::size_t i = 0; i < ps.size(); ++i) {
            if (i) t += ", ";
            t += ps[i].str();
        }
        return t;
    };
    auto vec_list = [](const std::vector<std::vector<std::int64_t>>& vs) {
        std::string t;
        for (std::size_t i = 0; i < vs.size(); ++i) {
            if (i) t += ", ";
            t += "(";
            for (std::size_t j = 0; j < vs[i].size(); ++j) {
                if (j) t += ", ";
                t += std::to_string(vs[i][j]);
            }
            t += ")";
        }
        return t;
    };

    for (const auto& [kind, idx] : s.order) {
        switch (kind) {
            case Session::DeclKind::ring: {
                const auto& d = s.rings[idx];
                out += "ring " + d.name + " = " + field_str(d.ring->field()) + "[";
                const auto& vars = d.ring->vars();
                for (std::size_t i = 0; i < vars.size(); ++i)
                    out += (i ? ", " : "") + vars[i];
                out += "]\n";
                break;
            }
            case Session::DeclKind::algebra: {
                const auto& d = s.algebras[idx];
                out += "algebra " + d.name + " = " + d.ring_name + " / (" +
                       poly_list(d.algebra->defining().gens) + ")";
                if (d.algebra->is_domain()) out += " domain";
                if (d.algebra->is_factorial_ambient()) out += " factorial";
                out += "\n";
                break;
            }
            case Session::DeclKind::ideal: {
                const auto& d = s.ideals[idx];
                out += "ideal " + d.name + " in " + d.algebra_name + " = (" +
                       poly_list(d.ideal.given()) + ")\n";
                break;
            }
            case Session::DeclKind::map_: {
                const auto& d = s.maps[idx];
                out += "map " + d.name + " : " + d.source_name + " -> " + d.target_name + " { ";
                const auto& vars = d.map.source()->ring()->vars();
                for (std::size_t i = 0; i < vars.size(); ++i) {
                    if (i) out += ", ";
                    out += vars[i] + " -> " + d.map.images()[i].str();
                }
                out += " }\n";
                break;
            }
            case Session::DeclKind::witness: {
                const auto& d = s.witnesses[idx];
                out += "witness " + d.name + " = map " + d.map_name + " height " +
                       std::to_string(d.claimed_height) + "\n";
                break;
            }
            case Session::DeclKind::certificate: {
                const auto& d = s.certificates[idx];
                out += "certificate " + d.name + " for " + d.ideal_name + " {\n";
                for (const auto& sec : d.certificate.sections) {
                    out += "  section { ";
                    for (std::size_t i = 0; i < sec.charts.size(); ++i) {
                        if (i) out += ", ";
                        out += "(" + sec.charts[i].first.str() + ", " +
                               sec.charts[i].second.str() + ")";
                    }
                    out += " }\n";
                }
                out += "}\n";
                break;
            }
            case Session::DeclKind::monoid: {
                const auto& d = s.monoids[idx];
                out += "monoid " + d.name + " = rank " + std::to_string(d.monoid.rank) +
                       " generators " + vec_list(d.monoid.generators);
                if (d.monoid.positive) out += " positive";
                if (d.monoid.normal) out += " normal";
                out += "\n";
                break;
            }
            case Session::DeclKind::embedding: {
                const auto& d = s.embeddings[idx];
                out += "embedding " + d.name + " for " + d.monoid_name + " = split " +
                       std::to_string(d.embedding.s) + " " + std::to_string(d.embedding.k) +
                       " images " + vec_list(d.embedding.images) + " intersection\n";
                break;
            }
            case Session::DeclKind::lattice: {
                const auto& d = s.lattices[idx];
                if (d.is_blowup) {
                    out += "lattice " + d.name + " = blowup " +
                           std::to_string(d.blowup_points) + "\n";
                } else {
                    out += "lattice " + d.name + " = matrix [";
                    for (std::size_t i = 0; i < d.lattice->rank(); ++i) {
                        if (i) out += ", ";
                        out += "[";
                        for (std::size_t j = 0; j < d.lattice->rank(); ++j) {
                            if (j) out += ", ";
                            out += std::to_string(d.lattice->form(i, j));
                        }
                        out += "]";
                    }
                    out += "] labels (";
                    for (std::size_t i = 0; i < d.lattice->labels().size(); ++i)
                        out += (i ? ", " : "") + d.lattice->labels()[i];
                    out += ")\n";
                }
                break;
            }
            case Session::DeclKind::divclass: {
                const auto& d = s.classes[idx];
                out += "class " + d.name + " in " + d.lattice_name + " = " + d.divclass.str();
                if (d.effective) out += " effective";
                out += "\n";
                break;
            }
            case Session::DeclKind::config: {
                const auto& d = s.configs[idx];
                out += "config " + d.name + " in " + d.lattice_name + " {\n";
                for (const auto& [cn, co] : d.components)
                    out += "  component " + cn + " coeff " + std::to_string(co) + "\n";
                for (const auto& tn : d.tests) out += "  test " + tn + " not-in-support\n";
                for (const auto& a : d.assumptions) out += "  assume \"" + a + "\"\n";
                out += "}\n";
                break;
            }
        }
    }
    for (const auto& t : s.tasks) {
        switch (t.kind) {
            case Session::TaskKind::ledger:
                out += "task ledger " + t.subject;
                if (!t.evidence.empty()) {
                    out += " using ";
                    for (std::size_t i = 0; i < t.evidence.size(); ++i)
                        out += (i ? ", " : "") + t.evidence[i];
                }
                if (t.sections_finitely_generated) out += " sections-finitely-generated";
                out += "\n";
                break;
            case Session::TaskKind::monoid_affine:
                out += "task monoid-affine " + t.subject + " via " + t.via + "\n";
                break;
            case Session::TaskKind::surface:
                out += "task surface " + t.subject + "\n";
                break;
            case Session::TaskKind::purity:
                out += "task purity " + t.subject + " via " + t.via + "\n";
                break;
        }
    }
    return out;
}

} // namespace codim1
