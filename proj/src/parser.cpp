#include "pvi/parser.hpp"

#include "pvi/spacecurve.hpp"

#include <cctype>

namespace pvi {

namespace {

enum class Tok { Int, Sym, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

class Lexer {
  public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }
    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

  private:
    const std::string& s_;
    std::size_t i_ = 0;
    Token tok_;
    void advance() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
        std::size_t start = i_;
        if (i_ >= s_.size()) {
            tok_ = {Tok::End, "", start};
            return;
        }
        char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
            tok_ = {Tok::Int, s_.substr(i_, j - i_), start};
            i_ = j;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_'))
                ++j;
            tok_ = {Tok::Sym, s_.substr(i_, j - i_), start};
            i_ = j;
            return;
        }
        ++i_;
        switch (c) {
            case '+': tok_ = {Tok::Plus, "+", start}; return;
            case '-': tok_ = {Tok::Minus, "-", start}; return;
            case '*': tok_ = {Tok::Star, "*", start}; return;
            case '/': tok_ = {Tok::Slash, "/", start}; return;
            case '^': tok_ = {Tok::Caret, "^", start}; return;
            case '(': tok_ = {Tok::LParen, "(", start}; return;
            case ')': tok_ = {Tok::RParen, ")", start}; return;
            default: throw ParseError(std::string("unexpected character '") + c + "'", start);
        }
    }
};

constexpr long kMaxExponent = 1 << 16;

template <class V, class Ops>
class Parser {
  public:
    Parser(const std::string& text, const Ops& ops) : lex_(text), ops_(ops) {}

    V parse() {
        V v = expr();
        if (lex_.peek().kind != Tok::End)
            throw ParseError("trailing input", lex_.peek().pos);
        return v;
    }

  private:
    Lexer lex_;
    const Ops& ops_;

    V expr() {
        V v = term();
        for (;;) {
            Tok k = lex_.peek().kind;
            if (k == Tok::Plus) {
                lex_.take();
                v = ops_.add(v, term());
            } else if (k == Tok::Minus) {
                lex_.take();
                v = ops_.sub(v, term());
            } else {
                return v;
            }
        }
    }

    V term() {
        V v = unary();
        for (;;) {
            Tok k = lex_.peek().kind;
            if (k == Tok::Star) {
                lex_.take();
                v = ops_.mul(v, unary());
            } else if (k == Tok::Slash) {
                Token t = lex_.take();
                v = ops_.div(v, unary(), t.pos);
            } else {
                return v;
            }
        }
    }

    V unary() {
        if (lex_.peek().kind == Tok::Minus) {
            lex_.take();
            return ops_.neg(unary());
        }
        if (lex_.peek().kind == Tok::Plus) {
            lex_.take();
            return unary();
        }
        return power();
    }

    V power() {
        V v = atom();
        if (lex_.peek().kind == Tok::Caret) {
            Token c = lex_.take();
            Token e = lex_.take();
            if (e.kind != Tok::Int)
                throw ParseError("expected nonnegative integer exponent", e.pos);
            long ev = 0;
            for (char ch : e.text) {
                ev = ev * 10 + (ch - '0');
                if (ev > kMaxExponent) throw ParseError("exponent overflow", e.pos);
            }
            (void)c;
            v = ops_.pow(v, ev);
        }
        return v;
    }

    V atom() {
        Token t = lex_.take();
        switch (t.kind) {
            case Tok::Int: return ops_.literal(t.text, t.pos);
            case Tok::Sym: return ops_.symbol(t.text, t.pos);
            case Tok::LParen: {
                V v = expr();
                Token r = lex_.take();
                if (r.kind != Tok::RParen) throw ParseError("expected ')'", r.pos);
                return v;
            }
            default: throw ParseError("expected value", t.pos);
        }
    }
};

struct FFOps {
    const ExprContext& ctx;
    FFElem add(const FFElem& a, const FFElem& b) const { return a + b; }
    FFElem sub(const FFElem& a, const FFElem& b) const { return a - b; }
    FFElem mul(const FFElem& a, const FFElem& b) const { return a * b; }
    FFElem div(const FFElem& a, const FFElem& b, std::size_t pos) const {
        if (b.is_zero()) throw ParseError("division by zero", pos);
        return a / b;
    }
    FFElem neg(const FFElem& a) const { return -a; }
    FFElem pow(const FFElem& a, long e) const { return a.pow(e); }
    FFElem literal(const std::string& text, std::size_t) const {
        return FFElem(RatFun(FieldScalar(parse_rat(text))), ctx.rad);
    }
    FFElem symbol(const std::string& name, std::size_t pos) const {
        auto it = ctx.symbols.find(name);
        if (it != ctx.symbols.end()) return it->second;
        if (name == "s") return FFElem::variable(ctx.rad);
        if (name == "i") return FFElem(RatFun(FieldScalar::i()), ctx.rad);
        if (name == "t" || name == "t1") {
            if (ctx.rad->count() < 1) throw ParseError("no radical bound for '" + name + "'", pos);
            return FFElem::radical(ctx.rad, 0);
        }
        if (name == "t2") {
            if (ctx.rad->count() < 2) throw ParseError("no radical bound for 't2'", pos);
            return FFElem::radical(ctx.rad, 1);
        }
        throw ParseError("unknown symbol '" + name + "'", pos);
    }
};

struct FracOps {
    const std::map<std::string, PolyFrac>& symbols;
    PolyFrac add(const PolyFrac& a, const PolyFrac& b) const { return pf_add(a, b); }
    PolyFrac sub(const PolyFrac& a, const PolyFrac& b) const { return pf_sub(a, b); }
    PolyFrac mul(const PolyFrac& a, const PolyFrac& b) const { return pf_mul(a, b); }
    PolyFrac div(const PolyFrac& a, const PolyFrac& b, std::size_t pos) const {
        if (b.num.is_zero()) throw ParseError("division by zero", pos);
        return pf_div(a, b);
    }
    PolyFrac neg(const PolyFrac& a) const { return pf_neg(a); }
    PolyFrac pow(const PolyFrac& a, long e) const { return pf_pow(a, e); }
    PolyFrac literal(const std::string& text, std::size_t) const {
        return pf_const(FieldScalar(parse_rat(text)));
    }
    PolyFrac symbol(const std::string& name, std::size_t pos) const {
        auto it = symbols.find(name);
        if (it != symbols.end()) return it->second;
        if (name == "p") {
            PolyFrac f;
            f.num = Poly2::var_u();
            return f;
        }
        if (name == "q") {
            PolyFrac f;
            f.num = Poly2::var_x();
            return f;
        }
        if (name == "i") return pf_const(FieldScalar::i());
        throw ParseError("unknown symbol '" + name + "' in plane-curve expression", pos);
    }
};

struct LinOps {
    LinForm add(const LinForm& a, const LinForm& b) const {
        return {a.c0 + b.c0, a.ca + b.ca, a.cb + b.cb};
    }
    LinForm sub(const LinForm& a, const LinForm& b) const {
        return {a.c0 - b.c0, a.ca - b.ca, a.cb - b.cb};
    }
    LinForm mul(const LinForm& a, const LinForm& b) const {
        if (!a.is_const() && !b.is_const())
            throw Error("nonlinear product in theta expression");
        if (a.is_const()) return {a.c0 * b.c0, a.c0 * b.ca, a.c0 * b.cb};
        return {b.c0 * a.c0, b.c0 * a.ca, b.c0 * a.cb};
    }
    LinForm div(const LinForm& a, const LinForm& b, std::size_t pos) const {
        if (!b.is_const()) throw ParseError("division by parameter in theta expression", pos);
        if (b.c0 == 0) throw ParseError("division by zero", pos);
        return {a.c0 / b.c0, a.ca / b.c0, a.cb / b.c0};
    }
    LinForm neg(const LinForm& a) const { return {-a.c0, -a.ca, -a.cb}; }
    LinForm pow(const LinForm& a, long e) const {
        if (!a.is_const()) throw Error("power of parameter in theta expression");
        LinForm r{Rat(1), 0, 0};
        for (long i = 0; i < e; ++i) r.c0 *= a.c0;
        return r;
    }
    LinForm literal(const std::string& text, std::size_t) const {
        return {parse_rat(text), 0, 0};
    }
    LinForm symbol(const std::string& name, std::size_t pos) const {
        if (name == "a") return {0, Rat(1), 0};
        if (name == "b") return {0, 0, Rat(1)};
        throw ParseError("unknown symbol '" + name + "' in theta expression", pos);
    }
};

}  // namespace

FFElem parse_expr(const std::string& text, const ExprContext& ctx) {
    FFOps ops{ctx};
    Parser<FFElem, FFOps> p(text, ops);
    return p.parse();
}

LinForm parse_linform(const std::string& text) {
    LinOps ops;
    Parser<LinForm, LinOps> p(text, ops);
    return p.parse();
}

PolyFrac parse_polyfrac(const std::string& text,
                        const std::map<std::string, PolyFrac>& symbols) {
    FracOps ops{symbols};
    Parser<PolyFrac, FracOps> p(text, ops);
    return p.parse();
}

}  // namespace pvi
