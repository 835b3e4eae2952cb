#include "sgqc/poly_text.hpp"

#include <cctype>

namespace sgqc {

namespace {

struct Lexer {
    const std::string& src;
    std::size_t pos = 0;

    explicit Lexer(const std::string& s) : src(s) { skip(); }

    void skip() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    }
    bool eof() const { return pos >= src.size(); }
    char peek() const { return eof() ? '\0' : src[pos]; }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            skip();
            return true;
        }
        return false;
    }
    void expect(char c, const char* what) {
        if (!accept(c)) throw ParseError(std::string("expected '") + c + "' " + what, pos);
    }
    unsigned integer() {
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("expected an integer", pos);
        unsigned long v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + static_cast<unsigned long>(src[pos] - '0');
            if (v > 1000000) throw ParseError("integer too large", pos);
            ++pos;
        }
        skip();
        return static_cast<unsigned>(v);
    }
};

struct Parser {
    Lexer lex;
    SkewRing ring;
    FieldElement prim;

    Parser(SkewRing r, const std::string& text, std::optional<FieldElement> prim_override)
        : lex(text), ring(r), prim(prim_override ? *prim_override : r.field->primitive()) {}

    // FTerm := int ["*" t-part] | t-part ;  t-part := "t" ["^" int]
    FieldElement field_term() {
        const FieldSpec& F = *ring.field;
        FieldElement scalar = F.one();
        bool have_scalar = false;
        if (std::isdigit(static_cast<unsigned char>(lex.peek()))) {
            scalar = F.from_int(static_cast<long>(lex.integer()));
            have_scalar = true;
            std::size_t save = lex.pos;
            if (lex.accept('*')) {
                if (lex.peek() == 't') {
                    // fall through to the t-part below
                } else {
                    lex.pos = save; // the '*' belongs to an x-term
                    lex.skip();
                    return scalar;
                }
            } else {
                return scalar;
            }
        }
        if (lex.peek() == 't') {
            if (F.d() < 2)
                throw ParseError("'t' is not defined over a prime field", lex.pos);
            ++lex.pos;
            lex.skip();
            unsigned e = 1;
            if (lex.accept('^')) e = lex.integer();
            FieldElement power = prim.pow(static_cast<long>(e));
            return have_scalar ? scalar * power : power;
        }
        if (have_scalar) return scalar;
        throw ParseError("expected a field literal", lex.pos);
    }

    // FLit := FTerm ("+" FTerm)*; stops when '+' is not followed by a
    // field term, or when the would-be term is actually the coefficient
    // of an x-power (lookahead for "*x"), as in "t^5 + 2*x".
    FieldElement field_literal() {
        FieldElement acc = field_term();
        for (;;) {
            std::size_t save = lex.pos;
            if (!lex.accept('+')) break;
            if (std::isdigit(static_cast<unsigned char>(lex.peek())) || lex.peek() == 't') {
                FieldElement ft = field_term();
                std::size_t after = lex.pos;
                if (lex.accept('*') && lex.peek() == 'x') {
                    lex.pos = save;
                    lex.skip();
                    break;
                }
                lex.pos = after;
                lex.skip();
                acc = acc + ft;
            } else {
                lex.pos = save;
                lex.skip();
                break;
            }
        }
        return acc;
    }

    // Inside "(" ... ")": SLit := FLit | "(" FLit ")" "+v*(" FLit ")"
    SElement s_literal() {
        const FieldSpec& F = *ring.field;
        if (lex.peek() == '(') {
            lex.expect('(', "to open the field part of an S-literal");
            FieldElement a = field_literal();
            lex.expect(')', "to close the field part of an S-literal");
            lex.expect('+', "before v in an S-literal");
            if (lex.peek() != 'v') throw ParseError("expected 'v' in an S-literal", lex.pos);
            ++lex.pos;
            lex.skip();
            lex.expect('*', "after v in an S-literal");
            lex.expect('(', "to open the v-part of an S-literal");
            FieldElement b = field_literal();
            lex.expect(')', "to close the v-part of an S-literal");
            return SElement(a, b);
        }
        return SElement::from_field(field_literal());
    }

    // Coef := FLit | "(" SLit ")"
    SElement coefficient() {
        if (lex.peek() == '(') {
            lex.expect('(', "to open a coefficient");
            SElement s = s_literal();
            lex.expect(')', "to close a coefficient");
            return s;
        }
        return SElement::from_field(field_literal());
    }

    // Term := Coef | Coef "*" "x" ["^" int] | "x" ["^" int]
    void term(std::vector<SElement>& coeffs, bool negate) {
        const FieldSpec& F = *ring.field;
        SElement c = SElement::one(F);
        bool have_coef = false;
        if (lex.peek() != 'x') {
            c = coefficient();
            have_coef = true;
        }
        unsigned deg = 0;
        bool have_x = false;
        if (have_coef) {
            std::size_t save = lex.pos;
            if (lex.accept('*')) {
                if (lex.peek() == 'x') {
                    have_x = true;
                } else {
                    throw ParseError("expected 'x' after '*'", lex.pos);
                }
            } else {
                lex.pos = save;
                lex.skip();
            }
        } else {
            have_x = true;
        }
        if (have_x) {
            if (lex.peek() != 'x') throw ParseError("expected 'x'", lex.pos);
            ++lex.pos;
            lex.skip();
            deg = 1;
            if (lex.accept('^')) deg = lex.integer();
        }
        if (ring.tag == RingTag::Fq && !c.is_field())
            throw ParseError("coefficient with a v-part in an F_q polynomial", lex.pos);
        if (coeffs.size() <= deg) coeffs.resize(deg + 1, SElement::zero(F));
        coeffs[deg] = negate ? coeffs[deg] - c : coeffs[deg] + c;
    }

    SkewPoly poly() {
        std::vector<SElement> coeffs;
        bool negate = lex.accept('-');
        term(coeffs, negate);
        for (;;) {
            if (lex.accept('+')) {
                term(coeffs, false);
            } else if (lex.accept('-')) {
                term(coeffs, true);
            } else {
                break;
            }
        }
        if (!lex.eof()) throw ParseError("trailing input after polynomial", lex.pos);
        if (coeffs.empty()) coeffs.push_back(SElement::zero(*ring.field));
        return SkewPoly(ring, std::move(coeffs));
    }
};

} // namespace

SkewPoly parse_poly(SkewRing ring, const std::string& text,
                    std::optional<FieldElement> primitive_image) {
    if (primitive_image && &primitive_image->spec() != ring.field)
        throw SpecMismatchError("primitive override from a different field");
    Parser p(ring, text, primitive_image);
    return p.poly();
}

std::string render_poly(const SkewPoly& p) { return p.to_string(); }

FieldElement parse_field_literal(const FieldSpec& field, const std::string& text) {
    Parser p(SkewRing::fq(field, 1), text, std::nullopt);
    FieldElement e = p.field_literal();
    if (!p.lex.eof()) throw ParseError("trailing input after field literal", p.lex.pos);
    return e;
}

SElement parse_s_literal(const FieldSpec& field, const std::string& text) {
    Parser p(SkewRing::s(field, 1), text, std::nullopt);
    SElement e = p.s_literal();
    if (!p.lex.eof()) throw ParseError("trailing input after S-literal", p.lex.pos);
    return e;
}

} // namespace sgqc
