#include <feuler/io.hpp>

#include <cctype>
#include <stdexcept>
#include <vector>

namespace feuler {

namespace {

// p = content · (integer polynomial with coprime coefficients and positive
// leading coefficient).
struct Primitive {
    BigRat content;
    std::vector<BigInt> coeffs;
};

Primitive primitive(const LPoly &p)
{
    BigInt lcm_den(1);
    for (const auto &c : p.coeffs()) {
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
    }
    std::vector<BigInt> ints;
    BigInt g(0);
    for (const auto &c : p.coeffs()) {
        BigInt v = c.get_num() * (lcm_den / c.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        ints.push_back(std::move(v));
    }
    if (sgn(ints.back()) < 0) {
        g = -g;
    }
    for (auto &v : ints) {
        v /= g;
    }
    BigRat content(g, lcm_den);
    content.canonicalize();
    return {content, std::move(ints)};
}

bool is_one(const std::vector<BigInt> &v) { return v.size() == 1 && v[0] == 1; }

std::size_t term_count(const std::vector<BigInt> &v)
{
    std::size_t n = 0;
    for (const auto &c : v) {
        n += sgn(c) != 0;
    }
    return n;
}

struct Style {
    const char *var;
    bool latex;
};

constexpr Style kText{"λ", false};
constexpr Style kLatex{"\\lambda", true};

std::string exponent(unsigned e, const Style &s)
{
    return s.latex ? "^{" + std::to_string(e) + "}" : "^" + std::to_string(e);
}

std::string int_poly_string(const std::vector<BigInt> &v, const Style &s)
{
    std::string out;
    for (std::size_t i = v.size(); i-- > 0;) {
        if (sgn(v[i]) == 0) {
            continue;
        }
        if (sgn(v[i]) < 0) {
            out += "-";
        } else if (!out.empty()) {
            out += "+";
        }
        const BigInt mag = abs(v[i]);
        if (i == 0 || mag != 1) {
            out += mag.get_str();
        }
        if (i >= 1) {
            out += s.var;
        }
        if (i >= 2) {
            out += exponent(static_cast<unsigned>(i), s);
        }
    }
    return out;
}

// Denominator string. Pure powers of a linear factor print as (aλ+b)^m.
struct DenString {
    std::string text;
    bool compound; // needs parentheses when multiplied by a number
};

DenString den_string(const LPoly &monic_den, const std::vector<BigInt> &prim, const Style &s)
{
    const int m = monic_den.degree();
    if (m >= 2) {
        const BigRat c = monic_den.coeff(static_cast<std::size_t>(m - 1)) / m;
        const LPoly linear{c, BigRat(1)};
        if (linear.pow(static_cast<unsigned>(m)) == monic_den) {
            const auto base = primitive(linear).coeffs;
            const std::string inner = int_poly_string(base, s);
            if (term_count(base) == 1) {
                return {s.var + exponent(static_cast<unsigned>(m), s), false};
            }
            return {"(" + inner + ")" + exponent(static_cast<unsigned>(m), s), false};
        }
    }
    return {int_poly_string(prim, s), term_count(prim) > 1};
}

struct Rendered {
    bool negative = false;
    std::string body;
    bool needs_parens = false; // as a coefficient in front of x^k
};

Rendered render(const LRat &f, const Style &s)
{
    Rendered out;
    if (f.is_zero()) {
        out.body = "0";
        return out;
    }
    const auto num = primitive(f.num());
    const auto den = primitive(f.den());
    BigRat k = num.content / den.content;
    out.negative = sgn(k) < 0;
    k = abs(k);
    const BigInt a = k.get_num();
    const BigInt b = k.get_den();

    const bool num_one = is_one(num.coeffs);
    const bool den_one = is_one(den.coeffs);
    const bool num_multi = term_count(num.coeffs) > 1;
    const bool has_den = !(den_one && b == 1);

    std::string num_str;
    if (num_one) {
        num_str = a.get_str();
    } else {
        const std::string p = int_poly_string(num.coeffs, s);
        if (a != 1) {
            num_str = a.get_str() + (num_multi ? "(" + p + ")" : p);
        } else if (num_multi && has_den && !s.latex) {
            num_str = "(" + p + ")";
        } else {
            num_str = p;
        }
    }

    if (!has_den) {
        out.body = num_str;
        out.needs_parens = s.latex ? (num_multi && a == 1) : num_multi;
        return out;
    }

    std::string den_str;
    if (den_one) {
        den_str = b.get_str();
    } else {
        const auto d = den_string(f.den(), den.coeffs, s);
        if (b == 1) {
            den_str = (d.compound && !s.latex) ? "(" + d.text + ")" : d.text;
        } else {
            const std::string inner = d.compound ? "(" + d.text + ")" : d.text;
            den_str = s.latex ? b.get_str() + inner : "(" + b.get_str() + inner + ")";
        }
    }
    if (s.latex) {
        out.body = "\\frac{" + num_str + "}{" + den_str + "}";
        out.needs_parens = false;
    } else {
        out.body = num_str + "/" + den_str;
        out.needs_parens = true;
    }
    return out;
}

std::string render_lrat(const LRat &f, const Style &s)
{
    const auto r = render(f, s);
    return (r.negative ? "-" : "") + r.body;
}

std::string render_xpoly(const XPoly &p, const Style &s)
{
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    const auto &c = p.coeffs();
    for (std::size_t k = c.size(); k-- > 0;) {
        if (c[k].is_zero()) {
            continue;
        }
        auto r = render(c[k], s);
        std::string body;
        if (k == 0) {
            body = r.body;
        } else {
            const std::string xs = k == 1 ? "x" : "x" + exponent(static_cast<unsigned>(k), s);
            const LRat mag = r.negative ? -c[k] : c[k];
            if (mag.is_one()) {
                body = xs;
            } else {
                body = (r.needs_parens ? "(" + r.body + ")" : r.body) + (s.latex ? " " : "") + xs;
            }
        }
        if (out.empty()) {
            out = (r.negative ? "-" : "") + body;
        } else {
            out += (r.negative ? " - " : " + ") + body;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Reader

enum class Tok { Num, Lambda, X, Plus, Minus, Star, Slash, Caret, LParen, RParen, LBrace, RBrace, Frac, End };

struct Token {
    Tok kind;
    BigInt value;
};

std::vector<Token> tokenize(std::string_view in)
{
    std::vector<Token> out;
    std::size_t i = 0;
    auto starts = [&](std::string_view w) { return in.substr(i, w.size()) == w; };
    auto fail = [&]() -> void {
        throw std::invalid_argument("unexpected input at offset " + std::to_string(i) + ": '" + std::string(in) + "'");
    };
    while (i < in.size()) {
        const char ch = in[i];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++i;
        } else if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t j = i;
            while (j < in.size() && std::isdigit(static_cast<unsigned char>(in[j]))) {
                ++j;
            }
            out.push_back({Tok::Num, BigInt(std::string(in.substr(i, j - i)), 10)});
            i = j;
        } else if (starts("λ")) {
            out.push_back({Tok::Lambda, {}});
            i += std::string_view("λ").size();
        } else if (ch == '\\') {
            if (starts("\\lambda")) {
                out.push_back({Tok::Lambda, {}});
                i += 7;
            } else if (starts("\\frac")) {
                out.push_back({Tok::Frac, {}});
                i += 5;
            } else if (starts("\\dfrac")) {
                out.push_back({Tok::Frac, {}});
                i += 6;
            } else if (starts("\\cdot")) {
                out.push_back({Tok::Star, {}});
                i += 5;
            } else if (starts("\\left")) {
                i += 5;
            } else if (starts("\\right")) {
                i += 6;
            } else if (starts("\\,") || starts("\\;") || starts("\\ ")) {
                i += 2;
            } else {
                fail();
            }
        } else if (starts("lambda")) {
            out.push_back({Tok::Lambda, {}});
            i += 6;
        } else {
            Tok t{};
            switch (ch) {
            case 'l': t = Tok::Lambda; break;
            case 'x': t = Tok::X; break;
            case '+': t = Tok::Plus; break;
            case '-': t = Tok::Minus; break;
            case '*': t = Tok::Star; break;
            case '/': t = Tok::Slash; break;
            case '^': t = Tok::Caret; break;
            case '(': t = Tok::LParen; break;
            case ')': t = Tok::RParen; break;
            case '{': t = Tok::LBrace; break;
            case '}': t = Tok::RBrace; break;
            default: fail();
            }
            out.push_back({t, {}});
            ++i;
        }
    }
    out.push_back({Tok::End, {}});
    return out;
}

class Reader {
public:
    explicit Reader(std::string_view text) : source_(text), toks_(tokenize(text)) {}

    XPoly parse()
    {
        XPoly v = expr();
        expect(Tok::End);
        return v;
    }

private:
    [[noreturn]] void fail(const std::string &what) const
    {
        throw std::invalid_argument(what + " in '" + std::string(source_) + "'");
    }

    const Token &peek() const { return toks_[pos_]; }
    bool accept(Tok t)
    {
        if (peek().kind == t) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(Tok t)
    {
        if (!accept(t)) {
            fail("unexpected token");
        }
    }

    static LRat as_scalar(const XPoly &v, const char *what)
    {
        if (v.degree() > 0) {
            throw std::invalid_argument(std::string(what) + " must not depend on x");
        }
        return v.coeff(0);
    }

    XPoly expr()
    {
        XPoly v;
        bool neg = false;
        if (accept(Tok::Minus)) {
            neg = true;
        } else {
            accept(Tok::Plus);
        }
        v = term();
        if (neg) {
            v = -v;
        }
        while (true) {
            if (accept(Tok::Plus)) {
                v += term();
            } else if (accept(Tok::Minus)) {
                v -= term();
            } else {
                return v;
            }
        }
    }

    static bool starts_primary(Tok t)
    {
        return t == Tok::Lambda || t == Tok::X || t == Tok::LParen || t == Tok::LBrace || t == Tok::Frac;
    }

    XPoly term()
    {
        XPoly v = factor();
        while (true) {
            if (accept(Tok::Star)) {
                v = v * factor();
            } else if (accept(Tok::Slash)) {
                const XPoly d = factor();
                if (d.is_zero()) {
                    fail("division by zero");
                }
                v *= as_scalar(d, "divisor").inverse();
            } else if (starts_primary(peek().kind)) {
                v = v * factor();
            } else {
                return v;
            }
        }
    }

    XPoly factor()
    {
        if (accept(Tok::Minus)) {
            return -factor();
        }
        XPoly base = primary();
        if (!accept(Tok::Caret)) {
            return base;
        }
        const long e = exponent_value();
        if (e >= 0) {
            XPoly out(LRat(1));
            for (long i = 0; i < e; ++i) {
                out = out * base;
            }
            return out;
        }
        const LRat s = as_scalar(base, "base of a negative power");
        if (s.is_zero()) {
            fail("zero to a negative power");
        }
        return XPoly(s.pow(static_cast<int>(e)));
    }

    long exponent_value()
    {
        Tok close = Tok::End;
        if (accept(Tok::LBrace)) {
            close = Tok::RBrace;
        } else if (accept(Tok::LParen)) {
            close = Tok::RParen;
        }
        const bool neg = accept(Tok::Minus);
        if (peek().kind != Tok::Num || !peek().value.fits_slong_p() || peek().value > 4096) {
            fail("exponent must be a small integer");
        }
        long e = peek().value.get_si();
        ++pos_;
        if (close != Tok::End) {
            expect(close);
        }
        return neg ? -e : e;
    }

    XPoly primary()
    {
        const Token t = peek();
        switch (t.kind) {
        case Tok::Num:
            ++pos_;
            return XPoly(LRat(BigRat(t.value)));
        case Tok::Lambda:
            ++pos_;
            return XPoly(LRat::lambda());
        case Tok::X:
            ++pos_;
            return XPoly::monomial(1);
        case Tok::LParen: {
            ++pos_;
            XPoly v = expr();
            expect(Tok::RParen);
            return v;
        }
        case Tok::LBrace: {
            ++pos_;
            XPoly v = expr();
            expect(Tok::RBrace);
            return v;
        }
        case Tok::Frac: {
            ++pos_;
            expect(Tok::LBrace);
            XPoly n = expr();
            expect(Tok::RBrace);
            expect(Tok::LBrace);
            XPoly d = expr();
            expect(Tok::RBrace);
            if (d.is_zero()) {
                fail("division by zero");
            }
            return n * as_scalar(d, "denominator").inverse();
        }
        default:
            fail("expected a number, variable or group");
        }
    }

    std::string_view source_;
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

[[noreturn]] void schema_error(const std::string &what) { throw std::invalid_argument("JSON schema: " + what); }

} // namespace

std::string to_text(const LPoly &p) { return render_lrat(LRat(p), kText); }
std::string to_text(const LRat &f) { return render_lrat(f, kText); }
std::string to_text(const XPoly &p) { return render_xpoly(p, kText); }
std::string to_latex(const LRat &f) { return render_lrat(f, kLatex); }
std::string to_latex(const XPoly &p) { return render_xpoly(p, kLatex); }

XPoly parse_xpoly(std::string_view text) { return Reader(text).parse(); }

LRat parse_lrat(std::string_view text)
{
    const XPoly v = parse_xpoly(text);
    if (v.degree() > 0) {
        throw std::invalid_argument("expected a rational function of λ only: '" + std::string(text) + "'");
    }
    return v.coeff(0);
}

json to_json(const BigRat &q) { return to_string(q); }

json to_json(const LPoly &p)
{
    json arr = json::array();
    for (const auto &c : p.coeffs()) {
        arr.push_back(to_string(c));
    }
    return arr;
}

json to_json(const LRat &f)
{
    json obj = json::object();
    obj["num"] = to_json(f.num());
    obj["den"] = to_json(f.den());
    return obj;
}

json to_json(const XPoly &p)
{
    json arr = json::array();
    for (const auto &c : p.coeffs()) {
        arr.push_back(to_json(c));
    }
    return arr;
}

json to_json(const FEExpansion &e)
{
    json obj = json::object();
    obj["order"] = e.order;
    json coeffs = json::array();
    for (const auto &c : e.coeffs) {
        coeffs.push_back(to_json(c));
    }
    obj["coeffs"] = std::move(coeffs);
    return obj;
}

BigRat bigrat_from_json(const json &j)
{
    if (j.is_string()) {
        return parse_bigrat(j.get<std::string>());
    }
    if (j.is_number_integer()) {
        return BigRat(j.get<long>());
    }
    schema_error("rational must be a string \"p/q\"");
}

LPoly lpoly_from_json(const json &j)
{
    if (!j.is_array()) {
        schema_error("polynomial in λ must be an array");
    }
    std::vector<BigRat> v;
    for (const auto &c : j) {
        v.push_back(bigrat_from_json(c));
    }
    return LPoly(std::move(v));
}

LRat lrat_from_json(const json &j)
{
    if (j.is_string()) {
        return parse_lrat(j.get<std::string>());
    }
    if (j.is_number_integer()) {
        return LRat(j.get<long>());
    }
    if (!j.is_object() || !j.contains("num")) {
        schema_error("rational function must be an object with \"num\" and \"den\"");
    }
    LPoly num = lpoly_from_json(j.at("num"));
    LPoly den = j.contains("den") ? lpoly_from_json(j.at("den")) : LPoly(BigRat(1));
    if (den.is_zero()) {
        schema_error("zero denominator");
    }
    return LRat(std::move(num), std::move(den));
}

XPoly xpoly_from_json(const json &j)
{
    if (j.is_string()) {
        return parse_xpoly(j.get<std::string>());
    }
    if (!j.is_array()) {
        schema_error("polynomial in x must be an array of rational functions");
    }
    std::vector<LRat> v;
    for (const auto &c : j) {
        v.push_back(lrat_from_json(c));
    }
    return XPoly(std::move(v));
}

FEExpansion expansion_from_json(const json &j)
{
    if (!j.is_object() || !j.contains("order") || !j.contains("coeffs") || !j.at("order").is_number_integer()) {
        schema_error("expansion must be {\"order\": r, \"coeffs\": [...]}");
    }
    const long order = j.at("order").get<long>();
    if (order < 1) {
        schema_error("expansion order must be at least 1");
    }
    FEExpansion e;
    e.order = static_cast<unsigned>(order);
    if (!j.at("coeffs").is_array()) {
        schema_error("coeffs must be an array");
    }
    for (const auto &c : j.at("coeffs")) {
        e.coeffs.push_back(lrat_from_json(c));
    }
    return e;
}

} // namespace feuler
