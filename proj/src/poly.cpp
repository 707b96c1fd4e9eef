#include "seminf/poly.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace seminf {

void BivariatePolynomial::add_term(long xdeg, long ydeg, const Rat& c) {
    if (c == 0) return;
    auto key = Exponents{xdeg, ydeg};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

BivariatePolynomial BivariatePolynomial::constant(const Rat& c) {
    return monomial(0, 0, c);
}

BivariatePolynomial BivariatePolynomial::monomial(long xdeg, long ydeg, Rat coeff) {
    if (xdeg < 0 || ydeg < 0) throw math_error("negative exponent");
    BivariatePolynomial p;
    coeff.canonicalize();
    p.add_term(xdeg, ydeg, coeff);
    return p;
}

long BivariatePolynomial::total_degree() const {
    long d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
    return d;
}

long BivariatePolynomial::degree_x() const {
    long d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.first);
    return d;
}

long BivariatePolynomial::degree_y() const {
    long d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.second);
    return d;
}

Rat BivariatePolynomial::coeff(long xdeg, long ydeg) const {
    auto it = terms_.find({xdeg, ydeg});
    return it == terms_.end() ? Rat(0) : it->second;
}

BivariatePolynomial BivariatePolynomial::operator+(const BivariatePolynomial& o) const {
    BivariatePolynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e.first, e.second, c);
    return r;
}

BivariatePolynomial BivariatePolynomial::operator-(const BivariatePolynomial& o) const {
    BivariatePolynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e.first, e.second, Rat(-c));
    return r;
}

BivariatePolynomial BivariatePolynomial::operator-() const {
    BivariatePolynomial r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, Rat(-c));
    return r;
}

BivariatePolynomial BivariatePolynomial::operator*(const BivariatePolynomial& o) const {
    BivariatePolynomial r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_)
            r.add_term(e1.first + e2.first, e1.second + e2.second, Rat(c1 * c2));
    return r;
}

BivariatePolynomial BivariatePolynomial::pow(unsigned long e) const {
    BivariatePolynomial acc = constant(Rat(1));
    BivariatePolynomial base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = (e >>= 1) ? base * base : base;
    }
    return acc;
}

BivariatePolynomial BivariatePolynomial::scaled(const Rat& c) const {
    BivariatePolynomial r;
    if (c == 0) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, Rat(v * c));
    return r;
}

std::pair<BivariatePolynomial, BivariatePolynomial> BivariatePolynomial::divmod_y(
    const BivariatePolynomial& f, const BivariatePolynomial& divisor) {
    long dq = divisor.degree_y();
    if (dq < 0) throw math_error("division by the zero polynomial");
    if (!(divisor.coeff(0, dq) == 1))
        throw math_error("divisor must have constant leading y-coefficient 1");
    for (const auto& [e, c] : divisor.terms())
        if (e.second == dq && e.first != 0)
            throw math_error("divisor must have constant leading y-coefficient 1");

    BivariatePolynomial q, r = f;
    while (r.degree_y() >= dq) {
        long dy = r.degree_y();
        BivariatePolynomial top;
        for (const auto& [e, c] : r.terms())
            if (e.second == dy) top.add_term(e.first, dy - dq, c);
        q = q + top;
        r = r - top * divisor;
    }
    return {q, r};
}

Int BivariatePolynomial::denominator_lcm() const {
    Int L(1);
    for (const auto& [e, c] : terms_) L = lcm(L, c.get_den());
    return L;
}

std::string BivariatePolynomial::str() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Exponents, Rat>> ts(terms_.begin(), terms_.end());
    std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
        long ta = a.first.first + a.first.second, tb = b.first.first + b.first.second;
        if (ta != tb) return ta > tb;
        if (a.first.second != b.first.second) return a.first.second > b.first.second;
        return a.first.first > b.first.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : ts) {
        Rat mag = c < 0 ? Rat(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool has_var = e.first > 0 || e.second > 0;
        if (!has_var || mag != 1) {
            os << rat_str(mag);
            if (has_var) os << "*";
        }
        if (e.first > 0) {
            os << "x";
            if (e.first > 1) os << "^" << e.first;
            if (e.second > 0) os << "*";
        }
        if (e.second > 0) {
            os << "y";
            if (e.second > 1) os << "^" << e.second;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------

namespace {

struct Parser {
    const std::string& text;
    std::size_t pos = 0;

    explicit Parser(const std::string& t) : text(t) {}

    [[noreturn]] void fail(const std::string& why) const {
        throw parse_error(why + " at position " + std::to_string(pos));
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    Int digits() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected a number");
        return Int(text.substr(start, pos - start));
    }

    unsigned long exponent() {
        Int e = digits();
        if (e > 4096) fail("exponent too large");
        return e.get_ui();
    }

    BivariatePolynomial atom() {
        skip_ws();
        if (eat('(')) {
            BivariatePolynomial inner = expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        char c = peek();
        if (c == 'x') {
            ++pos;
            return BivariatePolynomial::variable_x();
        }
        if (c == 'y') {
            ++pos;
            return BivariatePolynomial::variable_y();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int num = digits();
            if (eat('/')) {
                Int den = digits();
                if (den == 0) fail("division by zero");
                return BivariatePolynomial::constant(make_rat(num, den));
            }
            return BivariatePolynomial::constant(Rat(num));
        }
        fail("expected '(', variable, or number");
    }

    BivariatePolynomial factor() {
        BivariatePolynomial base = atom();
        if (eat('^')) return base.pow(exponent());
        return base;
    }

    BivariatePolynomial term() {
        BivariatePolynomial p = factor();
        while (eat('*')) p = p * factor();
        return p;
    }

    BivariatePolynomial expr() {
        bool neg = false;
        skip_ws();
        if (eat('-'))
            neg = true;
        else
            eat('+');
        BivariatePolynomial p = term();
        if (neg) p = -p;
        while (true) {
            skip_ws();
            if (eat('+'))
                p = p + term();
            else if (eat('-'))
                p = p - term();
            else
                break;
        }
        return p;
    }
};

} // namespace

BivariatePolynomial parse_poly(const std::string& text) {
    Parser p(text);
    BivariatePolynomial out = p.expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("unexpected trailing input");
    return out;
}

} // namespace seminf
