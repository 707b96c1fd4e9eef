#include "seminf/value.hpp"

#include <cctype>
#include <sstream>

namespace seminf {

std::pair<Int, Int> split_square(const Int& n) {
    if (n <= 0) throw math_error("radicand must be positive");
    Int sq(1), f(n);
    // Trial division catches every square prime factor up to 10^5; a leftover
    // square of a single large prime is caught by the perfect-square test.
    for (Int p = 2; p * p <= f && p <= 100000; p += (p == 2 ? 1 : 2)) {
        Int pp = p * p;
        while (f % pp == 0) {
            f /= pp;
            sq *= p;
        }
    }
    if (f > 1 && is_perfect_square(f)) {
        sq *= isqrt(f);
        f = 1;
    }
    return {sq, f};
}

Quad::Quad(Int a, Int b, Int c, Int d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    normalize();
    if (b_ == 0 || d_ <= 1)
        throw math_error("value is rational, not a quadratic irrational");
}

void Quad::normalize() {
    if (c_ == 0) throw math_error("quadratic with zero denominator");
    if (b_ != 0) {
        auto [sq, fr] = split_square(d_);
        if (sq != 1) {
            b_ *= sq;
            d_ = fr;
        }
        if (d_ == 1) {
            a_ += b_;
            b_ = 0;
        }
    }
    if (c_ < 0) {
        a_ = -a_;
        b_ = -b_;
        c_ = -c_;
    }
    Int g = gcd(gcd(abs(a_), abs(b_)), c_);
    if (g > 1) {
        a_ /= g;
        b_ /= g;
        c_ /= g;
    }
}

std::optional<Rat> Quad::make(Int a, Int b, Int c, Int d, Quad& quad_out) {
    if (c == 0) throw math_error("quadratic with zero denominator");
    if (d <= 0) throw math_error("radicand must be positive");
    if (b != 0 && d > 1) {
        auto [sq, fr] = split_square(d);
        if (fr > 1) {
            quad_out = Quad(std::move(a), b * sq, std::move(c), fr);
            return std::nullopt;
        }
        a += b * sq;  // sqrt(d) was an integer after all
    }
    return make_rat(a, c);
}

int Quad::sign() const {
    int sa = sgn(a_);
    int sb = sgn(b_);
    if (sa >= 0 && sb > 0) return 1;
    if (sa <= 0 && sb < 0) return -1;
    if (sb == 0) return sa;
    // opposite signs: compare a^2 against b^2 d
    Int lhs = a_ * a_;
    Int rhs = b_ * b_ * d_;
    if (sa > 0) return lhs > rhs ? 1 : (lhs < rhs ? -1 : 0);
    return rhs > lhs ? 1 : (rhs < lhs ? -1 : 0);
}

Int Quad::floor() const {
    // floor((a + b sqrt d)/c), c > 0, b sqrt d irrational:
    // floor(b sqrt d) = isqrt(b^2 d) if b > 0, else -(isqrt(b^2 d) + 1).
    Int t = b_ * b_ * d_;
    Int s = isqrt(t);
    Int fb = (b_ > 0) ? s : Int(-(s + 1));
    return fdiv(a_ + fb, c_);
}

Quad Quad::operator-() const { return Quad(-a_, -b_, c_, d_); }

Quad Quad::add_rat(const Rat& r) const {
    const Int& p = r.get_num();
    const Int& q = r.get_den();
    return Quad(a_ * q + p * c_, b_ * q, c_ * q, d_);
}

Quad Quad::mul_rat(const Rat& r) const {
    if (r == 0) throw math_error("rational factor must be nonzero here");
    const Int& p = r.get_num();
    const Int& q = r.get_den();
    return Quad(a_ * p, b_ * p, c_ * q, d_);
}

Quad Quad::add(const Quad& o) const {
    if (d_ != o.d_) throw kind_error("incommensurable surds");
    return Quad(a_ * o.c_ + o.a_ * c_, b_ * o.c_ + o.b_ * c_, c_ * o.c_, d_);
}

Quad Quad::mul(const Quad& o) const {
    if (d_ != o.d_) throw kind_error("incommensurable surds");
    return Quad(a_ * o.a_ + b_ * o.b_ * d_, a_ * o.b_ + b_ * o.a_, c_ * o.c_, d_);
}

Quad Quad::reciprocal() const {
    // c/(a + b sqrt d) = c(a - b sqrt d)/(a^2 - b^2 d)
    Int den = a_ * a_ - b_ * b_ * d_;  // nonzero: the value is irrational
    return Quad(a_ * c_, -b_ * c_, den, d_);
}

std::string rat_str(const Rat& q) {
    std::ostringstream os;
    os << q.get_num();
    if (q.get_den() != 1) os << "/" << q.get_den();
    return os.str();
}

std::string Quad::str() const {
    std::ostringstream os;
    bool wrap = (c_ != 1);
    if (wrap) os << "(";
    if (a_ != 0) os << a_;
    if (b_ == 1)
        os << (a_ != 0 ? "+" : "") << "sqrt(" << d_ << ")";
    else if (b_ == -1)
        os << "-sqrt(" << d_ << ")";
    else {
        if (a_ != 0 && b_ > 0) os << "+";
        os << b_ << "*sqrt(" << d_ << ")";
    }
    if (wrap) os << ")/" << c_;
    return os.str();
}

// ---------------------------------------------------------------------------

OrderedValue OrderedValue::rational(Rat v) {
    v.canonicalize();  // guard against mpq_class(p, q) constructed without reduction
    return OrderedValue(std::move(v));
}

OrderedValue OrderedValue::quadratic(Int a, Int b, Int c, Int d) {
    Quad q(0, 1, 1, 2);  // overwritten below
    auto collapsed = Quad::make(std::move(a), std::move(b), std::move(c), std::move(d), q);
    if (collapsed) return OrderedValue(*collapsed);
    return OrderedValue(std::move(q));
}

ValueKind OrderedValue::kind() const {
    switch (payload_.index()) {
        case 0: return ValueKind::Integer;
        case 1: return ValueKind::LexPair;
        case 2: return ValueKind::Rational;
        default: return ValueKind::Quadratic;
    }
}

const Int& OrderedValue::as_int() const {
    if (kind() != ValueKind::Integer) throw kind_error("not an integer value");
    return std::get<Int>(payload_);
}

const LexPair& OrderedValue::as_lex() const {
    if (kind() != ValueKind::LexPair) throw kind_error("not a lex pair value");
    return std::get<LexPair>(payload_);
}

const Rat& OrderedValue::as_rat() const {
    if (kind() != ValueKind::Rational) throw kind_error("not a rational value");
    return std::get<Rat>(payload_);
}

const Quad& OrderedValue::as_quad() const {
    if (kind() != ValueKind::Quadratic) throw kind_error("not a quadratic value");
    return std::get<Quad>(payload_);
}

Rat OrderedValue::to_rat() const {
    switch (kind()) {
        case ValueKind::Integer: return Rat(std::get<Int>(payload_));
        case ValueKind::Rational: return std::get<Rat>(payload_);
        default: throw kind_error("value has no rational view");
    }
}

namespace {

// x + sign*y over the scalar tower Integer < Rational < Quadratic.
OrderedValue scalar_combine(const OrderedValue& x, const OrderedValue& y, int sign) {
    ValueKind kx = x.kind(), ky = y.kind();
    if (kx == ValueKind::Quadratic && ky == ValueKind::Quadratic) {
        const Quad& a = x.as_quad();
        const Quad& b = y.as_quad();
        if (a.d() != b.d()) throw kind_error("incommensurable surds");
        Int nb = sign > 0 ? Int(b.b()) : Int(-b.b());
        Int na = sign > 0 ? Int(b.a()) : Int(-b.a());
        return OrderedValue::quadratic(a.a() * b.c() + na * a.c(),
                                       a.b() * b.c() + nb * a.c(),
                                       a.c() * b.c(), a.d());
    }
    if (kx == ValueKind::Quadratic || ky == ValueKind::Quadratic) {
        const Quad& q = (kx == ValueKind::Quadratic) ? x.as_quad() : y.as_quad();
        Rat r = (kx == ValueKind::Quadratic) ? y.to_rat() : x.to_rat();
        // quad + sign*rat, or rat + sign*quad
        Int qa = q.a(), qb = q.b();
        if (kx != ValueKind::Quadratic && sign < 0) {
            qa = -qa;
            qb = -qb;
        }
        Rat rr = (kx == ValueKind::Quadratic && sign < 0) ? Rat(-r) : r;
        const Int& p = rr.get_num();
        const Int& s = rr.get_den();
        return OrderedValue::quadratic(qa * s + p * q.c(), qb * s, q.c() * s, q.d());
    }
    if (kx == ValueKind::Rational || ky == ValueKind::Rational) {
        Rat r = x.to_rat();
        Rat s = y.to_rat();
        return OrderedValue::rational(sign > 0 ? Rat(r + s) : Rat(r - s));
    }
    const Int& a = x.as_int();
    const Int& b = y.as_int();
    return OrderedValue::integer(sign > 0 ? Int(a + b) : Int(a - b));
}

} // namespace

OrderedValue OrderedValue::operator+(const OrderedValue& o) const {
    if (kind() == ValueKind::LexPair || o.kind() == ValueKind::LexPair) {
        if (kind() != o.kind()) throw kind_error("cannot mix lex pairs with scalars");
        const LexPair& a = as_lex();
        const LexPair& b = o.as_lex();
        return OrderedValue::lex(a.first + b.first, a.second + b.second);
    }
    return scalar_combine(*this, o, +1);
}

OrderedValue OrderedValue::operator-(const OrderedValue& o) const {
    if (kind() == ValueKind::LexPair || o.kind() == ValueKind::LexPair) {
        if (kind() != o.kind()) throw kind_error("cannot mix lex pairs with scalars");
        const LexPair& a = as_lex();
        const LexPair& b = o.as_lex();
        return OrderedValue::lex(a.first - b.first, a.second - b.second);
    }
    return scalar_combine(*this, o, -1);
}

OrderedValue OrderedValue::operator-() const {
    switch (kind()) {
        case ValueKind::Integer: return integer(-as_int());
        case ValueKind::LexPair: return lex(-as_lex().first, -as_lex().second);
        case ValueKind::Rational: return rational(-as_rat());
        default: {
            const Quad& q = as_quad();
            return quadratic(-q.a(), -q.b(), q.c(), q.d());
        }
    }
}

OrderedValue OrderedValue::mul_int(const Int& n) const {
    switch (kind()) {
        case ValueKind::Integer: return integer(as_int() * n);
        case ValueKind::LexPair: return lex(as_lex().first * n, as_lex().second * n);
        case ValueKind::Rational: return rational(Rat(as_rat() * Rat(n)));
        default: {
            if (n == 0) return integer(0);
            const Quad& q = as_quad();
            return quadratic(q.a() * n, q.b() * n, q.c(), q.d());
        }
    }
}

OrderedValue OrderedValue::mul_nat(const Int& n) const {
    if (n < 0) throw math_error("natural multiplier must be nonnegative");
    return mul_int(n);
}

int OrderedValue::sign() const {
    switch (kind()) {
        case ValueKind::Integer: return sgn(as_int());
        case ValueKind::Rational: return sgn(as_rat());
        case ValueKind::Quadratic: return as_quad().sign();
        default: {
            const LexPair& p = as_lex();
            int s = sgn(p.first);
            return s != 0 ? s : sgn(p.second);
        }
    }
}

std::strong_ordering OrderedValue::operator<=>(const OrderedValue& o) const {
    int s = (*this - o).sign();
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string OrderedValue::str() const {
    switch (kind()) {
        case ValueKind::Integer: return as_int().get_str();
        case ValueKind::Rational: return rat_str(as_rat());
        case ValueKind::Quadratic: return as_quad().str();
        default: {
            const LexPair& p = as_lex();
            return "(" + p.first.get_str() + "," + p.second.get_str() + ")";
        }
    }
}

OrderedValue parse_value(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw parse_error("empty value");
    try {
        if (s.front() == '(') {
            if (s.back() != ')') throw parse_error("unbalanced parentheses in pair");
            auto comma = s.find(',');
            if (comma == std::string::npos) throw parse_error("pair needs a comma");
            Int a(s.substr(1, comma - 1));
            Int b(s.substr(comma + 1, s.size() - comma - 2));
            return OrderedValue::lex(a, b);
        }
        auto slash = s.find('/');
        if (slash != std::string::npos) {
            Int num(s.substr(0, slash));
            Int den(s.substr(slash + 1));
            return OrderedValue::rational(make_rat(num, den));
        }
        return OrderedValue::integer(Int(s));
    } catch (const std::invalid_argument&) {
        throw parse_error("malformed number: " + text);
    }
}

} // namespace seminf
