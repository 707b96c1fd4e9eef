#include "seminf/contfrac.hpp"

#include <sstream>

namespace seminf {

ContinuedFraction::ContinuedFraction(std::vector<Int> digits, CfTail tail,
                                     std::optional<Quad> surd)
    : digits_(std::move(digits)), tail_(tail), surd_(std::move(surd)) {
    // <inf> with no digits is legitimate: the free-point tail pair divides out
    // to an infinite quotient immediately.
    if (digits_.empty() && tail_ != CfTail::Infinity)
        throw math_error("continued fraction needs at least one digit");
    if (tail_ == CfTail::Surd && !surd_)
        throw math_error("surd tail without a surd");
    if (tail_ != CfTail::Surd && surd_)
        throw math_error("surd given for a non-surd tail");
    if (!digits_.empty() && digits_.front() < 0)
        throw math_error("leading digit must be nonnegative");
    for (std::size_t i = 1; i < digits_.size(); ++i)
        if (digits_[i] <= 0) throw math_error("interior digits must be positive");
    if (tail_ == CfTail::Surd && surd_->sign() <= 0)
        throw math_error("surd tail must be positive");
    // canonical form: <..., a, 1> -> <..., a+1>
    while (tail_ == CfTail::Terminated && digits_.size() >= 2 && digits_.back() == 1) {
        digits_.pop_back();
        digits_.back() += 1;
    }
}

const Quad& ContinuedFraction::surd() const {
    if (!surd_) throw math_error("fraction has no surd tail");
    return *surd_;
}

bool ContinuedFraction::operator==(const ContinuedFraction& o) const {
    if (tail_ != o.tail_ || digits_ != o.digits_) return false;
    if (tail_ == CfTail::Surd) return *surd_ == *o.surd_;
    return true;
}

std::string ContinuedFraction::str() const {
    std::ostringstream os;
    os << "<";
    for (std::size_t i = 0; i < digits_.size(); ++i) {
        os << digits_[i];
        if (i + 1 < digits_.size()) os << (i == 0 ? ";" : ",");
    }
    if (tail_ != CfTail::Terminated) {
        if (!digits_.empty()) os << (digits_.size() > 1 ? "," : ";");
        os << (tail_ == CfTail::Infinity ? "inf" : surd_->str());
    }
    os << ">";
    return os.str();
}

// ---------------------------------------------------------------------------

namespace {

std::optional<DivisionStep> lex_step(const LexPair& m, const LexPair& e) {
    OrderedValue mm = OrderedValue::lex(m.first, m.second);
    OrderedValue ee = OrderedValue::lex(e.first, e.second);
    if (ee.sign() <= 0) throw math_error("division by a non-positive value");
    if (mm.sign() < 0) throw math_error("negative dividend");
    if (e.first == 0) {
        if (m.first > 0) return std::nullopt;  // q*e never reaches m: infinite quotient
        // plain integer division on second coordinates
        Int q = fdiv(m.second, e.second);
        return DivisionStep{q, OrderedValue::lex(0, m.second - q * e.second)};
    }
    Int q = fdiv(m.first, e.first);
    for (int tries = 0; tries < 2; ++tries, q -= 1) {
        if (q < 0) break;
        OrderedValue r = mm - ee.mul_int(q);
        if (r.sign() >= 0 && r < ee) return DivisionStep{q, r};
    }
    throw math_error("lex division failed");  // cannot happen for m >= 0, e > 0
}

bool is_rational_kind(const OrderedValue& v) {
    return v.kind() == ValueKind::Integer || v.kind() == ValueKind::Rational;
}

} // namespace

std::optional<DivisionStep> euclid_step(const OrderedValue& m, const OrderedValue& e) {
    if (m.kind() == ValueKind::LexPair || e.kind() == ValueKind::LexPair) {
        if (m.kind() != e.kind()) throw kind_error("cannot mix lex pairs with scalars");
        return lex_step(m.as_lex(), e.as_lex());
    }
    if (e.sign() <= 0) throw math_error("division by a non-positive value");
    if (m.sign() < 0) throw math_error("negative dividend");
    if (is_rational_kind(m) && is_rational_kind(e)) {
        Rat q = m.to_rat() / e.to_rat();
        Int k = floor_rat(q);
        return DivisionStep{k, m - e.mul_int(k)};
    }
    // at least one quadratic operand: x = m/e, digit = floor(x)
    // remainder = m - floor(x) * e
    OrderedValue diff = m;
    Int k;
    if (m.kind() == ValueKind::Quadratic && is_rational_kind(e)) {
        Quad x = m.as_quad().mul_rat(Rat(1) / e.to_rat());
        k = x.floor();
    } else if (is_rational_kind(m) && e.kind() == ValueKind::Quadratic) {
        // m/e = m * (1/e)
        Quad inv = e.as_quad().reciprocal();
        if (m.to_rat() == 0)
            k = 0;
        else {
            Quad x = inv.mul_rat(m.to_rat());
            k = x.floor();
        }
    } else {
        Quad x = m.as_quad().mul(e.as_quad().reciprocal());
        k = x.floor();
    }
    return DivisionStep{k, m - e.mul_int(k)};
}

namespace {

// Detects the pure-surd stopping form x = n + rho, n a nonnegative integer,
// rho = (b/c) sqrt(d) > 0. Returns n and rho.
std::optional<std::pair<Int, Quad>> surd_stop(const Quad& x) {
    if (x.a() % x.c() != 0) return std::nullopt;
    Int n = x.a() / x.c();
    if (n < 0 || x.b() <= 0) return std::nullopt;
    return std::make_pair(n, Quad(0, x.b(), x.c(), x.d()));
}

void expand_rational(Rat num, Rat den, std::vector<Int>& digits) {
    while (den != 0) {
        Int q = floor_rat(Rat(num / den));
        digits.push_back(q);
        Rat r = num - Rat(q) * den;
        num = den;
        den = r;
    }
}

} // namespace

ContinuedFraction cf_expand(const OrderedValue& numerator,
                            const OrderedValue& denominator,
                            std::size_t digit_budget) {
    if ((numerator.kind() == ValueKind::LexPair) != (denominator.kind() == ValueKind::LexPair))
        throw kind_error("cannot mix lex pairs with scalars");
    if (denominator.sign() <= 0) throw math_error("denominator must be positive");
    if (numerator.sign() < 0) throw math_error("numerator must be nonnegative");

    std::vector<Int> digits;

    if (numerator.kind() == ValueKind::LexPair) {
        OrderedValue m = numerator, e = denominator;
        while (true) {
            auto step = euclid_step(m, e);
            if (!step) return ContinuedFraction(std::move(digits), CfTail::Infinity);
            digits.push_back(step->quotient);
            if (step->remainder.is_zero())
                return ContinuedFraction(std::move(digits), CfTail::Terminated);
            m = e;
            e = step->remainder;
        }
    }

    if (is_rational_kind(numerator) && is_rational_kind(denominator)) {
        expand_rational(numerator.to_rat(), denominator.to_rat(), digits);
        return ContinuedFraction(std::move(digits), CfTail::Terminated);
    }

    // quadratic ratio: iterate complete quotients
    OrderedValue x = [&] {
        if (numerator.kind() == ValueKind::Quadratic && is_rational_kind(denominator)) {
            Quad q = numerator.as_quad().mul_rat(Rat(1) / denominator.to_rat());
            return OrderedValue::quadratic(q.a(), q.b(), q.c(), q.d());
        }
        if (denominator.kind() == ValueKind::Quadratic && is_rational_kind(numerator)) {
            if (numerator.sign() == 0) return OrderedValue::integer(0);
            Quad q = denominator.as_quad().reciprocal().mul_rat(numerator.to_rat());
            return OrderedValue::quadratic(q.a(), q.b(), q.c(), q.d());
        }
        Quad q = numerator.as_quad().mul(denominator.as_quad().reciprocal());
        return OrderedValue::quadratic(q.a(), q.b(), q.c(), q.d());
    }();

    while (true) {
        if (is_rational_kind(x)) {  // expansion became rational: finish exactly
            expand_rational(x.to_rat(), Rat(1), digits);
            return ContinuedFraction(std::move(digits), CfTail::Terminated);
        }
        const Quad& q = x.as_quad();
        if (auto stop = surd_stop(q)) {
            digits.push_back(stop->first);
            return ContinuedFraction(std::move(digits), CfTail::Surd, stop->second);
        }
        if (digits.size() >= digit_budget)
            throw budget_error("continued fraction digit budget exhausted");
        Int a = q.floor();
        digits.push_back(a);
        // x <- 1/(x - a); x - a is a quadratic in (0,1)
        Quad frac = q.add_rat(Rat(-a));
        Quad next = frac.reciprocal();
        x = OrderedValue::quadratic(next.a(), next.b(), next.c(), next.d());
    }
}

std::pair<OrderedValue, OrderedValue> cf_fold(const ContinuedFraction& cf) {
    if (cf.tail() == CfTail::Infinity)
        throw math_error("cannot fold a fraction with an infinite tail");
    const auto& a = cf.digits();
    if (cf.tail() == CfTail::Surd) {
        // innermost complete quotient: a_t + rho
        Quad x = cf.surd().add_rat(Rat(a.back()));
        for (std::size_t i = a.size() - 1; i-- > 0;)
            x = x.reciprocal().add_rat(Rat(a[i]));
        return {OrderedValue::quadratic(x.a(), x.b(), x.c(), x.d()),
                OrderedValue::integer(1)};
    }
    // backward fold with coprime integer pairs: (p, q) <- (a_i p + q, p)
    Int p = a.back(), q = 1;
    for (std::size_t i = a.size() - 1; i-- > 0;) {
        Int np = a[i] * p + q;
        q = p;
        p = np;
    }
    return {OrderedValue::integer(p), OrderedValue::integer(q)};
}

CfRecurrence cf_recurrence(const std::vector<Int>& digits) {
    const long t = static_cast<long>(digits.size());
    if (t < 2) throw math_error("recurrence needs at least two digits");
    for (const Int& d : digits)
        if (d <= 0) throw math_error("recurrence digits must be positive");
    // y_{-1} = (0,1), y_0 = (1,0), y_i = a_{t-i} y_{i-1} + y_{i-2};
    // walk up to y_{t-2}, keeping y_{t-3} behind it.
    std::pair<Int, Int> prev{0, 1}, cur{1, 0};
    for (long i = 1; i <= t - 2; ++i) {
        const Int& a = digits[static_cast<std::size_t>(t - i - 1)];  // a_{t-i}
        std::pair<Int, Int> next{a * cur.first + prev.first, a * cur.second + prev.second};
        prev = cur;
        cur = next;
    }
    return CfRecurrence{cur, prev};
}

std::vector<Int> cf_digits_plain(const OrderedValue& numerator,
                                 const OrderedValue& denominator,
                                 std::size_t count) {
    std::vector<Int> digits;
    OrderedValue m = numerator, e = denominator;
    while (digits.size() < count) {
        if (e.is_zero()) break;
        auto step = euclid_step(m, e);
        if (!step) break;  // lex infinity; caller interprets
        digits.push_back(step->quotient);
        m = e;
        e = step->remainder;
    }
    return digits;
}

} // namespace seminf
