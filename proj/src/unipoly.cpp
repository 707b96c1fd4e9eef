#include "seminf/unipoly.hpp"

#include <algorithm>

namespace seminf {

UniPoly::UniPoly(Int constant) {
    if (constant != 0) c.push_back(std::move(constant));
}

const Int& UniPoly::lc() const {
    if (c.empty()) throw math_error("zero polynomial has no leading coefficient");
    return c.back();
}

void UniPoly::normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    UniPoly r;
    r.c.resize(std::max(c.size(), o.c.size()), Int(0));
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i] += c[i];
    for (std::size_t i = 0; i < o.c.size(); ++i) r.c[i] += o.c[i];
    r.normalize();
    return r;
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
    UniPoly r;
    r.c.resize(std::max(c.size(), o.c.size()), Int(0));
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i] += c[i];
    for (std::size_t i = 0; i < o.c.size(); ++i) r.c[i] -= o.c[i];
    r.normalize();
    return r;
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    UniPoly r;
    r.c.assign(c.size() + o.c.size() - 1, Int(0));
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        for (std::size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
    }
    r.normalize();
    return r;
}

UniPoly UniPoly::mul_int(const Int& k) const {
    if (k == 0) return UniPoly();
    UniPoly r = *this;
    for (Int& x : r.c) x *= k;
    return r;
}

Int UniPoly::content() const {
    Int g(0);
    for (const Int& x : c) g = gcd(g, x);
    return g;
}

UniPoly UniPoly::primitive_part() const {
    if (is_zero()) return UniPoly();
    Int g = content();
    if (c.back() < 0) g = -g;  // normalize the sign of the leading coefficient
    UniPoly r = *this;
    for (Int& x : r.c) {
        if (x % g != 0) throw math_error("content division failed");
        x /= g;
    }
    return r;
}

UniPoly UniPoly::divexact(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw math_error("division by the zero polynomial");
    if (a.is_zero()) return UniPoly();
    if (a.degree() < b.degree()) throw math_error("inexact polynomial division");
    UniPoly rem = a;
    UniPoly q;
    q.c.assign(static_cast<std::size_t>(a.degree() - b.degree()) + 1, Int(0));
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        if (rem.lc() % b.lc() != 0) throw math_error("inexact polynomial division");
        Int f = rem.lc() / b.lc();
        std::size_t shift = static_cast<std::size_t>(rem.degree() - b.degree());
        q.c[shift] = f;
        for (std::size_t i = 0; i < b.c.size(); ++i) rem.c[shift + i] -= f * b.c[i];
        rem.normalize();
    }
    if (!rem.is_zero()) throw math_error("inexact polynomial division");
    q.normalize();
    return q;
}

UniPoly unipoly_gcd(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    Int cont = gcd(a.content(), b.content());
    UniPoly f = a.primitive_part(), g = b.primitive_part();
    if (f.degree() < g.degree()) std::swap(f, g);
    while (!g.is_zero()) {
        // pseudo-remainder of f by g, degree drops each round
        long d = f.degree() - g.degree();
        UniPoly r = f.mul_int([&] {
            Int p(1);
            for (long i = 0; i <= d; ++i) p *= g.lc();
            return p;
        }());
        while (!r.is_zero() && r.degree() >= g.degree()) {
            Int fac = r.lc() / g.lc();
            std::size_t shift = static_cast<std::size_t>(r.degree() - g.degree());
            for (std::size_t i = 0; i < g.c.size(); ++i) r.c[shift + i] -= fac * g.c[i];
            r.normalize();
        }
        f = g;
        g = r.is_zero() ? UniPoly() : r.primitive_part();
    }
    return f.primitive_part().mul_int(cont);
}

// ---------------------------------------------------------------------------

YPoly to_ypoly(const BivariatePolynomial& f) {
    Int L = f.denominator_lcm();
    YPoly out(static_cast<std::size_t>(std::max(0L, f.degree_y())) + 1);
    for (const auto& [e, c] : f.terms()) {
        Rat scaled = c * Rat(L);
        auto& coeff = out[static_cast<std::size_t>(e.second)];
        if (coeff.c.size() <= static_cast<std::size_t>(e.first))
            coeff.c.resize(static_cast<std::size_t>(e.first) + 1, Int(0));
        coeff.c[static_cast<std::size_t>(e.first)] = scaled.get_num();
    }
    for (auto& u : out) u.normalize();
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    return out;
}

long ydeg(const YPoly& f) { return static_cast<long>(f.size()) - 1; }

namespace {

YPoly ymul_scalar(const YPoly& f, const UniPoly& s) {
    YPoly r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) r[i] = f[i] * s;
    while (!r.empty() && r.back().is_zero()) r.pop_back();
    return r;
}

YPoly ydiv_scalar_exact(const YPoly& f, const UniPoly& s) {
    YPoly r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i)
        r[i] = f[i].is_zero() ? UniPoly() : UniPoly::divexact(f[i], s);
    while (!r.empty() && r.back().is_zero()) r.pop_back();
    return r;
}

// prem(A, B): lc(B)^(deg A - deg B + 1) * A reduced modulo B.
YPoly yprem(YPoly A, const YPoly& B) {
    long db = ydeg(B);
    const UniPoly& lb = B.back();
    long d = ydeg(A) - db;
    // premultiply once; reduce top coefficients repeatedly
    UniPoly scale(Int(1));
    for (long i = 0; i <= d; ++i) scale = scale * lb;
    A = ymul_scalar(A, scale);
    while (ydeg(A) >= db && !A.empty()) {
        long shift = ydeg(A) - db;
        UniPoly f = UniPoly::divexact(A.back(), lb);
        for (long i = 0; i <= db; ++i) {
            auto idx = static_cast<std::size_t>(shift + i);
            A[idx] = A[idx] - f * B[static_cast<std::size_t>(i)];
        }
        while (!A.empty() && A.back().is_zero()) A.pop_back();
    }
    return A;
}

UniPoly unipow(const UniPoly& b, long e) {
    UniPoly acc(Int(1));
    for (long i = 0; i < e; ++i) acc = acc * b;
    return acc;
}

} // namespace

UniPoly resultant_y(YPoly A, YPoly B) {
    while (!A.empty() && A.back().is_zero()) A.pop_back();
    while (!B.empty() && B.back().is_zero()) B.pop_back();
    if (A.empty() || B.empty()) throw math_error("resultant of the zero polynomial");

    int sign = 1;
    if (ydeg(A) < ydeg(B)) {
        if ((ydeg(A) & 1) && (ydeg(B) & 1)) sign = -sign;
        std::swap(A, B);
    }
    if (ydeg(B) == 0) {
        // Res(A, b0) = b0^(deg A)
        UniPoly r = unipow(B[0], ydeg(A));
        return sign < 0 ? r.mul_int(Int(-1)) : r;
    }

    UniPoly g(Int(1)), h(Int(1));
    while (true) {
        long da = ydeg(A), db = ydeg(B);
        long d = da - db;
        if ((da & 1) && (db & 1)) sign = -sign;
        YPoly R = yprem(A, B);
        A = std::move(B);
        UniPoly divisor = g * unipow(h, d);
        B = R.empty() ? YPoly{} : ydiv_scalar_exact(R, divisor);
        if (B.empty()) return UniPoly();  // common factor of positive y-degree
        g = A.back();
        if (d > 0) h = UniPoly::divexact(unipow(g, d), unipow(h, d - 1));
        if (ydeg(B) == 0) break;
    }
    // final step: res = B0^(deg A) / h^(deg A - 1)
    long da = ydeg(A);
    UniPoly res = UniPoly::divexact(unipow(B[0], da), unipow(h, da - 1));
    return sign < 0 ? res.mul_int(Int(-1)) : res;
}

bool have_common_factor(const BivariatePolynomial& f, const BivariatePolynomial& g) {
    if (f.is_zero() || g.is_zero()) throw math_error("zero polynomial");
    YPoly F = to_ypoly(f), G = to_ypoly(g);
    // content in x
    UniPoly cf, cg;
    for (const auto& u : F) cf = unipoly_gcd(cf, u);
    for (const auto& u : G) cg = unipoly_gcd(cg, u);
    if (unipoly_gcd(cf, cg).degree() > 0) return true;
    if (ydeg(F) == 0 || ydeg(G) == 0) return false;
    UniPoly res = resultant_y(F, G);
    return res.is_zero();
}

} // namespace seminf
