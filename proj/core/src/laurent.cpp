#include "lrs/laurent.hpp"

#include <algorithm>

namespace lrs {

std::vector<Value> Poly::trimmed(std::vector<Value> c) {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
    return c;
}

Poly Poly::constant(const Domain& dom, const Value& c) {
    if (!dom.contains(c)) throw InputError("domain mismatch");
    if (c.is_zero()) return Poly();
    return Poly(std::vector<Value>{c});
}

Poly Poly::monomial(const Domain& dom, int degree) {
    internal_check(degree >= 0, "monomial degree must be non-negative");
    std::vector<Value> c(static_cast<std::size_t>(degree) + 1, dom.zero());
    c.back() = dom.one();
    return Poly(std::move(c));
}

Poly Poly::from_coeffs(const Domain& dom, std::vector<Value> coeffs) {
    for (const Value& c : coeffs)
        if (!dom.contains(c)) throw InputError("domain mismatch");
    return Poly(trimmed(std::move(coeffs)));
}

Poly Poly::from_raw(std::vector<Value> coeffs) {
    return Poly(trimmed(std::move(coeffs)));
}

Value Poly::coeff_or_zero(const Domain& dom, long i) const {
    if (i < 0 || i >= static_cast<long>(coeffs_.size())) return dom.zero();
    return coeffs_[static_cast<std::size_t>(i)];
}

Seq::Seq(Domain dom, std::vector<Value> elems)
    : dom_(std::move(dom)), elems_(std::move(elems)) {
    for (const Value& v : elems_)
        if (!dom_.contains(v)) throw InputError("domain mismatch");
}

const Value& Seq::at(int i) const {
    internal_check(i >= 1 && i <= size(), "sequence index out of range");
    return elems_[static_cast<std::size_t>(i - 1)];
}

Value Seq::at_or_zero(long i) const {
    if (i < 1 || i > size()) return dom_.zero();
    return elems_[static_cast<std::size_t>(i - 1)];
}

Seq Seq::prefix(int j) const {
    internal_check(j >= 0 && j <= size(), "prefix length out of range");
    return Seq(dom_, std::vector<Value>(elems_.begin(), elems_.begin() + j));
}

Poly poly_scale(const Domain& dom, const Value& c, const Poly& f) {
    std::vector<Value> out;
    out.reserve(f.coeffs().size());
    for (const Value& a : f.coeffs()) out.push_back(dom.mul(c, a));
    return Poly::from_raw(std::move(out));
}

Poly poly_shift(const Domain& dom, const Poly& f, int e) {
    internal_check(e >= 0, "negative shift");
    if (f.is_zero() || e == 0) return f;
    std::vector<Value> out;
    out.reserve(f.coeffs().size() + static_cast<std::size_t>(e));
    for (int i = 0; i < e; ++i) out.push_back(dom.zero());
    for (const Value& a : f.coeffs()) out.push_back(a);
    return Poly::from_raw(std::move(out));
}

Poly poly_add(const Domain& dom, const Poly& f, const Poly& g) {
    std::size_t n = std::max(f.coeffs().size(), g.coeffs().size());
    std::vector<Value> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Value a = i < f.coeffs().size() ? f[i] : dom.zero();
        Value b = i < g.coeffs().size() ? g[i] : dom.zero();
        out.push_back(dom.add(a, b));
    }
    return Poly::from_raw(std::move(out));
}

Poly poly_sub(const Domain& dom, const Poly& f, const Poly& g) {
    std::size_t n = std::max(f.coeffs().size(), g.coeffs().size());
    std::vector<Value> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Value a = i < f.coeffs().size() ? f[i] : dom.zero();
        Value b = i < g.coeffs().size() ? g[i] : dom.zero();
        out.push_back(dom.sub(a, b));
    }
    return Poly::from_raw(std::move(out));
}

Poly poly_neg(const Domain& dom, const Poly& f) {
    std::vector<Value> out;
    out.reserve(f.coeffs().size());
    for (const Value& a : f.coeffs()) out.push_back(dom.neg(a));
    return Poly::from_raw(std::move(out));
}

Poly poly_mul(const Domain& dom, const Poly& f, const Poly& g) {
    if (f.is_zero() || g.is_zero()) return Poly();
    std::vector<Value> out(f.coeffs().size() + g.coeffs().size() - 1,
                           dom.zero());
    for (std::size_t i = 0; i < f.coeffs().size(); ++i)
        for (std::size_t k = 0; k < g.coeffs().size(); ++k)
            out[i + k] = dom.add(out[i + k], dom.mul(f[i], g[k]));
    return Poly::from_raw(std::move(out));
}

Poly primitive_part(const Domain& dom, const Poly& f) {
    if (f.is_zero()) return f;
    if (dom.is_field()) return poly_scale(dom, dom.inv(f.coeffs().back()), f);
    mpz_class content(0);
    for (const Value& a : f.coeffs()) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), content.get_mpz_t(), a.integer().get_mpz_t());
        content = g;
    }
    std::vector<Value> out;
    out.reserve(f.coeffs().size());
    for (const Value& a : f.coeffs())
        out.push_back(Value(mpz_class(a.integer() / content)));
    return Poly::from_raw(std::move(out));
}

Poly reciprocal(const Poly& f) {
    std::vector<Value> rev(f.coeffs().rbegin(), f.coeffs().rend());
    return Poly::from_raw(std::move(rev));
}

Value laurent_coeff(const Domain& dom, const Poly& f, const Seq& s, long k) {
    Value acc = dom.zero();
    for (std::size_t i = 0; i < f.coeffs().size(); ++i)
        acc = dom.add(acc,
                      dom.mul(f[i], s.at_or_zero(static_cast<long>(i) - k)));
    return acc;
}

bool is_annihilator(const Domain& dom, const Poly& f, const Seq& s) {
    if (f.is_zero()) return true;
    long d = f.degree();
    for (long j = d + 1; j <= s.size(); ++j)
        if (!laurent_coeff(dom, f, s, d - j).is_zero()) return false;
    return true;
}

Poly poly_part(const Domain& dom, const Poly& f, const Seq& s) {
    if (f.is_zero()) return Poly();
    std::vector<Value> out;
    // (f*s_)_k vanishes for k >= deg(f) since s_ has only negative exponents
    for (long k = 0; k < f.degree(); ++k)
        out.push_back(laurent_coeff(dom, f, s, k));
    return Poly::from_raw(std::move(out));
}

}  // namespace lrs
