#pragma once

#include <span>
#include <vector>

#include "lrs/domain.hpp"

namespace lrs {

// Dense polynomial over the active domain, coefficients ascending by degree.
// Canonical form: the last stored coefficient is nonzero; the zero polynomial
// stores nothing and has degree() == -1.
class Poly {
public:
    Poly() = default;

    static Poly constant(const Domain& dom, const Value& c);
    static Poly one(const Domain& dom) { return constant(dom, dom.one()); }
    static Poly monomial(const Domain& dom, int degree);  // x^degree
    static Poly from_coeffs(const Domain& dom, std::vector<Value> coeffs);
    // Trims and wraps coefficients already known to share one domain.
    static Poly from_raw(std::vector<Value> coeffs);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    std::span<const Value> coeffs() const { return coeffs_; }
    const Value& operator[](std::size_t i) const { return coeffs_[i]; }
    Value coeff_or_zero(const Domain& dom, long i) const;

    friend bool operator==(const Poly&, const Poly&) = default;

private:
    explicit Poly(std::vector<Value> c) : coeffs_(std::move(c)) {}
    static std::vector<Value> trimmed(std::vector<Value> c);

    std::vector<Value> coeffs_;
};

// Finite sequence s_1,...,s_n over a domain; reads outside 1..n are zero.
class Seq {
public:
    explicit Seq(Domain dom) : dom_(std::move(dom)) {}
    Seq(Domain dom, std::vector<Value> elems);

    const Domain& domain() const { return dom_; }
    int size() const { return static_cast<int>(elems_.size()); }
    const Value& at(int i) const;      // 1-based, 1 <= i <= n
    Value at_or_zero(long i) const;    // 0 for i <= 0 or i > n
    Seq prefix(int j) const;
    std::span<const Value> elems() const { return elems_; }

private:
    Domain dom_;
    std::vector<Value> elems_;
};

Poly poly_scale(const Domain& dom, const Value& c, const Poly& f);
Poly poly_shift(const Domain& dom, const Poly& f, int e);  // x^e * f, e >= 0
Poly poly_add(const Domain& dom, const Poly& f, const Poly& g);
Poly poly_sub(const Domain& dom, const Poly& f, const Poly& g);
Poly poly_neg(const Domain& dom, const Poly& f);
Poly poly_mul(const Domain& dom, const Poly& f, const Poly& g);

// Primitive part over the integers (content divided out, signs kept);
// monic normalization over a field. Zero maps to zero.
Poly primitive_part(const Domain& dom, const Poly& f);

// f*(x) = x^deg(f) f(1/x); the reciprocal of 0 is 0. Re-canonicalized, so a
// trailing power of x in f is dropped from f**.
Poly reciprocal(const Poly& f);

// Coefficient of x^k in the Laurent product f(x) * (s_1 x^-1 + ... + s_n x^-n).
Value laurent_coeff(const Domain& dom, const Poly& f, const Seq& s, long k);

// True iff f == 0, or d = deg(f) >= 0 and (f*s_)_{d-j} = 0 for d+1 <= j <= n.
// Every f with deg(f) >= n qualifies vacuously.
bool is_annihilator(const Domain& dom, const Poly& f, const Seq& s);

// The part of f * s_ supported on non-negative exponents.
Poly poly_part(const Domain& dom, const Poly& f, const Seq& s);

}  // namespace lrs
