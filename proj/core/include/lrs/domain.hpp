#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace lrs {

// Rejected input or an operation the active domain does not support.
// The CLI maps this to exit status 2.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Broken internal invariant; never expected. The CLI maps this to exit 1.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline void internal_check(bool ok, const char* what) {
    if (!ok) throw InternalError(what);
}

// Canonical residue in GF(p), 0 <= v < p.
struct FpValue {
    std::uint64_t v = 0;
    std::uint64_t p = 0;
    friend bool operator==(const FpValue&, const FpValue&) = default;
};

// Exact element of the active domain: an arbitrary-precision integer or a
// prime-field residue. Immutable once constructed.
class Value {
public:
    Value() : rep_(mpz_class(0)) {}
    explicit Value(mpz_class z) : rep_(std::move(z)) {}
    Value(FpValue f) : rep_(f) {}

    bool is_integer_rep() const { return std::holds_alternative<mpz_class>(rep_); }
    const mpz_class& integer() const { return std::get<mpz_class>(rep_); }
    const FpValue& fp() const { return std::get<FpValue>(rep_); }

    bool is_zero() const {
        if (is_integer_rep()) return sgn(integer()) == 0;
        return fp().v == 0;
    }

    friend bool operator==(const Value&, const Value&) = default;

private:
    std::variant<mpz_class, FpValue> rep_;
};

enum class DomainKind { Integers, PrimeField };

// A commutative unital integral domain with decidable equality: the ring of
// integers or a prime field GF(p). All arithmetic is exact.
class Domain {
public:
    static Domain integers() { return Domain(DomainKind::Integers, 0); }
    static Domain prime_field(std::uint64_t p);  // p must be prime (trial division)
    static Domain parse(std::string_view spec);  // "int" or "gf:<p>"

    DomainKind kind() const { return kind_; }
    bool is_field() const { return kind_ == DomainKind::PrimeField; }
    std::uint64_t modulus() const;
    std::string spec() const;

    Value zero() const;
    Value one() const;
    Value from_int(long v) const;
    Value parse_value(std::string_view text) const;  // decimal, sign allowed
    std::string to_string(const Value& a) const;

    Value add(const Value& a, const Value& b) const;
    Value sub(const Value& a, const Value& b) const;
    Value mul(const Value& a, const Value& b) const;
    Value neg(const Value& a) const;
    Value inv(const Value& a) const;  // fields only, a != 0

    bool is_zero(const Value& a) const;
    bool is_one(const Value& a) const;
    bool eq(const Value& a, const Value& b) const;
    bool contains(const Value& a) const;

    friend bool operator==(const Domain&, const Domain&) = default;

private:
    Domain(DomainKind k, std::uint64_t p) : kind_(k), p_(p) {}
    void check(const Value& a) const;  // throws InputError on domain mismatch

    DomainKind kind_;
    std::uint64_t p_;
};

}  // namespace lrs
