#include "lrs/domain.hpp"

#include <cctype>

#include "lrs/opcount.hpp"

namespace lrs {

namespace {

inline void count_mult() {
    if (auto* c = detail::active_counter()) ++c->mults;
}
inline void count_add() {
    if (auto* c = detail::active_counter()) ++c->adds;
}
inline void count_div() {
    if (auto* c = detail::active_counter()) ++c->divs;
}

bool is_prime_u64(std::uint64_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::uint64_t d = 3; d <= p / d; d += 2) {
        if (p % d == 0) return false;
    }
    return true;
}

inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= p - b ? a - (p - b) : a + b;
}

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    while (e) {
        if (e & 1) r = mul_mod(r, a, p);
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    return r;
}

}  // namespace

Domain Domain::prime_field(std::uint64_t p) {
    if (!is_prime_u64(p))
        throw InputError("prime field modulus must be prime, got " +
                         std::to_string(p));
    return Domain(DomainKind::PrimeField, p);
}

Domain Domain::parse(std::string_view spec) {
    if (spec == "int") return integers();
    if (spec.substr(0, 3) == "gf:") {
        std::string_view digits = spec.substr(3);
        if (digits.empty()) throw InputError("empty prime in domain spec");
        std::uint64_t p = 0;
        for (char ch : digits) {
            if (!std::isdigit(static_cast<unsigned char>(ch)))
                throw InputError("bad domain spec: " + std::string(spec));
            std::uint64_t next = p * 10 + static_cast<std::uint64_t>(ch - '0');
            if (next / 10 != p) throw InputError("prime does not fit in 64 bits");
            p = next;
        }
        return prime_field(p);
    }
    throw InputError("unknown domain spec: " + std::string(spec) +
                     " (expected 'int' or 'gf:<p>')");
}

std::uint64_t Domain::modulus() const {
    internal_check(kind_ == DomainKind::PrimeField, "modulus of the integers");
    return p_;
}

std::string Domain::spec() const {
    return kind_ == DomainKind::Integers ? "int" : "gf:" + std::to_string(p_);
}

void Domain::check(const Value& a) const {
    if (!contains(a)) throw InputError("domain mismatch");
}

bool Domain::contains(const Value& a) const {
    if (kind_ == DomainKind::Integers) return a.is_integer_rep();
    return !a.is_integer_rep() && a.fp().p == p_;
}

Value Domain::zero() const {
    if (kind_ == DomainKind::Integers) return Value(mpz_class(0));
    return Value(FpValue{0, p_});
}

Value Domain::one() const {
    if (kind_ == DomainKind::Integers) return Value(mpz_class(1));
    return Value(FpValue{1 % p_, p_});
}

Value Domain::from_int(long v) const {
    if (kind_ == DomainKind::Integers) return Value(mpz_class(v));
    mpz_class r = mpz_class(v) % mpz_class(static_cast<unsigned long>(p_));
    if (r < 0) r += mpz_class(static_cast<unsigned long>(p_));
    return Value(FpValue{r.get_ui(), p_});
}

Value Domain::parse_value(std::string_view text) const {
    if (text.empty()) throw InputError("empty element");
    std::size_t i = text[0] == '-' || text[0] == '+' ? 1 : 0;
    if (i == text.size()) throw InputError("bad element: " + std::string(text));
    for (std::size_t k = i; k < text.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(text[k])))
            throw InputError("bad element: " + std::string(text));
    }
    mpz_class z(std::string(text), 10);
    if (kind_ == DomainKind::Integers) return Value(std::move(z));
    mpz_class m(static_cast<unsigned long>(p_));
    mpz_class r = z % m;
    if (r < 0) r += m;
    return Value(FpValue{r.get_ui(), p_});
}

std::string Domain::to_string(const Value& a) const {
    check(a);
    if (kind_ == DomainKind::Integers) return a.integer().get_str();
    return std::to_string(a.fp().v);
}

Value Domain::add(const Value& a, const Value& b) const {
    check(a);
    check(b);
    count_add();
    if (kind_ == DomainKind::Integers) return Value(mpz_class(a.integer() + b.integer()));
    return Value(FpValue{add_mod(a.fp().v, b.fp().v, p_), p_});
}

Value Domain::sub(const Value& a, const Value& b) const {
    check(a);
    check(b);
    count_add();
    if (kind_ == DomainKind::Integers) return Value(mpz_class(a.integer() - b.integer()));
    std::uint64_t bv = b.fp().v;
    return Value(FpValue{add_mod(a.fp().v, bv == 0 ? 0 : p_ - bv, p_), p_});
}

Value Domain::mul(const Value& a, const Value& b) const {
    check(a);
    check(b);
    count_mult();
    if (kind_ == DomainKind::Integers) return Value(mpz_class(a.integer() * b.integer()));
    return Value(FpValue{mul_mod(a.fp().v, b.fp().v, p_), p_});
}

Value Domain::neg(const Value& a) const {
    check(a);
    if (kind_ == DomainKind::Integers) return Value(mpz_class(-a.integer()));
    std::uint64_t v = a.fp().v;
    return Value(FpValue{v == 0 ? 0 : p_ - v, p_});
}

Value Domain::inv(const Value& a) const {
    check(a);
    if (kind_ != DomainKind::PrimeField)
        throw InputError("inversion is unsupported over the integers");
    if (a.is_zero()) throw InputError("inversion of zero");
    count_div();
    return Value(FpValue{pow_mod(a.fp().v, p_ - 2, p_), p_});
}

bool Domain::is_zero(const Value& a) const {
    check(a);
    return a.is_zero();
}

bool Domain::is_one(const Value& a) const {
    check(a);
    if (kind_ == DomainKind::Integers) return a.integer() == 1;
    return a.fp().v == 1 % p_;
}

bool Domain::eq(const Value& a, const Value& b) const {
    check(a);
    check(b);
    return a == b;
}

}  // namespace lrs
