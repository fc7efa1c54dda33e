#include "lrs/oracle.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace lrs {

namespace {

constexpr std::uint64_t kSearchBudget = 10'000'000;

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b,
                             std::uint64_t p) {
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

// Gaussian elimination over GF(p); returns a solution of A x = b with free
// variables set to zero, or nothing if inconsistent.
std::optional<std::vector<std::uint64_t>> solve_fp(
    std::uint64_t p, std::vector<std::vector<std::uint64_t>> a,
    std::vector<std::uint64_t> b) {
    std::size_t rows = a.size();
    std::size_t cols = rows ? a[0].size() : 0;
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pr = r;
        while (pr < rows && a[pr][c] == 0) ++pr;
        if (pr == rows) continue;
        std::swap(a[pr], a[r]);
        std::swap(b[pr], b[r]);
        std::uint64_t inv = pow_mod(a[r][c], p - 2, p);
        for (std::size_t k = c; k < cols; ++k) a[r][k] = mul_mod(a[r][k], inv, p);
        b[r] = mul_mod(b[r], inv, p);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            std::uint64_t f = a[i][c];
            for (std::size_t k = c; k < cols; ++k) {
                std::uint64_t t = mul_mod(f, a[r][k], p);
                a[i][k] = (a[i][k] + p - t) % p;
            }
            std::uint64_t t = mul_mod(f, b[r], p);
            b[i] = (b[i] + p - t) % p;
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (b[i] != 0) return std::nullopt;
    std::vector<std::uint64_t> x(cols, 0);
    for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
    return x;
}

// Exact elimination over the rationals, same contract as solve_fp.
std::optional<std::vector<mpq_class>> solve_q(
    std::vector<std::vector<mpq_class>> a, std::vector<mpq_class> b) {
    std::size_t rows = a.size();
    std::size_t cols = rows ? a[0].size() : 0;
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pr = r;
        while (pr < rows && a[pr][c] == 0) ++pr;
        if (pr == rows) continue;
        std::swap(a[pr], a[r]);
        std::swap(b[pr], b[r]);
        mpq_class inv = 1 / a[r][c];
        for (std::size_t k = c; k < cols; ++k) a[r][k] *= inv;
        b[r] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            mpq_class f = a[i][c];
            for (std::size_t k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
            b[i] -= f * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (b[i] != 0) return std::nullopt;
    std::vector<mpq_class> x(cols, mpq_class(0));
    for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
    return x;
}

// Monic annihilator of degree exactly d exists iff the pinned system
// sum_{k<d} f_k s_{j-d+k} = -s_j (d+1 <= j <= n) is consistent.
std::optional<Poly> monic_annihilator_field(const Seq& s, int d) {
    const Domain& dom = s.domain();
    std::uint64_t p = dom.modulus();
    std::size_t rows = static_cast<std::size_t>(s.size() - d);
    std::vector<std::vector<std::uint64_t>> a(
        rows, std::vector<std::uint64_t>(static_cast<std::size_t>(d), 0));
    std::vector<std::uint64_t> b(rows, 0);
    for (int j = d + 1; j <= s.size(); ++j) {
        std::size_t row = static_cast<std::size_t>(j - d - 1);
        for (int k = 0; k < d; ++k)
            a[row][static_cast<std::size_t>(k)] = s.at_or_zero(j - d + k).fp().v;
        b[row] = (p - s.at_or_zero(j).fp().v) % p;
    }
    auto x = solve_fp(p, std::move(a), std::move(b));
    if (!x) return std::nullopt;
    std::vector<Value> coeffs;
    coeffs.reserve(static_cast<std::size_t>(d) + 1);
    for (int k = 0; k < d; ++k)
        coeffs.push_back(Value(FpValue{(*x)[static_cast<std::size_t>(k)], p}));
    coeffs.push_back(dom.one());
    return Poly::from_coeffs(dom, std::move(coeffs));
}

std::optional<Poly> monic_annihilator_int(const Seq& s, int d) {
    const Domain& dom = s.domain();
    std::size_t rows = static_cast<std::size_t>(s.size() - d);
    std::vector<std::vector<mpq_class>> a(
        rows, std::vector<mpq_class>(static_cast<std::size_t>(d), mpq_class(0)));
    std::vector<mpq_class> b(rows, mpq_class(0));
    for (int j = d + 1; j <= s.size(); ++j) {
        std::size_t row = static_cast<std::size_t>(j - d - 1);
        for (int k = 0; k < d; ++k)
            a[row][static_cast<std::size_t>(k)] =
                mpq_class(s.at_or_zero(j - d + k).integer());
        b[row] = mpq_class(-s.at_or_zero(j).integer());
    }
    auto x = solve_q(std::move(a), std::move(b));
    if (!x) return std::nullopt;
    // scale to integers and divide out the content
    mpz_class lcm_den(1);
    for (const mpq_class& v : *x) {
        mpz_class l;
        mpz_lcm(l.get_mpz_t(), lcm_den.get_mpz_t(), v.get_den().get_mpz_t());
        lcm_den = l;
    }
    std::vector<mpz_class> ints;
    ints.reserve(static_cast<std::size_t>(d) + 1);
    for (const mpq_class& v : *x) {
        mpq_class scaled = v * mpq_class(lcm_den);
        ints.push_back(scaled.get_num());
    }
    ints.push_back(lcm_den);
    mpz_class content(0);
    for (const mpz_class& v : ints) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        content = g;
    }
    std::vector<Value> coeffs;
    coeffs.reserve(ints.size());
    for (const mpz_class& v : ints) coeffs.push_back(Value(mpz_class(v / content)));
    return Poly::from_coeffs(dom, std::move(coeffs));
}

std::optional<Poly> exhaustive_annihilator(const Seq& s, int d) {
    const Domain& dom = s.domain();
    std::uint64_t q = dom.modulus();
    std::uint64_t lower = 1;  // q^d candidates below the leading coefficient
    for (int i = 0; i < d; ++i) {
        lower *= q;
        if (lower > kSearchBudget / q)
            throw InputError("exhaustive search budget exceeded");
    }
    if (lower * q > kSearchBudget)
        throw InputError("exhaustive search budget exceeded");
    for (std::uint64_t lead = 1; lead < q; ++lead) {
        for (std::uint64_t t = 0; t < lower; ++t) {
            std::vector<Value> coeffs;
            coeffs.reserve(static_cast<std::size_t>(d) + 1);
            std::uint64_t rem = t;
            for (int k = 0; k < d; ++k) {
                coeffs.push_back(Value(FpValue{rem % q, q}));
                rem /= q;
            }
            coeffs.push_back(Value(FpValue{lead, q}));
            Poly f = Poly::from_coeffs(dom, std::move(coeffs));
            if (is_annihilator(dom, f, s)) return f;
        }
    }
    return std::nullopt;
}

}  // namespace

OracleResult brute_min_poly(const Seq& s, OracleMethod method) {
    const Domain& dom = s.domain();
    if (method == OracleMethod::ExhaustiveSearch && !dom.is_field())
        throw InputError("exhaustive search requires a field domain");
    for (int d = 0; d <= s.size(); ++d) {
        std::optional<Poly> witness;
        if (method == OracleMethod::ExhaustiveSearch)
            witness = exhaustive_annihilator(s, d);
        else if (dom.is_field())
            witness = monic_annihilator_field(s, d);
        else
            witness = monic_annihilator_int(s, d);
        if (witness) {
            internal_check(is_annihilator(dom, *witness, s),
                           "oracle witness fails to annihilate");
            return OracleResult{d, std::move(*witness), method};
        }
    }
    throw InternalError("no annihilator found up to degree n");
}

}  // namespace lrs
