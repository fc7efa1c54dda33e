#pragma once

#include <cstdint>
#include <map>

#include "lrs/bm.hpp"
#include "lrs/opcount.hpp"
#include "lrs/synthesis.hpp"

namespace lrs {

enum class Algo { MinPoly, BM };

// Exact operation counts from an instrumented run. Every stored-coefficient
// product is counted, including products by 0, 1 and -1; monic mode adds one
// division per refresh. monic requires a field domain.
OpCounter count_mults(const Seq& s, const Value& epsilon, Algo algo,
                      bool monic_mode = false);

struct LcSumCheck {
    long long sum = 0;
    long long bound = 0;
    bool tight = false;
};

// sum of L_1..L_n against floor((n+1)^2/4); rejects any excess.
LcSumCheck lc_sum_check(const Seq& s, const Value& epsilon);

// Perfect linear complexity profile. Evaluates all three characterizations
// (profile law, exponent pattern, nonzero odd discrepancies) and rejects any
// disagreement between them.
bool is_plcp(const Seq& s, const Value& epsilon);

struct CountTable {
    std::uint64_t q = 0;
    int n = 0;
    std::map<int, std::uint64_t> counts;  // L_n -> #sequences
};

// Exhaustive census of L_n over GF(q)^n via synthesis; q^n <= 10^7.
// Partitioned across workers (capped by LRS_THREADS); the merge is
// deterministic, so the result is independent of the partitioning.
CountTable enumerate_counts(std::uint64_t q, int n);

// The census closed form consistent with the counting theorem's proof:
// N(n,0) = 1, N(n,l) = (q-1) * q^{min(2l-1, 2n-2l)} for 1 <= l <= n.
std::uint64_t census_closed_form(std::uint64_t q, int n, int ell);

// Literal sum_{j=2u+1}^{2u+2t} floor((j+1)/2); u >= 0, t >= 1.
long long lc_floor_sum(long long u, long long t);

}  // namespace lrs
