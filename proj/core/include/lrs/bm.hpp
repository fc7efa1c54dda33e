#pragma once

#include "lrs/synthesis.hpp"

namespace lrs {

// Connection-polynomial form: g with g_0 != 0 and deg(g) <= ell.
struct RecipPair {
    Poly g;
    int ell = 0;
};

// Iteration state of the division-free Berlekamp-Massey synthesis.
struct BMState {
    Poly rho;
    Poly rho_prime;
    Value delta_prime;
    Value epsilon;
    int p = 1;
    int e = 1;
    int j = 0;
};

// Trace rows reuse TraceRow with mu/mu_prime holding rho/rho_prime; p is the
// gap counter after the step's unconditional increment.
struct BMResult {
    Poly rho;
    int lc = 0;
    BMState state;
    std::vector<TraceRow> trace;
};

BMState bm_init(const Domain& dom, const Value& epsilon);

// sum_{k=0}^{deg rho} rho_k * s_{j+1-k}.
Value bm_discrepancy(const Domain& dom, const BMState& st, const Seq& s);

BMState bm_apply_discrepancy(const Domain& dom, const BMState& st,
                             const Value& delta, const SynthOptions& opt = {});

BMState bm_step(const Domain& dom, const BMState& st, const Seq& s,
                const SynthOptions& opt = {});

// Iterative BM: returns (rho, L) with x^{L-deg(rho)} * reciprocal(rho) a
// minimal polynomial of s. Division-free in default mode.
BMResult bm_synthesize(const Seq& s, const Value& epsilon,
                       const SynthOptions& opt = {});

// True iff g_0 != 0, deg(g) <= ell, and g_0 s_j + ... + g_d s_{j-d} = 0 for
// ell+1 <= j <= n.
bool is_reciprocal_pair(const Domain& dom, const Poly& g, int ell,
                        const Seq& s);

// x^{ell - deg(g)} * reciprocal(g); requires g_0 != 0 and ell >= deg(g).
Poly pair_to_min_poly(const Domain& dom, const Poly& g, int ell);

}  // namespace lrs
