#pragma once

#include <set>
#include <vector>

#include "lrs/laurent.hpp"

namespace lrs {

struct SynthOptions {
    // Field domains only: keep the candidate monic by dividing each refresh
    // by the reference discrepancy. Costs one division per refresh.
    bool monic = false;
    // Reduce the returned polynomial to its primitive part (monic over a
    // field) after the run. The trace keeps the raw candidates.
    bool primitive = false;
};

// Iteration state of minimal-polynomial synthesis.
// Invariants: e == j + 1 - 2*lc, deg(mu) == lc, delta_prime != 0.
struct SynthState {
    Poly mu;
    Poly mu_prime;
    Value delta_prime;
    Value epsilon;
    int e = 1;
    int lc = 0;
    int j = 0;
};

// Per-step record. e_prev is the exponent entering step j and delta the
// discrepancy tested at step j. The mu_prime column follows the trace
// convention: at a step with nonzero discrepancy it shows the superseded
// candidate (reversed to constant-term form when the step is not a jump);
// the helper retained for later updates is SynthState::mu_prime.
struct TraceRow {
    int j = 0;
    int e_prev = 0;
    Value delta;
    Poly mu;
    Poly mu_prime;
    int lc = 0;
    int j_prime = -1;
    int p = 1;
};

struct SynthResult {
    Poly mu;
    SynthState state;  // final state; state.mu_prime is the live helper
    std::vector<TraceRow> trace;
};

SynthState synth_init(const Domain& dom, const Value& epsilon);

// Discrepancy of the current candidate against s_{j+1}:
// sum_{k=0}^{lc} mu_k * s_{k + j + 1 - lc}.
Value discrepancy(const Domain& dom, const SynthState& st, const Seq& s);

// State transition given the discrepancy for step st.j + 1.
SynthState apply_discrepancy(const Domain& dom, const SynthState& st,
                             const Value& delta, const SynthOptions& opt = {});

SynthState min_poly_step(const Domain& dom, const SynthState& st, const Seq& s,
                         const SynthOptions& opt = {});

// Iterative synthesis: a minimal polynomial of s together with the full
// per-step trace. n = 0 yields (1, empty trace).
SynthResult min_poly(const Seq& s, const Value& epsilon,
                     const SynthOptions& opt = {});

// Degree of a minimal polynomial of s (no trace kept).
int linear_complexity(const Seq& s, const Value& epsilon);

// Recursive evaluation of mu^{(j)} from the definitional recursion: the
// discrepancy is read off the Laurent product and the helper is selected
// through the index chain. Independent of the iterative path; -1 <= j <= n.
Poly min_poly_recursive(const Seq& s, const Value& epsilon, int j);

// The index function j'. The chain is epsilon-independent (jumps are
// intrinsic); the two-argument form evaluates with epsilon = 0.
int index_fn(const Seq& s, int j);
int index_fn(const Seq& s, const Value& epsilon, int j);

// [L_1, ..., L_n]; non-decreasing.
std::vector<int> lc_profile(const Seq& s, const Value& epsilon);

// { j : L_j > L_{j-1}, 2 <= j <= n }; also re-derives
// L_n = L_1 + sum of jump heights and rejects any mismatch.
std::set<int> jump_points(const Seq& s, const Value& epsilon);

// mu^{(n)} + f' * mu'^{(n)}, which stays minimal when deg(f') <= -e_n.
// Violating the degree bound is a rejected input.
Poly minimal_family_member(const Seq& s, const Value& epsilon,
                           const Poly& f_prime);

}  // namespace lrs
