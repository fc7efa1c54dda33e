#pragma once

#include "lrs/laurent.hpp"

namespace lrs {

// Independent ground truth for minimal annihilator degrees. No code is shared
// with the synthesis/bm iterations: degrees are found by solving the defining
// linear conditions (or by exhaustive search over small fields).
enum class OracleMethod { ExhaustiveSearch, LinearSolve };

struct OracleResult {
    int min_degree = 0;
    Poly witness;  // some minimal annihilator; not unique in general
    OracleMethod method = OracleMethod::LinearSolve;
};

// Minimal annihilator degree and a witness.
//  - LinearSolve: exact elimination on the degree-d linear system with the
//    leading coefficient pinned to 1, scanning d = 0,1,2,...  Fields use
//    GF(p) arithmetic; the integers are solved over the rationals and the
//    witness is scaled to a primitive integer polynomial.
//  - ExhaustiveSearch: fields only; enumerates all q^{d+1} coefficient
//    tuples per degree, bounded by q^{d+1} <= 10^7.
// Degree n always succeeds (vacuous annihilator).
OracleResult brute_min_poly(const Seq& s,
                            OracleMethod method = OracleMethod::LinearSolve);

}  // namespace lrs
