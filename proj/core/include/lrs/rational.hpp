#pragma once

#include "lrs/synthesis.hpp"

namespace lrs {

// Numerator of the rational approximation carried by step j:
// nu^{(j)} is the polynomial part of mu^{(j)} * s_, with deg(nu) < L_j.
struct RationalApprox {
    Poly mu;
    Poly nu;
    int j = 0;
    int lc = 0;
};

// Polynomial part of mu^{(j)} * s_, computed directly. Reads only
// s_1..s_{L_j}. 0 <= j <= n.
Poly nu_direct(const Seq& s, const Value& epsilon, int j);

// The numerator recursion: identical update shape to the minimal-polynomial
// recursion with (nu, nu') in place of (mu, mu'), initialised as
// nu^{(-1)} = -1, nu^{(0)} = 0. Agrees with nu_direct everywhere.
Poly nu_recursive(const Seq& s, const Value& epsilon, int j);

// (mu^{(j)}, nu^{(j)}) for j = 1..n, maintained in lockstep.
std::vector<RationalApprox> numerator_steps(const Seq& s, const Value& epsilon);

}  // namespace lrs
