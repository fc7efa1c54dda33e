#include "lrs/rational.hpp"

namespace lrs {

namespace {

struct NumeratorState {
    SynthState mu_state;
    Poly nu;
    Poly nu_prime;
};

NumeratorState numerator_init(const Domain& dom, const Value& epsilon) {
    NumeratorState st;
    st.mu_state = synth_init(dom, epsilon);
    st.nu = Poly();                                        // nu^{(0)} = 0
    st.nu_prime = Poly::constant(dom, dom.from_int(-1));   // nu^{(-1)} = -1
    return st;
}

// Same branch structure as the minimal-polynomial update, applied to nu.
NumeratorState numerator_step(const Domain& dom, const NumeratorState& st,
                              const Seq& s) {
    NumeratorState ns = st;
    Value delta = discrepancy(dom, st.mu_state, s);
    int e = st.mu_state.e;
    if (!delta.is_zero()) {
        if (e <= 0) {
            ns.nu = poly_sub(
                dom, poly_scale(dom, st.mu_state.delta_prime, st.nu),
                poly_shift(dom, poly_scale(dom, delta, st.nu_prime), -e));
        } else {
            ns.nu = poly_sub(
                dom,
                poly_shift(dom, poly_scale(dom, st.mu_state.delta_prime, st.nu),
                           e),
                poly_scale(dom, delta, st.nu_prime));
            ns.nu_prime = st.nu;
        }
    }
    ns.mu_state = apply_discrepancy(dom, st.mu_state, delta);
    return ns;
}

}  // namespace

Poly nu_direct(const Seq& s, const Value& epsilon, int j) {
    if (j < 0 || j > s.size()) throw InputError("step index out of range");
    Poly mu_j = min_poly(s.prefix(j), epsilon).mu;
    return poly_part(s.domain(), mu_j, s);
}

Poly nu_recursive(const Seq& s, const Value& epsilon, int j) {
    if (j < 0 || j > s.size()) throw InputError("step index out of range");
    const Domain& dom = s.domain();
    NumeratorState st = numerator_init(dom, epsilon);
    for (int i = 1; i <= j; ++i) st = numerator_step(dom, st, s);
    return st.nu;
}

std::vector<RationalApprox> numerator_steps(const Seq& s,
                                            const Value& epsilon) {
    const Domain& dom = s.domain();
    NumeratorState st = numerator_init(dom, epsilon);
    std::vector<RationalApprox> out;
    out.reserve(static_cast<std::size_t>(s.size()));
    for (int j = 1; j <= s.size(); ++j) {
        st = numerator_step(dom, st, s);
        RationalApprox row;
        row.mu = st.mu_state.mu;
        row.nu = st.nu;
        row.j = j;
        row.lc = st.mu_state.lc;
        internal_check(row.nu.is_zero() || row.nu.degree() < row.lc,
                       "numerator degree reached the complexity");
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace lrs
