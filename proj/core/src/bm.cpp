#include "lrs/bm.hpp"

namespace lrs {

BMState bm_init(const Domain& dom, const Value& epsilon) {
    if (!dom.contains(epsilon)) throw InputError("domain mismatch");
    BMState st;
    st.rho = Poly::one(dom);
    st.rho_prime = Poly::constant(dom, epsilon);
    st.delta_prime = dom.one();
    st.epsilon = epsilon;
    st.p = 1;
    st.e = 1;
    st.j = 0;
    return st;
}

Value bm_discrepancy(const Domain& dom, const BMState& st, const Seq& s) {
    internal_check(st.j < s.size(), "discrepancy past the end of the sequence");
    Value acc = dom.zero();
    for (int k = 0; k <= st.rho.degree(); ++k)
        acc = dom.add(acc, dom.mul(st.rho[static_cast<std::size_t>(k)],
                                   s.at_or_zero(st.j + 1 - k)));
    return acc;
}

BMState bm_apply_discrepancy(const Domain& dom, const BMState& st,
                             const Value& delta, const SynthOptions& opt) {
    if (opt.monic && !dom.is_field())
        throw InputError("monic mode requires a field domain");
    BMState ns = st;
    ns.j = st.j + 1;
    if (!delta.is_zero()) {
        Poly t = st.rho;
        if (opt.monic) {
            Value c = dom.mul(delta, dom.inv(st.delta_prime));
            ns.rho = poly_sub(
                dom, st.rho,
                poly_shift(dom, poly_scale(dom, c, st.rho_prime), st.p));
        } else {
            ns.rho = poly_sub(
                dom, poly_scale(dom, st.delta_prime, st.rho),
                poly_shift(dom, poly_scale(dom, delta, st.rho_prime), st.p));
        }
        if (st.e > 0) {
            ns.rho_prime = t;
            ns.delta_prime = delta;
            ns.p = 0;
            ns.e = -st.e;
        }
    }
    ns.p += 1;
    ns.e += 1;
    internal_check((ns.j + 1 - ns.e) % 2 == 0, "length parity violated");
    int lc = (ns.j + 1 - ns.e) / 2;
    internal_check(ns.rho.degree() <= lc, "connection degree exceeds length");
    internal_check(!ns.delta_prime.is_zero(), "reference discrepancy vanished");
    return ns;
}

BMState bm_step(const Domain& dom, const BMState& st, const Seq& s,
                const SynthOptions& opt) {
    return bm_apply_discrepancy(dom, st, bm_discrepancy(dom, st, s), opt);
}

BMResult bm_synthesize(const Seq& s, const Value& epsilon,
                       const SynthOptions& opt) {
    const Domain& dom = s.domain();
    BMResult result;
    BMState st = bm_init(dom, epsilon);
    result.trace.reserve(static_cast<std::size_t>(s.size()));
    int jp = -1;
    Poly prime_display = Poly::constant(dom, epsilon);
    for (int j = 1; j <= s.size(); ++j) {
        Value delta = bm_discrepancy(dom, st, s);
        TraceRow row;
        row.j = j;
        row.e_prev = st.e;
        row.delta = delta;
        if (!delta.is_zero()) {
            prime_display = st.rho;  // superseded candidate, as traced
            if (st.e > 0) jp = j - 1;
        }
        st = bm_apply_discrepancy(dom, st, delta, opt);
        row.mu = st.rho;
        row.mu_prime = prime_display;
        row.lc = (st.j + 1 - st.e) / 2;
        row.j_prime = jp;
        row.p = j - jp;
        internal_check(row.p == st.p, "gap counter diverged from j - j'");
        result.trace.push_back(std::move(row));
    }
    result.state = st;
    result.lc = (s.size() + 1 - st.e) / 2;
    result.rho = opt.primitive ? primitive_part(dom, st.rho) : st.rho;
    return result;
}

bool is_reciprocal_pair(const Domain& dom, const Poly& g, int ell,
                        const Seq& s) {
    if (g.is_zero() || g[0].is_zero()) return false;
    if (g.degree() > ell) return false;
    for (int j = ell + 1; j <= s.size(); ++j) {
        Value acc = dom.zero();
        for (int k = 0; k <= g.degree(); ++k)
            acc = dom.add(acc, dom.mul(g[static_cast<std::size_t>(k)],
                                       s.at_or_zero(j - k)));
        if (!acc.is_zero()) return false;
    }
    return true;
}

Poly pair_to_min_poly(const Domain& dom, const Poly& g, int ell) {
    if (g.is_zero() || g[0].is_zero())
        throw InputError("reciprocal pair requires a nonzero constant term");
    if (ell < g.degree())
        throw InputError("pair length below the connection degree");
    return poly_shift(dom, reciprocal(g), ell - g.degree());
}

}  // namespace lrs
