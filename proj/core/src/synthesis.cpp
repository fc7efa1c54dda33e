#include "lrs/synthesis.hpp"

namespace lrs {

SynthState synth_init(const Domain& dom, const Value& epsilon) {
    if (!dom.contains(epsilon)) throw InputError("domain mismatch");
    SynthState st;
    st.mu = Poly::one(dom);
    st.mu_prime = Poly::constant(dom, epsilon);
    st.delta_prime = dom.one();
    st.epsilon = epsilon;
    st.e = 1;
    st.lc = 0;
    st.j = 0;
    return st;
}

Value discrepancy(const Domain& dom, const SynthState& st, const Seq& s) {
    internal_check(st.j < s.size(), "discrepancy past the end of the sequence");
    Value acc = dom.zero();
    for (int k = 0; k <= st.lc; ++k)
        acc = dom.add(acc, dom.mul(st.mu[static_cast<std::size_t>(k)],
                                   s.at_or_zero(k + st.j + 1 - st.lc)));
    return acc;
}

SynthState apply_discrepancy(const Domain& dom, const SynthState& st,
                             const Value& delta, const SynthOptions& opt) {
    if (opt.monic && !dom.is_field())
        throw InputError("monic mode requires a field domain");
    SynthState ns = st;
    ns.j = st.j + 1;
    if (!delta.is_zero()) {
        if (opt.monic) {
            Value c = dom.mul(delta, dom.inv(st.delta_prime));
            if (st.e <= 0) {
                ns.mu = poly_sub(
                    dom, st.mu,
                    poly_shift(dom, poly_scale(dom, c, st.mu_prime), -st.e));
            } else {
                ns.mu = poly_sub(dom, poly_shift(dom, st.mu, st.e),
                                 poly_scale(dom, c, st.mu_prime));
                ns.mu_prime = st.mu;
                ns.delta_prime = delta;
                ns.e = -st.e;
            }
        } else if (st.e <= 0) {
            ns.mu = poly_sub(
                dom, poly_scale(dom, st.delta_prime, st.mu),
                poly_shift(dom, poly_scale(dom, delta, st.mu_prime), -st.e));
        } else {
            ns.mu = poly_sub(dom,
                             poly_shift(dom, poly_scale(dom, st.delta_prime, st.mu),
                                        st.e),
                             poly_scale(dom, delta, st.mu_prime));
            ns.mu_prime = st.mu;
            ns.delta_prime = delta;
            ns.e = -st.e;
        }
    }
    ns.e += 1;
    ns.lc = (ns.j + 1 - ns.e) / 2;
    internal_check(ns.e == ns.j + 1 - 2 * ns.lc, "exponent identity violated");
    internal_check(ns.mu.degree() == ns.lc, "degree law violated");
    internal_check(!ns.delta_prime.is_zero(), "reference discrepancy vanished");
    return ns;
}

SynthState min_poly_step(const Domain& dom, const SynthState& st, const Seq& s,
                         const SynthOptions& opt) {
    return apply_discrepancy(dom, st, discrepancy(dom, st, s), opt);
}

SynthResult min_poly(const Seq& s, const Value& epsilon,
                     const SynthOptions& opt) {
    const Domain& dom = s.domain();
    SynthResult result;
    SynthState st = synth_init(dom, epsilon);
    result.trace.reserve(static_cast<std::size_t>(s.size()));
    int jp = -1;
    Poly prime_display = Poly::constant(dom, epsilon);
    for (int j = 1; j <= s.size(); ++j) {
        Value delta = discrepancy(dom, st, s);
        TraceRow row;
        row.j = j;
        row.e_prev = st.e;
        row.delta = delta;
        if (!delta.is_zero()) {
            prime_display =
                st.e > 0 ? st.mu : reciprocal(reciprocal(st.mu));
            if (st.e > 0) jp = j - 1;
        }
        st = apply_discrepancy(dom, st, delta, opt);
        row.mu = st.mu;
        row.mu_prime = prime_display;
        row.lc = st.lc;
        row.j_prime = jp;
        row.p = j - jp;
        result.trace.push_back(std::move(row));
    }
    result.state = st;
    result.mu = opt.primitive ? primitive_part(dom, st.mu) : st.mu;
    return result;
}

int linear_complexity(const Seq& s, const Value& epsilon) {
    const Domain& dom = s.domain();
    SynthState st = synth_init(dom, epsilon);
    for (int j = 1; j <= s.size(); ++j) st = min_poly_step(dom, st, s);
    return st.lc;
}

namespace {

// Chains mu^{(-1)}..mu^{(j)}, the index function and the discrepancies from
// their definitions: Delta is read off the Laurent product and the helper is
// selected through the index chain, not carried by the iteration.
struct RecursiveChain {
    std::vector<Poly> mu;      // mu[i+1] = mu^{(i)}, i = -1..j
    std::vector<int> j_prime;  // j_prime[i] = i', i = 0..j
    std::vector<Value> delta;  // delta[i] = Delta_i, i = 1..j
};

RecursiveChain build_chain(const Seq& s, const Value& epsilon, int j) {
    const Domain& dom = s.domain();
    RecursiveChain ch;
    ch.mu.resize(static_cast<std::size_t>(j) + 2);
    ch.j_prime.assign(static_cast<std::size_t>(j) + 1, -1);
    ch.delta.resize(static_cast<std::size_t>(j) + 1, dom.zero());
    ch.mu[0] = Poly::constant(dom, epsilon);
    ch.mu[1] = Poly::one(dom);
    for (int i = 1; i <= j; ++i) {
        const Poly& prev = ch.mu[static_cast<std::size_t>(i)];  // mu^{(i-1)}
        Value d = laurent_coeff(dom, prev, s, prev.degree() - i);
        ch.delta[static_cast<std::size_t>(i)] = d;
        int e_prev = i - 2 * prev.degree();  // e_{i-1}
        if (d.is_zero()) {
            ch.j_prime[static_cast<std::size_t>(i)] =
                ch.j_prime[static_cast<std::size_t>(i - 1)];
            ch.mu[static_cast<std::size_t>(i) + 1] = prev;
            continue;
        }
        int k = ch.j_prime[static_cast<std::size_t>(i - 1)];  // (i-1)'
        ch.j_prime[static_cast<std::size_t>(i)] = e_prev > 0 ? i - 1 : k;
        Value dprime =
            k + 1 == 0 ? dom.one() : ch.delta[static_cast<std::size_t>(k + 1)];
        const Poly& helper = ch.mu[static_cast<std::size_t>(k) + 2];  // mu^{(k)}
        Poly lhs = poly_shift(dom, poly_scale(dom, dprime, prev),
                              std::max(e_prev, 0));
        Poly rhs = poly_shift(dom, poly_scale(dom, d, helper),
                              std::max(-e_prev, 0));
        ch.mu[static_cast<std::size_t>(i) + 1] = poly_sub(dom, lhs, rhs);
    }
    return ch;
}

}  // namespace

Poly min_poly_recursive(const Seq& s, const Value& epsilon, int j) {
    if (j < -1 || j > s.size())
        throw InputError("recursion index out of range");
    if (j == -1) return Poly::constant(s.domain(), epsilon);
    return build_chain(s, epsilon, j).mu[static_cast<std::size_t>(j) + 1];
}

int index_fn(const Seq& s, int j) {
    return index_fn(s, s.domain().zero(), j);
}

int index_fn(const Seq& s, const Value& epsilon, int j) {
    if (j < 0 || j > s.size()) throw InputError("index out of range");
    if (j == 0) return -1;
    return build_chain(s, epsilon, j).j_prime[static_cast<std::size_t>(j)];
}

std::vector<int> lc_profile(const Seq& s, const Value& epsilon) {
    const Domain& dom = s.domain();
    SynthState st = synth_init(dom, epsilon);
    std::vector<int> profile;
    profile.reserve(static_cast<std::size_t>(s.size()));
    for (int j = 1; j <= s.size(); ++j) {
        st = min_poly_step(dom, st, s);
        profile.push_back(st.lc);
        internal_check(profile.size() < 2 ||
                           profile[profile.size() - 2] <= profile.back(),
                       "linear complexity decreased");
    }
    return profile;
}

std::set<int> jump_points(const Seq& s, const Value& epsilon) {
    std::vector<int> profile = lc_profile(s, epsilon);
    std::set<int> jumps;
    for (int j = 2; j <= s.size(); ++j) {
        if (profile[static_cast<std::size_t>(j - 1)] >
            profile[static_cast<std::size_t>(j - 2)])
            jumps.insert(j);
    }
    if (s.size() >= 1) {
        // L_n = L_1 + sum over jumps of the entering exponent e_{j-1}
        long long sum = profile[0];
        for (int j : jumps)
            sum += j - 2LL * profile[static_cast<std::size_t>(j - 2)];
        internal_check(sum == profile.back(), "jump decomposition violated");
    }
    return jumps;
}

Poly minimal_family_member(const Seq& s, const Value& epsilon,
                           const Poly& f_prime) {
    const Domain& dom = s.domain();
    SynthResult run = min_poly(s, epsilon);
    int e_n = s.size() + 1 - 2 * run.state.lc;
    if (!f_prime.is_zero() && f_prime.degree() > -e_n)
        throw InputError("family degree bound violated: deg(f') must be <= " +
                         std::to_string(-e_n));
    Poly out = poly_add(dom, run.state.mu,
                        poly_mul(dom, f_prime, run.state.mu_prime));
    internal_check(out.degree() == run.state.mu.degree(),
                   "family member changed degree");
    internal_check(is_annihilator(dom, out, s),
                   "family member fails to annihilate");
    return out;
}

}  // namespace lrs
