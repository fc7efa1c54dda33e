#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lrs/bm.hpp"
#include "lrs/synthesis.hpp"

namespace lrs {

struct SuiteReport {
    std::string name;
    std::uint64_t checks = 0;
    std::uint64_t failures = 0;
    std::vector<std::string> notes;  // one line per failure or finding
};

struct VerifyConfig {
    int max_n = 10;          // exhaustive binary lengths 0..max_n
    int random_cases = 200;  // random sequences per non-binary domain
    std::uint64_t seed = 0x5EEDBA5EBA11ull;
    std::optional<Domain> domain;  // restrict the oracle suite
};

// Re-derives every per-step law from a finished run and counts violations:
// nonzero reference discrepancy, exponent update, degree law, L = j'+1-L',
// p = j-j', index-chain agreement, and (when bm is present) the per-step
// reciprocal correspondence rho^{(j)} == reciprocal(mu^{(j)}).
std::uint64_t check_run_invariants(const Seq& s, const Value& epsilon,
                                   const SynthResult& run, const BMResult* bm,
                                   std::vector<std::string>* notes = nullptr);

SuiteReport verify_synthesis(const VerifyConfig& cfg);
SuiteReport verify_bm(const VerifyConfig& cfg);
SuiteReport verify_rational(const VerifyConfig& cfg);
SuiteReport verify_oracle(const VerifyConfig& cfg);
SuiteReport verify_analysis(const VerifyConfig& cfg);

std::vector<SuiteReport> verify_all(const VerifyConfig& cfg);

}  // namespace lrs
