#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lrs/analysis.hpp"
#include "lrs/bm.hpp"
#include "lrs/synthesis.hpp"

namespace lrs {

using json = nlohmann::json;

// {"coeffs": ["c0", "c1", ...], "domain": "<spec>"} with decimal strings.
json poly_to_json(const Domain& dom, const Poly& f);
Poly poly_from_json(const Domain& dom, const json& j);

// Human-readable form with zero terms omitted; "0" for the zero polynomial.
// Descending by default (minimal polynomials); ascending matches the
// connection-polynomial convention.
std::string poly_to_string(const Domain& dom, const Poly& f,
                           bool ascending = false);

// Trace rows as a JSON array; field names are j, e_prev, delta, mu,
// mu_prime, lc, j_prime, p (rho/rho_prime for BM traces).
json trace_to_json(const Domain& dom, const std::vector<TraceRow>& trace,
                   bool bm = false);
std::vector<TraceRow> trace_from_json(const Domain& dom, const json& j,
                                      bool bm = false);

// Text rendering in the table layout used throughout: columns j, e_{j-1},
// Delta_j, then mu/mu' (descending) or p, rho/rho' (ascending) for BM.
std::string render_trace_table(const Domain& dom,
                               const std::vector<TraceRow>& trace,
                               bool bm = false);

json opcounter_to_json(const OpCounter& c);
OpCounter opcounter_from_json(const json& j);

json count_table_to_json(const CountTable& t);
CountTable count_table_from_json(const json& j);

// Sequence ingestion: a single comma-separated line or one element per line;
// '#' starts a comment; surrounding whitespace is trimmed. An empty body is
// the empty sequence.
Seq parse_sequence(const Domain& dom, std::string_view text);

std::string seq_to_string(const Seq& s);

}  // namespace lrs
