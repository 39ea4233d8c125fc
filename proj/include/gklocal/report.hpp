#pragma once

// Machine-readable verification reports, the named verification suites behind the
// command-line front end, and the row builders for the constants table. Schema
// identifier: gk-local/1.

#include "gklocal/json_io.hpp"
#include "gklocal/quadrature.hpp"
#include "gklocal/waldspurger.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gk {

struct SuiteOptions {
    int max_k = 8;
    double tol = 1e-8;
    std::uint64_t seed = 0;
    int jobs = 0;  // 0: hardware concurrency

    QuadConfig quad() const {
        QuadConfig q;
        q.rtol = tol;
        return q;
    }
};

struct CaseResult {
    std::string id;
    json inputs = json::object();
    std::optional<PiScaled> exact;
    std::optional<Cplx> numeric;
    double abs_err = 0.0;
    double rel_err = 0.0;
    std::string status = "pass";  // pass | fail | skipped
};

struct VerificationReport {
    std::string suite;
    SuiteOptions opts;
    std::string timestamp;  // ISO-8601 UTC
    std::vector<CaseResult> cases;

    int count(const std::string& status) const;
    bool all_pass() const { return count("fail") == 0; }
    json to_json() const;
};

// Suite names: "real", "complex", "constants". "all" is handled by the caller by
// concatenation.
std::vector<std::string> suite_names();
VerificationReport run_suite(const std::string& name, const SuiteOptions& opts);

// --- CLI cores ------------------------------------------------------------------

// Parses "real-split:k=2,m=0,match", "complex-split:kid=4,kc=2,mid=1,mc=0,match",
// "nonsplit:k=4,m=1". Throws std::invalid_argument on malformed input.
PlaceSpec parse_place_spec(const std::string& text);

// JSON payload of the constant command: per-place constants and the global product.
json constant_payload(const std::vector<PlaceSpec>& places);

// JSON payload of the integral command (closed form, and quadrature when asked).
json integral_real_payload(int k, int lambda_sign, int chi_sign, int m, bool numeric,
                           const QuadConfig& cfg);
json integral_complex_payload(int k_id, int k_c, int chi_mode, int m_id, int m_c, bool numeric,
                              const QuadConfig& cfg);

// Table of closed-form constants over a weight grid, ordered lexicographically in
// (kind, weights, m). Kinds named "complex-split", "nonsplit", "real-split".
struct TableRow {
    std::string kind;
    std::string k;  // "4" or "4|2"
    std::string m;
    std::string integral_exact;    // empty for nonsplit rows
    std::string integral_decimal;
    std::string c_sigma_exact;
    std::string c_sigma_decimal;
};
std::vector<TableRow> constant_table(bool with_real, bool with_complex, bool with_nonsplit,
                                     int max_k);
std::string render_table(const std::vector<TableRow>& rows, const std::string& format);

}  // namespace gk
