// Range-scan verification: every paper inequality as a certified per-point
// predicate, with violations and unresolved points collected into a
// machine-readable report.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "partcert/enclosure.hpp"
#include "partcert/partition.hpp"

namespace partcert {

inline constexpr const char* kToolVersion = "partcert 0.1.0";

enum class CheckOutcome { holds, violation, indeterminate };

// A certified evaluation: outcome plus the signed margin enclosure backing it.
// Exact-integer predicates produce point margins and never come back
// indeterminate; enclosure predicates escalate precision up to the cap first.
struct CheckEval {
    CheckOutcome outcome;
    Enclosure margin;
};

struct CheckPoint {
    long n = 0;
    std::optional<long> m;  // set for the strong-log-concavity triangle
};

struct Violation {
    CheckPoint point;
    std::string margin_lo;
    std::string margin_hi;
};

struct CheckReport {
    std::string check_id;
    long from = 0;
    long to = 0;
    std::string parameters_json = "{}";
    std::vector<Violation> violations;
    std::vector<CheckPoint> indeterminate;
    bool passed = false;
    std::string tool_version = kToolVersion;
    Precision precision_bits = 0;

    // Pretty-printed JSON document with the exact field names
    // check_id/range/parameters/violations/indeterminate/passed/
    // tool_version/precision_bits.
    std::string to_json_string() const;
};

// -- individual predicates ---------------------------------------------------

// p(n)^2 - p(n-1) p(n+1) >= 0 (log-concavity at n), n >= 1; exact.
CheckEval check_log_concavity(long n, PartitionTable& table);

enum class ChenVariant { unit, refined, sharp };

// p(n-1) p(n+1) (1 + c(n)) - p(n)^2 > 0 with
//   c(n) = 1/n (unit), 240/(24n)^(3/2) (refined), pi/(sqrt(24) n^(3/2)) (sharp);
// unit/refined decided in exact integer arithmetic (refined by squaring the
// cleared sqrt(24n) term), sharp by enclosures.  n >= 2.
CheckEval check_chen_reverse(long n, ChenVariant variant, PartitionTable& table,
                             Precision prec = default_precision());

// p(n)^2 - p(n-m) p(n+m) > 0, n > m > 1; exact.
CheckEval check_strong_lc(long n, long m, PartitionTable& table);

// q(n)^2 - q(n-1) q(n+1) >= 0 for q(n) = p(n)/n, evaluated exactly as
// p(n)^2 (n-1)(n+1) - p(n-1) p(n+1) n^2; n >= 2.
CheckEval check_sun_q(long n, PartitionTable& table);

enum class JanoskiNorm { star_over_sqrtk, standard };

const char* to_string(JanoskiNorm norm);

// The page-9 inequality: with t = n - 1/24, K = floor(C sqrt(t)),
//   sum_{k=3}^{K} A_k(n) sqrt(k) d(n,k)  >  C sqrt(t) sqrt(3) A_3(n) d(n,3),
// d(n,k) = (C/(2kt)) cosh(C sqrt(t)/k) - (1/(2 t^(3/2))) sinh(C sqrt(t)/k),
// and A_k either the standard exponential sum or A_k^*/sqrt(k).
// Requires K >= 3 (n >= 2).  When the margin is within one K+1 term of
// flipping, the K+1 variant's outcome is also computed (see scan parameters).
CheckEval janoski_check(long n, JanoskiNorm norm,
                        Precision prec = default_precision());

// -- scans --------------------------------------------------------------------

// Registered ids: logconcave, chen-reverse, chen-refined, chen-sharp, strong,
// sun-q, janoski, prop-bounds, lemma-t1, lemma-ratio.
// strong scans the triangle 1 < m < n <= to.  janoski honors
// options.janoski_norm.  Throws std::invalid_argument for unknown ids and
// std::out_of_range when [from, to] leaves a check's asserted range.
struct ScanOptions {
    Precision prec = default_precision();
    JanoskiNorm janoski_norm = JanoskiNorm::standard;
};

CheckReport scan(const std::string& check_id, long from, long to,
                 PartitionTable& table, const ScanOptions& options = {});

std::vector<std::string> registered_checks();

}  // namespace partcert
