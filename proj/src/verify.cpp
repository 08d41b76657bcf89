#include "partcert/verify.hpp"

#include <algorithm>
#include <functional>

#include <json.hpp>

#include "partcert/bounds.hpp"
#include "partcert/decay.hpp"
#include "partcert/hr_series.hpp"

namespace partcert {

namespace {

CheckEval from_exact(const mpz_class& value, bool zero_holds) {
    Enclosure margin = Enclosure::from_integer(value);
    if (value > 0) return {CheckOutcome::holds, margin};
    if (value < 0) return {CheckOutcome::violation, margin};
    return {zero_holds ? CheckOutcome::holds : CheckOutcome::violation, margin};
}

// Escalate precision until the margin enclosure certifies a sign (or the cap
// is reached).  zero_holds controls ">= 0" vs "> 0" predicates; an exact-zero
// enclosure can only arise from exact inputs.
CheckEval resolve_sign(const std::function<Enclosure(Precision)>& margin_at,
                       Precision start, bool zero_holds) {
    Precision p = std::max(start, kMinPrecision);
    Enclosure m = margin_at(p);
    while (true) {
        switch (m.sign()) {
            case Sign::positive: return {CheckOutcome::holds, m};
            case Sign::negative: return {CheckOutcome::violation, m};
            case Sign::zero:
                return {zero_holds ? CheckOutcome::holds : CheckOutcome::violation, m};
            case Sign::unknown: break;
        }
        if (p >= kMaxPrecision) return {CheckOutcome::indeterminate, m};
        p *= 2;
        m = margin_at(p);
    }
}

}  // namespace

CheckEval check_log_concavity(long n, PartitionTable& table) {
    if (n < 1) throw std::domain_error("check_log_concavity: n must be >= 1");
    table.extend_to(n + 1);
    mpz_class v = table.at(n) * table.at(n) - table.at(n - 1) * table.at(n + 1);
    return from_exact(v, /*zero_holds=*/true);
}

CheckEval check_chen_reverse(long n, ChenVariant variant, PartitionTable& table,
                             Precision prec) {
    if (n < 2) throw std::domain_error("check_chen_reverse: n must be >= 2");
    table.extend_to(n + 1);
    const mpz_class& pm = table.at(n - 1);
    const mpz_class& p0 = table.at(n);
    const mpz_class& pp = table.at(n + 1);
    mpz_class prod = pm * pp;
    mpz_class sq = p0 * p0;

    switch (variant) {
        case ChenVariant::unit: {
            // (n+1) p(n-1) p(n+1) - n p(n)^2 > 0  (predicate cleared by n > 0)
            mpz_class v = (n + 1) * prod - n * sq;
            return from_exact(v, /*zero_holds=*/false);
        }
        case ChenVariant::refined: {
            // 240/(24n)^(3/2) = (5/(12 n^2)) sqrt(24n); clearing 12 n^2 gives
            //   A + B sqrt(24n) > 0,  A = 12 n^2 (prod - sq),  B = 5 prod > 0,
            // whose sign is exact by squaring when A < 0.
            mpz_class A = 12 * mpz_class(n) * n * (prod - sq);
            mpz_class B = 5 * prod;
            int sign;
            if (A >= 0) {
                sign = 1;
            } else {
                mpz_class lhs = B * B * 24 * n;
                mpz_class rhs = A * A;
                sign = lhs > rhs ? 1 : (lhs < rhs ? -1 : 0);
            }
            if (sign == 0) {
                return {CheckOutcome::violation, Enclosure::from_long(0)};
            }
            // Margin enclosure of A + B sqrt(24n); refine until it agrees
            // with the exact sign (the outcome is already decided exactly).
            CheckOutcome outcome =
                sign > 0 ? CheckOutcome::holds : CheckOutcome::violation;
            Enclosure m = Enclosure::from_long(0, prec);
            for (Precision p = prec; p <= kMaxPrecision; p *= 2) {
                m = add(Enclosure::from_integer(A),
                        mul(Enclosure::from_integer(B),
                            sqrt(Enclosure::from_long(24 * n, p), p), p),
                        p);
                if (m.sign() == (sign > 0 ? Sign::positive : Sign::negative)) break;
            }
            return {outcome, m};
        }
        case ChenVariant::sharp: {
            // prod (1 + pi/(sqrt(24) n^(3/2))) - sq, by enclosures.
            auto margin_at = [&](Precision p) {
                Enclosure ne = Enclosure::from_long(n, p);
                Enclosure den = mul(sqrt(Enclosure::from_long(24, p), p),
                                    mul(ne, sqrt(ne, p), p), p);
                Enclosure c = div(pi_const(p), den, p);
                Enclosure one_c = add(Enclosure::from_long(1, p), c, p);
                return sub(mul(Enclosure::from_integer(prod), one_c, p),
                           Enclosure::from_integer(sq), p);
            };
            return resolve_sign(margin_at, prec, /*zero_holds=*/false);
        }
    }
    throw std::invalid_argument("check_chen_reverse: unknown variant");
}

CheckEval check_strong_lc(long n, long m, PartitionTable& table) {
    if (!(n > m && m > 1)) {
        throw std::domain_error("check_strong_lc: requires n > m > 1");
    }
    table.extend_to(n + m);
    mpz_class v = table.at(n) * table.at(n) - table.at(n - m) * table.at(n + m);
    return from_exact(v, /*zero_holds=*/false);
}

CheckEval check_sun_q(long n, PartitionTable& table) {
    if (n < 2) throw std::domain_error("check_sun_q: n must be >= 2");
    table.extend_to(n + 1);
    // q(n)^2 - q(n-1) q(n+1) cleared by n^2 (n-1)(n+1) > 0.
    mpz_class v = table.at(n) * table.at(n) * (n - 1) * (n + 1) -
                  table.at(n - 1) * table.at(n + 1) * mpz_class(n) * n;
    return from_exact(v, /*zero_holds=*/true);
}

const char* to_string(JanoskiNorm norm) {
    return norm == JanoskiNorm::standard ? "standard" : "star_over_sqrtk";
}

namespace {

// d(n,k) = (C/(2kt)) cosh(mu/k) - (1/(2 t^(3/2))) sinh(mu/k).
Enclosure janoski_d(const Enclosure& t, const Enclosure& mu_enc,
                    const Enclosure& C, long k, Precision p) {
    Enclosure ke = Enclosure::from_long(k, p);
    Enclosure x = div(mu_enc, ke, p);
    Enclosure lead = div(C, mul(mul_2si(ke, 1), t, p), p);
    Enclosure t32 = mul(t, sqrt(t, p), p);
    Enclosure tail = div(Enclosure::from_long(1, p), mul_2si(t32, 1), p);
    return sub(mul(lead, cosh(x, p), p), mul(tail, sinh(x, p), p), p);
}

Enclosure janoski_coeff(long n, long k, JanoskiNorm norm, Precision p) {
    Enclosure a = a_k_standard(n, static_cast<unsigned long>(k), p);
    if (norm == JanoskiNorm::star_over_sqrtk) {
        // A_k^*/sqrt(k) = A_k/k
        return div(a, Enclosure::from_long(k, p), p);
    }
    return a;
}

struct JanoskiDetail {
    CheckEval eval;
    long K = 0;
    bool near_flip = false;                    // |margin| within one K+1 term
    std::optional<CheckOutcome> ceil_outcome;  // outcome with the sum to K+1
};

Enclosure janoski_margin(long n, JanoskiNorm norm, long K, Precision p) {
    mpq_class t_exact(24 * mpz_class(n) - 1, 24);
    t_exact.canonicalize();
    Enclosure t = Enclosure::from_mpq(t_exact, p);
    Enclosure C = hr_constants(p).C;
    Enclosure mu_enc = mul(C, sqrt(t, p), p);
    Enclosure lhs = Enclosure::from_long(0, p);
    for (long k = 3; k <= K; ++k) {
        Enclosure term = mul(mul(janoski_coeff(n, k, norm, p),
                                 sqrt(Enclosure::from_long(k, p), p), p),
                             janoski_d(t, mu_enc, C, k, p), p);
        lhs = add(lhs, term, p);
    }
    Enclosure rhs = mul(mul(mu_enc, sqrt(Enclosure::from_long(3, p), p), p),
                        mul(janoski_coeff(n, 3, norm, p),
                            janoski_d(t, mu_enc, C, 3, p), p),
                        p);
    return sub(lhs, rhs, p);
}

JanoskiDetail janoski_eval(long n, JanoskiNorm norm, Precision prec) {
    if (n < 2) throw std::domain_error("janoski_check: n must be >= 2");
    // K = floor(C sqrt(t)) = floor(mu(n)); mu is irrational, so the floor
    // resolves under refinement.
    long K = -1;
    for (Precision p = prec; p <= kMaxPrecision; p *= 2) {
        Enclosure m = mu(n, p);
        mpz_class f_lo, f_hi;
        mpfr_get_z(f_lo.get_mpz_t(), m.lo(), MPFR_RNDD);
        mpfr_get_z(f_hi.get_mpz_t(), m.hi(), MPFR_RNDD);
        if (f_lo == f_hi) {
            K = f_lo.get_si();
            break;
        }
    }
    if (K < 0) throw ResolutionError("janoski_check: floor(mu) did not resolve");
    if (K < 3) throw std::domain_error("janoski_check: summation limit below 3");

    JanoskiDetail detail;
    detail.K = K;
    detail.eval = resolve_sign(
        [&](Precision p) { return janoski_margin(n, norm, K, p); }, prec,
        /*zero_holds=*/false);

    // Sensitivity to the non-integer summation limit: bound the K+1 term by
    // |A_{K+1}| <= K+1 and compare against the margin.
    Precision p = std::max<Precision>(prec, 128);
    mpq_class t_exact(24 * mpz_class(n) - 1, 24);
    t_exact.canonicalize();
    Enclosure t = Enclosure::from_mpq(t_exact, p);
    Enclosure C = hr_constants(p).C;
    Enclosure mu_enc = mul(C, sqrt(t, p), p);
    Enclosure term_bound =
        mul(mul(Enclosure::from_long(K + 1, p),
                sqrt(Enclosure::from_long(K + 1, p), p), p),
            abs(janoski_d(t, mu_enc, C, K + 1, p)), p);
    Enclosure margin_abs = abs(detail.eval.margin);
    if (mpfr_cmp(margin_abs.lo(), term_bound.hi()) <= 0) {
        detail.near_flip = true;
        CheckEval ceil_eval = resolve_sign(
            [&](Precision q) { return janoski_margin(n, norm, K + 1, q); }, prec,
            /*zero_holds=*/false);
        detail.ceil_outcome = ceil_eval.outcome;
    }
    return detail;
}

}  // namespace

CheckEval janoski_check(long n, JanoskiNorm norm, Precision prec) {
    return janoski_eval(n, norm, prec).eval;
}

// ---------------------------------------------------------------------------

namespace {

const char* outcome_name(CheckOutcome o) {
    switch (o) {
        case CheckOutcome::holds: return "holds";
        case CheckOutcome::violation: return "violation";
        case CheckOutcome::indeterminate: return "indeterminate";
    }
    return "?";
}

Violation make_violation(CheckPoint pt, const Enclosure& margin) {
    return {pt, margin.lo_string(25), margin.hi_string(25)};
}

// Sandwich certification lower < mid < upper with strict certified gaps.
CheckEval certify_sandwich(const std::function<Enclosure(Precision)>& mid_at,
                           const std::function<BoundPair(Precision)>& pair_at,
                           Precision start) {
    auto margin_at = [&](Precision p) {
        Enclosure mid = mid_at(p);
        BoundPair bp = pair_at(p);
        Enclosure g_lo = sub(mid, bp.lower, p);
        Enclosure g_hi = sub(bp.upper, mid, p);
        // the smaller gap decides; keep it as the margin
        return mpfr_cmp(g_lo.lo(), g_hi.lo()) <= 0 ? g_lo : g_hi;
    };
    return resolve_sign(margin_at, start, /*zero_holds=*/false);
}

}  // namespace

std::vector<std::string> registered_checks() {
    return {"logconcave", "chen-reverse", "chen-refined", "chen-sharp",
            "strong",     "sun-q",        "janoski",      "prop-bounds",
            "lemma-t1",   "lemma-ratio"};
}

CheckReport scan(const std::string& check_id, long from, long to,
                 PartitionTable& table, const ScanOptions& options) {
    CheckReport report;
    report.check_id = check_id;
    report.from = from;
    report.to = to;
    report.precision_bits = options.prec;
    nlohmann::json params = nlohmann::json::object();

    if (from > to) throw std::invalid_argument("scan: empty range");

    auto classify = [&](CheckPoint pt, const CheckEval& eval) {
        if (eval.outcome == CheckOutcome::violation) {
            report.violations.push_back(make_violation(pt, eval.margin));
        } else if (eval.outcome == CheckOutcome::indeterminate) {
            report.indeterminate.push_back(pt);
        }
    };

    if (check_id == "logconcave") {
        if (from < 1) throw std::out_of_range("logconcave: from must be >= 1");
        table.extend_to(to + 1);
        for (long n = from; n <= to; ++n) {
            classify({n, std::nullopt}, check_log_concavity(n, table));
        }
    } else if (check_id == "chen-reverse" || check_id == "chen-refined" ||
               check_id == "chen-sharp") {
        if (from < 2) throw std::out_of_range(check_id + ": from must be >= 2");
        ChenVariant variant = check_id == "chen-reverse" ? ChenVariant::unit
                              : check_id == "chen-refined" ? ChenVariant::refined
                                                           : ChenVariant::sharp;
        table.extend_to(to + 1);
        for (long n = from; n <= to; ++n) {
            classify({n, std::nullopt},
                     check_chen_reverse(n, variant, table, options.prec));
        }
    } else if (check_id == "strong") {
        long n_min = std::max<long>(from, 3);
        if (to < n_min) throw std::out_of_range("strong: triangle is empty");
        table.extend_to(2 * to);
        params["triangle"] = "1 < m < n";
        for (long n = n_min; n <= to; ++n) {
            for (long m = 2; m < n; ++m) {
                classify({n, m}, check_strong_lc(n, m, table));
            }
        }
    } else if (check_id == "sun-q") {
        if (from < 2) throw std::out_of_range("sun-q: from must be >= 2");
        table.extend_to(to + 1);
        for (long n = from; n <= to; ++n) {
            classify({n, std::nullopt}, check_sun_q(n, table));
        }
    } else if (check_id == "janoski") {
        if (from < 2) throw std::out_of_range("janoski: from must be >= 2");
        params["normalization"] = to_string(options.janoski_norm);
        nlohmann::json ceil_records = nlohmann::json::array();
        for (long n = from; n <= to; ++n) {
            JanoskiDetail detail = janoski_eval(n, options.janoski_norm, options.prec);
            classify({n, std::nullopt}, detail.eval);
            if (detail.near_flip && detail.ceil_outcome) {
                ceil_records.push_back({{"n", n},
                                        {"K", detail.K},
                                        {"floor_outcome", outcome_name(detail.eval.outcome)},
                                        {"ceil_outcome", outcome_name(*detail.ceil_outcome)}});
            }
        }
        params["ceil_variant"] = ceil_records;
        // The paper reports counterexamples 27, 36, 87, 744; record whether
        // all of them (within range) were found violated.
        bool subset = true;
        for (long c : {27L, 36L, 87L, 744L}) {
            if (c < from || c > to) continue;
            bool found = std::any_of(report.violations.begin(), report.violations.end(),
                                     [&](const Violation& v) { return v.point.n == c; });
            subset = subset && found;
        }
        params["paper_counterexamples"] = {27, 36, 87, 744};
        params["paper_counterexamples_subset"] = subset;
    } else if (check_id == "prop-bounds") {
        if (from < 2600) throw std::out_of_range("prop-bounds: asserted only for n >= 2600");
        table.extend_to(to + 1);
        for (long n = from; n <= to; ++n) {
            CheckEval eval = certify_sandwich(
                [&](Precision p) { return d_exact(n, table, p); },
                [&](Precision p) { return p2_bounds_simple(n, p); }, options.prec);
            classify({n, std::nullopt}, eval);
        }
    } else if (check_id == "lemma-t1") {
        if (from < 50) throw std::out_of_range("lemma-t1: asserted only for n >= 50");
        for (long n = from; n <= to; ++n) {
            CheckEval eval = certify_sandwich(
                [&](Precision p) {
                    Enclosure t1 = sub(mul_2si(log_T_closed(n, p), 1),
                                       add(log_T_closed(n - 1, p),
                                           log_T_closed(n + 1, p), p),
                                       p);
                    return t1;
                },
                [&](Precision p) { return t1_bounds(n, p); }, options.prec);
            classify({n, std::nullopt}, eval);
        }
    } else if (check_id == "lemma-ratio") {
        if (from < 10) throw std::out_of_range("lemma-ratio: asserted only for n >= 10");
        for (long n = from; n <= to; ++n) {
            auto margin_at = [&](Precision p) {
                Enclosure ratio = div(bound_R(n, p), big_T(n, p), p);
                return sub(y_ratio_bound(n, p), ratio, p);
            };
            classify({n, std::nullopt},
                     resolve_sign(margin_at, options.prec, /*zero_holds=*/false));
        }
    } else {
        throw std::invalid_argument("scan: unknown check id '" + check_id + "'");
    }

    report.parameters_json = params.dump();
    report.passed = report.violations.empty() && report.indeterminate.empty();
    return report;
}

std::string CheckReport::to_json_string() const {
    nlohmann::json j;
    j["check_id"] = check_id;
    j["range"] = {{"from", from}, {"to", to}};
    j["parameters"] = nlohmann::json::parse(parameters_json);
    nlohmann::json viols = nlohmann::json::array();
    for (const Violation& v : violations) {
        nlohmann::json pt;
        if (v.point.m) {
            pt = nlohmann::json::array({v.point.n, *v.point.m});
        } else {
            pt = v.point.n;
        }
        viols.push_back({{"point", pt},
                         {"margin_lo", v.margin_lo},
                         {"margin_hi", v.margin_hi}});
    }
    j["violations"] = viols;
    nlohmann::json indet = nlohmann::json::array();
    for (const CheckPoint& pt : indeterminate) {
        if (pt.m) {
            indet.push_back(nlohmann::json::array({pt.n, *pt.m}));
        } else {
            indet.push_back(pt.n);
        }
    }
    j["indeterminate"] = indet;
    j["passed"] = passed;
    j["tool_version"] = tool_version;
    j["precision_bits"] = static_cast<long>(precision_bits);
    return j.dump(2) + "\n";
}

}  // namespace partcert
