// Hardy-Ramanujan / Rademacher series machinery.
//
// Certified evaluation of mu(n) = (pi/6) sqrt(24n - 1), the dominant term
//   T(n) = (sqrt(12)/(24n-1)) [ (1 - 1/mu) e^mu + ((-1)^n/sqrt(2)) e^(mu/2) ],
// Lehmer's strict truncation bound
//   |R_2(n,N)| < (pi^2 N^(-2/3)/sqrt(3)) [ (N/mu)^3 sinh(mu/N) + 1/6 - (N/mu)^2 ],
// the coefficients A_k^*(n) (exact for k = 1, 2; Dedekind-sum cosine sum in
// general), certified p(n) enclosures from the truncated series, and exact
// p(n) recovery by shrinking the certified window.

#pragma once

#include <gmpxx.h>

#include <stdexcept>

#include "partcert/enclosure.hpp"
#include "partcert/partition.hpp"

namespace partcert {

struct ResolutionError : std::runtime_error {
    explicit ResolutionError(const std::string& what) : std::runtime_error(what) {}
};

// C = pi sqrt(2/3) and d = pi^2 / (6 sqrt(3)).
struct HRConstants {
    Enclosure C;
    Enclosure d;
};

HRConstants hr_constants(Precision prec = default_precision());

// mu(n) = (pi/6) sqrt(24n - 1), n >= 1.
Enclosure mu(long n, Precision prec = default_precision());

// Dominant three-contribution term T(n), n >= 1.
Enclosure big_T(long n, Precision prec = default_precision());

// x_n = (-1)^n e^(-mu/2) mu^3 / (d sqrt(2) (mu - 1)), n >= 2.
Enclosure x_term(long n, Precision prec = default_precision());

// log T(n) in closed form:
//   log d + mu + log(mu - 1) - 3 log mu + log(1 + x_n),  n >= 2.
// Throws std::domain_error when the 1 + x_n enclosure touches zero.
Enclosure log_T_closed(long n, Precision prec = default_precision());

// Lehmer's bound on |R_2(n, N)|, valid for all n, N >= 1.
Enclosure lehmer_R2_bound(long n, long N, Precision prec = default_precision());

// Dedekind sum s(h, k), exact rational; requires gcd(h,k) = 1, 0 <= h < k.
// Computed by the reciprocity-based Euclidean descent.
mpq_class dedekind_sum(unsigned long h, unsigned long k);

// Enclosure of cos(pi * r) for an exact rational r (reduced mod 2 exactly).
Enclosure cos_pi_rational(const mpq_class& r, Precision prec = default_precision());

// A_k(n) = sum_{h mod k, gcd(h,k)=1} cos(pi s(h,k) - 2 pi h n / k): the
// standard Rademacher coefficient, as an enclosure.
Enclosure a_k_standard(long n, unsigned long k, Precision prec = default_precision());

// A_k^*(n) = A_k(n) / sqrt(k); [1,1] for k = 1 and (-1)^n/sqrt(2) for k = 2.
Enclosure a_k_star(long n, unsigned long k, Precision prec = default_precision());

// k-th summand of the truncated series.
struct SeriesTerm {
    unsigned long k;
    Enclosure a_k_star;
    Enclosure value;  // (1 - k/mu) e^(mu/k) + (1 + k/mu) e^(-mu/k)
};

SeriesTerm series_term(long n, unsigned long k, Precision prec = default_precision());

// Certified enclosure of p(n): partial sum over k <= N widened both ways by
// lehmer_R2_bound(n, N).hi.
Enclosure rademacher_enclosure(long n, long N, Precision prec = default_precision());

// Exact p(n) from the series alone: grows N (from max(2, ceil(sqrt(n)/2)))
// and precision until the certified window isolates a unique integer.
// Throws ResolutionError only if the caps are exhausted (soundness bug).
mpz_class p_via_series(long n);

}  // namespace partcert
