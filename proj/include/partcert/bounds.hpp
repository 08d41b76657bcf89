// Closed-form sandwich bounds: the generic second-difference lemma on a fixed
// function catalog, the T_1(n) bounds, the remainder/ratio bounds, the p_2 and
// q_2 sandwiches, the classical p(m) bounds, and the strong-log-concavity gap
// function.

#pragma once

#include <string>

#include "partcert/enclosure.hpp"

namespace partcert {

// A certified (lower, upper) pair sandwiching the quantity tagged target_id
// from the stated n on.  The pair may be loose; containment of the true value
// is what the verification scans certify.
struct BoundPair {
    Enclosure lower;
    Enclosure upper;
    std::string target_id;
    long valid_from = 0;
};

// Fixed catalog of functions admissible in the second-difference lemma.
// Hypotheses (f' > 0 decreasing, f'' < 0 increasing -- or the mirrored convex
// case) are hand-verified on x > min_x; arbitrary callables are not accepted.
enum class CatalogFn {
    log_x,            // f'' = -1/x^2
    sqrt_x,           // f'' = -1/(4 x^(3/2))
    mu_x,             // mu(x) = (pi/6) sqrt(24x - 1); f'' = -24 pi (24x-1)^(-3/2)
    log_mu_minus_1,   // log(mu(x) - 1)
    neg3_log_mu,      // -3 log mu(x): convex, f'' > 0 decreasing
};

// Smallest x for which both x-1 and x+1 are inside the entry's domain.
double catalog_min_x(CatalogFn f);

// Second derivative f''(x) as an enclosure.
Enclosure catalog_second_derivative(CatalogFn f, const Enclosure& x,
                                    Precision prec = default_precision());

// f(x+1) - 2 f(x) + f(x-1) as an enclosure (for the property tests).
Enclosure catalog_second_difference(CatalogFn f, const Enclosure& x,
                                    Precision prec = default_precision());

// The lemma's sandwich: the second difference of f at x lies strictly between
// the returned pair (ordered so lower < upper for both the concave and the
// mirrored convex entries).  Requires x > max(1, catalog_min_x(f)).
BoundPair second_diff_bounds(CatalogFn f, const Enclosure& x,
                             Precision prec = default_precision());

// T_1(n) sandwich, n >= 50:
//   24 pi/(24(n+1)-1)^(3/2) - 3/n^2 < T_1(n) < 24 pi/(24(n-1)-1)^(3/2) + e^(-C sqrt(n)/10)
BoundPair t1_bounds(long n, Precision prec = default_precision());

// 1 + (16/mu^3) e^(mu/2), an upper bound for |R(n)| = |p(n) - T(n)|, n >= 2.
Enclosure bound_R(long n, Precision prec = default_precision());

// e^(-C sqrt(n)/10), the bound on |R(n)|/T(n) asserted for n >= 10.
Enclosure y_ratio_bound(long n, Precision prec = default_precision());

// Explicit p_2(n) sandwich, n >= 50 (T_1 bounds widened by 2 e^(-C sqrt(n)/10)).
BoundPair p2_bounds_explicit(long n, Precision prec = default_precision());

// Simple sandwich 1/(24n)^(3/2) < p_2(n) < 2/n^(3/2), asserted for n >= 2600.
BoundPair p2_bounds_simple(long n, Precision prec = default_precision());

// q_2(n) sandwich for q(n) = p(n)/n, n >= 50: explicit lower minus 1/(n+1)^2,
// explicit upper unchanged.
BoundPair q2_bounds(long n, Precision prec = default_precision());

// e^(2 sqrt(m)) / (2 pi m e^(1/(6m))) < p(m) < e^(C sqrt(m)), m >= 1.
BoundPair classical_p_bounds(long m, Precision prec = default_precision());

// 4 sqrt(m+1) - 2 log(m+1) - 1/(3(m+1)) - 2 log(2 pi) - log 2000 - C sqrt(m+25).
// Positivity certifies the small-case reduction of strong log-concavity at m.
Enclosure thm51_gap(long m, Precision prec = default_precision());

}  // namespace partcert
