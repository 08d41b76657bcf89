#include "partcert/bounds.hpp"

#include "partcert/hr_series.hpp"

namespace partcert {

namespace {

// u = 24x - 1 as an enclosure.
Enclosure u_of(const Enclosure& x, Precision prec) {
    return sub(mul(Enclosure::from_long(24, prec), x, prec),
               Enclosure::from_long(1, prec), prec);
}

// v^(3/2) for v >= 0.
Enclosure pow_3_2(const Enclosure& v, Precision prec) {
    return mul(v, sqrt(v, prec), prec);
}

// mu(x) = (pi/6) sqrt(24x - 1) and its first two derivatives.
Enclosure mu_of(const Enclosure& x, Precision prec) {
    return div(mul(pi_const(prec), sqrt(u_of(x, prec), prec), prec),
               Enclosure::from_long(6, prec), prec);
}

Enclosure mu_prime(const Enclosure& x, Precision prec) {
    return div(mul_2si(pi_const(prec), 1), sqrt(u_of(x, prec), prec), prec);
}

Enclosure mu_second(const Enclosure& x, Precision prec) {
    Enclosure c = mul(Enclosure::from_long(24, prec), pi_const(prec), prec);
    return neg(div(c, pow_3_2(u_of(x, prec), prec), prec));
}

// 24 pi / (24 m - 1)^(3/2) for integer m (= -mu''(m)).
Enclosure t_term(long m, Precision prec) {
    Enclosure den = pow_3_2(Enclosure::from_long(24 * m - 1, prec), prec);
    return div(mul(Enclosure::from_long(24, prec), pi_const(prec), prec), den, prec);
}

// e^(-C sqrt(n) / 10).
Enclosure exp_decay(long n, Precision prec) {
    Enclosure C = hr_constants(prec).C;
    Enclosure arg = div(mul(C, sqrt(Enclosure::from_long(n, prec), prec), prec),
                        Enclosure::from_long(10, prec), prec);
    return exp(neg(arg), prec);
}

}  // namespace

double catalog_min_x(CatalogFn f) {
    switch (f) {
        case CatalogFn::log_x:
        case CatalogFn::sqrt_x:
            return 1.0;
        case CatalogFn::mu_x:
        case CatalogFn::neg3_log_mu:
            // needs 24(x-1) - 1 > 0 (and mu(x-1) > 0)
            return 1.0 + 1.0 / 24.0 + 1.0 / 64.0;
        case CatalogFn::log_mu_minus_1:
            // needs mu(x-1) > 1, i.e. 24(x-1) - 1 > 36/pi^2
            return 1.0 + (36.0 / 9.8696 + 1.0) / 24.0 + 1.0 / 64.0;
    }
    throw std::invalid_argument("catalog_min_x: unsupported function");
}

Enclosure catalog_second_derivative(CatalogFn f, const Enclosure& x, Precision prec) {
    Enclosure one = Enclosure::from_long(1, prec);
    switch (f) {
        case CatalogFn::log_x:
            return neg(div(one, mul(x, x, prec), prec));
        case CatalogFn::sqrt_x: {
            Enclosure den = mul(Enclosure::from_long(4, prec), pow_3_2(x, prec), prec);
            return neg(div(one, den, prec));
        }
        case CatalogFn::mu_x:
            return mu_second(x, prec);
        case CatalogFn::log_mu_minus_1: {
            Enclosure m = mu_of(x, prec);
            Enclosure mp = mu_prime(x, prec);
            Enclosure ms = mu_second(x, prec);
            Enclosure m1 = sub(m, one, prec);
            Enclosure num = sub(mul(ms, m1, prec), mul(mp, mp, prec), prec);
            return div(num, mul(m1, m1, prec), prec);
        }
        case CatalogFn::neg3_log_mu: {
            Enclosure m = mu_of(x, prec);
            Enclosure mp = mu_prime(x, prec);
            Enclosure ms = mu_second(x, prec);
            Enclosure num = sub(mul(mp, mp, prec), mul(ms, m, prec), prec);
            return div(mul(Enclosure::from_long(3, prec), num, prec),
                       mul(m, m, prec), prec);
        }
    }
    throw std::invalid_argument("catalog_second_derivative: unsupported function");
}

namespace {

Enclosure catalog_value(CatalogFn f, const Enclosure& x, Precision prec) {
    switch (f) {
        case CatalogFn::log_x:
            return log(x, prec);
        case CatalogFn::sqrt_x:
            return sqrt(x, prec);
        case CatalogFn::mu_x:
            return mu_of(x, prec);
        case CatalogFn::log_mu_minus_1:
            return log(sub(mu_of(x, prec), Enclosure::from_long(1, prec), prec), prec);
        case CatalogFn::neg3_log_mu:
            return neg(mul(Enclosure::from_long(3, prec), log(mu_of(x, prec), prec), prec));
    }
    throw std::invalid_argument("catalog_value: unsupported function");
}

}  // namespace

Enclosure catalog_second_difference(CatalogFn f, const Enclosure& x, Precision prec) {
    Enclosure one = Enclosure::from_long(1, prec);
    Enclosure fp = catalog_value(f, add(x, one, prec), prec);
    Enclosure fm = catalog_value(f, sub(x, one, prec), prec);
    Enclosure f0 = catalog_value(f, x, prec);
    return sub(add(fp, fm, prec), mul_2si(f0, 1), prec);
}

BoundPair second_diff_bounds(CatalogFn f, const Enclosure& x, Precision prec) {
    if (mpfr_cmp_si(x.lo(), 1) <= 0) {
        throw std::domain_error("second_diff_bounds: requires x > 1");
    }
    if (mpfr_cmp_d(x.lo(), catalog_min_x(f)) < 0) {
        throw std::domain_error("second_diff_bounds: x below catalog entry domain");
    }
    Enclosure one = Enclosure::from_long(1, prec);
    Enclosure at_minus = catalog_second_derivative(f, sub(x, one, prec), prec);
    Enclosure at_plus = catalog_second_derivative(f, add(x, one, prec), prec);
    if (f == CatalogFn::neg3_log_mu) {
        // convex entry, f'' > 0 decreasing: sandwich order reverses
        return {at_plus, at_minus, "second_diff", 0};
    }
    return {at_minus, at_plus, "second_diff", 0};
}

BoundPair t1_bounds(long n, Precision prec) {
    if (n < 50) throw std::out_of_range("t1_bounds: asserted only for n >= 50");
    Enclosure lower = sub(t_term(n + 1, prec),
                          Enclosure::from_ratio(3, mpz_class(n) * n, prec), prec);
    Enclosure upper = add(t_term(n - 1, prec), exp_decay(n, prec), prec);
    return {lower, upper, "T1", 50};
}

Enclosure bound_R(long n, Precision prec) {
    if (n < 2) throw std::domain_error("bound_R: n must be >= 2");
    Enclosure m = mu(n, prec);
    Enclosure term = div(mul(Enclosure::from_long(16, prec),
                             exp(mul_2si(m, -1), prec), prec),
                         pow_ui(m, 3, prec), prec);
    return add(Enclosure::from_long(1, prec), term, prec);
}

Enclosure y_ratio_bound(long n, Precision prec) {
    if (n < 2) throw std::domain_error("y_ratio_bound: n must be >= 2");
    return exp_decay(n, prec);
}

BoundPair p2_bounds_explicit(long n, Precision prec) {
    if (n < 50) throw std::out_of_range("p2_bounds_explicit: asserted only for n >= 50");
    Enclosure two_decay = mul_2si(exp_decay(n, prec), 1);
    Enclosure lower = sub(sub(t_term(n + 1, prec),
                              Enclosure::from_ratio(3, mpz_class(n) * n, prec), prec),
                          two_decay, prec);
    Enclosure upper = add(t_term(n - 1, prec), two_decay, prec);
    return {lower, upper, "p2_explicit", 50};
}

BoundPair p2_bounds_simple(long n, Precision prec) {
    if (n < 2600) throw std::out_of_range("p2_bounds_simple: asserted only for n >= 2600");
    Enclosure lower = div(Enclosure::from_long(1, prec),
                          pow_3_2(Enclosure::from_long(24 * n, prec), prec), prec);
    Enclosure upper = div(Enclosure::from_long(2, prec),
                          pow_3_2(Enclosure::from_long(n, prec), prec), prec);
    return {lower, upper, "p2_simple", 2600};
}

BoundPair q2_bounds(long n, Precision prec) {
    if (n < 50) throw std::out_of_range("q2_bounds: asserted only for n >= 50");
    BoundPair p2 = p2_bounds_explicit(n, prec);
    Enclosure corr = Enclosure::from_ratio(1, mpz_class(n + 1) * (n + 1), prec);
    return {sub(p2.lower, corr, prec), p2.upper, "q2", 50};
}

BoundPair classical_p_bounds(long m, Precision prec) {
    if (m < 1) throw std::domain_error("classical_p_bounds: m must be >= 1");
    Enclosure sq = sqrt(Enclosure::from_long(m, prec), prec);
    Enclosure upper = exp(mul(hr_constants(prec).C, sq, prec), prec);
    Enclosure num = exp(mul_2si(sq, 1), prec);
    Enclosure den = mul(mul(mul_2si(pi_const(prec), 1), Enclosure::from_long(m, prec), prec),
                        exp(Enclosure::from_ratio(1, 6 * mpz_class(m), prec), prec), prec);
    return {div(num, den, prec), upper, "classical_p", 1};
}

Enclosure thm51_gap(long m, Precision prec) {
    if (m < 1) throw std::domain_error("thm51_gap: m must be >= 1");
    Enclosure m1 = Enclosure::from_long(m + 1, prec);
    Enclosure r = mul(Enclosure::from_long(4, prec), sqrt(m1, prec), prec);
    r = sub(r, mul_2si(log(m1, prec), 1), prec);
    r = sub(r, Enclosure::from_ratio(1, 3 * mpz_class(m + 1), prec), prec);
    r = sub(r, mul_2si(log(mul_2si(pi_const(prec), 1), prec), 1), prec);
    r = sub(r, log(Enclosure::from_long(2000, prec), prec), prec);
    Enclosure tail = mul(hr_constants(prec).C,
                         sqrt(Enclosure::from_long(m + 25, prec), prec), prec);
    return sub(r, tail, prec);
}

}  // namespace partcert
