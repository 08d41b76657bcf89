// Sandwich bounds: the second-difference lemma over the function catalog,
// T_1/p_2/q_2 bounds against exact evaluations, classical p(m) bounds, and
// the strong-log-concavity gap function.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "partcert/bounds.hpp"
#include "partcert/decay.hpp"
#include "partcert/hr_series.hpp"
#include "partcert/partition.hpp"

using namespace partcert;

namespace {

Enclosure t1_of(long n, Precision prec) {
    return sub(mul_2si(log_T_closed(n, prec), 1),
               add(log_T_closed(n - 1, prec), log_T_closed(n + 1, prec), prec), prec);
}

bool strictly_inside(const Enclosure& mid, const BoundPair& pair) {
    return certainly_less(pair.lower, mid) && certainly_less(mid, pair.upper);
}

}  // namespace

TEST_CASE("second difference examples") {
    // f = log, x = 2: log(3) - 2 log(2) + log(1) = log(3/4) in (-1, -1/9)
    BoundPair p = second_diff_bounds(CatalogFn::log_x, Enclosure::from_long(2), 128);
    Enclosure sd = catalog_second_difference(CatalogFn::log_x, Enclosure::from_long(2), 128);
    CHECK(sd.contains(Enclosure::from_decimal("-0.28768207245178092743921", 200)));
    CHECK(p.lower.contains(mpz_class(-1)));
    CHECK(p.upper.contains(mpq_class(-1, 9)));
    CHECK(strictly_inside(sd, p));

    // f = sqrt, x = 4: sqrt(5) - 4 + sqrt(3) in (-1/(4*3^1.5), -1/(4*5^1.5))
    BoundPair ps = second_diff_bounds(CatalogFn::sqrt_x, Enclosure::from_long(4), 128);
    Enclosure sds = catalog_second_difference(CatalogFn::sqrt_x, Enclosure::from_long(4), 128);
    CHECK(sds.contains(Enclosure::from_decimal("-0.031881214931333010063380", 200)));
    CHECK(strictly_inside(sds, ps));

    // f = log, x = 100: the section-6 instance with (-1/99^2, -1/101^2)
    BoundPair p100 = second_diff_bounds(CatalogFn::log_x, Enclosure::from_long(100), 128);
    CHECK(p100.lower.contains(mpq_class(-1, 99 * 99)));
    CHECK(p100.upper.contains(mpq_class(-1, 101 * 101)));
    Enclosure sd100 = catalog_second_difference(CatalogFn::log_x, Enclosure::from_long(100), 128);
    CHECK(strictly_inside(sd100, p100));
}

TEST_CASE("second difference domain errors") {
    CHECK_THROWS_AS(second_diff_bounds(CatalogFn::log_x, Enclosure::from_long(1), 128),
                    std::domain_error);
    CHECK_THROWS_AS(
        second_diff_bounds(CatalogFn::log_mu_minus_1, Enclosure::from_decimal("1.1", 64), 128),
        std::domain_error);
}

TEST_CASE("second difference sandwich over the catalog, randomized") {
    std::mt19937 rng(424242);
    std::uniform_real_distribution<double> x_dist(0.0, 1.0);
    const CatalogFn fns[] = {CatalogFn::log_x, CatalogFn::sqrt_x, CatalogFn::mu_x,
                             CatalogFn::log_mu_minus_1, CatalogFn::neg3_log_mu};
    for (CatalogFn f : fns) {
        double min_x = std::max(catalog_min_x(f), 1.0) + 1.0 / 32.0;
        for (int i = 0; i < 200; ++i) {
            // log-spaced samples in (min_x, 1e4)
            double t = x_dist(rng);
            double x = min_x * std::pow(1e4 / min_x, t);
            Enclosure xe = Enclosure::from_decimal(std::to_string(x), 128);
            BoundPair pair = second_diff_bounds(f, xe, 128);
            Enclosure sd = catalog_second_difference(f, xe, 128);
            CAPTURE(static_cast<int>(f));
            CAPTURE(x);
            CHECK(strictly_inside(sd, pair));
        }
    }
}

TEST_CASE("t1_bounds sandwich T_1(n)") {
    for (long n : {50L, 321L, 2600L}) {
        BoundPair pair = t1_bounds(n, 128);
        CHECK(strictly_inside(t1_of(n, 128), pair));
    }
    CHECK(t1_bounds(50, 128).lower.is_positive());
    CHECK_THROWS_AS(t1_bounds(49, 128), std::out_of_range);
}

TEST_CASE("bound_R dominates |p - T|") {
    PartitionTable table;
    for (long n : {2L, 100L, 1000L}) {
        Enclosure mid = big_T(n, 256).midpoint();
        Enclosure diff = abs(sub(Enclosure::from_integer(p_exact(n, table)), mid));
        CHECK(mpfr_cmp(diff.hi(), bound_R(n, 256).hi()) < 0);
    }
    // decay scale at n = 1000: bound_R/T < e^{-C sqrt(1000)/10}
    Enclosure ratio = div(bound_R(1000, 128), big_T(1000, 128));
    CHECK(certainly_less(ratio, y_ratio_bound(1000, 128)));
}

TEST_CASE("y_ratio_bound frozen values") {
    CHECK(y_ratio_bound(10, 128).contains(
        Enclosure::from_decimal("0.444344225088488753654161", 200).midpoint()));
    Enclosure y100 = y_ratio_bound(100, 128);
    CHECK(y100.contains(Enclosure::from_decimal("0.0769115160332859879705744", 200).midpoint()));
    CHECK(certainly_less(y_ratio_bound(2600, 128), Enclosure::from_ratio(5, 1000000)));
    CHECK(certainly_less(y_ratio_bound(10, 128), Enclosure::from_ratio(1, 2)));
}

TEST_CASE("p2 explicit and simple sandwiches against exact p_2") {
    PartitionTable table;
    for (long n : {2600L, 10000L}) {
        Enclosure p2 = d_exact(n, table, 192);
        CHECK(strictly_inside(p2, p2_bounds_explicit(n, 192)));
        CHECK(strictly_inside(p2, p2_bounds_simple(n, 192)));
    }
    // Proposition 2.4 reduction at n = 2600: explicit lower beats 1/(24n)^1.5
    BoundPair expl = p2_bounds_explicit(2600, 128);
    BoundPair simp = p2_bounds_simple(2600, 128);
    CHECK(certainly_less(simp.lower, expl.lower));
    CHECK_THROWS_AS(p2_bounds_simple(2599, 128), std::out_of_range);
    CHECK_THROWS_AS(p2_bounds_explicit(49, 128), std::out_of_range);
}

TEST_CASE("q2 sandwich against exact q_2") {
    PartitionTable table;
    for (long n : {2600L, 10000L}) {
        // q_2(n) = p_2(n) - log(n^2 / ((n-1)(n+1)))
        Enclosure corr = log(Enclosure::from_ratio(mpz_class(n) * n,
                                                   mpz_class(n - 1) * (n + 1), 192));
        Enclosure q2 = sub(d_exact(n, table, 192), corr, 192);
        CHECK(strictly_inside(q2, q2_bounds(n, 192)));
    }
    CHECK(q2_bounds(2600, 128).lower.is_positive());
    CHECK_THROWS_AS(q2_bounds(49, 128), std::out_of_range);
}

TEST_CASE("classical p bounds") {
    PartitionTable table;
    for (long m : {1L, 25L, 1000L}) {
        BoundPair b = classical_p_bounds(m, 128);
        Enclosure pm = Enclosure::from_integer(p_exact(m, table));
        CHECK(certainly_less(b.lower, pm));
        CHECK(certainly_less(pm, b.upper));
    }
    // upper at m=1 is e^C, about 13.0
    Enclosure up1 = classical_p_bounds(1, 128).upper;
    CHECK(certainly_less(Enclosure::from_decimal("12.9", 64), up1));
    CHECK(certainly_less(up1, Enclosure::from_decimal("13.1", 64)));
}

TEST_CASE("thm51_gap signs and the first positive m") {
    CHECK(thm51_gap(300, 128).is_positive());
    CHECK(thm51_gap(2, 128).is_negative());
    long first_positive = 0;
    for (long m = 1; m <= 300; ++m) {
        Sign s = thm51_gap(m, 128).sign();
        REQUIRE(s != Sign::unknown);
        if (s == Sign::positive) {
            first_positive = m;
            break;
        }
    }
    CHECK(first_positive == 288);  // derived regression value
    CHECK(thm51_gap(287, 128).is_negative());
}
