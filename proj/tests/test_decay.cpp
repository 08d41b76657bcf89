// Decay series: exact D(n) signs, the normalized plot values, h1/h2, and the
// even-order Taylor correctors.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "partcert/decay.hpp"
#include "partcert/partition.hpp"

using namespace partcert;

namespace {

PartitionTable& shared_table() {
    static PartitionTable table;
    return table;
}

}  // namespace

TEST_CASE("d_exact signs at the published boundary") {
    PartitionTable& t = shared_table();
    CHECK(d_exact(26, t, 128).is_positive());
    CHECK(d_exact(25, t, 128).is_negative());
    CHECK(d_exact(2, t, 128).is_positive());
    // D(2) = log(4/3)
    CHECK(d_exact(2, t, 128).contains(
        Enclosure::from_decimal("0.287682072451780927439219006", 200).midpoint()));
    CHECK_THROWS_AS(d_exact(1, t, 128), std::domain_error);
}

TEST_CASE("normalized decay approaches 1 from the published side") {
    PartitionTable& t = shared_table();
    Enclosure n2000 = normalized_decay(2000, t, 128);
    CHECK(n2000.contains(
        Enclosure::from_decimal("0.965391434332296728137523", 200).midpoint()));
    Enclosure dist2000 = abs(sub(n2000, Enclosure::from_long(1)));
    CHECK(certainly_less(dist2000, Enclosure::from_ratio(5, 100)));

    Enclosure dist200 = abs(sub(normalized_decay(200, t, 128), Enclosure::from_long(1)));
    CHECK(certainly_less(dist2000, dist200));

    CHECK(normalized_decay(26, t, 128).is_positive());
}

TEST_CASE("h terms") {
    Enclosure x100 = Enclosure::from_long(100, 128);
    auto [h1, h2] = h_terms(x100, 128);
    CHECK(h2.is_negative());
    // |h2/h1| < 0.1 at x = 100
    Enclosure ratio = abs(div(h2, h1));
    CHECK(certainly_less(ratio, Enclosure::from_ratio(1, 10)));

    // h1(2000) tracks D(2000) within 5 percent (the corrected constant);
    // the paper-printed 4/(C x^{3/2}) constant would be off by ~2.5x.
    PartitionTable& t = shared_table();
    Enclosure d2000 = d_exact(2000, t, 128);
    auto [h1b, h2b] = h_terms(Enclosure::from_long(2000, 128), 128);
    Enclosure rel = abs(sub(div(d2000, h1b), Enclosure::from_long(1)));
    CHECK(certainly_less(rel, Enclosure::from_ratio(5, 100)));

    CHECK_THROWS_AS(h_terms(Enclosure::from_long(1), 128), std::domain_error);
}

TEST_CASE("L expansion identities and fit ordering") {
    PartitionTable& t = shared_table();
    // L_0^- = h1(n)
    for (long n : {500L, 2000L}) {
        Enclosure l0m = L_expansion(n, 0, LSign::minus, 128);
        auto [h1, h2] = h_terms(Enclosure::from_long(n, 128), 128);
        CHECK(l0m.intersects(h1));
    }
    // |D(2000) - L_1^+| < |D(2000) - L_0^-|
    Enclosure d = d_exact(2000, t, 128);
    Enclosure e_l1p = abs(sub(d, L_expansion(2000, 1, LSign::plus, 128)));
    Enclosure e_l0m = abs(sub(d, L_expansion(2000, 0, LSign::minus, 128)));
    CHECK(certainly_less(e_l1p, e_l0m));

    // minus-chain improvement at the sampled n
    for (long n : {500L, 1000L, 2000L}) {
        Enclosure dn = d_exact(n, t, 128);
        Enclosure e0 = abs(sub(dn, L_expansion(n, 0, LSign::minus, 128)));
        Enclosure e1 = abs(sub(dn, L_expansion(n, 1, LSign::minus, 128)));
        CHECK(certainly_less(e1, e0));
    }

    // D(n)/L_k -> 1 trend for k <= 2: relative error shrinks along
    // n = 500, 1000, 2000 for both signs.
    for (int k = 0; k <= 2; ++k) {
        for (LSign sign : {LSign::plus, LSign::minus}) {
            Enclosure prev = Enclosure::from_long(1);
            bool first = true;
            for (long n : {500L, 1000L, 2000L}) {
                Enclosure dn = d_exact(n, t, 128);
                Enclosure rel = abs(sub(div(dn, L_expansion(n, k, sign, 128)),
                                        Enclosure::from_long(1)));
                if (!first) CHECK(certainly_less(rel, prev));
                prev = rel;
                first = false;
            }
        }
    }

    CHECK_THROWS_AS(L_expansion(100, kLOrderCap + 1, LSign::plus, 128),
                    std::invalid_argument);
}

TEST_CASE("figure1_series shape and consistency") {
    PartitionTable& t = shared_table();
    auto samples = figure1_series(2, 10, t, 128);
    REQUIRE(samples.size() == 9);
    CHECK(samples.front().n == 2);
    CHECK(samples.back().n == 10);

    // odd n <= 25 rows are negative
    auto wide = figure1_series(2, 30, t, 128);
    for (const auto& s : wide) {
        if (s.n % 2 == 1 && s.n <= 25) {
            CHECK(s.normalized.is_negative());
        }
    }

    // the n = 2000 sample equals normalized_decay(2000)
    auto tail = figure1_series(2000, 2000, t, 128);
    REQUIRE(tail.size() == 1);
    Enclosure direct = normalized_decay(2000, t, 128);
    CHECK(tail[0].normalized.intersects(direct));

    CHECK_THROWS_AS(figure1_series(5, 2, t, 128), std::domain_error);
    CHECK_THROWS_AS(figure1_series(1, 10, t, 128), std::domain_error);
}

TEST_CASE("convergence band for n >= 500") {
    PartitionTable& t = shared_table();
    // |normalized - 1| < 0.10 across [500, 2100], spot checks beyond
    for (long n = 500; n <= 2100; n += (n < 600 ? 1 : 25)) {
        Enclosure dist = abs(sub(normalized_decay(n, t, 128), Enclosure::from_long(1)));
        CAPTURE(n);
        CHECK(certainly_less(dist, Enclosure::from_ratio(1, 10)));
    }
    for (long n : {3000L, 5000L}) {
        Enclosure dist = abs(sub(normalized_decay(n, t, 128), Enclosure::from_long(1)));
        CHECK(certainly_less(dist, Enclosure::from_ratio(1, 10)));
    }
}
