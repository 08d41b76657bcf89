// Pentagonal recurrence vs the DP oracle, table persistence, and the
// classical small-n facts.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "partcert/partition.hpp"

using namespace partcert;

TEST_CASE("small values") {
    PartitionTable t;
    CHECK(p_exact(0, t) == 1);
    CHECK(p_exact(1, t) == 1);
    CHECK(p_exact(4, t) == 5);
    CHECK(p_exact(5, t) == 7);
    CHECK(p_exact(10, t) == 42);
    CHECK(p_exact(24, t) == 1575);
    CHECK(p_exact(25, t) == 1958);
    CHECK(p_exact(26, t) == 2436);
    CHECK(p_exact(50, t) == 204226);
    CHECK(p_exact(100, t) == 190569292);
    CHECK(p_exact(1000, t) == mpz_class("24061467864032622473692149727991"));
}

TEST_CASE("oracle agreement and monotonicity") {
    PartitionTable t;
    t.extend_to(600);
    auto oracle = p_brute_upto(600);
    for (long n = 0; n <= 600; ++n) {
        CHECK(t.at(n) == oracle[static_cast<std::size_t>(n)]);
    }
    for (long n = 1; n < 600; ++n) {
        CHECK(t.at(n + 1) >= t.at(n));
    }
}

TEST_CASE("p_brute examples and ceiling") {
    CHECK(p_brute(4) == 5);
    CHECK(p_brute(10) == 42);
    CHECK(p_brute(100) == 190569292);
    CHECK_THROWS_AS(p_brute(2001), std::out_of_range);
    CHECK(p_brute(2001, 2500) > 0);  // raised ceiling admits it
}

TEST_CASE("log-concavity failure pattern on [1, 400]") {
    PartitionTable t;
    t.extend_to(401);
    for (long n = 1; n <= 400; ++n) {
        mpz_class lhs = t.at(n) * t.at(n);
        mpz_class rhs = t.at(n - 1) * t.at(n + 1);
        bool fails = lhs < rhs;
        bool expect_fail = (n % 2 == 1 && n <= 25);
        CHECK(fails == expect_fail);
    }
}

TEST_CASE("save/load round trip") {
    PartitionTable t;
    t.extend_to(40);
    std::ostringstream out;
    t.save(out);
    std::istringstream in(out.str());
    PartitionTable back = PartitionTable::load(in);
    REQUIRE(back.n_max() == 40);
    for (long n = 0; n <= 40; ++n) CHECK(back.at(n) == t.at(n));

    // byte-exactness of the format
    std::istringstream lines(out.str());
    std::string first;
    std::getline(lines, first);
    CHECK(first == "0 1");
}

TEST_CASE("load rejects malformed tables") {
    {
        std::istringstream in("0 1\n2 2\n");  // gap: missing n=1
        CHECK_THROWS_AS(PartitionTable::load(in), TableParseError);
    }
    {
        std::istringstream in("");
        CHECK_THROWS_AS(PartitionTable::load(in), TableParseError);
    }
    {
        std::istringstream in("0 1\n1 x\n");
        CHECK_THROWS_AS(PartitionTable::load(in), TableParseError);
    }
    {
        std::istringstream in("0 2\n");  // p(0) must be 1
        CHECK_THROWS_AS(PartitionTable::load(in), TableParseError);
    }
    // the error message names the first bad line
    try {
        std::istringstream in("0 1\n1 1\nbroken\n");
        PartitionTable::load(in);
        CHECK(false);
    } catch (const TableParseError& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}

TEST_CASE("file round trip") {
    PartitionTable t;
    t.extend_to(12);
    std::string path = "partcert_test_table.txt";
    t.save_file(path);
    PartitionTable back = PartitionTable::load_file(path);
    CHECK(back.n_max() == 12);
    CHECK(back.at(12) == 77);
    std::remove(path.c_str());
}
