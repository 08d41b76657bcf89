// Exact second log-differences D(n) = 2 log p(n) - log p(n-1) - log p(n+1),
// the normalized decay series behind the n^(3/2) D(n) / (pi/sqrt(24)) plot,
// and the even-order Taylor correctors L_k^+/-.

#pragma once

#include <utility>
#include <vector>

#include "partcert/enclosure.hpp"
#include "partcert/partition.hpp"

namespace partcert {

struct DecaySample {
    long n;
    Enclosure d_value;     // D(n) from exact table values
    Enclosure normalized;  // n^(3/2) D(n) / (pi / sqrt(24))
};

// D(n), n >= 2, from certified logs of the exact integers.
Enclosure d_exact(long n, PartitionTable& table, Precision prec = default_precision());

// n^(3/2) D(n) / (pi/sqrt(24)); the denominator equals C/4, so this tends to 1.
Enclosure normalized_decay(long n, PartitionTable& table,
                           Precision prec = default_precision());

// h1(x) = (C/4) x^(-3/2) and h2(x) = -288/(24x - 1)^2, x > 1.
// (The leading constant is the one consistent with the D(n) * 4 n^(3/2)/C -> 1
// normalization; see the project README for the discrepancy note.)
std::pair<Enclosure, Enclosure> h_terms(const Enclosure& x,
                                        Precision prec = default_precision());

enum class LSign { plus, minus };

// Even-order Taylor caps: derivatives are closed forms up to order 6 (k <= 3).
inline constexpr int kLOrderCap = 3;

// L_k^+(n): even-order terms 0..2k of the Taylor expansions of h1 and h2
// about x0 = n, evaluated with unit step (the expansion of h(n+1)).
// L_k^-(n): h1 terms through order 2k plus h2 terms through order 2(k-1);
// L_0^-(n) = h1(n).
Enclosure L_expansion(long n, int k, LSign sign,
                      Precision prec = default_precision());

// Per-n samples for n_from..n_to (inclusive), ascending.
std::vector<DecaySample> figure1_series(long n_from, long n_to,
                                        PartitionTable& table,
                                        Precision prec = default_precision());

}  // namespace partcert
