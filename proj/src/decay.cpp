#include "partcert/decay.hpp"

#include "partcert/hr_series.hpp"

namespace partcert {

Enclosure d_exact(long n, PartitionTable& table, Precision prec) {
    if (n < 2) throw std::domain_error("d_exact: n must be >= 2");
    table.extend_to(n + 1);
    Enclosure lm = log(Enclosure::from_integer(table.at(n - 1)), prec);
    Enclosure l0 = log(Enclosure::from_integer(table.at(n)), prec);
    Enclosure lp = log(Enclosure::from_integer(table.at(n + 1)), prec);
    return sub(mul_2si(l0, 1), add(lm, lp, prec), prec);
}

Enclosure normalized_decay(long n, PartitionTable& table, Precision prec) {
    Enclosure d = d_exact(n, table, prec);
    Enclosure ne = Enclosure::from_long(n, prec);
    Enclosure n32 = mul(ne, sqrt(ne, prec), prec);
    Enclosure denom = div(pi_const(prec),
                          sqrt(Enclosure::from_long(24, prec), prec), prec);
    return div(mul(n32, d, prec), denom, prec);
}

std::pair<Enclosure, Enclosure> h_terms(const Enclosure& x, Precision prec) {
    if (mpfr_cmp_si(x.lo(), 1) <= 0) throw std::domain_error("h_terms: x must be > 1");
    Enclosure c_over_4 = mul_2si(hr_constants(prec).C, -2);
    Enclosure x32 = mul(x, sqrt(x, prec), prec);
    Enclosure h1 = div(c_over_4, x32, prec);
    Enclosure u = sub(mul(Enclosure::from_long(24, prec), x, prec),
                      Enclosure::from_long(1, prec), prec);
    Enclosure h2 = neg(div(Enclosure::from_long(288, prec), mul(u, u, prec), prec));
    return {h1, h2};
}

namespace {

// sum_{j = 0, 2, ..., 2k} h1^(j)(n)/j!  =  (C/4) sqrt(n) * S  with the exact
// rational S = sum_j c_j / n^(2+j), where c_j = falling(-3/2, j)/j!.
Enclosure h1_even_taylor(long n, int k, Precision prec) {
    mpq_class c(1);  // c_0
    mpq_class npow(1, mpz_class(n) * n);  // 1/n^2
    mpq_class s(0);
    for (int j = 0; j <= 2 * k; j += 2) {
        if (j > 0) {
            // c_{j} = c_{j-2} * (a-j+2)(a-j+1) / ((j-1) j),  a = -3/2
            mpq_class f1 = mpq_class(-3, 2) - (j - 2);
            mpq_class f2 = mpq_class(-3, 2) - (j - 1);
            c *= f1 * f2 / (mpq_class(j - 1) * j);
            npow /= mpz_class(n) * n;  // 1/n^(2+j)
        }
        s += c * npow;
    }
    s.canonicalize();
    Enclosure c_over_4 = mul_2si(hr_constants(prec).C, -2);
    Enclosure root = sqrt(Enclosure::from_long(n, prec), prec);
    return mul(mul(c_over_4, root, prec), Enclosure::from_mpq(s, prec), prec);
}

// sum_{j = 0, 2, ..., 2k} h2^(j)(n)/j!  (exact rational; empty sum for k < 0):
// h2^(j)(x)/j! = -288 (j+1) 24^j (24x - 1)^(-2-j).
Enclosure h2_even_taylor(long n, int k, Precision prec) {
    mpq_class s(0);
    if (k >= 0) {
        mpz_class u = 24 * mpz_class(n) - 1;
        mpz_class u_pow = u * u;      // u^(2+j)
        mpz_class scale = 1;          // 24^j
        for (int j = 0; j <= 2 * k; j += 2) {
            if (j > 0) {
                u_pow *= u * u;
                scale *= 24 * 24;
            }
            s -= mpq_class(288 * (j + 1) * scale, u_pow);
        }
        s.canonicalize();
    }
    return Enclosure::from_mpq(s, prec);
}

}  // namespace

Enclosure L_expansion(long n, int k, LSign sign, Precision prec) {
    if (n < 2) throw std::domain_error("L_expansion: n must be >= 2");
    if (k < 0 || k > kLOrderCap) {
        throw std::invalid_argument("L_expansion: order k above derivative cap");
    }
    Enclosure h1 = h1_even_taylor(n, k, prec);
    Enclosure h2 = h2_even_taylor(n, sign == LSign::plus ? k : k - 1, prec);
    return add(h1, h2, prec);
}

std::vector<DecaySample> figure1_series(long n_from, long n_to,
                                        PartitionTable& table, Precision prec) {
    if (n_from < 2 || n_from > n_to) {
        throw std::domain_error("figure1_series: need 2 <= n_from <= n_to");
    }
    table.extend_to(n_to + 1);
    std::vector<DecaySample> out;
    out.reserve(static_cast<std::size_t>(n_to - n_from + 1));
    for (long n = n_from; n <= n_to; ++n) {
        Enclosure d = d_exact(n, table, prec);
        Enclosure ne = Enclosure::from_long(n, prec);
        Enclosure n32 = mul(ne, sqrt(ne, prec), prec);
        Enclosure denom = div(pi_const(prec),
                              sqrt(Enclosure::from_long(24, prec), prec), prec);
        out.push_back({n, d, div(mul(n32, d, prec), denom, prec)});
    }
    return out;
}

}  // namespace partcert
