#include "partcert/hr_series.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

namespace partcert {

HRConstants hr_constants(Precision prec) {
    Enclosure pi = pi_const(prec);
    Enclosure two_thirds = Enclosure::from_ratio(2, 3, prec);
    Enclosure C = mul(pi, sqrt(two_thirds, prec), prec);
    Enclosure six_sqrt3 =
        mul(Enclosure::from_long(6, prec), sqrt(Enclosure::from_long(3, prec)), prec);
    Enclosure d = div(mul(pi, pi, prec), six_sqrt3, prec);
    return {C, d};
}

Enclosure mu(long n, Precision prec) {
    if (n < 1) throw std::domain_error("mu: n must be >= 1");
    Enclosure pi = pi_const(prec);
    Enclosure arg = Enclosure::from_long(24 * n - 1, prec);
    return div(mul(pi, sqrt(arg, prec), prec), Enclosure::from_long(6, prec), prec);
}

namespace {

Enclosure inv_sqrt2(Precision prec) {
    return div(Enclosure::from_long(1, prec),
               sqrt(Enclosure::from_long(2, prec), prec), prec);
}

Enclosure parity_sign(long n, Precision prec) {
    return Enclosure::from_long(n % 2 == 0 ? 1 : -1, prec);
}

}  // namespace

Enclosure big_T(long n, Precision prec) {
    if (n < 1) throw std::domain_error("big_T: n must be >= 1");
    Enclosure one = Enclosure::from_long(1, prec);
    Enclosure m = mu(n, prec);
    Enclosure lead = mul(sub(one, div(one, m, prec), prec), exp(m, prec), prec);
    Enclosure half_exp = exp(mul_2si(m, -1), prec);
    Enclosure osc = mul(mul(parity_sign(n, prec), inv_sqrt2(prec), prec), half_exp, prec);
    Enclosure pref = div(sqrt(Enclosure::from_long(12, prec), prec),
                         Enclosure::from_long(24 * n - 1, prec), prec);
    return mul(pref, add(lead, osc, prec), prec);
}

Enclosure x_term(long n, Precision prec) {
    if (n < 2) throw std::domain_error("x_term: n must be >= 2");
    Enclosure one = Enclosure::from_long(1, prec);
    Enclosure m = mu(n, prec);
    HRConstants hc = hr_constants(prec);
    Enclosure num = mul(exp(neg(mul_2si(m, -1)), prec), pow_ui(m, 3, prec), prec);
    Enclosure den = mul(mul(hc.d, sqrt(Enclosure::from_long(2, prec), prec), prec),
                        sub(m, one, prec), prec);
    return mul(parity_sign(n, prec), div(num, den, prec), prec);
}

Enclosure log_T_closed(long n, Precision prec) {
    if (n < 2) throw std::domain_error("log_T_closed: n must be >= 2");
    Enclosure one = Enclosure::from_long(1, prec);
    Enclosure m = mu(n, prec);
    HRConstants hc = hr_constants(prec);
    // T(n) = (d (mu-1)/mu^3) e^mu (1 + x) with x the ratio of the oscillating
    // term to the dominant one: x = (-1)^n e^(-mu/2) mu / (sqrt(2) (mu-1)).
    // (x_term's mu^3/d variant is that ratio scaled by mu^2/d.)
    Enclosure num = mul(exp(neg(mul_2si(m, -1)), prec), m, prec);
    Enclosure den = mul(sqrt(Enclosure::from_long(2, prec), prec),
                        sub(m, one, prec), prec);
    Enclosure x = mul(parity_sign(n, prec), div(num, den, prec), prec);
    Enclosure one_plus_x = add(one, x, prec);
    if (mpfr_sgn(one_plus_x.lo()) <= 0) {
        throw std::domain_error("log_T_closed: 1 + x_n enclosure touches zero");
    }
    Enclosure r = add(log(hc.d, prec), m, prec);
    r = add(r, log(sub(m, one, prec), prec), prec);
    r = sub(r, mul(Enclosure::from_long(3, prec), log(m, prec), prec), prec);
    return add(r, log(one_plus_x, prec), prec);
}

Enclosure lehmer_R2_bound(long n, long N, Precision prec) {
    if (n < 1 || N < 1) throw std::domain_error("lehmer_R2_bound: n, N >= 1");
    Enclosure pi = pi_const(prec);
    Enclosure m = mu(n, prec);
    Enclosure Ne = Enclosure::from_long(N, prec);
    Enclosure ratio = div(Ne, m, prec);  // N / mu
    Enclosure bracket = mul(pow_ui(ratio, 3, prec), sinh(div(m, Ne, prec), prec), prec);
    bracket = add(bracket, Enclosure::from_ratio(1, 6, prec), prec);
    bracket = sub(bracket, pow_ui(ratio, 2, prec), prec);
    // pi^2 N^(-2/3) / sqrt(3)
    Enclosure n23 = root_ui(pow_ui(Ne, 2, prec), 3, prec);
    Enclosure pref = div(mul(pi, pi, prec),
                         mul(n23, sqrt(Enclosure::from_long(3, prec), prec), prec), prec);
    return mul(pref, bracket, prec);
}

mpq_class dedekind_sum(unsigned long h, unsigned long k) {
    if (k == 0) throw std::domain_error("dedekind_sum: k must be positive");
    if (h >= k && k != 1) throw std::domain_error("dedekind_sum: need 0 <= h < k");
    mpz_class g;
    mpz_gcd_ui(g.get_mpz_t(), mpz_class(k).get_mpz_t(), h);
    if (g != 1) throw std::domain_error("dedekind_sum: gcd(h, k) != 1");
    // Reciprocity descent: s(h,k) = -1/4 + (h/k + k/h + 1/(hk))/12 - s(k mod h, h)
    mpq_class s(0);
    int sign = 1;
    unsigned long a = h % k, b = k;
    while (b > 1) {
        mpq_class term = mpq_class(-1, 4) +
                         (mpq_class(a, b) + mpq_class(b, a) +
                          mpq_class(1, static_cast<unsigned long>(a) * b)) /
                             12;
        term.canonicalize();
        if (sign > 0) s += term; else s -= term;
        sign = -sign;
        unsigned long next = b % a;
        b = a;
        a = next;
    }
    s.canonicalize();
    return s;
}

Enclosure cos_pi_rational(const mpq_class& r, Precision prec) {
    // Reduce r into [0, 2) exactly before touching floats.
    mpq_class red = r;
    mpz_class half_turns = red.get_num() / red.get_den();  // trunc toward zero
    // force floor semantics for negatives
    if (red < 0 && half_turns * red.get_den() != red.get_num()) half_turns -= 1;
    mpz_class even_turns = half_turns - (half_turns % 2 != 0 ? 1 : 0);
    red -= mpq_class(even_turns);
    red.canonicalize();
    // red in [0, 2): theta = pi * red
    Enclosure theta = mul(pi_const(prec), Enclosure::from_mpq(red, prec), prec);

    Enclosure out(prec);
    mpfr_t c1, c2;
    mpfr_init2(c1, prec);
    mpfr_init2(c2, prec);
    mpfr_cos(c1, theta.lo(), MPFR_RNDD);
    mpfr_cos(c2, theta.hi(), MPFR_RNDD);
    mpfr_min(out.lo_mut(), c1, c2, MPFR_RNDD);
    mpfr_cos(c1, theta.lo(), MPFR_RNDU);
    mpfr_cos(c2, theta.hi(), MPFR_RNDU);
    mpfr_max(out.hi_mut(), c1, c2, MPFR_RNDU);
    mpfr_clear(c1);
    mpfr_clear(c2);

    // Widen to +-1 whenever a multiple of pi may lie inside theta.
    Enclosure q = div(theta, pi_const(prec), prec);
    mpz_class k_lo, k_hi;
    mpfr_get_z(k_lo.get_mpz_t(), q.lo(), MPFR_RNDU);
    mpfr_get_z(k_hi.get_mpz_t(), q.hi(), MPFR_RNDD);
    for (mpz_class k = k_lo; k <= k_hi; ++k) {
        if (mpz_even_p(k.get_mpz_t())) {
            mpfr_set_si(out.hi_mut(), 1, MPFR_RNDU);
        } else {
            mpfr_set_si(out.lo_mut(), -1, MPFR_RNDD);
        }
    }
    // Intersect with [-1, 1].
    if (mpfr_cmp_si(out.lo_mut(), -1) < 0) mpfr_set_si(out.lo_mut(), -1, MPFR_RNDD);
    if (mpfr_cmp_si(out.hi_mut(), 1) > 0) mpfr_set_si(out.hi_mut(), 1, MPFR_RNDU);
    return out;
}

namespace {

// A_k depends on n only through n mod k; cache by (k, n mod k, prec).
Enclosure a_k_standard_uncached(long n_mod_k, unsigned long k, Precision prec) {
    Enclosure total = Enclosure::from_long(0, prec);
    for (unsigned long h = 0; h < k; ++h) {
        mpz_class g;
        mpz_gcd_ui(g.get_mpz_t(), mpz_class(k).get_mpz_t(), h);
        if (k != 1 && (h == 0 || g != 1)) continue;
        mpq_class angle = dedekind_sum(h, k) -
                          mpq_class(2 * mpz_class(h) * n_mod_k, mpz_class(k));
        angle.canonicalize();
        total = add(total, cos_pi_rational(angle, prec), prec);
    }
    return total;
}

std::mutex g_ak_cache_mutex;
std::map<std::tuple<unsigned long, long, Precision>, Enclosure> g_ak_cache;

}  // namespace

Enclosure a_k_standard(long n, unsigned long k, Precision prec) {
    if (k == 0) throw std::domain_error("a_k_standard: k must be >= 1");
    long r = n % static_cast<long>(k);
    if (r < 0) r += static_cast<long>(k);
    if (k == 1) return Enclosure::from_long(1, prec);
    {
        std::lock_guard<std::mutex> lk(g_ak_cache_mutex);
        auto it = g_ak_cache.find({k, r, prec});
        if (it != g_ak_cache.end()) return it->second;
    }
    Enclosure v = a_k_standard_uncached(r, k, prec);
    std::lock_guard<std::mutex> lk(g_ak_cache_mutex);
    g_ak_cache.emplace(std::make_tuple(k, r, prec), v);
    return v;
}

Enclosure a_k_star(long n, unsigned long k, Precision prec) {
    if (k == 0) throw std::domain_error("a_k_star: k must be >= 1");
    if (k == 1) return Enclosure::from_long(1, prec);
    if (k == 2) {
        Enclosure v = inv_sqrt2(prec);
        return n % 2 == 0 ? v : neg(v);
    }
    return div(a_k_standard(n, k, prec),
               sqrt(Enclosure::from_long(static_cast<long>(k), prec), prec), prec);
}

SeriesTerm series_term(long n, unsigned long k, Precision prec) {
    if (n < 1 || k < 1) throw std::domain_error("series_term: n, k >= 1");
    Enclosure one = Enclosure::from_long(1, prec);
    Enclosure m = mu(n, prec);
    Enclosure ko = Enclosure::from_long(static_cast<long>(k), prec);
    Enclosure ratio = div(ko, m, prec);
    Enclosure up = mul(sub(one, ratio, prec), exp(div(m, ko, prec), prec), prec);
    Enclosure down = mul(add(one, ratio, prec), exp(neg(div(m, ko, prec)), prec), prec);
    return {k, a_k_star(n, k, prec), add(up, down, prec)};
}

Enclosure rademacher_enclosure(long n, long N, Precision prec) {
    if (n < 1 || N < 1) throw std::domain_error("rademacher_enclosure: n, N >= 1");
    Enclosure sum = Enclosure::from_long(0, prec);
    for (long k = 1; k <= N; ++k) {
        SeriesTerm t = series_term(n, static_cast<unsigned long>(k), prec);
        sum = add(sum, mul(t.a_k_star, t.value, prec), prec);
    }
    Enclosure pref = div(sqrt(Enclosure::from_long(12, prec), prec),
                         Enclosure::from_long(24 * n - 1, prec), prec);
    Enclosure partial = mul(pref, sum, prec);
    return partial.widened_by(lehmer_R2_bound(n, N, prec));
}

mpz_class p_via_series(long n) {
    if (n < 1) throw std::domain_error("p_via_series: n must be >= 1");
    // mu ~ 2.57 sqrt(n); the window cannot shrink below e^mu * 2^-prec, so
    // start with enough bits to make the first attempt plausible.
    double mu_est = 2.5651 * std::sqrt(static_cast<double>(n)) + 1.0;
    Precision prec = std::max<Precision>(
        default_precision(), static_cast<Precision>(1.45 * mu_est) + 64);
    long N = std::max<long>(
        2, static_cast<long>(std::ceil(std::sqrt(static_cast<double>(n)) / 2.0)));
    for (int attempt = 0; attempt < 24; ++attempt) {
        if (prec > kMaxPrecision) break;
        Enclosure window = rademacher_enclosure(n, N, prec);
        if (auto v = unique_integer(window)) return *v;
        N *= 2;
        prec *= 2;
    }
    throw ResolutionError("p_via_series: window failed to isolate an integer at n=" +
                          std::to_string(n));
}

}  // namespace partcert
