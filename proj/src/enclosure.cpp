#include "partcert/enclosure.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <vector>

namespace partcert {

Precision default_precision() {
    static const Precision cached = [] {
        const char* env = std::getenv("PARTCERT_PRECISION_BITS");
        if (env != nullptr && *env != '\0') {
            char* end = nullptr;
            long v = std::strtol(env, &end, 10);
            if (end != nullptr && *end == '\0' && v > 0) {
                return std::clamp<Precision>(static_cast<Precision>(v),
                                             kMinPrecision, kMaxPrecision);
            }
        }
        return Precision{128};
    }();
    return cached;
}

namespace {

Precision clamp_prec(Precision p) {
    return std::clamp<Precision>(p, kMinPrecision,
                                 MPFR_PREC_MAX > (1L << 30) ? (1L << 30)
                                                            : MPFR_PREC_MAX);
}

Precision pick(Precision out_prec, const Enclosure& a) {
    return out_prec > 0 ? clamp_prec(out_prec) : a.precision_bits();
}

Precision pick(Precision out_prec, const Enclosure& a, const Enclosure& b) {
    return out_prec > 0 ? clamp_prec(out_prec)
                        : std::max(a.precision_bits(), b.precision_bits());
}

}  // namespace

Enclosure::Enclosure() : Enclosure(default_precision()) {}

Enclosure::Enclosure(Precision prec) : prec_(clamp_prec(prec)) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Enclosure::Enclosure(const Enclosure& other) : prec_(other.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Enclosure::Enclosure(Enclosure&& other) noexcept : prec_(other.prec_) {
    mpfr_init2(lo_, kMinPrecision);
    mpfr_init2(hi_, kMinPrecision);
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
}

Enclosure& Enclosure::operator=(const Enclosure& other) {
    if (this != &other) {
        Enclosure tmp(other);
        swap(tmp);
    }
    return *this;
}

Enclosure& Enclosure::operator=(Enclosure&& other) noexcept {
    if (this != &other) {
        swap(other);
    }
    return *this;
}

Enclosure::~Enclosure() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

void Enclosure::swap(Enclosure& other) noexcept {
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
    std::swap(prec_, other.prec_);
}

Enclosure Enclosure::from_integer(const mpz_class& v, Precision prec) {
    // Raise precision until the integer is exact, so lo = hi = v.
    Precision need = std::max<Precision>(
        clamp_prec(prec),
        static_cast<Precision>(mpz_sizeinbase(v.get_mpz_t(), 2)) + 2);
    Enclosure r(need);
    mpfr_set_z(r.lo_, v.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(r.hi_, v.get_mpz_t(), MPFR_RNDU);
    return r;
}

Enclosure Enclosure::from_long(long v, Precision prec) {
    Enclosure r(std::max<Precision>(clamp_prec(prec), 66));
    mpfr_set_si(r.lo_, v, MPFR_RNDD);
    mpfr_set_si(r.hi_, v, MPFR_RNDU);
    return r;
}

Enclosure Enclosure::from_ratio(const mpz_class& num, const mpz_class& den,
                                Precision prec) {
    if (den == 0) {
        throw std::domain_error("from_ratio: zero denominator");
    }
    mpq_class q(num, den);
    q.canonicalize();
    return from_mpq(q, prec);
}

Enclosure Enclosure::from_mpq(const mpq_class& q, Precision prec) {
    Enclosure r(prec);
    mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
    return r;
}

Enclosure Enclosure::from_decimal(const std::string& s, Precision prec) {
    Enclosure r(prec);
    if (mpfr_set_str(r.lo_, s.c_str(), 10, MPFR_RNDD) != 0) {
        throw std::invalid_argument("from_decimal: unparsable literal: " + s);
    }
    mpfr_set_str(r.hi_, s.c_str(), 10, MPFR_RNDU);
    return r;
}

bool Enclosure::contains(const mpz_class& v) const {
    return mpfr_cmp_z(lo_, v.get_mpz_t()) <= 0 &&
           mpfr_cmp_z(hi_, v.get_mpz_t()) >= 0;
}

bool Enclosure::contains(const mpq_class& v) const {
    return mpfr_cmp_q(lo_, v.get_mpq_t()) <= 0 &&
           mpfr_cmp_q(hi_, v.get_mpq_t()) >= 0;
}

bool Enclosure::contains(const Enclosure& inner) const {
    return mpfr_cmp(lo_, inner.lo_) <= 0 && mpfr_cmp(hi_, inner.hi_) >= 0;
}

bool Enclosure::contains_zero() const {
    return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

bool Enclosure::intersects(const Enclosure& other) const {
    return mpfr_cmp(lo_, other.hi_) <= 0 && mpfr_cmp(other.lo_, hi_) <= 0;
}

Sign Enclosure::sign() const {
    if (mpfr_sgn(lo_) > 0) return Sign::positive;
    if (mpfr_sgn(hi_) < 0) return Sign::negative;
    if (mpfr_zero_p(lo_) && mpfr_zero_p(hi_)) return Sign::zero;
    return Sign::unknown;
}

Enclosure Enclosure::midpoint() const {
    Enclosure r(prec_ + 8);
    mpfr_add(r.lo_, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(r.lo_, r.lo_, 1, MPFR_RNDN);
    mpfr_set(r.hi_, r.lo_, MPFR_RNDN);
    return r;
}

double Enclosure::width_upper() const {
    mpfr_t w;
    mpfr_init2(w, 64);
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    double d = mpfr_get_d(w, MPFR_RNDU);
    mpfr_clear(w);
    return d;
}

int Enclosure::compare_width(const Enclosure& other) const {
    Precision p = std::max(prec_, other.prec_) + 64;
    mpfr_t wa, wb;
    mpfr_init2(wa, p);
    mpfr_init2(wb, p);
    mpfr_sub(wa, hi_, lo_, MPFR_RNDU);
    mpfr_sub(wb, other.hi_, other.lo_, MPFR_RNDU);
    int c = mpfr_cmp(wa, wb);
    mpfr_clear(wa);
    mpfr_clear(wb);
    return c;
}

Enclosure Enclosure::rounded_to(Precision prec) const {
    Enclosure r(prec);
    mpfr_set(r.lo_, lo_, MPFR_RNDD);
    mpfr_set(r.hi_, hi_, MPFR_RNDU);
    return r;
}

Enclosure Enclosure::widened_by(const Enclosure& pad) const {
    if (mpfr_sgn(pad.hi()) < 0) {
        throw std::domain_error("widened_by: negative pad");
    }
    Enclosure r(prec_);
    mpfr_sub(r.lo_, lo_, pad.hi(), MPFR_RNDD);
    mpfr_add(r.hi_, hi_, pad.hi(), MPFR_RNDU);
    return r;
}

namespace {

std::string format_endpoint(mpfr_srcptr x, int digits, mpfr_rnd_t rnd) {
    char fmt[32];
    std::snprintf(fmt, sizeof(fmt), "%%.%dR*e", digits > 1 ? digits - 1 : 1);
    char* out = nullptr;
    mpfr_asprintf(&out, fmt, rnd, x);
    std::string s(out);
    mpfr_free_str(out);
    return s;
}

}  // namespace

std::string Enclosure::lo_string(int digits) const {
    return format_endpoint(lo_, digits, MPFR_RNDD);
}

std::string Enclosure::hi_string(int digits) const {
    return format_endpoint(hi_, digits, MPFR_RNDU);
}

// ---------------------------------------------------------------------------

Enclosure add(const Enclosure& a, const Enclosure& b, Precision out_prec) {
    Enclosure r(pick(out_prec, a, b));
    mpfr_add(r.lo_mut(), a.lo(), b.lo(), MPFR_RNDD);
    mpfr_add(r.hi_mut(), a.hi(), b.hi(), MPFR_RNDU);
    return r;
}

Enclosure sub(const Enclosure& a, const Enclosure& b, Precision out_prec) {
    Enclosure r(pick(out_prec, a, b));
    mpfr_sub(r.lo_mut(), a.lo(), b.hi(), MPFR_RNDD);
    mpfr_sub(r.hi_mut(), a.hi(), b.lo(), MPFR_RNDU);
    return r;
}

Enclosure mul(const Enclosure& a, const Enclosure& b, Precision out_prec) {
    // min/max over the four endpoint products, each rounded both ways.
    Precision p = pick(out_prec, a, b);
    Enclosure r(p);
    mpfr_t t;
    mpfr_init2(t, p);
    bool first = true;
    mpfr_srcptr as[2] = {a.lo(), a.hi()};
    mpfr_srcptr bs[2] = {b.lo(), b.hi()};
    for (mpfr_srcptr x : as) {
        for (mpfr_srcptr y : bs) {
            mpfr_mul(t, x, y, MPFR_RNDD);
            if (first || mpfr_cmp(t, r.lo_mut()) < 0) mpfr_set(r.lo_mut(), t, MPFR_RNDD);
            mpfr_mul(t, x, y, MPFR_RNDU);
            if (first || mpfr_cmp(t, r.hi_mut()) > 0) mpfr_set(r.hi_mut(), t, MPFR_RNDU);
            first = false;
        }
    }
    mpfr_clear(t);
    return r;
}

Enclosure div(const Enclosure& a, const Enclosure& b, Precision out_prec) {
    if (b.contains_zero()) {
        throw std::domain_error("div: divisor interval contains zero");
    }
    Precision p = pick(out_prec, a, b);
    Enclosure r(p);
    mpfr_t t;
    mpfr_init2(t, p);
    bool first = true;
    mpfr_srcptr as[2] = {a.lo(), a.hi()};
    mpfr_srcptr bs[2] = {b.lo(), b.hi()};
    for (mpfr_srcptr x : as) {
        for (mpfr_srcptr y : bs) {
            mpfr_div(t, x, y, MPFR_RNDD);
            if (first || mpfr_cmp(t, r.lo_mut()) < 0) mpfr_set(r.lo_mut(), t, MPFR_RNDD);
            mpfr_div(t, x, y, MPFR_RNDU);
            if (first || mpfr_cmp(t, r.hi_mut()) > 0) mpfr_set(r.hi_mut(), t, MPFR_RNDU);
            first = false;
        }
    }
    mpfr_clear(t);
    return r;
}

Enclosure neg(const Enclosure& a) {
    Enclosure r(a.precision_bits());
    mpfr_neg(r.lo_mut(), a.hi(), MPFR_RNDD);
    mpfr_neg(r.hi_mut(), a.lo(), MPFR_RNDU);
    return r;
}

Enclosure abs(const Enclosure& a) {
    Enclosure r(a.precision_bits());
    if (mpfr_sgn(a.lo()) >= 0) return a;
    if (mpfr_sgn(a.hi()) <= 0) return neg(a);
    // straddles zero: [0, max(|lo|, hi)]
    mpfr_set_zero(r.lo_mut(), 1);
    mpfr_neg(r.hi_mut(), a.lo(), MPFR_RNDU);
    if (mpfr_cmp(a.hi(), r.hi_mut()) > 0) mpfr_set(r.hi_mut(), a.hi(), MPFR_RNDU);
    return r;
}

namespace {

// Monotone increasing single-argument mpfr function applied endpointwise.
template <typename F>
Enclosure monotone(const Enclosure& a, Precision out_prec, F&& f) {
    Enclosure r(pick(out_prec, a));
    f(r.lo_mut(), a.lo(), MPFR_RNDD);
    f(r.hi_mut(), a.hi(), MPFR_RNDU);
    return r;
}

}  // namespace

Enclosure exp(const Enclosure& a, Precision out_prec) {
    return monotone(a, out_prec, [](mpfr_ptr o, mpfr_srcptr x, mpfr_rnd_t r) {
        mpfr_exp(o, x, r);
    });
}

Enclosure log(const Enclosure& a, Precision out_prec) {
    if (mpfr_sgn(a.lo()) <= 0) {
        throw std::domain_error("log: argument not strictly positive");
    }
    return monotone(a, out_prec, [](mpfr_ptr o, mpfr_srcptr x, mpfr_rnd_t r) {
        mpfr_log(o, x, r);
    });
}

Enclosure sqrt(const Enclosure& a, Precision out_prec) {
    if (mpfr_sgn(a.lo()) < 0) {
        throw std::domain_error("sqrt: argument interval extends below zero");
    }
    return monotone(a, out_prec, [](mpfr_ptr o, mpfr_srcptr x, mpfr_rnd_t r) {
        mpfr_sqrt(o, x, r);
    });
}

Enclosure sinh(const Enclosure& a, Precision out_prec) {
    Precision p = pick(out_prec, a);
    Enclosure d = sub(exp(a, p), exp(neg(a), p), p);
    return mul_2si(d, -1);
}

Enclosure cosh(const Enclosure& a, Precision out_prec) {
    Precision p = pick(out_prec, a);
    Enclosure s = add(exp(a, p), exp(neg(a), p), p);
    return mul_2si(s, -1);
}

Enclosure pow_ui(const Enclosure& a, unsigned long k, Precision out_prec) {
    Precision p = pick(out_prec, a);
    if (k == 0) return Enclosure::from_long(1, p);
    if (mpfr_sgn(a.lo()) >= 0) {
        // monotone on nonnegative intervals
        Enclosure r(p);
        mpfr_pow_ui(r.lo_mut(), a.lo(), k, MPFR_RNDD);
        mpfr_pow_ui(r.hi_mut(), a.hi(), k, MPFR_RNDU);
        return r;
    }
    Enclosure r = a.rounded_to(p);
    for (unsigned long i = 1; i < k; ++i) r = mul(r, a, p);
    return r;
}

Enclosure root_ui(const Enclosure& a, unsigned long k, Precision out_prec) {
    if (k == 0) throw std::domain_error("root_ui: zeroth root");
    if (mpfr_sgn(a.lo()) < 0) {
        throw std::domain_error("root_ui: argument interval extends below zero");
    }
    Enclosure r(pick(out_prec, a));
    mpfr_rootn_ui(r.lo_mut(), a.lo(), k, MPFR_RNDD);
    mpfr_rootn_ui(r.hi_mut(), a.hi(), k, MPFR_RNDU);
    return r;
}

Enclosure mul_2si(const Enclosure& a, long e) {
    Enclosure r(a.precision_bits());
    mpfr_mul_2si(r.lo_mut(), a.lo(), e, MPFR_RNDD);
    mpfr_mul_2si(r.hi_mut(), a.hi(), e, MPFR_RNDU);
    return r;
}

Enclosure pi_const(Precision prec) {
    Enclosure r(clamp_prec(prec));
    mpfr_const_pi(r.lo_mut(), MPFR_RNDD);
    mpfr_const_pi(r.hi_mut(), MPFR_RNDU);
    return r;
}

std::optional<mpz_class> unique_integer(const Enclosure& a) {
    if (!mpfr_number_p(a.lo()) || !mpfr_number_p(a.hi())) return std::nullopt;
    mpz_class k_lo, k_hi;
    mpfr_get_z(k_lo.get_mpz_t(), a.lo(), MPFR_RNDU);  // ceil(lo)
    mpfr_get_z(k_hi.get_mpz_t(), a.hi(), MPFR_RNDD);  // floor(hi)
    if (k_lo == k_hi) return k_lo;
    return std::nullopt;
}

Enclosure binary(BinaryOp op, const Enclosure& a, const Enclosure& b,
                 Precision out_prec) {
    switch (op) {
        case BinaryOp::add: return add(a, b, out_prec);
        case BinaryOp::sub: return sub(a, b, out_prec);
        case BinaryOp::mul: return mul(a, b, out_prec);
        case BinaryOp::div: return div(a, b, out_prec);
    }
    throw std::invalid_argument("binary: unknown op");
}

Enclosure unary(UnaryFn fn, const Enclosure& a, Precision out_prec) {
    switch (fn) {
        case UnaryFn::exp: return exp(a, out_prec);
        case UnaryFn::log: return log(a, out_prec);
        case UnaryFn::sqrt: return sqrt(a, out_prec);
        case UnaryFn::sinh: return sinh(a, out_prec);
        case UnaryFn::cosh: return cosh(a, out_prec);
    }
    throw std::invalid_argument("unary: unknown fn");
}

bool certainly_less(const Enclosure& a, const Enclosure& b) {
    return mpfr_cmp(a.hi(), b.lo()) < 0;
}

}  // namespace partcert
