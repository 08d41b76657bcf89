// Certified interval arithmetic on top of MPFR directed rounding.
//
// Every real quantity in this project is carried as an Enclosure: a pair
// [lo, hi] of MPFR numbers at a stated working precision, with the invariant
// that the exact mathematical value lies inside.  Endpoint operations round
// lo toward -inf and hi toward +inf, so containment survives every operation.

#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace partcert {

using Precision = mpfr_prec_t;

inline constexpr Precision kMinPrecision = 16;
inline constexpr Precision kMaxPrecision = 1 << 16;

// Starting precision: PARTCERT_PRECISION_BITS if set (clamped to
// [kMinPrecision, kMaxPrecision]), else 128.
Precision default_precision();

enum class Sign { negative, zero, positive, unknown };

enum class BinaryOp { add, sub, mul, div };
enum class UnaryFn { exp, log, sqrt, sinh, cosh };

class Enclosure {
public:
    Enclosure();                     // [0, 0] at default precision
    explicit Enclosure(Precision prec);
    Enclosure(const Enclosure& other);
    Enclosure(Enclosure&& other) noexcept;
    Enclosure& operator=(const Enclosure& other);
    Enclosure& operator=(Enclosure&& other) noexcept;
    ~Enclosure();

    Precision precision_bits() const { return prec_; }

    mpfr_srcptr lo() const { return lo_; }
    mpfr_srcptr hi() const { return hi_; }
    mpfr_ptr lo_mut() { return lo_; }
    mpfr_ptr hi_mut() { return hi_; }

    // -- constructors from exact values ------------------------------------

    // Exact point enclosure: precision is raised so lo = hi = v exactly.
    static Enclosure from_integer(const mpz_class& v,
                                  Precision prec = default_precision());
    static Enclosure from_long(long v, Precision prec = default_precision());

    // Enclosure of num/den; throws std::domain_error on den = 0.
    static Enclosure from_ratio(const mpz_class& num, const mpz_class& den,
                                Precision prec = default_precision());
    static Enclosure from_mpq(const mpq_class& q,
                              Precision prec = default_precision());

    // Enclosure of the real number denoted by a decimal literal.
    static Enclosure from_decimal(const std::string& s,
                                  Precision prec = default_precision());

    // -- queries ------------------------------------------------------------

    bool contains(const mpz_class& v) const;
    bool contains(const mpq_class& v) const;
    bool contains(const Enclosure& inner) const;   // inner subset of *this
    bool contains_zero() const;
    bool intersects(const Enclosure& other) const;

    Sign sign() const;
    bool is_positive() const { return sign() == Sign::positive; }
    bool is_negative() const { return sign() == Sign::negative; }

    // Midpoint as an exact point enclosure (rounded to nearest at prec+8;
    // the result is a point, not a superset of *this).
    Enclosure midpoint() const;

    // Upper bound on hi - lo, rounded up to double (inf if it overflows).
    double width_upper() const;

    // -1 / 0 / +1 comparing width(*this) against width(other), evaluated
    // outward at combined precision.
    int compare_width(const Enclosure& other) const;

    // Re-round to coarser precision, outward (containment preserved).
    Enclosure rounded_to(Precision prec) const;

    // [lo - pad.hi, hi + pad.hi] with outward rounding; pad.hi must be >= 0.
    Enclosure widened_by(const Enclosure& pad) const;

    // Decimal rendering of an endpoint with the stated significant digits,
    // rounded down for lo and up for hi (keeps the certified direction).
    std::string lo_string(int digits = 21) const;
    std::string hi_string(int digits = 21) const;

    void swap(Enclosure& other) noexcept;

private:
    mpfr_t lo_;
    mpfr_t hi_;
    Precision prec_;
};

// -- arithmetic --------------------------------------------------------------
// out_prec = 0 means "use the operands' max precision".

Enclosure add(const Enclosure& a, const Enclosure& b, Precision out_prec = 0);
Enclosure sub(const Enclosure& a, const Enclosure& b, Precision out_prec = 0);
Enclosure mul(const Enclosure& a, const Enclosure& b, Precision out_prec = 0);
// Throws std::domain_error when 0 is contained in b.
Enclosure div(const Enclosure& a, const Enclosure& b, Precision out_prec = 0);

Enclosure neg(const Enclosure& a);
Enclosure abs(const Enclosure& a);

Enclosure exp(const Enclosure& a, Precision out_prec = 0);
// Requires a.lo > 0.
Enclosure log(const Enclosure& a, Precision out_prec = 0);
// Requires a.lo >= 0.
Enclosure sqrt(const Enclosure& a, Precision out_prec = 0);
// sinh/cosh composed from exp enclosures: (e^x -+ e^-x)/2.
Enclosure sinh(const Enclosure& a, Precision out_prec = 0);
Enclosure cosh(const Enclosure& a, Precision out_prec = 0);

// a^k for integer k >= 0 (k = 0 gives [1,1]).
Enclosure pow_ui(const Enclosure& a, unsigned long k, Precision out_prec = 0);
// k-th root, k >= 1; requires a.lo >= 0.
Enclosure root_ui(const Enclosure& a, unsigned long k, Precision out_prec = 0);
// Exact scaling by 2^e.
Enclosure mul_2si(const Enclosure& a, long e);

// Enclosure of pi with width <= 2^(2 - prec).
Enclosure pi_const(Precision prec = default_precision());

// The unique integer in [lo, hi], if there is exactly one.
std::optional<mpz_class> unique_integer(const Enclosure& a);

// Catalog dispatchers (the op-code surface used by the fuzz harness).
Enclosure binary(BinaryOp op, const Enclosure& a, const Enclosure& b,
                 Precision out_prec = 0);
Enclosure unary(UnaryFn fn, const Enclosure& a, Precision out_prec = 0);

inline Enclosure operator+(const Enclosure& a, const Enclosure& b) { return add(a, b); }
inline Enclosure operator-(const Enclosure& a, const Enclosure& b) { return sub(a, b); }
inline Enclosure operator*(const Enclosure& a, const Enclosure& b) { return mul(a, b); }
inline Enclosure operator/(const Enclosure& a, const Enclosure& b) { return div(a, b); }
inline Enclosure operator-(const Enclosure& a) { return neg(a); }

// a.hi < b.lo (certified strict order).
bool certainly_less(const Enclosure& a, const Enclosure& b);

}  // namespace partcert
