#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "qb2/errors.hpp"

namespace qb2 {

using Int = mpz_class;
using Rat = mpq_class;

// Canonicalizing constructor; mpq_class(n, d) alone does not reduce.
Rat make_rat(long num, long den = 1);

long euler_phi(long n);
long gcd_ll(long a, long b);
long lcm_ll(long a, long b);

// Coefficients of the L-th cyclotomic polynomial, constant term first,
// monic of degree phi(L). Cached per level; safe to call concurrently.
const std::vector<Int>& cyclotomic_polynomial(long L);

// Element of Q(zeta_L) stored as a rational coefficient vector of length
// phi(L), reduced modulo Phi_L. The representation is canonical: two values
// at the same level are equal iff their vectors are equal. Arithmetic is
// only defined between operands of the same level; callers raise levels
// explicitly (raised_to_level) when mixing.
class Cyc {
public:
    Cyc() : Cyc(1) {}
    explicit Cyc(long level);

    static Cyc zero(long level) { return Cyc(level); }
    static Cyc one(long level);
    static Cyc from_rational(const Rat& v, long level);
    static Cyc from_coeffs(std::vector<Rat> coeffs, long level);
    // zeta_L^e for any integer e (negative allowed).
    static Cyc zeta_pow(long level, long e);

    long level() const { return level_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;
    // True iff the value lies in Q (all non-constant coefficients vanish).
    bool is_rational() const;
    const Rat& rational_value() const; // requires is_rational()

    Cyc operator-() const;
    Cyc& operator+=(const Cyc& o);
    Cyc& operator-=(const Cyc& o);
    Cyc& operator*=(const Cyc& o);

    friend Cyc operator+(Cyc a, const Cyc& b) { return a += b; }
    friend Cyc operator-(Cyc a, const Cyc& b) { return a -= b; }
    friend Cyc operator*(Cyc a, const Cyc& b) { return a *= b; }
    friend Cyc operator/(const Cyc& a, const Cyc& b) { return a * b.inv(); }

    Cyc& operator*=(const Rat& v);
    friend Cyc operator*(Cyc a, const Rat& v) { return a *= v; }
    friend Cyc operator*(const Rat& v, Cyc a) { return a *= v; }

    bool operator==(const Cyc& o) const { return level_ == o.level_ && c_ == o.c_; }
    bool operator!=(const Cyc& o) const { return !(*this == o); }

    Cyc inv() const;        // DivisionByZero on zero
    Cyc pow(long e) const;  // negative exponents go through inv()

    // Reinterpret in Q(zeta_M) for M a multiple of the current level.
    Cyc raised_to_level(long M) const;

    // Total ordering on (level, coefficient vector); used for canonical
    // container ordering, not mathematically meaningful.
    bool lex_less(const Cyc& o) const;

    std::string to_string() const;

private:
    long level_;
    std::vector<Rat> c_; // size phi(level_), reduced mod Phi_level
    void check_same_level(const Cyc& o) const;
};

// Multiplicative order of zeta_L^e: L / gcd(e mod L, L).
long order_of_exponent(long L, long e);

// Multiplicative order of an arbitrary scalar, verified by exponentiation
// over the divisors of the order of the root-of-unity group of Q(zeta_L)
// (L for even L, 2L for odd L). NotRootOfUnity if no divisor works.
long order_of(const Cyc& x);

// Parameters r = zeta_ell^er, s = zeta_ell^es for r, s primitive m-th and
// n-th roots of unity with r^2 != s^2, plus the derived data every other
// module needs: ell = lcm(m, n), the literal exponent products that enter
// the commutation matrices, and the cached orders of the standard scalar
// combinations. `level` is the cyclotomic level shared by all scalars built
// from this config (a multiple of ell so module parameters can live in a
// bigger field than the structure constants).
struct RootConfig {
    long m = 1, n = 1, k1 = 0, k2 = 0;
    long ell = 1;
    long s1 = 1, s2 = 1;       // n/gcd(m,n), m/gcd(m,n)
    long s1k1 = 0, s2k2 = 0;   // literal products, not reduced mod ell
    long er = 0, es = 0;       // exponents of r, s mod ell
    long level = 1;

    long ord_r2s2 = 1;   // ord(r^2 s^2)
    long ord_rs_inv = 1; // ord(r s^-1)
    long ord_r2s2inv = 1;// ord(r^2 s^-2) = ord(r^-2 s^2)
    long ord_rs = 1;     // ord(rs)
    long ord_r2 = 1;     // ord(r^2)
    long ord_s2 = 1;     // ord(s^2)

    // zeta_ell^e embedded at `level`.
    Cyc q_pow(long e) const { return Cyc::zeta_pow(level, e * (level / ell)); }
    Cyc r_pow(long j) const { return q_pow(er * j); }
    Cyc s_pow(long j) const { return q_pow(es * j); }
    Cyc rs_pow(long j) const { return q_pow((er + es) * j); }
    Cyc rsinv_pow(long j) const { return q_pow((er - es) * j); }
    Cyc r() const { return r_pow(1); }
    Cyc s() const { return s_pow(1); }
    Cyc one() const { return Cyc::one(level); }
    Cyc zero() const { return Cyc::zero(level); }

    bool same_parameters(const RootConfig& o) const {
        return m == o.m && n == o.n && k1 == o.k1 && k2 == o.k2 && level == o.level;
    }
};

// NotCoprime if gcd(k1, m) != 1 or gcd(k2, n) != 1; DegenerateParameters if
// r^2 = s^2 (which also rejects r = s). level_multiplier scales the ambient
// cyclotomic level: level = ell * level_multiplier.
RootConfig make_root_config(long m, long n, long k1, long k2, long level_multiplier = 1);

} // namespace qb2
