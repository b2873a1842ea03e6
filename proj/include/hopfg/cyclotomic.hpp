#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "hopfg/rational.hpp"

namespace hopfg {

// Euler totient for small positive N.
long euler_phi(long N);

// N-th cyclotomic polynomial, monic, ascending coefficients, degree phi(N).
// Computed once by dividing x^N - 1 by the product of Phi_d over proper
// divisors d | N, then cached.
const std::vector<Int>& cyclotomic_poly(long N);

/*
 * Element of the cyclotomic field Q(zeta_N), zeta_N = exp(2*pi*i/N), stored
 * on the power basis 1, zeta, ..., zeta^{phi(N)-1} modulo Phi_N. All
 * arithmetic is exact. Elements of different moduli never mix silently:
 * binary operations throw ModulusMismatch unless the moduli agree, and
 * embed() performs the explicit coercion Q(zeta_N) -> Q(zeta_M) for N | M.
 */
class CycNumber {
public:
    // Zero of Q = Q(zeta_1).
    CycNumber();
    // Rational constant viewed in Q(zeta_N).
    explicit CycNumber(const Rational& r, long N = 1);
    explicit CycNumber(long v, long N = 1);

    static CycNumber zero(long N);
    static CycNumber one(long N);
    // zeta_N^k (k arbitrary, reduced mod N).
    static CycNumber root_of_unity(long N, long k);

    long modulus() const { return N_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    // True when the element lies in Q; if so and out != nullptr, stores the value.
    bool is_rational(Rational* out = nullptr) const;

    CycNumber operator-() const;
    CycNumber operator+(const CycNumber& o) const;
    CycNumber operator-(const CycNumber& o) const;
    CycNumber operator*(const CycNumber& o) const;
    CycNumber& operator+=(const CycNumber& o);
    CycNumber& operator-=(const CycNumber& o);
    CycNumber& operator*=(const CycNumber& o);
    CycNumber operator*(const Rational& r) const;
    CycNumber& operator*=(const Rational& r);

    bool operator==(const CycNumber& o) const;
    bool operator!=(const CycNumber& o) const { return !(*this == o); }

    // Multiplicative inverse via the extended Euclidean algorithm against
    // Phi_N. Throws DivisionByZero on zero.
    CycNumber inv() const;
    CycNumber operator/(const CycNumber& o) const { return *this * o.inv(); }

    // Galois conjugation zeta -> zeta^{-1} (complex conjugation).
    CycNumber conj() const;

    // Integer power (negative allowed, uses inv()).
    CycNumber pow(long k) const;

    // Image under Q(zeta_N) -> Q(zeta_M), zeta_N |-> zeta_M^{M/N}. Requires
    // N | M; throws ModulusMismatch otherwise. M == N returns a copy.
    CycNumber embed(long M) const;

    // Numerical value (for report rendering only; never used in checks).
    std::complex<double> to_complex() const;

    // Human-readable form like "1 - 2*z8^3" (z<N> denotes zeta_N).
    std::string str() const;

private:
    long N_;
    std::vector<Rational> c_;  // length phi(N_)

    void reduce_tail(std::vector<Rational>& raw) const;
    friend CycNumber add_like(const CycNumber& a, const CycNumber& b, int sign);
};

inline CycNumber operator*(const Rational& r, const CycNumber& x) { return x * r; }

/*
 * q-power with exact rational exponent, q = exp(i*pi/r) = zeta_{2r}. The
 * value of q^x for x = p/d (lowest terms) lives in Q(zeta_{2 r d}), the
 * minimal cyclotomic field of this form containing it.
 */
struct QPower {
    long r;
    Rational exponent;

    long modulus() const;      // 2 * r * den(exponent)
    CycNumber value() const;   // zeta_{2rd}^p
};

// q^x as a CycNumber in its minimal modulus 2*r*den(x).
CycNumber qpow(long r, const Rational& x);
// q^x embedded into Q(zeta_N); requires 2*r*den(x) | N.
CycNumber qpow(long r, const Rational& x, long N);

// Quantum brace {x} = q^x - q^{-x} and bracket [x] = {x}/{1}, at modulus N.
CycNumber qbrace(long r, const Rational& x, long N);
CycNumber qint(long r, const Rational& x, long N);

}  // namespace hopfg
