#include "hopfg/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

namespace hopfg {

namespace {

// Polynomials are coefficient vectors, ascending degree, over Int or Rational.

std::vector<Int> zpoly_div_exact(const std::vector<Int>& num, const std::vector<Int>& den) {
    // Exact division by a monic divisor; remainder is asserted zero.
    std::vector<Int> r = num;
    const std::size_t dd = den.size() - 1;
    if (r.size() - 1 < dd) throw Error("cyclotomic division underflow");
    std::vector<Int> q(r.size() - dd, 0);
    for (long d = static_cast<long>(r.size()) - 1; d >= static_cast<long>(dd); --d) {
        Int c = r[d];
        if (c == 0) continue;
        q[d - dd] = c;
        for (std::size_t i = 0; i < den.size(); ++i) r[d - dd + i] -= c * den[i];
    }
    for (const Int& c : r)
        if (c != 0) throw Error("cyclotomic division left a remainder");
    return q;
}

std::mutex cache_mutex;
std::map<long, std::vector<Int>> phi_cache;
std::map<long, std::vector<std::vector<Rational>>> power_cache;

const std::vector<Int>& cyclotomic_poly_locked(long N) {
    auto it = phi_cache.find(N);
    if (it != phi_cache.end()) return it->second;
    std::vector<Int> poly;
    if (N == 1) {
        poly = {Int(-1), Int(1)};
    } else {
        std::vector<Int> num(N + 1, 0);  // x^N - 1
        num[0] = -1;
        num[N] = 1;
        poly = num;
        for (long d = 1; d < N; ++d)
            if (N % d == 0) poly = zpoly_div_exact(poly, cyclotomic_poly_locked(d));
    }
    return phi_cache.emplace(N, std::move(poly)).first->second;
}

// Reduced coordinates of zeta_N^k for k = 0..N-1 (each of length phi(N)).
const std::vector<std::vector<Rational>>& power_table(long N) {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = power_cache.find(N);
    if (it != power_cache.end()) return it->second;
    const std::vector<Int>& phiN = cyclotomic_poly_locked(N);
    const std::size_t deg = phiN.size() - 1;
    std::vector<std::vector<Rational>> table;
    table.reserve(N);
    std::vector<Rational> cur(deg, Rational(0));
    cur[0] = 1;
    table.push_back(cur);
    for (long k = 1; k < N; ++k) {
        // Multiply by zeta: shift up, then fold the overflow through
        // zeta^deg = -(phiN[0] + ... + phiN[deg-1] zeta^{deg-1}).
        Rational top = cur.empty() ? Rational(0) : cur[deg - 1];
        for (std::size_t i = deg - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        if (top != 0)
            for (std::size_t i = 0; i < deg; ++i) cur[i] -= top * Rational(phiN[i]);
        table.push_back(cur);
    }
    return power_cache.emplace(N, std::move(table)).first->second;
}

long mod_pos(long k, long N) {
    long m = k % N;
    return m < 0 ? m + N : m;
}

// Rational polynomial division: returns quotient, leaves remainder in num.
std::vector<Rational> qpoly_divmod(std::vector<Rational>& num, const std::vector<Rational>& den) {
    auto deg = [](const std::vector<Rational>& p) {
        long d = static_cast<long>(p.size()) - 1;
        while (d >= 0 && p[d] == 0) --d;
        return d;
    };
    const long dden = deg(den);
    if (dden < 0) throw DivisionByZero("polynomial division by zero");
    long dnum = deg(num);
    std::vector<Rational> q(std::max<long>(dnum - dden + 1, 0), Rational(0));
    const Rational lead_inv = Rational(1) / den[dden];
    while (dnum >= dden) {
        Rational c = num[dnum] * lead_inv;
        q[dnum - dden] = c;
        for (long i = 0; i <= dden; ++i) num[dnum - dden + i] -= c * den[i];
        dnum = deg(num);
    }
    return q;
}

}  // namespace

long euler_phi(long N) {
    if (N <= 0) throw Error("euler_phi needs a positive argument");
    long result = N, n = N;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

const std::vector<Int>& cyclotomic_poly(long N) {
    if (N <= 0) throw Error("cyclotomic_poly needs a positive argument");
    std::lock_guard<std::mutex> lock(cache_mutex);
    return cyclotomic_poly_locked(N);
}

CycNumber::CycNumber() : N_(1), c_(1, Rational(0)) {}

CycNumber::CycNumber(const Rational& r, long N) : N_(N), c_(euler_phi(N), Rational(0)) {
    c_[0] = r;
    // callers may hand over a raw numerator/denominator pair; gmp comparisons
    // assume the canonical form
    c_[0].canonicalize();
}

CycNumber::CycNumber(long v, long N) : CycNumber(Rational(v), N) {}

CycNumber CycNumber::zero(long N) { return CycNumber(Rational(0), N); }

CycNumber CycNumber::one(long N) { return CycNumber(Rational(1), N); }

CycNumber CycNumber::root_of_unity(long N, long k) {
    CycNumber x = zero(N);
    x.c_ = power_table(N)[mod_pos(k, N)];
    return x;
}

bool CycNumber::is_zero() const {
    for (const Rational& v : c_)
        if (v != 0) return false;
    return true;
}

bool CycNumber::is_rational(Rational* out) const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    if (out) *out = c_[0];
    return true;
}

CycNumber CycNumber::operator-() const {
    CycNumber x = *this;
    for (Rational& v : x.c_) v = -v;
    return x;
}

CycNumber add_like(const CycNumber& a, const CycNumber& b, int sign) {
    if (a.N_ != b.N_)
        throw ModulusMismatch("modulus mismatch in addition: " + std::to_string(a.N_) + " vs " +
                              std::to_string(b.N_) + " (use embed)");
    CycNumber x = a;
    for (std::size_t i = 0; i < x.c_.size(); ++i)
        if (sign > 0)
            x.c_[i] += b.c_[i];
        else
            x.c_[i] -= b.c_[i];
    return x;
}

CycNumber CycNumber::operator+(const CycNumber& o) const { return add_like(*this, o, +1); }
CycNumber CycNumber::operator-(const CycNumber& o) const { return add_like(*this, o, -1); }
CycNumber& CycNumber::operator+=(const CycNumber& o) { return *this = add_like(*this, o, +1); }
CycNumber& CycNumber::operator-=(const CycNumber& o) { return *this = add_like(*this, o, -1); }

CycNumber CycNumber::operator*(const CycNumber& o) const {
    if (N_ != o.N_)
        throw ModulusMismatch("modulus mismatch in multiplication: " + std::to_string(N_) +
                              " vs " + std::to_string(o.N_) + " (use embed)");
    const std::size_t n = c_.size();
    std::vector<Rational> conv(2 * n - 1, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (o.c_[j] == 0) continue;
            conv[i + j] += c_[i] * o.c_[j];
        }
    }
    const auto& table = power_table(N_);
    CycNumber out = zero(N_);
    for (std::size_t j = 0; j < conv.size(); ++j) {
        if (conv[j] == 0) continue;
        if (j < n) {
            out.c_[j] += conv[j];
        } else {
            const auto& row = table[mod_pos(static_cast<long>(j), N_)];
            for (std::size_t i = 0; i < n; ++i)
                if (row[i] != 0) out.c_[i] += conv[j] * row[i];
        }
    }
    return out;
}

CycNumber& CycNumber::operator*=(const CycNumber& o) { return *this = *this * o; }

CycNumber CycNumber::operator*(const Rational& r) const {
    CycNumber x = *this;
    for (Rational& v : x.c_) v *= r;
    return x;
}

CycNumber& CycNumber::operator*=(const Rational& r) {
    for (Rational& v : c_) v *= r;
    return *this;
}

bool CycNumber::operator==(const CycNumber& o) const {
    if (N_ != o.N_)
        throw ModulusMismatch("modulus mismatch in comparison: " + std::to_string(N_) + " vs " +
                              std::to_string(o.N_) + " (use embed)");
    return c_ == o.c_;
}

CycNumber CycNumber::inv() const {
    if (is_zero()) throw DivisionByZero("inverse of zero in Q(zeta_" + std::to_string(N_) + ")");
    // Extended Euclid on (Phi_N, a): maintain t with t*a = r (mod Phi_N).
    const auto& phiN = cyclotomic_poly(N_);
    std::vector<Rational> r0(phiN.begin(), phiN.end());
    std::vector<Rational> r1(c_);
    std::vector<Rational> t0{Rational(0)}, t1{Rational(1)};
    auto is_zero_poly = [](const std::vector<Rational>& p) {
        for (const Rational& v : p)
            if (v != 0) return false;
        return true;
    };
    auto sub_scaled = [](std::vector<Rational> a, const std::vector<Rational>& q,
                         const std::vector<Rational>& b) {
        // a - q*b
        std::size_t need = 1;
        for (std::size_t i = 0; i < q.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) need = std::max(need, i + j + 1);
        if (a.size() < need) a.resize(need, Rational(0));
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (std::size_t j = 0; j < b.size(); ++j)
                if (b[j] != 0) a[i + j] -= q[i] * b[j];
        }
        return a;
    };
    while (!is_zero_poly(r1)) {
        std::vector<Rational> rem = r0;
        std::vector<Rational> q = qpoly_divmod(rem, r1);
        r0 = r1;
        r1 = rem;
        std::vector<Rational> tn = sub_scaled(t0, q, t1);
        t0 = t1;
        t1 = tn;
    }
    // r0 = gcd = nonzero constant (Phi_N is irreducible over Q).
    long d = static_cast<long>(r0.size()) - 1;
    while (d > 0 && r0[d] == 0) --d;
    if (d != 0) throw Error("cyclotomic inverse: gcd not constant (corrupt state)");
    const Rational g_inv = Rational(1) / r0[0];
    CycNumber out = zero(N_);
    const auto& table = power_table(N_);
    for (std::size_t j = 0; j < t0.size(); ++j) {
        if (t0[j] == 0) continue;
        const auto& row = table[mod_pos(static_cast<long>(j), N_)];
        for (std::size_t i = 0; i < out.c_.size(); ++i)
            if (row[i] != 0) out.c_[i] += t0[j] * g_inv * row[i];
    }
    if (!((*this * out) == one(N_))) throw Error("cyclotomic inverse self-check failed");
    return out;
}

CycNumber CycNumber::conj() const {
    const auto& table = power_table(N_);
    CycNumber out = zero(N_);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        const auto& row = table[mod_pos(-static_cast<long>(i), N_)];
        for (std::size_t k = 0; k < out.c_.size(); ++k)
            if (row[k] != 0) out.c_[k] += c_[i] * row[k];
    }
    return out;
}

CycNumber CycNumber::pow(long k) const {
    if (k < 0) return inv().pow(-k);
    CycNumber base = *this, acc = one(N_);
    while (k > 0) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

CycNumber CycNumber::embed(long M) const {
    if (M == N_) return *this;
    if (M <= 0 || M % N_ != 0)
        throw ModulusMismatch("embed: " + std::to_string(N_) + " does not divide " +
                              std::to_string(M));
    const long step = M / N_;
    const auto& table = power_table(M);
    CycNumber out = zero(M);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        const auto& row = table[mod_pos(static_cast<long>(i) * step, M)];
        for (std::size_t k = 0; k < out.c_.size(); ++k)
            if (row[k] != 0) out.c_[k] += c_[i] * row[k];
    }
    return out;
}

std::complex<double> CycNumber::to_complex() const {
    std::complex<double> acc(0.0, 0.0);
    const double tau = 6.283185307179586476925286766559;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        double angle = tau * static_cast<double>(i) / static_cast<double>(N_);
        acc += c_[i].get_d() * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    return acc;
}

std::string CycNumber::str() const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        Rational v = c_[i];
        if (first) {
            if (v < 0) {
                out << "-";
                v = -v;
            }
        } else {
            out << (v < 0 ? " - " : " + ");
            if (v < 0) v = -v;
        }
        first = false;
        const bool unit_coeff = (v == 1) && i > 0;
        if (!unit_coeff) out << rational_str(v);
        if (i > 0) {
            if (!unit_coeff) out << "*";
            out << "z" << N_;
            if (i > 1) out << "^" << i;
        }
    }
    if (first) out << "0";
    return out.str();
}

long QPower::modulus() const {
    Rational x = exponent;
    x.canonicalize();
    return 2 * r * to_long(x.get_den());
}

CycNumber QPower::value() const {
    Rational x = exponent;
    x.canonicalize();
    return CycNumber::root_of_unity(modulus(), to_long(x.get_num()));
}

CycNumber qpow(long r, const Rational& x) { return QPower{r, x}.value(); }

CycNumber qpow(long r, const Rational& x, long N) {
    // q = zeta_N^{N/2r}; q^x = zeta_N^{x*N/(2r)}, which must be integral.
    Rational e = x * Rational(N) / Rational(2 * r);
    e.canonicalize();
    if (e.get_den() != 1)
        throw ModulusMismatch("q^(" + rational_str(x) + ") does not lie in Q(zeta_" +
                              std::to_string(N) + ") for r=" + std::to_string(r));
    return CycNumber::root_of_unity(N, to_long(e.get_num()));
}

CycNumber qbrace(long r, const Rational& x, long N) {
    return qpow(r, x, N) - qpow(r, -x, N);
}

CycNumber qint(long r, const Rational& x, long N) {
    return qbrace(r, x, N) * qbrace(r, Rational(1), N).inv();
}

}  // namespace hopfg
