/* Copyright (C) 2026 hopfsmith contributors.
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */

#ifndef HOPFSMITH_COMBINATORICS_HPP
#define HOPFSMITH_COMBINATORICS_HPP

#include <string>
#include <vector>

#include "hopfsmith/bigint.hpp"

namespace hopfsmith {

// Dense univariate polynomial over Z (or Q), index = power of x.  Only a
// handful of operations are needed: these polynomials carry the shifted
// factorials x_a^<n> and x_a^[n] and the identity checks built from them.
template <class C>
struct Poly {
    std::vector<C> c;  // trailing zeros allowed

    C coeff(size_t i) const { return i < c.size() ? c[i] : C(0); }
    size_t size() const { return c.size(); }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }

    static Poly constant(const C& v) { return Poly{{v}}; }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r;
        r.c.resize(std::max(a.c.size(), b.c.size()), C(0));
        for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.coeff(i) + b.coeff(i);
        r.trim();
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        Poly r;
        r.c.resize(std::max(a.c.size(), b.c.size()), C(0));
        for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.coeff(i) - b.coeff(i);
        r.trim();
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        if (a.c.empty() || b.c.empty()) return r;
        r.c.resize(a.c.size() + b.c.size() - 1, C(0));
        for (size_t i = 0; i < a.c.size(); ++i) {
            if (a.c[i] == 0) continue;
            for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
        }
        r.trim();
        return r;
    }
    friend Poly operator*(const C& s, const Poly& a) {
        Poly r = a;
        for (auto& v : r.c) v *= s;
        r.trim();
        return r;
    }
    friend bool operator==(const Poly& a, const Poly& b) {
        size_t n = std::max(a.c.size(), b.c.size());
        for (size_t i = 0; i < n; ++i)
            if (a.coeff(i) != b.coeff(i)) return false;
        return true;
    }
    bool is_zero() const {
        for (const auto& v : c)
            if (v != 0) return false;
        return true;
    }
};

using ZPoly = Poly<Int>;
using QPoly = Poly<Rat>;

inline QPoly to_q(const ZPoly& f) {
    QPoly r;
    r.c.reserve(f.c.size());
    for (const auto& v : f.c) r.c.push_back(Rat(v));
    return r;
}

// x_a^<n> = (x+a)(x+a+1)...(x+a+n-1), the rising shifted factorial.
inline ZPoly rising_factorial(const Int& a, long n) {
    ZPoly r = ZPoly::constant(1);
    for (long j = 0; j < n; ++j) r = r * ZPoly{{a + j, Int(1)}};
    return r;
}

// x_a^[n] = (x+a)(x+a-1)...(x+a-n+1), the falling shifted factorial.
inline ZPoly falling_factorial(const Int& a, long n) {
    ZPoly r = ZPoly::constant(1);
    for (long j = 0; j < n; ++j) r = r * ZPoly{{a - j, Int(1)}};
    return r;
}

// Unsigned Stirling numbers of the first kind via the standard recurrence
// c(n,k) = c(n-1,k-1) + (n-1) c(n-1,k); c(0,0) = 1.  These count the
// permutations of n letters with exactly k cycles and give the coefficients
// of the rising factorial: x^<n> = sum_k c(n,k) x^k.
inline Int stirling_c(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    std::vector<Int> row{1};  // row for n = 0
    for (long m = 1; m <= n; ++m) {
        std::vector<Int> next(m + 1, 0);
        for (long j = 0; j <= m; ++j) {
            if (j >= 1) next[j] += row[j - 1];
            if (j < m) next[j] += (m - 1) * row[j];
        }
        row = std::move(next);
    }
    return row[k];
}

// Signed Stirling number s(n,k) = (-1)^{n-k} c(n,k), the coefficient of x^k
// in the falling factorial x^[n].
inline Int stirling_s(long n, long k) {
    Int c = stirling_c(n, k);
    return ((n - k) % 2 == 0) ? c : -c;
}

// The quantization integrality kernel: a^l * (k)(k+a)(k+2a)...(k+(l-1)a) / l!
// is always an integer (it equals a^{2l} binom(k/a + l - 1, l) formally; the
// point of the closed quantization formulas is that these combinations stay
// in the Z-form).  Returns the exact value; throws if it were fractional.
inline Int grunspan_integral(const Int& a, const Int& k, long l) {
    Int prod = 1;
    for (long j = 0; j < l; ++j) prod *= k + j * a;
    Int num;
    mpz_pow_ui(num.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(l));
    num *= prod;
    return to_int(make_rat(num, factorial(static_cast<unsigned long>(l))));
}

// ---------------------------------------------------------------------------
// The shifted-factorial identity suite.  Each check is an exact polynomial
// identity in Z[x] for concrete integers a, b, r, s, t; fractional weights
// are cleared by multiplying through with r! (resp. s!t!).
// ---------------------------------------------------------------------------

struct IdentityFailure {
    std::string which;
    Int a, b;
    long s, t;
};

// x_a^<s+t> = x_a^<s> x_{a+s}^<t>
inline bool identity_rising_split(const Int& a, long s, long t) {
    return rising_factorial(a, s + t) == rising_factorial(a, s) * rising_factorial(a + s, t);
}

// x_a^[s+t] = x_a^[s] x_{a-s}^[t]
inline bool identity_falling_split(const Int& a, long s, long t) {
    return falling_factorial(a, s + t) == falling_factorial(a, s) * falling_factorial(a - s, t);
}

// x_a^[s] = x_{a-s+1}^<s>
inline bool identity_fall_rise(const Int& a, long s) {
    return falling_factorial(a, s) == rising_factorial(a - s + 1, s);
}

// sum_{s+t=r} (-1)^t r!/(s! t!) x_a^[s] x_b^<t> = r! binom(a-b, r)
// (the fractional form divides by r!; both sides here are in Z[x])
inline bool identity_mixed_convolution(const Int& a, const Int& b, long r) {
    ZPoly lhs;
    Int rfac = factorial(static_cast<unsigned long>(r));
    for (long s = 0; s <= r; ++s) {
        long t = r - s;
        Int w = to_int(make_rat(rfac, factorial(static_cast<unsigned long>(s)) *
                                          factorial(static_cast<unsigned long>(t))));
        if (t % 2 == 1) w = -w;
        lhs = lhs + w * (falling_factorial(a, s) * rising_factorial(b, t));
    }
    // r! binom(a-b, r) = (a-b)(a-b-1)...(a-b-r+1)
    Int rhs = 1;
    for (long j = 0; j < r; ++j) rhs *= a - b - j;
    return lhs == ZPoly::constant(rhs);
}

// sum_{s+t=r} (-1)^t r!/(s! t!) x_a^[s] x_{b-s}^[t] = r! binom(a-b+r-1, r)
inline bool identity_double_falling_convolution(const Int& a, const Int& b, long r) {
    ZPoly lhs;
    Int rfac = factorial(static_cast<unsigned long>(r));
    for (long s = 0; s <= r; ++s) {
        long t = r - s;
        Int w = to_int(make_rat(rfac, factorial(static_cast<unsigned long>(s)) *
                                          factorial(static_cast<unsigned long>(t))));
        if (t % 2 == 1) w = -w;
        lhs = lhs + w * (falling_factorial(a, s) * falling_factorial(b - s, t));
    }
    // r! binom(a-b+r-1, r) = (a-b)(a-b+1)...(a-b+r-1)
    Int rhs = 1;
    for (long j = 0; j < r; ++j) rhs *= a - b + j;
    return lhs == ZPoly::constant(rhs);
}

// Runs all five identities over a box of parameters; collects failures.
inline std::vector<IdentityFailure> check_identity_suite(long amax, long rmax) {
    std::vector<IdentityFailure> bad;
    for (long ai = -amax; ai <= amax; ++ai) {
        Int a(ai);
        for (long s = 0; s <= rmax; ++s) {
            if (!identity_fall_rise(a, s)) bad.push_back({"fall_rise", a, 0, s, 0});
            for (long t = 0; s + t <= rmax; ++t) {
                if (!identity_rising_split(a, s, t)) bad.push_back({"rising_split", a, 0, s, t});
                if (!identity_falling_split(a, s, t)) bad.push_back({"falling_split", a, 0, s, t});
            }
        }
        for (long bi = -amax; bi <= amax; ++bi) {
            Int b(bi);
            for (long r = 0; r <= rmax; ++r) {
                if (!identity_mixed_convolution(a, b, r))
                    bad.push_back({"mixed_convolution", a, b, r, 0});
                if (!identity_double_falling_convolution(a, b, r))
                    bad.push_back({"double_falling_convolution", a, b, r, 0});
            }
        }
    }
    return bad;
}

}  // namespace hopfsmith

#endif
