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

#ifndef HOPFSMITH_RINGS_HPP
#define HOPFSMITH_RINGS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hopfsmith/bigint.hpp"
#include "hopfsmith/errors.hpp"

namespace hopfsmith {

// ---------------------------------------------------------------------------
// Prime field arithmetic on int64 residues.  The primes in play are tiny
// (3, 5, 7, ...), so residue products never approach overflow.
// ---------------------------------------------------------------------------

inline void require_odd_prime(long p) {
    if (p < 3) throw UnsupportedPrime("p must be an odd prime, got " + std::to_string(p));
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) throw UnsupportedPrime("p must be prime, got " + std::to_string(p));
}

inline long fp_norm(long v, long p) {
    long r = v % p;
    return r < 0 ? r + p : r;
}

inline long fp_inv(long v, long p) {
    long a = fp_norm(v, p);
    if (a == 0) throw DivisionByNonUnit("inverse of 0 mod " + std::to_string(p));
    // extended Euclid
    long r0 = p, r1 = a, s0 = 0, s1 = 1;
    while (r1 != 0) {
        long q = r0 / r1;
        long r2 = r0 - q * r1;
        long s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    return fp_norm(s0, p);
}

// ---------------------------------------------------------------------------
// Coefficient rings.  Every ring is a small value object carrying its
// parameters; elements are plain values manipulated through the ring.  The
// algebra layers are templated on this interface.
// ---------------------------------------------------------------------------

struct RationalRing {
    using Elem = Rat;

    long characteristic() const { return 0; }
    Elem zero() const { return Rat(0); }
    Elem one() const { return Rat(1); }
    Elem from_long(long v) const { return Rat(v); }
    Elem from_int(const Int& v) const { return Rat(v); }
    Elem from_rat(const Rat& v) const { return v; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    Elem inv(const Elem& a) const {
        if (a == 0) throw DivisionByNonUnit("inverse of 0 in Q");
        return Rat(1) / a;
    }
    std::string str(const Elem& a) const { return a.get_str(); }
};

struct FpRing {
    long p;

    explicit FpRing(long p_) : p(p_) { require_odd_prime(p); }

    using Elem = long;

    long characteristic() const { return p; }
    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_long(long v) const { return fp_norm(v, p); }
    Elem from_int(const Int& v) const {
        Int r = v % p;
        long l = static_cast<long>(r.get_si());
        return fp_norm(l, p);
    }
    Elem add(Elem a, Elem b) const { return fp_norm(a + b, p); }
    Elem sub(Elem a, Elem b) const { return fp_norm(a - b, p); }
    Elem mul(Elem a, Elem b) const { return fp_norm(a * b, p); }
    Elem neg(Elem a) const { return fp_norm(-a, p); }
    bool is_zero(Elem a) const { return fp_norm(a, p) == 0; }
    bool eq(Elem a, Elem b) const { return fp_norm(a - b, p) == 0; }
    Elem inv(Elem a) const { return fp_inv(a, p); }
    std::string str(Elem a) const { return std::to_string(fp_norm(a, p)); }
};

// Q[[t]] / t^{N+1}: dense vector of N+1 rationals, index = power of t.
struct SeriesRing {
    int N;

    explicit SeriesRing(int N_) : N(N_) {
        if (N < 0) throw TruncationExceeded("truncation order must be >= 0");
    }

    using Elem = std::vector<Rat>;

    long characteristic() const { return 0; }
    Elem zero() const { return Elem(N + 1, Rat(0)); }
    Elem one() const {
        Elem e = zero();
        e[0] = 1;
        return e;
    }
    Elem from_long(long v) const {
        Elem e = zero();
        e[0] = v;
        return e;
    }
    Elem from_rat(const Rat& v) const {
        Elem e = zero();
        e[0] = v;
        return e;
    }
    // c * t^k (dropped entirely if k exceeds the truncation order)
    Elem t_power(int k, const Rat& c = Rat(1)) const {
        Elem e = zero();
        if (k <= N) e[k] = c;
        return e;
    }
    Elem add(const Elem& a, const Elem& b) const {
        Elem r = a;
        for (int i = 0; i <= N; ++i) r[i] += b[i];
        return r;
    }
    Elem sub(const Elem& a, const Elem& b) const {
        Elem r = a;
        for (int i = 0; i <= N; ++i) r[i] -= b[i];
        return r;
    }
    Elem mul(const Elem& a, const Elem& b) const {
        Elem r = zero();
        for (int i = 0; i <= N; ++i) {
            if (a[i] == 0) continue;
            for (int j = 0; i + j <= N; ++j)
                if (b[j] != 0) r[i + j] += a[i] * b[j];
        }
        return r;
    }
    Elem neg(const Elem& a) const {
        Elem r = a;
        for (auto& c : r) c = -c;
        return r;
    }
    bool is_zero(const Elem& a) const {
        for (const auto& c : a)
            if (c != 0) return false;
        return true;
    }
    bool eq(const Elem& a, const Elem& b) const {
        for (int i = 0; i <= N; ++i)
            if (a[i] != b[i]) return false;
        return true;
    }
    // Power series inversion; needs a unit constant term.
    Elem inv(const Elem& a) const {
        if (a[0] == 0) throw DivisionByNonUnit("series with zero constant term");
        Elem r = zero();
        r[0] = Rat(1) / a[0];
        for (int k = 1; k <= N; ++k) {
            Rat acc(0);
            for (int j = 1; j <= k; ++j) acc += a[j] * r[k - j];
            r[k] = -acc / a[0];
        }
        return r;
    }
    // Evaluation at t = 0 (the only exact specialization for a truncation).
    Rat specialize0(const Elem& a) const { return a[0]; }
    std::string str(const Elem& a) const { return poly_str(a, [](const Rat& c) { return c.get_str(); }); }

    template <class Fmt>
    static std::string poly_str(const Elem& a, Fmt&& fmt) {
        std::string s;
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            if (!s.empty()) s += " + ";
            s += fmt(a[i]);
            if (i >= 1) s += "*t";
            if (i >= 2) s += "^" + std::to_string(i);
        }
        return s.empty() ? "0" : s;
    }
};

// F_p[t] / (t^p - q t): dense vector of p residues, index = power of t.
struct PolyPRing {
    long p;
    long q;

    PolyPRing(long p_, long q_) : p(p_), q(fp_norm(q_, p_)) { require_odd_prime(p); }

    using Elem = std::vector<long>;

    FpRing base() const { return FpRing(p); }

    long characteristic() const { return p; }
    Elem zero() const { return Elem(p, 0); }
    Elem one() const {
        Elem e = zero();
        e[0] = 1;
        return e;
    }
    Elem from_long(long v) const {
        Elem e = zero();
        e[0] = fp_norm(v, p);
        return e;
    }
    Elem from_int(const Int& v) const { return from_long(FpRing(p).from_int(v)); }
    // c * t^k with k reduced through t^p = q t.
    Elem t_power(long k, long c = 1) const {
        Elem e = zero();
        c = fp_norm(c, p);
        if (c == 0) return e;
        while (k >= p) {
            // t^{p+r} = q t^{r+1}
            k -= p - 1;
            c = fp_norm(c * q, p);
            if (c == 0) return e;
        }
        e[k] = c;
        return e;
    }
    Elem add(const Elem& a, const Elem& b) const {
        Elem r = a;
        for (long i = 0; i < p; ++i) r[i] = fp_norm(r[i] + b[i], p);
        return r;
    }
    Elem sub(const Elem& a, const Elem& b) const {
        Elem r = a;
        for (long i = 0; i < p; ++i) r[i] = fp_norm(r[i] - b[i], p);
        return r;
    }
    Elem mul(const Elem& a, const Elem& b) const {
        // convolve to degree 2p-2, then fold t^{p+r} -> q t^{r+1}
        std::vector<long> c(2 * p - 1, 0);
        for (long i = 0; i < p; ++i) {
            if (a[i] == 0) continue;
            for (long j = 0; j < p; ++j)
                if (b[j] != 0) c[i + j] = fp_norm(c[i + j] + a[i] * b[j], p);
        }
        Elem r = zero();
        for (long d = 0; d < p; ++d) r[d] = c[d];
        for (long d = p; d <= 2 * p - 2; ++d)
            if (c[d] != 0) r[d - p + 1] = fp_norm(r[d - p + 1] + q * c[d], p);
        return r;
    }
    Elem neg(const Elem& a) const {
        Elem r = a;
        for (auto& c : r) c = fp_norm(-c, p);
        return r;
    }
    bool is_zero(const Elem& a) const {
        for (long c : a)
            if (c != 0) return false;
        return true;
    }
    bool eq(const Elem& a, const Elem& b) const {
        for (long i = 0; i < p; ++i)
            if (fp_norm(a[i] - b[i], p) != 0) return false;
        return true;
    }

    // Inverse modulo t^p - q t via the extended Euclidean algorithm in F_p[t].
    // Units are exactly the residues coprime to t^p - q t; a nonzero constant
    // coefficient is sufficient only when q = 0 (t nilpotent).
    Elem inv(const Elem& a) const {
        if (is_zero(a)) throw DivisionByNonUnit("inverse of 0");
        // modulus m(t) = t^p - q t
        std::vector<long> r0(p + 1, 0), r1(a.begin(), a.end());
        r0[p] = 1;
        r0[1] = fp_norm(-q, p);
        std::vector<long> s0{0}, s1{1};
        auto deg = [&](const std::vector<long>& f) {
            for (long d = static_cast<long>(f.size()) - 1; d >= 0; --d)
                if (f[d] != 0) return d;
            return -1L;
        };
        while (deg(r1) > 0) {
            // divide r0 by r1
            std::vector<long> rem = r0;
            long d1 = deg(r1);
            long lc_inv = fp_inv(r1[d1], p);
            std::vector<long> quo(std::max<long>(deg(r0) - d1 + 1, 1), 0);
            for (long d = deg(rem); d >= d1; --d) {
                long c = fp_norm(rem[d] * lc_inv, p);
                if (c == 0) continue;
                quo[d - d1] = c;
                for (long j = 0; j <= d1; ++j)
                    rem[d - d1 + j] = fp_norm(rem[d - d1 + j] - c * r1[j], p);
            }
            // s2 = s0 - quo * s1
            std::vector<long> s2(std::max(s0.size(), quo.size() + s1.size()), 0);
            for (size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
            for (size_t i = 0; i < quo.size(); ++i)
                for (size_t j = 0; j < s1.size(); ++j)
                    s2[i + j] = fp_norm(s2[i + j] - quo[i] * s1[j], p);
            r0 = r1; r1 = rem;
            s0 = s1; s1 = s2;
        }
        if (deg(r1) != 0)
            throw DivisionByNonUnit("element is not a unit modulo t^p - q t");
        long scale = fp_inv(r1[0], p);
        Elem res = zero();
        // s1 has degree < p here (deg s1 = deg m - deg gcd cofactor), but fold defensively.
        for (size_t i = 0; i < s1.size(); ++i) {
            if (s1[i] == 0) continue;
            Elem term = t_power(static_cast<long>(i), fp_norm(s1[i] * scale, p));
            res = add(res, term);
        }
        return res;
    }

    // Evaluate t -> t0; t0 must satisfy t0^p = q t0 in F_p, otherwise the map
    // is not a ring homomorphism.
    long specialize(const Elem& a, long t0) const {
        t0 = fp_norm(t0, p);
        long pw = 1;
        for (long i = 0; i < p; ++i) pw = fp_norm(pw * t0, p);
        if (pw != fp_norm(q * t0, p))
            throw NotARoot("t0 = " + std::to_string(t0) + " does not satisfy t^p = q t");
        long acc = 0, tp = 1;
        for (long i = 0; i < p; ++i) {
            acc = fp_norm(acc + a[i] * tp, p);
            tp = fp_norm(tp * t0, p);
        }
        return acc;
    }

    std::string str(const Elem& a) const {
        std::string s;
        for (long i = 0; i < p; ++i) {
            if (a[i] == 0) continue;
            if (!s.empty()) s += " + ";
            s += std::to_string(a[i]);
            if (i >= 1) s += "*t";
            if (i >= 2) s += "^" + std::to_string(i);
        }
        return s.empty() ? "0" : s;
    }
};

}  // namespace hopfsmith

#endif
