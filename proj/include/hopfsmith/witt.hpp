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

#ifndef HOPFSMITH_WITT_HPP
#define HOPFSMITH_WITT_HPP

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hopfsmith/bigint.hpp"
#include "hopfsmith/errors.hpp"
#include "hopfsmith/hnf.hpp"
#include "hopfsmith/multiindex.hpp"

namespace hopfsmith {

// ---------------------------------------------------------------------------
// Characteristic-zero Witt layer.
//
// Elements of the polynomial Witt algebra W+ are written in the D-form
//     sum  c * x^beta D_i,   beta in Z_{>=0}^n,
// with D_i(x^beta) = beta_i x^{beta - eps_i}.  The homogeneous x^alpha*d form
// (d = sum a_i d_i a degree derivation, alpha possibly with entries -1) is a
// view: x^alpha d_i = x^{alpha + eps_i} D_i.
// ---------------------------------------------------------------------------

struct WittElem {
    // (beta, i) -> coefficient of x^beta D_i
    std::map<std::pair<MultiIndex, int>, Rat> c;

    bool is_zero() const { return c.empty(); }

    void add_term(const MultiIndex& beta, int i, const Rat& v) {
        if (v == 0) return;
        if (!beta.nonnegative())
            throw NotInAlgebra("monomial with negative exponent in W+: " + beta.str());
        auto key = std::make_pair(beta, i);
        auto it = c.find(key);
        if (it == c.end()) {
            c.emplace(key, v);
        } else {
            it->second += v;
            if (it->second == 0) c.erase(it);
        }
    }

    friend WittElem operator+(const WittElem& a, const WittElem& b) {
        WittElem r = a;
        for (const auto& [k, v] : b.c) r.add_term(k.first, k.second, v);
        return r;
    }
    friend WittElem operator-(const WittElem& a, const WittElem& b) {
        WittElem r = a;
        for (const auto& [k, v] : b.c) r.add_term(k.first, k.second, -v);
        return r;
    }
    friend WittElem operator*(const Rat& s, const WittElem& a) {
        WittElem r;
        if (s == 0) return r;
        for (const auto& [k, v] : a.c) r.c.emplace(k, s * v);
        return r;
    }
    friend bool operator==(const WittElem& a, const WittElem& b) { return a.c == b.c; }

    std::string str() const {
        std::string s;
        for (const auto& [k, v] : c) {
            if (!s.empty()) s += " + ";
            s += v.get_str() + "*x^" + k.first.str() + "D" + std::to_string(k.second + 1);
        }
        return s.empty() ? "0" : s;
    }
};

// x^gamma d with d = sum d[i] * d_i; gamma may have negative entries as long
// as every contributing D-term x^{gamma+eps_i} stays polynomial.
struct HomogElem {
    MultiIndex alpha;
    std::vector<Rat> d;

    WittElem to_witt() const {
        WittElem w;
        for (size_t i = 0; i < d.size(); ++i)
            if (d[i] != 0) w.add_term(alpha.plus(static_cast<int>(i), 1), static_cast<int>(i), d[i]);
        return w;
    }
    Rat eval(const MultiIndex& beta) const {  // d(beta) = sum d_i beta_i
        Rat r(0);
        for (size_t i = 0; i < d.size(); ++i) r += d[i] * beta[static_cast<int>(i)];
        return r;
    }
};

// Recover (alpha, d) from a W-element all of whose terms share the same
// x^alpha grading; throws NotHomogeneous otherwise.
inline HomogElem to_homogeneous(const WittElem& w, int n) {
    if (w.is_zero()) throw NotHomogeneous("zero element has no grading");
    std::optional<MultiIndex> alpha;
    HomogElem h;
    h.d.assign(n, Rat(0));
    for (const auto& [k, v] : w.c) {
        MultiIndex a = k.first.plus(k.second, -1);
        if (!alpha) {
            alpha = a;
        } else if (!(*alpha == a)) {
            throw NotHomogeneous("mixed gradings " + alpha->str() + " and " + a.str());
        }
        h.d[k.second] += v;
    }
    h.alpha = *alpha;
    return h;
}

// [x^alpha D_i, x^beta D_j] = beta_i x^{alpha+beta-eps_i} D_j
//                           - alpha_j x^{alpha+beta-eps_j} D_i
inline WittElem witt_bracket(const WittElem& a, const WittElem& b) {
    WittElem r;
    for (const auto& [ka, va] : a.c) {
        const MultiIndex& alpha = ka.first;
        int i = ka.second;
        for (const auto& [kb, vb] : b.c) {
            const MultiIndex& beta = kb.first;
            int j = kb.second;
            Rat cc = va * vb;
            if (beta[i] != 0) r.add_term((alpha + beta).plus(i, -1), j, cc * beta[i]);
            if (alpha[j] != 0) r.add_term((alpha + beta).plus(j, -1), i, -cc * alpha[j]);
        }
    }
    return r;
}

// Div(sum f_i D_i) = sum D_i(f_i), a polynomial: map beta -> coefficient.
inline std::map<MultiIndex, Rat> witt_Div(const WittElem& w) {
    std::map<MultiIndex, Rat> r;
    for (const auto& [k, v] : w.c) {
        const MultiIndex& beta = k.first;
        int i = k.second;
        if (beta[i] == 0) continue;
        MultiIndex m = beta.plus(i, -1);
        auto it = r.find(m);
        if (it == r.end())
            r.emplace(m, v * beta[i]);
        else {
            it->second += v * beta[i];
            if (it->second == 0) r.erase(it);
        }
    }
    return r;
}

// div(x^alpha d) = d(alpha) x^alpha for the homogeneous view.
inline Rat homog_div_coeff(const HomogElem& h) { return h.eval(h.alpha); }

// ---------------------------------------------------------------------------
// Canonical basis of S+ = Ker(Div) on W+.
//
// Mixed members (alpha_n >= 1):  alpha_n x^{alpha-eps_n} D_i - alpha_i
// x^{alpha-eps_i} D_n for 1 <= i < n, exactly the stated Z-form family.  The
// alpha_n = 0 members of that family are parallel pure-D_n vectors, so each
// parallel class is replaced by its primitive generator x^mu D_n (mu_n = 0).
// Decomposition over this basis is algorithmic: the D_i parts (i < n) pin the
// mixed coordinates, and the pure-D_n remainder must have n-exponent zero.
// ---------------------------------------------------------------------------

struct SPlusKey {
    // kind 0: mixed (alpha, i) with alpha_n >= 1, 0 <= i <= n-2
    // kind 1: pure D_n with exponent mu, mu_n = 0 (i unused)
    int kind;
    MultiIndex alpha;
    int i;

    friend bool operator==(const SPlusKey&, const SPlusKey&) = default;
    friend std::strong_ordering operator<=>(const SPlusKey& a, const SPlusKey& b) {
        // graded by the monomial degree of the element (|alpha|-1 for mixed,
        // |mu| for pure), then kind, then alpha lex, then direction
        long da = a.kind == 0 ? a.alpha.degree() - 1 : a.alpha.degree();
        long db = b.kind == 0 ? b.alpha.degree() - 1 : b.alpha.degree();
        if (auto c = da <=> db; c != 0) return c;
        if (auto c = a.kind <=> b.kind; c != 0) return c;
        if (auto c = a.alpha <=> b.alpha; c != 0) return c;
        return a.i <=> b.i;
    }
    std::string str() const {
        if (kind == 0) return "S(" + alpha.str() + "," + std::to_string(i + 1) + ")";
        return "S(" + alpha.str() + ",n)";
    }
};

inline WittElem splus_element(const SPlusKey& key, int n) {
    WittElem w;
    if (key.kind == 1) {
        w.add_term(key.alpha, n - 1, Rat(1));
        return w;
    }
    const MultiIndex& alpha = key.alpha;
    long an = alpha[n - 1];
    long ai = alpha[key.i];
    if (an != 0) w.add_term(alpha.plus(n - 1, -1), key.i, Rat(an));
    if (ai != 0) w.add_term(alpha.plus(key.i, -1), n - 1, Rat(-ai));
    return w;
}

// Exact decomposition of w over the canonical S+ basis.
inline std::map<SPlusKey, Rat> splus_decompose(const WittElem& w, int n) {
    std::map<SPlusKey, Rat> coords;
    WittElem rest = w;
    // mixed coordinates from the D_i parts, i < n
    for (const auto& [k, v] : w.c) {
        if (k.second == n - 1) continue;
        MultiIndex alpha = k.first.plus(n - 1, 1);
        Rat coord = v / Rat(alpha[n - 1]);
        SPlusKey key{0, alpha, k.second};
        coords[key] += coord;
        rest = rest - coord * splus_element(key, n);
    }
    for (const auto& [k, v] : rest.c) {
        if (k.second != n - 1 || k.first[n - 1] != 0)
            throw NotInAlgebra("element is not in S+: leftover term x^" + k.first.str() + "D" +
                               std::to_string(k.second + 1));
        coords[SPlusKey{1, k.first, 0}] += v;
    }
    for (auto it = coords.begin(); it != coords.end();)
        it = (it->second == 0) ? coords.erase(it) : std::next(it);
    return coords;
}

// All canonical basis keys whose W-element has monomial degree d (equiv. the
// Witt grade d - 1 slice), in key order.
inline std::vector<SPlusKey> splus_degree_keys(int n, long d) {
    std::vector<SPlusKey> keys;
    for (const MultiIndex& mu : degree_multiindices(n, d))
        if (mu[n - 1] == 0) keys.push_back(SPlusKey{1, mu, 0});
    for (const MultiIndex& alpha : degree_multiindices(n, d + 1))
        if (alpha[n - 1] >= 1)
            for (int i = 0; i + 1 < n; ++i) keys.push_back(SPlusKey{0, alpha, i});
    std::sort(keys.begin(), keys.end());
    return keys;
}

// Basis of the degree component T_{alpha-eta} = { d in T : d(alpha-eta) = 0 }
// of x^eta S, computed as an integer kernel lattice in HNF-canonical form.
inline std::vector<std::vector<Int>> eta_component_basis(const MultiIndex& eta,
                                                         const MultiIndex& alpha) {
    int n = alpha.n();
    IntMat A(1, std::vector<Int>(n));
    for (int i = 0; i < n; ++i) A[0][i] = alpha[i] - eta[i];
    return integer_kernel_basis(A);
}

// Twist carrier data in characteristic zero: h = d_k - d_{k'} and
// e = x^gamma d0 with [h, e] = e and d0(gamma - eta) = 0.
struct Char0Carrier {
    int k, kp;           // h = d_k - d_{k'}
    MultiIndex gamma;    // monomial exponent of e
    std::vector<Rat> d0; // coefficients of d0

    HomogElem h_homog(int n) const {
        HomogElem h;
        h.alpha = MultiIndex(n);
        h.d.assign(n, Rat(0));
        h.d[k] = 1;
        h.d[kp] = -1;
        return h;
    }
    HomogElem e_homog() const { return HomogElem{gamma, d0}; }
};

// e = x^{eps_k} (d_k - 2 d_{k'})
inline Char0Carrier vertical_carrier_char0(int n, int k, int kp) {
    Char0Carrier c;
    c.k = k;
    c.kp = kp;
    c.gamma = MultiIndex::unit(n, k);
    c.d0.assign(n, Rat(0));
    c.d0[k] = 1;
    c.d0[kp] = -2;
    return c;
}

// e = x^{eps_k - eps_m} d_m  (n >= 3, m distinct from k and k')
inline Char0Carrier horizontal_carrier_char0(int n, int k, int kp, int m) {
    if (n < 3) throw InvalidTwist("horizontal carriers need n >= 3");
    if (m == k || m == kp) throw InvalidTwist("horizontal index m must avoid k, k'");
    Char0Carrier c;
    c.k = k;
    c.kp = kp;
    c.gamma = MultiIndex::unit(n, k) - MultiIndex::unit(n, m);
    c.d0.assign(n, Rat(0));
    c.d0[m] = 1;
    return c;
}

}  // namespace hopfsmith

#endif
