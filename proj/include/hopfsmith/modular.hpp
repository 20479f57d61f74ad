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

#ifndef HOPFSMITH_MODULAR_HPP
#define HOPFSMITH_MODULAR_HPP

#include <algorithm>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "hopfsmith/errors.hpp"
#include "hopfsmith/multiindex.hpp"
#include "hopfsmith/rings.hpp"

namespace hopfsmith {

// ---------------------------------------------------------------------------
// Divided power algebra O(n;1) over F_p and its derivation algebra W(n;1).
//
//   x^(a) x^(b) = binom(a+b, a) x^(a+b), truncated at tau = (p-1,...,p-1)
//   D_j x^(a) = x^(a - eps_j)
//   W(n;1) = sum O(n;1) D_j with the operator bracket.
// ---------------------------------------------------------------------------

struct ModularCtx {
    long p;
    int n;
    MultiIndex tau;

    ModularCtx(long p_, int n_) : p(p_), n(n_), tau(n_) {
        require_odd_prime(p);
        for (int i = 0; i < n; ++i) tau.e[i] = p - 1;
    }

    long norm(long v) const { return fp_norm(v, p); }

    // binom(a+b, a) mod p for componentwise small arguments
    long binom_mod(long top, long bot) const {
        if (bot < 0 || bot > top) return 0;
        // top <= 2(p-1) stays far inside 64-bit range for the primes in use
        long long r = 1;
        for (long j = 1; j <= bot; ++j) r = r * (top - bot + j) / j;
        return norm(static_cast<long>(r % p));
    }
};

struct OElem {
    std::map<MultiIndex, long> c;

    bool is_zero() const { return c.empty(); }
    void add_term(const ModularCtx& ctx, const MultiIndex& a, long v) {
        v = ctx.norm(v);
        if (v == 0) return;
        auto it = c.find(a);
        if (it == c.end())
            c.emplace(a, v);
        else {
            it->second = ctx.norm(it->second + v);
            if (it->second == 0) c.erase(it);
        }
    }
    friend bool operator==(const OElem& a, const OElem& b) { return a.c == b.c; }
    std::string str() const {
        std::string s;
        for (const auto& [a, v] : c) {
            if (!s.empty()) s += " + ";
            s += std::to_string(v) + "*x^(" + a.str() + ")";
        }
        return s.empty() ? "0" : s;
    }
};

inline OElem o_monomial(const ModularCtx& ctx, const MultiIndex& a, long v = 1) {
    OElem f;
    f.add_term(ctx, a, v);
    return f;
}

inline OElem o_add(const ModularCtx& ctx, const OElem& f, const OElem& g) {
    OElem r = f;
    for (const auto& [a, v] : g.c) r.add_term(ctx, a, v);
    return r;
}

inline OElem o_scale(const ModularCtx& ctx, long s, const OElem& f) {
    OElem r;
    for (const auto& [a, v] : f.c) r.add_term(ctx, a, s * v);
    return r;
}

inline OElem o_mul(const ModularCtx& ctx, const OElem& f, const OElem& g) {
    OElem r;
    for (const auto& [a, va] : f.c)
        for (const auto& [b, vb] : g.c) {
            MultiIndex s = a + b;
            if (!s.bounded_by(ctx.p - 1)) continue;
            long coeff = 1;
            for (int i = 0; i < ctx.n && coeff != 0; ++i)
                coeff = ctx.norm(coeff * ctx.binom_mod(s[i], a[i]));
            r.add_term(ctx, s, coeff * va * vb);
        }
    return r;
}

// ---------------------------------------------------------------------------
// W(n;1) elements: sparse sums of c * x^(alpha) D_j.
// ---------------------------------------------------------------------------

using WKey = std::pair<MultiIndex, int>;

struct WMElem {
    std::map<WKey, long> c;

    bool is_zero() const { return c.empty(); }
    void add_term(const ModularCtx& ctx, const MultiIndex& a, int j, long v) {
        v = ctx.norm(v);
        if (v == 0) return;
        if (!a.nonnegative() || !a.bounded_by(ctx.p - 1)) return;
        WKey key{a, j};
        auto it = c.find(key);
        if (it == c.end())
            c.emplace(key, v);
        else {
            it->second = ctx.norm(it->second + v);
            if (it->second == 0) c.erase(it);
        }
    }
    friend bool operator==(const WMElem& a, const WMElem& b) { return a.c == b.c; }
    std::string str() const {
        std::string s;
        for (const auto& [k, v] : c) {
            if (!s.empty()) s += " + ";
            s += std::to_string(v) + "*x^(" + k.first.str() + ")D" + std::to_string(k.second + 1);
        }
        return s.empty() ? "0" : s;
    }
};

inline WMElem w_add(const ModularCtx& ctx, const WMElem& a, const WMElem& b) {
    WMElem r = a;
    for (const auto& [k, v] : b.c) r.add_term(ctx, k.first, k.second, v);
    return r;
}

inline WMElem w_scale(const ModularCtx& ctx, long s, const WMElem& a) {
    WMElem r;
    for (const auto& [k, v] : a.c) r.add_term(ctx, k.first, k.second, s * v);
    return r;
}

inline WMElem w_sub(const ModularCtx& ctx, const WMElem& a, const WMElem& b) {
    return w_add(ctx, a, w_scale(ctx, -1, b));
}

// D applied to f as a derivation of O(n;1)
inline OElem w_apply(const ModularCtx& ctx, const WMElem& D, const OElem& f) {
    OElem r;
    for (const auto& [k, dv] : D.c) {
        const MultiIndex& a = k.first;
        int j = k.second;
        for (const auto& [b, fv] : f.c) {
            if (b[j] == 0) continue;
            MultiIndex s = a + b.plus(j, -1);
            if (!s.bounded_by(ctx.p - 1)) continue;
            long coeff = 1;
            for (int i = 0; i < ctx.n && coeff != 0; ++i)
                coeff = ctx.norm(coeff * ctx.binom_mod(s[i], a[i]));
            r.add_term(ctx, s, coeff * dv * fv);
        }
    }
    return r;
}

// [x^(a)D_i, x^(b)D_j] = binom(a+b-eps_i, a) x^(a+b-eps_i) D_j
//                      - binom(a+b-eps_j, b) x^(a+b-eps_j) D_i
inline WMElem w_bracket(const ModularCtx& ctx, const WMElem& A, const WMElem& B) {
    WMElem r;
    auto binom_vec = [&ctx](const MultiIndex& top, const MultiIndex& bot) {
        long coeff = 1;
        for (int i = 0; i < ctx.n && coeff != 0; ++i)
            coeff = ctx.norm(coeff * ctx.binom_mod(top[i], bot[i]));
        return coeff;
    };
    for (const auto& [ka, va] : A.c) {
        const MultiIndex& a = ka.first;
        int i = ka.second;
        for (const auto& [kb, vb] : B.c) {
            const MultiIndex& b = kb.first;
            int j = kb.second;
            long cc = ctx.norm(va * vb);
            if (b[i] >= 1) {
                MultiIndex s = (a + b).plus(i, -1);
                if (s.bounded_by(ctx.p - 1)) r.add_term(ctx, s, j, cc * binom_vec(s, a));
            }
            if (a[j] >= 1) {
                MultiIndex s = (a + b).plus(j, -1);
                if (s.bounded_by(ctx.p - 1)) r.add_term(ctx, s, i, -cc * binom_vec(s, b));
            }
        }
    }
    return r;
}

// D_ij(f) = D_j(f) D_i - D_i(f) D_j
inline WMElem d_ij(const ModularCtx& ctx, int i, int j, const OElem& f) {
    WMElem r;
    for (const auto& [a, v] : f.c) {
        if (a[j] >= 1) r.add_term(ctx, a.plus(j, -1), i, v);
        if (a[i] >= 1) r.add_term(ctx, a.plus(i, -1), j, -v);
    }
    return r;
}

inline WMElem d_ij_mono(const ModularCtx& ctx, int i, int j, const MultiIndex& alpha) {
    return d_ij(ctx, i, j, o_monomial(ctx, alpha));
}

// Div(sum f_j D_j) = sum D_j(f_j)
inline OElem w_Div(const ModularCtx& ctx, const WMElem& D) {
    OElem r;
    for (const auto& [k, v] : D.c)
        if (k.first[k.second] >= 1) r.add_term(ctx, k.first.plus(k.second, -1), v);
    return r;
}

// D^p as an element of W(n;1): a derivation is determined by its values on
// the x_j, so the candidate is sum_j D^p(x_j) D_j; it is then checked against
// the p-fold application on every divided power monomial.
inline WMElem w_p_power(const ModularCtx& ctx, const WMElem& D) {
    auto iterate = [&](const OElem& f) {
        OElem g = f;
        for (long s = 0; s < ctx.p; ++s) g = w_apply(ctx, D, g);
        return g;
    };
    WMElem cand;
    for (int j = 0; j < ctx.n; ++j) {
        OElem gj = iterate(o_monomial(ctx, MultiIndex::unit(ctx.n, j)));
        for (const auto& [a, v] : gj.c) cand.add_term(ctx, a, j, v);
    }
    for (const MultiIndex& b : boxed_multiindices(ctx.n, ctx.p - 1)) {
        OElem want = iterate(o_monomial(ctx, b));
        OElem got = w_apply(ctx, cand, o_monomial(ctx, b));
        if (!(want == got))
            throw NotInAlgebra("p-th power of " + D.str() + " is not a first-order derivation");
    }
    return cand;
}

// E_ab = x_a D_b as an operator on the span of the variables
inline WMElem matrix_unit(const ModularCtx& ctx, int a, int b) {
    WMElem r;
    r.add_term(ctx, MultiIndex::unit(ctx.n, a), b, 1);
    return r;
}

// ---------------------------------------------------------------------------
// The special algebra S(n;1) and its extension S'(n;1).
//
// Basis construction is greedy Gaussian elimination over F_p on the family
// D_ij(x^(alpha)), i < j, taken in graded-then-lex order on alpha; the
// well-known dimensions are asserted, not assumed.  S'(n;1) appends the n
// corner elements x^(tau-(p-1)eps_j) D_j.
// ---------------------------------------------------------------------------

struct STag {
    // kind 0: D_ij(x^(alpha)); kind 1: corner element x^(tau-(p-1)eps_j) D_j
    int kind;
    int i, j;
    MultiIndex alpha;

    std::string str() const {
        if (kind == 1) return "corner D" + std::to_string(j + 1);
        return "D" + std::to_string(i + 1) + std::to_string(j + 1) + "(x^(" + alpha.str() + "))";
    }
};

class SAlgebra {
  public:
    ModularCtx ctx;
    bool prime_variant;  // true: S'(n;1)
    std::vector<STag> tags;
    std::vector<WMElem> basis;

    SAlgebra(long p, int n, bool prime = false) : ctx(p, n), prime_variant(prime) {
        mono_ = boxed_multiindices(n, p - 1);
        for (size_t r = 0; r < mono_.size(); ++r) rank_[mono_[r]] = r;
        auto degree_sorted = mono_;  // already graded-lex from the enumerator
        for (const MultiIndex& a : degree_sorted)
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    WMElem w = d_ij_mono(ctx, i, j, a);
                    if (w.is_zero()) continue;
                    try_insert(STag{0, i, j, a}, w);
                }
        long want_s = (n - 1) * (pow_l(p, n) - 1);
        if (static_cast<long>(basis.size()) != want_s)
            throw NotInAlgebra("special algebra dimension " + std::to_string(basis.size()) +
                               ", expected " + std::to_string(want_s));
        if (prime_variant) {
            for (int j = 0; j < n; ++j) {
                MultiIndex a = ctx.tau;
                a.e[j] = 0;
                WMElem w;
                w.add_term(ctx, a, j, 1);
                try_insert(STag{1, -1, j, a}, w);
            }
            long want = (n - 1) * pow_l(p, n) + 1;
            if (static_cast<long>(basis.size()) != want)
                throw NotInAlgebra("extended special algebra dimension " +
                                   std::to_string(basis.size()) + ", expected " +
                                   std::to_string(want));
        }
    }

    long dim() const { return static_cast<long>(basis.size()); }

    bool contains(const WMElem& w) const {
        std::vector<long> v = densify(w);
        reduce(v, nullptr);
        return std::all_of(v.begin(), v.end(), [](long x) { return x == 0; });
    }

    // coordinates over the stored basis; throws if w lies outside the span
    std::vector<long> coords(const WMElem& w) const {
        std::vector<long> v = densify(w);
        std::vector<long> out(basis.size(), 0);
        reduce(v, &out);
        for (long x : v)
            if (x != 0) throw NotInAlgebra("element outside the special algebra: " + w.str());
        return out;
    }

    WMElem from_coords(const std::vector<long>& co) const {
        WMElem r;
        for (size_t b = 0; b < co.size(); ++b)
            if (co[b] != 0) r = w_add(ctx, r, w_scale(ctx, co[b], basis[b]));
        return r;
    }

    static long pow_l(long b, int e) {
        long r = 1;
        while (e-- > 0) r *= b;
        return r;
    }

  private:
    std::vector<MultiIndex> mono_;
    std::map<MultiIndex, size_t> rank_;
    // row-reduced span: each row has a pivot column and an expression over
    // the kept basis elements
    struct Row {
        std::vector<long> v;
        size_t pivot;
        std::vector<long> expr;
    };
    std::vector<Row> rows_;

    std::vector<long> densify(const WMElem& w) const {
        std::vector<long> v(mono_.size() * ctx.n, 0);
        for (const auto& [k, c] : w.c) v[rank_.at(k.first) * ctx.n + k.second] = c;
        return v;
    }

    void reduce(std::vector<long>& v, std::vector<long>* combo) const {
        for (const Row& r : rows_) {
            long c = v[r.pivot];
            if (c == 0) continue;
            for (size_t t = 0; t < v.size(); ++t) v[t] = fp_norm(v[t] - c * r.v[t], ctx.p);
            if (combo)
                for (size_t b = 0; b < r.expr.size(); ++b)
                    (*combo)[b] = fp_norm((*combo)[b] + c * r.expr[b], ctx.p);
        }
    }

    void try_insert(const STag& tag, const WMElem& w) {
        std::vector<long> v = densify(w);
        std::vector<long> combo(basis.size() + 1, 0);
        for (const Row& r : rows_) {
            long c = v[r.pivot];
            if (c == 0) continue;
            for (size_t t = 0; t < v.size(); ++t) v[t] = fp_norm(v[t] - c * r.v[t], ctx.p);
            for (size_t b = 0; b < r.expr.size(); ++b)
                combo[b] = fp_norm(combo[b] + c * r.expr[b], ctx.p);
        }
        size_t piv = v.size();
        for (size_t t = 0; t < v.size(); ++t)
            if (v[t] != 0) {
                piv = t;
                break;
            }
        if (piv == v.size()) return;  // dependent, skip
        // new basis member: row = (w - sum combo_b basis_b) / v[piv]
        long inv = fp_inv(v[piv], ctx.p);
        Row row;
        row.v.resize(v.size());
        for (size_t t = 0; t < v.size(); ++t) row.v[t] = fp_norm(inv * v[t], ctx.p);
        row.pivot = piv;
        row.expr.assign(basis.size() + 1, 0);
        for (size_t b = 0; b < basis.size(); ++b) row.expr[b] = fp_norm(-inv * combo[b], ctx.p);
        row.expr[basis.size()] = fp_norm(inv, ctx.p);
        tags.push_back(tag);
        basis.push_back(w);
        for (Row& r : rows_) r.expr.resize(basis.size(), 0);
        rows_.push_back(std::move(row));
    }
};

}  // namespace hopfsmith

#endif
