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

#ifndef HOPFSMITH_PBW_HPP
#define HOPFSMITH_PBW_HPP

#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hopfsmith/errors.hpp"
#include "hopfsmith/modular.hpp"
#include "hopfsmith/rings.hpp"
#include "hopfsmith/witt.hpp"

namespace hopfsmith {

// ---------------------------------------------------------------------------
// PBW monomials and the straightening engine for U(g) and u(g).
//
// Words in the generators are rewritten to the normal form with generator
// indices ascending, using [x_a, x_b] relations at the leftmost inversion.
// In restricted mode a run of p equal generators collapses through the
// p-power map.  Both rewrites strictly decrease (length, inversions), so the
// worklist terminates.
// ---------------------------------------------------------------------------

inline constexpr size_t kWordCap = 64;

struct PBWMono {
    std::vector<std::pair<int, int>> f;  // (generator, exponent), generators ascending

    static PBWMono unit() { return {}; }
    bool is_unit() const { return f.empty(); }
    long degree() const {
        long d = 0;
        for (const auto& [g, e] : f) d += e;
        return d;
    }
    friend bool operator==(const PBWMono&, const PBWMono&) = default;
    friend auto operator<=>(const PBWMono&, const PBWMono&) = default;
};

template <class Ring>
struct LieHooks {
    long p = 0;  // restricted reduction threshold; 0 disables it
    // [g_a, g_b] expanded over the generator basis
    std::function<std::vector<std::pair<int, typename Ring::Elem>>(int, int)> bracket;
    // p-th power of a generator, expanded over the generator basis
    std::function<std::vector<std::pair<int, typename Ring::Elem>>(int)> p_power;
    std::function<std::string(int)> name;
};

template <class Ring>
class PBW {
  public:
    using E = typename Ring::Elem;
    template <std::size_t K>
    using TKey = std::array<PBWMono, K>;
    template <std::size_t K>
    using Tens = std::map<TKey<K>, E>;
    using Alg = Tens<1>;
    template <std::size_t K>
    using GenImages = std::function<Tens<K>(int)>;

    Ring R;
    LieHooks<Ring> L;

    PBW(Ring r, LieHooks<Ring> hooks) : R(std::move(r)), L(std::move(hooks)) {}

    // ----- construction -----

    template <std::size_t K>
    Tens<K> zero() const {
        return {};
    }
    template <std::size_t K>
    Tens<K> one() const {
        Tens<K> r;
        TKey<K> k;
        r.emplace(k, R.one());
        return r;
    }
    template <std::size_t K>
    Tens<K> scalar(const E& c) const {
        Tens<K> r;
        if (!R.is_zero(c)) r.emplace(TKey<K>{}, c);
        return r;
    }
    Alg gen(int g, const E& c) const {
        Alg r;
        if (R.is_zero(c)) return r;
        PBWMono m;
        m.f.emplace_back(g, 1);
        r.emplace(TKey<1>{m}, c);
        return r;
    }
    Alg gen(int g) const { return gen(g, R.one()); }

    // ----- linear operations -----

    template <std::size_t K>
    void add_term(Tens<K>& x, const TKey<K>& k, const E& c) const {
        if (R.is_zero(c)) return;
        auto it = x.find(k);
        if (it == x.end()) {
            x.emplace(k, c);
        } else {
            it->second = R.add(it->second, c);
            if (R.is_zero(it->second)) x.erase(it);
        }
    }
    template <std::size_t K>
    Tens<K> add(const Tens<K>& a, const Tens<K>& b) const {
        Tens<K> r = a;
        for (const auto& [k, c] : b) add_term(r, k, c);
        return r;
    }
    template <std::size_t K>
    Tens<K> sub(const Tens<K>& a, const Tens<K>& b) const {
        Tens<K> r = a;
        for (const auto& [k, c] : b) add_term(r, k, R.neg(c));
        return r;
    }
    template <std::size_t K>
    Tens<K> smul(const E& s, const Tens<K>& a) const {
        Tens<K> r;
        if (R.is_zero(s)) return r;
        for (const auto& [k, c] : a) add_term(r, k, R.mul(s, c));
        return r;
    }
    template <std::size_t K>
    bool is_zero(const Tens<K>& a) const {
        for (const auto& [k, c] : a)
            if (!R.is_zero(c)) return false;
        return true;
    }
    template <std::size_t K>
    bool eq(const Tens<K>& a, const Tens<K>& b) const {
        return is_zero(sub(a, b));
    }

    // ----- multiplication -----

    // product of two normal monomials, memoized
    const std::map<PBWMono, E>& mono_mul(const PBWMono& a, const PBWMono& b) {
        auto key = std::make_pair(a, b);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        std::map<PBWMono, E> acc;
        std::vector<int> word;
        expand(a, word);
        expand(b, word);
        normalize_into(std::move(word), R.one(), acc);
        return memo_.emplace(std::move(key), std::move(acc)).first->second;
    }

    template <std::size_t K>
    Tens<K> mul(const Tens<K>& a, const Tens<K>& b) {
        Tens<K> out;
        for (const auto& [ka, ca] : a)
            for (const auto& [kb, cb] : b) {
                // legwise monomial products, folded across the K legs
                std::map<TKey<K>, E> partial;
                partial.emplace(ka, R.mul(ca, cb));
                for (std::size_t leg = 0; leg < K; ++leg) {
                    if (kb[leg].is_unit()) continue;
                    std::map<TKey<K>, E> next;
                    for (const auto& [pk, pc] : partial) {
                        if (pk[leg].is_unit()) {
                            TKey<K> nk = pk;
                            nk[leg] = kb[leg];
                            auto nit = next.find(nk);
                            if (nit == next.end())
                                next.emplace(nk, pc);
                            else {
                                nit->second = R.add(nit->second, pc);
                                if (R.is_zero(nit->second)) next.erase(nit);
                            }
                            continue;
                        }
                        for (const auto& [m, mc] : mono_mul(pk[leg], kb[leg])) {
                            TKey<K> nk = pk;
                            nk[leg] = m;
                            E c = R.mul(pc, mc);
                            if (R.is_zero(c)) continue;
                            auto nit = next.find(nk);
                            if (nit == next.end())
                                next.emplace(nk, c);
                            else {
                                nit->second = R.add(nit->second, c);
                                if (R.is_zero(nit->second)) next.erase(nit);
                            }
                        }
                    }
                    partial = std::move(next);
                }
                for (const auto& [k, c] : partial) add_term(out, k, c);
            }
        return out;
    }

    template <std::size_t K>
    Tens<K> pow(const Tens<K>& a, long e) {
        Tens<K> r = one<K>();
        for (long i = 0; i < e; ++i) r = mul(r, a);
        return r;
    }

    // x y - y x
    template <std::size_t K>
    Tens<K> comm(const Tens<K>& a, const Tens<K>& b) {
        return sub(mul(a, b), mul(b, a));
    }

    // shifted factorial of an algebra element:
    //   rising  x_a^<m> = (x+a)(x+a+1)...(x+a+m-1)
    //   falling x_a^[m] = (x+a)(x+a-1)...(x+a-m+1)
    Alg shifted_factorial(const Alg& x, long a, int m, bool rising) {
        Alg r = one<1>();
        for (int j = 0; j < m; ++j) {
            long shift = rising ? a + j : a - j;
            r = mul(r, add(x, scalar<1>(R.from_long(shift))));
        }
        return r;
    }

    // ----- homomorphism machinery -----

    // image of a monomial under a (anti)homomorphism given on generators
    template <std::size_t KO>
    Tens<KO> hom_mono(const PBWMono& m, const GenImages<KO>& img, bool anti = false) {
        Tens<KO> r = one<KO>();
        auto apply_factor = [&](const std::pair<int, int>& fac) {
            Tens<KO> g = img(fac.first);
            r = mul(r, pow(g, fac.second));
        };
        if (!anti)
            for (const auto& fac : m.f) apply_factor(fac);
        else
            for (auto it = m.f.rbegin(); it != m.f.rend(); ++it) apply_factor(*it);
        return r;
    }

    template <std::size_t KO>
    Tens<KO> hom(const Alg& x, const GenImages<KO>& img, bool anti = false) {
        Tens<KO> r = zero<KO>();
        for (const auto& [k, c] : x) r = add(r, smul(c, hom_mono<KO>(k[0], img, anti)));
        return r;
    }

    // apply a hom (given on generators, output rank KO) to one leg
    template <std::size_t KI, std::size_t KO>
    Tens<KI - 1 + KO> apply_on_leg(const Tens<KI>& x, std::size_t leg, const GenImages<KO>& img,
                                   bool anti = false) {
        Tens<KI - 1 + KO> out;
        for (const auto& [k, c] : x) {
            Tens<KO> im = hom_mono<KO>(k[leg], img, anti);
            for (const auto& [ik, ic] : im) {
                TKey<KI - 1 + KO> nk;
                int idx = 0;
                for (std::size_t l = 0; l < leg; ++l) nk[idx++] = k[l];
                for (std::size_t l = 0; l < KO; ++l) nk[idx++] = ik[l];
                for (std::size_t l = leg + 1; l < KI; ++l) nk[idx++] = k[l];
                add_term(out, nk, R.mul(c, ic));
            }
        }
        return out;
    }

    // multiply all legs together (the iterated product map)
    template <std::size_t K>
    Alg fold(const Tens<K>& x) {
        Alg out;
        for (const auto& [k, c] : x) {
            Alg acc = one<1>();
            for (std::size_t l = 0; l < K; ++l) {
                Alg lm;
                lm.emplace(TKey<1>{k[l]}, R.one());
                acc = mul(acc, lm);
            }
            out = add(out, smul(c, acc));
        }
        return out;
    }

    // x (x) 1 and 1 (x) x embeddings between ranks
    Tens<2> ext_right(const Alg& x) const {
        Tens<2> r;
        for (const auto& [k, c] : x) r.emplace(TKey<2>{k[0], PBWMono::unit()}, c);
        return r;
    }
    Tens<2> ext_left(const Alg& x) const {
        Tens<2> r;
        for (const auto& [k, c] : x) r.emplace(TKey<2>{PBWMono::unit(), k[0]}, c);
        return r;
    }
    Tens<3> ext23(const Tens<2>& x) const {  // F (x) 1
        Tens<3> r;
        for (const auto& [k, c] : x) r.emplace(TKey<3>{k[0], k[1], PBWMono::unit()}, c);
        return r;
    }
    Tens<3> ext01(const Tens<2>& x) const {  // 1 (x) F
        Tens<3> r;
        for (const auto& [k, c] : x) r.emplace(TKey<3>{PBWMono::unit(), k[0], k[1]}, c);
        return r;
    }
    Tens<3> ext13(const Tens<2>& x) const {  // legs 1 and 3
        Tens<3> r;
        for (const auto& [k, c] : x) r.emplace(TKey<3>{k[0], PBWMono::unit(), k[1]}, c);
        return r;
    }
    template <std::size_t K>
    Tens<K> embed(const Alg& x, std::size_t leg) const {
        Tens<K> r;
        for (const auto& [k, c] : x) {
            TKey<K> nk;
            nk[leg] = k[0];
            r.emplace(nk, c);
        }
        return r;
    }
    Tens<2> tensor2(const Alg& a, const Alg& b) {
        return mul(ext_right(a), ext_left(b));
    }

    // ----- display -----

    std::string mono_str(const PBWMono& m) const {
        if (m.is_unit()) return "1";
        std::string s;
        for (const auto& [g, e] : m.f) {
            if (!s.empty()) s += "*";
            s += L.name ? L.name(g) : "g" + std::to_string(g);
            if (e > 1) s += "^" + std::to_string(e);
        }
        return s;
    }
    template <std::size_t K>
    std::string str(const Tens<K>& x) const {
        if (x.empty()) return "0";
        std::string s;
        for (const auto& [k, c] : x) {
            if (!s.empty()) s += " + ";
            s += "(" + R.str(c) + ")*";
            for (std::size_t l = 0; l < K; ++l) {
                if (l) s += "(x)";
                s += mono_str(k[l]);
            }
        }
        return s;
    }

  private:
    std::map<std::pair<PBWMono, PBWMono>, std::map<PBWMono, E>> memo_;

    static void expand(const PBWMono& m, std::vector<int>& word) {
        for (const auto& [g, e] : m.f)
            for (int i = 0; i < e; ++i) word.push_back(g);
    }
    static PBWMono compress(const std::vector<int>& word) {
        PBWMono m;
        for (int g : word) {
            if (!m.f.empty() && m.f.back().first == g)
                ++m.f.back().second;
            else
                m.f.emplace_back(g, 1);
        }
        return m;
    }

    void normalize_into(std::vector<int> w0, E c0, std::map<PBWMono, E>& acc) {
        std::vector<std::pair<std::vector<int>, E>> work;
        work.emplace_back(std::move(w0), std::move(c0));
        while (!work.empty()) {
            auto [word, coeff] = std::move(work.back());
            work.pop_back();
            if (R.is_zero(coeff)) continue;
            if (word.size() > kWordCap)
                throw TruncationExceeded("word length exceeds cap " + std::to_string(kWordCap));
            size_t inv = word.size();
            for (size_t i = 0; i + 1 < word.size(); ++i)
                if (word[i] > word[i + 1]) {
                    inv = i;
                    break;
                }
            if (inv != word.size()) {
                std::vector<int> sw = word;
                std::swap(sw[inv], sw[inv + 1]);
                work.emplace_back(std::move(sw), coeff);
                for (const auto& [g, bc] : L.bracket(word[inv], word[inv + 1])) {
                    std::vector<int> nw;
                    nw.reserve(word.size() - 1);
                    nw.insert(nw.end(), word.begin(), word.begin() + inv);
                    nw.push_back(g);
                    nw.insert(nw.end(), word.begin() + inv + 2, word.end());
                    work.emplace_back(std::move(nw), R.mul(coeff, bc));
                }
                continue;
            }
            if (L.p > 0) {
                bool reduced = false;
                size_t i = 0;
                while (i < word.size()) {
                    size_t j = i;
                    while (j < word.size() && word[j] == word[i]) ++j;
                    if (j - i >= static_cast<size_t>(L.p)) {
                        for (const auto& [g, pc] : L.p_power(word[i])) {
                            std::vector<int> nw;
                            nw.reserve(word.size() - L.p + 1);
                            nw.insert(nw.end(), word.begin(), word.begin() + i);
                            nw.push_back(g);
                            nw.insert(nw.end(), word.begin() + i + L.p, word.end());
                            work.emplace_back(std::move(nw), R.mul(coeff, pc));
                        }
                        reduced = true;
                        break;
                    }
                    i = j;
                }
                if (reduced) continue;
            }
            PBWMono m = compress(word);
            auto it = acc.find(m);
            if (it == acc.end()) {
                if (!R.is_zero(coeff)) acc.emplace(std::move(m), std::move(coeff));
            } else {
                it->second = R.add(it->second, coeff);
                if (R.is_zero(it->second)) acc.erase(it);
            }
        }
    }
};

// ---------------------------------------------------------------------------
// Lie hooks for the enveloping algebras in play.
// ---------------------------------------------------------------------------

// Lazily indexed canonical basis of the characteristic-zero algebra S+.
class SPlusRegistry {
  public:
    int n;

    explicit SPlusRegistry(int n_) : n(n_) {}

    int id(const SPlusKey& k) {
        auto it = index_.find(k);
        if (it != index_.end()) return it->second;
        int g = static_cast<int>(keys_.size());
        keys_.push_back(k);
        index_.emplace(k, g);
        return g;
    }
    const SPlusKey& key(int g) const { return keys_.at(g); }
    WittElem elem(int g) const { return splus_element(keys_.at(g), n); }
    size_t size() const { return keys_.size(); }

    std::vector<std::pair<int, Rat>> coords(const WittElem& w) {
        std::vector<std::pair<int, Rat>> out;
        for (const auto& [k, c] : splus_decompose(w, n)) out.emplace_back(id(k), c);
        return out;
    }

  private:
    std::vector<SPlusKey> keys_;
    std::map<SPlusKey, int> index_;
};

template <class Ring>
LieHooks<Ring> splus_hooks(const Ring& R, SPlusRegistry& reg) {
    LieHooks<Ring> h;
    h.p = 0;
    h.bracket = [R, &reg](int a, int b) {
        WittElem w = witt_bracket(reg.elem(a), reg.elem(b));
        std::vector<std::pair<int, typename Ring::Elem>> out;
        for (const auto& [g, c] : reg.coords(w)) out.emplace_back(g, R.from_rat(c));
        return out;
    };
    h.p_power = nullptr;
    h.name = [&reg](int g) { return reg.key(g).str(); };
    return h;
}

// Modular special algebra with cached bracket and p-power coordinate tables.
class SAlgebraOps {
  public:
    SAlgebra S;

    SAlgebraOps(long p, int n, bool prime_variant = false) : S(p, n, prime_variant) {}

    const std::vector<long>& bracket_coords(int a, int b) {
        auto key = std::make_pair(a, b);
        auto it = brk_.find(key);
        if (it != brk_.end()) return it->second;
        WMElem w = w_bracket(S.ctx, S.basis[a], S.basis[b]);
        return brk_.emplace(key, S.coords(w)).first->second;
    }
    const std::vector<long>& p_power_coords(int g) {
        auto it = ppw_.find(g);
        if (it != ppw_.end()) return it->second;
        WMElem w = w_p_power(S.ctx, S.basis[g]);
        return ppw_.emplace(g, S.coords(w)).first->second;
    }

  private:
    std::map<std::pair<int, int>, std::vector<long>> brk_;
    std::map<int, std::vector<long>> ppw_;
};

// restricted: collapse g^p through the p-power map (the defining relations of
// u(g)); unrestricted hooks (restricted = false) present U(g) itself.
template <class Ring>
LieHooks<Ring> modular_hooks(const Ring& R, SAlgebraOps& ops, bool restricted = true) {
    LieHooks<Ring> h;
    h.p = restricted ? ops.S.ctx.p : 0;
    h.bracket = [R, &ops](int a, int b) {
        std::vector<std::pair<int, typename Ring::Elem>> out;
        const auto& co = ops.bracket_coords(a, b);
        for (size_t g = 0; g < co.size(); ++g)
            if (co[g] != 0) out.emplace_back(static_cast<int>(g), R.from_long(co[g]));
        return out;
    };
    h.p_power = [R, &ops](int g) {
        std::vector<std::pair<int, typename Ring::Elem>> out;
        const auto& co = ops.p_power_coords(g);
        for (size_t b = 0; b < co.size(); ++b)
            if (co[b] != 0) out.emplace_back(static_cast<int>(b), R.from_long(co[b]));
        return out;
    };
    h.name = [&ops](int g) { return ops.S.tags[g].str(); };
    return h;
}

}  // namespace hopfsmith

#endif
