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

#ifndef HOPFSMITH_TWIST_HPP
#define HOPFSMITH_TWIST_HPP

#include <string>
#include <vector>

#include "hopfsmith/pbw.hpp"

namespace hopfsmith {

// ---------------------------------------------------------------------------
// Jordanian-type twists on a carrier pair [h, e] = e.
//
// The twist and its inverse are the two half-series
//
//   twist    sum_r ((-1)^r/r!) h_a^[r] (x) e^r t^r     (falling factorials)
//   inverse  sum_r (1/r!)      h_a^<r> (x) e^r t^r     (rising factorials)
//
// folded to the ring's own truncation: order N in characteristic zero, and
// r <= p-1 in characteristic p where both legs die at r = p in the
// restricted quotient.
// ---------------------------------------------------------------------------

// choice of a basic carrier pair inside the algebra, indices 0-based
struct CarrierChoice {
    // kind 0 (vertical): h = d_k - d_{k'}, e = x^{eps_k}(d_k - 2 d_{k'})
    // kind 1 (horizontal): h = d_k - d_{k'}, e = x_k D_m with m distinct
    int kind;
    int k, kp, m;

    std::string str() const {
        std::string s = kind == 0 ? "vertical:" : "horizontal:";
        s += std::to_string(k + 1) + "," + std::to_string(kp + 1);
        if (kind == 1) s += "," + std::to_string(m + 1);
        return s;
    }
};

// "vertical:k,k'" | "horizontal:k,k',m" with 1-based indices
inline CarrierChoice parse_carrier_choice(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw InvalidTwist("carrier spec needs kind:indices, got '" + text + "'");
    std::string kind = text.substr(0, colon);
    std::vector<long> idx;
    std::string rest = text.substr(colon + 1);
    size_t pos = 0;
    while (pos <= rest.size()) {
        size_t comma = rest.find(',', pos);
        std::string piece = rest.substr(pos, comma == std::string::npos ? std::string::npos
                                                                        : comma - pos);
        if (piece.empty() || piece.find_first_not_of("0123456789") != std::string::npos)
            throw InvalidTwist("bad index '" + piece + "' in '" + text + "'");
        idx.push_back(std::stol(piece));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    CarrierChoice c{};
    if (kind == "vertical") {
        if (idx.size() != 2) throw InvalidTwist("vertical takes two indices: " + text);
        c = CarrierChoice{0, static_cast<int>(idx[0] - 1), static_cast<int>(idx[1] - 1), -1};
    } else if (kind == "horizontal") {
        if (idx.size() != 3) throw InvalidTwist("horizontal takes three indices: " + text);
        c = CarrierChoice{1, static_cast<int>(idx[0] - 1), static_cast<int>(idx[1] - 1),
                          static_cast<int>(idx[2] - 1)};
    } else {
        throw InvalidTwist("unknown carrier kind '" + kind + "'");
    }
    return c;
}

// '*'-separated product of carrier choices; "chain:i" abbreviates the
// diagonal product (2,1)(3,1)...(i+1,1)
inline std::vector<CarrierChoice> parse_twist_spec(const std::string& text) {
    if (text.rfind("chain:", 0) == 0) {
        std::string num = text.substr(6);
        if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
            throw InvalidTwist("bad chain length in '" + text + "'");
        long i = std::stol(num);
        if (i < 1) throw InvalidTwist("chain length must be positive: " + text);
        std::vector<CarrierChoice> out;
        for (long s = 0; s < i; ++s) out.push_back(CarrierChoice{0, static_cast<int>(s + 1), 0, -1});
        return out;
    }
    std::vector<CarrierChoice> out;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t star = text.find('*', pos);
        std::string piece =
            text.substr(pos, star == std::string::npos ? std::string::npos : star - pos);
        out.push_back(parse_carrier_choice(piece));
        if (star == std::string::npos) break;
        pos = star + 1;
    }
    if (out.empty()) throw InvalidTwist("empty twist spec");
    return out;
}

inline void validate_carrier_choice(const CarrierChoice& c, int n) {
    if (c.k < 0 || c.k >= n || c.kp < 0 || c.kp >= n)
        throw InvalidTwist("carrier indices out of range for n = " + std::to_string(n) + ": " +
                           c.str());
    if (c.k == c.kp) throw InvalidTwist("carrier needs two distinct diagonal indices: " + c.str());
    if (c.kind == 1) {
        if (n < 3) throw InvalidTwist("horizontal carriers need n >= 3");
        if (c.m < 0 || c.m >= n || c.m == c.k || c.m == c.kp)
            throw InvalidTwist("horizontal index m must avoid k, k': " + c.str());
    }
}

// ----- carrier elements in the two concrete algebras -----

inline WMElem modular_carrier_h(const ModularCtx& ctx, const CarrierChoice& c) {
    validate_carrier_choice(c, ctx.n);
    int i = std::min(c.k, c.kp), j = std::max(c.k, c.kp);
    long sgn = c.k < c.kp ? 1 : -1;
    return w_scale(ctx, sgn,
                   d_ij_mono(ctx, i, j, MultiIndex::unit(ctx.n, i) + MultiIndex::unit(ctx.n, j)));
}

inline WMElem modular_carrier_e(const ModularCtx& ctx, const CarrierChoice& c) {
    validate_carrier_choice(c, ctx.n);
    if (c.kind == 1) return matrix_unit(ctx, c.k, c.m);
    int i = std::min(c.k, c.kp), j = std::max(c.k, c.kp);
    long sgn = c.k < c.kp ? 1 : -1;
    MultiIndex a = MultiIndex::unit(ctx.n, c.k) + MultiIndex::unit(ctx.n, c.k) +
                   MultiIndex::unit(ctx.n, c.kp);
    return w_scale(ctx, 2 * sgn, d_ij_mono(ctx, i, j, a));
}

inline WittElem char0_carrier_h(int n, const CarrierChoice& c) {
    validate_carrier_choice(c, n);
    return vertical_carrier_char0(n, c.k, c.kp).h_homog(n).to_witt();
}

inline WittElem char0_carrier_e(int n, const CarrierChoice& c) {
    validate_carrier_choice(c, n);
    if (c.kind == 1) return horizontal_carrier_char0(n, c.k, c.kp, c.m).e_homog().to_witt();
    return vertical_carrier_char0(n, c.k, c.kp).e_homog().to_witt();
}

// ----- carriers lifted into a PBW engine -----

template <class Ring>
struct Carrier {
    typename PBW<Ring>::Alg h, e;
};

template <class Ring>
Carrier<Ring> lift_carrier(PBW<Ring>& U, SPlusRegistry& reg, const CarrierChoice& c) {
    auto lift = [&U, &reg](const WittElem& w) {
        typename PBW<Ring>::Alg a = U.template zero<1>();
        for (const auto& [g, co] : reg.coords(w)) a = U.add(a, U.gen(g, U.R.from_rat(co)));
        return a;
    };
    Carrier<Ring> out;
    out.h = lift(char0_carrier_h(reg.n, c));  // registered first: h-words sort left of e-words
    out.e = lift(char0_carrier_e(reg.n, c));
    return out;
}

template <class Ring>
Carrier<Ring> lift_carrier(PBW<Ring>& U, SAlgebraOps& ops, const CarrierChoice& c) {
    auto lift = [&U, &ops](const WMElem& w) {
        typename PBW<Ring>::Alg a = U.template zero<1>();
        std::vector<long> co = ops.S.coords(w);
        for (size_t g = 0; g < co.size(); ++g)
            if (co[g] != 0) a = U.add(a, U.gen(static_cast<int>(g), U.R.from_long(co[g])));
        return a;
    };
    Carrier<Ring> out;
    out.h = lift(modular_carrier_h(ops.S.ctx, c));
    out.e = lift(modular_carrier_e(ops.S.ctx, c));
    return out;
}

// ----- twist series -----

template <class Ring>
typename Ring::Elem inv_factorial(const Ring& R, long r) {
    typename Ring::Elem f = R.one();
    for (long j = 2; j <= r; ++j) f = R.mul(f, R.from_long(j));
    return R.inv(f);
}

template <class Ring>
typename PBW<Ring>::template Tens<2> basic_twist(PBW<Ring>& U, const Carrier<Ring>& c, long a,
                                                 long rmax) {
    auto F = U.template zero<2>();
    for (long r = 0; r <= rmax; ++r) {
        auto coeff = U.R.mul(U.R.t_power(r), inv_factorial(U.R, r));
        if (r % 2 == 1) coeff = U.R.neg(coeff);
        auto hpart = U.shifted_factorial(c.h, a, static_cast<int>(r), /*rising=*/false);
        F = U.add(F, U.smul(coeff, U.tensor2(hpart, U.pow(c.e, r))));
    }
    return F;
}

template <class Ring>
typename PBW<Ring>::template Tens<2> basic_twist_inverse(PBW<Ring>& U, const Carrier<Ring>& c,
                                                         long a, long rmax) {
    auto F = U.template zero<2>();
    for (long r = 0; r <= rmax; ++r) {
        auto coeff = U.R.mul(U.R.t_power(r), inv_factorial(U.R, r));
        auto hpart = U.shifted_factorial(c.h, a, static_cast<int>(r), /*rising=*/true);
        F = U.add(F, U.smul(coeff, U.tensor2(hpart, U.pow(c.e, r))));
    }
    return F;
}

// ----- undeformed structure maps as generator images -----

template <class Ring>
typename PBW<Ring>::template GenImages<1> antipode0_images(PBW<Ring>& U) {
    return [&U](int g) { return U.smul(U.R.neg(U.R.one()), U.gen(g)); };
}

template <class Ring>
typename PBW<Ring>::template GenImages<2> coproduct0_images(PBW<Ring>& U) {
    return [&U](int g) {
        auto x = U.gen(g);
        return U.add(U.ext_right(x), U.ext_left(x));
    };
}

template <class Ring>
typename PBW<Ring>::template GenImages<1> counit0_images(PBW<Ring>& U) {
    return [&U](int) { return U.template zero<1>(); };
}

// m(S0 (x) Id) and m(Id (x) S0) folded onto one tensor factor
template <class Ring>
typename PBW<Ring>::Alg fold_antipode_left(PBW<Ring>& U,
                                           const typename PBW<Ring>::template Tens<2>& x) {
    return U.template fold<2>(U.template apply_on_leg<2, 1>(x, 0, antipode0_images(U), true));
}

template <class Ring>
typename PBW<Ring>::Alg fold_antipode_right(PBW<Ring>& U,
                                            const typename PBW<Ring>::template Tens<2>& x) {
    return U.template fold<2>(U.template apply_on_leg<2, 1>(x, 1, antipode0_images(U), true));
}

// u_a = m(S0 (x) Id) applied to the rising series, v_a to the falling one
template <class Ring>
typename PBW<Ring>::Alg twist_u(PBW<Ring>& U, const Carrier<Ring>& c, long a, long rmax) {
    return fold_antipode_left(U, basic_twist_inverse(U, c, a, rmax));
}

template <class Ring>
typename PBW<Ring>::Alg twist_v(PBW<Ring>& U, const Carrier<Ring>& c, long a, long rmax) {
    return fold_antipode_right(U, basic_twist(U, c, a, rmax));
}

// ----- powers of (1 - e t) -----

template <class Ring>
typename PBW<Ring>::Alg one_minus_et(PBW<Ring>& U, const typename PBW<Ring>::Alg& e) {
    return U.sub(U.template one<1>(), U.smul(U.R.t_power(1), e));
}

// sum_{r<=cap} e^r t^r: the inverse of (1 - e t) whenever the tail vanishes
template <class Ring>
typename PBW<Ring>::Alg geometric_series(PBW<Ring>& U, const typename PBW<Ring>::Alg& e,
                                         long cap) {
    auto w = U.template zero<1>();
    auto ep = U.template one<1>();
    for (long r = 0; r <= cap; ++r) {
        if (r > 0) ep = U.mul(ep, e);
        w = U.add(w, U.smul(U.R.t_power(r), ep));
    }
    return w;
}

// (1 - e t)^b for integer b.  Negative powers need an actual inverse: the
// truncated geometric series in characteristic zero, and the finite
// geometric sum in the restricted quotient where e^p = 0.  Prior to the
// restricted quotient (1 - e t) is not invertible, and this throws rather
// than pretend otherwise.
template <class Ring>
typename PBW<Ring>::Alg one_minus_et_pow(PBW<Ring>& U, const typename PBW<Ring>::Alg& e, long b,
                                         long rmax) {
    if (b >= 0) return U.pow(one_minus_et(U, e), b);
    long ch = U.R.characteristic();
    if (ch > 0) {
        if (U.L.p == 0)
            throw DivisionByNonUnit(
                "(1 - e t) has no inverse before the restricted quotient is taken");
        auto w = geometric_series(U, e, ch - 1);
        if (!U.eq(U.mul(one_minus_et(U, e), w), U.template one<1>()) ||
            !U.eq(U.mul(w, one_minus_et(U, e)), U.template one<1>()))
            throw DivisionByNonUnit("geometric sum fails to invert (1 - e t)");
        return U.pow(w, -b);
    }
    return U.pow(geometric_series(U, e, rmax), -b);
}

// ----- twist axioms, checked mechanically -----

template <class Ring>
bool twist_cocycle_ok(PBW<Ring>& U, const typename PBW<Ring>::template Tens<2>& F) {
    auto D0 = coproduct0_images(U);
    auto lhs = U.mul(U.ext23(F), U.template apply_on_leg<2, 2>(F, 0, D0));
    auto rhs = U.mul(U.ext01(F), U.template apply_on_leg<2, 2>(F, 1, D0));
    return U.eq(lhs, rhs);
}

template <class Ring>
bool twist_counit_ok(PBW<Ring>& U, const typename PBW<Ring>::template Tens<2>& F) {
    auto eps = counit0_images(U);
    auto l = U.template fold<2>(U.template apply_on_leg<2, 1>(F, 0, eps));
    auto r = U.template fold<2>(U.template apply_on_leg<2, 1>(F, 1, eps));
    return U.eq(l, U.template one<1>()) && U.eq(r, U.template one<1>());
}

template <class Ring>
bool twist_inverse_ok(PBW<Ring>& U, const typename PBW<Ring>::template Tens<2>& F,
                      const typename PBW<Ring>::template Tens<2>& Finv) {
    return U.eq(U.mul(F, Finv), U.template one<2>()) &&
           U.eq(U.mul(Finv, F), U.template one<2>());
}

// classical Yang-Baxter equation for r = h (x) e - e (x) h
template <class Ring>
bool cybe_ok(PBW<Ring>& U, const Carrier<Ring>& c) {
    auto r = U.sub(U.tensor2(c.h, c.e), U.tensor2(c.e, c.h));
    auto r12 = U.ext23(r);
    auto r13 = U.ext13(r);
    auto r23 = U.ext01(r);
    auto acc = U.add(U.add(U.comm(r12, r13), U.comm(r12, r23)), U.comm(r13, r23));
    return U.template is_zero<3>(acc);
}

// ----- products of basic twists -----

template <class Ring>
struct TwistPair {
    typename PBW<Ring>::template Tens<2> F;     // the twist
    typename PBW<Ring>::template Tens<2> Finv;  // its inverse
};

// all four cross commutators between two carrier pairs must vanish for the
// product of their twists to be a twist again
template <class Ring>
bool carriers_commute(PBW<Ring>& U, const Carrier<Ring>& a, const Carrier<Ring>& b) {
    return U.template is_zero<1>(U.comm(a.h, b.h)) && U.template is_zero<1>(U.comm(a.h, b.e)) &&
           U.template is_zero<1>(U.comm(a.e, b.h)) && U.template is_zero<1>(U.comm(a.e, b.e));
}

template <class Ring>
TwistPair<Ring> build_twist(PBW<Ring>& U, const std::vector<Carrier<Ring>>& chain, long a,
                            long rmax) {
    if (chain.empty()) throw InvalidTwist("empty carrier chain");
    for (size_t i = 0; i < chain.size(); ++i)
        for (size_t j = i + 1; j < chain.size(); ++j)
            if (!carriers_commute(U, chain[i], chain[j]))
                throw InvalidTwist("carriers " + std::to_string(i) + " and " + std::to_string(j) +
                                   " of the chain do not commute");
    TwistPair<Ring> out{U.template one<2>(), U.template one<2>()};
    for (const Carrier<Ring>& c : chain) out.F = U.mul(out.F, basic_twist(U, c, a, rmax));
    for (auto it = chain.rbegin(); it != chain.rend(); ++it)
        out.Finv = U.mul(out.Finv, basic_twist_inverse(U, *it, a, rmax));
    return out;
}

// ----- catalogues of available carrier choices -----

inline std::vector<CarrierChoice> vertical_catalogue(int n) {
    std::vector<CarrierChoice> out;
    for (int k = 0; k < n; ++k)
        for (int kp = 0; kp < n; ++kp)
            if (k != kp) out.push_back(CarrierChoice{0, k, kp, -1});
    return out;
}

inline std::vector<CarrierChoice> horizontal_catalogue(int n) {
    std::vector<CarrierChoice> out;
    for (int k = 0; k < n; ++k)
        for (int kp = 0; kp < n; ++kp)
            for (int m = 0; m < n; ++m)
                if (k != kp && m != k && m != kp) out.push_back(CarrierChoice{1, k, kp, m});
    return out;
}

// diagonal chains (2,1), (2,1)(3,1), ..., up to length n-1
inline std::vector<std::vector<CarrierChoice>> chain_catalogue(int n) {
    std::vector<std::vector<CarrierChoice>> out;
    std::vector<CarrierChoice> acc;
    for (int i = 1; i < n; ++i) {
        acc.push_back(CarrierChoice{0, i, 0, -1});
        out.push_back(acc);
    }
    return out;
}

}  // namespace hopfsmith

#endif
