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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfsmith/witt.hpp"

using namespace hopfsmith;

static WittElem term(const MultiIndex& b, int i, long c = 1) {
    WittElem w;
    w.add_term(b, i, Rat(c));
    return w;
}

TEST_CASE("derivation bracket on monomial vector fields") {
    // [x1 D1, x2 D2] = 0 (disjoint supports)
    WittElem a = term(MultiIndex{1, 0}, 0);
    WittElem b = term(MultiIndex{0, 1}, 1);
    CHECK(witt_bracket(a, b).is_zero());
    // [D1, x1 D1] = D1
    WittElem d1 = term(MultiIndex{0, 0}, 0);
    WittElem x1d1 = term(MultiIndex{1, 0}, 0);
    CHECK(witt_bracket(d1, x1d1) == d1);
    // [x1 D2, x2 D1] = x1 D1 - x2 D2
    WittElem u = term(MultiIndex{1, 0}, 1);
    WittElem v = term(MultiIndex{0, 1}, 0);
    WittElem expect = term(MultiIndex{1, 0}, 0) - term(MultiIndex{0, 1}, 1);
    CHECK(witt_bracket(u, v) == expect);
}

TEST_CASE("bracket is antisymmetric and satisfies Jacobi on samples") {
    std::vector<WittElem> sample = {
        term(MultiIndex{0, 0, 0}, 0),
        term(MultiIndex{1, 0, 0}, 1),
        term(MultiIndex{0, 2, 1}, 2) - term(MultiIndex{1, 1, 1}, 0, 3),
        term(MultiIndex{2, 0, 1}, 1, 2),
        term(MultiIndex{0, 0, 3}, 2),
    };
    for (const auto& a : sample)
        for (const auto& b : sample) {
            CHECK((witt_bracket(a, b) + witt_bracket(b, a)).is_zero());
            for (const auto& c : sample) {
                WittElem jac = witt_bracket(witt_bracket(a, b), c) +
                               witt_bracket(witt_bracket(b, c), a) +
                               witt_bracket(witt_bracket(c, a), b);
                CHECK(jac.is_zero());
            }
        }
}

TEST_CASE("homogeneous view round trips and brackets by the evaluation rule") {
    // x^alpha d with d = 2 d_1 - d_3 at alpha = (1, 2, 0)
    HomogElem h{MultiIndex{1, 2, 0}, {Rat(2), Rat(0), Rat(-1)}};
    WittElem w = h.to_witt();
    HomogElem back = to_homogeneous(w, 3);
    CHECK(back.alpha == h.alpha);
    CHECK(back.d == h.d);

    // [x^a d, x^b d'] = x^{a+b} (d(b) d' - d'(a) d)
    HomogElem g{MultiIndex{0, 1, 1}, {Rat(1), Rat(1), Rat(0)}};
    WittElem lhs = witt_bracket(h.to_witt(), g.to_witt());
    HomogElem combo;
    combo.alpha = h.alpha + g.alpha;
    combo.d.assign(3, Rat(0));
    Rat db = h.eval(g.alpha), da = g.eval(h.alpha);
    for (int i = 0; i < 3; ++i) combo.d[i] = db * g.d[i] - da * h.d[i];
    CHECK(lhs == combo.to_witt());

    WittElem mixed = h.to_witt() + term(MultiIndex{5, 0, 0}, 0);
    CHECK_THROWS_AS(to_homogeneous(mixed, 3), NotHomogeneous);
}

TEST_CASE("divergence of monomial fields and the homogeneous div rule") {
    // Div(x1^2 x2 D1) = 2 x1 x2
    WittElem w = term(MultiIndex{2, 1}, 0);
    auto dv = witt_Div(w);
    REQUIRE(dv.size() == 1);
    CHECK(dv.begin()->first == MultiIndex{1, 1});
    CHECK(dv.begin()->second == 2);
    // div(x^alpha d) = d(alpha) x^alpha, while Div on the D-form picks up
    // an extra trace term: Div(x^alpha d) = (d(alpha) + tr d) x^alpha
    HomogElem h{MultiIndex{1, 2, 0}, {Rat(2), Rat(0), Rat(-1)}};
    CHECK(homog_div_coeff(h) == Rat(2));  // 2*1 + 0*2 + (-1)*0
    auto dv2 = witt_Div(h.to_witt());
    REQUIRE(dv2.size() == 1);
    CHECK(dv2.begin()->second == Rat(3));  // 2 + (2 + 0 - 1)
    // a trace-free direction with d(alpha) = 0 lands in Ker Div
    HomogElem h2{MultiIndex{1, 2, 0}, {Rat(2), Rat(-1), Rat(-1)}};
    CHECK(homog_div_coeff(h2) == Rat(0));
    CHECK(witt_Div(h2.to_witt()).empty());
}

TEST_CASE("canonical basis members are divergence free") {
    for (int n = 2; n <= 4; ++n)
        for (long d = 0; d <= 3; ++d)
            for (const SPlusKey& k : splus_degree_keys(n, d)) {
                WittElem w = splus_element(k, n);
                CHECK(!w.is_zero());
                CHECK(witt_Div(w).empty());
            }
}

TEST_CASE("degree slice sizes match the divergence rank count") {
    // dim (Ker Div at monomial degree d) = n binom(d+n-1, n-1) - binom(d+n-2, n-1)
    for (int n = 2; n <= 4; ++n)
        for (long d = 0; d <= 4; ++d) {
            Int expect = Int(n) * gen_binom(Int(d + n - 1), n - 1) -
                         gen_binom(Int(d + n - 2), n - 1);
            CHECK(Int(static_cast<long>(splus_degree_keys(n, d).size())) == expect);
        }
}

TEST_CASE("decomposition over the canonical basis round trips") {
    int n = 3;
    for (long d = 0; d <= 3; ++d) {
        auto keys = splus_degree_keys(n, d);
        // a full-support combination with assorted rational weights
        WittElem mix;
        long w = 1;
        std::map<SPlusKey, Rat> want;
        for (const SPlusKey& k : keys) {
            Rat c = make_rat(Int(w % 7 - 3), Int(1 + w % 3));
            ++w;
            if (c == 0) c = Rat(1);
            want[k] = c;
            mix = mix + c * splus_element(k, n);
        }
        auto got = splus_decompose(mix, n);
        CHECK(got == want);
    }
}

TEST_CASE("membership test rejects fields with nonzero divergence") {
    CHECK_THROWS_AS(splus_decompose(term(MultiIndex{1, 0}, 0), 2), NotInAlgebra);   // x1 D1
    CHECK_THROWS_AS(splus_decompose(term(MultiIndex{0, 1}, 1), 2), NotInAlgebra);   // x2 D2
    CHECK_THROWS_AS(splus_decompose(term(MultiIndex{1, 2, 3}, 2), 3), NotInAlgebra);
    // but D_n alone is fine
    CHECK(splus_decompose(term(MultiIndex{0, 0}, 1), 2).size() == 1);
}

TEST_CASE("bracket closure of the canonical basis") {
    int n = 3;
    std::vector<WittElem> low;
    for (long d = 0; d <= 2; ++d)
        for (const SPlusKey& k : splus_degree_keys(n, d)) low.push_back(splus_element(k, n));
    for (const auto& a : low)
        for (const auto& b : low) {
            WittElem br = witt_bracket(a, b);
            if (br.is_zero()) continue;
            auto coords = splus_decompose(br, n);  // throws if not in the span
            WittElem rebuilt;
            for (const auto& [k, c] : coords) rebuilt = rebuilt + c * splus_element(k, n);
            CHECK(rebuilt == br);
        }
}

TEST_CASE("direction space of a graded component is the expected kernel") {
    MultiIndex eta{1, 0, 0};
    MultiIndex alpha{2, 1, 1};
    auto ker = eta_component_basis(eta, alpha);  // d with d(alpha - eta) = 0
    CHECK(ker.size() == 2);
    for (const auto& v : ker) {
        Int dot = 0;
        for (int i = 0; i < 3; ++i) dot += v[i] * (alpha[i] - eta[i]);
        CHECK(dot == 0);
        HomogElem h;
        h.alpha = alpha - eta;
        for (int i = 0; i < 3; ++i) h.d.push_back(Rat(v[i]));
        CHECK(homog_div_coeff(h) == 0);
    }
    // alpha = eta: the constraint vanishes, every direction allowed
    CHECK(eta_component_basis(eta, eta).size() == 3);
}

TEST_CASE("twist carriers satisfy [h, e] = e") {
    for (int n = 2; n <= 4; ++n)
        for (int k = 0; k < n; ++k)
            for (int kp = 0; kp < n; ++kp) {
                if (k == kp) continue;
                Char0Carrier c = vertical_carrier_char0(n, k, kp);
                WittElem h = c.h_homog(n).to_witt();
                WittElem e = c.e_homog().to_witt();
                CHECK(witt_bracket(h, e) == e);
                CHECK(witt_Div(e).empty());
                // both live in the canonical span
                CHECK_NOTHROW(splus_decompose(h, n));
                CHECK_NOTHROW(splus_decompose(e, n));
            }
    int n = 3;
    for (int k = 0; k < n; ++k)
        for (int kp = 0; kp < n; ++kp) {
            if (k == kp) continue;
            for (int m = 0; m < n; ++m) {
                if (m == k || m == kp) continue;
                Char0Carrier c = horizontal_carrier_char0(n, k, kp, m);
                WittElem h = c.h_homog(n).to_witt();
                WittElem e = c.e_homog().to_witt();
                CHECK(witt_bracket(h, e) == e);
                CHECK(witt_Div(e).empty());
                CHECK_NOTHROW(splus_decompose(e, n));
            }
        }
    CHECK_THROWS_AS(horizontal_carrier_char0(2, 0, 1, 0), InvalidTwist);
}
