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

#include <algorithm>
#include <numeric>
#include <vector>

#include "hopfsmith/combinatorics.hpp"

using namespace hopfsmith;

// Independent oracle: count cycles of every permutation of {0,...,n-1} by
// brute force.  Nothing here shares code with the recurrence under test.
static std::vector<Int> cycle_census(int n) {
    std::vector<Int> byk(n + 1, 0);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<bool> seen(n, false);
        int cycles = 0;
        for (int s = 0; s < n; ++s) {
            if (seen[s]) continue;
            ++cycles;
            for (int j = s; !seen[j]; j = perm[j]) seen[j] = true;
        }
        byk[cycles] += 1;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return byk;
}

TEST_CASE("cycle counts match the first-kind Stirling recurrence") {
    for (int n = 1; n <= 7; ++n) {
        std::vector<Int> census = cycle_census(n);
        for (int k = 0; k <= n; ++k) CHECK(stirling_c(n, k) == census[k]);
    }
    // a few frozen values, confirmed by the census above
    CHECK(stirling_c(4, 2) == 11);
    CHECK(stirling_c(5, 2) == 50);
    CHECK(stirling_c(6, 3) == 225);
    CHECK(stirling_c(7, 1) == 720);
    CHECK(stirling_c(0, 0) == 1);
    CHECK(stirling_c(5, 0) == 0);
}

TEST_CASE("row sums count all permutations") {
    for (long n = 0; n <= 9; ++n) {
        Int total = 0;
        for (long k = 0; k <= n; ++k) total += stirling_c(n, k);
        CHECK(total == factorial(static_cast<unsigned long>(n)));
    }
}

TEST_CASE("rising factorial coefficients are unsigned Stirling numbers") {
    for (long n = 0; n <= 8; ++n) {
        ZPoly p = rising_factorial(Int(0), n);
        for (long k = 0; k <= n; ++k) CHECK(p.coeff(k) == stirling_c(n, k));
    }
}

TEST_CASE("falling factorial coefficients are signed Stirling numbers") {
    for (long n = 0; n <= 8; ++n) {
        ZPoly p = falling_factorial(Int(0), n);
        for (long k = 0; k <= n; ++k) CHECK(p.coeff(k) == stirling_s(n, k));
    }
}

TEST_CASE("shifted factorials multiply by index splitting") {
    for (long a = -4; a <= 4; ++a)
        for (long s = 0; s <= 5; ++s) {
            CHECK(identity_fall_rise(Int(a), s));
            for (long t = 0; s + t <= 5; ++t) {
                CHECK(identity_rising_split(Int(a), s, t));
                CHECK(identity_falling_split(Int(a), s, t));
            }
        }
}

TEST_CASE("convolution identities against closed binomial values") {
    for (long a = -4; a <= 4; ++a)
        for (long b = -4; b <= 4; ++b)
            for (long r = 0; r <= 5; ++r) {
                CHECK(identity_mixed_convolution(Int(a), Int(b), r));
                CHECK(identity_double_falling_convolution(Int(a), Int(b), r));
            }
}

TEST_CASE("identity suite driver reports no failures on a box") {
    CHECK(check_identity_suite(4, 4).empty());
}

TEST_CASE("quantization denominators always clear") {
    // spot value: 2^3 * (3)(5)(7) / 3! = 140
    CHECK(grunspan_integral(Int(2), Int(3), 3) == 140);
    CHECK(grunspan_integral(Int(1), Int(1), 4) == to_int(make_rat(Int(1 * 2 * 3 * 4), factorial(4))));
    CHECK(grunspan_integral(Int(-2), Int(5), 2) == Int(4 * 5 * 3) / 2);
    for (long a = -6; a <= 6; ++a)
        for (long k = -6; k <= 6; ++k)
            for (long l = 0; l <= 6; ++l) CHECK_NOTHROW(grunspan_integral(Int(a), Int(k), l));
}

TEST_CASE("polynomial scaffolding behaves") {
    ZPoly x{{Int(0), Int(1)}};
    ZPoly p = x * x - ZPoly::constant(Int(1));
    CHECK(p.coeff(0) == -1);
    CHECK(p.coeff(1) == 0);
    CHECK(p.coeff(2) == 1);
    CHECK((p - p).is_zero());
    CHECK(Int(3) * x == x + x + x);
}
