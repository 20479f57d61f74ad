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

#ifndef HOPFSMITH_BIGINT_HPP
#define HOPFSMITH_BIGINT_HPP

#include <gmpxx.h>

#include <string>

#include "hopfsmith/errors.hpp"

namespace hopfsmith {

// Exact arithmetic is delegated to GMP. `Int` and `Rat` are the only numeric
// types the engine computes with in characteristic zero; mpq_class keeps
// rationals canonical (lowest terms, positive denominator) through arithmetic.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0)
        throw DivisionByNonUnit("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// Exact extraction; throws unless the rational is integral.
inline Int to_int(const Rat& r) {
    if (!is_integer(r))
        throw NotInAlgebra("rational " + r.get_str() + " is not an integer");
    return r.get_num();
}

inline Int factorial(unsigned long n) {
    Int f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

// Binomial coefficient for arbitrary (possibly negative) integer top:
// binom(a, r) = a(a-1)...(a-r+1) / r!, an integer for every a in Z, r >= 0.
inline Int gen_binom(const Int& a, long r) {
    if (r < 0) return 0;
    Int num = 1;
    for (long j = 0; j < r; ++j) num *= a - j;
    Rat q = make_rat(num, factorial(static_cast<unsigned long>(r)));
    return to_int(q);
}

inline std::string to_string(const Int& v) { return v.get_str(); }
inline std::string to_string(const Rat& v) { return v.get_str(); }

}  // namespace hopfsmith

#endif
