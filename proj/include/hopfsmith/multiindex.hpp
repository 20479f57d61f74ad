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

#ifndef HOPFSMITH_MULTIINDEX_HPP
#define HOPFSMITH_MULTIINDEX_HPP

#include <compare>
#include <numeric>
#include <string>
#include <vector>

namespace hopfsmith {

// Exponent vector in Z^n.  Shared by the characteristic-zero monomials x^alpha
// (entries may be negative in homogeneous-component bookkeeping) and the
// divided-power monomials x^(alpha) (entries in [0, p-1]).
struct MultiIndex {
    std::vector<long> e;

    MultiIndex() = default;
    explicit MultiIndex(int n) : e(n, 0) {}
    MultiIndex(std::initializer_list<long> v) : e(v) {}

    static MultiIndex unit(int n, int i) {
        MultiIndex m(n);
        m.e[i] = 1;
        return m;
    }

    int n() const { return static_cast<int>(e.size()); }
    long operator[](int i) const { return e[i]; }
    long& operator[](int i) { return e[i]; }
    long degree() const { return std::accumulate(e.begin(), e.end(), 0L); }

    bool nonnegative() const {
        for (long v : e)
            if (v < 0) return false;
        return true;
    }
    bool bounded_by(long cap) const {
        for (long v : e)
            if (v > cap) return false;
        return true;
    }
    bool is_zero() const {
        for (long v : e)
            if (v != 0) return false;
        return true;
    }

    friend MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
        MultiIndex r = a;
        for (int i = 0; i < r.n(); ++i) r.e[i] += b.e[i];
        return r;
    }
    friend MultiIndex operator-(const MultiIndex& a, const MultiIndex& b) {
        MultiIndex r = a;
        for (int i = 0; i < r.n(); ++i) r.e[i] -= b.e[i];
        return r;
    }
    MultiIndex plus(int i, long v) const {
        MultiIndex r = *this;
        r.e[i] += v;
        return r;
    }

    friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.e == b.e; }
    // graded order: total degree first, then lex; this is the global basis
    // order every enumeration in the engine uses
    friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) {
        if (auto c = a.degree() <=> b.degree(); c != 0) return c;
        for (int i = 0; i < a.n() && i < b.n(); ++i)
            if (auto c = a.e[i] <=> b.e[i]; c != 0) return c;
        return a.n() <=> b.n();
    }

    std::string str() const {
        std::string s = "(";
        for (int i = 0; i < n(); ++i) {
            if (i) s += ",";
            s += std::to_string(e[i]);
        }
        return s + ")";
    }
};

// All alpha in Z_{>=0}^n with componentwise alpha <= cap, in graded-lex order.
inline std::vector<MultiIndex> boxed_multiindices(int n, long cap) {
    std::vector<MultiIndex> all;
    MultiIndex m(n);
    while (true) {
        all.push_back(m);
        int i = n - 1;
        while (i >= 0 && m.e[i] == cap) {
            m.e[i] = 0;
            --i;
        }
        if (i < 0) break;
        ++m.e[i];
    }
    std::sort(all.begin(), all.end());
    return all;
}

// All alpha in Z_{>=0}^n of total degree exactly d, graded-lex order.
inline void degree_multiindices_rec(int n, long d, int pos, MultiIndex& cur,
                                    std::vector<MultiIndex>& out) {
    if (pos == n - 1) {
        cur.e[pos] = d;
        out.push_back(cur);
        cur.e[pos] = 0;
        return;
    }
    for (long v = 0; v <= d; ++v) {
        cur.e[pos] = v;
        degree_multiindices_rec(n, d - v, pos + 1, cur, out);
    }
    cur.e[pos] = 0;
}

inline std::vector<MultiIndex> degree_multiindices(int n, long d) {
    std::vector<MultiIndex> out;
    MultiIndex cur(n);
    degree_multiindices_rec(n, d, 0, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace hopfsmith

#endif
