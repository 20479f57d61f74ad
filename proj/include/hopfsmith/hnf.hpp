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

#ifndef HOPFSMITH_HNF_HPP
#define HOPFSMITH_HNF_HPP

#include <vector>

#include "hopfsmith/bigint.hpp"

namespace hopfsmith {

using IntMat = std::vector<std::vector<Int>>;  // row major

// Row-style Hermite normal form (in place), returning the rank.  Pivots are
// positive, entries above a pivot are reduced into [0, pivot).  Deterministic,
// so it doubles as a canonical form for lattice bases.
inline int hermite_normal_form(IntMat& A) {
    if (A.empty()) return 0;
    int rows = static_cast<int>(A.size());
    int cols = static_cast<int>(A[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        // gcd out column c below row r by repeated remainder steps
        while (true) {
            int piv = -1;
            for (int i = r; i < rows; ++i)
                if (A[i][c] != 0 && (piv == -1 || abs(A[i][c]) < abs(A[piv][c]))) piv = i;
            if (piv == -1) break;
            std::swap(A[r], A[piv]);
            bool clean = true;
            for (int i = r + 1; i < rows; ++i) {
                if (A[i][c] == 0) continue;
                Int q = A[i][c] / A[r][c];  // truncated division is fine: loop to fixpoint
                for (int j = 0; j < cols; ++j) A[i][j] -= q * A[r][j];
                if (A[i][c] != 0) clean = false;
            }
            if (clean) break;
        }
        if (A[r][c] == 0) continue;
        if (A[r][c] < 0)
            for (int j = 0; j < cols; ++j) A[r][j] = -A[r][j];
        // reduce entries above the pivot
        for (int i = 0; i < r; ++i) {
            Int q = A[i][c] / A[r][c];
            if (A[i][c] % A[r][c] < 0) q -= 1;  // floor division
            if (q != 0)
                for (int j = 0; j < cols; ++j) A[i][j] -= q * A[r][j];
        }
        ++r;
    }
    A.resize(r);
    return r;
}

// Basis of the integer kernel {x in Z^n : A x = 0}, canonicalized by HNF.
// Column reduction of A with a unimodular transform; the transform columns
// matching vanished columns of A span the kernel lattice.
inline IntMat integer_kernel_basis(const IntMat& Ain) {
    int m = static_cast<int>(Ain.size());
    int n = m == 0 ? 0 : static_cast<int>(Ain[0].size());
    if (n == 0) return {};
    IntMat A = Ain;
    IntMat U(n, std::vector<Int>(n, 0));
    for (int i = 0; i < n; ++i) U[i][i] = 1;
    auto col_addmul = [&](int dst, int src, const Int& q) {
        for (int i = 0; i < m; ++i) A[i][dst] -= q * A[i][src];
        for (int i = 0; i < n; ++i) U[i][dst] -= q * U[i][src];
    };
    auto col_swap = [&](int a, int b) {
        for (int i = 0; i < m; ++i) std::swap(A[i][a], A[i][b]);
        for (int i = 0; i < n; ++i) std::swap(U[i][a], U[i][b]);
    };
    int lead = 0;
    for (int row = 0; row < m && lead < n; ++row) {
        while (true) {
            int piv = -1;
            for (int c = lead; c < n; ++c)
                if (A[row][c] != 0 && (piv == -1 || abs(A[row][c]) < abs(A[row][piv]))) piv = c;
            if (piv == -1) break;
            col_swap(lead, piv);
            bool clean = true;
            for (int c = lead + 1; c < n; ++c) {
                if (A[row][c] == 0) continue;
                Int q = A[row][c] / A[row][lead];
                col_addmul(c, lead, q);
                if (A[row][c] != 0) clean = false;
            }
            if (clean) break;
        }
        if (A[row][lead] != 0) ++lead;
    }
    IntMat ker;
    for (int c = lead; c < n; ++c) {
        std::vector<Int> v(n);
        for (int i = 0; i < n; ++i) v[i] = U[i][c];
        ker.push_back(std::move(v));
    }
    hermite_normal_form(ker);
    return ker;
}

}  // namespace hopfsmith

#endif
