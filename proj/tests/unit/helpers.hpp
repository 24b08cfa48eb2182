#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "facetlab/circulant.hpp"
#include "facetlab/generators.hpp"
#include "facetlab/poset.hpp"

namespace fl = facetlab;

// Brute-force closure oracle: enumerate every nonempty subset of rows,
// intersect, keep the distinct nonempty results. Only usable for m <= ~20;
// independent of the worklist implementation it checks.
inline std::vector<fl::Bits> brute_force_closure(const fl::IncidenceMatrix& A) {
    std::set<std::vector<int>> seen;
    for (unsigned long mask = 1; mask < (1ul << A.m); ++mask) {
        fl::Bits s = fl::Bits::full(A.n);
        for (int f = 0; f < A.m; ++f)
            if (mask & (1ul << f)) s &= A.rows[size_t(f)];
        if (s.any()) seen.insert(s.elements());
    }
    std::vector<fl::Bits> out;
    for (const auto& v : seen) out.push_back(fl::Bits::from(A.n, v));
    std::sort(out.begin(), out.end(), fl::Bits::canon_less);
    return out;
}

inline const char* kFig1Vfi = "5 4\n1111\n1100\n0110\n0011\n1001";
inline const char* kSegVfi = "2 2\n10\n01";

inline fl::IncidenceMatrix fig1() { return fl::parse_incidence(kFig1Vfi); }
inline fl::IncidenceMatrix seg() { return fl::parse_incidence(kSegVfi); }

// random row+column relabeling
inline fl::IncidenceMatrix shuffle_matrix(const fl::IncidenceMatrix& A, std::mt19937_64& rng) {
    std::vector<int> rp(size_t(A.m)), cp(size_t(A.n));
    for (int i = 0; i < A.m; ++i) rp[size_t(i)] = i;
    for (int j = 0; j < A.n; ++j) cp[size_t(j)] = j;
    std::shuffle(rp.begin(), rp.end(), rng);
    std::shuffle(cp.begin(), cp.end(), rng);
    std::vector<fl::Bits> rows;
    rows.reserve(size_t(A.m));
    for (int f = 0; f < A.m; ++f) {
        fl::Bits row{A.n};
        for (int v = 0; v < A.n; ++v)
            if (A.rows[size_t(rp[size_t(f)])].test(cp[size_t(v)])) row.set(v);
        rows.push_back(std::move(row));
    }
    return fl::IncidenceMatrix::from_rows(A.n, std::move(rows));
}

// random 0/1 matrix with every row nonempty
inline fl::IncidenceMatrix random_matrix(int m, int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<int> col(0, n - 1);
    std::vector<fl::Bits> rows;
    for (int f = 0; f < m; ++f) {
        fl::Bits row{n};
        for (int v = 0; v < n; ++v)
            if (coin(rng)) row.set(v);
        if (row.none()) row.set(col(rng));
        rows.push_back(std::move(row));
    }
    return fl::IncidenceMatrix::from_rows(n, std::move(rows));
}

// switch-chain moves preserving row and column sums, seeded from M(n,d)
inline fl::IncidenceMatrix random_constant_sum_matrix(int n, int d, int moves,
                                                      std::mt19937_64& rng) {
    fl::IncidenceMatrix A = fl::circulant(n, d);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int t = 0; t < moves; ++t) {
        int r1 = pick(rng), r2 = pick(rng), c1 = pick(rng), c2 = pick(rng);
        if (r1 == r2 || c1 == c2) continue;
        auto& a = A.rows[size_t(r1)];
        auto& b = A.rows[size_t(r2)];
        if (a.test(c1) && !a.test(c2) && !b.test(c1) && b.test(c2)) {
            a.reset(c1);
            a.set(c2);
            b.reset(c2);
            b.set(c1);
        }
    }
    return A;
}
