#pragma once

// Brute-force invariant-subspace oracle used by the tests. Deliberately
// independent of the library's linear algebra: subspaces of GF(p)^n are
// enumerated as canonical reduced-echelon bases with hand-rolled mod-p
// integer arithmetic, so each proper subspace of every dimension is
// visited exactly once.

#include <vector>

#include "permext/reps.hpp"

namespace permext_test {

using IRow = std::vector<long long>;
using IMat = std::vector<IRow>;

inline IMat to_grid(const permext::Matrix& m, long long p) {
    IMat g(m.rows(), IRow(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) g[i][j] = m.at(i, j).res() % p;
    return g;
}

inline bool is_reduced_echelon(const IMat& m) {
    long long prev_pivot = -1;
    for (const IRow& row : m) {
        std::size_t lead = 0;
        while (lead < row.size() && row[lead] == 0) ++lead;
        if (lead == row.size()) return false;  // zero row
        if (static_cast<long long>(lead) <= prev_pivot) return false;
        if (row[lead] != 1) return false;
        prev_pivot = static_cast<long long>(lead);
    }
    for (std::size_t r = 0; r < m.size(); ++r) {
        std::size_t lead = 0;
        while (m[r][lead] == 0) ++lead;
        for (std::size_t s = 0; s < m.size(); ++s)
            if (s != r && m[s][lead] != 0) return false;
    }
    return true;
}

inline bool in_row_span(const IMat& echelon, IRow v, long long p) {
    for (const IRow& b : echelon) {
        std::size_t lead = 0;
        while (lead < b.size() && b[lead] == 0) ++lead;
        if (lead < b.size() && v[lead] != 0) {
            long long f = v[lead];
            for (std::size_t j = 0; j < b.size(); ++j) v[j] = ((v[j] - f * b[j]) % p + p) % p;
        }
    }
    for (long long x : v)
        if (x != 0) return false;
    return true;
}

inline std::vector<IMat> all_proper_subspaces(long long p, std::size_t n) {
    std::vector<IMat> out;
    for (std::size_t d = 1; d < n; ++d) {
        long long total = 1;
        for (std::size_t c = 0; c < d * n; ++c) total *= p;
        for (long long code = 0; code < total; ++code) {
            IMat m(d, IRow(n));
            long long rest = code;
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    m[i][j] = rest % p;
                    rest /= p;
                }
            if (is_reduced_echelon(m)) out.push_back(std::move(m));
        }
    }
    return out;
}

inline bool oracle_has_invariant_subspace(const permext::MatrixGroupGens& gens) {
    const long long p = gens.field().prime();
    std::vector<IMat> grids;
    for (const permext::Matrix& g : gens.generators()) grids.push_back(to_grid(g, p));
    for (const IMat& w : all_proper_subspaces(p, gens.dim())) {
        bool invariant = true;
        for (const IMat& g : grids) {
            for (const IRow& b : w) {
                IRow image(b.size(), 0);
                for (std::size_t i = 0; i < b.size(); ++i)
                    for (std::size_t j = 0; j < b.size(); ++j)
                        image[i] = (image[i] + g[i][j] * b[j]) % p;
                if (!in_row_span(w, image, p)) {
                    invariant = false;
                    break;
                }
            }
            if (!invariant) break;
        }
        if (invariant) return true;
    }
    return false;
}

}  // namespace permext_test
