#include "qasep/oracle.hpp"

#include <algorithm>
#include <limits>
#include <vector>

namespace qasep {

Rat Generator::rate(unsigned from, unsigned to) const {
    auto it = rates.find({from, to});
    return it == rates.end() ? Rat(0) : it->second;
}

Rat Generator::diagonal(unsigned state) const {
    Rat sum(0);
    auto it = rates.lower_bound({state, 0u});
    for (; it != rates.end() && it->first.first == state; ++it) sum += it->second;
    return -sum;
}

Generator make_generator(const AsepParams& params, int L, int hard_cap) {
    if (L < 1) throw ParameterError("L must be >= 1");
    if (L > hard_cap) throw SizeError("L exceeds the oracle cap of " + std::to_string(hard_cap));
    Generator g;
    g.L = L;
    auto add = [&g](unsigned from, unsigned to, const Rat& r) {
        if (r == 0) return;
        g.rates[{from, to}] += r;
    };
    unsigned n = 1u << L;
    for (unsigned s = 0; s < n; ++s) {
        unsigned site1 = 1u << (L - 1);
        add(s, s ^ site1, (s & site1) ? params.gamma : params.alpha);
        unsigned siteL = 1u;
        add(s, s ^ siteL, (s & siteL) ? params.beta : params.delta);
        for (int k = 1; k <= L - 1; ++k) {
            unsigned left = 1u << (L - k);
            unsigned right = 1u << (L - k - 1);
            bool occ_left = s & left, occ_right = s & right;
            if (occ_left && !occ_right) add(s, s ^ left ^ right, Rat(1));
            if (!occ_left && occ_right) add(s, s ^ left ^ right, params.q);
        }
    }
    return g;
}

namespace {

using SparseRow = std::map<unsigned, Rat>;

void axpy(SparseRow& row, const Rat& factor, const SparseRow& other) {
    for (const auto& [col, v] : other) {
        auto [it, inserted] = row.try_emplace(col, factor * v);
        if (!inserted) {
            it->second += factor * v;
            if (it->second == 0) row.erase(it);
        }
    }
}

} // namespace

Dist stationary_exact(const Generator& g) {
    unsigned n = g.size();
    // Balance equations sum_s pi_s Q[s][t] = 0 for every t, with the equation
    // for t = 0 replaced by the normalization sum pi = 1.
    std::vector<SparseRow> rows(n);
    std::vector<Rat> rhs(n, Rat(0));
    for (unsigned s = 0; s < n; ++s) rows[0][s] = Rat(1);
    rhs[0] = Rat(1);
    for (const auto& [edge, r] : g.rates) {
        auto [from, to] = edge;
        if (to != 0) rows[to][from] += r;
        if (from != 0) rows[from][from] -= r;
    }

    std::vector<unsigned> pivot_row(n, std::numeric_limits<unsigned>::max());
    std::vector<bool> used(n, false);
    for (unsigned col = 0; col < n; ++col) {
        unsigned best = n;
        std::size_t best_nnz = 0;
        for (unsigned r = 0; r < n; ++r) {
            if (used[r]) continue;
            auto it = rows[r].find(col);
            if (it == rows[r].end() || it->second == 0) continue;
            if (best == n || rows[r].size() < best_nnz) {
                best = r;
                best_nnz = rows[r].size();
            }
        }
        if (best == n)
            throw ModelError("generator nullspace is not one-dimensional");
        used[best] = true;
        pivot_row[col] = best;
        Rat pivot = rows[best].at(col);
        for (unsigned r = 0; r < n; ++r) {
            if (r == best) continue;
            auto it = rows[r].find(col);
            if (it == rows[r].end() || it->second == 0) continue;
            Rat factor = -(it->second / pivot);
            axpy(rows[r], factor, rows[best]);
            rhs[r] += factor * rhs[best];
            rows[r].erase(col);
        }
    }

    Dist dist;
    dist.L = g.L;
    dist.p.resize(n);
    Rat total(0);
    for (unsigned col = 0; col < n; ++col) {
        unsigned r = pivot_row[col];
        dist.p[col] = rhs[r] / rows[r].at(col);
        if (dist.p[col] <= 0) throw ModelError("nonpositive stationary entry");
        total += dist.p[col];
    }
    if (total != 1) throw ModelError("stationary vector does not sum to 1");

    // pi Q = 0, re-checked exactly.
    std::vector<Rat> residual(n, Rat(0));
    for (const auto& [edge, r] : g.rates) {
        auto [from, to] = edge;
        residual[to] += dist.p[from] * r;
        residual[from] -= dist.p[from] * r;
    }
    for (unsigned s = 0; s < n; ++s)
        if (residual[s] != 0) throw ModelError("pi Q != 0 after elimination");
    return dist;
}

} // namespace qasep
