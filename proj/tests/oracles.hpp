// Independent reference computations and random generators for the tests.
#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "gkt/graph.hpp"
#include "gkt/int_matrix.hpp"

namespace oracle {

using gkt::Integer;
using gkt::IntMatrix;

// Leibniz expansion; only for n <= 7.
inline Integer leibniz_det(const IntMatrix& m) {
    const std::size_t n = m.rows();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Integer total = 0;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        Integer term = inversions % 2 ? -1 : 1;
        for (std::size_t i = 0; i < n && term != 0; ++i) term *= m(i, perm[i]);
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                    const std::function<void(const std::vector<std::size_t>&)>& f) {
    if (cur.size() == k) {
        f(cur);
        return;
    }
    for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        subsets(n, k, i + 1, cur, f);
        cur.pop_back();
    }
}

// Determinantal divisors: Δ_k = gcd of all k×k minors. The invariant factors
// are d_k = Δ_k / Δ_{k-1}. Returned in order for k = 1..min(rows, cols).
inline std::vector<Integer> determinantal_divisors(const IntMatrix& m) {
    std::vector<Integer> out;
    const std::size_t kmax = std::min(m.rows(), m.cols());
    for (std::size_t k = 1; k <= kmax; ++k) {
        Integer g = 0;
        std::vector<std::size_t> rows, cols;
        subsets(m.rows(), k, 0, rows, [&](const std::vector<std::size_t>& r) {
            subsets(m.cols(), k, 0, cols, [&](const std::vector<std::size_t>& c) {
                IntMatrix minor(k, k);
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j) minor(i, j) = m(r[i], c[j]);
                Integer d = leibniz_det(minor);
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
            });
        });
        out.push_back(g);
    }
    return out;
}

// Invariant factors (including 1s and 0s) from determinantal divisors.
inline std::vector<Integer> invariant_factors_by_minors(const IntMatrix& m) {
    std::vector<Integer> delta = determinantal_divisors(m);
    std::vector<Integer> out;
    Integer prev = 1;
    for (const auto& d : delta) {
        if (d == 0 || prev == 0) {
            out.push_back(0);
            prev = 0;
            continue;
        }
        out.push_back(d / prev);
        prev = d;
    }
    return out;
}

// Transitive closure by repeated squaring of the boolean adjacency.
inline bool strongly_connected_by_closure(const gkt::FiniteGraph& g) {
    const std::size_t n = g.num_vertices();
    std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) r[i][i] = true;
    for (const auto& e : g.edges()) r[g.index_of(e.from)][g.index_of(e.to)] = true;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (r[i][k] && r[k][j]) r[i][j] = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!r[i][j]) return false;
    return true;
}

// Enumerates simple cycles as vertex sequences starting at their smallest vertex.
inline std::vector<std::vector<std::size_t>> simple_cycles(const gkt::FiniteGraph& g) {
    const std::size_t n = g.num_vertices();
    std::vector<std::set<std::size_t>> succ(n);
    for (const auto& e : g.edges()) succ[g.index_of(e.from)].insert(g.index_of(e.to));
    std::vector<std::vector<std::size_t>> cycles;
    std::vector<std::size_t> path;
    std::vector<bool> on(n, false);
    std::function<void(std::size_t, std::size_t)> dfs = [&](std::size_t start, std::size_t v) {
        for (std::size_t w : succ[v]) {
            if (w == start) cycles.push_back(path);
            else if (w > start && !on[w]) {
                on[w] = true;
                path.push_back(w);
                dfs(start, w);
                path.pop_back();
                on[w] = false;
            }
        }
    };
    for (std::size_t s = 0; s < n; ++s) {
        path = {s};
        on[s] = true;
        dfs(s, s);
        on[s] = false;
    }
    return cycles;
}

inline bool exits_by_enumeration(const gkt::FiniteGraph& g) {
    for (const auto& c : simple_cycles(g)) {
        bool exit = false;
        for (std::size_t v : c)
            if (g.out_degree(v) >= 2) exit = true;
        if (!exit) return false;
    }
    return true;
}

// Hand-rolled generators.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

    IntMatrix matrix(std::size_t rows, std::size_t cols, long bound) {
        IntMatrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = uniform(-bound, bound);
        return m;
    }

    // Product of random elementary operations.
    IntMatrix unimodular(std::size_t n, int steps = 12) {
        IntMatrix u = IntMatrix::identity(n);
        if (n < 2) return u;
        for (int s = 0; s < steps; ++s) {
            auto i = static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 1));
            auto j = static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 2));
            if (j >= i) ++j;
            if (coin(0.2)) u.swap_rows(i, j);
            else u.add_row_multiple(i, j, Integer(uniform(-2, 2)));
        }
        return u;
    }

    // Up to `max_vertices` vertices, up to `max_edges` edges, parallel edges at most `max_parallel`.
    gkt::FiniteGraph graph(std::size_t max_vertices, std::size_t max_edges, long max_parallel, bool random_exempt) {
        const auto n = static_cast<std::size_t>(uniform(1, static_cast<long>(max_vertices)));
        std::vector<gkt::VertexId> verts;
        for (std::size_t i = 0; i < n; ++i) verts.push_back("v" + std::to_string(i));
        std::vector<gkt::Edge> edges;
        const auto m = static_cast<std::size_t>(uniform(0, static_cast<long>(max_edges)));
        std::vector<std::vector<long>> count(n, std::vector<long>(n, 0));
        for (std::size_t k = 0; k < m; ++k) {
            auto a = static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 1));
            auto b = static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 1));
            if (count[a][b] >= max_parallel) continue;
            ++count[a][b];
            edges.push_back({"e" + std::to_string(k), verts[a], verts[b]});
        }
        gkt::VertexSet exempt;
        if (random_exempt)
            for (const auto& v : verts)
                if (coin(0.4)) exempt.insert(v);
        return gkt::FiniteGraph(verts, edges, exempt);
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace oracle
