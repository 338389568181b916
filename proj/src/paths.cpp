#include "rmt/paths.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "rmt/eigen.hpp"
#include "rmt/errors.hpp"

namespace rmt {
namespace {

void validate_walk(const WalkSpec& spec) {
    if (spec.horizon < 1 || spec.horizon > 30) throw parameter_error("walk horizon must be in 1..30");
    const std::size_t n = spec.start.size();
    if (n == 0 || n != spec.target.size()) throw parameter_error("walk needs equal nonzero start/target tuples");
    if (n > 5) throw resource_error("walk tuple budget is n <= 5");
    for (std::size_t i = 1; i < n; ++i)
        if (spec.start[i - 1] <= spec.start[i]) throw parameter_error("walk starts must be strictly decreasing");
}

// P_t(x, .) over the reachable window by dynamic programming.
std::map<long, BigRat> propagate(const WalkSpec& spec, long x) {
    std::map<long, BigRat> cur;
    cur[x] = 1;
    for (int s = 0; s < spec.horizon; ++s) {
        std::map<long, BigRat> next;
        for (const auto& [site, p] : cur) {
            BigRat up = spec.up(site);
            if (up < 0 || up > 1) throw parameter_error("walk probabilities must lie in [0, 1]");
            BigRat down = BigRat(1) - up;
            if (up != 0) next[site + 1] += p * up;
            if (down != 0) next[site - 1] += p * down;
        }
        cur = std::move(next);
    }
    return cur;
}

BigRat det_rational(std::vector<std::vector<BigRat>> m) {
    const std::size_t n = m.size();
    BigRat det = 1;
    int sign = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) return BigRat(0);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            sign = -sign;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            BigRat f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return sign > 0 ? det : -det;
}

} // namespace

std::vector<std::vector<BigRat>> transition_matrix(const WalkSpec& spec) {
    validate_walk(spec);
    const std::size_t n = spec.start.size();
    std::vector<std::vector<BigRat>> m(n, std::vector<BigRat>(n, BigRat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        std::map<long, BigRat> dist = propagate(spec, spec.start[i]);
        for (std::size_t j = 0; j < n; ++j) {
            auto it = dist.find(spec.target[j]);
            if (it != dist.end()) m[i][j] = it->second;
        }
    }
    return m;
}

BigRat km_determinant(const WalkSpec& spec) { return det_rational(transition_matrix(spec)); }

namespace {

void km_enumerate_rec(const WalkSpec& spec, std::vector<long>& pos, int step, BigRat prob, BigRat& total) {
    const std::size_t n = pos.size();
    if (step == spec.horizon) {
        for (std::size_t i = 0; i < n; ++i)
            if (pos[i] != spec.target[i]) return;
        total += prob;
        return;
    }
    // all 2^n joint moves, keeping strict ordering afterwards
    const unsigned moves = 1u << n;
    for (unsigned mask = 0; mask < moves; ++mask) {
        BigRat p = prob;
        bool dead = false;
        for (std::size_t i = 0; i < n && !dead; ++i) {
            BigRat up = spec.up(pos[i]);
            if (mask & (1u << i)) {
                if (up == 0) dead = true;
                p *= up;
            } else {
                BigRat down = BigRat(1) - up;
                if (down == 0) dead = true;
                p *= down;
            }
        }
        if (dead) continue;
        for (std::size_t i = 0; i < n; ++i) pos[i] += (mask & (1u << i)) ? 1 : -1;
        bool ordered = true;
        for (std::size_t i = 1; i < n; ++i)
            if (pos[i - 1] <= pos[i]) ordered = false;
        if (ordered) km_enumerate_rec(spec, pos, step + 1, p, total);
        for (std::size_t i = 0; i < n; ++i) pos[i] -= (mask & (1u << i)) ? 1 : -1;
    }
}

} // namespace

BigRat km_enumerate(const WalkSpec& spec) {
    validate_walk(spec);
    const long work = static_cast<long>(spec.start.size()) * spec.horizon;
    if (work > 26) throw resource_error("km_enumerate: n * horizon exceeds enumeration budget 26");
    std::vector<long> pos = spec.start;
    BigRat total = 0;
    km_enumerate_rec(spec, pos, 0, BigRat(1), total);
    return total;
}

std::vector<int> topological_order(const WeightedDag& dag) {
    std::vector<int> indeg(dag.vertices, 0);
    std::vector<std::vector<int>> adj(dag.vertices);
    for (const auto& e : dag.edges) {
        if (e.from < 0 || e.to < 0 || e.from >= dag.vertices || e.to >= dag.vertices)
            throw parameter_error("dag edge endpoint out of range");
        indeg[e.to]++;
        adj[e.from].push_back(e.to);
    }
    std::vector<int> order, stack;
    for (int v = 0; v < dag.vertices; ++v)
        if (indeg[v] == 0) stack.push_back(v);
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (int w : adj[v])
            if (--indeg[w] == 0) stack.push_back(w);
    }
    if (static_cast<int>(order.size()) != dag.vertices)
        throw parameter_error("graph has a directed cycle; acyclic input required");
    return order;
}

std::vector<std::vector<BigRat>> gv_path_weights(const WeightedDag& dag, const std::vector<int>& a,
                                                 const std::vector<int>& b) {
    std::vector<int> order = topological_order(dag);
    std::vector<std::vector<BigRat>> m(a.size(), std::vector<BigRat>(b.size(), BigRat(0)));
    for (std::size_t i = 0; i < a.size(); ++i) {
        // weight[v] = sum over paths a_i -> v
        std::vector<BigRat> weight(dag.vertices, BigRat(0));
        weight[a[i]] = 1;
        for (int v : order)
            if (weight[v] != 0)
                for (const auto& e : dag.edges)
                    if (e.from == v) weight[e.to] += weight[v] * e.weight;
        for (std::size_t j = 0; j < b.size(); ++j) m[i][j] = weight[b[j]];
    }
    return m;
}

BigRat gv_determinant(const WeightedDag& dag, const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size() || a.empty()) throw parameter_error("gv needs equal nonzero tuples");
    return det_rational(gv_path_weights(dag, a, b));
}

namespace {

void enumerate_paths(const WeightedDag& dag, int from, int to, std::vector<int>& cur, BigRat w,
                     std::vector<std::pair<std::vector<int>, BigRat>>& out, long budget) {
    if (static_cast<long>(out.size()) > budget)
        throw resource_error("gv_vertex_disjoint_sum: path budget exceeded");
    if (from == to) {
        out.emplace_back(cur, w);
        return;
    }
    for (const auto& e : dag.edges)
        if (e.from == from) {
            cur.push_back(e.to);
            enumerate_paths(dag, e.to, to, cur, w * e.weight, out, budget);
            cur.pop_back();
        }
}

} // namespace

BigRat gv_vertex_disjoint_sum(const WeightedDag& dag, const std::vector<int>& a, const std::vector<int>& b) {
    const std::size_t n = a.size();
    if (n != b.size() || n == 0) throw parameter_error("gv needs equal nonzero tuples");
    if (n > 4) throw resource_error("gv_vertex_disjoint_sum: tuple budget is n <= 4");
    topological_order(dag); // acyclicity check

    // all paths a_i -> b_j
    std::vector<std::vector<std::vector<std::pair<std::vector<int>, BigRat>>>> paths(
        n, std::vector<std::vector<std::pair<std::vector<int>, BigRat>>>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<int> cur{a[i]};
            enumerate_paths(dag, a[i], b[j], cur, BigRat(1), paths[i][j], 200000);
        }

    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    BigRat total = 0;
    do {
        int sign = 1;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) sign = -sign;
        // pick one path per pair, vertex-disjoint
        std::vector<std::size_t> choice(n, 0);
        std::function<void(std::size_t, BigRat)> rec = [&](std::size_t i, BigRat w) {
            if (i == n) {
                total += sign > 0 ? w : -w;
                return;
            }
            for (std::size_t pi = 0; pi < paths[i][perm[i]].size(); ++pi) {
                const auto& [verts, pw] = paths[i][perm[i]][pi];
                bool disjoint = true;
                for (std::size_t k = 0; k < i && disjoint; ++k)
                    for (int v : verts) {
                        const auto& prevpath = paths[k][perm[k]][choice[k]].first;
                        if (std::find(prevpath.begin(), prevpath.end(), v) != prevpath.end()) {
                            disjoint = false;
                            break;
                        }
                    }
                if (!disjoint) continue;
                choice[i] = pi;
                rec(i + 1, w * pw);
            }
        };
        rec(0, BigRat(1));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

BigInt catalan_hankel_det(int n) {
    if (n < 0) throw parameter_error("catalan_hankel_det: n must be >= 0");
    if (n > 12) throw resource_error("catalan_hankel_det: budget is n <= 12");
    const int dim = n + 1;
    std::vector<std::vector<BigInt>> m(dim, std::vector<BigInt>(dim));
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) m[i][j] = catalan(i + j);

    // Bareiss fraction-free elimination; divisions are exact
    BigInt prev = 1;
    int sign = 1;
    for (int k = 0; k < dim - 1; ++k) {
        if (m[k][k] == 0) {
            int piv = k + 1;
            while (piv < dim && m[piv][k] == 0) ++piv;
            if (piv == dim) return BigInt(0);
            std::swap(m[piv], m[k]);
            sign = -sign;
        }
        for (int i = k + 1; i < dim; ++i)
            for (int j = k + 1; j < dim; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign > 0 ? m[dim - 1][dim - 1] : -m[dim - 1][dim - 1];
}

CrossingReport dyson_crossing_check(const std::vector<MatrixSample>& walk) {
    CrossingReport report;
    report.min_spacing = std::numeric_limits<double>::infinity();
    for (const MatrixSample& s : walk) {
        std::vector<double> eig = hermitian_eigenvalues(s.entries);
        if (eig.size() < 2) {
            report.min_spacing = 0;
            continue;
        }
        for (std::size_t i = 1; i < eig.size(); ++i) {
            double gap = eig[i] - eig[i - 1];
            report.min_spacing = std::min(report.min_spacing, gap);
            if (gap <= 0) report.collisions += 1;
        }
    }
    if (!std::isfinite(report.min_spacing)) report.min_spacing = 0;
    return report;
}

} // namespace rmt
