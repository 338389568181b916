#include "rmt/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "rmt/errors.hpp"

namespace rmt {

BigInt catalan(int k) {
    if (k < 0) throw parameter_error("catalan: k must be >= 0");
    BigInt b;
    mpz_bin_uiui(b.get_mpz_t(), 2 * static_cast<unsigned long>(k), static_cast<unsigned long>(k));
    return b / (k + 1);
}

BigInt double_factorial_odd(int m) {
    if (m < 0 || m % 2 != 0) throw parameter_error("double_factorial_odd: m must be even and >= 0");
    BigInt r = 1;
    for (int i = m - 1; i >= 1; i -= 2) r *= i;
    return r;
}

std::vector<std::pair<int, int>> Pairing::pairs() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(partner.size() / 2);
    for (int i = 0; i < n(); ++i)
        if (partner[i] > i) out.emplace_back(i, partner[i]);
    return out;
}

Pairing Pairing::from_pairs(int n, std::span<const std::pair<int, int>> pairs) {
    Pairing p;
    p.partner.assign(n, -1);
    for (auto [i, j] : pairs) {
        if (i < 0 || j < 0 || i >= n || j >= n || i == j || p.partner[i] != -1 || p.partner[j] != -1)
            throw parameter_error("Pairing::from_pairs: not a perfect matching");
        p.partner[i] = j;
        p.partner[j] = i;
    }
    for (int v : p.partner)
        if (v < 0) throw parameter_error("Pairing::from_pairs: uncovered element");
    return p;
}

namespace {

constexpr int kPairingBudget = 24;

void pairing_rec(Pairing& p, int n, const std::function<void(const Pairing&)>& visit) {
    int first = -1;
    for (int i = 0; i < n; ++i)
        if (p.partner[i] < 0) {
            first = i;
            break;
        }
    if (first < 0) {
        visit(p);
        return;
    }
    for (int j = first + 1; j < n; ++j) {
        if (p.partner[j] >= 0) continue;
        p.partner[first] = j;
        p.partner[j] = first;
        pairing_rec(p, n, visit);
        p.partner[first] = -1;
        p.partner[j] = -1;
    }
}

// Non-crossing: element `lo` pairs with lo + 1, lo + 3, ...; the enclosed and
// trailing stretches are filled independently.
void nc_fill(Pairing& p, std::vector<std::pair<int, int>>& todo, const std::function<void(const Pairing&)>& visit);

void nc_fill_range(Pairing& p, int lo, int hi, std::vector<std::pair<int, int>>& todo,
                   const std::function<void(const Pairing&)>& visit) {
    if (lo > hi) {
        nc_fill(p, todo, visit);
        return;
    }
    for (int j = lo + 1; j <= hi; j += 2) {
        p.partner[lo] = j;
        p.partner[j] = lo;
        todo.push_back({j + 1, hi});
        nc_fill_range(p, lo + 1, j - 1, todo, visit);
        todo.pop_back();
        p.partner[lo] = -1;
        p.partner[j] = -1;
    }
}

void nc_fill(Pairing& p, std::vector<std::pair<int, int>>& todo, const std::function<void(const Pairing&)>& visit) {
    if (todo.empty()) {
        visit(p);
        return;
    }
    auto [lo, hi] = todo.back();
    todo.pop_back();
    nc_fill_range(p, lo, hi, todo, visit);
    todo.push_back({lo, hi});
}

} // namespace

void for_each_pairing(int n, const std::function<void(const Pairing&)>& visit) {
    if (n < 0) throw parameter_error("for_each_pairing: n must be >= 0");
    if (n > kPairingBudget) throw resource_error("for_each_pairing: n exceeds enumeration budget 24");
    if (n % 2 != 0) return;
    Pairing p;
    p.partner.assign(n, -1);
    pairing_rec(p, n, visit);
}

void for_each_nc_pairing(int n, const std::function<void(const Pairing&)>& visit) {
    if (n < 0) throw parameter_error("for_each_nc_pairing: n must be >= 0");
    if (n > kPairingBudget) throw resource_error("for_each_nc_pairing: n exceeds enumeration budget 24");
    if (n % 2 != 0) return;
    Pairing p;
    p.partner.assign(n, -1);
    std::vector<std::pair<int, int>> todo;
    nc_fill_range(p, 0, n - 1, todo, visit);
}

long long count_pairings(int n) {
    long long c = 0;
    for_each_pairing(n, [&](const Pairing&) { ++c; });
    return c;
}

long long count_nc_pairings(int n) {
    long long c = 0;
    for_each_nc_pairing(n, [&](const Pairing&) { ++c; });
    return c;
}

bool is_noncrossing(const Pairing& p) {
    auto ps = p.pairs();
    for (std::size_t a = 0; a < ps.size(); ++a)
        for (std::size_t b = a + 1; b < ps.size(); ++b) {
            auto [i, k] = ps[a];
            auto [j, l] = ps[b];
            if (j < i) {
                std::swap(i, j);
                std::swap(k, l);
            }
            if (i < j && j < k && k < l) return false;
        }
    return true;
}

bool is_noncrossing_by_reduction(const Pairing& p) {
    // repeatedly remove pairs of cyclically adjacent elements
    std::vector<int> ring(p.partner.begin(), p.partner.end());
    std::vector<int> next(p.n()), prev(p.n());
    int n = p.n();
    if (n == 0) return true;
    for (int i = 0; i < n; ++i) {
        next[i] = (i + 1) % n;
        prev[i] = (i + n - 1) % n;
    }
    int remaining = n;
    bool removed = true;
    int cursor = 0;
    while (remaining > 0 && removed) {
        removed = false;
        int start = cursor;
        int i = start;
        do {
            if (ring[i] == next[i] && remaining > 0) {
                int j = next[i];
                int before = prev[i], after = next[j];
                next[before] = after;
                prev[after] = before;
                remaining -= 2;
                removed = true;
                cursor = after;
                break;
            }
            i = next[i];
        } while (i != start);
        if (!removed) break;
    }
    return remaining == 0;
}

GenusInfo genus(const Pairing& p) {
    const int m = p.n();
    if (m % 2 != 0) throw parameter_error("genus: pairing size must be even");
    std::vector<char> seen(m, 0);
    int cycles = 0;
    for (int s = 0; s < m; ++s) {
        if (seen[s]) continue;
        ++cycles;
        int x = s;
        do {
            seen[x] = 1;
            x = (p.partner[x] + 1) % m; // gamma(pi(x))
        } while (x != s);
    }
    GenusInfo g;
    g.cycles = cycles;
    g.genus = (m / 2 + 1 - cycles) / 2;
    return g;
}

BigRat MomentPolynomial::evaluate(const BigRat& n) const {
    BigRat u = 1 / (n * n);
    BigRat acc = 0, pw = 1;
    for (const BigInt& c : genus_coeffs) {
        acc += BigRat(c) * pw;
        pw *= u;
    }
    return acc;
}

std::string MomentPolynomial::to_json() const {
    std::ostringstream os;
    os << "{\"genus_coeffs\":[";
    for (std::size_t i = 0; i < genus_coeffs.size(); ++i) {
        if (i) os << ",";
        os << genus_coeffs[i].get_str();
    }
    os << "]}";
    return os.str();
}

MomentPolynomial gue_moment_exact(int m) {
    if (m <= 0 || m % 2 != 0) throw parameter_error("gue_moment_exact: m must be even and positive");
    if (m > kPairingBudget) throw resource_error("gue_moment_exact: m exceeds enumeration budget 24");
    MomentPolynomial poly;
    poly.genus_coeffs.assign(m / 4 + 1, BigInt(0));
    for_each_pairing(m, [&](const Pairing& p) { poly.genus_coeffs[genus(p).genus] += 1; });
    while (poly.genus_coeffs.size() > 1 && poly.genus_coeffs.back() == 0) poly.genus_coeffs.pop_back();
    return poly;
}

double wick_moment(std::span<const int> word, const std::function<double(int, int)>& cov) {
    const int n = static_cast<int>(word.size());
    if (n % 2 != 0) return 0.0;
    if (n > kPairingBudget) throw resource_error("wick_moment: word length exceeds enumeration budget 24");
    double total = 0;
    for_each_pairing(n, [&](const Pairing& p) {
        double prod = 1;
        for (auto [i, j] : p.pairs()) prod *= cov(word[i], word[j]);
        total += prod;
    });
    return total;
}

int Partition::n() const {
    int c = 0;
    for (const auto& b : blocks) c += static_cast<int>(b.size());
    return c;
}

int Partition::block_of(int element) const {
    for (int b = 0; b < static_cast<int>(blocks.size()); ++b)
        for (int e : blocks[b])
            if (e == element) return b;
    return -1;
}

Partition kernel_of_index(std::span<const int> tuple) {
    Partition sigma;
    std::vector<int> label;
    for (int k = 0; k < static_cast<int>(tuple.size()); ++k) {
        bool found = false;
        for (std::size_t b = 0; b < label.size(); ++b)
            if (label[b] == tuple[k]) {
                sigma.blocks[b].push_back(k);
                found = true;
                break;
            }
        if (!found) {
            label.push_back(tuple[k]);
            sigma.blocks.push_back({k});
        }
    }
    return sigma;
}

namespace {

void partition_rec(std::vector<int>& assign, int k, int used, int n,
                   const std::function<void(const Partition&)>& visit) {
    if (k == n) {
        Partition sigma;
        sigma.blocks.assign(used, {});
        for (int i = 0; i < n; ++i) sigma.blocks[assign[i]].push_back(i);
        visit(sigma);
        return;
    }
    for (int b = 0; b <= used; ++b) {
        assign[k] = b;
        partition_rec(assign, k + 1, std::max(used, b + 1), n, visit);
    }
}

} // namespace

void for_each_partition(int n, const std::function<void(const Partition&)>& visit) {
    if (n < 0) throw parameter_error("for_each_partition: n must be >= 0");
    if (n > 12) throw resource_error("for_each_partition: n exceeds enumeration budget 12");
    if (n == 0) {
        visit(Partition{});
        return;
    }
    std::vector<int> assign(n, 0);
    partition_rec(assign, 1, 1, n, visit);
}

bool graph_is_tree(const Partition& sigma) {
    const int m = sigma.n();
    const int v = static_cast<int>(sigma.blocks.size());
    if (m == 0) return false;
    std::vector<int> block_of(m);
    for (int b = 0; b < v; ++b)
        for (int e : sigma.blocks[b]) block_of[e] = b;

    // collapsed edge set of the cyclic walk, loops kept
    std::vector<std::pair<int, int>> edges;
    for (int r = 0; r < m; ++r) {
        int a = block_of[r], b = block_of[(r + 1) % m];
        auto e = std::minmax(a, b);
        std::pair<int, int> key{e.first, e.second};
        if (std::find(edges.begin(), edges.end(), key) == edges.end()) edges.push_back(key);
    }
    int ecount = static_cast<int>(edges.size());
    if (v != ecount + 1) return false;

    // connectivity over non-loop edges
    std::vector<int> root(v);
    std::iota(root.begin(), root.end(), 0);
    std::function<int(int)> find = [&](int x) { return root[x] == x ? x : root[x] = find(root[x]); };
    for (auto [a, b] : edges)
        if (a != b) root[find(a)] = find(b);
    int comps = 0;
    for (int i = 0; i < v; ++i)
        if (find(i) == i) ++comps;
    return comps == 1;
}

long long count_tree_walk_partitions(int m) {
    if (m <= 0) return 0;
    long long count = 0;
    for_each_partition(m, [&](const Partition& sigma) {
        if (!graph_is_tree(sigma)) return;
        const int v = static_cast<int>(sigma.blocks.size());
        std::vector<int> block_of(m);
        for (int b = 0; b < v; ++b)
            for (int e : sigma.blocks[b]) block_of[e] = b;
        // walk must traverse each collapsed edge exactly twice
        std::vector<std::pair<int, int>> edges;
        std::vector<int> uses;
        for (int r = 0; r < m; ++r) {
            int a = block_of[r], b = block_of[(r + 1) % m];
            auto e = std::minmax(a, b);
            std::pair<int, int> key{e.first, e.second};
            auto it = std::find(edges.begin(), edges.end(), key);
            if (it == edges.end()) {
                edges.push_back(key);
                uses.push_back(1);
            } else {
                uses[static_cast<std::size_t>(it - edges.begin())] += 1;
            }
        }
        if (std::all_of(uses.begin(), uses.end(), [](int u) { return u == 2; })) ++count;
    });
    return count;
}

long long mixed_gue_moment_limit(std::span<const int> colors) {
    const int m = static_cast<int>(colors.size());
    if (m % 2 != 0) return 0;
    long long count = 0;
    for_each_nc_pairing(m, [&](const Pairing& p) {
        for (auto [i, j] : p.pairs())
            if (colors[i] != colors[j]) return;
        ++count;
    });
    return count;
}

double freeness_residual(const std::function<double(std::span<const int>)>& phi,
                         std::span<const int> colors, std::span<const int> powers) {
    const int m = static_cast<int>(colors.size());
    if (m == 0 || static_cast<int>(powers.size()) != m)
        throw parameter_error("freeness_residual: colors and powers must have equal nonzero length");
    for (int k = 0; k + 1 < m; ++k)
        if (colors[k] == colors[k + 1]) throw parameter_error("freeness_residual: colors must alternate");
    for (int p : powers)
        if (p < 1) throw parameter_error("freeness_residual: powers must be >= 1");

    // phi of a single letter power
    auto phi_power = [&](int color, int power) {
        std::vector<int> word(power, color);
        return phi(word);
    };

    double total = 0;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        double term = 1;
        std::vector<int> rest;
        int popcount = 0;
        for (int k = 0; k < m; ++k) {
            if (mask & (1u << k)) {
                term *= phi_power(colors[k], powers[k]);
                ++popcount;
            } else {
                rest.insert(rest.end(), static_cast<std::size_t>(powers[k]), colors[k]);
            }
        }
        term *= rest.empty() ? 1.0 : phi(rest);
        total += (popcount % 2 == 0) ? term : -term;
    }
    return total;
}

} // namespace rmt
