#include "rmt/rsk.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "rmt/errors.hpp"
#include "rmt/parallel.hpp"

namespace rmt {

std::vector<int> YoungTableau::shape() const {
    std::vector<int> s;
    s.reserve(rows.size());
    for (const auto& r : rows) s.push_back(static_cast<int>(r.size()));
    return s;
}

int YoungTableau::size() const {
    int n = 0;
    for (const auto& r : rows) n += static_cast<int>(r.size());
    return n;
}

bool YoungTableau::is_standard() const {
    const int n = size();
    std::vector<char> seen(n + 1, 0);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].empty()) return false;
        if (r > 0 && rows[r].size() > rows[r - 1].size()) return false;
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            int v = rows[r][c];
            if (v < 1 || v > n || seen[v]) return false;
            seen[v] = 1;
            if (c > 0 && rows[r][c - 1] >= v) return false;
            if (r > 0 && rows[r - 1][c] >= v) return false;
        }
    }
    return true;
}

std::string YoungTableau::to_json() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r) os << ",";
        os << "[";
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            if (c) os << ",";
            os << rows[r][c];
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

namespace {

void check_permutation(std::span<const int> perm) {
    std::vector<char> seen(perm.size() + 1, 0);
    for (int v : perm) {
        if (v < 1 || v > static_cast<int>(perm.size()) || seen[v])
            throw parameter_error("input is not a permutation of 1..n");
        seen[v] = 1;
    }
}

} // namespace

std::pair<YoungTableau, YoungTableau> rsk(std::span<const int> perm) {
    check_permutation(perm);
    YoungTableau p, q;
    for (std::size_t step = 0; step < perm.size(); ++step) {
        int v = perm[step];
        std::size_t r = 0;
        // bump down the rows
        while (true) {
            if (r == p.rows.size()) {
                p.rows.push_back({v});
                q.rows.push_back({static_cast<int>(step) + 1});
                break;
            }
            auto& row = p.rows[r];
            auto it = std::upper_bound(row.begin(), row.end(), v);
            if (it == row.end()) {
                row.push_back(v);
                q.rows[r].push_back(static_cast<int>(step) + 1);
                break;
            }
            std::swap(*it, v);
            ++r;
        }
    }
    return {p, q};
}

std::vector<int> rsk_inverse(const YoungTableau& p, const YoungTableau& q) {
    if (p.shape() != q.shape()) throw parameter_error("rsk_inverse: P and Q must have the same shape");
    if (!p.is_standard() || !q.is_standard()) throw parameter_error("rsk_inverse: tableaux must be standard");

    YoungTableau work = p;
    const int n = p.size();
    std::vector<int> perm(n);
    // locate entries of Q once
    std::vector<std::pair<int, int>> cell_of(n + 1);
    for (std::size_t r = 0; r < q.rows.size(); ++r)
        for (std::size_t c = 0; c < q.rows[r].size(); ++c) cell_of[q.rows[r][c]] = {static_cast<int>(r), static_cast<int>(c)};

    for (int step = n; step >= 1; --step) {
        auto [r, c] = cell_of[step];
        int v = work.rows[r].back();
        work.rows[r].pop_back();
        if (work.rows[r].empty()) work.rows.erase(work.rows.begin() + r);
        // reverse bumping through the rows above
        for (int rr = r - 1; rr >= 0; --rr) {
            auto& row = work.rows[rr];
            auto it = std::lower_bound(row.begin(), row.end(), v);
            --it; // the rightmost entry < v
            std::swap(*it, v);
        }
        perm[step - 1] = v;
    }
    return perm;
}

int lis(std::span<const int> perm) {
    std::vector<int> tails;
    for (int v : perm) {
        auto it = std::lower_bound(tails.begin(), tails.end(), v);
        if (it == tails.end())
            tails.push_back(v);
        else
            *it = v;
    }
    return static_cast<int>(tails.size());
}

int lds(std::span<const int> perm) {
    std::vector<int> flipped(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) flipped[i] = -perm[i];
    std::vector<int> tails;
    for (int v : flipped) {
        auto it = std::lower_bound(tails.begin(), tails.end(), v);
        if (it == tails.end())
            tails.push_back(v);
        else
            *it = v;
    }
    return static_cast<int>(tails.size());
}

long long erdos_szekeres_scan(int n) {
    if (n < 1) throw parameter_error("erdos_szekeres_scan: n must be >= 1");
    if (n > 3) throw resource_error("erdos_szekeres_scan: exhaustive budget is n <= 3");
    const int len = n * n + 1;
    std::vector<int> perm(len);
    std::iota(perm.begin(), perm.end(), 1);
    long long violations = 0;
    do {
        if (std::max(lis(perm), lds(perm)) <= n) ++violations;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return violations;
}

namespace {

void census_rec(std::vector<int>& shape, int placed, int n, std::map<std::vector<int>, long long>& counts) {
    if (placed == n) {
        counts[shape] += 1;
        return;
    }
    // add the next value at any addable corner
    for (std::size_t r = 0; r <= shape.size(); ++r) {
        bool addable = (r == shape.size()) ? true : (r == 0 || shape[r] < shape[r - 1]);
        if (r == shape.size()) {
            shape.push_back(1);
            census_rec(shape, placed + 1, n, counts);
            shape.pop_back();
        } else if (addable) {
            shape[r] += 1;
            census_rec(shape, placed + 1, n, counts);
            shape[r] -= 1;
        }
    }
}

} // namespace

std::map<std::vector<int>, long long> tableau_census(int n) {
    if (n < 1) throw parameter_error("tableau_census: n must be >= 1");
    if (n > 8) throw resource_error("tableau_census: exhaustive budget is n <= 8");
    std::map<std::vector<int>, long long> counts;
    std::vector<int> shape;
    census_rec(shape, 0, n, counts);
    return counts;
}

std::vector<int> random_permutation(int n, RandomStream& rng) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    for (int i = n - 1; i > 0; --i) {
        int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i) + 1));
        std::swap(perm[i], perm[j]);
    }
    return perm;
}

std::vector<double> bdj_statistic_mc(int n, int trials, std::uint64_t seed) {
    if (trials < 100) throw parameter_error("bdj_statistic_mc: trials >= 100 required");
    std::vector<double> stat(trials);
    const double shift = 2.0 * std::sqrt(static_cast<double>(n));
    const double scale = std::pow(static_cast<double>(n), 1.0 / 6.0);
    parallel_for(trials, [&](int t) {
        RandomStream rng(seed, static_cast<std::uint64_t>(t));
        std::vector<int> perm = random_permutation(n, rng);
        stat[t] = (lis(perm) - shift) / scale;
    });
    return stat;
}

} // namespace rmt
