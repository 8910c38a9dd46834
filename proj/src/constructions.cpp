#include "f2geom/constructions.hpp"

#include <algorithm>
#include <set>

namespace f2geom {

StructureConstants functions_algebra(int n)
{
    StructureConstants v(n);
    for (int mu = 0; mu < n; ++mu)
        v.set(mu, mu, mu);
    return v;
}

StructureConstants cyclic_algebra(int n)
{
    StructureConstants v(n);
    for (int mu = 0; mu < n; ++mu)
        for (int nu = 0; nu < n; ++nu)
            v.set(mu, nu, (mu + nu) % n);
    return v;
}

Matrix euclidean_metric(int n)
{
    return Matrix::identity(n);
}

std::vector<Matrix> cyclic_metrics(int n)
{
    if (n < 2)
        throw DimensionMismatch("cyclic_metrics needs n >= 2");
    std::vector<Matrix> base, out;
    for (int m = 0; m < n; ++m) {
        Matrix g(n, n);
        for (int mu = 0; mu < n; ++mu)
            g.set(mu, ((m - mu) % n + n) % n);
        base.push_back(std::move(g));
    }
    auto add = [&](Matrix g) {
        if (mat_rank(g) != static_cast<std::size_t>(n))
            return;
        if (std::find(out.begin(), out.end(), g) == out.end())
            out.push_back(std::move(g));
    };
    for (const auto& g : base)
        add(g);
    for (const auto& g : base) {
        Matrix c = g;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                c.set(i, j, !g.get(i, j));
        add(std::move(c));
    }
    return out;
}

StructureConstants field_extension_algebra(int d)
{
    if (d < 1 || d > 2)
        throw DimensionMismatch("field_extension_algebra supports d = 1, 2");
    const int n = 1 << d;
    StructureConstants v(n);
    // x^n = x, so exponents k >= n reduce to k - (n - 1).
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int k = i + j;
            if (k >= n)
                k -= n - 1;
            v.set(i, j, k);
        }
    return v;
}

bool PartitionDatum::valid() const
{
    std::set<int> seen;
    auto take = [&](int i) { return i >= 0 && i < n && seen.insert(i).second; };
    for (int t : fixed)
        if (!take(t))
            return false;
    for (auto [s, b] : pairs)
        if (!take(s) || !take(b))
            return false;
    return static_cast<int>(seen.size()) == n;
}

Connection partition_qlc(const PartitionDatum& p)
{
    if (!p.valid())
        throw InvalidGeometry("partition datum does not split the index set");
    const int n = p.n;
    Tensor3 gamma(n);
    Sigma sigma = Sigma::flip(n);
    for (auto [s, b] : p.pairs) {
        for (int mu : {s, b})
            for (int a : {s, b})
                for (int c : {s, b})
                    gamma.set(mu, a, c);
        // Swap dx^s dx^s with dx^b dx^b; fix the mixed pairs.
        sigma.set(s, s, s, s, false);
        sigma.set(s, s, b, b);
        sigma.set(b, b, b, b, false);
        sigma.set(b, b, s, s);
        sigma.set(s, b, b, s, false);
        sigma.set(s, b, s, b);
        sigma.set(b, s, s, b, false);
        sigma.set(b, s, b, s);
    }
    return {gamma, sigma, Tensor3(n)};
}

namespace {

void pairings(std::vector<int> rest, std::vector<std::pair<int, int>>& cur,
              std::vector<std::vector<std::pair<int, int>>>& out)
{
    if (rest.empty()) {
        out.push_back(cur);
        return;
    }
    const int first = rest.front();
    for (std::size_t i = 1; i < rest.size(); ++i) {
        std::vector<int> next;
        for (std::size_t j = 1; j < rest.size(); ++j)
            if (j != i)
                next.push_back(rest[j]);
        cur.emplace_back(first, rest[i]);
        pairings(next, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<PartitionDatum> enumerate_partitions(int n)
{
    std::vector<PartitionDatum> out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> fixed, rest;
        for (int i = 0; i < n; ++i)
            ((mask >> i) & 1 ? fixed : rest).push_back(i);
        if (rest.size() % 2)
            continue;
        std::vector<std::vector<std::pair<int, int>>> ps;
        std::vector<std::pair<int, int>> cur;
        pairings(rest, cur, ps);
        for (auto& pr : ps)
            out.push_back({n, fixed, pr});
    }
    return out;
}

std::uint64_t partition_qlc_count(int n)
{
    if (n < 1)
        throw DimensionMismatch("partition_qlc_count needs n >= 1");
    auto choose = [](int a, int b) {
        std::uint64_t r = 1;
        for (int i = 1; i <= b; ++i)
            r = r * (a - b + i) / i;
        return r;
    };
    std::uint64_t total = 0;
    for (int m = n; m >= 0; m -= 2) {
        std::uint64_t df = 1;
        for (int k = n - m - 1; k > 1; k -= 2)
            df *= k;
        total += choose(n, m) * df;
    }
    return total;
}

Matrix permute(const Matrix& g, const std::vector<int>& perm)
{
    const std::size_t n = perm.size();
    Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out.set(i, j, g.get(perm[i], perm[j]));
    return out;
}

}  // namespace f2geom
