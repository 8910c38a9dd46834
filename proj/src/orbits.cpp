#include "f2geom/orbits.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <thread>
#include <unordered_set>

namespace f2geom {

namespace {

struct WordsHash {
    std::size_t operator()(const std::vector<std::uint64_t>& w) const
    {
        std::size_t h = 1469598103934665603ull;
        for (auto x : w)
            h = (h ^ x) * 1099511628211ull;
        return h;
    }
};

using KeySet = std::unordered_set<std::vector<std::uint64_t>, WordsHash>;

std::vector<std::uint64_t> key_of(const StructureConstants& v)
{
    return v.packed().words();
}

struct LexLess {
    bool operator()(const StructureConstants& a, const StructureConstants& b) const { return lex_less(a, b); }
};

}  // namespace

const GroupCache& group_cache(int n)
{
    static std::mutex mu;
    static std::map<int, std::unique_ptr<GroupCache>> caches;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = caches[n];
    if (!slot) {
        auto c = std::make_unique<GroupCache>();
        c->n = n;
        c->elements = enumerate_gl(n);
        for (const auto& g : c->elements) {
            const Matrix gi = mat_inverse(g);
            std::vector<std::uint32_t> r(n), ri(n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    if (g.get(i, j))
                        r[i] |= 1u << j;
                    if (gi.get(i, j))
                        ri[i] |= 1u << j;
                }
            c->rows.push_back(std::move(r));
            c->inv_rows.push_back(std::move(ri));
        }
        slot = std::move(c);
    }
    return *slot;
}

StructureConstants act_cached(const GroupCache& g, std::size_t idx, const StructureConstants& v)
{
    const int n = v.n();
    const auto& rows = g.rows[idx];
    const auto& inv = g.inv_rows[idx];
    StructureConstants w(n);
    for (int mu = 0; mu < n; ++mu)
        for (int nu = mu; nu < n; ++nu) {
            std::uint32_t y = 0;
            for (std::uint32_t r = v.mul(rows[mu], rows[nu]); r; r &= r - 1)
                y ^= inv[std::countr_zero(r)];
            w.set_product(mu, nu, y);
            if (nu != mu) {
                std::uint32_t y2 = 0;
                for (std::uint32_t r = v.mul(rows[nu], rows[mu]); r; r &= r - 1)
                    y2 ^= inv[std::countr_zero(r)];
                w.set_product(nu, mu, y2);
            }
        }
    return w;
}

StructureConstants canonical_rep(const StructureConstants& v)
{
    const auto& G = group_cache(v.n());
    StructureConstants best = v;
    for (std::size_t i = 0; i < G.elements.size(); ++i) {
        auto w = act_cached(G, i, v);
        if (lex_less(w, best))
            best = std::move(w);
    }
    return best;
}

std::vector<Matrix> isotropy(const StructureConstants& v)
{
    const auto& G = group_cache(v.n());
    std::vector<Matrix> out;
    for (std::size_t i = 0; i < G.elements.size(); ++i)
        if (act_cached(G, i, v) == v)
            out.push_back(G.elements[i]);
    return out;
}

std::vector<OrbitReport> orbits(const std::vector<StructureConstants>& solutions, int n, int jobs)
{
    const auto& G = group_cache(n);
    KeySet input;
    for (const auto& s : solutions) {
        if (s.n() != n)
            throw DimensionMismatch("orbits: solution of wrong dimension");
        input.insert(key_of(s));
    }
    KeySet visited;
    std::vector<OrbitReport> out;
    const std::size_t gsize = G.elements.size();
    jobs = std::max(1, jobs);

    for (const auto& seed : solutions) {
        if (visited.count(key_of(seed)))
            continue;
        std::vector<StructureConstants> images(gsize);
        auto work = [&](std::size_t lo, std::size_t hi) {
            for (std::size_t i = lo; i < hi; ++i)
                images[i] = act_cached(G, i, seed);
        };
        if (jobs == 1) {
            work(0, gsize);
        } else {
            std::vector<std::thread> pool;
            for (int j = 0; j < jobs; ++j)
                pool.emplace_back(work, gsize * j / jobs, gsize * (j + 1) / jobs);
            for (auto& t : pool)
                t.join();
        }
        std::set<StructureConstants, LexLess> members(images.begin(), images.end());
        OrbitReport rep;
        rep.members.assign(members.begin(), members.end());
        rep.canonical = rep.members.front();
        rep.orbit_size = rep.members.size();
        rep.isotropy = isotropy(rep.canonical);
        for (const auto& m : rep.members) {
            auto k = key_of(m);
            if (input.count(k)) {
                ++rep.input_count;
                visited.insert(std::move(k));
            }
        }
        out.push_back(std::move(rep));
    }
    std::sort(out.begin(), out.end(),
              [](const OrbitReport& a, const OrbitReport& b) { return lex_less(a.canonical, b.canonical); });
    return out;
}

std::optional<Matrix> find_isomorphism(const StructureConstants& from, const StructureConstants& to)
{
    if (from.n() != to.n())
        return std::nullopt;
    const auto& G = group_cache(from.n());
    for (std::size_t i = 0; i < G.elements.size(); ++i)
        if (act_cached(G, i, from) == to)
            return G.elements[i];
    return std::nullopt;
}

}  // namespace f2geom
