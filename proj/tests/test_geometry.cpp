#include <doctest.h>

#include <set>

#include "f2geom/geometry.hpp"
#include "f2geom/labels.hpp"
#include "support.hpp"

using namespace f2geom;

namespace {

std::set<oracle::Gamma> gamma_set(const QlcSearch& q)
{
    std::set<oracle::Gamma> s;
    for (const auto& c : q.connections)
        s.insert(support::to_oracle(c.gamma));
    return s;
}

std::vector<StructureConstants> inner_reps(int n)
{
    std::vector<StructureConstants> out;
    for (const auto& l : labels(n, true))
        out.push_back(label_rep(n, l));
    return out;
}

// alpha(dx^r x^g) = alpha(dx^r) x^g for constant alpha.
bool alpha_is_bimodule_map(const StructureConstants& v, const Tensor3& alpha)
{
    const int n = v.n();
    const auto t = support::to_oracle(v);
    const auto a = support::to_oracle(alpha);
    for (int r = 0; r < n; ++r)
        for (int g = 0; g < n; ++g) {
            oracle::Mat lhs(n, std::vector<int>(n, 0));
            for (int m = 0; m < n; ++m)
                if (v.get(r, g, m))
                    for (int i = 0; i < n; ++i)
                        for (int j = 0; j < n; ++j)
                            lhs[i][j] ^= a[m][i][j];
            if (lhs != oracle::right_correction(t, n, a[r], g))
                return false;
        }
    return true;
}

}  // namespace

TEST_SUITE("geometry")
{
    TEST_CASE("metrics agree with exhaustive search")
    {
        for (int n = 1; n <= 3; ++n)
            for (const auto& v : enumerate_algebras(n, EnumerationMode::all())) {
                std::set<oracle::Mat> got;
                for (const auto& g : find_metrics(v)) {
                    CHECK(is_metric(v, g));
                    got.insert(g.to_rows());
                }
                const auto ref = oracle::metrics(support::to_oracle(v), n);
                CHECK(got == std::set<oracle::Mat>(ref.begin(), ref.end()));
            }
    }

    TEST_CASE("alpha maps are exactly the bimodule maps")
    {
        for (int n = 2; n <= 3; ++n)
            for (const auto& v : inner_reps(n)) {
                const auto alphas = find_alphas(v);
                std::set<std::string> seen;
                for (const auto& a : alphas) {
                    CHECK(alpha_is_bimodule_map(v, a));
                    seen.insert(a.hex());
                    for (int mu = 0; mu < n; ++mu)
                        for (int x = 0; x < n; ++x)
                            for (int y = 0; y < n; ++y)
                                CHECK(a.get(mu, x, y) == a.get(mu, y, x));
                }
                CHECK(seen.size() == alphas.size());
                if (n == 2) {
                    // all symmetric alpha by brute force
                    std::size_t count = 0;
                    for (unsigned m = 0; m < 64; ++m) {
                        Tensor3 a(2);
                        int bit = 0;
                        for (int mu = 0; mu < 2; ++mu)
                            for (int x = 0; x < 2; ++x)
                                for (int y = x; y < 2; ++y, ++bit)
                                    if ((m >> bit) & 1) {
                                        a.set(mu, x, y);
                                        a.set(mu, y, x);
                                    }
                        count += alpha_is_bimodule_map(v, a);
                    }
                    CHECK(count == alphas.size());
                }
            }
    }

    TEST_CASE("connections at n=2 agree with exhaustive search")
    {
        std::vector<StructureConstants> calculi = inner_reps(2);
        for (const auto& l : labels(2, false))
            calculi.push_back(label_rep(2, l));
        for (const auto& v : calculi)
            for (const auto& g : find_metrics(v)) {
                const auto ref = oracle::qlcs(support::to_oracle(v), 2, g.to_rows());
                const auto q = find_unit(v) ? find_qlcs(v, g) : find_bimodule_qlcs(v, g);
                CHECK(gamma_set(q) == ref);
                CHECK(gamma_set(find_bimodule_qlcs(v, g)) == ref);
            }
    }

    TEST_CASE("connections at n=3 agree with exhaustive search on sampled metrics")
    {
        for (const char* l : {"B", "C", "E", "F"}) {
            const auto v = label_rep(3, l);
            const auto g = find_metrics(v).front();
            CHECK(gamma_set(find_qlcs(v, g)) == oracle::qlcs(support::to_oracle(v), 3, g.to_rows()));
        }
    }

    TEST_CASE("sigma search and gamma search give the same connections")
    {
        for (int n = 2; n <= 3; ++n)
            for (const auto& v : inner_reps(n))
                for (const auto& g : find_metrics(v)) {
                    const auto a = find_qlcs(v, g), b = find_bimodule_qlcs(v, g);
                    REQUIRE(a.connections.size() == b.connections.size());
                    for (std::size_t i = 0; i < a.connections.size(); ++i) {
                        CHECK(a.connections[i].gamma == b.connections[i].gamma);
                        CHECK(a.connections[i].sigma == b.connections[i].sigma);
                    }
                }
    }

    TEST_CASE("every connection found passes the independent checks")
    {
        for (int n = 2; n <= 3; ++n)
            for (const auto& v : inner_reps(n))
                for (const auto& g : find_metrics(v)) {
                    const auto q = find_qlcs(v, g);
                    CHECK(q.crosscheck_mismatch_accepted == 0);
                    CHECK(q.crosscheck_mismatch_rejected == 0);
                    CHECK(q.crosscheck_mismatch_invertible == 0);
                    bool has_zero = false;
                    for (const auto& c : q.connections) {
                        has_zero = has_zero || !c.gamma.any();
                        CHECK(is_qlc(v, g, c));
                        CHECK(torsion_free(c.gamma));
                        CHECK(c.sigma.invertible());
                        CHECK(wedge_compatible(c.sigma));
                        CHECK(satisfies_bimodule_law(v, c.sigma));
                        CHECK(metric_compatible(g, c.gamma, c.sigma));
                        CHECK(sigma_preserves_metric(g, c.sigma));
                        CHECK(sigma_from_gamma(v, c.gamma) == c.sigma);
                        CHECK(reconstruct_sigma(v, c.gamma) == c.sigma);
                        const auto R = curvature(c.gamma);
                        const auto ref = oracle::curvature(n, support::to_oracle(c.gamma));
                        for (int mu = 0; mu < n; ++mu)
                            for (std::size_t k = 0; k < ref[mu].size(); ++k)
                                CHECK(R[mu].get(k) == static_cast<bool>(ref[mu][k]));
                    }
                    CHECK(has_zero);
                }
    }

    TEST_CASE("corrupted connections are rejected")
    {
        const auto v = label_rep(3, "C");
        const auto g = find_metrics(v).front();
        const auto q = find_qlcs(v, g);
        std::set<std::string> found;
        for (const auto& c : q.connections)
            found.insert(c.gamma.hex());
        for (const auto& c : q.connections)
            for (std::size_t bit = 0; bit < 27; bit += 5) {
                Connection bad = c;
                bad.gamma.flip(bit / 9, (bit / 3) % 3, bit % 3);
                if (!found.count(bad.gamma.hex()))
                    CHECK_FALSE(is_qlc(v, g, bad));
            }
    }

    TEST_CASE("flip braiding")
    {
        for (int n = 1; n <= 4; ++n) {
            const auto f = Sigma::flip(n);
            CHECK(f.invertible());
            CHECK(wedge_compatible(f));
            CHECK(satisfies_bimodule_law(StructureConstants(n), f));
            CHECK(sigma_system(StructureConstants(n)).satisfied_by(f.bits()));
            CHECK(sigma_from_gamma(StructureConstants(n), Tensor3(n)) == f);
        }
    }

    TEST_CASE("torsion and wedge")
    {
        Tensor3 t(3);
        t.set(0, 1, 2);
        CHECK_FALSE(torsion_free(t));
        t.set(0, 2, 1);
        CHECK(torsion_free(t));
        t.set(1, 1, 1);
        CHECK(torsion_free(t));
        CHECK(pair_count(4) == 6);
        CHECK(pair_index(4, 0, 1) == 0);
        CHECK(pair_index(4, 2, 3) == 5);
    }

    TEST_CASE("search errors")
    {
        const auto d = label_rep(2, "D");
        CHECK_THROWS_AS(find_qlcs(d, find_metrics(d).front()), InvalidGeometry);
        const auto b = label_rep(2, "B");
        CHECK_THROWS_AS(find_qlcs(b, Matrix::identity(2)), InvalidGeometry);
        QlcOptions tiny;
        tiny.cap = 2;
        const auto c = label_rep(3, "C");
        CHECK_THROWS_AS(find_qlcs(c, find_metrics(c).front(), tiny), SearchCapExceeded);
    }

    TEST_CASE("connection search is independent of the worker count")
    {
        const auto v = label_rep(3, "E");
        QlcOptions many;
        many.jobs = 3;
        for (const auto& g : find_metrics(v)) {
            const auto a = find_qlcs(v, g), b = find_qlcs(v, g, many);
            REQUIRE(a.connections.size() == b.connections.size());
            for (std::size_t i = 0; i < a.connections.size(); ++i)
                CHECK(a.connections[i].gamma == b.connections[i].gamma);
        }
    }
}
