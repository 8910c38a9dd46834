#include <doctest.h>

#include <random>

#include "f2geom/constructions.hpp"
#include "f2geom/field.hpp"
#include "f2geom/labels.hpp"

using namespace f2geom;

namespace {

Polynomial random_poly(std::mt19937& rng, int n, int max_deg, int terms)
{
    Polynomial p(n);
    for (int t = 0; t < terms; ++t) {
        Monomial m(n);
        for (int i = 0; i < n; ++i)
            m[i] = static_cast<std::uint16_t>(rng() % (max_deg + 1));
        p.toggle(m);
    }
    return p;
}

// f(x + e_mu) + f(x), straight from the monomials.
Polynomial finite_difference(const Polynomial& f, int mu)
{
    Polynomial out = f;
    for (const auto& m : f.terms()) {
        const unsigned e = m[mu];
        for (unsigned k = 0; k <= e; ++k) {
            // binomial(e, k) mod 2 by Pascal's rule
            std::vector<int> row{1};
            for (unsigned r = 1; r <= e; ++r) {
                std::vector<int> next(r + 1, 1);
                for (unsigned j = 1; j < r; ++j)
                    next[j] = row[j - 1] ^ row[j];
                row = next;
            }
            if (row[k]) {
                Monomial t = m;
                t[mu] = static_cast<std::uint16_t>(k);
                out.toggle(t);
            }
        }
    }
    return out;
}

}  // namespace

TEST_SUITE("field")
{
    TEST_CASE("parsing and printing")
    {
        const auto p = Polynomial::parse(3, "x1^2*x3 + x2 + 1");
        CHECK(Polynomial::parse(3, p.str()) == p);
        CHECK(Polynomial::parse(2, "0").is_zero());
        CHECK(Polynomial::parse(2, "x1 + x1").is_zero());
        CHECK(Polynomial::parse(2, "x1*x1") == Polynomial::parse(2, "x1^2"));
        CHECK_THROWS_AS(Polynomial::parse(2, "x3"), ParseError);
        CHECK_THROWS_AS(Polynomial::parse(2, "x1 +"), ParseError);
        CHECK_THROWS_AS(Polynomial::parse(2, "y"), ParseError);
        CHECK_THROWS_AS(Polynomial::parse(2, ""), ParseError);
        CHECK_THROWS_AS(Polynomial::parse(1, "x1^17"), SearchCapExceeded);
    }

    TEST_CASE("shift by one")
    {
        std::mt19937 rng(41);
        for (int t = 0; t < 50; ++t) {
            const auto f = random_poly(rng, 3, 6, 5);
            for (int mu = 0; mu < 3; ++mu)
                CHECK(f.shifted(mu) + f == finite_difference(f, mu));
        }
    }

    TEST_CASE("differential examples")
    {
        const auto fn = functions_algebra(2);
        CHECK(differential(Polynomial::variable(2, 0), fn).coeff[0] == Polynomial::one(2));
        CHECK(differential(Polynomial::parse(2, "x1^2"), fn).coeff[0] == Polynomial::one(2));
        CHECK(partial(Polynomial::parse(2, "x1^2 + x1"), 0, fn).is_zero());
        CHECK(partial(Polynomial::parse(2, "x1^8"), 0, fn) == Polynomial::one(2));
        const StructureConstants classical(2);
        const auto d = differential(Polynomial::parse(2, "x1^2*x2"), classical);
        CHECK(d.coeff[0].is_zero());
        CHECK(d.coeff[1] == Polynomial::parse(2, "x1^2"));
        CHECK(differential(Polynomial::one(2), fn).coeff[1].is_zero());
    }

    TEST_CASE("partial derivatives of the functions calculus are finite differences")
    {
        std::mt19937 rng(43);
        for (int t = 0; t < 200; ++t) {
            const int n = 1 + static_cast<int>(rng() % 3);
            const auto f = random_poly(rng, n, 4, 1 + static_cast<int>(rng() % 6));
            const auto v = functions_algebra(n);
            for (int mu = 0; mu < n; ++mu)
                CHECK(partial(f, mu, v) == finite_difference(f, mu));
        }
    }

    TEST_CASE("d is a derivation for every n=2 calculus")
    {
        std::mt19937 rng(47);
        for (const auto& v : enumerate_algebras(2, EnumerationMode::all()))
            for (int t = 0; t < 10; ++t) {
                const auto f = random_poly(rng, 2, 3, 3), g = random_poly(rng, 2, 3, 3);
                OneForm lhs = differential(f * g, v);
                OneForm rhs = differential(f, v).right(g, v);
                rhs += differential(g, v).left(f);
                CHECK(lhs == rhs);
            }
    }

    TEST_CASE("closed multilinear polynomials are constant for the functions calculus")
    {
        const int n = 3;
        const auto v = functions_algebra(n);
        // Multilinear polynomials are exactly the functions on F_2^n.
        std::vector<Monomial> basis;
        for (std::uint16_t a = 0; a <= 1; ++a)
            for (std::uint16_t b = 0; b <= 1; ++b)
                for (std::uint16_t c = 0; c <= 1; ++c)
                    basis.push_back({a, b, c});
        for (unsigned m = 1; m < (1u << basis.size()); ++m) {
            Polynomial f(n);
            for (std::size_t i = 0; i < basis.size(); ++i)
                if ((m >> i) & 1)
                    f.toggle(basis[i]);
            const auto d = differential(f, v);
            const bool closed = d.coeff[0].is_zero() && d.coeff[1].is_zero() && d.coeff[2].is_zero();
            CHECK(closed == (f == Polynomial::one(n)));
        }
        // x^2 + x vanishes as a function, so it is closed too.
        const auto q = differential(Polynomial::parse(n, "x1^2 + x1"), v);
        CHECK(q == OneForm(n, n));
    }

    TEST_CASE("Laplacian")
    {
        std::mt19937 rng(53);
        for (int n = 2; n <= 4; ++n) {
            const auto v = functions_algebra(n);
            const auto g = euclidean_metric(n);
            for (const auto& p : enumerate_partitions(n)) {
                const auto c = partition_qlc(p);
                for (int t = 0; t < 10; ++t)
                    CHECK(laplacian(random_poly(rng, n, 4, 4), v, g, c).is_zero());
                // products of Frobenius powers
                Polynomial f = Polynomial::one(n);
                for (int i = 0; i < n; ++i) {
                    Monomial m(n, 0);
                    m[i] = static_cast<std::uint16_t>(1u << (rng() % 4));
                    Polynomial x(n);
                    x.toggle(m);
                    f = f * x;
                }
                CHECK(laplacian(f, v, g, c).is_zero());
            }
        }
        const auto b = label_rep(2, "B");
        const auto gb = find_metrics(b).front();
        const auto qb = find_qlcs(b, gb);
        CHECK(laplacian(Polynomial::one(2), b, gb, qb.connections.back()).is_zero());
        Connection bogus = qb.connections.back();
        bogus.gamma.flip(0, 1, 1);
        CHECK_THROWS_AS(laplacian(Polynomial::one(2), b, gb, bogus), InvalidGeometry);
        CHECK_THROWS_AS(laplacian(Polynomial::one(2), b, Matrix::identity(2), qb.connections.back()), InvalidGeometry);
    }
}
