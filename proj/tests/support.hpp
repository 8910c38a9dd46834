#pragma once

#include <random>

#include "f2geom/algebra.hpp"
#include "f2geom/geometry.hpp"
#include "oracle.hpp"

namespace support {

inline oracle::Tensor to_oracle(const f2geom::StructureConstants& v)
{
    const int n = v.n();
    oracle::Tensor t(n * n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                t[(a * n + b) * n + c] = v.get(a, b, c);
    return t;
}

inline oracle::Mat to_oracle(const f2geom::Matrix& m) { return m.to_rows(); }

inline oracle::Gamma to_oracle(const f2geom::Tensor3& g)
{
    const int n = g.n();
    oracle::Gamma G(n, oracle::Mat(n, std::vector<int>(n, 0)));
    for (int mu = 0; mu < n; ++mu)
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                G[mu][a][b] = g.get(mu, a, b);
    return G;
}

inline f2geom::Matrix random_matrix(std::mt19937& rng, int r, int c)
{
    f2geom::Matrix m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j)
            m.set(i, j, rng() & 1);
    return m;
}

inline f2geom::Matrix random_invertible(std::mt19937& rng, int n)
{
    while (true) {
        auto m = random_matrix(rng, n, n);
        if (f2geom::mat_rank(m) == static_cast<std::size_t>(n))
            return m;
    }
}

}  // namespace support
