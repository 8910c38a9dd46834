#pragma once

// Slow reference implementations built directly from the definitions with
// plain int arrays. They share no code with the library beyond the types
// used to hand results back.

#include <array>
#include <set>
#include <vector>

namespace oracle {

using Tensor = std::vector<int>;  // V[(mu*n+nu)*n+rho]
using Mat = std::vector<std::vector<int>>;

inline int at(const Tensor& v, int n, int mu, int nu, int rho) { return v[(mu * n + nu) * n + rho]; }

inline Tensor from_word(int n, unsigned long long w)
{
    Tensor v(n * n * n);
    for (int i = 0; i < n * n * n; ++i)
        v[i] = (w >> i) & 1;
    return v;
}

// Product of two coefficient vectors.
inline std::vector<int> mul(const Tensor& v, int n, const std::vector<int>& a, const std::vector<int>& b)
{
    std::vector<int> r(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (a[i] && b[j])
                for (int k = 0; k < n; ++k)
                    r[k] ^= at(v, n, i, j, k);
    return r;
}

inline std::vector<int> unit_vec(int n, int i)
{
    std::vector<int> e(n, 0);
    e[i] = 1;
    return e;
}

inline bool commutative(const Tensor& v, int n)
{
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (at(v, n, a, b, c) != at(v, n, b, a, c))
                    return false;
    return true;
}

inline bool associative(const Tensor& v, int n)
{
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                auto ea = unit_vec(n, a), eb = unit_vec(n, b), ec = unit_vec(n, c);
                if (mul(v, n, mul(v, n, ea, eb), ec) != mul(v, n, ea, mul(v, n, eb, ec)))
                    return false;
            }
    return true;
}

// Element u with u*x = x for every basis x, found by trying all 2^n vectors.
inline bool has_unit(const Tensor& v, int n, std::vector<int>* out = nullptr)
{
    int found = 0;
    for (int m = 0; m < (1 << n); ++m) {
        std::vector<int> u(n);
        for (int i = 0; i < n; ++i)
            u[i] = (m >> i) & 1;
        bool ok = true;
        for (int b = 0; b < n && ok; ++b)
            ok = mul(v, n, u, unit_vec(n, b)) == unit_vec(n, b);
        if (ok) {
            ++found;
            if (out)
                *out = u;
        }
    }
    return found == 1;
}

inline int rank(Mat m)
{
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c]) {
                p = i;
                break;
            }
        if (p < 0)
            continue;
        std::swap(m[p], m[r]);
        for (int i = 0; i < rows; ++i)
            if (i != r && m[i][c])
                for (int k = 0; k < cols; ++k)
                    m[i][k] ^= m[r][k];
        ++r;
    }
    return r;
}

inline Mat matmul(const Mat& a, const Mat& b)
{
    const std::size_t n = a.size(), k = b.size(), m = b[0].size();
    Mat c(n, std::vector<int>(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t l = 0; l < k; ++l)
                c[i][j] ^= a[i][l] & b[l][j];
    return c;
}

inline Mat inverse(const Mat& a)
{
    const int n = static_cast<int>(a.size());
    Mat aug(n, std::vector<int>(2 * n, 0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            aug[i][j] = a[i][j];
        aug[i][n + i] = 1;
    }
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (p < n && !aug[p][c])
            ++p;
        if (p == n)
            return {};
        std::swap(aug[p], aug[c]);
        for (int i = 0; i < n; ++i)
            if (i != c && aug[i][c])
                for (int k = 0; k < 2 * n; ++k)
                    aug[i][k] ^= aug[c][k];
    }
    Mat inv(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            inv[i][j] = aug[i][n + j];
    return inv;
}

// New basis y^i = sum_j h[i][j] x^j; returns the structure constants in y.
inline Tensor change_basis(const Tensor& v, int n, const Mat& h)
{
    const Mat hi = inverse(h);
    Tensor w(n * n * n, 0);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            // y^i y^k expressed in x, then x^m = sum_p hi[m][p] y^p.
            auto prod = mul(v, n, h[i], h[k]);
            for (int m = 0; m < n; ++m)
                if (prod[m])
                    for (int p = 0; p < n; ++p)
                        w[(i * n + k) * n + p] ^= hi[m][p];
        }
    return w;
}

// ---- bimodule calculus on constant tensors --------------------------------
// Two-tensors are n x n arrays t[a][b] for sum t_ab dx^a (x) dx^b.

// Right multiplication by x^g, returning only the part that is not x^g t:
// dx^a (x) dx^b x^g = x^g dx^a (x) dx^b + V^{ag}_r dx^r (x) dx^b + V^{bg}_s dx^a (x) dx^s.
inline Mat right_correction(const Tensor& v, int n, const Mat& t, int g)
{
    Mat out(n, std::vector<int>(n, 0));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (t[a][b])
                for (int r = 0; r < n; ++r) {
                    out[r][b] ^= at(v, n, a, g, r);
                    out[a][r] ^= at(v, n, b, g, r);
                }
    return out;
}

using Gamma = std::vector<Mat>;      // Gamma[mu][a][b]
using Braid = std::vector<std::vector<Mat>>;  // sigma[mu][nu][w][s]

// sigma(dx^mu (x) dx^g) from the right Leibniz rule applied to nabla(dx^mu x^g).
inline Braid braid_from_gamma(const Tensor& v, int n, const Gamma& G)
{
    Braid s(n, std::vector<Mat>(n, Mat(n, std::vector<int>(n, 0))));
    for (int mu = 0; mu < n; ++mu)
        for (int g = 0; g < n; ++g) {
            Mat& t = s[mu][g];
            t[g][mu] ^= 1;  // d x^g (x) dx^mu from nabla(x^g dx^mu)
            for (int r = 0; r < n; ++r)
                if (at(v, n, mu, g, r))
                    for (int a = 0; a < n; ++a)
                        for (int b = 0; b < n; ++b)
                            t[a][b] ^= G[r][a][b];
            const Mat c = right_correction(v, n, G[mu], g);
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    t[a][b] ^= c[a][b];
        }
    return s;
}

// sigma(dx^mu (x) dx^nu x^g) = sigma(dx^mu (x) dx^nu) x^g for all indices.
inline bool braid_is_bimodule_map(const Tensor& v, int n, const Braid& s)
{
    for (int mu = 0; mu < n; ++mu)
        for (int nu = 0; nu < n; ++nu)
            for (int g = 0; g < n; ++g) {
                Mat lhs(n, std::vector<int>(n, 0));
                for (int r = 0; r < n; ++r) {
                    if (at(v, n, mu, g, r))
                        for (int a = 0; a < n; ++a)
                            for (int b = 0; b < n; ++b)
                                lhs[a][b] ^= s[r][nu][a][b];
                    if (at(v, n, nu, g, r))
                        for (int a = 0; a < n; ++a)
                            for (int b = 0; b < n; ++b)
                                lhs[a][b] ^= s[mu][r][a][b];
                }
                if (lhs != right_correction(v, n, s[mu][nu], g))
                    return false;
            }
    return true;
}

inline bool braid_invertible(int n, const Braid& s)
{
    Mat m(n * n, std::vector<int>(n * n));
    for (int mu = 0; mu < n; ++mu)
        for (int nu = 0; nu < n; ++nu)
            for (int w = 0; w < n; ++w)
                for (int q = 0; q < n; ++q)
                    m[mu * n + nu][w * n + q] = s[mu][nu][w][q];
    return rank(m) == n * n;
}

// Wedge of dx^a (x) dx^b into the basis dx^a ^ dx^c (a < c); squares vanish.
inline bool wedge_zero(int n, const Mat& t)
{
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (t[a][b] ^ t[b][a])
                return false;
    return true;
}

// (nabla (x) id) g + (sigma (x) id)(id (x) nabla) g as a 3-tensor.
inline bool metric_compatible(int n, const Mat& g, const Gamma& G, const Braid& s)
{
    std::vector<int> T(n * n * n, 0);
    for (int mu = 0; mu < n; ++mu)
        for (int nu = 0; nu < n; ++nu) {
            if (!g[mu][nu])
                continue;
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    if (G[mu][a][b])
                        T[(a * n + b) * n + nu] ^= 1;
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d)
                    if (G[nu][c][d])
                        for (int a = 0; a < n; ++a)
                            for (int b = 0; b < n; ++b)
                                if (s[mu][c][a][b])
                                    T[(a * n + b) * n + d] ^= 1;
        }
    for (int x : T)
        if (x)
            return false;
    return true;
}

inline bool central(const Tensor& v, int n, const Mat& g)
{
    for (int x = 0; x < n; ++x) {
        const Mat c = right_correction(v, n, g, x);
        for (const auto& row : c)
            for (int e : row)
                if (e)
                    return false;
    }
    return true;
}

inline std::vector<Mat> metrics(const Tensor& v, int n)
{
    std::vector<Mat> out;
    for (unsigned long m = 0; m < (1ul << (n * n)); ++m) {
        Mat g(n, std::vector<int>(n));
        for (int i = 0; i < n * n; ++i)
            g[i / n][i % n] = (m >> i) & 1;
        bool sym = true;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                sym = sym && g[a][b] == g[b][a];
        if (sym && rank(g) == n && central(v, n, g))
            out.push_back(g);
    }
    return out;
}

// Every connection with constant Christoffel symbols, symmetric in the lower
// indices, whose induced braiding is an invertible bimodule map compatible
// with g. Zero included.
inline std::set<Gamma> qlcs(const Tensor& v, int n, const Mat& g)
{
    std::vector<std::array<int, 3>> slots;
    for (int mu = 0; mu < n; ++mu)
        for (int a = 0; a < n; ++a)
            for (int b = a; b < n; ++b)
                slots.push_back({mu, a, b});
    std::set<Gamma> out;
    for (unsigned long m = 0; m < (1ul << slots.size()); ++m) {
        Gamma G(n, Mat(n, std::vector<int>(n, 0)));
        for (std::size_t i = 0; i < slots.size(); ++i)
            if ((m >> i) & 1) {
                auto [mu, a, b] = slots[i];
                G[mu][a][b] = G[mu][b][a] = 1;
            }
        const Braid s = braid_from_gamma(v, n, G);
        if (!braid_is_bimodule_map(v, n, s))
            continue;
        if (!metric_compatible(n, g, G, s))
            continue;
        if (!braid_invertible(n, s))
            continue;
        out.insert(G);
    }
    return out;
}

// Curvature coefficient on (dx^a ^ dx^c) (x) dx^d, a < c, from
// -(wedge (x) id)(id (x) nabla) nabla dx^mu.
inline std::vector<std::vector<int>> curvature(int n, const Gamma& G)
{
    std::vector<std::vector<int>> R(n);
    for (int mu = 0; mu < n; ++mu) {
        // full three-index tensor before wedging
        std::vector<int> full(n * n * n, 0);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (G[mu][a][b])
                    for (int c = 0; c < n; ++c)
                        for (int d = 0; d < n; ++d)
                            if (G[b][c][d])
                                full[(a * n + c) * n + d] ^= 1;
        for (int a = 0; a < n; ++a)
            for (int c = a + 1; c < n; ++c)
                for (int d = 0; d < n; ++d)
                    R[mu].push_back(full[(a * n + c) * n + d] ^ full[(c * n + a) * n + d]);
    }
    return R;
}

}  // namespace oracle
