#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "f2geom/algebra.hpp"

namespace f2geom {

// Three-index bit tensor T^mu_{ab} (Christoffel symbols or an alpha map),
// bit index (mu*n + a)*n + b.
class Tensor3 {
public:
    Tensor3() = default;
    explicit Tensor3(int n) : n_(n), bits_(static_cast<std::size_t>(n) * n * n) {}
    Tensor3(int n, BitVec bits);

    int n() const { return n_; }
    bool get(int mu, int a, int b) const { return bits_.get(idx(mu, a, b)); }
    void set(int mu, int a, int b, bool v = true) { bits_.set(idx(mu, a, b), v); }
    void flip(int mu, int a, int b) { bits_.flip(idx(mu, a, b)); }
    const BitVec& bits() const { return bits_; }
    bool any() const { return bits_.any(); }
    std::string hex() const { return bits_.hex(); }
    bool operator==(const Tensor3& o) const = default;

    std::size_t idx(int mu, int a, int b) const { return (static_cast<std::size_t>(mu) * n_ + a) * n_ + b; }

private:
    int n_ = 0;
    BitVec bits_;
};

// Braiding sigma(dx^mu (x) dx^nu) = sum sigma^{mu nu}_{w s} dx^w (x) dx^s,
// bit index ((mu*n + nu)*n + w)*n + s.
class Sigma {
public:
    Sigma() = default;
    explicit Sigma(int n) : n_(n), bits_(static_cast<std::size_t>(n) * n * n * n) {}
    Sigma(int n, BitVec bits);

    static Sigma flip(int n);

    int n() const { return n_; }
    bool get(int mu, int nu, int w, int s) const { return bits_.get(idx(mu, nu, w, s)); }
    void set(int mu, int nu, int w, int s, bool v = true) { bits_.set(idx(mu, nu, w, s), v); }
    const BitVec& bits() const { return bits_; }
    std::string hex() const { return bits_.hex(); }
    bool operator==(const Sigma& o) const = default;

    // n^2 x n^2 matrix, row (mu,nu), column (w,s).
    Matrix matrix() const;
    bool invertible() const;

    std::size_t idx(int mu, int nu, int w, int s) const
    {
        return ((static_cast<std::size_t>(mu) * n_ + nu) * n_ + w) * n_ + s;
    }

private:
    int n_ = 0;
    BitVec bits_;
};

struct Connection {
    Tensor3 gamma;
    Sigma sigma;
    Tensor3 alpha;
};

// Orders connections by (gamma, sigma) bit strings.
bool connection_less(const Connection& a, const Connection& b);

// Symmetric, invertible and central for v.
bool is_metric(const StructureConstants& v, const Matrix& g);
bool is_central(const StructureConstants& v, const Matrix& g);
// All metrics for v, ascending by packed bits.
std::vector<Matrix> find_metrics(const StructureConstants& v);

AffineSpace alpha_space(const StructureConstants& v);
std::vector<Tensor3> find_alphas(const StructureConstants& v, std::uint64_t cap = std::uint64_t{1} << 20);

// Linear conditions for sigma: the bimodule law and the char-2 torsion
// condition (wedge o sigma = wedge).
LinearSystem sigma_system(const StructureConstants& v);
bool satisfies_bimodule_law(const StructureConstants& v, const Sigma& s);
bool wedge_compatible(const Sigma& s);

// Gamma from the inner data: gamma^mu_{rl} = theta_r delta^mu_l
// + sum_nu theta_nu sigma^{mu nu}_{rl} + alpha^mu_{rl}.
Tensor3 gamma_from_inner(const BitVec& theta, const Sigma& s, const Tensor3& alpha);

// Vanishing of (nabla (x) id) g + (sigma (x) id)(id (x) nabla) g.
bool metric_compatible(const Matrix& g, const Tensor3& gamma, const Sigma& s);
// sigma_12 sigma_23 (g (x) dx^a) = dx^a (x) g for every basis index a.
bool sigma_preserves_metric(const Matrix& g, const Sigma& s);
// The same identity for the single one-form theta.
bool sigma_preserves_metric_at(const Matrix& g, const Sigma& s, const BitVec& theta);

struct QlcOptions {
    std::uint64_t cap = std::uint64_t{1} << 24;
    int jobs = 1;
};

struct QlcSearch {
    std::vector<Connection> connections;  // includes the zero connection
    std::size_t sigma_dim = 0;
    std::size_t alpha_count = 0;
    std::uint64_t candidates = 0;
    // Candidates on which the cross-check identity disagrees with the primary
    // compatibility test, split by whether the primary test accepted them.
    std::uint64_t crosscheck_mismatch_accepted = 0;
    std::uint64_t crosscheck_mismatch_rejected = 0;
    // Same counts restricted to invertible sigma.
    std::uint64_t crosscheck_mismatch_invertible = 0;

    std::size_t nonzero_count() const;
};

// Inner calculi: enumerate the linear sigma solutions and filter.
// Throws InvalidGeometry when v has no unit, SearchCapExceeded above the cap.
QlcSearch find_qlcs(const StructureConstants& v, const Matrix& g, const QlcOptions& opt = {});

// sigma determined by gamma through the right Leibniz rule; needs no unit.
Sigma sigma_from_gamma(const StructureConstants& v, const Tensor3& gamma);
// Any calculus: enumerate symmetric gamma whose induced sigma is a bimodule map.
QlcSearch find_bimodule_qlcs(const StructureConstants& v, const Matrix& g, const QlcOptions& opt = {});

// Independent validity check of a single connection.
bool is_qlc(const StructureConstants& v, const Matrix& g, const Connection& c);

// sigma with sigma(dx^mu (x) theta) = theta (x) dx^mu - nabla dx^mu and the
// bimodule law. Throws Inconsistent when no unique solution exists.
Sigma reconstruct_sigma(const StructureConstants& v, const Tensor3& gamma);

// Omega^2 basis: dx^a ^ dx^c for a < c, in lexicographic pair order.
int pair_count(int n);
int pair_index(int n, int a, int c);

// Coefficients on the Omega^2 basis of a matrix t_{ab} dx^a (x) dx^b.
BitVec wedge(const Matrix& t);
// Per generator, the Omega^2 element wedge(nabla dx^mu).
std::vector<BitVec> torsion(const Tensor3& gamma);
bool torsion_free(const Tensor3& gamma);
// Per generator, coefficients on (dx^a ^ dx^c) (x) dx^d at bit
// pair_index(a,c)*n + d.
std::vector<BitVec> curvature(const Tensor3& gamma);
bool is_flat(const Tensor3& gamma);

// "dx*dx+de*dy" for the generator mu, or "0".
std::string render_gamma(const Tensor3& gamma, int mu);
// "dy^(dx*dx)+dx^(dy*dy)" for the generator mu, or "0".
std::string render_curvature(int n, const BitVec& component);
// "de*dx+dx*de".
std::string render_metric(const Matrix& g);

}  // namespace f2geom
