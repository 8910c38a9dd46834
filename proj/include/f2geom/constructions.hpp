#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "f2geom/algebra.hpp"
#include "f2geom/geometry.hpp"

namespace f2geom {

// Product of delta functions on n points: V^{mu nu}_rho = [mu = nu = rho].
StructureConstants functions_algebra(int n);
// Group algebra of Z_n: V^{mu nu}_rho = [rho = mu + nu mod n].
StructureConstants cyclic_algebra(int n);
// sum_mu dx^mu (x) dx^mu in the delta-function basis.
Matrix euclidean_metric(int n);
// The metrics g^(m)_{mu nu} = [mu + nu = m mod n], m = 0..n-1, then their
// complements g + c (x) c with c = sum dx^mu; degenerate and repeated
// matrices are dropped.
std::vector<Matrix> cyclic_metrics(int n);
// k[x]/<x^(2^d) - x> in the power basis 1, x, ..., x^(2^d - 1); d in {1, 2}.
StructureConstants field_extension_algebra(int d);

// Index set split into T, S and its partner set; pairs[i] = (s, s_bar).
struct PartitionDatum {
    int n = 0;
    std::vector<int> fixed;
    std::vector<std::pair<int, int>> pairs;

    bool valid() const;
};

// Connection for the Euclidean metric of functions_algebra(n):
// nabla dx^t = 0 and nabla dx^s = nabla dx^sbar = (dx^s + dx^sbar)^(x)2.
// Throws InvalidGeometry on a malformed datum.
Connection partition_qlc(const PartitionDatum& p);
// Every datum with pairs listed as (smaller, larger), each pairing once.
std::vector<PartitionDatum> enumerate_partitions(int n);
// sum over m = |T| with n - m even of C(n, m) (n - m - 1)!!.
std::uint64_t partition_qlc_count(int n);

// Reorders basis indices: out(i, j) = g(perm[i], perm[j]).
Matrix permute(const Matrix& g, const std::vector<int>& perm);

}  // namespace f2geom
