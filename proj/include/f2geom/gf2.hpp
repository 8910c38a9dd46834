#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "f2geom/errors.hpp"

namespace f2geom {

// Packed vector over GF(2). Bit i lives in word i/64 at position i%64.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }
    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v = true)
    {
        const std::uint64_t m = std::uint64_t{1} << (i & 63);
        if (v)
            w_[i >> 6] |= m;
        else
            w_[i >> 6] &= ~m;
    }
    void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    BitVec& operator^=(const BitVec& o);
    friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
    bool operator==(const BitVec& o) const = default;

    bool any() const;
    std::size_t count() const;
    // Parity of the bitwise AND, i.e. the GF(2) inner product.
    bool dot(const BitVec& o) const;
    // Index of the lowest set bit, or -1.
    long lowest() const;

    const std::vector<std::uint64_t>& words() const { return w_; }
    std::vector<std::uint64_t>& words() { return w_; }

    std::string str() const;
    // Hex of the bit string read from index 0 onward; index 0 is the most
    // significant bit of the first digit, padded with zeros on the right.
    std::string hex() const;
    static BitVec from_hex(std::size_t n, std::string_view hex);

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

// Lexicographic order on the bit string, index 0 compared first.
bool lex_less(const BitVec& a, const BitVec& b);

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), rows_(rows, BitVec(cols)) {}

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<std::vector<int>>& rows);

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    bool get(std::size_t i, std::size_t j) const { return rows_[i].get(j); }
    void set(std::size_t i, std::size_t j, bool v = true) { rows_[i].set(j, v); }
    const BitVec& row(std::size_t i) const { return rows_[i]; }
    BitVec& row(std::size_t i) { return rows_[i]; }

    Matrix transpose() const;
    bool is_symmetric() const;
    bool operator==(const Matrix& o) const = default;

    // Row-major bits as a single vector of rows*cols entries.
    BitVec packed() const;
    std::string hex() const { return packed().hex(); }
    std::vector<std::vector<int>> to_rows() const;
    std::string str() const;

private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<BitVec> rows_;
};

bool lex_less(const Matrix& a, const Matrix& b);

Matrix mat_mul(const Matrix& a, const Matrix& b);
BitVec mat_vec(const Matrix& a, const BitVec& x);
std::size_t mat_rank(Matrix m);
Matrix mat_inverse(const Matrix& m);

// |GL(n,2)| = prod_{k<n} (2^n - 2^k).
std::uint64_t gl_order(int n);

// Every invertible n x n matrix once, ascending in the lexicographic order
// of the row-major bit string. n <= 4 unless allow_large (then n <= 5).
std::vector<Matrix> enumerate_gl(int n, bool allow_large = false);

struct LinearSystem {
    std::size_t vars = 0;
    std::vector<BitVec> rows;
    std::vector<std::uint8_t> rhs;

    explicit LinearSystem(std::size_t v = 0) : vars(v) {}
    void add(BitVec row, bool b)
    {
        rows.push_back(std::move(row));
        rhs.push_back(b ? 1 : 0);
    }
    bool satisfied_by(const BitVec& x) const;
};

struct AffineSpace {
    BitVec particular;
    std::vector<BitVec> basis;

    std::size_t dim() const { return basis.size(); }
    // Member selected by the low dim() bits of k.
    BitVec member(std::uint64_t k) const;
};

// Column-pivot elimination with lowest-index pivots; basis vectors follow
// the free columns in ascending order. Throws Inconsistent.
AffineSpace solve_affine(const LinearSystem& sys);

}  // namespace f2geom
