#include "f2geom/gf2.hpp"

#include <bit>
#include <sstream>

namespace f2geom {

BitVec& BitVec::operator^=(const BitVec& o)
{
    if (o.n_ != n_)
        throw DimensionMismatch("BitVec xor: size " + std::to_string(n_) + " vs " + std::to_string(o.n_));
    for (std::size_t k = 0; k < w_.size(); ++k)
        w_[k] ^= o.w_[k];
    return *this;
}

bool BitVec::any() const
{
    for (auto w : w_)
        if (w)
            return true;
    return false;
}

std::size_t BitVec::count() const
{
    std::size_t c = 0;
    for (auto w : w_)
        c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

bool BitVec::dot(const BitVec& o) const
{
    if (o.n_ != n_)
        throw DimensionMismatch("BitVec dot");
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < w_.size(); ++k)
        acc ^= w_[k] & o.w_[k];
    return std::popcount(acc) & 1;
}

long BitVec::lowest() const
{
    for (std::size_t k = 0; k < w_.size(); ++k)
        if (w_[k])
            return static_cast<long>(k * 64 + std::countr_zero(w_[k]));
    return -1;
}

std::string BitVec::str() const
{
    std::string s(n_, '0');
    for (std::size_t i = 0; i < n_; ++i)
        if (get(i))
            s[i] = '1';
    return s;
}

std::string BitVec::hex() const
{
    static const char* digits = "0123456789abcdef";
    std::string s;
    for (std::size_t i = 0; i < n_; i += 4) {
        int d = 0;
        for (std::size_t j = 0; j < 4; ++j) {
            d <<= 1;
            if (i + j < n_ && get(i + j))
                d |= 1;
        }
        s.push_back(digits[d]);
    }
    return s;
}

BitVec BitVec::from_hex(std::size_t n, std::string_view hex)
{
    if (hex.size() != (n + 3) / 4)
        throw ParseError("hex length " + std::to_string(hex.size()) + " does not fit " + std::to_string(n) + " bits");
    BitVec v(n);
    for (std::size_t k = 0; k < hex.size(); ++k) {
        const char c = hex[k];
        int d;
        if (c >= '0' && c <= '9')
            d = c - '0';
        else if (c >= 'a' && c <= 'f')
            d = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F')
            d = c - 'A' + 10;
        else
            throw ParseError(std::string("bad hex digit '") + c + "'");
        for (std::size_t j = 0; j < 4; ++j) {
            const bool bit = (d >> (3 - j)) & 1;
            const std::size_t i = 4 * k + j;
            if (i < n)
                v.set(i, bit);
            else if (bit)
                throw ParseError("nonzero padding bit in hex");
        }
    }
    return v;
}

bool lex_less(const BitVec& a, const BitVec& b)
{
    const auto& x = a.words();
    const auto& y = b.words();
    const std::size_t m = std::min(x.size(), y.size());
    for (std::size_t k = 0; k < m; ++k) {
        const std::uint64_t d = x[k] ^ y[k];
        if (d) {
            const int i = std::countr_zero(d);
            return ((x[k] >> i) & 1) == 0;
        }
    }
    return a.size() < b.size();
}

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.set(i, i);
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<int>>& rows)
{
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows[0].size() : 0;
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c)
            throw DimensionMismatch("ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j)
            m.set(i, j, rows[i][j] & 1);
    }
    return m;
}

Matrix Matrix::transpose() const
{
    Matrix t(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j)
            if (get(i, j))
                t.set(j, i);
    return t;
}

bool Matrix::is_symmetric() const
{
    if (r_ != c_)
        return false;
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = i + 1; j < c_; ++j)
            if (get(i, j) != get(j, i))
                return false;
    return true;
}

BitVec Matrix::packed() const
{
    BitVec v(r_ * c_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j)
            if (get(i, j))
                v.set(i * c_ + j);
    return v;
}

std::vector<std::vector<int>> Matrix::to_rows() const
{
    std::vector<std::vector<int>> out(r_, std::vector<int>(c_, 0));
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j)
            out[i][j] = get(i, j) ? 1 : 0;
    return out;
}

std::string Matrix::str() const
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < r_; ++i) {
        if (i)
            os << ',';
        os << '[';
        for (std::size_t j = 0; j < c_; ++j)
            os << (j ? "," : "") << (get(i, j) ? 1 : 0);
        os << ']';
    }
    os << ']';
    return os.str();
}

bool lex_less(const Matrix& a, const Matrix& b)
{
    return lex_less(a.packed(), b.packed());
}

Matrix mat_mul(const Matrix& a, const Matrix& b)
{
    if (a.cols() != b.rows())
        throw DimensionMismatch("mat_mul: " + std::to_string(a.cols()) + " vs " + std::to_string(b.rows()));
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            if (a.get(i, k))
                c.row(i) ^= b.row(k);
    return c;
}

BitVec mat_vec(const Matrix& a, const BitVec& x)
{
    if (a.cols() != x.size())
        throw DimensionMismatch("mat_vec");
    BitVec y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        y.set(i, a.row(i).dot(x));
    return y;
}

std::size_t mat_rank(Matrix m)
{
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && !m.get(p, c))
            ++p;
        if (p == m.rows())
            continue;
        std::swap(m.row(p), m.row(r));
        for (std::size_t i = r + 1; i < m.rows(); ++i)
            if (m.get(i, c))
                m.row(i) ^= m.row(r);
        ++r;
    }
    return r;
}

Matrix mat_inverse(const Matrix& m)
{
    if (m.rows() != m.cols())
        throw DimensionMismatch("mat_inverse: not square");
    const std::size_t n = m.rows();
    Matrix a = m;
    Matrix inv = Matrix::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && !a.get(p, c))
            ++p;
        if (p == n)
            throw Singular("matrix is singular: " + m.str());
        std::swap(a.row(p), a.row(c));
        std::swap(inv.row(p), inv.row(c));
        for (std::size_t i = 0; i < n; ++i)
            if (i != c && a.get(i, c)) {
                a.row(i) ^= a.row(c);
                inv.row(i) ^= inv.row(c);
            }
    }
    return inv;
}

std::uint64_t gl_order(int n)
{
    std::uint64_t order = 1;
    for (int k = 0; k < n; ++k)
        order *= (std::uint64_t{1} << n) - (std::uint64_t{1} << k);
    return order;
}

namespace {

bool small_invertible(std::uint32_t rows[], int n)
{
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (p < n && !((rows[p] >> c) & 1))
            ++p;
        if (p == n)
            return false;
        std::swap(rows[p], rows[c]);
        for (int i = c + 1; i < n; ++i)
            if ((rows[i] >> c) & 1)
                rows[i] ^= rows[c];
    }
    return true;
}

}  // namespace

std::vector<Matrix> enumerate_gl(int n, bool allow_large)
{
    if (n < 1 || n > (allow_large ? 5 : 4))
        throw DimensionMismatch("enumerate_gl: n=" + std::to_string(n) + " outside supported range");
    const int bits = n * n;
    std::vector<Matrix> out;
    out.reserve(gl_order(n));
    for (std::uint64_t k = 0; k < (std::uint64_t{1} << bits); ++k) {
        std::uint32_t rows[8] = {};
        for (int i = 0; i < bits; ++i)
            if ((k >> (bits - 1 - i)) & 1)
                rows[i / n] |= 1u << (i % n);
        std::uint32_t work[8];
        std::copy(rows, rows + n, work);
        if (!small_invertible(work, n))
            continue;
        Matrix m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if ((rows[i] >> j) & 1)
                    m.set(i, j);
        out.push_back(std::move(m));
    }
    return out;
}

bool LinearSystem::satisfied_by(const BitVec& x) const
{
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (rows[i].dot(x) != static_cast<bool>(rhs[i]))
            return false;
    return true;
}

BitVec AffineSpace::member(std::uint64_t k) const
{
    BitVec v = particular;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if ((k >> i) & 1)
            v ^= basis[i];
    return v;
}

AffineSpace solve_affine(const LinearSystem& sys)
{
    const std::size_t nv = sys.vars;
    // Augmented rows: coefficient bits followed by the right-hand side.
    std::vector<BitVec> rows;
    rows.reserve(sys.rows.size());
    for (std::size_t i = 0; i < sys.rows.size(); ++i) {
        if (sys.rows[i].size() != nv)
            throw DimensionMismatch("solve_affine: row width");
        BitVec r(nv + 1);
        auto& w = r.words();
        const auto& s = sys.rows[i].words();
        std::copy(s.begin(), s.end(), w.begin());
        if (sys.rhs[i])
            r.set(nv);
        rows.push_back(std::move(r));
    }
    std::vector<long> pivot_of_col(nv, -1);
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < nv && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && !rows[p].get(c))
            ++p;
        if (p == rows.size())
            continue;
        std::swap(rows[p], rows[r]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != r && rows[i].get(c))
                rows[i] ^= rows[r];
        pivot_of_col[c] = static_cast<long>(r);
        pivot_cols.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows.size(); ++i)
        if (rows[i].get(nv))
            throw Inconsistent("linear system has no solution");

    AffineSpace sp;
    sp.particular = BitVec(nv);
    for (std::size_t k = 0; k < pivot_cols.size(); ++k)
        if (rows[k].get(nv))
            sp.particular.set(pivot_cols[k]);
    for (std::size_t f = 0; f < nv; ++f) {
        if (pivot_of_col[f] >= 0)
            continue;
        BitVec v(nv);
        v.set(f);
        for (std::size_t k = 0; k < pivot_cols.size(); ++k)
            if (rows[k].get(f))
                v.set(pivot_cols[k]);
        sp.basis.push_back(std::move(v));
    }
    return sp;
}

}  // namespace f2geom
