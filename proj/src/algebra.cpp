#include "f2geom/algebra.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>
#include <thread>

#include "f2geom/orbits.hpp"

namespace f2geom {

std::uint32_t StructureConstants::mul(std::uint32_t a, std::uint32_t b) const
{
    std::uint32_t out = 0;
    for (std::uint32_t ra = a; ra; ra &= ra - 1) {
        const int i = std::countr_zero(ra);
        for (std::uint32_t rb = b; rb; rb &= rb - 1)
            out ^= prod_[i * n_ + std::countr_zero(rb)];
    }
    return out;
}

BitVec StructureConstants::packed() const
{
    BitVec v(static_cast<std::size_t>(n_) * n_ * n_);
    for (int mu = 0; mu < n_; ++mu)
        for (int nu = 0; nu < n_; ++nu)
            for (int rho = 0; rho < n_; ++rho)
                if (get(mu, nu, rho))
                    v.set((mu * n_ + nu) * n_ + rho);
    return v;
}

StructureConstants StructureConstants::from_packed(int n, const BitVec& bits)
{
    if (bits.size() != static_cast<std::size_t>(n) * n * n)
        throw DimensionMismatch("structure constants need n^3 bits");
    StructureConstants v(n);
    for (int mu = 0; mu < n; ++mu)
        for (int nu = 0; nu < n; ++nu)
            for (int rho = 0; rho < n; ++rho)
                if (bits.get((mu * n + nu) * n + rho))
                    v.set(mu, nu, rho);
    return v;
}

StructureConstants StructureConstants::from_hex(int n, std::string_view hex)
{
    return from_packed(n, BitVec::from_hex(static_cast<std::size_t>(n) * n * n, hex));
}

std::uint64_t StructureConstants::word() const
{
    if (n_ > 4)
        throw DimensionMismatch("word form needs n <= 4");
    std::uint64_t w = 0;
    for (int p = 0; p < n_ * n_; ++p)
        w |= static_cast<std::uint64_t>(prod_[p]) << (p * n_);
    return w;
}

StructureConstants StructureConstants::from_word(int n, std::uint64_t w)
{
    StructureConstants v(n);
    const std::uint64_t m = (std::uint64_t{1} << n) - 1;
    for (int p = 0; p < n * n; ++p)
        v.prod_[p] = static_cast<std::uint32_t>((w >> (p * n)) & m);
    return v;
}

bool lex_less(const StructureConstants& a, const StructureConstants& b)
{
    return lex_less(a.packed(), b.packed());
}

bool is_commutative(const StructureConstants& v)
{
    for (int mu = 0; mu < v.n(); ++mu)
        for (int nu = mu + 1; nu < v.n(); ++nu)
            if (v.product(mu, nu) != v.product(nu, mu))
                return false;
    return true;
}

bool is_associative(const StructureConstants& v)
{
    const int n = v.n();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (v.mul(v.product(a, b), 1u << c) != v.mul(1u << a, v.product(b, c)))
                    return false;
    return true;
}

std::optional<BitVec> find_unit(const StructureConstants& v)
{
    const int n = v.n();
    LinearSystem sys(n);
    for (int nu = 0; nu < n; ++nu)
        for (int rho = 0; rho < n; ++rho) {
            BitVec row(n);
            for (int mu = 0; mu < n; ++mu)
                if (v.get(mu, nu, rho))
                    row.set(mu);
            sys.add(std::move(row), nu == rho);
        }
    try {
        auto sp = solve_affine(sys);
        // A unit of a commutative algebra is unique; a positive-dimensional
        // solution set only occurs for the empty basis.
        if (sp.dim() != 0)
            return std::nullopt;
        return sp.particular;
    } catch (const Inconsistent&) {
        return std::nullopt;
    }
}

namespace {

// Associativity on the single-word form used by the enumerator.
bool associative_word(int n, std::uint64_t w)
{
    std::uint32_t prod[16];
    const std::uint64_t m = (std::uint64_t{1} << n) - 1;
    for (int p = 0; p < n * n; ++p)
        prod[p] = static_cast<std::uint32_t>((w >> (p * n)) & m);
    auto mul_basis = [&](std::uint32_t a, int c) {
        std::uint32_t out = 0;
        for (; a; a &= a - 1)
            out ^= prod[std::countr_zero(a) * n + c];
        return out;
    };
    // With commutativity, (ab)c = a(bc) = (bc)a; checking a <= c suffices.
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = a + 1; c < n; ++c)
                if (mul_basis(prod[a * n + b], c) != mul_basis(prod[b * n + c], a))
                    return false;
    return true;
}

std::uint64_t to_word(const BitVec& v)
{
    return v.words().empty() ? 0 : v.words()[0];
}

// Key whose numeric order is the lexicographic order of the bit string.
std::uint64_t lex_key(int bits, std::uint64_t w)
{
    std::uint64_t k = 0;
    for (int i = 0; i < bits; ++i)
        if ((w >> i) & 1)
            k |= std::uint64_t{1} << (bits - 1 - i);
    return k;
}

std::vector<std::uint64_t> scan_slice(int n, const AffineSpace& sp, const EnumerationOptions& opt)
{
    const std::size_t dim = sp.dim();
    if (dim >= 63 || (std::uint64_t{1} << dim) > opt.cap)
        throw SearchCapExceeded("algebra search space 2^" + std::to_string(dim) + " exceeds cap " +
                                std::to_string(opt.cap));
    std::vector<std::uint64_t> basis;
    for (const auto& b : sp.basis)
        basis.push_back(to_word(b));
    const std::uint64_t total = std::uint64_t{1} << dim;
    const int jobs = std::max(1, std::min<int>(opt.jobs, static_cast<int>(total)));

    auto run = [&](std::uint64_t lo, std::uint64_t hi, std::vector<std::uint64_t>& out) {
        // Gray-code walk: member(k) uses the basis vectors selected by k ^ (k >> 1).
        std::uint64_t g = lo ^ (lo >> 1);
        std::uint64_t w = to_word(sp.particular);
        for (std::size_t i = 0; i < dim; ++i)
            if ((g >> i) & 1)
                w ^= basis[i];
        for (std::uint64_t k = lo; k < hi; ++k) {
            if (associative_word(n, w))
                out.push_back(w);
            const std::uint64_t next = k + 1;
            if (next < hi)
                w ^= basis[std::countr_zero(next)];
        }
    };

    std::vector<std::vector<std::uint64_t>> parts(jobs);
    if (jobs == 1) {
        run(0, total, parts[0]);
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) {
            const std::uint64_t lo = total * j / jobs, hi = total * (j + 1) / jobs;
            pool.emplace_back(run, lo, hi, std::ref(parts[j]));
        }
        for (auto& t : pool)
            t.join();
    }
    std::vector<std::uint64_t> out;
    for (auto& p : parts)
        out.insert(out.end(), p.begin(), p.end());
    return out;
}

LinearSystem symmetric_system(int n)
{
    const int nv = n * n * n;
    LinearSystem sys(nv);
    for (int mu = 0; mu < n; ++mu)
        for (int nu = mu + 1; nu < n; ++nu)
            for (int rho = 0; rho < n; ++rho) {
                BitVec r(nv);
                r.set((mu * n + nu) * n + rho);
                r.set((nu * n + mu) * n + rho);
                sys.add(std::move(r), false);
            }
    return sys;
}

void add_unit_rows(int n, const BitVec& theta, LinearSystem& sys)
{
    const int nv = n * n * n;
    for (int nu = 0; nu < n; ++nu)
        for (int rho = 0; rho < n; ++rho) {
            BitVec r(nv);
            for (int mu = 0; mu < n; ++mu)
                if (theta.get(mu))
                    r.set((mu * n + nu) * n + rho);
            sys.add(std::move(r), nu == rho);
        }
}

std::vector<std::uint64_t> scan_theta(int n, const BitVec& theta, const EnumerationOptions& opt)
{
    if (theta.size() != static_cast<std::size_t>(n) || !theta.any())
        throw DimensionMismatch("unit vector must be nonzero of length n");
    LinearSystem sys = symmetric_system(n);
    add_unit_rows(n, theta, sys);
    return scan_slice(n, solve_affine(sys), opt);
}

}  // namespace

std::vector<StructureConstants> enumerate_algebras(int n, const EnumerationMode& mode,
                                                   const EnumerationOptions& opt)
{
    if (n < 1)
        throw DimensionMismatch("n must be positive");
    if (n > 4) {
        // The enumerator packs a tensor into one machine word.
        throw SearchCapExceeded("algebra enumeration supports n <= 4");
    }
    std::vector<std::uint64_t> words;
    using K = EnumerationMode::Kind;
    switch (mode.kind) {
    case K::All:
        words = scan_slice(n, solve_affine(symmetric_system(n)), opt);
        break;
    case K::Inner:
        words = scan_theta(n, mode.theta, opt);
        break;
    case K::InnerAny:
    case K::UnitalUpToIso:
        for (std::uint32_t t = 1; t < (1u << n); ++t) {
            BitVec theta(n);
            for (int i = 0; i < n; ++i)
                theta.set(i, (t >> i) & 1);
            auto part = scan_theta(n, theta, opt);
            words.insert(words.end(), part.begin(), part.end());
        }
        break;
    }
    const int bits = n * n * n;
    std::sort(words.begin(), words.end(),
              [bits](std::uint64_t a, std::uint64_t b) { return lex_key(bits, a) < lex_key(bits, b); });
    std::vector<StructureConstants> out;
    out.reserve(words.size());
    for (auto w : words)
        out.push_back(StructureConstants::from_word(n, w));
    if (mode.kind == K::UnitalUpToIso) {
        std::vector<StructureConstants> reps;
        for (const auto& o : orbits(out, n))
            reps.push_back(o.canonical);
        return reps;
    }
    return out;
}

StructureConstants act(const Matrix& g, const StructureConstants& v)
{
    const int n = v.n();
    if (g.rows() != static_cast<std::size_t>(n) || g.cols() != static_cast<std::size_t>(n))
        throw DimensionMismatch("act: matrix size");
    const Matrix ginv = mat_inverse(g);
    std::vector<std::uint32_t> rows(n), inv_rows(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (g.get(i, j))
                rows[i] |= 1u << j;
            if (ginv.get(i, j))
                inv_rows[i] |= 1u << j;
        }
    StructureConstants w(n);
    for (int mu = 0; mu < n; ++mu)
        for (int nu = mu; nu < n; ++nu) {
            const std::uint32_t in_x = v.mul(rows[mu], rows[nu]);
            std::uint32_t in_y = 0;
            for (std::uint32_t r = in_x; r; r &= r - 1)
                in_y ^= inv_rows[std::countr_zero(r)];
            w.set_product(mu, nu, in_y);
            if (nu != mu) {
                const std::uint32_t other_x = v.mul(rows[nu], rows[mu]);
                std::uint32_t other_y = 0;
                for (std::uint32_t r = other_x; r; r &= r - 1)
                    other_y ^= inv_rows[std::countr_zero(r)];
                w.set_product(nu, mu, other_y);
            }
        }
    return w;
}

std::vector<Relation> calculus_relations(const StructureConstants& v)
{
    std::vector<Relation> out;
    for (int rho = 0; rho < v.n(); ++rho)
        for (int nu = rho; nu < v.n(); ++nu)
            out.push_back({rho, nu, v.product(rho, nu)});
    return out;
}

std::string basis_name(int n, int i)
{
    static const char* small[] = {"e", "x", "y", "z"};
    if (n <= 4)
        return small[i];
    return "x" + std::to_string(i);
}

std::string render_forms(int n, std::uint32_t mask)
{
    if (!mask)
        return "0";
    std::string s;
    for (int i = 0; i < n; ++i)
        if ((mask >> i) & 1) {
            if (!s.empty())
                s += '+';
            s += "d" + basis_name(n, i);
        }
    return s;
}

std::string render_elements(int n, std::uint32_t mask)
{
    if (!mask)
        return "0";
    std::string s;
    for (int i = 0; i < n; ++i)
        if ((mask >> i) & 1) {
            if (!s.empty())
                s += '+';
            s += basis_name(n, i);
        }
    return s;
}

std::string render_relation(int n, const Relation& r)
{
    return "[d" + basis_name(n, r.form) + "," + basis_name(n, r.var) + "]=" + render_forms(n, r.rhs);
}

std::vector<std::string> render_relations(const StructureConstants& v)
{
    std::vector<std::string> out;
    for (const auto& r : calculus_relations(v))
        out.push_back(render_relation(v.n(), r));
    return out;
}

std::vector<std::string> render_products(const StructureConstants& v)
{
    std::vector<std::string> out;
    const int n = v.n();
    for (int mu = 0; mu < n; ++mu)
        for (int nu = mu; nu < n; ++nu)
            out.push_back(basis_name(n, mu) + "*" + basis_name(n, nu) + "=" +
                          render_elements(n, v.product(mu, nu)));
    return out;
}

namespace {

int parse_basis(int n, std::string_view s)
{
    for (int i = 0; i < n; ++i)
        if (s == basis_name(n, i))
            return i;
    throw ParseError("unknown basis element '" + std::string(s) + "'");
}

std::string strip(std::string_view s)
{
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c)))
            out.push_back(c);
    return out;
}

}  // namespace

StructureConstants parse_products(int n, const std::string& text, bool unit_first)
{
    StructureConstants v(n);
    if (unit_first)
        for (int nu = 0; nu < n; ++nu) {
            v.set_product(0, nu, 1u << nu);
            v.set_product(nu, 0, 1u << nu);
        }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) {
        const std::string s = strip(item);
        if (s.empty())
            continue;
        const auto star = s.find('*');
        const auto eq = s.find('=');
        if (star == std::string::npos || eq == std::string::npos || star > eq)
            throw ParseError("expected a*b=rhs, got '" + s + "'");
        const int a = parse_basis(n, s.substr(0, star));
        const int b = parse_basis(n, s.substr(star + 1, eq - star - 1));
        std::uint32_t mask = 0;
        const std::string rhs = s.substr(eq + 1);
        if (rhs != "0") {
            std::stringstream rs(rhs);
            std::string term;
            while (std::getline(rs, term, '+'))
                mask ^= 1u << parse_basis(n, term);
        }
        v.set_product(a, b, mask);
        v.set_product(b, a, mask);
    }
    return v;
}

}  // namespace f2geom
