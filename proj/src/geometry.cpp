#include "f2geom/geometry.hpp"

#include <algorithm>
#include <bit>
#include <thread>

namespace f2geom {

Tensor3::Tensor3(int n, BitVec bits) : n_(n), bits_(std::move(bits))
{
    if (bits_.size() != static_cast<std::size_t>(n) * n * n)
        throw DimensionMismatch("Tensor3 needs n^3 bits");
}

Sigma::Sigma(int n, BitVec bits) : n_(n), bits_(std::move(bits))
{
    if (bits_.size() != static_cast<std::size_t>(n) * n * n * n)
        throw DimensionMismatch("Sigma needs n^4 bits");
}

Sigma Sigma::flip(int n)
{
    Sigma s(n);
    for (int mu = 0; mu < n; ++mu)
        for (int nu = 0; nu < n; ++nu)
            s.set(mu, nu, nu, mu);
    return s;
}

Matrix Sigma::matrix() const
{
    const int n = n_;
    Matrix m(n * n, n * n);
    for (int mu = 0; mu < n; ++mu)
        for (int nu = 0; nu < n; ++nu)
            for (int w = 0; w < n; ++w)
                for (int s = 0; s < n; ++s)
                    if (get(mu, nu, w, s))
                        m.set(mu * n + nu, w * n + s);
    return m;
}

bool Sigma::invertible() const
{
    return mat_rank(matrix()) == static_cast<std::size_t>(n_) * n_;
}

bool connection_less(const Connection& a, const Connection& b)
{
    if (!(a.gamma.bits() == b.gamma.bits()))
        return lex_less(a.gamma.bits(), b.gamma.bits());
    return lex_less(a.sigma.bits(), b.sigma.bits());
}

std::size_t QlcSearch::nonzero_count() const
{
    return static_cast<std::size_t>(
        std::count_if(connections.begin(), connections.end(), [](const Connection& c) { return c.gamma.any(); }));
}

// ---------------------------------------------------------------- metrics

bool is_central(const StructureConstants& v, const Matrix& g)
{
    const int n = v.n();
    for (int rho = 0; rho < n; ++rho)
        for (int mu = 0; mu < n; ++mu)
            for (int nu = 0; nu < n; ++nu) {
                bool t = false;
                for (int l = 0; l < n; ++l)
                    t ^= g.get(l, nu) && v.get(l, rho, mu);
                for (int c = 0; c < n; ++c)
                    t ^= g.get(mu, c) && v.get(c, rho, nu);
                if (t)
                    return false;
            }
    return true;
}

bool is_metric(const StructureConstants& v, const Matrix& g)
{
    const auto n = static_cast<std::size_t>(v.n());
    return g.rows() == n && g.cols() == n && g.is_symmetric() && mat_rank(g) == n && is_central(v, g);
}

std::vector<Matrix> find_metrics(const StructureConstants& v)
{
    const int n = v.n();
    // Unknowns g_{ab}, a <= b.
    std::vector<std::pair<int, int>> vars;
    std::vector<std::vector<int>> var_of(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) {
            var_of[a][b] = var_of[b][a] = static_cast<int>(vars.size());
            vars.emplace_back(a, b);
        }
    LinearSystem sys(vars.size());
    for (int rho = 0; rho < n; ++rho)
        for (int mu = 0; mu < n; ++mu)
            for (int nu = 0; nu < n; ++nu) {
                BitVec r(vars.size());
                for (int l = 0; l < n; ++l)
                    if (v.get(l, rho, mu))
                        r.flip(var_of[l][nu]);
                for (int c = 0; c < n; ++c)
                    if (v.get(c, rho, nu))
                        r.flip(var_of[mu][c]);
                if (r.any())
                    sys.add(std::move(r), false);
            }
    const AffineSpace sp = solve_affine(sys);
    std::vector<Matrix> out;
    for (std::uint64_t k = 0; k < (std::uint64_t{1} << sp.dim()); ++k) {
        const BitVec x = sp.member(k);
        Matrix g(n, n);
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (x.get(i)) {
                g.set(vars[i].first, vars[i].second);
                g.set(vars[i].second, vars[i].first);
            }
        if (mat_rank(g) == static_cast<std::size_t>(n))
            out.push_back(std::move(g));
    }
    std::sort(out.begin(), out.end(), [](const Matrix& a, const Matrix& b) { return lex_less(a, b); });
    return out;
}

// ---------------------------------------------------------------- alpha

AffineSpace alpha_space(const StructureConstants& v)
{
    const int n = v.n();
    const std::size_t nv = static_cast<std::size_t>(n) * n * n;
    Tensor3 shape(n);
    LinearSystem sys(nv);
    for (int rho = 0; rho < n; ++rho)
        for (int c = 0; c < n; ++c)
            for (int d = c + 1; d < n; ++d) {
                BitVec r(nv);
                r.set(shape.idx(rho, c, d));
                r.set(shape.idx(rho, d, c));
                sys.add(std::move(r), false);
            }
    // alpha(dx^rho x^nu) = alpha(dx^rho) x^nu on the dx^c (x) dx^d component.
    for (int rho = 0; rho < n; ++rho)
        for (int nu = 0; nu < n; ++nu)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    BitVec r(nv);
                    for (int mu = 0; mu < n; ++mu)
                        if (v.get(rho, nu, mu))
                            r.flip(shape.idx(mu, c, d));
                    for (int l = 0; l < n; ++l)
                        if (v.get(l, nu, c))
                            r.flip(shape.idx(rho, l, d));
                    for (int s = 0; s < n; ++s)
                        if (v.get(s, nu, d))
                            r.flip(shape.idx(rho, c, s));
                    if (r.any())
                        sys.add(std::move(r), false);
                }
    return solve_affine(sys);
}

std::vector<Tensor3> find_alphas(const StructureConstants& v, std::uint64_t cap)
{
    const AffineSpace sp = alpha_space(v);
    if (sp.dim() >= 63 || (std::uint64_t{1} << sp.dim()) > cap)
        throw SearchCapExceeded("alpha space 2^" + std::to_string(sp.dim()) + " exceeds cap");
    std::vector<Tensor3> out;
    for (std::uint64_t k = 0; k < (std::uint64_t{1} << sp.dim()); ++k)
        out.emplace_back(v.n(), sp.member(k));
    std::sort(out.begin(), out.end(), [](const Tensor3& a, const Tensor3& b) { return lex_less(a.bits(), b.bits()); });
    return out;
}

// ---------------------------------------------------------------- sigma

namespace {

// Calls emit(list of sigma bit indices) once per bimodule-law equation.
template <class F>
void for_each_bimodule_row(const StructureConstants& v, F&& emit)
{
    const int n = v.n();
    Sigma shape(n);
    std::vector<std::size_t> terms;
    for (int mu = 0; mu < n; ++mu)
        for (int nu = 0; nu < n; ++nu)
            for (int ga = 0; ga < n; ++ga)
                for (int om = 0; om < n; ++om)
                    for (int s = 0; s < n; ++s) {
                        terms.clear();
                        for (int a = 0; a < n; ++a)
                            if (v.get(mu, ga, a))
                                terms.push_back(shape.idx(a, nu, om, s));
                        for (int b = 0; b < n; ++b)
                            if (v.get(nu, ga, b))
                                terms.push_back(shape.idx(mu, b, om, s));
                        for (int l = 0; l < n; ++l)
                            if (v.get(l, ga, om))
                                terms.push_back(shape.idx(mu, nu, l, s));
                        for (int r = 0; r < n; ++r)
                            if (v.get(r, ga, s))
                                terms.push_back(shape.idx(mu, nu, om, r));
                        emit(terms);
                    }
}

// Calls emit(i, j, rhs) for sigma^{mu nu}_{rl} + sigma^{mu nu}_{lr} = rhs, r < l.
template <class F>
void for_each_wedge_row(int n, F&& emit)
{
    Sigma shape(n);
    for (int mu = 0; mu < n; ++mu)
        for (int nu = 0; nu < n; ++nu)
            for (int r = 0; r < n; ++r)
                for (int l = r + 1; l < n; ++l) {
                    const bool rhs = mu != nu && ((mu == r && nu == l) || (mu == l && nu == r));
                    emit(shape.idx(mu, nu, r, l), shape.idx(mu, nu, l, r), rhs);
                }
}

}  // namespace

LinearSystem sigma_system(const StructureConstants& v)
{
    const int n = v.n();
    const std::size_t nv = static_cast<std::size_t>(n) * n * n * n;
    LinearSystem sys(nv);
    for_each_bimodule_row(v, [&](const std::vector<std::size_t>& terms) {
        BitVec r(nv);
        for (auto t : terms)
            r.flip(t);
        if (r.any())
            sys.add(std::move(r), false);
    });
    for_each_wedge_row(n, [&](std::size_t i, std::size_t j, bool rhs) {
        BitVec r(nv);
        r.set(i);
        r.set(j);
        sys.add(std::move(r), rhs);
    });
    return sys;
}

bool satisfies_bimodule_law(const StructureConstants& v, const Sigma& s)
{
    bool ok = true;
    for_each_bimodule_row(v, [&](const std::vector<std::size_t>& terms) {
        bool t = false;
        for (auto i : terms)
            t ^= s.bits().get(i);
        if (t)
            ok = false;
    });
    return ok;
}

bool wedge_compatible(const Sigma& s)
{
    bool ok = true;
    for_each_wedge_row(s.n(), [&](std::size_t i, std::size_t j, bool rhs) {
        if ((s.bits().get(i) ^ s.bits().get(j)) != rhs)
            ok = false;
    });
    return ok;
}

Tensor3 gamma_from_inner(const BitVec& theta, const Sigma& s, const Tensor3& alpha)
{
    const int n = s.n();
    Tensor3 g = alpha;
    for (int mu = 0; mu < n; ++mu)
        for (int r = 0; r < n; ++r)
            for (int l = 0; l < n; ++l) {
                bool t = theta.get(r) && mu == l;
                for (int nu = 0; nu < n; ++nu)
                    t ^= theta.get(nu) && s.get(mu, nu, r, l);
                if (t)
                    g.flip(mu, r, l);
            }
    return g;
}

bool metric_compatible(const Matrix& g, const Tensor3& gamma, const Sigma& s)
{
    const int n = gamma.n();
    for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
            for (int b = 0; b < n; ++b) {
                bool t = false;
                for (int mu = 0; mu < n; ++mu)
                    t ^= g.get(mu, b) && gamma.get(mu, c, d);
                for (int mu = 0; mu < n; ++mu)
                    for (int a = 0; a < n; ++a) {
                        if (!s.get(mu, a, c, d))
                            continue;
                        for (int nu = 0; nu < n; ++nu)
                            t ^= g.get(mu, nu) && gamma.get(nu, a, b);
                    }
                if (t)
                    return false;
            }
    return true;
}

namespace {

// Coefficient of dx^be (x) dx^ga (x) dx^rh in sigma_12 sigma_23 (g (x) w)
// for w = sum_a w_a dx^a.
bool double_braid(const Matrix& g, const Sigma& s, const BitVec& w, int be, int ga, int rh)
{
    const int n = s.n();
    bool t = false;
    for (int al = 0; al < n; ++al) {
        if (!w.get(al))
            continue;
        for (int mu = 0; mu < n; ++mu)
            for (int nu = 0; nu < n; ++nu) {
                if (!g.get(mu, nu))
                    continue;
                for (int la = 0; la < n; ++la)
                    t ^= s.get(nu, al, la, rh) && s.get(mu, la, be, ga);
            }
    }
    return t;
}

}  // namespace

bool sigma_preserves_metric_at(const Matrix& g, const Sigma& s, const BitVec& theta)
{
    const int n = s.n();
    for (int be = 0; be < n; ++be)
        for (int ga = 0; ga < n; ++ga)
            for (int rh = 0; rh < n; ++rh) {
                const bool lhs = theta.get(be) && g.get(ga, rh);
                if (lhs != double_braid(g, s, theta, be, ga, rh))
                    return false;
            }
    return true;
}

bool sigma_preserves_metric(const Matrix& g, const Sigma& s)
{
    const int n = s.n();
    for (int al = 0; al < n; ++al) {
        BitVec w(n);
        w.set(al);
        if (!sigma_preserves_metric_at(g, s, w))
            return false;
    }
    return true;
}

// ---------------------------------------------------------------- search

namespace {

struct Partial {
    std::vector<Connection> found;
    std::uint64_t candidates = 0, mm_acc = 0, mm_rej = 0, mm_inv = 0;
};

template <class Body>
void split_range(std::uint64_t total, int jobs, std::vector<Partial>& parts, Body&& body)
{
    jobs = std::max(1, std::min<int>(jobs, static_cast<int>(std::min<std::uint64_t>(total, 64))));
    parts.assign(jobs, {});
    if (jobs == 1) {
        body(0, total, parts[0]);
        return;
    }
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j)
        pool.emplace_back([&, j] { body(total * j / jobs, total * (j + 1) / jobs, parts[j]); });
    for (auto& t : pool)
        t.join();
}

QlcSearch merge(std::vector<Partial>& parts)
{
    QlcSearch out;
    for (auto& p : parts) {
        out.candidates += p.candidates;
        out.crosscheck_mismatch_accepted += p.mm_acc;
        out.crosscheck_mismatch_rejected += p.mm_rej;
        out.crosscheck_mismatch_invertible += p.mm_inv;
        for (auto& c : p.found)
            out.connections.push_back(std::move(c));
    }
    std::sort(out.connections.begin(), out.connections.end(), connection_less);
    out.connections.erase(std::unique(out.connections.begin(), out.connections.end(),
                                      [](const Connection& a, const Connection& b) {
                                          return a.gamma == b.gamma && a.sigma == b.sigma;
                                      }),
                          out.connections.end());
    return out;
}

void check_cap(std::size_t dim, std::uint64_t mult, std::uint64_t cap, const char* what)
{
    if (dim >= 63 || (std::uint64_t{1} << dim) > cap / std::max<std::uint64_t>(mult, 1))
        throw SearchCapExceeded(std::string(what) + " space 2^" + std::to_string(dim) + " exceeds cap " +
                                std::to_string(cap));
}

void classify(const Matrix& g, const Connection& c, Partial& p, bool primary)
{
    ++p.candidates;
    const bool cross = sigma_preserves_metric(g, c.sigma);
    const bool inv = c.sigma.invertible();
    if (primary != cross) {
        (primary ? p.mm_acc : p.mm_rej) += 1;
        if (inv)
            ++p.mm_inv;
    }
    if (primary && inv)
        p.found.push_back(c);
}

}  // namespace

QlcSearch find_qlcs(const StructureConstants& v, const Matrix& g, const QlcOptions& opt)
{
    const int n = v.n();
    const auto theta = find_unit(v);
    if (!theta)
        throw InvalidGeometry("calculus is not inner");
    if (!is_metric(v, g))
        throw InvalidGeometry("not a metric for this calculus: " + g.str());
    const auto alphas = find_alphas(v);
    AffineSpace sp;
    try {
        sp = solve_affine(sigma_system(v));
    } catch (const Inconsistent&) {
        QlcSearch empty;
        empty.alpha_count = alphas.size();
        return empty;
    }
    check_cap(sp.dim(), alphas.size(), opt.cap, "sigma");
    const std::uint64_t total = std::uint64_t{1} << sp.dim();

    std::vector<Partial> parts;
    split_range(total, opt.jobs, parts, [&](std::uint64_t lo, std::uint64_t hi, Partial& p) {
        BitVec s = sp.member(lo ^ (lo >> 1));
        for (std::uint64_t k = lo; k < hi; ++k) {
            const Sigma sig(n, s);
            for (const auto& a : alphas) {
                Connection c{gamma_from_inner(*theta, sig, a), sig, a};
                classify(g, c, p, metric_compatible(g, c.gamma, c.sigma));
            }
            if (k + 1 < hi)
                s ^= sp.basis[std::countr_zero(k + 1)];
        }
    });
    QlcSearch out = merge(parts);
    out.sigma_dim = sp.dim();
    out.alpha_count = alphas.size();
    return out;
}

namespace {

// Each sigma bit as an affine function of the gamma bits.
struct AffineForm {
    BitVec mask;
    bool constant = false;
};

std::vector<AffineForm> sigma_forms(const StructureConstants& v)
{
    const int n = v.n();
    const std::size_t ng = static_cast<std::size_t>(n) * n * n;
    Tensor3 gs(n);
    Sigma ss(n);
    std::vector<AffineForm> forms(static_cast<std::size_t>(n) * n * n * n);
    for (int mu = 0; mu < n; ++mu)
        for (int ga = 0; ga < n; ++ga)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    AffineForm f{BitVec(ng), ga == c && mu == d};
                    for (int r = 0; r < n; ++r)
                        if (v.get(mu, ga, r))
                            f.mask.flip(gs.idx(r, c, d));
                    for (int a = 0; a < n; ++a)
                        if (v.get(a, ga, c))
                            f.mask.flip(gs.idx(mu, a, d));
                    for (int b = 0; b < n; ++b)
                        if (v.get(b, ga, d))
                            f.mask.flip(gs.idx(mu, c, b));
                    forms[ss.idx(mu, ga, c, d)] = std::move(f);
                }
    return forms;
}

}  // namespace

Sigma sigma_from_gamma(const StructureConstants& v, const Tensor3& gamma)
{
    const int n = v.n();
    Sigma s(n);
    const auto forms = sigma_forms(v);
    for (std::size_t i = 0; i < forms.size(); ++i)
        if (forms[i].mask.dot(gamma.bits()) ^ forms[i].constant)
            s.set(static_cast<int>(i / (n * n * n)), static_cast<int>(i / (n * n) % n), static_cast<int>(i / n % n),
                  static_cast<int>(i % n));
    return s;
}

QlcSearch find_bimodule_qlcs(const StructureConstants& v, const Matrix& g, const QlcOptions& opt)
{
    const int n = v.n();
    if (!is_metric(v, g))
        throw InvalidGeometry("not a metric for this calculus: " + g.str());
    const std::size_t ng = static_cast<std::size_t>(n) * n * n;
    const auto forms = sigma_forms(v);
    Tensor3 gs(n);
    LinearSystem sys(ng);
    for (int mu = 0; mu < n; ++mu)
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                BitVec r(ng);
                r.set(gs.idx(mu, a, b));
                r.set(gs.idx(mu, b, a));
                sys.add(std::move(r), false);
            }
    auto add_combination = [&](const std::vector<std::size_t>& terms, bool rhs) {
        BitVec r(ng);
        bool k = rhs;
        for (auto t : terms) {
            r ^= forms[t].mask;
            k ^= forms[t].constant;
        }
        if (r.any() || k)
            sys.add(std::move(r), k);
    };
    for_each_bimodule_row(v, [&](const std::vector<std::size_t>& terms) { add_combination(terms, false); });
    for_each_wedge_row(n, [&](std::size_t i, std::size_t j, bool rhs) { add_combination({i, j}, rhs); });

    AffineSpace sp;
    try {
        sp = solve_affine(sys);
    } catch (const Inconsistent&) {
        return {};
    }
    check_cap(sp.dim(), 1, opt.cap, "gamma");
    const std::uint64_t total = std::uint64_t{1} << sp.dim();
    std::vector<Partial> parts;
    split_range(total, opt.jobs, parts, [&](std::uint64_t lo, std::uint64_t hi, Partial& p) {
        BitVec x = sp.member(lo ^ (lo >> 1));
        for (std::uint64_t k = lo; k < hi; ++k) {
            Tensor3 gamma(n, x);
            Sigma sig = sigma_from_gamma(v, gamma);
            Connection c{std::move(gamma), std::move(sig), Tensor3(n)};
            ++p.candidates;
            if (metric_compatible(g, c.gamma, c.sigma) && c.sigma.invertible())
                p.found.push_back(std::move(c));
            if (k + 1 < hi)
                x ^= sp.basis[std::countr_zero(k + 1)];
        }
    });
    QlcSearch out = merge(parts);
    out.sigma_dim = sp.dim();
    out.alpha_count = 1;
    return out;
}

bool is_qlc(const StructureConstants& v, const Matrix& g, const Connection& c)
{
    const int n = v.n();
    if (c.gamma.n() != n || c.sigma.n() != n)
        return false;
    if (!is_metric(v, g) || !torsion_free(c.gamma) || !wedge_compatible(c.sigma) ||
        !satisfies_bimodule_law(v, c.sigma) || !metric_compatible(g, c.gamma, c.sigma) || !c.sigma.invertible())
        return false;
    // The braiding has to be the one the right Leibniz rule induces from gamma.
    return sigma_from_gamma(v, c.gamma) == c.sigma;
}

Sigma reconstruct_sigma(const StructureConstants& v, const Tensor3& gamma)
{
    const int n = v.n();
    const auto theta = find_unit(v);
    if (!theta)
        throw InvalidGeometry("calculus is not inner");
    const std::size_t nv = static_cast<std::size_t>(n) * n * n * n;
    // Only the bimodule law and the theta rows; torsion is not imposed here.
    LinearSystem core(nv);
    for_each_bimodule_row(v, [&](const std::vector<std::size_t>& terms) {
        BitVec r(nv);
        for (auto t : terms)
            r.flip(t);
        if (r.any())
            core.add(std::move(r), false);
    });
    Sigma shape(n);
    for (int mu = 0; mu < n; ++mu)
        for (int r = 0; r < n; ++r)
            for (int l = 0; l < n; ++l) {
                BitVec row(nv);
                for (int nu = 0; nu < n; ++nu)
                    if (theta->get(nu))
                        row.set(shape.idx(mu, nu, r, l));
                core.add(std::move(row), (theta->get(r) && mu == l) ^ gamma.get(mu, r, l));
            }
    const AffineSpace sp = solve_affine(core);
    if (sp.dim() != 0)
        throw Inconsistent("sigma is not determined by gamma (" + std::to_string(sp.dim()) + " free bits)");
    return Sigma(n, sp.particular);
}

// ---------------------------------------------------------------- forms

int pair_count(int n)
{
    return n * (n - 1) / 2;
}

int pair_index(int n, int a, int c)
{
    if (a > c)
        std::swap(a, c);
    // Pairs (0,1), (0,2), ..., (1,2), ...
    return a * n - a * (a + 1) / 2 + (c - a - 1);
}

BitVec wedge(const Matrix& t)
{
    const int n = static_cast<int>(t.rows());
    BitVec out(pair_count(n));
    for (int a = 0; a < n; ++a)
        for (int c = a + 1; c < n; ++c)
            if (t.get(a, c) ^ t.get(c, a))
                out.set(pair_index(n, a, c));
    return out;
}

std::vector<BitVec> torsion(const Tensor3& gamma)
{
    const int n = gamma.n();
    std::vector<BitVec> out;
    for (int mu = 0; mu < n; ++mu) {
        Matrix t(n, n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                t.set(a, b, gamma.get(mu, a, b));
        out.push_back(wedge(t));
    }
    return out;
}

bool torsion_free(const Tensor3& gamma)
{
    for (const auto& t : torsion(gamma))
        if (t.any())
            return false;
    return true;
}

std::vector<BitVec> curvature(const Tensor3& gamma)
{
    const int n = gamma.n();
    std::vector<BitVec> out;
    for (int mu = 0; mu < n; ++mu) {
        BitVec r(static_cast<std::size_t>(pair_count(n)) * n);
        for (int a = 0; a < n; ++a)
            for (int c = a + 1; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    bool t = false;
                    for (int b = 0; b < n; ++b)
                        t ^= (gamma.get(mu, a, b) && gamma.get(b, c, d)) ^ (gamma.get(mu, c, b) && gamma.get(b, a, d));
                    if (t)
                        r.set(static_cast<std::size_t>(pair_index(n, a, c)) * n + d);
                }
        out.push_back(std::move(r));
    }
    return out;
}

bool is_flat(const Tensor3& gamma)
{
    for (const auto& r : curvature(gamma))
        if (r.any())
            return false;
    return true;
}

std::string render_gamma(const Tensor3& gamma, int mu)
{
    const int n = gamma.n();
    std::string s;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (gamma.get(mu, a, b)) {
                if (!s.empty())
                    s += '+';
                s += "d" + basis_name(n, a) + "*d" + basis_name(n, b);
            }
    return s.empty() ? "0" : s;
}

std::string render_curvature(int n, const BitVec& component)
{
    std::string s;
    for (int a = 0; a < n; ++a)
        for (int c = a + 1; c < n; ++c)
            for (int d = 0; d < n; ++d)
                if (component.get(static_cast<std::size_t>(pair_index(n, a, c)) * n + d)) {
                    if (!s.empty())
                        s += '+';
                    s += "d" + basis_name(n, a) + "^d" + basis_name(n, c) + "*d" + basis_name(n, d);
                }
    return s.empty() ? "0" : s;
}

std::string render_metric(const Matrix& g)
{
    const int n = static_cast<int>(g.rows());
    std::string s;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (g.get(a, b)) {
                if (!s.empty())
                    s += '+';
                s += "d" + basis_name(n, a) + "*d" + basis_name(n, b);
            }
    return s.empty() ? "0" : s;
}

}  // namespace f2geom
