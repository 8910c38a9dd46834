#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "f2geom/algebra.hpp"
#include "f2geom/geometry.hpp"

namespace f2geom {

using Monomial = std::vector<std::uint16_t>;  // exponent per variable

// Element of F_2[x1..xn] in the commuting coordinates: a set of monomials.
class Polynomial {
public:
    static constexpr int kDefaultDegreeCap = 16;

    Polynomial() = default;
    explicit Polynomial(int nvars) : n_(nvars) {}

    static Polynomial one(int nvars);
    static Polynomial variable(int nvars, int i);
    // Grammar in the README; variables are x1..xn. Throws ParseError.
    static Polynomial parse(int nvars, const std::string& text);

    int nvars() const { return n_; }
    const std::set<Monomial>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void toggle(const Monomial& m);

    Polynomial& operator+=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    bool operator==(const Polynomial& o) const = default;

    // Substitutes x_i -> x_i + 1.
    Polynomial shifted(int i) const;
    std::string str() const;

    // Largest exponent allowed per variable in products; above it throws
    // SearchCapExceeded.
    static int degree_cap;

private:
    int n_ = 0;
    std::set<Monomial> terms_;
};

// sum_mu a_mu dx^mu with every coefficient to the left.
struct OneForm {
    std::vector<Polynomial> coeff;

    explicit OneForm(int n = 0, int nvars = 0) : coeff(n, Polynomial(nvars)) {}
    bool operator==(const OneForm& o) const = default;
    OneForm& operator+=(const OneForm& o);
    // Left multiplication by a function.
    OneForm left(const Polynomial& f) const;
    // Right multiplication by a function, re-normalised with the calculus.
    OneForm right(const Polynomial& f, const StructureConstants& v) const;
};

OneForm differential(const Polynomial& f, const StructureConstants& v);
// Left-normal coefficient of dx^mu in df.
Polynomial partial(const Polynomial& f, int mu, const StructureConstants& v);
// ( , ) nabla d f. Throws InvalidGeometry unless c is a Levi-Civita connection
// for the metric g on the calculus v.
Polynomial laplacian(const Polynomial& f, const StructureConstants& v, const Matrix& g, const Connection& c);

}  // namespace f2geom
