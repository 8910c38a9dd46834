#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "f2geom/gf2.hpp"

namespace f2geom {

// Products of basis elements as bitmasks over the basis: prod(mu, nu) has bit
// rho set iff V^{mu nu}_rho = 1. The packed form is n^3 bits, bit index
// (mu*n + nu)*n + rho.
class StructureConstants {
public:
    StructureConstants() = default;
    explicit StructureConstants(int n) : n_(n), prod_(static_cast<std::size_t>(n) * n, 0) {}

    int n() const { return n_; }
    bool get(int mu, int nu, int rho) const { return (prod_[mu * n_ + nu] >> rho) & 1u; }
    void set(int mu, int nu, int rho, bool v = true)
    {
        const std::uint32_t m = 1u << rho;
        if (v)
            prod_[mu * n_ + nu] |= m;
        else
            prod_[mu * n_ + nu] &= ~m;
    }
    std::uint32_t product(int mu, int nu) const { return prod_[mu * n_ + nu]; }
    void set_product(int mu, int nu, std::uint32_t mask) { prod_[mu * n_ + nu] = mask; }
    // Product of two general elements given as coefficient masks.
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;

    bool operator==(const StructureConstants& o) const = default;

    BitVec packed() const;
    static StructureConstants from_packed(int n, const BitVec& bits);
    std::string hex() const { return packed().hex(); }
    static StructureConstants from_hex(int n, std::string_view hex);

    // Valid only for n <= 4: the packed bits in one word, bit i at position i.
    std::uint64_t word() const;
    static StructureConstants from_word(int n, std::uint64_t w);

private:
    int n_ = 0;
    std::vector<std::uint32_t> prod_;
};

// Lexicographic order of the packed bit strings.
bool lex_less(const StructureConstants& a, const StructureConstants& b);

bool is_commutative(const StructureConstants& v);
bool is_associative(const StructureConstants& v);
// theta with sum_mu theta_mu V^{mu nu}_rho = delta^nu_rho, if any.
std::optional<BitVec> find_unit(const StructureConstants& v);

struct EnumerationMode {
    enum class Kind { All, Inner, InnerAny, UnitalUpToIso };
    Kind kind = Kind::All;
    BitVec theta;  // used by Inner

    static EnumerationMode all() { return {Kind::All, {}}; }
    static EnumerationMode inner(BitVec theta) { return {Kind::Inner, std::move(theta)}; }
    static EnumerationMode inner_any() { return {Kind::InnerAny, {}}; }
    static EnumerationMode unital_up_to_iso() { return {Kind::UnitalUpToIso, {}}; }
};

struct EnumerationOptions {
    // Largest number of candidates scanned per affine slice.
    std::uint64_t cap = std::uint64_t{1} << 26;
    int jobs = 1;
};

// Commutative associative tensors matching the mode, ascending in packed
// lexicographic order. Throws SearchCapExceeded.
std::vector<StructureConstants> enumerate_algebras(int n, const EnumerationMode& mode,
                                                   const EnumerationOptions& opt = {});

// Structure constants in the coordinates y = g x.
StructureConstants act(const Matrix& g, const StructureConstants& v);

struct Relation {
    int form;  // rho in [dx^rho, x^nu]
    int var;   // nu
    std::uint32_t rhs;  // mask over dx^mu
};

// Every commutator [dx^rho, x^nu] for rho <= nu (the calculus is symmetric).
std::vector<Relation> calculus_relations(const StructureConstants& v);

// Display name of basis index i: e, x, y, z for n <= 4, else x0, x1, ...
std::string basis_name(int n, int i);
// "de+dx", or "0" for the empty mask.
std::string render_forms(int n, std::uint32_t mask);
// "e+x", or "0".
std::string render_elements(int n, std::uint32_t mask);
std::string render_relation(int n, const Relation& r);
std::vector<std::string> render_relations(const StructureConstants& v);
// Products x_mu o x_nu for mu <= nu, e.g. "x*y=e+x".
std::vector<std::string> render_products(const StructureConstants& v);

// Parses "x*x=e+x; x*y=0" style product lists in the display basis. When
// unit_first is set, index 0 is made the unit before applying the list.
StructureConstants parse_products(int n, const std::string& text, bool unit_first);

}  // namespace f2geom
