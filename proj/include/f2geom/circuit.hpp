#pragma once

#include <map>
#include <string>
#include <vector>

#include "f2geom/algebra.hpp"

namespace f2geom {

struct Gate {
    enum class Op { And, Xor };
    Op op;
    std::string in1, in2, out;
    bool operator==(const Gate& o) const = default;
};

// "const0" is a reserved wire that always carries 0.
inline constexpr const char* kConstZero = "const0";

struct Netlist {
    std::vector<std::string> inputs;
    std::vector<std::string> outputs;
    std::vector<Gate> gates;  // topological order

    std::size_t count(Gate::Op op) const;
    // Throws UndefinedWire if a gate reads a wire not yet driven or an
    // output is never driven.
    void validate() const;
    std::string text() const;
    static Netlist parse(const std::string& text);
    bool operator==(const Netlist& o) const = default;
};

// Inputs a0.., b0..; out<rho> = XOR over V^{mu nu}_rho = 1 of AND(a_mu, b_nu).
Netlist compile_bilinear(const StructureConstants& v);
// Inputs c<mu>_<nu>; out<rho> = XOR over V^{mu nu}_rho = 1 of c<mu>_<nu>.
Netlist compile_linear(const StructureConstants& v);
// Inputs a0.., b0..; outputs E<mu>_<nu> = AND(a_mu, b_nu).
Netlist compile_pi(int n);

using WireValues = std::map<std::string, bool>;
// Throws UndefinedWire when an input is missing from the assignment.
WireValues simulate(const Netlist& nl, const WireValues& inputs);

// Helpers for the standard wire names.
WireValues bilinear_inputs(int n, std::uint32_t a, std::uint32_t b);
std::uint32_t read_outputs(int n, const WireValues& out);
// Renames E<mu>_<nu> outputs to c<mu>_<nu> inputs.
WireValues pi_to_linear(const WireValues& pi_out);

}  // namespace f2geom
