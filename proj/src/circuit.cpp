#include "f2geom/circuit.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace f2geom {

std::size_t Netlist::count(Gate::Op op) const
{
    return static_cast<std::size_t>(
        std::count_if(gates.begin(), gates.end(), [op](const Gate& g) { return g.op == op; }));
}

void Netlist::validate() const
{
    std::set<std::string> driven(inputs.begin(), inputs.end());
    driven.insert(kConstZero);
    for (const auto& g : gates) {
        for (const auto* w : {&g.in1, &g.in2})
            if (!driven.count(*w))
                throw UndefinedWire("gate " + g.out + " reads undriven wire " + *w);
        if (!driven.insert(g.out).second)
            throw UndefinedWire("wire " + g.out + " driven twice");
    }
    for (const auto& o : outputs)
        if (!driven.count(o))
            throw UndefinedWire("output " + o + " is never driven");
}

std::string Netlist::text() const
{
    std::ostringstream os;
    for (const auto& i : inputs)
        os << "input " << i << '\n';
    for (const auto& o : outputs)
        os << "output " << o << '\n';
    for (const auto& g : gates)
        os << g.out << " = " << (g.op == Gate::Op::And ? "AND" : "XOR") << ' ' << g.in1 << ' ' << g.in2 << '\n';
    return os.str();
}

Netlist Netlist::parse(const std::string& text)
{
    Netlist nl;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;)
            tok.push_back(t);
        if (tok.empty())
            continue;
        if (tok.size() == 2 && tok[0] == "input")
            nl.inputs.push_back(tok[1]);
        else if (tok.size() == 2 && tok[0] == "output")
            nl.outputs.push_back(tok[1]);
        else if (tok.size() == 5 && tok[1] == "=" && (tok[2] == "AND" || tok[2] == "XOR"))
            nl.gates.push_back({tok[2] == "AND" ? Gate::Op::And : Gate::Op::Xor, tok[3], tok[4], tok[0]});
        else
            throw ParseError("netlist line " + std::to_string(lineno) + ": '" + line + "'");
    }
    nl.validate();
    return nl;
}

namespace {

std::string idx2(const char* prefix, int mu, int nu)
{
    return prefix + std::to_string(mu) + "_" + std::to_string(nu);
}

// Left-associated XOR chain over terms, ending in the wire named out.
void xor_chain(Netlist& nl, int rho, const std::vector<std::string>& terms, const std::string& out)
{
    if (terms.empty()) {
        nl.gates.push_back({Gate::Op::Xor, kConstZero, kConstZero, out});
        return;
    }
    if (terms.size() == 1) {
        nl.gates.push_back({Gate::Op::Xor, terms[0], kConstZero, out});
        return;
    }
    std::string acc = terms[0];
    for (std::size_t k = 1; k < terms.size(); ++k) {
        const std::string w = k + 1 == terms.size() ? out : "s" + std::to_string(rho) + "_" + std::to_string(k);
        nl.gates.push_back({Gate::Op::Xor, acc, terms[k], w});
        acc = w;
    }
}

}  // namespace

Netlist compile_bilinear(const StructureConstants& v)
{
    const int n = v.n();
    Netlist nl;
    for (int i = 0; i < n; ++i)
        nl.inputs.push_back("a" + std::to_string(i));
    for (int i = 0; i < n; ++i)
        nl.inputs.push_back("b" + std::to_string(i));
    for (int r = 0; r < n; ++r)
        nl.outputs.push_back("out" + std::to_string(r));
    for (int mu = 0; mu < n; ++mu)
        for (int nu = 0; nu < n; ++nu)
            if (v.product(mu, nu))
                nl.gates.push_back(
                    {Gate::Op::And, "a" + std::to_string(mu), "b" + std::to_string(nu), idx2("m", mu, nu)});
    for (int rho = 0; rho < n; ++rho) {
        std::vector<std::string> terms;
        for (int mu = 0; mu < n; ++mu)
            for (int nu = 0; nu < n; ++nu)
                if (v.get(mu, nu, rho))
                    terms.push_back(idx2("m", mu, nu));
        xor_chain(nl, rho, terms, "out" + std::to_string(rho));
    }
    return nl;
}

Netlist compile_linear(const StructureConstants& v)
{
    const int n = v.n();
    Netlist nl;
    for (int mu = 0; mu < n; ++mu)
        for (int nu = 0; nu < n; ++nu)
            nl.inputs.push_back(idx2("c", mu, nu));
    for (int r = 0; r < n; ++r)
        nl.outputs.push_back("out" + std::to_string(r));
    for (int rho = 0; rho < n; ++rho) {
        std::vector<std::string> terms;
        for (int mu = 0; mu < n; ++mu)
            for (int nu = 0; nu < n; ++nu)
                if (v.get(mu, nu, rho))
                    terms.push_back(idx2("c", mu, nu));
        xor_chain(nl, rho, terms, "out" + std::to_string(rho));
    }
    return nl;
}

Netlist compile_pi(int n)
{
    if (n < 1)
        throw DimensionMismatch("compile_pi needs n >= 1");
    Netlist nl;
    for (int i = 0; i < n; ++i)
        nl.inputs.push_back("a" + std::to_string(i));
    for (int i = 0; i < n; ++i)
        nl.inputs.push_back("b" + std::to_string(i));
    for (int mu = 0; mu < n; ++mu)
        for (int nu = 0; nu < n; ++nu) {
            nl.outputs.push_back(idx2("E", mu, nu));
            nl.gates.push_back({Gate::Op::And, "a" + std::to_string(mu), "b" + std::to_string(nu), idx2("E", mu, nu)});
        }
    return nl;
}

WireValues simulate(const Netlist& nl, const WireValues& inputs)
{
    WireValues w;
    w[kConstZero] = false;
    for (const auto& i : nl.inputs) {
        auto it = inputs.find(i);
        if (it == inputs.end())
            throw UndefinedWire("no value for input " + i);
        w[i] = it->second;
    }
    auto read = [&](const std::string& name) {
        auto it = w.find(name);
        if (it == w.end())
            throw UndefinedWire("wire " + name + " read before it is driven");
        return it->second;
    };
    for (const auto& g : nl.gates) {
        const bool a = read(g.in1), b = read(g.in2);
        w[g.out] = g.op == Gate::Op::And ? (a && b) : (a != b);
    }
    WireValues out;
    for (const auto& o : nl.outputs)
        out[o] = read(o);
    return out;
}

WireValues bilinear_inputs(int n, std::uint32_t a, std::uint32_t b)
{
    WireValues w;
    for (int i = 0; i < n; ++i) {
        w["a" + std::to_string(i)] = (a >> i) & 1;
        w["b" + std::to_string(i)] = (b >> i) & 1;
    }
    return w;
}

std::uint32_t read_outputs(int n, const WireValues& out)
{
    std::uint32_t r = 0;
    for (int i = 0; i < n; ++i)
        if (out.at("out" + std::to_string(i)))
            r |= 1u << i;
    return r;
}

WireValues pi_to_linear(const WireValues& pi_out)
{
    WireValues w;
    for (const auto& [name, val] : pi_out)
        if (!name.empty() && name[0] == 'E')
            w["c" + name.substr(1)] = val;
    return w;
}

}  // namespace f2geom
