#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "f2geom/circuit.hpp"
#include "f2geom/constructions.hpp"
#include "f2geom/field.hpp"
#include "f2geom/labels.hpp"
#include "f2geom/report.hpp"

#ifndef F2GEOM_DATA_DIR
#define F2GEOM_DATA_DIR "data"
#endif

using namespace f2geom;

namespace {

enum Exit { kOk = 0, kMismatch = 1, kCap = 2, kBadInput = 3 };

struct Config {
    int n = 2;
    std::vector<std::string> mode{"inner"};
    std::string label;
    std::string family;
    int family_param = 1;
    std::string format = "text";
    std::string out;
    int jobs = 1;
    int cap_sigma = 24;
    bool unsafe_large = false;
    std::string heisenberg;
};

struct BadInput : Error {
    using Error::Error;
};

void emit(const Config& cfg, const std::string& text)
{
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f)
        throw BadInput("cannot write " + cfg.out);
    f << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

RunOptions run_options(const Config& cfg)
{
    if (cfg.jobs < 1)
        throw BadInput("--jobs must be positive");
    if (cfg.cap_sigma < 1 || cfg.cap_sigma > 62)
        throw BadInput("--cap-sigma must be in 1..62");
    RunOptions o;
    o.enumeration.jobs = cfg.jobs;
    o.qlc.jobs = cfg.jobs;
    o.qlc.cap = std::uint64_t{1} << cfg.cap_sigma;
    return o;
}

void check_n(const Config& cfg)
{
    if (cfg.n < 1 || (cfg.n > 4 && !cfg.unsafe_large))
        throw BadInput("--n must be in 1..4 (use --unsafe-large beyond)");
}

BitVec parse_theta(int n, const std::string& s)
{
    if (static_cast<int>(s.size()) != n || s.find_first_not_of("01") != std::string::npos)
        throw BadInput("theta must be a string of " + std::to_string(n) + " bits, index 0 first");
    BitVec t(n);
    for (int i = 0; i < n; ++i)
        t.set(i, s[i] == '1');
    return t;
}

EnumerationMode parse_mode(const Config& cfg)
{
    const auto& m = cfg.mode;
    if (m.empty())
        throw BadInput("--mode needs a value");
    if (m[0] == "all" && m.size() == 1)
        return EnumerationMode::all();
    if (m[0] == "inner" && m.size() == 1)
        return EnumerationMode::inner_any();
    if (m[0] == "unital-iso" && m.size() == 1)
        return EnumerationMode::unital_up_to_iso();
    if (m[0] == "inner-theta" && m.size() == 2)
        return EnumerationMode::inner(parse_theta(cfg.n, m[1]));
    throw BadInput("unknown --mode; expected all, inner, inner-theta <bits> or unital-iso");
}

// The calculus named by --label or --family.
std::pair<StructureConstants, std::string> selected_calculus(const Config& cfg)
{
    if (!cfg.family.empty()) {
        if (cfg.family == "functions")
            return {functions_algebra(cfg.n), "functions(" + std::to_string(cfg.n) + ")"};
        if (cfg.family == "cyclic")
            return {cyclic_algebra(cfg.n), "cyclic(" + std::to_string(cfg.n) + ")"};
        if (cfg.family == "field-extension")
            return {field_extension_algebra(cfg.family_param),
                    "field-extension(" + std::to_string(cfg.family_param) + ")"};
        throw BadInput("unknown --family; expected functions, cyclic or field-extension");
    }
    if (cfg.label.empty())
        throw BadInput("--label or --family is required");
    return {label_rep(cfg.n, cfg.label), cfg.label};
}

std::string csv_join(const std::vector<std::string>& v, char sep = ';')
{
    std::string s;
    for (const auto& x : v) {
        if (!s.empty())
            s += sep;
        s += x;
    }
    return s;
}

std::vector<std::string> strings(const json& a)
{
    std::vector<std::string> v;
    for (const auto& e : a)
        v.push_back(e.get<std::string>());
    return v;
}

int cmd_enumerate(const Config& cfg)
{
    check_n(cfg);
    const auto mode = parse_mode(cfg);
    const auto opt = run_options(cfg);
    const auto sols = enumerate_algebras(cfg.n, mode, opt.enumeration);
    json j = enumerate_report(cfg.n, mode, sols);
    std::size_t classes = sols.size();
    if (mode.kind != EnumerationMode::Kind::UnitalUpToIso)
        classes = orbits(sols, cfg.n, cfg.jobs).size();
    j["classes_up_to_isomorphism"] = classes;
    if (cfg.format == "json")
        emit(cfg, dump(j));
    else if (cfg.format == "csv") {
        std::string s = "hex,products\n";
        for (const auto& e : j["solutions"])
            s += e["hex"].get<std::string>() + "," + csv_join(strings(e["products"])) + "\n";
        emit(cfg, s);
    } else {
        std::ostringstream os;
        os << sols.size() << " solutions (n=" << cfg.n << ", mode " << j["mode"].get<std::string>() << ")\n";
        os << classes << " algebras up to isomorphism\n";
        for (const auto& e : j["solutions"])
            os << "  " << e["hex"].get<std::string>() << "  " << csv_join(strings(e["products"]), ' ') << "\n";
        emit(cfg, os.str());
    }
    return kOk;
}

int cmd_classify(const Config& cfg)
{
    check_n(cfg);
    const auto mode = parse_mode(cfg);
    if (mode.kind == EnumerationMode::Kind::UnitalUpToIso)
        throw BadInput("classify takes all, inner or inner-theta");
    const auto opt = run_options(cfg);
    const auto sols = enumerate_algebras(cfg.n, mode, opt.enumeration);
    const auto orb = orbits(sols, cfg.n, cfg.jobs);
    json j = orbit_report(cfg.n, orb);
    if (!cfg.heisenberg.empty())
        j["heisenberg_theta"] = cfg.heisenberg;
    if (cfg.format == "json")
        emit(cfg, dump(j));
    else if (cfg.format == "csv") {
        std::string s = "label,canonical_hex,size,isotropy_order\n";
        for (const auto& o : j["orbits"])
            s += (o["label"].is_null() ? std::string() : o["label"].get<std::string>()) + "," +
                 o["canonical_hex"].get<std::string>() + "," + std::to_string(o["size"].get<std::size_t>()) + "," +
                 std::to_string(o["isotropy_order"].get<std::size_t>()) + "\n";
        emit(cfg, s);
    } else {
        std::ostringstream os;
        os << "n=" << cfg.n << ": " << sols.size() << " solutions in " << orb.size() << " classes\n";
        for (const auto& o : j["orbits"]) {
            os << "  " << (o["label"].is_null() ? std::string("-") : o["label"].get<std::string>())
               << "  size " << o["size"].get<std::size_t>() << "  isotropy " << o["isotropy_order"].get<std::size_t>()
               << "  canonical " << o["canonical_hex"].get<std::string>() << "\n     "
               << csv_join(strings(o["relations"]), ' ') << "\n";
        }
        os << j["heisenberg_note"].get<std::string>() << "\n";
        emit(cfg, os.str());
    }
    return kOk;
}

int cmd_geometry(const Config& cfg)
{
    check_n(cfg);
    const auto opt = run_options(cfg);
    const auto [v, name] = selected_calculus(cfg);
    json j = geometry_report(v, name, opt);
    if (!cfg.heisenberg.empty())
        j["heisenberg_theta"] = cfg.heisenberg;
    if (cfg.format == "json")
        emit(cfg, dump(j));
    else if (cfg.format == "csv") {
        std::string s = "metric,qlc,gamma,curvature_zero\n";
        for (const auto& m : j["metrics"]) {
            int k = 0;
            for (const auto& q : m["qlcs"])
                s += m["matrix"].get<std::string>() + "," + std::to_string(++k) + "," + csv_join(strings(q["gamma"])) +
                     "," + (q["curvature_zero"].get<bool>() ? "1" : "0") + "\n";
        }
        emit(cfg, s);
    } else {
        std::ostringstream os;
        os << "calculus " << name << " (n=" << v.n() << ", " << (j["inner"].get<bool>() ? "inner" : "not inner") << ")\n";
        os << "  " << csv_join(strings(j["relations"]), ' ') << "\n";
        os << j["metric_count"].get<std::size_t>() << " metrics\n";
        const std::string gens = [&] {
            std::string s;
            for (int mu = 0; mu < v.n(); ++mu)
                s += (mu ? "," : "") + std::string("d") + basis_name(v.n(), mu);
            return s;
        }();
        for (const auto& m : j["metrics"]) {
            os << "g = " << m["matrix"].get<std::string>() << "\n  " << m["qlc_count_nonzero"].get<std::size_t>()
               << " nonzero QLCs, " << m["curved_count"].get<std::size_t>() << " with nonzero curvature\n";
            for (const auto& q : m["qlcs"]) {
                os << "  nabla(" << gens << ") = (" << csv_join(strings(q["gamma"]), ' ') << ")";
                if (q["curvature_zero"].get<bool>())
                    os << "  flat\n";
                else
                    os << "  R = (" << csv_join(strings(q["curvature_components"]), ' ') << ")\n";
            }
        }
        os << j["heisenberg_note"].get<std::string>() << "\n";
        emit(cfg, os.str());
    }
    return kOk;
}

int cmd_tables(const Config& cfg, int which, const std::string& golden_dir)
{
    const auto opt = run_options(cfg);
    const json generated = generate_table(which, opt);
    const std::string path = golden_dir + "/table" + std::to_string(which) + ".json";
    const json golden = load_json(path);
    const auto cmp = compare_table(which, generated, golden);
    if (cfg.format == "json") {
        json j{{"table", which}, {"match", cmp.match}, {"differences", cmp.differences}, {"generated", generated}};
        emit(cfg, dump(j));
    } else {
        std::ostringstream os;
        os << "table " << which << ": " << (cmp.match ? "PASS" : "FAIL") << "\n";
        for (const auto& d : cmp.differences)
            os << "  " << d << "\n";
        emit(cfg, os.str());
    }
    return cmp.match ? kOk : kMismatch;
}

int cmd_netlist(const Config& cfg, const std::string& kind)
{
    check_n(cfg);
    Netlist nl;
    if (kind == "pi")
        nl = compile_pi(cfg.n);
    else {
        const auto v = selected_calculus(cfg).first;
        if (kind == "bilinear")
            nl = compile_bilinear(v);
        else if (kind == "linear")
            nl = compile_linear(v);
        else
            throw BadInput("--kind must be bilinear, linear or pi");
    }
    emit(cfg, nl.text());
    return kOk;
}

int cmd_laplacian(const Config& cfg, const std::string& poly, int metric_index, int qlc_index)
{
    check_n(cfg);
    const auto opt = run_options(cfg);
    const auto v = selected_calculus(cfg).first;
    const auto f = Polynomial::parse(v.n(), poly);
    const auto ms = find_metrics(v);
    if (metric_index < 0 || metric_index >= static_cast<int>(ms.size()))
        throw BadInput("metric index out of range; the calculus has " + std::to_string(ms.size()) + " metrics");
    const auto& g = ms[metric_index];
    const auto q = find_unit(v) ? find_qlcs(v, g, opt.qlc) : find_bimodule_qlcs(v, g, opt.qlc);
    if (qlc_index < 0 || qlc_index >= static_cast<int>(q.connections.size()))
        throw BadInput("connection index out of range; the metric has " + std::to_string(q.connections.size()) +
                       " connections");
    const auto& c = q.connections[qlc_index];
    const auto df = differential(f, v);
    const auto lap = laplacian(f, v, g, c);
    json j{{"polynomial", f.str()}, {"metric", render_metric(g)}, {"gamma", gamma_terms(c.gamma)}, {"laplacian", lap.str()}};
    json d = json::array();
    for (const auto& p : df.coeff)
        d.push_back(p.str());
    j["differential"] = d;
    if (cfg.format == "json")
        emit(cfg, dump(j));
    else {
        std::ostringstream os;
        os << "f = " << f.str() << "\n";
        for (int mu = 0; mu < v.n(); ++mu)
            os << "coefficient of d" << basis_name(v.n(), mu) << ": " << df.coeff[mu].str() << "\n";
        os << "laplacian = " << lap.str() << "\n";
        emit(cfg, os.str());
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Noncommutative Riemannian geometry over the two-element field"};
    app.require_subcommand(1);
    Config cfg;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--n", cfg.n, "dimension");
        sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
        sub->add_option("--out", cfg.out, "write output to this path");
        sub->add_option("--jobs", cfg.jobs, "worker threads");
        sub->add_option("--cap-sigma", cfg.cap_sigma, "log2 of the largest connection search space");
        sub->add_flag("--unsafe-large", cfg.unsafe_large, "allow n above 4");
    };
    auto add_calculus = [&](CLI::App* sub) {
        sub->add_option("--label", cfg.label, "class label, e.g. E");
        sub->add_option("--family", cfg.family, "functions, cyclic or field-extension");
        sub->add_option("--degree", cfg.family_param, "d for field-extension");
        sub->add_option("--heisenberg", cfg.heisenberg, "Theta for [x^mu,x^nu]=Theta^{mu nu}, kept as metadata");
    };

    auto* enumerate = app.add_subcommand("enumerate", "list commutative associative structure constants");
    add_common(enumerate);
    enumerate->add_option("--mode", cfg.mode, "all | inner | inner-theta <bits> | unital-iso")->expected(1, 2);
    bool all_flag = false;
    std::string inner_opt;
    enumerate->add_flag("--all", all_flag, "same as --mode all");
    enumerate->add_option("--inner", inner_opt, "any, or a theta bit string");

    auto* classify = app.add_subcommand("classify", "orbit decomposition under change of basis");
    add_common(classify);
    classify->add_option("--mode", cfg.mode, "all | inner | inner-theta <bits>")->expected(1, 2);
    classify->add_option("--heisenberg", cfg.heisenberg, "Theta metadata");

    auto* geometry = app.add_subcommand("geometry", "metrics, Levi-Civita connections and curvature");
    add_common(geometry);
    add_calculus(geometry);

    auto* tables = app.add_subcommand("tables", "regenerate a table and compare with the golden file");
    add_common(tables);
    int which = 0;
    std::string golden_dir = std::string(F2GEOM_DATA_DIR) + "/golden";
    tables->add_option("which", which, "1, 2, 4, 5 or 6")->required();
    tables->add_option("--golden-dir", golden_dir, "directory holding table<k>.json");

    auto* netlist = app.add_subcommand("netlist", "AND/XOR netlist for a product");
    add_common(netlist);
    add_calculus(netlist);
    std::string kind = "bilinear";
    netlist->add_option("--kind", kind, "bilinear, linear or pi");

    auto* lap = app.add_subcommand("laplacian", "differential and Laplacian of a polynomial");
    add_common(lap);
    add_calculus(lap);
    std::string poly;
    int metric_index = 0, qlc_index = 0;
    lap->add_option("--poly", poly, "polynomial in x1..xn, e.g. x1^2*x2 + 1")->required();
    lap->add_option("--metric", metric_index, "metric index in ascending order");
    lap->add_option("--connection", qlc_index, "connection index in ascending order, 0 is the first found");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kBadInput;
    }

    try {
        if (enumerate->parsed()) {
            if (all_flag)
                cfg.mode = {"all"};
            else if (!inner_opt.empty())
                cfg.mode = inner_opt == "any" ? std::vector<std::string>{"inner"}
                                              : std::vector<std::string>{"inner-theta", inner_opt};
            return cmd_enumerate(cfg);
        }
        if (classify->parsed())
            return cmd_classify(cfg);
        if (geometry->parsed())
            return cmd_geometry(cfg);
        if (tables->parsed())
            return cmd_tables(cfg, which, golden_dir);
        if (netlist->parsed())
            return cmd_netlist(cfg, kind);
        if (lap->parsed())
            return cmd_laplacian(cfg, poly, metric_index, qlc_index);
    } catch (const SearchCapExceeded& e) {
        std::cerr << "search cap exceeded: " << e.what() << "\n";
        return kCap;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    }
    return kBadInput;
}
