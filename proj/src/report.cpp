#include "f2geom/report.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include "f2geom/labels.hpp"

namespace f2geom {

namespace {

const char* kHeisenbergNote =
    "The same geometries apply verbatim to Heisenberg-type relations [x^mu,x^nu]=Theta^{mu nu}; "
    "Theta is carried as metadata only.";

std::string mode_name(const EnumerationMode& m)
{
    switch (m.kind) {
    case EnumerationMode::Kind::All: return "all";
    case EnumerationMode::Kind::Inner: return "inner-theta";
    case EnumerationMode::Kind::InnerAny: return "inner";
    case EnumerationMode::Kind::UnitalUpToIso: return "unital-iso";
    }
    return "?";
}

bool is_zero_algebra(const StructureConstants& v)
{
    for (int mu = 0; mu < v.n(); ++mu)
        for (int nu = 0; nu < v.n(); ++nu)
            if (v.product(mu, nu))
                return false;
    return true;
}

// Representative used for display: the labelled one when the orbit has a
// label, else the canonical form.
StructureConstants display_rep(const StructureConstants& canonical, const std::optional<std::string>& label)
{
    return label ? label_rep(canonical.n(), *label) : canonical;
}

QlcSearch search(const StructureConstants& v, const Matrix& g, const QlcOptions& opt)
{
    return find_unit(v) ? find_qlcs(v, g, opt) : find_bimodule_qlcs(v, g, opt);
}

std::size_t curved_count(const QlcSearch& q)
{
    std::size_t k = 0;
    for (const auto& c : q.connections)
        if (!is_flat(c.gamma))
            ++k;
    return k;
}

json sorted_array(json a)
{
    auto key = [](const json& x) {
        return x.is_object() && x.contains("matrix") ? x["matrix"].dump() : x.dump();
    };
    std::sort(a.begin(), a.end(), [&](const json& x, const json& y) { return key(x) < key(y); });
    return a;
}

}  // namespace

std::vector<std::string> table_products(const StructureConstants& v, bool inner)
{
    const int n = v.n();
    std::vector<std::string> out;
    for (int mu = inner ? 1 : 0; mu < n; ++mu)
        for (int nu = mu; nu < n; ++nu)
            out.push_back(basis_name(n, mu) + "*" + basis_name(n, nu) + "=" + render_elements(n, v.product(mu, nu)));
    return out;
}

json gamma_terms(const Tensor3& gamma)
{
    json a = json::array();
    for (int mu = 0; mu < gamma.n(); ++mu)
        a.push_back(render_gamma(gamma, mu));
    return a;
}

json curvature_terms(const Tensor3& gamma)
{
    json a = json::array();
    for (const auto& r : curvature(gamma))
        a.push_back(render_curvature(gamma.n(), r));
    return a;
}

json enumerate_report(int n, const EnumerationMode& mode, const std::vector<StructureConstants>& sols)
{
    json j;
    j["n"] = n;
    j["mode"] = mode_name(mode);
    if (mode.kind == EnumerationMode::Kind::Inner)
        j["theta"] = mode.theta.str();
    j["solution_count"] = sols.size();
    json list = json::array();
    for (const auto& s : sols)
        list.push_back({{"hex", s.hex()}, {"products", render_products(s)}});
    j["solutions"] = std::move(list);
    return j;
}

json orbit_report(int n, const std::vector<OrbitReport>& orbits)
{
    json j;
    j["n"] = n;
    j["orbit_count"] = orbits.size();
    json list = json::array();
    for (const auto& o : orbits) {
        auto label = label_for(o.canonical);
        const auto rep = display_rep(o.canonical, label);
        list.push_back({{"canonical_hex", o.canonical.hex()},
                        {"size", o.orbit_size},
                        {"isotropy_order", o.isotropy.size()},
                        {"label", label ? json(*label) : json(nullptr)},
                        {"inner", find_unit(rep).has_value()},
                        {"relations", render_relations(rep)}});
    }
    j["orbits"] = std::move(list);
    j["heisenberg_note"] = kHeisenbergNote;
    return j;
}

json geometry_report(const StructureConstants& v, const std::string& label, const RunOptions& opt)
{
    json j;
    j["n"] = v.n();
    j["label"] = label;
    j["inner"] = find_unit(v).has_value();
    j["relations"] = render_relations(v);
    json ms = json::array();
    for (const auto& g : find_metrics(v)) {
        const QlcSearch q = search(v, g, opt.qlc);
        json qs = json::array();
        for (const auto& c : q.connections) {
            if (!c.gamma.any())
                continue;
            qs.push_back({{"gamma", gamma_terms(c.gamma)},
                          {"gamma_hex", c.gamma.hex()},
                          {"sigma_hex", c.sigma.hex()},
                          {"curvature_zero", is_flat(c.gamma)},
                          {"curvature_components", curvature_terms(c.gamma)}});
        }
        ms.push_back({{"matrix", render_metric(g)},
                      {"matrix_hex", g.hex()},
                      {"qlc_count_nonzero", q.nonzero_count()},
                      {"qlc_count_total", q.connections.size()},
                      {"curved_count", curved_count(q)},
                      {"crosscheck_mismatches", q.crosscheck_mismatch_accepted + q.crosscheck_mismatch_rejected},
                      {"qlcs", std::move(qs)}});
    }
    j["metric_count"] = ms.size();
    j["metrics"] = std::move(ms);
    j["heisenberg_note"] = kHeisenbergNote;
    return j;
}

namespace {

json inner_table(int n, int which, const RunOptions& opt)
{
    const auto sols = enumerate_algebras(n, EnumerationMode::inner_any(), opt.enumeration);
    const auto orb = orbits(sols, n, opt.enumeration.jobs);
    json t;
    t["table"] = which;
    t["n"] = n;
    if (which != 4) {
        t["inner_solutions"] = sols.size();
        t["group_order"] = group_cache(n).elements.size();
    }
    json classes = json::array();
    for (const auto& o : orb) {
        const auto label = label_for(o.canonical);
        const auto rep = display_rep(o.canonical, label);
        json c;
        c["label"] = label ? json(*label) : json("?" + o.canonical.hex());
        if (which != 4) {
            c["products"] = table_products(rep, true);
            c["orbit_size"] = o.orbit_size;
            c["isotropy_order"] = o.isotropy.size();
        }
        json ms = json::array();
        for (const auto& g : find_metrics(rep)) {
            json m{{"matrix", render_metric(g)}};
            if (which == 1) {
                const auto q = search(rep, g, opt.qlc);
                json qs = json::array();
                for (const auto& cn : q.connections)
                    if (cn.gamma.any())
                        qs.push_back(gamma_terms(cn.gamma));
                m["nonzero_qlcs"] = std::move(qs);
            } else if (which == 2) {
                const auto q = search(rep, g, opt.qlc);
                m["nonzero_qlc_count"] = q.nonzero_count();
                m["curved_count"] = curved_count(q);
            }
            ms.push_back(std::move(m));
        }
        c["metrics"] = std::move(ms);
        classes.push_back(std::move(c));
    }
    t["classes"] = std::move(classes);
    return t;
}

json relations_table(const RunOptions& opt)
{
    const int n = 4;
    BitVec theta(n);
    theta.set(0);
    const auto slice = enumerate_algebras(n, EnumerationMode::inner(theta), opt.enumeration);
    const auto all = enumerate_algebras(n, EnumerationMode::inner_any(), opt.enumeration);
    const auto orb = orbits(all, n, opt.enumeration.jobs);
    json t;
    t["table"] = 5;
    t["n"] = n;
    t["theta_slice_solutions"] = slice.size();
    t["inner_solutions"] = all.size();
    t["group_order"] = group_cache(n).elements.size();
    json classes = json::array();
    for (const auto& o : orb) {
        const auto label = label_for(o.canonical);
        const auto rep = display_rep(o.canonical, label);
        classes.push_back({{"label", label ? json(*label) : json("?" + o.canonical.hex())},
                           {"products", table_products(rep, true)}});
    }
    t["classes"] = std::move(classes);
    return t;
}

json non_inner_table(const RunOptions& opt)
{
    const int n = 2;
    std::vector<StructureConstants> candidates;
    for (const auto& v : enumerate_algebras(n, EnumerationMode::all(), opt.enumeration))
        if (!find_unit(v) && !is_zero_algebra(v))
            candidates.push_back(v);
    json t;
    t["table"] = 6;
    t["n"] = n;
    json classes = json::array();
    for (const auto& o : orbits(candidates, n, opt.enumeration.jobs)) {
        const auto label = label_for(o.canonical);
        const auto rep = display_rep(o.canonical, label);
        json c;
        c["label"] = label ? json(*label) : json("?" + o.canonical.hex());
        c["products"] = table_products(rep, false);
        c["relations"] = render_relations(rep);
        json ms = json::array();
        for (const auto& g : find_metrics(rep)) {
            const auto q = find_bimodule_qlcs(rep, g, opt.qlc);
            json qs = json::array();
            for (const auto& cn : q.connections)
                qs.push_back(gamma_terms(cn.gamma));
            ms.push_back({{"matrix", render_metric(g)}, {"qlcs", std::move(qs)}, {"qlc_count", q.connections.size()}});
        }
        c["metrics"] = std::move(ms);
        classes.push_back(std::move(c));
    }
    t["classes"] = std::move(classes);
    return t;
}

}  // namespace

json generate_table(int which, const RunOptions& opt)
{
    switch (which) {
    case 1: return inner_table(2, 1, opt);
    case 2: return inner_table(3, 2, opt);
    case 4: return inner_table(3, 4, opt);
    case 5: return relations_table(opt);
    case 6: return non_inner_table(opt);
    default: throw ParseError("no table " + std::to_string(which) + "; expected 1, 2, 4, 5 or 6");
    }
}

json canonical_table(const json& t)
{
    static const std::set<std::string> dropped{"name", "note", "notes", "printed_rows", "relations"};
    static const std::set<std::string> unordered{"metrics", "nonzero_qlcs", "qlcs", "products"};
    if (t.is_object()) {
        json out = json::object();
        for (auto it = t.begin(); it != t.end(); ++it) {
            if (dropped.count(it.key()))
                continue;
            json v = canonical_table(it.value());
            if (v.is_array() && it.key() == "classes") {
                std::sort(v.begin(), v.end(), [](const json& a, const json& b) {
                    return a.value("label", std::string()) < b.value("label", std::string());
                });
            } else if (v.is_array() && unordered.count(it.key())) {
                v = sorted_array(std::move(v));
            }
            out[it.key()] = std::move(v);
        }
        return out;
    }
    if (t.is_array()) {
        json out = json::array();
        for (const auto& e : t)
            out.push_back(canonical_table(e));
        return out;
    }
    return t;
}

TableComparison compare_table(int which, const json& generated, const json& golden)
{
    TableComparison r;
    const json a = canonical_table(generated), b = canonical_table(golden);
    for (const auto& op : json::diff(b, a))
        r.differences.push_back(op.dump());
    if (which == 6) {
        // Every connection found must be one of the printed parametrised rows.
        for (const auto& gc : golden.value("classes", json::array()))
            for (const auto& gm : gc.value("metrics", json::array()))
                for (const auto& c : generated.value("classes", json::array()))
                    for (const auto& m : c.value("metrics", json::array())) {
                        if (c.value("label", "") != gc.value("label", "") || m.value("matrix", "") != gm.value("matrix", ""))
                            continue;
                        const auto& printed = gm.value("printed_rows", json::array());
                        for (const auto& q : m.value("qlcs", json::array()))
                            if (std::find(printed.begin(), printed.end(), q) == printed.end())
                                r.differences.push_back("connection " + q.dump() + " for " + c.value("label", "") + " " +
                                                        m.value("matrix", "") + " is not among the printed rows");
                    }
    }
    r.match = r.differences.empty();
    return r;
}

json load_json(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

}  // namespace f2geom
