#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "f2geom/algebra.hpp"
#include "f2geom/geometry.hpp"
#include "f2geom/orbits.hpp"

namespace f2geom {

using nlohmann::json;

struct RunOptions {
    EnumerationOptions enumeration;
    QlcOptions qlc;
};

// Gamma as one rendered string per generator.
json gamma_terms(const Tensor3& gamma);
json curvature_terms(const Tensor3& gamma);

json enumerate_report(int n, const EnumerationMode& mode, const std::vector<StructureConstants>& sols);
json orbit_report(int n, const std::vector<OrbitReport>& orbits);
// Metrics, connections and curvature for one calculus. Inner calculi use the
// sigma search, others the gamma search.
json geometry_report(const StructureConstants& v, const std::string& label, const RunOptions& opt);

// Regenerated content of a table (1, 2, 4, 5 or 6) in the golden layout.
json generate_table(int which, const RunOptions& opt);
// Drops presentation-only keys and sorts set-valued arrays.
json canonical_table(const json& t);

struct TableComparison {
    bool match = false;
    std::vector<std::string> differences;
};
TableComparison compare_table(int which, const json& generated, const json& golden);

json load_json(const std::string& path);

// Product strings used in table rows: every product for non-inner calculi,
// only those between non-unit basis elements for inner ones.
std::vector<std::string> table_products(const StructureConstants& v, bool inner);

}  // namespace f2geom
