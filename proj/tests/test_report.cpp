#include <doctest.h>

#include "f2geom/constructions.hpp"
#include "f2geom/labels.hpp"
#include "f2geom/report.hpp"
#include "schema_check.hpp"

using namespace f2geom;

namespace {

json schema(const std::string& name)
{
    return load_json(std::string(F2GEOM_DATA_DIR) + "/schema/" + name + ".schema.json");
}

json golden(int which)
{
    return load_json(std::string(F2GEOM_DATA_DIR) + "/golden/table" + std::to_string(which) + ".json");
}

void check_valid(const json& doc, const std::string& name)
{
    const auto errs = schema_check::validate(doc, schema(name));
    for (const auto& e : errs)
        MESSAGE(name << e);
    CHECK(errs.empty());
}

RunOptions with_jobs(int jobs)
{
    RunOptions o;
    o.enumeration.jobs = jobs;
    o.qlc.jobs = jobs;
    return o;
}

}  // namespace

TEST_SUITE("report")
{
    TEST_CASE("the validator rejects malformed documents")
    {
        const json s = schema("orbit_report");
        CHECK_FALSE(schema_check::validate(json{{"n", 2}}, s).empty());
        CHECK_FALSE(schema_check::validate(json{{"n", 0}, {"orbit_count", 0}, {"orbits", json::array()}}, s).empty());
        CHECK_FALSE(schema_check::validate(json{{"n", 2}, {"orbit_count", 1}, {"orbits", {{{"canonical_hex", 3}}}}}, s).empty());
        CHECK(schema_check::validate(json{{"n", 2}, {"orbit_count", 0}, {"orbits", json::array()}}, s).empty());
    }

    TEST_CASE("reports conform to their schemas")
    {
        for (int n = 1; n <= 3; ++n) {
            const auto sols = enumerate_algebras(n, EnumerationMode::inner_any());
            check_valid(enumerate_report(n, EnumerationMode::inner_any(), sols), "enumerate_report");
            check_valid(orbit_report(n, orbits(sols, n)), "orbit_report");
        }
        BitVec theta(3);
        theta.set(0);
        check_valid(enumerate_report(3, EnumerationMode::inner(theta),
                                     enumerate_algebras(3, EnumerationMode::inner(theta))),
                    "enumerate_report");
        for (const auto& l : labels(3, true))
            check_valid(geometry_report(label_rep(3, l), l, {}), "geometry_report");
        for (const auto& l : labels(2, false))
            check_valid(geometry_report(label_rep(2, l), l, {}), "geometry_report");
        const auto t1 = generate_table(1, {});
        const auto cmp = compare_table(1, t1, golden(1));
        check_valid(json{{"table", 1}, {"match", cmp.match}, {"differences", cmp.differences}, {"generated", t1}},
                    "table_result");
    }

    TEST_CASE("output does not depend on the job count")
    {
        const auto e = label_rep(3, "E");
        CHECK(geometry_report(e, "E", with_jobs(1)).dump() == geometry_report(e, "E", with_jobs(3)).dump());
        CHECK(generate_table(1, with_jobs(1)).dump() == generate_table(1, with_jobs(4)).dump());
        const auto a = enumerate_algebras(3, EnumerationMode::inner_any(), {std::uint64_t{1} << 26, 1});
        const auto b = enumerate_algebras(3, EnumerationMode::inner_any(), {std::uint64_t{1} << 26, 3});
        CHECK(orbit_report(3, orbits(a, 3, 1)).dump() == orbit_report(3, orbits(b, 3, 3)).dump());
    }

    TEST_CASE("geometry report content")
    {
        const auto r = geometry_report(label_rep(3, "F"), "F", {});
        CHECK(r["metric_count"] == 7);
        for (const auto& m : r["metrics"]) {
            CHECK(m["qlc_count_nonzero"] == 3);
            CHECK(m["qlc_count_total"] == 4);
            CHECK(m["crosscheck_mismatches"] == 0);
            CHECK(m["qlcs"].size() == 3);
        }
        const auto fn = geometry_report(functions_algebra(3), "functions", {});
        CHECK(fn["metric_count"] == 1);
        CHECK(fn["metrics"][0]["qlc_count_total"] == 4);
    }

    TEST_CASE("canonical form ignores order and presentation keys")
    {
        json a = golden(2);
        json b = a;
        std::reverse(b["classes"].begin(), b["classes"].end());
        for (auto& c : b["classes"]) {
            std::reverse(c["metrics"].begin(), c["metrics"].end());
            std::reverse(c["products"].begin(), c["products"].end());
            c["note"] = "anything";
        }
        CHECK(canonical_table(a) == canonical_table(b));
        b["classes"][0]["metrics"][0]["nonzero_qlc_count"] = 99;
        CHECK(canonical_table(a) != canonical_table(b));
    }

    TEST_CASE("golden tables")
    {
        CHECK(compare_table(1, generate_table(1, {}), golden(1)).match);
        CHECK(compare_table(4, generate_table(4, {}), golden(4)).match);
        const auto t6 = generate_table(6, {});
        CHECK(compare_table(6, t6, golden(6)).match);
        // A connection absent from the printed rows must be reported even when
        // the golden counts are edited to agree.
        json fake = t6;
        json g = golden(6);
        auto& m = fake["classes"][0]["metrics"][0];
        m["qlcs"].push_back(json::array({"de*de", "dx*dx"}));
        m["qlc_count"] = m["qlcs"].size();
        for (auto& gc : g["classes"])
            if (gc["label"] == fake["classes"][0]["label"])
                for (auto& gm : gc["metrics"])
                    if (gm["matrix"] == m["matrix"]) {
                        gm["qlcs"] = m["qlcs"];
                        gm["qlc_count"] = m["qlc_count"];
                    }
        const auto cmp = compare_table(6, fake, g);
        CHECK_FALSE(cmp.match);
        REQUIRE(cmp.differences.size() == 1);
        CHECK(cmp.differences[0].find("not among the printed rows") != std::string::npos);
        CHECK_THROWS_AS(generate_table(3, {}), ParseError);
        CHECK_THROWS_AS(load_json("/nonexistent/x.json"), ParseError);
    }
}
