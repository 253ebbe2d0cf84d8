#include "qsu2/suites.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <regex>

using namespace qsu2;

TEST_SUITE("harness") {

TEST_CASE("configuration validation") {
    RunConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    cfg.q = 1.5;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.q = 0.5;
    cfg.suite = "nonsense";
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.suite = "all";
    cfg.level = HalfInt::whole(9);
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.level = HalfInt(7); // 7/2 is fine
    CHECK_NOTHROW(cfg.validate());
    cfg.format = "xml";
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("json report schema") {
    RunConfig cfg;
    cfg.suite = "grading";
    cfg.level = HalfInt::whole(3);
    CheckReport report = run_suite(cfg);
    auto j = nlohmann::json::parse(report.to_json());
    REQUIRE(j.contains("config"));
    REQUIRE(j.contains("checks"));
    REQUIRE(j.contains("passed"));
    CHECK(j["config"].contains("q"));
    CHECK(j["config"].contains("seed"));
    REQUIRE(!j["checks"].empty());
    for (const auto& c : j["checks"]) {
        CHECK(c.contains("name"));
        CHECK(c.contains("anchor"));
        CHECK(c.contains("passed"));
        CHECK(c.contains("max_error"));
        CHECK(c.contains("tolerance"));
        CHECK(c.contains("seconds"));
    }
    CHECK(j["passed"].get<bool>());
}

TEST_CASE("grading suite reports the obstruction as expected at finite c") {
    RunConfig cfg;
    cfg.suite = "grading";
    cfg.c = PodlesC::value(0.0);
    cfg.level = HalfInt::whole(3);
    CheckReport report = run_suite(cfg);
    CHECK(report.passed());
    bool found = false;
    for (const auto& c : report.checks)
        if (c.name == "grading.obstructed (expected)") {
            found = true;
            CHECK(c.passed);
        }
    CHECK(found);
    // no gamma construction checks in the obstructed branch
    for (const auto& c : report.checks)
        CHECK(c.name.find("grading.squares") == std::string::npos);
}

TEST_CASE("reports are deterministic up to timing") {
    RunConfig cfg;
    cfg.suite = "algebra";
    cfg.seed = 31;
    auto strip = [](CheckReport r) {
        for (auto& c : r.checks)
            c.seconds = 0.0;
        return r.to_json();
    };
    CHECK(strip(run_suite(cfg)) == strip(run_suite(cfg)));
}

TEST_CASE("spectrum export matches the reference rows") {
    RunConfig cfg;
    cfg.level = HalfInt::whole(1);
    auto rows = export_spectrum_rows(cfg, "D");
    // contains (0.5, 2, 0), (-1, 2, 1/2), (1, 6, 1/2)
    auto find = [&](double ev) -> const SpectrumExportRow* {
        for (auto& r : rows)
            if (std::abs(r.eigenvalue - ev) < 1e-12)
                return &r;
        return nullptr;
    };
    REQUIRE(find(0.5));
    CHECK(find(0.5)->multiplicity == 2);
    CHECK(find(0.5)->sector.twice == 0);
    REQUIRE(find(-1.0));
    CHECK(find(-1.0)->multiplicity == 2);
    CHECK(find(-1.0)->sector.str() == "1/2");
    REQUIRE(find(1.0));
    CHECK(find(1.0)->multiplicity == 6);

    std::string csv = spectrum_to_csv(rows);
    CHECK(csv.rfind("eigenvalue,multiplicity,l_sector\n", 0) == 0);

    // the restricted operator at level 3/2: rows (1,2,1/2), (-1,2,1/2), (2,4,3/2), (-2,4,3/2)
    RunConfig cfg2;
    cfg2.level = HalfInt(3);
    auto rows2 = export_spectrum_rows(cfg2, "Dtilde");
    REQUIRE(rows2.size() == 4);
    for (auto& r : rows2)
        CHECK(r.multiplicity == (std::abs(r.eigenvalue) < 1.5 ? 2 : 4));

    CHECK_THROWS_AS(export_spectrum_rows(cfg2, "Q"), std::invalid_argument);
    RunConfig bad;
    bad.level = HalfInt(0);
    CHECK_THROWS_AS(export_spectrum_rows(bad, "D"), std::invalid_argument);
}

TEST_CASE("decay export") {
    RunConfig cfg;
    cfg.level = HalfInt::whole(6);
    auto table = export_decay_rows(cfg, "A", "B", "J");
    CHECK(table.fitted_ratio > 0.0);
    CHECK(table.fitted_ratio < 1.0);
    // monotone decreasing block norms beyond the first sectors
    for (size_t k = 2; k + 2 < table.rows.size(); ++k)
        CHECK(table.rows[k + 1].block_norm < table.rows[k].block_norm + 1e-12);
    std::string csv = decay_to_csv(table.rows, table.fitted_ratio);
    CHECK(csv.find("# fitted_ratio") != std::string::npos);
    CHECK_THROWS_AS(export_decay_rows(cfg, "A", "q", "J"), std::invalid_argument);
    // su2 side with the exact-commutant conjugator
    RunConfig cfg3;
    cfg3.level = HalfInt::whole(2);
    auto t3 = export_decay_rows(cfg3, "a", "b", "T");
    double top = 0;
    for (auto& r : t3.rows)
        if (r.sector.twice <= 2)
            top = std::max(top, r.block_norm);
    CHECK(top < 1e-10);
}

} // TEST_SUITE
