#include <doctest.h>

#include <cmath>

#include "catwig/catalog.hpp"
#include "catwig/constants.hpp"
#include "catwig/params.hpp"

using namespace catwig;

TEST_CASE("shipped catalog loads with derived fields where inputs suffice") {
    auto catalog = load_catalog(std::string(CATWIG_DATA_DIR) + "/devices.json");
    REQUIRE(catalog.size() == 10);

    const DeviceRecord* j = nullptr;
    const DeviceRecord* a = nullptr;
    for (const auto& rec : catalog) {
        if (rec.label == "j") j = &rec;
        if (rec.label == "a") a = &rec;
    }
    REQUIRE(j != nullptr);
    REQUIRE(a != nullptr);

    CHECK(j->mass_kg == 1e-12);
    CHECK(j->x0_m.has_value());
    CHECK(*j->x0_m == doctest::Approx(1.832158931539247e-13).epsilon(1e-12));
    CHECK(!j->t_eid_k.has_value()); // no Q in the shipped record

    CHECK(a->finesse == 2e6);
    CHECK(!a->x0_m.has_value()); // partial record tolerated, no error
}

TEST_CASE("ranking at 600 nm") {
    auto catalog = load_catalog(std::string(CATWIG_DATA_DIR) + "/devices.json");
    auto report = rank_devices(catalog, 600e-9);
    REQUIRE(report.size() == catalog.size());

    // computable couplings sort first, descending; record (j) leads
    CHECK(report.front().label == "j");
    REQUIRE(report.front().kappa.has_value());
    CHECK(*report.front().kappa == doctest::Approx(0.863688003135267).epsilon(1e-12));
    REQUIRE(report.front().meets_coupling.has_value());
    CHECK(*report.front().meets_coupling);
    CHECK(report.front().finesse_required.has_value());

    // incomputable entries rank last with null flags
    CHECK(!report.back().kappa.has_value());
    CHECK(!report.back().meets_coupling.has_value());

    double prev = 1e300;
    for (const auto& entry : report) {
        if (!entry.kappa) break;
        CHECK(*entry.kappa <= prev);
        prev = *entry.kappa;
    }
}

TEST_CASE("coupling threshold is inclusive") {
    // engineer a record whose round trips put kappa exactly at 1/sqrt(2)
    const double mass = 1e-12;
    const double omega = 2.0 * constants::pi * 500.0;
    const double lambda = 600e-9;
    const double x0 = ground_state_size(mass, omega);
    const double n_trips = lambda / (2.0 * x0); // kappa = sqrt(2) N x0/lambda = 1/sqrt(2)

    DeviceRecord rec;
    rec.label = "threshold";
    rec.mass_kg = mass;
    rec.omega_c_rad_s = omega;
    rec.round_trips = n_trips;
    auto report = rank_devices({rec}, lambda);
    REQUIRE(report.size() == 1);
    REQUIRE(report[0].kappa.has_value());
    CHECK(*report[0].kappa == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
    REQUIRE(report[0].meets_coupling.has_value());
    CHECK(*report[0].meets_coupling);
}

TEST_CASE("finesse stands in for round trips at the F = N point") {
    DeviceRecord rec;
    rec.label = "fn";
    rec.mass_kg = 1e-12;
    rec.omega_c_rad_s = 2.0 * constants::pi * 500.0;
    rec.finesse = 2e6;
    auto report = rank_devices({rec}, 600e-9);
    REQUIRE(report[0].kappa.has_value());
    CHECK(*report[0].kappa == doctest::Approx(0.863688003135267).epsilon(1e-12));
}

TEST_CASE("ingestion edge cases") {
    SUBCASE("empty catalog") {
        CHECK(load_catalog_text("[]").empty());
        CHECK(load_catalog_text("{\"devices\": []}").empty());
    }
    SUBCASE("bare array form") {
        auto cat = load_catalog_text("[{\"label\": \"x\", \"finesse\": 1e4}]");
        REQUIRE(cat.size() == 1);
        CHECK(cat[0].label == "x");
        CHECK(cat[0].finesse == 1e4);
    }
    SUBCASE("duplicate labels") {
        CHECK_THROWS_AS(
            load_catalog_text("[{\"label\": \"x\"}, {\"label\": \"x\"}]"),
            ValidationError);
    }
    SUBCASE("malformed numerics name the offending record and field") {
        try {
            load_catalog_text("[\n  {\"label\": \"x\",\n   \"finesse\": \"huge\"}\n]");
            FAIL("expected ValidationError");
        } catch (const ValidationError& e) {
            const std::string what = e.what();
            CHECK(what.find("'x'") != std::string::npos);
            CHECK(what.find("finesse") != std::string::npos);
        }
    }
    SUBCASE("parse errors carry line numbers") {
        try {
            load_catalog_text("[\n  {\"label\": \"x\"},\n  {nope}\n]");
            FAIL("expected ValidationError");
        } catch (const ValidationError& e) {
            CHECK(std::string(e.what()).find("line 3") != std::string::npos);
        }
    }
}

TEST_CASE("serialization round trip preserves semantic content") {
    auto catalog = load_catalog(std::string(CATWIG_DATA_DIR) + "/devices.json");
    auto again = load_catalog_text(catalog_to_json_text(catalog));
    REQUIRE(again.size() == catalog.size());
    for (size_t i = 0; i < catalog.size(); ++i) {
        CHECK(again[i].label == catalog[i].label);
        CHECK(again[i].note == catalog[i].note);
        CHECK(again[i].mass_kg == catalog[i].mass_kg);
        CHECK(again[i].omega_c_rad_s == catalog[i].omega_c_rad_s);
        CHECK(again[i].cavity_length_m == catalog[i].cavity_length_m);
        CHECK(again[i].round_trips == catalog[i].round_trips);
        CHECK(again[i].finesse == catalog[i].finesse);
        CHECK(again[i].q_factor == catalog[i].q_factor);
    }
}

TEST_CASE("all-null catalog ranks with null flags") {
    auto report = rank_devices(load_catalog_text("[{\"label\": \"only\"}]"), 600e-9);
    REQUIRE(report.size() == 1);
    CHECK(!report[0].kappa.has_value());
    CHECK(!report[0].meets_coupling.has_value());
    CHECK(!report[0].t_eid_k.has_value());
}
