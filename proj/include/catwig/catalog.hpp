// catalog.hpp — device catalog ingestion and coupling/finesse ranking.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "catwig/errors.hpp"

namespace catwig {

// One catalog entry; any physical field may be absent. Derived fields are
// filled only when their inputs suffice.
struct DeviceRecord {
    std::string label;
    std::optional<double> mass_kg;
    std::optional<double> omega_c_rad_s;
    std::optional<double> cavity_length_m;
    std::optional<double> round_trips;
    std::optional<double> finesse;
    std::optional<double> q_factor;
    std::string note; // free-text provenance / citation

    std::optional<double> t_eid_k; // derived, needs omega_c and Q
    std::optional<double> x0_m;    // derived, needs m and omega_c
};

// Parses a JSON catalog (array of records under "devices" or a bare array),
// computing derived quantities where inputs suffice. Duplicate labels and
// malformed numerics raise ValidationError with position information.
std::vector<DeviceRecord> load_catalog_text(const std::string& text);
std::vector<DeviceRecord> load_catalog(const std::string& path);

std::string catalog_to_json_text(const std::vector<DeviceRecord>& catalog);

struct RankEntry {
    std::string label;
    std::optional<double> kappa;    // at the requested wavelength
    std::optional<bool> meets_coupling; // kappa >= 1/sqrt(2), inclusive
    std::optional<double> t_eid_k;
    std::optional<double> finesse_required; // lambda/(2 x0)
};

// Per-device coupling report at wavelength lambda, sorted by kappa descending
// with incomputable entries last. When a record lacks round_trips its finesse
// stands in for N (the F = N operating point).
std::vector<RankEntry> rank_devices(const std::vector<DeviceRecord>& catalog,
                                    double lambda_m);

} // namespace catwig
