#include "catwig/params.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "catwig/constants.hpp"

#include <json.hpp>

namespace catwig {

namespace {

void require_positive(double value, const char* name) {
    if (!(value > 0.0) || !std::isfinite(value))
        throw ValidationError(std::string(name) + " must be strictly positive");
}

void require_nonnegative(double value, const char* name) {
    if (!(value >= 0.0) || !std::isfinite(value))
        throw ValidationError(std::string(name) + " must be non-negative");
}

} // namespace

void PhysicalParams::validate() const {
    require_positive(mass_kg, "mass_kg");
    require_positive(omega_c_rad_s, "omega_c_rad_s");
    require_positive(lambda_m, "lambda_m");
    require_positive(finesse, "finesse");
    require_positive(q_factor, "q_factor");
    // Temperatures may be exactly zero (ground-state limits are meaningful).
    require_nonnegative(bath_temp_k, "bath_temp_k");
    require_nonnegative(mode_temp_k, "mode_temp_k");

    if (!cavity_length_m && !round_trips)
        throw ValidationError(
            "at least one of cavity_length_m and round_trips must be given");
    if (cavity_length_m) require_positive(*cavity_length_m, "cavity_length_m");
    if (round_trips) require_positive(*round_trips, "round_trips");

    if (cavity_length_m && round_trips) {
        const double n_from_length =
            constants::pi * constants::c_light / (*cavity_length_m * omega_c_rad_s);
        const double rel = std::abs(*round_trips - n_from_length) / n_from_length;
        if (rel > 1e-6) {
            std::ostringstream msg;
            msg << "cavity_length_m and round_trips are inconsistent: "
                << "N = pi*c/(L*omega_c) gives " << n_from_length << " but round_trips = "
                << *round_trips << " (relative deviation " << rel << " > 1e-6)";
            throw ValidationError(msg.str());
        }
    }
}

double PhysicalParams::omega_a() const {
    return 2.0 * constants::pi * constants::c_light / lambda_m;
}

double PhysicalParams::effective_round_trips() const {
    if (round_trips) return *round_trips;
    return constants::pi * constants::c_light / (*cavity_length_m * omega_c_rad_s);
}

double ground_state_size(double mass_kg, double omega_c) {
    return std::sqrt(constants::hbar / (mass_kg * omega_c));
}

double kappa_from_cavity(double omega_a, double cavity_length_m, double mass_kg,
                         double omega_c) {
    return omega_a / (cavity_length_m * omega_c) *
           std::sqrt(constants::hbar / (2.0 * mass_kg * omega_c));
}

double kappa_from_round_trips(double round_trips, double x0_m, double lambda_m) {
    return std::sqrt(2.0) * round_trips * x0_m / lambda_m;
}

double mean_phonon(double temp_k, double omega_c) {
    if (temp_k < 0.0) throw ValidationError("temperature must be non-negative");
    if (!(omega_c > 0.0)) throw ValidationError("omega_c must be strictly positive");
    if (temp_k == 0.0) return 0.0;
    // expm1 keeps the high-temperature (small-argument) regime accurate.
    const double x = constants::hbar * omega_c / (constants::k_B * temp_k);
    return 1.0 / std::expm1(x);
}

double t_eid(double omega_c, double q_factor) {
    return constants::hbar * omega_c * q_factor / constants::k_B;
}

DerivedQuantities derive_quantities(const PhysicalParams& params) {
    params.validate();

    DerivedQuantities out;
    out.x0_m = ground_state_size(params.mass_kg, params.omega_c_rad_s);
    out.kappa =
        kappa_from_round_trips(params.effective_round_trips(), out.x0_m, params.lambda_m);

    if (params.cavity_length_m && params.round_trips) {
        const double kappa_geom =
            kappa_from_cavity(params.omega_a(), *params.cavity_length_m, params.mass_kg,
                              params.omega_c_rad_s);
        const double rel = std::abs(kappa_geom - out.kappa) / out.kappa;
        if (rel > 1e-9)
            throw ConvergenceError("kappa routes disagree beyond relative 1e-9");
    }

    out.t_eid_k = t_eid(params.omega_c_rad_s, params.q_factor);
    out.n_bar = mean_phonon(params.mode_temp_k, params.omega_c_rad_s);
    out.finesse_required = params.lambda_m / (2.0 * out.x0_m);
    return out;
}

namespace {

const char* const kParamFields[] = {
    "mass_kg",  "omega_c_rad_s", "lambda_m",    "cavity_length_m", "round_trips",
    "finesse",  "q_factor",      "bath_temp_k", "mode_temp_k",
};

double get_number(const nlohmann::json& j, const char* key) {
    const auto& v = j.at(key);
    if (!v.is_number())
        throw ValidationError(std::string("field '") + key + "' must be numeric");
    return v.get<double>();
}

} // namespace

PhysicalParams params_from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError(std::string("config parse error: ") + e.what());
    }
    if (!j.is_object()) throw ValidationError("config must be a JSON object");

    for (const auto& item : j.items()) {
        bool known = false;
        for (const char* f : kParamFields)
            if (item.key() == f) known = true;
        if (!known)
            throw ValidationError("unknown config field '" + item.key() + "'");
    }

    PhysicalParams p;
    p.mass_kg = get_number(j, "mass_kg");
    p.omega_c_rad_s = get_number(j, "omega_c_rad_s");
    p.lambda_m = get_number(j, "lambda_m");
    if (j.contains("cavity_length_m")) p.cavity_length_m = get_number(j, "cavity_length_m");
    if (j.contains("round_trips")) p.round_trips = get_number(j, "round_trips");
    p.finesse = get_number(j, "finesse");
    p.q_factor = get_number(j, "q_factor");
    p.bath_temp_k = get_number(j, "bath_temp_k");
    p.mode_temp_k = get_number(j, "mode_temp_k");
    p.validate();
    return p;
}

PhysicalParams params_from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return params_from_json_text(buf.str());
    } catch (ValidationError& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

std::string params_to_json_text(const PhysicalParams& p) {
    nlohmann::json j;
    j["mass_kg"] = p.mass_kg;
    j["omega_c_rad_s"] = p.omega_c_rad_s;
    j["lambda_m"] = p.lambda_m;
    if (p.cavity_length_m) j["cavity_length_m"] = *p.cavity_length_m;
    if (p.round_trips) j["round_trips"] = *p.round_trips;
    j["finesse"] = p.finesse;
    j["q_factor"] = p.q_factor;
    j["bath_temp_k"] = p.bath_temp_k;
    j["mode_temp_k"] = p.mode_temp_k;
    return j.dump(2);
}

} // namespace catwig
