#include "catwig/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "catwig/constants.hpp"
#include "catwig/params.hpp"

#include <json.hpp>

namespace catwig {

namespace {

std::optional<double> opt_number(const nlohmann::json& j, const char* key,
                                 const std::string& label) {
    if (!j.contains(key)) return std::nullopt;
    const auto& v = j.at(key);
    if (!v.is_number())
        throw ValidationError("device '" + label + "': field '" + key +
                              "' must be numeric");
    const double x = v.get<double>();
    if (!(x > 0.0) || !std::isfinite(x))
        throw ValidationError("device '" + label + "': field '" + key +
                              "' must be strictly positive");
    return x;
}

int line_of_offset(const std::string& text, std::size_t byte) {
    int line = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i)
        if (text[i] == '\n') ++line;
    return line;
}

} // namespace

std::vector<DeviceRecord> load_catalog_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        std::ostringstream msg;
        msg << "catalog parse error at line " << line_of_offset(text, e.byte) << ": "
            << e.what();
        throw ValidationError(msg.str());
    }

    const nlohmann::json* list = &j;
    if (j.is_object() && j.contains("devices")) list = &j.at("devices");
    if (!list->is_array())
        throw ValidationError("catalog must be a JSON array of device records");

    std::vector<DeviceRecord> out;
    std::set<std::string> labels;
    for (const auto& item : *list) {
        if (!item.is_object() || !item.contains("label") ||
            !item.at("label").is_string())
            throw ValidationError("every catalog record needs a string 'label'");
        DeviceRecord rec;
        rec.label = item.at("label").get<std::string>();
        if (!labels.insert(rec.label).second)
            throw ValidationError("duplicate device label '" + rec.label + "'");

        rec.mass_kg = opt_number(item, "mass_kg", rec.label);
        rec.omega_c_rad_s = opt_number(item, "omega_c_rad_s", rec.label);
        rec.cavity_length_m = opt_number(item, "cavity_length_m", rec.label);
        rec.round_trips = opt_number(item, "round_trips", rec.label);
        rec.finesse = opt_number(item, "finesse", rec.label);
        rec.q_factor = opt_number(item, "q_factor", rec.label);
        if (item.contains("note")) rec.note = item.at("note").get<std::string>();

        if (rec.omega_c_rad_s && rec.q_factor)
            rec.t_eid_k = t_eid(*rec.omega_c_rad_s, *rec.q_factor);
        if (rec.mass_kg && rec.omega_c_rad_s)
            rec.x0_m = ground_state_size(*rec.mass_kg, *rec.omega_c_rad_s);
        out.push_back(std::move(rec));
    }
    return out;
}

std::vector<DeviceRecord> load_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open catalog file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return load_catalog_text(buf.str());
    } catch (ValidationError& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

std::string catalog_to_json_text(const std::vector<DeviceRecord>& catalog) {
    nlohmann::json list = nlohmann::json::array();
    for (const DeviceRecord& r : catalog) {
        nlohmann::json item;
        item["label"] = r.label;
        if (r.mass_kg) item["mass_kg"] = *r.mass_kg;
        if (r.omega_c_rad_s) item["omega_c_rad_s"] = *r.omega_c_rad_s;
        if (r.cavity_length_m) item["cavity_length_m"] = *r.cavity_length_m;
        if (r.round_trips) item["round_trips"] = *r.round_trips;
        if (r.finesse) item["finesse"] = *r.finesse;
        if (r.q_factor) item["q_factor"] = *r.q_factor;
        if (!r.note.empty()) item["note"] = r.note;
        list.push_back(std::move(item));
    }
    nlohmann::json root;
    root["devices"] = std::move(list);
    return root.dump(2);
}

std::vector<RankEntry> rank_devices(const std::vector<DeviceRecord>& catalog,
                                    double lambda_m) {
    if (!(lambda_m > 0.0)) throw ValidationError("lambda must be strictly positive");
    const double threshold = 1.0 / std::sqrt(2.0);

    std::vector<RankEntry> out;
    out.reserve(catalog.size());
    for (const DeviceRecord& r : catalog) {
        RankEntry e;
        e.label = r.label;
        e.t_eid_k = r.t_eid_k;
        std::optional<double> x0 = r.x0_m;
        if (!x0 && r.mass_kg && r.omega_c_rad_s)
            x0 = ground_state_size(*r.mass_kg, *r.omega_c_rad_s);
        if (x0) {
            e.finesse_required = lambda_m / (2.0 * *x0);
            std::optional<double> n_eff = r.round_trips;
            if (!n_eff && r.cavity_length_m && r.omega_c_rad_s)
                n_eff = constants::pi * constants::c_light /
                        (*r.cavity_length_m * *r.omega_c_rad_s);
            if (!n_eff) n_eff = r.finesse; // F = N operating point
            if (n_eff) {
                e.kappa = kappa_from_round_trips(*n_eff, *x0, lambda_m);
                e.meets_coupling = *e.kappa >= threshold;
            }
        }
        out.push_back(std::move(e));
    }

    std::stable_sort(out.begin(), out.end(), [](const RankEntry& a, const RankEntry& b) {
        if (a.kappa && b.kappa) return *a.kappa > *b.kappa;
        return a.kappa.has_value() && !b.kappa.has_value();
    });
    return out;
}

} // namespace catwig
