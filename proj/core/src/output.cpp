#include "rydline/output.hpp"

#include "rydline/constants.hpp"

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace rydline {

namespace {

constexpr const char* library_version = "0.1.0";

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << std::setprecision(17);
    return out;
}

} // namespace

std::string to_string(CurveProvenance p) {
    switch (p) {
    case CurveProvenance::Diagonalization: return "diagonalization";
    case CurveProvenance::IonPair: return "ion-pair";
    case CurveProvenance::Expansion: return "expansion";
    case CurveProvenance::SoftCore: return "soft-core";
    }
    return "unknown";
}

void write_curve_csv(const std::string& path, const PotentialCurve& curve,
                     const std::map<std::string, std::string>& metadata) {
    auto out = open_out(path);
    out << "# label: " << curve.label << "\n";
    out << "# n_ref: " << curve.n_ref << "\n";
    out << "# symmetry_m: " << curve.symmetry_m << "\n";
    out << "# provenance: " << to_string(curve.provenance) << "\n";
    out << "# includes_polarization: " << (curve.includes_polarization ? "yes" : "no") << "\n";
    for (const auto& [k, v] : metadata) out << "# " << k << ": " << v << "\n";
    out << "R,V_hartree,V_GHz\n";
    for (std::size_t i = 0; i < curve.R.size(); ++i)
        out << curve.R[i] << "," << curve.V[i] << ","
            << curve.V[i] * constants::hartree_to_ghz << "\n";
}

void write_spectrum_csv(const std::string& path, const VibrationalSpectrum& spectrum,
                        const std::vector<double>& v_eff,
                        const std::vector<double>& delta_eps) {
    auto out = open_out(path);
    out << "# m_AB: " << spectrum.m_AB << "\n";
    out << "# J: " << spectrum.J << "\n";
    out << "# wall_R: " << spectrum.wall_R << "\n";
    out << "# box_R: " << spectrum.box_R << "\n";
    out << "v,epsilon_hartree,epsilon_GHz,V_eff,delta_eps\n";
    for (std::size_t i = 0; i < spectrum.levels.size(); ++i) {
        out << spectrum.levels[i].v << "," << spectrum.levels[i].energy << ","
            << spectrum.levels[i].energy * constants::hartree_to_ghz << ",";
        if (i < v_eff.size()) out << v_eff[i];
        out << ",";
        if (i >= 1 && i - 1 < delta_eps.size()) out << delta_eps[i - 1];
        out << "\n";
    }
}

std::vector<VibrationalLevel> read_spectrum_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open spectrum CSV: " + path);
    std::vector<VibrationalLevel> levels;
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty() || line.front() == '#') continue;
        if (!header_seen) {
            header_seen = true; // column header
            continue;
        }
        std::istringstream ss(line);
        std::string field;
        VibrationalLevel lvl;
        if (!std::getline(ss, field, ',')) continue;
        lvl.v = std::stoi(field);
        if (!std::getline(ss, field, ','))
            throw std::runtime_error("bad spectrum row in " + path);
        lvl.energy = std::stod(field);
        levels.push_back(lvl);
    }
    if (levels.empty()) throw std::runtime_error("no levels in spectrum CSV: " + path);
    return levels;
}

void write_constants_json(const std::string& path, const SeriesConstants& constants) {
    nlohmann::json j;
    j["n_ref"] = constants.n_ref;
    j["L"] = constants.L;
    j["abar_au"] = constants.abar;
    j["m_AB_au"] = constants.m_AB;
    j["rydberg_constant_hartree"] = constants.rydberg_constant;
    j["threshold_shift_hartree"] = constants.threshold_shift;
    j["v_max"] = constants.v_max;
    auto out = open_out(path);
    out << j.dump(2) << "\n";
}

SeriesConstants read_constants_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open constants JSON: " + path);
    nlohmann::json j;
    in >> j;
    SeriesConstants c;
    c.n_ref = j.at("n_ref").get<int>();
    c.L = j.at("L").get<int>();
    c.abar = j.at("abar_au").get<double>();
    c.m_AB = j.at("m_AB_au").get<double>();
    c.rydberg_constant = j.at("rydberg_constant_hartree").get<double>();
    c.threshold_shift = j.at("threshold_shift_hartree").get<double>();
    c.v_max = j.at("v_max").get<int>();
    return c;
}

void write_summary_json(const std::string& path, const DefectFit& v_fit,
                        const DefectFit& gap_fit, const SeriesConstants& constants,
                        std::size_t level_count) {
    nlohmann::json j;
    j["eta"] = v_fit.eta;
    j["v_fit"] = {{"slope", v_fit.slope},
                  {"intercept", v_fit.intercept},
                  {"r_squared", v_fit.r_squared},
                  {"n_points", v_fit.n_points}};
    j["delta_eps_fit"] = {{"slope", gap_fit.slope},
                          {"intercept", gap_fit.intercept},
                          {"r_squared", gap_fit.r_squared},
                          {"n_points", gap_fit.n_points}};
    j["level_count"] = level_count;
    j["v_max_predicted"] = constants.v_max;
    auto out = open_out(path);
    out << j.dump(2) << "\n";
}

std::string content_hash(const std::string& text) {
    // FNV-1a, 64-bit
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

void write_manifest(const std::string& path, const std::string& config_text,
                    const SpeciesData& species,
                    const std::map<std::string, std::string>& extra) {
    nlohmann::json j;
    j["version"] = library_version;
    j["config_hash"] = content_hash(config_text);
    j["species_hash"] = content_hash(serialize_species(species));
    j["species_name"] = species.name;
    for (const auto& [k, v] : extra) j[k] = v;
    auto out = open_out(path);
    out << j.dump(2) << "\n";
}

std::string slurp_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace rydline
