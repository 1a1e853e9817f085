#include "rydline/species.hpp"

#include "rydline/constants.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace rydline {

double SpeciesData::atomic_mass() const {
    return mass_amu * constants::amu_to_electron_mass;
}

double SpeciesData::reduced_mass() const { return atomic_mass() / 2.0; }

double SpeciesData::quantum_defect(int l) const {
    if (l < 0) throw std::invalid_argument("quantum_defect: l must be non-negative");
    if (static_cast<std::size_t>(l) >= quantum_defects.size()) return 0.0;
    return quantum_defects[l];
}

namespace {

std::string parent_dir(const std::string& path) {
    const auto pos = path.find_last_of('/');
    return pos == std::string::npos ? std::string(".") : path.substr(0, pos);
}

} // namespace

SpeciesData load_species(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_species: cannot open " + path);

    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("load_species: malformed JSON in " + path + ": " + e.what());
    }

    SpeciesData s;
    try {
        s.name = j.at("name").get<std::string>();
        s.polarizability = j.at("polarizability_au").get<double>();
        s.mass_amu = j.at("mass_amu").get<double>();
        if (j.contains("quantum_defects"))
            s.quantum_defects = j["quantum_defects"].get<std::vector<double>>();
        if (j.contains("phase_shifts")) {
            for (auto& [key, val] : j["phase_shifts"].items()) {
                const int L = std::stoi(key);
                PhaseShiftSource src;
                const std::string model = val.at("model").get<std::string>();
                if (model == "born") {
                    src.kind = PhaseShiftSource::Kind::Born;
                } else if (model == "table") {
                    src.kind = PhaseShiftSource::Kind::Table;
                    src.table_path = val.at("path").get<std::string>();
                    if (!src.table_path.empty() && src.table_path.front() != '/')
                        src.table_path = parent_dir(path) + "/" + src.table_path;
                } else {
                    throw std::runtime_error("load_species: unknown phase-shift model '" + model +
                                             "'");
                }
                s.phase_shift_sources[L] = src;
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("load_species: malformed field in " + path + ": " + e.what());
    }

    if (!(s.polarizability > 0.0))
        throw std::runtime_error("load_species: polarizability must be positive");
    if (!(s.mass_amu > 0.0)) throw std::runtime_error("load_species: mass must be positive");
    return s;
}

std::string serialize_species(const SpeciesData& s) {
    nlohmann::json j;
    j["name"] = s.name;
    j["polarizability_au"] = s.polarizability;
    j["mass_amu"] = s.mass_amu;
    j["quantum_defects"] = s.quantum_defects;
    nlohmann::json ps = nlohmann::json::object();
    for (const auto& [L, src] : s.phase_shift_sources) {
        nlohmann::json e;
        if (src.kind == PhaseShiftSource::Kind::Born) {
            e["model"] = "born";
        } else {
            e["model"] = "table";
            e["path"] = src.table_path;
        }
        ps[std::to_string(L)] = e;
    }
    j["phase_shifts"] = ps;
    return j.dump(2);
}

PhaseShiftTable load_phase_table(const std::string& path, int L) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_phase_table: cannot open " + path);

    PhaseShiftTable t;
    t.L = L;
    std::string line;
    bool header_seen = false;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line.front() == '#') continue;
        if (!header_seen) {
            // header line `k,delta` (whitespace tolerant)
            std::string stripped;
            for (char c : line)
                if (!std::isspace(static_cast<unsigned char>(c))) stripped += c;
            if (stripped != "k,delta")
                throw std::runtime_error("load_phase_table: expected header 'k,delta' in " + path);
            header_seen = true;
            continue;
        }
        std::istringstream ss(line);
        double k, d;
        char comma;
        if (!(ss >> k >> comma >> d) || comma != ',')
            throw std::runtime_error("load_phase_table: bad row at line " +
                                     std::to_string(lineno) + " in " + path);
        if (!std::isfinite(k) || !std::isfinite(d))
            throw std::runtime_error("load_phase_table: non-finite entry at line " +
                                     std::to_string(lineno) + " in " + path);
        t.k.push_back(k);
        t.delta.push_back(d);
    }
    if (!header_seen) throw std::runtime_error("load_phase_table: empty file " + path);
    if (t.k.size() < 4)
        throw std::runtime_error("load_phase_table: need at least 4 rows in " + path);
    if (t.k.front() < 0.0)
        throw std::runtime_error("load_phase_table: momenta must be non-negative in " + path);
    for (std::size_t i = 1; i < t.k.size(); ++i)
        if (!(t.k[i] > t.k[i - 1]))
            throw std::runtime_error("load_phase_table: momenta must be strictly increasing in " +
                                     path);
    return t;
}

} // namespace rydline
