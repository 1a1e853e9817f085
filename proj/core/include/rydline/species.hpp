#pragma once

#include <map>
#include <string>
#include <vector>

namespace rydline {

/// Tabulated electron-perturber phase shifts for one partial wave.
struct PhaseShiftTable {
    int L = 0;
    std::vector<double> k;     // momenta, atomic units, strictly increasing
    std::vector<double> delta; // phase shifts, radians
};

/// Descriptor for where the phase shifts of one partial wave come from.
struct PhaseShiftSource {
    enum class Kind { Born, Table };
    Kind kind = Kind::Born;
    std::string table_path; // relative paths resolve against the config file
};

/// Perturber species parameters. Immutable after load; safe to share.
struct SpeciesData {
    std::string name;
    double polarizability = 0.0;          // a0^3
    double mass_amu = 0.0;                // atomic mass units
    std::vector<double> quantum_defects;  // mu_l, index l; empty entries mean 0
    std::map<int, PhaseShiftSource> phase_shift_sources; // per partial wave L

    double atomic_mass() const;  // electron masses
    double reduced_mass() const; // homonuclear dimer m_AB, electron masses
    double quantum_defect(int l) const;
};

/// Parse a species JSON config. Keys: name, polarizability_au, mass_amu,
/// quantum_defects (list), phase_shifts (map L -> {"model":"born"} or
/// {"model":"table","path":...}).
SpeciesData load_species(const std::string& path);

/// Serialize back to the same JSON layout (full precision round-trip).
std::string serialize_species(const SpeciesData& s);

/// Parse a phase-shift CSV with header `k,delta`. Validates >= 4 rows,
/// strictly increasing k >= 0, finite entries.
PhaseShiftTable load_phase_table(const std::string& path, int L);

} // namespace rydline
