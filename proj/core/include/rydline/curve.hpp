#pragma once

#include <string>
#include <vector>

namespace rydline {

enum class CurveProvenance { Diagonalization, IonPair, Expansion, SoftCore };

std::string to_string(CurveProvenance p);

/// Symmetry-labeled potential energy curve, V relative to the reference
/// manifold energy, Hartree.
struct PotentialCurve {
    int symmetry_m = 0;
    std::string label; // trilobite, butterfly, dragonfly, firefly, gadfly, ...
    int n_ref = 0;
    std::vector<double> R;
    std::vector<double> V;
    CurveProvenance provenance = CurveProvenance::IonPair;
    bool includes_polarization = false;
};

} // namespace rydline
