#pragma once

#include "rydline/curve.hpp"
#include "rydline/ionpair.hpp"
#include "rydline/species.hpp"
#include "rydline/vibronic.hpp"

#include <map>
#include <string>
#include <vector>

namespace rydline {

/// Curve CSV: `# key: value` header comments, then R,V_hartree,V_GHz rows.
void write_curve_csv(const std::string& path, const PotentialCurve& curve,
                     const std::map<std::string, std::string>& metadata = {});

/// Spectrum CSV: columns v, epsilon_hartree, epsilon_GHz, V_eff, delta_eps
/// (delta_eps empty for v = 0).
void write_spectrum_csv(const std::string& path, const VibrationalSpectrum& spectrum,
                        const std::vector<double>& v_eff,
                        const std::vector<double>& delta_eps);

/// Levels back from a spectrum CSV (v and epsilon_hartree columns).
std::vector<VibrationalLevel> read_spectrum_csv(const std::string& path);

/// Series constants as JSON (consumed by `analyze`).
void write_constants_json(const std::string& path, const SeriesConstants& constants);
SeriesConstants read_constants_json(const std::string& path);

/// Spectrum summary JSON: defect fit, slopes, R^2, v_max comparison.
void write_summary_json(const std::string& path, const DefectFit& v_fit,
                        const DefectFit& gap_fit, const SeriesConstants& constants,
                        std::size_t level_count);

/// FNV-1a hash of a string, hex-encoded; used for manifest provenance.
std::string content_hash(const std::string& text);

/// Reproducibility manifest: config hash, species hash, library version.
void write_manifest(const std::string& path, const std::string& config_text,
                    const SpeciesData& species,
                    const std::map<std::string, std::string>& extra = {});

/// Read a whole file (for hashing configs).
std::string slurp_file(const std::string& path);

} // namespace rydline
