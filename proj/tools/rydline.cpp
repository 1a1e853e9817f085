#include "rydline/angular.hpp"
#include "rydline/basis.hpp"
#include "rydline/constants.hpp"
#include "rydline/ionpair.hpp"
#include "rydline/output.hpp"
#include "rydline/pec.hpp"
#include "rydline/scattering.hpp"
#include "rydline/softcore.hpp"
#include "rydline/species.hpp"
#include "rydline/vibronic.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace rydline;

constexpr int exit_ok = 0;
constexpr int exit_config = 2;
constexpr int exit_numeric = 3;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string resolve_species_path(const std::string& spec) {
    namespace fs = std::filesystem;
    if (fs::exists(spec)) return spec;
    if (const char* data_dir = std::getenv("RYDLINE_DATA")) {
        std::string name = spec;
        for (auto& c : name) c = static_cast<char>(std::tolower(c));
        const fs::path candidate = fs::path(data_dir) / (name + ".json");
        if (fs::exists(candidate)) return candidate.string();
    }
    throw ConfigError("species_io: cannot resolve species '" + spec +
                      "' (not a file, not under RYDLINE_DATA)");
}

int parse_symmetry(const std::string& s) {
    if (s == "sigma") return 0;
    if (s == "pi") return 1;
    if (s == "delta") return 2;
    throw ConfigError("cli: unknown symmetry '" + s + "' (use sigma|pi|delta)");
}

std::vector<double> make_grid(double r_min, double r_max, std::size_t points) {
    if (!(r_max > r_min) || points < 2)
        throw ConfigError("cli: need r_max > r_min and points >= 2");
    std::vector<double> g(points);
    for (std::size_t i = 0; i < points; ++i)
        g[i] = r_min + (r_max - r_min) * static_cast<double>(i) / (points - 1);
    return g;
}

PhaseShiftModel model_for(const SpeciesData& species, int L, bool born) {
    if (born) return PhaseShiftModel::born(L, species.polarizability);
    return make_phase_model(species, L);
}

std::string join_args(int argc, char** argv) {
    std::ostringstream ss;
    for (int i = 0; i < argc; ++i) ss << (i ? " " : "") << argv[i];
    return ss.str();
}

struct CommonOpts {
    std::string species = "rb";
    int n = 30;
    std::string symmetry = "delta";
    std::vector<int> L_list{2};
    bool born = true;
    bool tables = false;
    double r_min = 50.0;
    double r_max = 0.0; // 0 = default 0.99 R_c
    std::size_t points = 200;
    bool with_polarization = false;
    bool with_defects = false;
    double mass_amu = 0.0; // 0 = species mass
    double wall = 30.0;
    std::string out_dir = "out";
    std::string units = "au";

    void add_to(CLI::App* cmd, bool with_grid = true) {
        cmd->add_option("--species", species, "species JSON path or name under RYDLINE_DATA");
        cmd->add_option("--n", n, "reference principal quantum number");
        cmd->add_option("--symmetry", symmetry, "sigma|pi|delta");
        cmd->add_option("--L", L_list, "included partial waves");
        cmd->add_flag("--born", born, "Born-approximation phase shifts");
        cmd->add_flag("--tables", tables, "tabulated phase shifts from the species config");
        if (with_grid) {
            cmd->add_option("--r-min", r_min, "grid start, a0");
            cmd->add_option("--r-max", r_max, "grid end, a0 (default just inside R_c)");
            cmd->add_option("--points", points, "grid size");
        }
        cmd->add_flag("--with-polarization", with_polarization,
                      "add the ion-atom -alpha/2R^4 term");
        cmd->add_flag("--with-defects", with_defects,
                      "include quantum-defect channels in the basis");
        cmd->add_option("--mass-amu", mass_amu, "override atomic mass, amu");
        cmd->add_option("--wall", wall, "hard-wall radius, a0");
        cmd->add_option("--out", out_dir, "output directory");
        cmd->add_option("--units", units, "au|ghz for printed summaries")
            ->check(CLI::IsMember({"au", "ghz"}));
    }

    SpeciesData load() const {
        SpeciesData s = load_species(resolve_species_path(species));
        if (mass_amu > 0.0) s.mass_amu = mass_amu;
        return s;
    }
    bool use_born() const { return !tables; }
    int M() const { return parse_symmetry(symmetry); }
    double grid_max(int n_ref) const {
        const double R_c = 2.0 * n_ref * n_ref;
        if (r_max <= 0.0) return 0.99 * R_c;
        if (r_max > R_c)
            throw ConfigError("cli: r-max beyond classical radius " +
                              std::to_string(static_cast<long>(R_c)));
        return r_max;
    }
    std::string fmt_energy(double hartree) const {
        std::ostringstream ss;
        ss << std::setprecision(6);
        if (units == "ghz")
            ss << hartree * constants::hartree_to_ghz << " GHz";
        else
            ss << hartree << " Hartree";
        return ss.str();
    }
    std::filesystem::path out(const std::string& file) const {
        std::filesystem::create_directories(out_dir);
        return std::filesystem::path(out_dir) / file;
    }
};

Basis make_basis(const CommonOpts& opt, const SpeciesData& species) {
    if (opt.with_defects) return Basis::with_defects(species, opt.n, opt.M());
    return Basis::single_manifold(opt.n, opt.M());
}

void emit_manifest(const CommonOpts& opt, const SpeciesData& species,
                   const std::string& cmdline,
                   const std::map<std::string, std::string>& extra = {}) {
    write_manifest(opt.out("manifest.json").string(), cmdline, species, extra);
}

int run_species(const CommonOpts& opt, const std::string& cmdline) {
    const SpeciesData s = opt.load();
    std::cout << "species " << s.name << ": alpha=" << s.polarizability
              << " a0^3, mass=" << s.mass_amu << " amu, m_AB=" << s.reduced_mass()
              << " m_e, defects=" << s.quantum_defects.size() << "\n";
    std::ofstream dump(opt.out("species.json"));
    dump << serialize_species(s) << "\n";
    emit_manifest(opt, s, cmdline);
    return exit_ok;
}

int run_pec(const CommonOpts& opt, const std::string& cmdline) {
    const SpeciesData species = opt.load();
    std::map<int, PhaseShiftModel> models;
    for (int L : opt.L_list) {
        if (L > 2)
            throw ConfigError("pec: closed-form contact elements cover L <= 2; use "
                              "softcore-check or ionpair for higher L");
        models.emplace(L, model_for(species, L, opt.use_born()));
    }
    const Basis basis = make_basis(opt, species);
    const auto grid = make_grid(opt.r_min, opt.grid_max(opt.n), opt.points);
    const AdiabaticResult result =
        adiabatic_curves(basis, grid, models, opt.with_polarization, species.polarizability);
    for (const auto& curve : result.curves) {
        const std::string file = "pec_" + curve.label + ".csv";
        write_curve_csv(opt.out(file).string(), curve,
                        {{"species", species.name},
                         {"shifts", opt.use_born() ? "born" : "tables"}});
        double vmin = 0.0;
        for (double v : curve.V) vmin = std::min(vmin, v);
        std::cout << curve.label << " (M=" << curve.symmetry_m << "): " << curve.R.size()
                  << " points, depth " << opt.fmt_energy(vmin) << " -> " << file << "\n";
    }
    emit_manifest(opt, species, cmdline);
    return exit_ok;
}

int run_ionpair(const CommonOpts& opt, const std::string& cmdline) {
    const SpeciesData species = opt.load();
    const auto grid = make_grid(opt.r_min, opt.grid_max(opt.n), opt.points);
    for (int L : opt.L_list) {
        if (L < 2) throw ConfigError("ionpair: the model covers L >= 2");
        const PhaseShiftModel model = model_for(species, L, opt.use_born());
        const PotentialCurve vc = model_curve(model, opt.n, grid);
        write_curve_csv(opt.out("ionpair_L" + std::to_string(L) + ".csv").string(), vc,
                        {{"species", species.name}});
        ExpansionTerms terms;
        terms.polarization = opt.with_polarization;
        const PotentialCurve uc =
            expansion_curve(species.polarizability, L, opt.n, grid, terms);
        write_curve_csv(opt.out("expansion_L" + std::to_string(L) + ".csv").string(), uc,
                        {{"species", species.name}});
        std::cout << "ion-pair L=" << L << ": V(" << grid.front()
                  << ") = " << opt.fmt_energy(vc.V.front()) << "\n";
    }
    emit_manifest(opt, species, cmdline);
    return exit_ok;
}

int run_charge(const CommonOpts& opt, const std::string& cmdline) {
    const SpeciesData species = opt.load();
    const auto grid = make_grid(opt.r_min, opt.grid_max(opt.n), opt.points);
    for (int L : opt.L_list) {
        if (L < 2 && opt.use_born())
            throw ConfigError("charge: Born phase shifts cover L >= 2 only");
        const PhaseShiftModel model = model_for(species, L, opt.use_born());
        std::ofstream out(opt.out("charge_L" + std::to_string(L) + ".csv"));
        out << std::setprecision(17) << "R,Q\n";
        double q_mid = 0.0;
        for (double R : grid) {
            const double q = effective_charge(model, opt.n, R);
            out << R << "," << q << "\n";
            q_mid = q;
        }
        std::cout << "charge L=" << L << ": Q = " << q_mid << " e at R = " << grid.back()
                  << "\n";
    }
    emit_manifest(opt, species, cmdline);
    return exit_ok;
}

int run_softcore(const CommonOpts& opt, double beta_in, const std::string& cmdline) {
    const SpeciesData species = opt.load();
    const double beta =
        beta_in > 0.0 ? beta_in : calibrate_beta(species.polarizability, 2);
    std::cout << "soft-core beta = " << beta << " a0\n";
    const Basis basis = Basis::single_manifold(opt.n, opt.M());
    const auto grid = make_grid(opt.r_min, opt.grid_max(opt.n), opt.points);
    const auto curves = softcore_curves(basis, grid, species.polarizability, beta);
    for (const auto& c : curves)
        write_curve_csv(opt.out("softcore_" + c.label + ".csv").string(), c,
                        {{"species", species.name}, {"beta", std::to_string(beta)}});

    std::map<int, PhaseShiftModel> models;
    models.emplace(2, model_for(species, 2, opt.use_born()));
    const AdiabaticResult contact = adiabatic_curves(basis, grid, models);
    write_curve_csv(opt.out("contact_dragonfly.csv").string(), contact.curves[0],
                    {{"species", species.name}});

    std::ofstream cmp(opt.out("compare_dragonfly.csv"));
    cmp << std::setprecision(17) << "R,V_softcore,V_contact,rel_dev\n";
    double worst = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double a = curves[0].V[i], b = contact.curves[0].V[i];
        const double rel = (a - b) / b;
        worst = std::max(worst, std::abs(rel));
        cmp << grid[i] << "," << a << "," << b << "," << rel << "\n";
    }
    std::cout << "dragonfly soft-core vs contact: max |rel dev| = " << worst << "\n";
    emit_manifest(opt, species, cmdline, {{"beta", std::to_string(beta)}});
    return exit_ok;
}

int run_wavefunction(const CommonOpts& opt, double R, double extent, std::size_t grid_pts,
                     const std::string& transform, const std::string& cmdline) {
    const SpeciesData species = opt.load();
    const int L = opt.L_list.front();
    if (L > 2) throw ConfigError("wavefunction: contact curves cover L <= 2");
    std::map<int, PhaseShiftModel> models;
    models.emplace(L, model_for(species, L, opt.use_born()));
    const Basis basis = make_basis(opt, species);
    const double R_hi = std::min(R * 1.01, opt.grid_max(opt.n));
    const AdiabaticResult result = adiabatic_curves(basis, {R * 0.99, R, R_hi}, models);
    const ElectronicState& state = result.states[0][1];

    WavefunctionTransform tr = WavefunctionTransform::Raw;
    if (transform == "sqrt") tr = WavefunctionTransform::SqrtAbs;
    else if (transform == "rho-sqrt") tr = WavefunctionTransform::RhoSqrtAbs;
    else if (transform != "raw") throw ConfigError("wavefunction: transform raw|sqrt|rho-sqrt");

    std::ofstream out(opt.out("wavefunction.csv"));
    out << std::setprecision(10) << "z,rho,value\n";
    for (std::size_t i = 0; i < grid_pts; ++i)
        for (std::size_t j = 0; j < grid_pts; ++j) {
            const double z = -extent + 2.0 * extent * static_cast<double>(i) / (grid_pts - 1);
            const double rho = extent * static_cast<double>(j) / (grid_pts - 1);
            out << z << "," << rho << "," << wavefunction_display(basis, state, z, rho, tr)
                << "\n";
        }
    std::cout << curve_label(L) << " state at R = " << R
              << ": eigenvalue = " << opt.fmt_energy(state.eigenvalue)
              << ", half-ring nodes = " << half_ring_nodes(basis, state, 20.0) << "\n";
    emit_manifest(opt, species, cmdline);
    return exit_ok;
}

int run_dipole(const CommonOpts& opt, const std::string& cmdline) {
    const SpeciesData species = opt.load();
    const int L = opt.L_list.front();
    if (L > 2) throw ConfigError("dipole: contact curves cover L <= 2");
    std::map<int, PhaseShiftModel> models;
    models.emplace(L, model_for(species, L, opt.use_born()));
    const Basis basis = make_basis(opt, species);
    const auto grid = make_grid(opt.r_min, opt.grid_max(opt.n), opt.points);
    const AdiabaticResult result = adiabatic_curves(basis, grid, models);

    std::ofstream out(opt.out("dipole_" + curve_label(L) + ".csv"));
    out << std::setprecision(10) << "R,d_au,d_debye\n";
    double dmax = 0.0;
    for (const auto& state : result.states[0]) {
        const double d = dipole_moment(basis, state);
        out << state.R << "," << d << "," << d * constants::au_dipole_to_debye << "\n";
        dmax = std::max(dmax, std::abs(d));
    }
    std::cout << curve_label(L) << " dipole: max |d| = "
              << dmax * constants::au_dipole_to_debye << " debye\n";
    emit_manifest(opt, species, cmdline);
    return exit_ok;
}

int run_vibr(const CommonOpts& opt, const std::string& curve_kind, double box_in,
             const std::string& cmdline) {
    const SpeciesData species = opt.load();
    const int L = opt.L_list.front();
    if (L < 2) throw ConfigError("vibr: series analysis covers L >= 2");
    const PhaseShiftModel model = model_for(species, L, opt.use_born());

    const double R_c = 2.0 * opt.n * opt.n;
    PotentialCurve curve;
    if (curve_kind == "ionpair") {
        curve = model_curve(model, opt.n, make_grid(opt.wall * 0.9, R_c, 2000));
    } else if (curve_kind == "diag") {
        if (L > 2) throw ConfigError("vibr: diagonalization curves cover L = 2");
        std::map<int, PhaseShiftModel> models;
        models.emplace(L, model);
        const Basis basis = make_basis(opt, species);
        AdiabaticResult result =
            adiabatic_curves(basis, make_grid(opt.wall * 0.9, 0.999 * R_c, 800), models);
        curve = std::move(result.curves[0]);
        curve.R.push_back(R_c);
        curve.V.push_back(0.0);
    } else {
        throw ConfigError("vibr: curve kind ionpair|diag");
    }

    const double box_R = box_in > 0.0 ? box_in : 1.5 * R_c;
    const VibrationalSpectrum spec =
        bound_states(curve, species.reduced_mass(), 0, opt.wall, box_R,
                     opt.with_polarization, species.polarizability);

    double abar;
    if (opt.use_born()) {
        abar = born_coefficient(L, species.polarizability);
    } else {
        // table-calibrated: delta / (pi k^2) at the orbit-scale momentum
        const double k_cal = 1.0 / opt.n;
        abar = model.phase_shift(k_cal) / (std::numbers::pi * k_cal * k_cal);
    }
    const SeriesConstants sc = series_constants(abar, L, opt.n, species.reduced_mass());
    const auto v_eff = effective_quantum_numbers(spec, sc);
    const auto gaps = scaled_gaps(spec, sc.rydberg_constant);

    write_spectrum_csv(opt.out("spectrum.csv").string(), spec, v_eff, gaps);
    write_constants_json(opt.out("constants.json").string(), sc);
    std::cout << "spectrum: " << spec.levels.size() << " bound levels (v_max prediction "
              << sc.v_max << "), ground " << opt.fmt_energy(spec.levels.front().energy)
              << "\n";
    emit_manifest(opt, species, cmdline, {{"curve", curve_kind}});
    return exit_ok;
}

int run_analyze(const CommonOpts& opt, const std::string& spectrum_path,
                const std::string& constants_path, double window) {
    const auto levels = read_spectrum_csv(spectrum_path);
    const SeriesConstants sc = read_constants_json(constants_path);
    VibrationalSpectrum spec;
    spec.m_AB = sc.m_AB;
    spec.levels = levels;

    const auto v_eff = effective_quantum_numbers(spec, sc);
    std::vector<int> v;
    for (const auto& lvl : levels) v.push_back(lvl.v);
    const DefectFit vfit = fit_defect(v, v_eff, window);

    const auto gaps = scaled_gaps(spec, sc.rydberg_constant);
    std::vector<int> v_upper(v.begin() + 1, v.end());
    const DefectFit gfit = fit_defect(v_upper, gaps, window);

    write_summary_json(opt.out("summary.json").string(), vfit, gfit, sc, levels.size());
    std::cout << "eta = " << vfit.eta << ", V slope = " << vfit.slope
              << " (R^2 = " << vfit.r_squared << "), delta-eps slope = " << gfit.slope
              << " (R^2 = " << gfit.r_squared << ")\n";
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"rydline: ultralong-range Rydberg molecule potential curves and spectra"};
    app.require_subcommand(1);
    const std::string cmdline = join_args(argc, argv);

    CommonOpts opt;
    double beta = 0.0;
    double wf_R = 200.0, wf_extent = 2000.0, vibr_box = 0.0, window = 0.3;
    std::size_t wf_points = 201;
    std::string wf_transform = "raw", vibr_curve = "ionpair";
    std::string spectrum_path, constants_path;

    auto* c_species = app.add_subcommand("species", "load and summarize a species config");
    opt.add_to(c_species, false);
    auto* c_pec = app.add_subcommand("pec", "diagonalization potential energy curves");
    opt.add_to(c_pec);
    auto* c_ion = app.add_subcommand("ionpair", "dressed ion-pair model and expansion curves");
    opt.add_to(c_ion);
    auto* c_charge = app.add_subcommand("charge", "effective fractional charge vs R");
    opt.add_to(c_charge);
    auto* c_soft = app.add_subcommand("softcore-check", "soft-core vs contact dragonfly");
    opt.add_to(c_soft);
    c_soft->add_option("--beta", beta, "soft-core radius (default: calibrated)");
    auto* c_wf = app.add_subcommand("wavefunction", "electronic wavefunction maps");
    opt.add_to(c_wf, false);
    c_wf->add_option("--R", wf_R, "perturber position, a0");
    c_wf->add_option("--extent", wf_extent, "half-width of the (z, rho) window, a0");
    c_wf->add_option("--grid-points", wf_points, "points per axis");
    c_wf->add_option("--transform", wf_transform, "raw|sqrt|rho-sqrt");
    auto* c_dip = app.add_subcommand("dipole", "dipole moment along a curve");
    opt.add_to(c_dip);
    auto* c_vibr = app.add_subcommand("vibr", "vibrational bound states");
    opt.add_to(c_vibr, false);
    c_vibr->add_option("--curve", vibr_curve, "ionpair|diag");
    c_vibr->add_option("--box", vibr_box, "outer box radius, a0 (default 3 n^2)");
    auto* c_ana = app.add_subcommand("analyze", "Rydberg-series analysis of a spectrum");
    c_ana->add_option("--spectrum", spectrum_path, "spectrum CSV")->required();
    c_ana->add_option("--constants", constants_path, "series constants JSON")->required();
    c_ana->add_option("--window", window, "top fraction of levels to fit");
    c_ana->add_option("--out", opt.out_dir, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_config;
    }

    try {
        if (c_species->parsed()) return run_species(opt, cmdline);
        if (c_pec->parsed()) return run_pec(opt, cmdline);
        if (c_ion->parsed()) return run_ionpair(opt, cmdline);
        if (c_charge->parsed()) return run_charge(opt, cmdline);
        if (c_soft->parsed()) return run_softcore(opt, beta, cmdline);
        if (c_wf->parsed())
            return run_wavefunction(opt, wf_R, wf_extent, wf_points, wf_transform, cmdline);
        if (c_dip->parsed()) return run_dipole(opt, cmdline);
        if (c_vibr->parsed()) return run_vibr(opt, vibr_curve, vibr_box, cmdline);
        if (c_ana->parsed()) return run_analyze(opt, spectrum_path, constants_path, window);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_config;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_config;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_config;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return exit_numeric;
    }
    return exit_config;
}
