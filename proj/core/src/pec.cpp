#include "rydline/pec.hpp"

#include "rydline/angular.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rydline {

double dwave_fnl(int l, double R, double nu) {
    return 6.0 + 3.0 * l * (l + 1) - 4.0 * R + 2.0 * (R / nu) * (R / nu);
}

double dwave_gl(int l) {
    return std::sqrt((2.0 * l + 1.0) * (l + 2.0) * (l + 1.0) * l * (l - 1.0));
}

std::vector<double> contact_weights(const Basis& basis, int L, double R) {
    const int M = std::abs(basis.m());
    std::vector<double> w(basis.size(), 0.0);
    if (M > L) return w;
    if (L < 0 || L > 2)
        throw std::invalid_argument(
            "contact_weights: closed-form contact elements cover L <= 2 only");
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const auto& c = basis.channel(i);
        const auto& rad = basis.radial(i);
        const double u = rad.value(R);
        const double up = rad.derivative(R);
        const double tl = 2.0 * c.l + 1.0;
        switch (L) {
        case 0:
            w[i] = std::sqrt(tl / 2.0) * u / R;
            break;
        case 1:
            if (M == 0) {
                w[i] = std::sqrt(1.5 * tl) * (up - u / R) / R;
            } else if (c.l >= 1) {
                w[i] = std::sqrt(0.75 * tl * c.l * (c.l + 1.0)) * u / (R * R);
            }
            break;
        case 2:
            if (M == 0) {
                w[i] = std::sqrt(5.0 / 8.0 * tl) *
                       (dwave_fnl(c.l, R, c.nu()) * u - 6.0 * R * up) / (R * R * R);
            } else if (M == 1 && c.l >= 1) {
                w[i] = std::sqrt(15.0 / 4.0 * tl * c.l * (c.l + 1.0)) * (R * up - 2.0 * u) /
                       (R * R * R);
            } else if (M == 2 && c.l >= 2) {
                w[i] = std::sqrt(15.0 / 16.0) * dwave_gl(c.l) * u / (R * R * R);
            }
            break;
        }
    }
    return w;
}

double contact_matrix_element(const Basis& basis, std::size_t i, std::size_t j, int L,
                              double R, const PhaseShiftModel& model) {
    const LocalMomentum lm = local_momentum(basis.n_ref(), R);
    if (lm.k <= 0.0)
        throw std::domain_error("contact_matrix_element: at the classical turning point");
    const std::vector<double> w = contact_weights(basis, L, R);
    return model.scattering_volume(lm.k) * w[i] * w[j];
}

Eigen::MatrixXd assemble_interaction(const Basis& basis, double R,
                                     const std::map<int, PhaseShiftModel>& models) {
    if (basis.size() == 0) throw std::invalid_argument("assemble_interaction: empty basis");
    const LocalMomentum lm = local_momentum(basis.n_ref(), R);
    if (lm.k <= 0.0)
        throw std::domain_error("assemble_interaction: at the classical turning point");

    const auto n = static_cast<Eigen::Index>(basis.size());
    Eigen::MatrixXd V = Eigen::MatrixXd::Zero(n, n);
    for (const auto& [L, model] : models) {
        const std::vector<double> wv = contact_weights(basis, L, R);
        Eigen::Map<const Eigen::VectorXd> w(wv.data(), n);
        V.noalias() += model.scattering_volume(lm.k) * w * w.transpose();
    }
    const double e_ref = -1.0 / (2.0 * static_cast<double>(basis.n_ref()) * basis.n_ref());
    for (Eigen::Index i = 0; i < n; ++i)
        V(i, i) += channel_energy(basis.channel(i)) - e_ref;
    return V;
}

std::string curve_label(int L) {
    switch (L) {
    case 0: return "trilobite";
    case 1: return "butterfly";
    case 2: return "dragonfly";
    case 3: return "firefly";
    case 4: return "gadfly";
    default: return "L=" + std::to_string(L);
    }
}

AdiabaticResult adiabatic_curves(const Basis& basis, const std::vector<double>& R_grid,
                                 const std::map<int, PhaseShiftModel>& models,
                                 bool include_polarization, double alpha) {
    if (R_grid.size() < 2)
        throw std::invalid_argument("adiabatic_curves: need at least two grid points");
    for (std::size_t i = 1; i < R_grid.size(); ++i)
        if (!(R_grid[i] > R_grid[i - 1]))
            throw std::invalid_argument("adiabatic_curves: R grid must be increasing");

    AdiabaticResult out;
    for (const auto& [L, model] : models) {
        (void)model;
        if (std::abs(basis.m()) > L)
            throw std::invalid_argument("adiabatic_curves: basis symmetry M exceeds L = " +
                                        std::to_string(L));
        PotentialCurve c;
        c.symmetry_m = basis.m();
        c.label = curve_label(L);
        c.n_ref = basis.n_ref();
        c.provenance = CurveProvenance::Diagonalization;
        c.includes_polarization = include_polarization;
        out.curves.push_back(std::move(c));
        out.states.emplace_back();
    }

    const auto n = static_cast<Eigen::Index>(basis.size());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    for (double R : R_grid) {
        solver.compute(assemble_interaction(basis, R, models));
        std::size_t ci = 0;
        for (const auto& [L, model] : models) {
            (void)model;
            const std::vector<double> wv = contact_weights(basis, L, R);
            Eigen::Map<const Eigen::VectorXd> w(wv.data(), n);
            const double wn = w.norm();
            Eigen::Index best = 0;
            double best_proj = -1.0;
            for (Eigen::Index j = 0; j < n; ++j) {
                const double proj =
                    wn > 0.0 ? std::abs(solver.eigenvectors().col(j).dot(w)) / wn : 0.0;
                if (proj > best_proj) {
                    best_proj = proj;
                    best = j;
                }
            }
            double V = solver.eigenvalues()(best);
            if (include_polarization) V += -alpha / (2.0 * R * R * R * R);
            out.curves[ci].R.push_back(R);
            out.curves[ci].V.push_back(V);
            ElectronicState st;
            st.R = R;
            st.eigenvalue = solver.eigenvalues()(best);
            st.coefficients.assign(solver.eigenvectors().col(best).data(),
                                   solver.eigenvectors().col(best).data() + n);
            out.states[ci].push_back(std::move(st));
            ++ci;
        }
    }

    // adiabatic continuation: align coefficient signs along R by overlap
    for (auto& branch : out.states)
        for (std::size_t i = 1; i < branch.size(); ++i) {
            double ov = 0.0;
            for (std::size_t a = 0; a < branch[i].coefficients.size(); ++a)
                ov += branch[i].coefficients[a] * branch[i - 1].coefficients[a];
            if (ov < 0.0)
                for (auto& cc : branch[i].coefficients) cc = -cc;
        }
    return out;
}

double wavefunction_value(const Basis& basis, const ElectronicState& state, double z,
                          double rho) {
    if (state.coefficients.size() != basis.size())
        throw std::invalid_argument("wavefunction_value: state does not match basis");
    const double r = std::hypot(z, rho);
    const int M = std::abs(basis.m());
    if (r == 0.0) return 0.0; // regular limit: u(r)/r -> finite only for l = 0, P fixed
    const double x = std::clamp(z / r, -1.0, 1.0);
    double psi = 0.0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const double c = state.coefficients[i];
        if (c == 0.0) continue;
        psi += c * (basis.radial(i).value(r) / r) *
               assoc_legendre_norm(basis.channel(i).l, M, x);
    }
    return psi / std::sqrt(2.0 * std::numbers::pi);
}

double wavefunction_display(const Basis& basis, const ElectronicState& state, double z,
                            double rho, WavefunctionTransform transform) {
    const double psi = wavefunction_value(basis, state, z, rho);
    switch (transform) {
    case WavefunctionTransform::Raw: return psi;
    case WavefunctionTransform::SqrtAbs: return std::sqrt(std::abs(psi));
    case WavefunctionTransform::RhoSqrtAbs: return std::abs(rho) * std::sqrt(std::abs(psi));
    }
    return psi;
}

int half_ring_nodes(const Basis& basis, const ElectronicState& state, double radius,
                    int samples) {
    if (samples < 8) throw std::invalid_argument("half_ring_nodes: too few samples");
    const double R = state.R;
    std::vector<double> vals(samples);
    double vmax = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double gamma = std::numbers::pi * (i + 0.5) / samples;
        vals[i] = wavefunction_value(basis, state, R + radius * std::cos(gamma),
                                     radius * std::sin(gamma));
        vmax = std::max(vmax, std::abs(vals[i]));
    }
    int changes = 0;
    double prev = 0.0;
    for (double v : vals) {
        if (std::abs(v) < 1e-9 * vmax) continue;
        if (prev != 0.0 && v * prev < 0.0) ++changes;
        prev = v;
    }
    // the internuclear axis itself is a nodal line when Psi vanishes there
    const double end1 = wavefunction_value(basis, state, R + radius, 0.0);
    const double end2 = wavefunction_value(basis, state, R - radius, 0.0);
    if (std::abs(end1) < 1e-9 * vmax && std::abs(end2) < 1e-9 * vmax) ++changes;
    return changes;
}

double dipole_moment(const Basis& basis, const ElectronicState& state) {
    if (state.coefficients.size() != basis.size())
        throw std::invalid_argument("dipole_moment: state does not match basis");
    double d = 0.0;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            const auto& a = basis.channel(i);
            const auto& b = basis.channel(j);
            if (std::abs(a.l - b.l) != 1) continue;
            const int lmin = std::min(a.l, b.l);
            const double ang = cos_theta_coupling(lmin, basis.m());
            const double rad = basis.radial(i).radial_dipole(basis.radial(j));
            d += 2.0 * state.coefficients[i] * state.coefficients[j] * ang * rad;
        }
    return d;
}

} // namespace rydline
