#include "rydline/softcore.hpp"

#include "rydline/angular.hpp"
#include "rydline/pec.hpp"
#include "rydline/quadrature.hpp"
#include "rydline/scattering.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

namespace rydline {

namespace {

QuadratureRule radial_rule(double R, double r_max, int refine) {
    std::set<double> edge_set{0.0, 5.0, 20.0, 50.0};
    const double mid_hi = std::max(R - 60.0, 60.0);
    for (int i = 0; i <= 25; ++i) edge_set.insert(50.0 + (mid_hi - 50.0) * i / 25.0);
    for (double off : {-60.0, -40.0, -25.0, -15.0, -8.0, -4.0, -2.0, -1.0, 0.0, 1.0, 2.0,
                       4.0, 8.0, 15.0, 25.0, 40.0, 60.0})
        edge_set.insert(R + off);
    for (int i = 0; i <= 30; ++i)
        edge_set.insert(R + 60.0 + (r_max - R - 60.0) * i / 30.0);
    std::vector<double> edges;
    for (double e : edge_set)
        if (e >= 0.0 && e <= r_max) edges.push_back(e);
    return gauss_panels(edges, 12u << refine);
}

QuadratureRule angular_rule(int refine) {
    // t = 1 - cos(theta), geometric panels packed toward the perturber
    std::vector<double> edges{0.0};
    const int npanels = 40;
    for (int i = 0; i <= npanels; ++i)
        edges.push_back(1e-6 * std::pow(2.0e6, static_cast<double>(i) / npanels));
    return gauss_panels(edges, 10u << refine);
}

Eigen::MatrixXd softcore_subset(const Basis& basis, const std::vector<std::size_t>& idx,
                                double R, double alpha, double beta, int refine) {
    const double r_max = basis.radial(0).r_outer();
    const QuadratureRule rr = radial_rule(R, r_max, refine);
    const QuadratureRule tr = angular_rule(refine);
    const auto nch = static_cast<Eigen::Index>(idx.size());
    const auto nr = static_cast<Eigen::Index>(rr.nodes.size());
    const int M = std::abs(basis.m());

    Eigen::MatrixXd A(nr, nch); // u_a(r)
    for (Eigen::Index a = 0; a < nch; ++a)
        for (Eigen::Index r = 0; r < nr; ++r)
            A(r, a) = basis.radial(idx[a]).value(rr.nodes[r]);

    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(nch, nch);
    Eigen::VectorXd q(nr), p(nch);
    const double b4 = beta * beta * beta * beta;
    for (std::size_t ti = 0; ti < tr.nodes.size(); ++ti) {
        const double t = tr.nodes[ti];
        const double x = 1.0 - t;
        for (Eigen::Index r = 0; r < nr; ++r) {
            const double rv = rr.nodes[r];
            const double xi2 = (rv - R) * (rv - R) + 2.0 * rv * R * t;
            q(r) = rr.weights[r] * (-0.5 * alpha / (b4 + xi2 * xi2));
        }
        for (Eigen::Index a = 0; a < nch; ++a)
            p(a) = assoc_legendre_norm(basis.channel(idx[a]).l, M, x);
        const Eigen::MatrixXd B = A.transpose() * q.asDiagonal() * A;
        out.noalias() += tr.weights[ti] * (p * p.transpose()).cwiseProduct(B);
    }
    // exact symmetry
    return 0.5 * (out + out.transpose());
}

} // namespace

double softcore_matrix_element(const Basis& basis, std::size_t i, std::size_t j, double R,
                               double alpha, double beta) {
    if (i >= basis.size() || j >= basis.size())
        throw std::out_of_range("softcore_matrix_element: channel index");
    if (!(beta > 0.0)) throw std::invalid_argument("softcore_matrix_element: beta > 0 required");
    std::vector<std::size_t> idx{i};
    if (j != i) idx.push_back(j);
    double prev = softcore_subset(basis, idx, R, alpha, beta, 0)(0, idx.size() - 1);
    for (int refine = 1; refine <= 3; ++refine) {
        const double cur = softcore_subset(basis, idx, R, alpha, beta, refine)(0, idx.size() - 1);
        if (std::abs(cur - prev) < 1e-8) return cur;
        prev = cur;
    }
    throw std::runtime_error("softcore_matrix_element: quadrature did not converge");
}

Eigen::MatrixXd softcore_matrix(const Basis& basis, double R, double alpha, double beta,
                                int refine) {
    std::vector<std::size_t> idx(basis.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    return softcore_subset(basis, idx, R, alpha, beta, refine);
}

double softcore_born_phase(double alpha, double beta, int L, double k) {
    if (!(k > 0.0)) throw std::domain_error("softcore_born_phase: k must be positive");
    const double b4 = beta * beta * beta * beta;
    const double r_cut = 3000.0;
    const auto integrand = [&](double r) {
        const double j = std::sph_bessel(static_cast<unsigned>(L), k * r);
        return j * j * (-0.5 * alpha / (b4 + r * r * r * r)) * r * r;
    };
    return -2.0 * k * simpson(integrand, 1e-8, r_cut, 400000);
}

double calibrate_beta(double alpha, int L, double k_match, double mismatch) {
    const double target = std::numbers::pi * born_coefficient(L, alpha) * k_match * k_match;
    const auto excess = [&](double beta) {
        return softcore_born_phase(alpha, beta, L, k_match) / target - (1.0 - mismatch);
    };
    double lo = 0.5, hi = 40.0;
    if (excess(lo) < 0.0 || excess(hi) > 0.0)
        throw std::runtime_error("calibrate_beta: bracket failed");
    for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        (excess(mid) > 0.0 ? lo : hi) = mid;
        if (hi - lo < 1e-6) break;
    }
    return 0.5 * (lo + hi);
}

std::vector<PotentialCurve> softcore_curves(const Basis& basis,
                                            const std::vector<double>& R_grid, double alpha,
                                            double beta, int n_curves) {
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (basis.channel(i).n != basis.n_ref() || basis.channel(i).mu != 0.0)
            throw std::invalid_argument(
                "softcore_curves: degenerate perturbation theory needs a single manifold");
    n_curves = std::min<int>(n_curves, static_cast<int>(basis.size()));

    std::vector<PotentialCurve> curves(n_curves);
    for (int i = 0; i < n_curves; ++i) {
        curves[i].symmetry_m = basis.m();
        curves[i].label = curve_label(std::abs(basis.m()) + i);
        curves[i].n_ref = basis.n_ref();
        curves[i].provenance = CurveProvenance::SoftCore;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    for (double R : R_grid) {
        solver.compute(softcore_matrix(basis, R, alpha, beta));
        for (int i = 0; i < n_curves; ++i) {
            curves[i].R.push_back(R);
            curves[i].V.push_back(solver.eigenvalues()(i));
        }
    }
    return curves;
}

} // namespace rydline
