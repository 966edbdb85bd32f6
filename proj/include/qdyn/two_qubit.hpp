#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "qdyn/linalg.hpp"

// The two-qubit Hamiltonian family
//   H = omega_s Z x 1 + omega_e 1 x Z + kappa_se Y x X + kappa_es X x Y,
// its parity-block parametrization, analytic propagator, AB meronomic frame
// and the entanglement analysis.

namespace qdyn {

struct TwoQubitParams {
    double omega_s = 0.0;
    double omega_e = 0.0;
    double kappa_se = 0.0;
    double kappa_es = 0.0;
};

// Parity-block quantities: 2*delta_pm = omega_s +- omega_e,
// 2*kappa_pm = kappa_se +- kappa_es, omega_pm = 2 sqrt(delta^2 + kappa^2),
// tan(phi_pm) = kappa_pm / delta_pm.
struct BlockParams {
    double delta_p = 0.0, delta_m = 0.0;
    double kappa_p = 0.0, kappa_m = 0.0;
    double omega_p = 0.0, omega_m = 0.0;  // >= 0
    double phi_p = 0.0, phi_m = 0.0;      // principal angle in (-pi/2, pi/2]
    // set when delta < 0: the stored principal phi describes (-delta, -kappa)
    bool negative_delta_p = false, negative_delta_m = false;

    static BlockParams from_couplings(const TwoQubitParams& p);
    // direct (omega, phi) construction used by the figure presets; requires
    // omega >= 0 and phi in (-pi/2, pi/2]
    static BlockParams from_spectrum(double omega_p, double phi_p, double omega_m, double phi_m);

    TwoQubitParams couplings() const;
    Matrix4c hamiltonian() const;

    // exact direction cosines, valid for every sign of delta/kappa
    double cos_phi_p() const { return omega_p > 0 ? 2 * delta_p / omega_p : 1.0; }
    double cos_phi_m() const { return omega_m > 0 ? 2 * delta_m / omega_m : 1.0; }
    double sin_phi_p() const { return omega_p > 0 ? 2 * kappa_p / omega_p : 0.0; }
    double sin_phi_m() const { return omega_m > 0 ? 2 * kappa_m / omega_m : 0.0; }

    // sin^2(phi+) + sin^2(phi-), the strong-coupling measure
    double coupling_measure() const;
    bool degenerate(double rel_tol = 1e-9) const;
};

// alpha_pm(t) = cos w t - i cos(phi) sin w t, beta_pm(t) = sin(phi) sin w t,
// plus time derivatives (analytic).
struct Propagator2Q {
    Complex alpha_p, alpha_m;
    double beta_p, beta_m;
    Complex alpha_dot_p, alpha_dot_m;
    double beta_dot_p, beta_dot_m;
};

Propagator2Q propagator_functions(const BlockParams& b, double t);

// Analytic U(t): corners carry (alpha+, beta+), the inner block (alpha-, beta-).
Matrix4c propagator(const BlockParams& b, double t);

struct EigenPair {
    double value = 0.0;
    Eigen::Vector4cd state;
    int parity = 0;  // P_zz eigenvalue: +1 even block, -1 odd block
};

// Stationary states |0+>, |1+>, |0->, |1-> with eigenvalues +-omega_pm.
std::array<EigenPair, 4> eigensystem(const BlockParams& b);

struct ABFrame {
    double omega_a = 0.0, omega_b = 0.0;
    // columns map the AB computational basis (00,01,10,11) to the SE basis
    Matrix4c basis_change;
    bool degenerate = false;  // omega_b == 0
};

ABFrame to_ab_frame(const BlockParams& b);

struct EntanglementReport {
    bool is_perfect_entangler = false;
    double max_beta_sq = 0.0;  // max over t of max(beta+^2, beta-^2)
    std::optional<double> witness_time;  // first t where the convex-hull condition holds
    std::array<Complex, 4> bell_eigenvalues{};  // u+, u-, v+, v- at the witness (or t_max)
};

// Perfect-entangler analysis: the convex hull of the eigenvalues of
// m(U) = (Q^dag U Q)^T (Q^dag U Q) contains zero iff
// max(beta+^2, beta-^2) >= 1/2, i.e. iff max(|phi+|, |phi-|) >= pi/4.
EntanglementReport makhlin_analysis(const BlockParams& b, double t_max);

// Eigenvalues of m(U) at a given time, in the Bell basis.
std::array<Complex, 4> bell_eigenvalues(const BlockParams& b, double t);

// Concurrence of a two-qubit pure state.
double concurrence(const Eigen::Vector4cd& psi);

// Numerical search: max concurrence of U(t)|product> over random product
// states and a time grid, with optional deterministic local polish.
double max_product_concurrence(const BlockParams& b, int n_states, int n_times, double t_max,
                               std::uint64_t seed, bool polish = true);

}  // namespace qdyn
