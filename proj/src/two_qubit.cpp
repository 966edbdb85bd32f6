#include "qdyn/two_qubit.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace qdyn {

namespace {

constexpr double kPi = 3.14159265358979323846;

// full-range block angle theta = atan2(kappa, delta); the stored principal
// phi plus sign flag is derived from it
void principal_angle(double kappa, double delta, double& phi, bool& neg) {
    const double theta = std::atan2(kappa, delta);
    if (theta > kPi / 2 || theta <= -kPi / 2) {
        neg = true;
        phi = (theta > 0) ? theta - kPi : theta + kPi;
    } else {
        neg = false;
        phi = theta;
    }
}

}  // namespace

BlockParams BlockParams::from_couplings(const TwoQubitParams& p) {
    BlockParams b;
    b.delta_p = 0.5 * (p.omega_s + p.omega_e);
    b.delta_m = 0.5 * (p.omega_s - p.omega_e);
    b.kappa_p = 0.5 * (p.kappa_se + p.kappa_es);
    b.kappa_m = 0.5 * (p.kappa_se - p.kappa_es);
    b.omega_p = 2.0 * std::hypot(b.delta_p, b.kappa_p);
    b.omega_m = 2.0 * std::hypot(b.delta_m, b.kappa_m);
    principal_angle(b.kappa_p, b.delta_p, b.phi_p, b.negative_delta_p);
    principal_angle(b.kappa_m, b.delta_m, b.phi_m, b.negative_delta_m);
    return b;
}

BlockParams BlockParams::from_spectrum(double omega_p, double phi_p, double omega_m, double phi_m) {
    if (omega_p < 0 || omega_m < 0)
        throw std::invalid_argument("from_spectrum: omega must be >= 0");
    if (phi_p <= -kPi / 2 || phi_p > kPi / 2 || phi_m <= -kPi / 2 || phi_m > kPi / 2)
        throw std::invalid_argument("from_spectrum: phi must lie in (-pi/2, pi/2]");
    BlockParams b;
    b.omega_p = omega_p;
    b.omega_m = omega_m;
    b.phi_p = phi_p;
    b.phi_m = phi_m;
    b.delta_p = 0.5 * omega_p * std::cos(phi_p);
    b.kappa_p = 0.5 * omega_p * std::sin(phi_p);
    b.delta_m = 0.5 * omega_m * std::cos(phi_m);
    b.kappa_m = 0.5 * omega_m * std::sin(phi_m);
    return b;
}

TwoQubitParams BlockParams::couplings() const {
    return TwoQubitParams{delta_p + delta_m, delta_p - delta_m, kappa_p + kappa_m,
                          kappa_p - kappa_m};
}

Matrix4c BlockParams::hamiltonian() const {
    const TwoQubitParams p = couplings();
    Matrix4c h = Matrix4c::Zero();
    h += p.omega_s * tensor(pauli(Pauli::Z), pauli(Pauli::I));
    h += p.omega_e * tensor(pauli(Pauli::I), pauli(Pauli::Z));
    h += p.kappa_se * tensor(pauli(Pauli::Y), pauli(Pauli::X));
    h += p.kappa_es * tensor(pauli(Pauli::X), pauli(Pauli::Y));
    return h;
}

double BlockParams::coupling_measure() const {
    const double sp = sin_phi_p(), sm = sin_phi_m();
    return sp * sp + sm * sm;
}

bool BlockParams::degenerate(double rel_tol) const {
    const double scale = std::max({omega_p, omega_m, 1e-300});
    return std::abs(omega_p - omega_m) <= rel_tol * scale;
}

Propagator2Q propagator_functions(const BlockParams& b, double t) {
    Propagator2Q f;
    const double cp = b.cos_phi_p(), sp = b.sin_phi_p();
    const double cm = b.cos_phi_m(), sm = b.sin_phi_m();
    const double swp = std::sin(b.omega_p * t), cwp = std::cos(b.omega_p * t);
    const double swm = std::sin(b.omega_m * t), cwm = std::cos(b.omega_m * t);
    f.alpha_p = Complex(cwp, -cp * swp);
    f.alpha_m = Complex(cwm, -cm * swm);
    f.beta_p = sp * swp;
    f.beta_m = sm * swm;
    f.alpha_dot_p = b.omega_p * Complex(-swp, -cp * cwp);
    f.alpha_dot_m = b.omega_m * Complex(-swm, -cm * cwm);
    f.beta_dot_p = b.omega_p * sp * cwp;
    f.beta_dot_m = b.omega_m * sm * cwm;
    return f;
}

Matrix4c propagator(const BlockParams& b, double t) {
    const Propagator2Q f = propagator_functions(b, t);
    Matrix4c u = Matrix4c::Zero();
    u(0, 0) = f.alpha_p;
    u(0, 3) = -f.beta_p;
    u(1, 1) = f.alpha_m;
    u(1, 2) = -f.beta_m;
    u(2, 1) = f.beta_m;
    u(2, 2) = std::conj(f.alpha_m);
    u(3, 0) = f.beta_p;
    u(3, 3) = std::conj(f.alpha_p);
    return u;
}

std::array<EigenPair, 4> eigensystem(const BlockParams& b) {
    const double theta_p = std::atan2(b.kappa_p, b.delta_p);
    const double theta_m = std::atan2(b.kappa_m, b.delta_m);
    const Complex i(0, 1);
    std::array<EigenPair, 4> out;
    // even block spans {|00>, |11>}, odd block spans {|01>, |10>}
    out[0].value = b.omega_p;
    out[0].parity = +1;
    out[0].state << std::cos(theta_p / 2), 0, 0, i * std::sin(theta_p / 2);
    out[1].value = -b.omega_p;
    out[1].parity = +1;
    out[1].state << std::sin(theta_p / 2), 0, 0, -i * std::cos(theta_p / 2);
    out[2].value = b.omega_m;
    out[2].parity = -1;
    out[2].state << 0, std::cos(theta_m / 2), i * std::sin(theta_m / 2), 0;
    out[3].value = -b.omega_m;
    out[3].parity = -1;
    out[3].state << 0, std::sin(theta_m / 2), -i * std::cos(theta_m / 2), 0;
    return out;
}

ABFrame to_ab_frame(const BlockParams& b) {
    const auto es = eigensystem(b);
    ABFrame f;
    f.omega_a = 0.5 * (b.omega_p + b.omega_m);
    f.omega_b = 0.5 * (b.omega_p - b.omega_m);
    f.degenerate = b.degenerate();
    // |0A 0B> = |0+>, |0A 1B> = |0->, |1A 0B> = |1->, |1A 1B> = |1+>
    f.basis_change.col(0) = es[0].state;
    f.basis_change.col(1) = es[2].state;
    f.basis_change.col(2) = es[3].state;
    f.basis_change.col(3) = es[1].state;
    return f;
}

std::array<Complex, 4> bell_eigenvalues(const BlockParams& b, double t) {
    auto pair = [](double m) {
        const double im = std::sqrt(std::max(0.0, 1.0 - m * m));
        return std::array<Complex, 2>{Complex(m, im), Complex(m, -im)};
    };
    const Propagator2Q f = propagator_functions(b, t);
    const double mp = std::norm(f.alpha_p) - f.beta_p * f.beta_p;
    const double mm = std::norm(f.alpha_m) - f.beta_m * f.beta_m;
    const auto u = pair(mp), v = pair(mm);
    return {u[0], u[1], v[0], v[1]};
}

EntanglementReport makhlin_analysis(const BlockParams& b, double t_max) {
    if (t_max <= 0) throw std::invalid_argument("makhlin_analysis: t_max must be > 0");
    EntanglementReport r;
    const double sp2 = b.sin_phi_p() * b.sin_phi_p();
    const double sm2 = b.sin_phi_m() * b.sin_phi_m();
    r.is_perfect_entangler = std::max(std::abs(b.phi_p), std::abs(b.phi_m)) >= kPi / 4 - 1e-15;

    auto beta_max = [&](double s2, double omega) {
        if (omega * t_max >= kPi / 2) return s2;
        const double s = std::sin(omega * t_max);
        return s2 * s * s;
    };
    r.max_beta_sq = std::max(beta_max(sp2, b.omega_p), beta_max(sm2, b.omega_m));

    auto first_cross = [&](double s2, double omega) -> std::optional<double> {
        if (s2 < 0.5 || omega <= 0) return std::nullopt;
        const double tw = std::asin(std::sqrt(0.5 / s2)) / omega;
        if (tw <= t_max) return tw;
        return std::nullopt;
    };
    const auto wp = first_cross(sp2, b.omega_p);
    const auto wm = first_cross(sm2, b.omega_m);
    if (wp && wm)
        r.witness_time = std::min(*wp, *wm);
    else if (wp)
        r.witness_time = wp;
    else if (wm)
        r.witness_time = wm;

    r.bell_eigenvalues = bell_eigenvalues(b, r.witness_time.value_or(t_max));
    return r;
}

double concurrence(const Eigen::Vector4cd& psi) {
    return 2.0 * std::abs(psi[0] * psi[3] - psi[1] * psi[2]);
}

namespace {

// concurrence of U(t)|psi1 x psi2| using the block structure of U
double evolved_concurrence(const Propagator2Q& f, const Eigen::Vector2cd& s1,
                           const Eigen::Vector2cd& s2) {
    const Complex ac = s1[0] * s2[0], ad = s1[0] * s2[1];
    const Complex bc = s1[1] * s2[0], bd = s1[1] * s2[1];
    const Complex e00 = f.alpha_p * ac - f.beta_p * bd;
    const Complex e11 = f.beta_p * ac + std::conj(f.alpha_p) * bd;
    const Complex e01 = f.alpha_m * ad - f.beta_m * bc;
    const Complex e10 = f.beta_m * ad + std::conj(f.alpha_m) * bc;
    return 2.0 * std::abs(e00 * e11 - e01 * e10);
}

Eigen::Vector2cd bloch_state(double theta, double phi) {
    return {std::cos(theta / 2), std::sin(theta / 2) * std::exp(Complex(0, phi))};
}

}  // namespace

double max_product_concurrence(const BlockParams& b, int n_states, int n_times, double t_max,
                               std::uint64_t seed, bool polish) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u01(0.0, 1.0);

    struct Point {
        double t, th1, ph1, th2, ph2;
    };
    double best = 0.0;
    Point best_pt{0, 0, 0, 0, 0};

    std::vector<std::array<double, 4>> states(static_cast<size_t>(n_states));
    for (auto& s : states) {
        s = {std::acos(2 * u01(rng) - 1), 2 * kPi * u01(rng), std::acos(2 * u01(rng) - 1),
             2 * kPi * u01(rng)};
    }
    for (int k = 0; k < n_times; ++k) {
        const double t = t_max * (k + 0.5) / n_times;
        const Propagator2Q f = propagator_functions(b, t);
        for (const auto& s : states) {
            const double c = evolved_concurrence(f, bloch_state(s[0], s[1]), bloch_state(s[2], s[3]));
            if (c > best) {
                best = c;
                best_pt = {t, s[0], s[1], s[2], s[3]};
            }
        }
    }
    if (!polish || best >= 1.0 - 1e-12) return std::min(best, 1.0);

    // deterministic pattern search over (t, theta1, phi1, theta2, phi2)
    auto eval = [&](const Point& p) {
        const Propagator2Q f = propagator_functions(b, p.t);
        return evolved_concurrence(f, bloch_state(p.th1, p.ph1), bloch_state(p.th2, p.ph2));
    };
    Point p = best_pt;
    double step = 0.2;
    for (int iter = 0; iter < 200 && step > 1e-9; ++iter) {
        bool improved = false;
        for (int dim = 0; dim < 5; ++dim) {
            for (double sgn : {+1.0, -1.0}) {
                Point q = p;
                double* coords[5] = {&q.t, &q.th1, &q.ph1, &q.th2, &q.ph2};
                *coords[dim] += sgn * step;
                if (q.t < 0) continue;
                const double c = eval(q);
                if (c > best) {
                    best = c;
                    p = q;
                    improved = true;
                }
            }
        }
        if (!improved) step *= 0.5;
    }
    return std::min(best, 1.0);
}

}  // namespace qdyn
