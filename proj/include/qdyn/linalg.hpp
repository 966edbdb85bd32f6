#pragma once

#include <array>
#include <complex>
#include <Eigen/Dense>

// Dense complex linear algebra for one to three qubits: Pauli operators,
// Kronecker products, Hermitian matrix exponentials and environment traces.
// Ordering convention used everywhere in this repo: the SYSTEM qubit is the
// leftmost tensor factor, and Pauli-basis indices run (1, x, y, z).

namespace qdyn {

using Complex = std::complex<double>;
using Matrix2c = Eigen::Matrix2cd;
using Matrix4c = Eigen::Matrix4cd;
using Matrix8c = Eigen::Matrix<Complex, 8, 8>;

inline constexpr double kHermitianTol = 1e-12;

// Pauli index a in {0, x, y, z}; parity pi_a satisfies pi_0 = pi_z = 0,
// pi_x = pi_y = 1 (commutation with Z).
enum class Pauli : int { I = 0, X = 1, Y = 2, Z = 3 };

const Matrix2c& pauli(int a);
inline const Matrix2c& pauli(Pauli a) { return pauli(static_cast<int>(a)); }
int pauli_parity(int a);

// Pauli string over n sites (n = 1..3), one index per site.
struct PauliString {
    std::array<int, 3> index{0, 0, 0};
    int sites = 1;

    int parity() const;
    Eigen::MatrixXcd matrix() const;
};

// Kronecker product, row-major with the leftmost factor as the slowest index.
Eigen::MatrixXcd tensor(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

// exp(-i h t) for Hermitian h, via eigendecomposition. Throws
// std::invalid_argument if h is not Hermitian within kHermitianTol.
Eigen::MatrixXcd expm_hermitian(const Eigen::MatrixXcd& h, double t);

// Reduced system state: trace over everything but the leftmost qubit.
// Accepts 4x4 or 8x8 input.
Matrix2c partial_trace_env(const Eigen::MatrixXcd& m);

// Bloch representation rho = (1 + r.sigma)/2. bloch_to_density throws on
// ||r|| > 1 + 1e-12.
Matrix2c bloch_to_density(const Eigen::Vector3d& r);
Eigen::Vector3d density_to_bloch(const Matrix2c& rho);

double purity(const Matrix2c& rho);

// Commutator norm ||[a,b]||_max, used by the symmetry audits.
double commutator_norm(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

}  // namespace qdyn
