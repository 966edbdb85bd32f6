#include "qdyn/linalg.hpp"

#include <stdexcept>

namespace qdyn {

const Matrix2c& pauli(int a) {
    static const std::array<Matrix2c, 4> sigma = [] {
        std::array<Matrix2c, 4> s;
        s[0] << 1, 0, 0, 1;
        s[1] << 0, 1, 1, 0;
        s[2] << 0, Complex(0, -1), Complex(0, 1), 0;
        s[3] << 1, 0, 0, -1;
        return s;
    }();
    if (a < 0 || a > 3) throw std::invalid_argument("pauli: index out of range");
    return sigma[static_cast<size_t>(a)];
}

int pauli_parity(int a) {
    if (a < 0 || a > 3) throw std::invalid_argument("pauli_parity: index out of range");
    return (a == 1 || a == 2) ? 1 : 0;
}

int PauliString::parity() const {
    int p = 0;
    for (int i = 0; i < sites; ++i) p += pauli_parity(index[static_cast<size_t>(i)]);
    return p % 2;
}

Eigen::MatrixXcd PauliString::matrix() const {
    if (sites < 1 || sites > 3) throw std::invalid_argument("PauliString: 1..3 sites");
    Eigen::MatrixXcd m = pauli(index[0]);
    for (int i = 1; i < sites; ++i) m = tensor(m, pauli(index[static_cast<size_t>(i)]));
    return m;
}

Eigen::MatrixXcd tensor(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    const auto ra = a.rows(), ca = a.cols(), rb = b.rows(), cb = b.cols();
    if (ra == 0 || rb == 0) throw std::invalid_argument("tensor: empty factor");
    Eigen::MatrixXcd out(ra * rb, ca * cb);
    for (Eigen::Index i = 0; i < ra; ++i)
        for (Eigen::Index j = 0; j < ca; ++j)
            out.block(i * rb, j * cb, rb, cb) = a(i, j) * b;
    return out;
}

Eigen::MatrixXcd expm_hermitian(const Eigen::MatrixXcd& h, double t) {
    if (h.rows() != h.cols()) throw std::invalid_argument("expm_hermitian: square input required");
    if ((h - h.adjoint()).cwiseAbs().maxCoeff() > kHermitianTol)
        throw std::invalid_argument("expm_hermitian: input is not Hermitian");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    const auto& w = es.eigenvalues();
    const auto& v = es.eigenvectors();
    Eigen::VectorXcd phases(w.size());
    for (Eigen::Index k = 0; k < w.size(); ++k)
        phases[k] = std::exp(Complex(0, -w[k] * t));
    return v * phases.asDiagonal() * v.adjoint();
}

Matrix2c partial_trace_env(const Eigen::MatrixXcd& m) {
    const auto n = m.rows();
    if (m.cols() != n || (n != 4 && n != 8))
        throw std::invalid_argument("partial_trace_env: need 4x4 or 8x8 input");
    const Eigen::Index de = n / 2;
    Matrix2c out = Matrix2c::Zero();
    for (Eigen::Index i = 0; i < 2; ++i)
        for (Eigen::Index j = 0; j < 2; ++j)
            for (Eigen::Index k = 0; k < de; ++k)
                out(i, j) += m(i * de + k, j * de + k);
    return out;
}

Matrix2c bloch_to_density(const Eigen::Vector3d& r) {
    if (r.norm() > 1.0 + 1e-12)
        throw std::invalid_argument("bloch_to_density: unphysical state, ||r|| > 1");
    Matrix2c rho = 0.5 * Matrix2c::Identity();
    for (int i = 0; i < 3; ++i) rho += 0.5 * r[i] * pauli(i + 1);
    return rho;
}

Eigen::Vector3d density_to_bloch(const Matrix2c& rho) {
    Eigen::Vector3d r;
    for (int i = 0; i < 3; ++i) r[i] = (rho * pauli(i + 1)).trace().real();
    return r;
}

double purity(const Matrix2c& rho) { return (rho * rho).trace().real(); }

double commutator_norm(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    return (a * b - b * a).cwiseAbs().maxCoeff();
}

}  // namespace qdyn
