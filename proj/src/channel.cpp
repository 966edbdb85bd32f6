#include "qdyn/channel.hpp"

#include <stdexcept>

namespace qdyn {

Eigen::Matrix4d AffineMap::affine() const {
    Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
    m(0, 0) = 1.0;
    m.block<3, 1>(1, 0) = d;
    m.block<3, 3>(1, 1) = T;
    return m;
}

Matrix2c AffineMap::apply(const Matrix2c& rho) const {
    // act on general (possibly non-Hermitian) 2x2 input by linearity
    const Matrix2c h1 = 0.5 * (rho + rho.adjoint());
    const Matrix2c h2 = Complex(0, -0.5) * (rho - rho.adjoint());
    auto act = [this](const Matrix2c& h) -> Matrix2c {
        const double tr = h.trace().real();
        Eigen::Vector3d r;
        for (int i = 0; i < 3; ++i) r[i] = (h * pauli(i + 1)).trace().real();
        const Eigen::Vector3d rp = T * r + tr * d;
        Matrix2c out = 0.5 * tr * Matrix2c::Identity();
        for (int i = 0; i < 3; ++i) out += 0.5 * rp[i] * pauli(i + 1);
        return out;
    };
    return act(h1) + Complex(0, 1) * act(h2);
}

AffineMap AffineMap::from_affine(const Eigen::Matrix4d& m, double t) {
    AffineMap out;
    out.t = t;
    out.d = m.block<3, 1>(1, 0);
    out.T = m.block<3, 3>(1, 1);
    return out;
}

AffineMap compose(const AffineMap& a, const AffineMap& b) {
    AffineMap out;
    out.t = a.t;
    out.T = a.T * b.T;
    out.d = a.T * b.d + a.d;
    return out;
}

AffineMap inverse(const AffineMap& m, double tol) {
    if (std::abs(m.det()) <= tol)
        throw std::domain_error("inverse: map is singular at t = " + std::to_string(m.t));
    AffineMap out;
    out.t = m.t;
    out.T = m.T.inverse();
    out.d = -out.T * m.d;
    return out;
}

AffineMap map_from_unitary(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& rho_env) {
    const auto n = u.rows();
    if (u.cols() != n || (n != 4 && n != 8))
        throw std::invalid_argument("map_from_unitary: need a 4x4 or 8x8 unitary");
    if (rho_env.rows() * 2 != n)
        throw std::invalid_argument("map_from_unitary: environment dimension mismatch");
    const Eigen::MatrixXcd udag = u.adjoint();
    const Eigen::MatrixXcd id_env = Eigen::MatrixXcd::Identity(n / 2, n / 2);
    Eigen::Matrix4d lam;
    for (int a = 0; a < 4; ++a) {
        const Eigen::MatrixXcd oa = tensor(pauli(a), id_env);
        for (int b = 0; b < 4; ++b) {
            const Eigen::MatrixXcd ob = tensor(pauli(b), rho_env);
            lam(a, b) = 0.5 * (oa * u * ob * udag).trace().real();
        }
    }
    return AffineMap::from_affine(lam);
}

Matrix4c choi_of_map(const AffineMap& m) {
    Matrix4c c = Matrix4c::Zero();
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            Matrix2c e = Matrix2c::Zero();
            e(i, j) = 1.0;
            c.block<2, 2>(2 * i, 2 * j) = m.apply(e);
        }
    return c;
}

double choi_min_eigenvalue(const AffineMap& m) {
    Eigen::SelfAdjointEigenSolver<Matrix4c> es(choi_of_map(m), Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

std::vector<Matrix2c> kraus_decompose(const Matrix4c& choi, double rank_tol, double psd_tol) {
    if ((choi - choi.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
        throw std::invalid_argument("kraus_decompose: Choi matrix is not Hermitian");
    Eigen::SelfAdjointEigenSolver<Matrix4c> es(choi);
    const auto& w = es.eigenvalues();
    if (w.minCoeff() < psd_tol)
        throw std::invalid_argument("kraus_decompose: Choi matrix is not PSD");
    std::vector<Matrix2c> ops;
    for (Eigen::Index k = 3; k >= 0; --k) {  // descending eigenvalue order
        if (w[k] <= rank_tol) continue;
        const Eigen::Vector4cd v = es.eigenvectors().col(k);
        // With C = sum_ij |i><j| x Lambda(|i><j|), an eigenvector indexes as
        // v[2*in + out] = K[out, in].
        Matrix2c kk;
        kk << v[0], v[2], v[1], v[3];
        ops.push_back(std::sqrt(w[k]) * kk);
    }
    return ops;
}

UnitalityCheck unitality_check(const AffineMap& m) {
    return UnitalityCheck{m.d.norm() < 1e-12, m.d};
}

}  // namespace qdyn
