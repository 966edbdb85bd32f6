#pragma once

#include <optional>
#include <vector>

#include "qdyn/linalg.hpp"

// Affine Bloch-space representation of a qubit map, r -> T r + d, together
// with the Choi/Kraus machinery used for complete-positivity tests.

namespace qdyn {

inline constexpr double kChoiPsdTol = -1e-10;
inline constexpr double kKrausRankTol = 1e-10;

struct AffineMap {
    double t = 0.0;
    Eigen::Matrix3d T = Eigen::Matrix3d::Identity();
    Eigen::Vector3d d = Eigen::Vector3d::Zero();

    // 4x4 representation acting on (1, r); first row is (1,0,0,0), the
    // shift sits in the first column.
    Eigen::Matrix4d affine() const;

    Eigen::Vector3d apply(const Eigen::Vector3d& r) const { return T * r + d; }
    Matrix2c apply(const Matrix2c& rho) const;

    double det() const { return T.determinant(); }

    static AffineMap identity(double t = 0.0) { return AffineMap{t, Eigen::Matrix3d::Identity(), Eigen::Vector3d::Zero()}; }
    static AffineMap from_affine(const Eigen::Matrix4d& m, double t = 0.0);
};

// a after b (composition a o b).
AffineMap compose(const AffineMap& a, const AffineMap& b);

// Exact affine inverse; throws std::domain_error when |det T| <= tol.
AffineMap inverse(const AffineMap& m, double tol = 1e-12);

// Map extracted from the unitary evolution of system x environment:
// Lambda^{ab} = (1/2) tr[(sigma^a x 1) U (sigma^b x rho_env) U^dag].
// The brute-force oracle every analytic map is tested against.
AffineMap map_from_unitary(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& rho_env);

// Choi matrix sum_ij |i><j| x Lambda(|i><j|); PSD iff the map is CP.
// Hermitian by construction, trace 2 for trace-preserving maps.
Matrix4c choi_of_map(const AffineMap& m);
double choi_min_eigenvalue(const AffineMap& m);

// Kraus operators from the Choi eigendecomposition. Throws on input that is
// not PSD within `psd_tol`; the number of operators equals the Choi rank at
// `rank_tol`.
std::vector<Matrix2c> kraus_decompose(const Matrix4c& choi, double rank_tol = kKrausRankTol,
                                      double psd_tol = kChoiPsdTol);

struct UnitalityCheck {
    bool unital = false;
    Eigen::Vector3d d = Eigen::Vector3d::Zero();
};

// unital iff ||d|| < 1e-12.
UnitalityCheck unitality_check(const AffineMap& m);

}  // namespace qdyn
