#pragma once

#include <complex>

#include <Eigen/Dense>

namespace sdspectra {

using cplx = std::complex<double>;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;

// Symmetric eigensolver: Householder reduction to tridiagonal form followed by
// implicit-shift QL. Eigenvalues ascending; vectors are the matching columns.
struct SymmetricEigen {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;  // empty when not requested
};

SymmetricEigen symmetric_eigen(const Eigen::MatrixXd& a, bool want_vectors = true, int max_iter = 60);

// One-sided (Hestenes) Jacobi SVD. Singular values descending.
template <class Scalar>
struct JacobiSVD {
  Eigen::VectorXd sigma;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> U;  // m x n, columns scaled to unit norm (zero for sigma = 0)
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> V;  // n x n
  int sweeps = 0;
};

JacobiSVD<double> jacobi_svd(const Eigen::MatrixXd& a, int max_sweeps = 80);
JacobiSVD<cplx> jacobi_svd(const CMat& a, int max_sweeps = 80);

}  // namespace sdspectra
