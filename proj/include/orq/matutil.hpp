#pragma once

#include <Eigen/Dense>
#include <complex>
#include <random>

namespace orq {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline Matrix adjoint(const Matrix& a) { return a.adjoint(); }

inline Matrix hermitize(const Matrix& a) { return 0.5 * (a + a.adjoint()); }

/// Hilbert-Schmidt inner product <a,b> = Tr(a* b).
inline Complex hs_inner(const Matrix& a, const Matrix& b) {
    return (a.adjoint() * b).trace();
}

inline double hs_norm(const Matrix& a) { return a.norm(); }

/// Operator (spectral) norm.
inline double op_norm(const Matrix& a) {
    if (a.size() == 0) return 0.0;
    Eigen::JacobiSVD<Matrix> svd(a);
    return svd.singularValues()(0);
}

/// Column-major vectorization; vec(AXB) = (B^T (x) A) vec(X).
inline Vector vec(const Matrix& x) {
    return Eigen::Map<const Vector>(x.data(), x.size());
}

inline Matrix unvec(const Vector& v, Eigen::Index rows, Eigen::Index cols) {
    return Eigen::Map<const Matrix>(v.data(), rows, cols);
}

Matrix kron(const Matrix& a, const Matrix& b);

/// f applied to a Hermitian matrix through its spectral decomposition.
Matrix hermitian_function(const Matrix& a,
                          const std::function<Complex(double)>& f);

/// Real power a^p of a positive definite Hermitian matrix.
Matrix hermitian_power(const Matrix& a, double p);

/// Complex power a^z (entrywise exp(z log lambda) on the spectrum).
Matrix hermitian_cpower(const Matrix& a, Complex z);

/// Projection onto the PSD cone: clip negative eigenvalues of herm(a).
Matrix psd_clip(const Matrix& a);

double min_eigenvalue(const Matrix& hermitian);

// ---------------------------------------------------------------------------
// Seeded random matrix utilities. All sampling is funneled through Rng so a
// fixed seed reproduces every fixture exactly.

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(gen_);
    }
    double gauss() { return normal_(gen_); }
    int uniform_int(int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(gen_);
    }
    std::uint64_t raw() { return gen_(); }

    Complex cgauss() { return Complex(normal_(gen_), normal_(gen_)); }

    Matrix gaussian(int rows, int cols);
    Matrix gaussian_real(int rows, int cols);
    Matrix hermitian(int n);              // Gaussian Hermitian (GUE-like)
    Matrix psd(int n, int rank = -1);     // G*G^dagger, default full rank
    Matrix unitary(int n);                // Haar via QR of Gaussian
    Matrix contraction(int n);            // random matrix scaled to norm <= 1
    /// Density matrix with eigenvalues bounded away from 0 (condition ~<= 20).
    Matrix density(int n, bool rotate = true);

  private:
    std::mt19937_64 gen_;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace orq
