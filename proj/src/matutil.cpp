#include "orq/matutil.hpp"

#include <functional>

namespace orq {

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
                a(i, j) * b;
    return out;
}

Matrix hermitian_function(const Matrix& a,
                          const std::function<Complex(double)>& f) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(a);
    const auto& u = es.eigenvectors();
    Vector d(a.rows());
    for (Eigen::Index i = 0; i < a.rows(); ++i) d(i) = f(es.eigenvalues()(i));
    return u * d.asDiagonal() * u.adjoint();
}

Matrix hermitian_power(const Matrix& a, double p) {
    return hermitian_function(
        a, [p](double x) { return Complex(std::pow(x, p), 0.0); });
}

Matrix hermitian_cpower(const Matrix& a, Complex z) {
    return hermitian_function(
        a, [z](double x) { return std::exp(z * std::log(x)); });
}

Matrix psd_clip(const Matrix& a) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(hermitize(a));
    const auto& u = es.eigenvectors();
    Vector d(a.rows());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        d(i) = std::max(0.0, es.eigenvalues()(i));
    return u * d.asDiagonal() * u.adjoint();
}

double min_eigenvalue(const Matrix& hermitian) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian,
                                             Eigen::EigenvaluesOnly);
    return es.eigenvalues()(0);
}

Matrix Rng::gaussian(int rows, int cols) {
    Matrix m(rows, cols);
    for (int j = 0; j < cols; ++j)
        for (int i = 0; i < rows; ++i) m(i, j) = cgauss();
    return m;
}

Matrix Rng::gaussian_real(int rows, int cols) {
    Matrix m(rows, cols);
    for (int j = 0; j < cols; ++j)
        for (int i = 0; i < rows; ++i) m(i, j) = Complex(gauss(), 0.0);
    return m;
}

Matrix Rng::hermitian(int n) { return hermitize(gaussian(n, n)); }

Matrix Rng::psd(int n, int rank) {
    if (rank <= 0) rank = n;
    Matrix g = gaussian(n, rank);
    return g * g.adjoint();
}

Matrix Rng::unitary(int n) {
    Matrix g = gaussian(n, n);
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    // fix phases so the distribution is Haar
    for (int i = 0; i < n; ++i) {
        Complex d = r(i, i);
        q.col(i) *= (std::abs(d) > 0 ? d / std::abs(d) : Complex(1, 0));
    }
    return q;
}

Matrix Rng::contraction(int n) {
    Matrix g = gaussian(n, n);
    double s = op_norm(g);
    double target = uniform(0.2, 1.0);
    return g * (target / s);
}

Matrix Rng::density(int n, bool rotate) {
    RealVector lam(n);
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        lam(i) = uniform(0.05, 1.0);
        sum += lam(i);
    }
    lam /= sum;
    Matrix d = Matrix::Zero(n, n);
    for (int i = 0; i < n; ++i) d(i, i) = lam(i);
    if (!rotate) return d;
    Matrix u = unitary(n);
    return u * d * u.adjoint();
}

}  // namespace orq
