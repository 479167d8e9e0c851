#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace zenolab {

using cdouble = std::complex<double>;

/// Dense row-major complex matrix. Suited to the small Hilbert spaces
/// handled here (dims up to a few thousand amplitudes).
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<cdouble>> rows);
    static ComplexMatrix diagonal(const std::vector<double>& d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    cdouble& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const cdouble& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    const std::vector<cdouble>& data() const { return a_; }

    ComplexMatrix dagger() const;
    cdouble trace() const;
    double frobenius_norm() const;
    double max_abs() const;
    /// Max absolute row sum (induced 1-norm of the transpose; used for matexp scaling).
    double inf_norm() const;

    bool is_hermitian(double tol = 1e-12) const;
    bool is_unitary(double tol = 1e-10) const;

    std::vector<cdouble> apply(const std::vector<cdouble>& v) const;

    ComplexMatrix& operator+=(const ComplexMatrix& o);
    ComplexMatrix& operator-=(const ComplexMatrix& o);
    ComplexMatrix& operator*=(cdouble s);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cdouble> a_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(cdouble s, ComplexMatrix a);

/// Standard Kronecker product; first factor is the slow index.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Hermitian matrix with the propagator convention U(t) = exp(-i H t).
class Hamiltonian {
public:
    explicit Hamiltonian(ComplexMatrix m, double tol = 1e-12);
    const ComplexMatrix& matrix() const { return m_; }
    std::size_t dim() const { return m_.rows(); }

private:
    ComplexMatrix m_;
};

/// exp(-i h t) by scaling-and-squaring with a Taylor core. Unitarity is
/// restored by a Newton-Schulz polar step when the drift exceeds 1e-10.
ComplexMatrix matexp(const Hamiltonian& h, double t);

struct EigResult {
    std::vector<double> values;  // ascending
    ComplexMatrix vectors;       // orthonormal columns, matching order
};

/// Cyclic complex Jacobi for dim <= 64; diagonal matrices of any dim are
/// read off directly. Residuals ||Hv - lambda v|| <= 1e-10.
EigResult eig_hermitian(const Hamiltonian& h);

}  // namespace zenolab
