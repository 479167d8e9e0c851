#pragma once

#include <string>
#include <vector>

#include "zenolab/complex_matrix.hpp"

namespace zenolab {

/// Normalized amplitude vector over a labeled basis. Construction enforces
/// unit norm (1e-12 tolerance, then exact renormalization) and the global
/// phase convention: the first amplitude with magnitude > 1e-12 is real
/// and >= 0, so trajectories compare by plain vector distance.
class StateVector {
public:
    StateVector(std::vector<cdouble> amps, std::vector<std::string> labels = {});

    /// Normalizes an arbitrary nonzero vector, then applies the phase convention.
    static StateVector normalized(std::vector<cdouble> amps,
                                  std::vector<std::string> labels = {});
    static StateVector basis_state(std::size_t dim, std::size_t k,
                                   std::vector<std::string> labels = {});

    std::size_t dim() const { return amps_.size(); }
    const std::vector<cdouble>& amplitudes() const { return amps_; }
    const std::vector<std::string>& labels() const { return labels_; }
    cdouble amp(std::size_t k) const { return amps_[k]; }

private:
    std::vector<cdouble> amps_;
    std::vector<std::string> labels_;
};

cdouble inner(const StateVector& a, const StateVector& b);
double fidelity(const StateVector& a, const StateVector& b);  // |<a|b>|^2
double distance(const StateVector& a, const StateVector& b);  // ||a-b||_2

/// Labels for a tensor-product basis, e.g. dims {2,2} -> "00","01","10","11".
std::vector<std::string> product_labels(const std::vector<std::size_t>& dims);

/// Hermitian, unit-trace, positive matrix.
class DensityMatrix {
public:
    explicit DensityMatrix(ComplexMatrix m);
    static DensityMatrix from_state(const StateVector& psi);

    std::size_t dim() const { return m_.rows(); }
    const ComplexMatrix& matrix() const { return m_; }
    std::vector<double> diag() const;

private:
    ComplexMatrix m_;
};

/// Reduced density matrix of the `keep`-th tensor factor.
DensityMatrix partial_trace(const DensityMatrix& rho,
                            const std::vector<std::size_t>& dims, std::size_t keep);

/// Diagonal of the reduced density matrix of factor `keep`, straight from
/// the amplitudes (no dim^2 intermediate).
std::vector<double> reduced_diag(const StateVector& psi,
                                 const std::vector<std::size_t>& dims, std::size_t keep);

}  // namespace zenolab
