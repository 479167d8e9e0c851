#include "zenolab/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace zenolab {

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::from_rows(
    std::initializer_list<std::initializer_list<cdouble>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    ComplexMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw std::invalid_argument("ragged initializer");
        std::size_t j = 0;
        for (const auto& v : row) m.at(i, j++) = v;
        ++i;
    }
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<double>& d) {
    ComplexMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
    return m;
}

ComplexMatrix ComplexMatrix::dagger() const {
    ComplexMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = std::conj(at(i, j));
    return m;
}

cdouble ComplexMatrix::trace() const {
    cdouble t = 0.0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += at(i, i);
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto& v : a_) s += std::norm(v);
    return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& v : a_) m = std::max(m, std::abs(v));
    return m;
}

double ComplexMatrix::inf_norm() const {
    double m = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < cols_; ++j) s += std::abs(at(i, j));
        m = std::max(m, s);
    }
    return m;
}

bool ComplexMatrix::is_hermitian(double tol) const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i; j < cols_; ++j)
            if (std::abs(at(i, j) - std::conj(at(j, i))) > tol) return false;
    return true;
}

bool ComplexMatrix::is_unitary(double tol) const {
    if (rows_ != cols_) return false;
    const ComplexMatrix g = dagger() * (*this);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            const cdouble want = i == j ? 1.0 : 0.0;
            if (std::abs(g.at(i, j) - want) > tol) return false;
        }
    return true;
}

std::vector<cdouble> ComplexMatrix::apply(const std::vector<cdouble>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix-vector dim mismatch");
    std::vector<cdouble> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        cdouble s = 0.0;
        const cdouble* row = a_.data() + i * cols_;
        for (std::size_t j = 0; j < cols_; ++j) s += row[j] * v[j];
        out[i] = s;
    }
    return out;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cdouble s) {
    for (auto& v : a_) v *= s;
    return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matmul dim mismatch");
    ComplexMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const cdouble aik = a.at(i, k);
            if (aik == cdouble{}) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

ComplexMatrix operator*(cdouble s, ComplexMatrix a) { return a *= s; }

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ia = 0; ia < a.rows(); ++ia)
        for (std::size_t ja = 0; ja < a.cols(); ++ja) {
            const cdouble f = a.at(ia, ja);
            if (f == cdouble{}) continue;
            for (std::size_t ib = 0; ib < b.rows(); ++ib)
                for (std::size_t jb = 0; jb < b.cols(); ++jb)
                    c.at(ia * b.rows() + ib, ja * b.cols() + jb) = f * b.at(ib, jb);
        }
    return c;
}

Hamiltonian::Hamiltonian(ComplexMatrix m, double tol) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) throw std::invalid_argument("Hamiltonian must be square");
    if (!m_.is_hermitian(tol)) throw std::invalid_argument("Hamiltonian must be Hermitian");
}

namespace {

// One Newton-Schulz step toward the unitary polar factor: X <- X(3I - X^H X)/2.
ComplexMatrix polar_correct(ComplexMatrix u) {
    const std::size_t n = u.rows();
    for (int iter = 0; iter < 4; ++iter) {
        ComplexMatrix g = u.dagger() * u;
        double drift = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                drift = std::max(drift, std::abs(g.at(i, j) - (i == j ? 1.0 : 0.0)));
        if (drift <= 1e-13) break;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) g.at(i, j) = (i == j ? 3.0 : 0.0) - g.at(i, j);
        u = 0.5 * (u * g);
    }
    return u;
}

}  // namespace

ComplexMatrix matexp(const Hamiltonian& h, double t) {
    const std::size_t n = h.dim();
    ComplexMatrix a = h.matrix();
    a *= cdouble(0.0, -t);

    int squarings = 0;
    double norm = a.inf_norm();
    while (norm > 0.5) {
        norm /= 2.0;
        ++squarings;
    }
    const double scale = std::ldexp(1.0, -squarings);
    a *= scale;

    ComplexMatrix u = ComplexMatrix::identity(n);
    ComplexMatrix term = ComplexMatrix::identity(n);
    for (int k = 1; k <= 32; ++k) {
        term = term * a;
        term *= cdouble(1.0 / k, 0.0);
        u += term;
        if (term.max_abs() <= 1e-18) break;
    }
    for (int s = 0; s < squarings; ++s) u = u * u;

    ComplexMatrix g = u.dagger() * u;
    double drift = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            drift = std::max(drift, std::abs(g.at(i, j) - (i == j ? 1.0 : 0.0)));
    if (drift > 1e-10) u = polar_correct(std::move(u));
    return u;
}

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) s += std::norm(a.at(i, j));
    return std::sqrt(s);
}

EigResult sorted_result(std::vector<double> vals, ComplexMatrix vecs) {
    const std::size_t n = vals.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
    EigResult r;
    r.values.resize(n);
    r.vectors = ComplexMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        r.values[k] = vals[order[k]];
        for (std::size_t i = 0; i < n; ++i) r.vectors.at(i, k) = vecs.at(i, order[k]);
    }
    return r;
}

}  // namespace

EigResult eig_hermitian(const Hamiltonian& h) {
    const std::size_t n = h.dim();
    ComplexMatrix a = h.matrix();

    if (off_diagonal_norm(a) <= 1e-14 * std::max(1.0, a.frobenius_norm())) {
        std::vector<double> vals(n);
        for (std::size_t i = 0; i < n; ++i) vals[i] = a.at(i, i).real();
        return sorted_result(std::move(vals), ComplexMatrix::identity(n));
    }

    if (n > 64) throw std::invalid_argument("dense Jacobi path limited to dim <= 64");

    ComplexMatrix v = ComplexMatrix::identity(n);
    const double stop = 1e-14 * std::max(1.0, a.frobenius_norm());
    for (int sweep = 0; sweep < 100 && off_diagonal_norm(a) > stop; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                const cdouble apq = a.at(p, q);
                const double mag = std::abs(apq);
                if (mag <= 1e-300) continue;
                const double app = a.at(p, p).real();
                const double aqq = a.at(q, q).real();
                // Unitary 2x2 rotation zeroing a_pq: tan(2phi) = 2|a_pq|/(app-aqq).
                const double tau = (app - aqq) / (2.0 * mag);
                const double tt = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + tt * tt);
                const double s = c * tt;
                const cdouble phase = apq / mag;

                // Columns: col_p' = c*col_p + s*conj(phase)... derived so that
                // (U^H A U)_{pq} = 0 with U_pp=c, U_pq=-s*phase, U_qp=s*conj(phase), U_qq=c.
                for (std::size_t i = 0; i < n; ++i) {
                    const cdouble aip = a.at(i, p);
                    const cdouble aiq = a.at(i, q);
                    a.at(i, p) = c * aip + s * std::conj(phase) * aiq;
                    a.at(i, q) = -s * phase * aip + c * aiq;
                }
                for (std::size_t j = 0; j < n; ++j) {
                    const cdouble apj = a.at(p, j);
                    const cdouble aqj = a.at(q, j);
                    a.at(p, j) = c * apj + s * phase * aqj;
                    a.at(q, j) = -s * std::conj(phase) * apj + c * aqj;
                }
                for (std::size_t i = 0; i < n; ++i) {
                    const cdouble vip = v.at(i, p);
                    const cdouble viq = v.at(i, q);
                    v.at(i, p) = c * vip + s * std::conj(phase) * viq;
                    v.at(i, q) = -s * phase * vip + c * viq;
                }
            }
    }

    std::vector<double> vals(n);
    for (std::size_t i = 0; i < n; ++i) vals[i] = a.at(i, i).real();
    return sorted_result(std::move(vals), std::move(v));
}

}  // namespace zenolab
