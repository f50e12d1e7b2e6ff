// cloning_map.hpp
// Amplitude-matrix representation of 1->2 cloning maps: the Fourier duality
// between the two clones, output mixtures and fidelity evaluation.

#pragma once

#include <stdexcept>
#include <utility>

#include "pcclone/qudit.hpp"

namespace pcclone {

enum class Clone { A, B };

// The d x d coefficient matrix a_{m,n} of the error-operator expansion.
// sum |a_{m,n}|^2 = 1.
class AmplitudeMatrix {
public:
    explicit AmplitudeMatrix(Matrix a) : a_(std::move(a)) {
        if (a_.rows() != a_.cols() || a_.rows() < 2)
            throw std::domain_error("amplitude matrix must be square, d >= 2");
        if (std::abs(a_.squaredNorm() - 1.0) > 1e-9)
            throw std::domain_error("amplitude matrix not normalized");
    }

    int dim() const { return static_cast<int>(a_.rows()); }
    const Matrix& coeffs() const { return a_; }
    Complex operator()(int m, int n) const { return a_(m, n); }

private:
    Matrix a_;
};

// b_{m,n} = (1/d) sum_{x,y} exp(2 pi i (n x - m y)/d) a_{x,y}
inline AmplitudeMatrix fourier_dual(const AmplitudeMatrix& a) {
    const int d = a.dim();
    Matrix b = Matrix::Zero(d, d);
    for (int m = 0; m < d; ++m)
        for (int n = 0; n < d; ++n) {
            Complex acc{0.0, 0.0};
            for (int x = 0; x < d; ++x)
                for (int y = 0; y < d; ++y)
                    acc += root_of_unity(static_cast<long>(n) * x -
                                         static_cast<long>(m) * y, d) *
                           a(x, y);
            b(m, n) = acc / static_cast<double>(d);
        }
    return AmplitudeMatrix(b);
}

namespace detail {

inline Matrix weighted_mixture(const Matrix& w, const Vector& psi) {
    const int d = static_cast<int>(psi.size());
    Matrix rho = Matrix::Zero(d, d);
    for (int m = 0; m < d; ++m)
        for (int n = 0; n < d; ++n) {
            const double p = std::norm(w(m, n));
            if (p == 0.0) continue;
            Vector v = apply_weyl(m, n, psi);
            rho += p * (v * v.adjoint());
        }
    return rho;
}

}  // namespace detail

// Output states of the two clones for input psi:
// rho_A = sum |a_{m,n}|^2 |psi_{m,n}><psi_{m,n}|, rho_B likewise with b.
inline std::pair<Matrix, Matrix> clone_states(const AmplitudeMatrix& a,
                                              const Vector& psi) {
    if (static_cast<int>(psi.size()) != a.dim())
        throw std::domain_error("clone_states: state dimension mismatch");
    AmplitudeMatrix b = fourier_dual(a);
    return {detail::weighted_mixture(a.coeffs(), psi),
            detail::weighted_mixture(b.coeffs(), psi)};
}

// F = sum |w_{m,n}|^2 |<psi|U_{m,n}|psi>|^2 with w the a- or b-matrix.
inline double fidelity(const AmplitudeMatrix& a, const Vector& psi,
                       Clone clone) {
    const int d = a.dim();
    if (static_cast<int>(psi.size()) != d)
        throw std::domain_error("fidelity: state dimension mismatch");
    const Matrix w =
        clone == Clone::A ? a.coeffs() : fourier_dual(a).coeffs();
    double f = 0.0;
    for (int m = 0; m < d; ++m)
        for (int n = 0; n < d; ++n) {
            const double p = std::norm(w(m, n));
            if (p == 0.0) continue;
            f += p * std::norm(psi.dot(apply_weyl(m, n, psi)));
        }
    return f;
}

// <psi | U_{m,n} | psi> for a phase state:
// (1/d) sum_k exp(i (phi_k - phi_{k+m})) exp(2 pi i n k / d)
inline Complex phase_overlap(const std::vector<double>& phases, int m, int n) {
    const int d = static_cast<int>(phases.size());
    check_index(m, n, d);
    Complex acc{0.0, 0.0};
    for (int k = 0; k < d; ++k) {
        const double dphi = phases[k] - phases[(k + m) % d];
        acc += Complex{std::cos(dphi), std::sin(dphi)} *
               root_of_unity(static_cast<long>(n) * k, d);
    }
    return acc / static_cast<double>(d);
}

// The full tripartite output state of the cloner on A (x) B (x) C,
// |Psi> = sum_{m,n} a_{m,n} (U_{m,n}|psi>)_A |B_{m,-n}>_{B,C}.
inline Vector tripartite_state(const AmplitudeMatrix& a, const Vector& psi) {
    const int d = a.dim();
    if (static_cast<int>(psi.size()) != d)
        throw std::domain_error("tripartite_state: dimension mismatch");
    const Eigen::Index d2 = static_cast<Eigen::Index>(d) * d;
    Vector out = Vector::Zero(d2 * d);
    for (int m = 0; m < d; ++m)
        for (int n = 0; n < d; ++n) {
            const Complex c = a(m, n);
            if (c == Complex{0.0, 0.0}) continue;
            Vector ua = apply_weyl(m, n, psi);
            Vector bell = bell_state(m, (d - n) % d, d);  // |B_{m,-n}>
            for (int ia = 0; ia < d; ++ia)
                for (Eigen::Index bc = 0; bc < d2; ++bc)
                    out(ia * d2 + bc) += c * ua(ia) * bell(bc);
        }
    return out;
}

}  // namespace pcclone
