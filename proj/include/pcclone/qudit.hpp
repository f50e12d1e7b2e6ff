// qudit.hpp
// Dimension-generic qudit linear algebra: Weyl error operators, generalized
// Bell states, uniform-phase states and partial traces over tensor factors.

#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace pcclone {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr double kPi = std::numbers::pi;

// exp(2*pi*i * k / d)
inline Complex root_of_unity(long k, int d) {
    const double arg = 2.0 * kPi * static_cast<double>(k) / d;
    return {std::cos(arg), std::sin(arg)};
}

inline void check_dim(int d) {
    if (d < 2) throw std::domain_error("dimension must be >= 2");
}

inline void check_index(int m, int n, int d) {
    check_dim(d);
    if (m < 0 || m >= d || n < 0 || n >= d)
        throw std::domain_error("Weyl/Bell index out of range [0, d)");
}

// U_{m,n} = sum_k exp(2 pi i k n / d) |k+m mod d><k|
// Shifts by m in the computational basis and by n in the Fourier basis.
inline Matrix weyl_operator(int m, int n, int d) {
    check_index(m, n, d);
    Matrix u = Matrix::Zero(d, d);
    for (int k = 0; k < d; ++k)
        u((k + m) % d, k) = root_of_unity(static_cast<long>(k) * n, d);
    return u;
}

// U_{m,n} psi without forming the matrix.
inline Vector apply_weyl(int m, int n, const Vector& psi) {
    const int d = static_cast<int>(psi.size());
    check_index(m, n, d);
    Vector out(d);
    for (int k = 0; k < d; ++k)
        out((k + m) % d) = root_of_unity(static_cast<long>(k) * n, d) * psi(k);
    return out;
}

// |B_{m,n}> = (1/sqrt d) sum_k exp(2 pi i k n / d) |k>|k+m mod d>
inline Vector bell_state(int m, int n, int d) {
    check_index(m, n, d);
    Vector b = Vector::Zero(static_cast<Eigen::Index>(d) * d);
    const double s = 1.0 / std::sqrt(static_cast<double>(d));
    for (int k = 0; k < d; ++k)
        b(static_cast<Eigen::Index>(k) * d + (k + m) % d) =
            s * root_of_unity(static_cast<long>(k) * n, d);
    return b;
}

// (1/sqrt d) sum_k exp(i phi_k) |k>
inline Vector phase_state(const std::vector<double>& phases) {
    const int d = static_cast<int>(phases.size());
    check_dim(d);
    Vector psi(d);
    const double s = 1.0 / std::sqrt(static_cast<double>(d));
    for (int k = 0; k < d; ++k)
        psi(k) = s * Complex{std::cos(phases[k]), std::sin(phases[k])};
    return psi;
}

// Partial trace over the factors not listed in `keep`. `dims` are the tensor
// factor dimensions, most significant first (row-major tensor layout).
inline Matrix partial_trace(const Matrix& rho, const std::vector<int>& keep,
                            const std::vector<int>& dims) {
    Eigen::Index total = 1;
    for (int dd : dims) {
        if (dd < 1) throw std::domain_error("factor dimension must be >= 1");
        total *= dd;
    }
    if (rho.rows() != total || rho.cols() != total)
        throw std::domain_error("partial_trace: dims do not match matrix size");
    if (keep.empty()) throw std::domain_error("partial_trace: keep is empty");

    const int nf = static_cast<int>(dims.size());
    std::vector<bool> kept(nf, false);
    for (int f : keep) {
        if (f < 0 || f >= nf)
            throw std::domain_error("partial_trace: keep index out of range");
        kept[f] = true;
    }

    Eigen::Index dkeep = 1, dtrace = 1;
    for (int f = 0; f < nf; ++f) (kept[f] ? dkeep : dtrace) *= dims[f];

    // strides of each factor in the flat index
    std::vector<Eigen::Index> stride(nf, 1);
    for (int f = nf - 2; f >= 0; --f) stride[f] = stride[f + 1] * dims[f + 1];

    // flat index from a (kept multi-index, traced multi-index) pair
    auto flat = [&](Eigen::Index ik, Eigen::Index it) {
        Eigen::Index idx = 0;
        for (int f = nf - 1; f >= 0; --f) {
            Eigen::Index& part = kept[f] ? ik : it;
            idx += (part % dims[f]) * stride[f];
            part /= dims[f];
        }
        return idx;
    };

    Matrix out = Matrix::Zero(dkeep, dkeep);
    for (Eigen::Index i = 0; i < dkeep; ++i)
        for (Eigen::Index j = 0; j < dkeep; ++j) {
            Complex acc{0.0, 0.0};
            for (Eigen::Index t = 0; t < dtrace; ++t)
                acc += rho(flat(i, t), flat(j, t));
            out(i, j) = acc;
        }
    return out;
}

// 0.5 * || rho - sigma ||_1 for Hermitian arguments
inline double trace_distance(const Matrix& rho, const Matrix& sigma) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(rho - sigma);
    return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

}  // namespace pcclone
