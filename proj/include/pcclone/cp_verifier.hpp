// cp_verifier.hpp
// Independent optimality check over all trace-preserving CP maps.
// The cloner is represented by its Choi operator S on input (x) A (x) B;
// clone fidelities become Tr[S R_{A,B}] with phase-averaged fidelity
// operators R, and the best map is found by a fixed-point iteration.

#pragma once

#include <functional>
#include <stdexcept>
#include <tuple>

#include "pcclone/phase_covariant.hpp"

namespace pcclone {

// Choi operator convention: S = sum_{ij} |i><j|_in (x) Map(|i><j|),
// so Tr_{A,B} S = I_d for a trace-preserving map and
// <psi|rho_A|psi> = Tr[(|psi*><psi*| (x) |psi><psi| (x) I) S].
struct ChoiOperator {
    int d;
    Matrix S;  // d^3 x d^3, ordering input (x) cloneA (x) cloneB
};

// Phase-averaged fidelity operators R_A, R_B and the asymmetry weight.
struct FigureOfMerit {
    int d;
    Matrix ra, rb;
    double p;
};

// Exact uniform average over independent phases phi_k in [0, 2pi):
// E[exp(i(phi_a - phi_b + phi_c - phi_e))] = 1 iff {a,c} = {b,e} as
// multisets, else 0. This gives R in closed form.
inline FigureOfMerit build_fom(int d, double p = 0.5) {
    if (d < 2 || d > 6)
        throw std::domain_error("build_fom: supported dimensions are 2..6");
    if (p < 0.0 || p > 1.0)
        throw std::domain_error("build_fom: weight p must lie in [0,1]");
    const Eigen::Index d3 = static_cast<Eigen::Index>(d) * d * d;
    Matrix ra = Matrix::Zero(d3, d3);
    Matrix rb = Matrix::Zero(d3, d3);
    const double w = 1.0 / (d * d);
    auto idx = [d](int i, int a, int b) {
        return static_cast<Eigen::Index>(i) * d * d + a * static_cast<Eigen::Index>(d) + b;
    };
    auto match = [](int a, int c, int b, int e) {  // {a,c} == {b,e}
        return (a == b && c == e) || (a == e && c == b);
    };
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int u = 0; u < d; ++u)
                for (int w2 = 0; w2 < d; ++w2) {
                    if (match(j, u, i, w2)) {
                        // E[(psi* psi*^+)_{ij} (psi psi^+)_{u w2}] = w
                        for (int b = 0; b < d; ++b)
                            ra(idx(i, u, b), idx(j, w2, b)) += w;
                        for (int a = 0; a < d; ++a)
                            rb(idx(i, a, u), idx(j, a, w2)) += w;
                    }
                }
    return {d, ra, rb, p};
}

// Choi operator of the channel induced by an arbitrary amplitude matrix
// (machine system traced out).
inline ChoiOperator choi_of_amplitudes(const AmplitudeMatrix& a) {
    const int d = a.dim();
    const Eigen::Index d2 = static_cast<Eigen::Index>(d) * d;
    const Eigen::Index d3 = d2 * d;

    // W[i] = cloner isometry applied to basis input |i>, on A (x) B (x) C
    std::vector<Vector> w(d);
    for (int i = 0; i < d; ++i) {
        Vector basis = Vector::Zero(d);
        basis(i) = 1.0;
        w[i] = tripartite_state(a, basis);
    }

    Matrix s = Matrix::Zero(d3, d3);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (Eigen::Index ab = 0; ab < d2; ++ab)
                for (Eigen::Index ab2 = 0; ab2 < d2; ++ab2) {
                    Complex acc{0.0, 0.0};
                    // W vectors live on A (x) B (x) C but are indexed here
                    // as (A, B, C) = (ab/d, ab%d, c): trace over C
                    const Eigen::Index rowA = ab / d, rowB = ab % d;
                    const Eigen::Index colA = ab2 / d, colB = ab2 % d;
                    for (int c = 0; c < d; ++c)
                        acc += w[i](rowA * d2 + rowB * d + c) *
                               std::conj(w[j](colA * d2 + colB * d + c));
                    s(i * d2 + ab, j * d2 + ab2) = acc;
                }
    return {d, s};
}

inline ChoiOperator choi_of_ansatz(const PcParams& p) {
    return choi_of_amplitudes(ansatz_matrix(p));
}

inline double choi_fidelity(const ChoiOperator& s, const Matrix& r) {
    return (s.S * r).trace().real();
}

// Partial trace of a d^3 x d^3 operator over both output factors.
inline Matrix trace_out_clones(const Matrix& s, int d) {
    return partial_trace(s, {0}, {d, d, d});
}

// Maximize Tr[S (p R_A + (1-p) R_B)] over trace-preserving CP maps by the
// fixed-point iteration S <- L (R S R) L with L = Lambda^{-1/2} (x) I and
// Lambda = Tr_out[R S R]. Returns the optimal S and achieved fidelities.
inline std::tuple<ChoiOperator, double, double> optimize_map(
    const FigureOfMerit& fom, double tol = 1e-10, int max_iter = 10000,
    const std::function<void(int, double)>& on_iterate = {}) {
    if (tol <= 0.0) throw std::domain_error("optimize_map: tol must be > 0");
    const int d = fom.d;
    const Eigen::Index d2 = static_cast<Eigen::Index>(d) * d;
    const Eigen::Index d3 = d2 * d;
    const Matrix r = fom.p * fom.ra + (1.0 - fom.p) * fom.rb;

    Matrix s = Matrix::Identity(d3, d3) / static_cast<double>(d2);
    double obj = (s * r).trace().real();
    for (int it = 0; it < max_iter; ++it) {
        Matrix m = r * s * r;
        Matrix lambda = trace_out_clones(m, d);

        // Lambda^{-1/2} with small eigenvalues floored at 1e-12
        Eigen::SelfAdjointEigenSolver<Matrix> es(lambda);
        Eigen::VectorXd ev = es.eigenvalues().cwiseMax(1e-12);
        Matrix inv_sqrt = es.eigenvectors() *
                          ev.cwiseSqrt().cwiseInverse().asDiagonal() *
                          es.eigenvectors().adjoint();

        Matrix lift = Matrix::Zero(d3, d3);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                lift.block(i * d2, j * d2, d2, d2) =
                    inv_sqrt(i, j) * Matrix::Identity(d2, d2);

        s = lift * m * lift;
        s = 0.5 * (s + s.adjoint().eval());

        const double next = (s * r).trace().real();
        const double delta = std::abs(next - obj);
        obj = next;
        if (on_iterate) on_iterate(it, obj);
        if (delta < tol) {
            const double fa = (s * fom.ra).trace().real();
            const double fb = (s * fom.rb).trace().real();
            return {ChoiOperator{d, std::move(s)}, fa, fb};
        }
    }
    throw ConvergenceError("optimize_map: max_iter reached", obj);
}

}  // namespace pcclone
