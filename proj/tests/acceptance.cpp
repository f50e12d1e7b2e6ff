// Acceptance suite: end-to-end quantitative checks of the toolkit, one
// pass/fail line per criterion.

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "pcclone/sweep.hpp"

using namespace pcclone;

namespace {

int g_failures = 0;

void report(int id, const std::string& name, bool ok,
            const std::string& detail) {
    std::printf("[%s] criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", id,
                name.c_str(), detail.c_str());
    if (!ok) ++g_failures;
}

double elapsed_ms(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - t0)
        .count();
}

std::string run_cli(const std::string& args) {
    std::string cmd = std::string(PCCLONE_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {};
    std::string out;
    char buf[512];
    while (fgets(buf, sizeof(buf), pipe)) out += buf;
    pclose(pipe);
    return out;
}

// value of a named column in the first data row of a CSV table
double csv_field(const std::string& csv, const std::string& column) {
    std::istringstream is(csv);
    std::string header, row;
    std::getline(is, header);
    std::getline(is, row);
    std::istringstream hs(header), rs(row);
    std::string name, value;
    while (std::getline(hs, name, ',') && std::getline(rs, value, ','))
        if (name == column) return std::stod(value);
    return std::nan("");
}

std::vector<double> random_phases(int d, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 2.0 * kPi);
    std::vector<double> p(d);
    for (double& x : p) x = u(rng);
    return p;
}

const double kF3 = (5.0 + std::sqrt(17.0)) / 12.0;

void criterion1_landmarks() {
    const double f2_cli = csv_field(run_cli("optimal --d 2"), "F_opt");
    const double f3_cli = csv_field(run_cli("optimal --d 3"), "F_opt");

    auto t0 = std::chrono::steady_clock::now();
    const double f2 = optimal_symmetric(2).first;
    const double f3 = optimal_symmetric(3).first;
    const double ms = elapsed_ms(t0) / 2.0;

    const double kF2 = 0.5 * (1.0 + 1.0 / std::sqrt(2.0));
    bool ok = std::abs(f2_cli - kF2) < 1e-6 && std::abs(f3_cli - kF3) < 1e-6 &&
              std::abs(f2 - kF2) < 1e-12 && std::abs(f3 - kF3) < 1e-12 &&
              ms < 1.0;
    char msg[160];
    std::snprintf(msg, sizeof(msg),
                  "F(2)=%.7f F(3)=%.7f via CLI, %.3g ms/eval", f2_cli, f3_cli,
                  ms);
    report(1, "landmark fidelities", ok, msg);
}

void criterion2_closed_form_vs_search() {
    auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (int d = 2; d <= 100; ++d) {
        // golden-section maximization of F(X) on the constraint curve
        const double xmax = 1.0 / std::sqrt(2.0 * (d - 1.0));
        auto f = [d](double x) {
            return symmetric_fidelity(
                {d, std::sqrt(1.0 - 2.0 * (d - 1.0) * x * x), x});
        };
        const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
        double a = 0.0, b = xmax;
        double c1 = b - gr * (b - a), c2 = a + gr * (b - a);
        double f1 = f(c1), f2 = f(c2);
        for (int it = 0; it < 200; ++it) {
            if (f1 < f2) {
                a = c1;
                c1 = c2;
                f1 = f2;
                c2 = a + gr * (b - a);
                f2 = f(c2);
            } else {
                b = c2;
                c2 = c1;
                f2 = f1;
                c1 = b - gr * (b - a);
                f1 = f(c1);
            }
        }
        worst = std::max(worst,
                         std::abs(std::max(f1, f2) - optimal_symmetric(d).first));
    }
    const double ms = elapsed_ms(t0);
    char msg[120];
    std::snprintf(msg, sizeof(msg), "max |dF| = %.3g, %.0f ms", worst, ms);
    report(2, "closed form vs direct 1-D search", worst < 1e-10 && ms < 1000.0,
           msg);
}

void criterion3_phase_covariance() {
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(2024);
    double spread = 0.0;
    for (int d = 2; d <= 8; ++d) {
        PcParams p = from_symmetric(optimal_symmetric(d).second);
        AmplitudeMatrix a = ansatz_matrix(p);
        for (Clone clone : {Clone::A, Clone::B}) {
            double lo = 2.0, hi = -1.0;
            for (int t = 0; t < 200; ++t) {
                double f = fidelity(a, phase_state(random_phases(d, rng)), clone);
                lo = std::min(lo, f);
                hi = std::max(hi, f);
            }
            spread = std::max(spread, hi - lo);
        }
    }
    const double ms = elapsed_ms(t0);
    char msg[120];
    std::snprintf(msg, sizeof(msg), "max spread = %.3g, %.0f ms", spread,
                  ms);
    report(3, "phase covariance of the optimal ansatz",
           spread < 1e-12 && ms < 5000.0, msg);
}

void criterion4_tripartite_oracle() {
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> utheta(0.0, kPi / 2.0);
    std::uniform_real_distribution<double> uphi(0.0, kPi);
    double worst = 0.0;
    for (int d : {2, 3, 4}) {
        for (int trial = 0; trial < 20; ++trial) {
            PcParams p =
                detail::params_from_angles(d, utheta(rng), uphi(rng));
            AmplitudeMatrix a = ansatz_matrix(p);
            Vector psi = phase_state(random_phases(d, rng));
            Vector full = tripartite_state(a, psi);
            Matrix rho_full = full * full.adjoint();
            auto [rho_a, rho_b] = clone_states(a, psi);
            worst = std::max(
                worst, trace_distance(partial_trace(rho_full, {0}, {d, d, d}),
                                      rho_a));
            worst = std::max(
                worst, trace_distance(partial_trace(rho_full, {1}, {d, d, d}),
                                      rho_b));
        }
    }
    const double ms = elapsed_ms(t0);
    char msg[120];
    std::snprintf(msg, sizeof(msg),
                  "max trace distance = %.3g, %.0f ms", worst, ms);
    report(4, "tripartite pure-state oracle", worst < 1e-10 && ms < 10000.0,
           msg);
}

void criterion5_frontier_endpoints() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::ostringstream note;
    for (int d : {2, 3, 4, 10, 100}) {
        TradeoffPoint hi = tradeoff_point(d, 1.0);
        TradeoffPoint lo = tradeoff_point(d, 0.0);
        TradeoffPoint mid = tradeoff_point(d, 0.5);
        const double fopt = optimal_symmetric(d).first;
        const double err = std::max(
            {std::abs(hi.fa - 1.0), std::abs(hi.fb - 1.0 / d),
             std::abs(lo.fa - 1.0 / d), std::abs(lo.fb - 1.0),
             std::abs(mid.fa - fopt), std::abs(mid.fb - fopt)});
        if (err > 1e-8) {
            ok = false;
            note << " d=" << d << " err=" << err;
        }
    }
    const double ms = elapsed_ms(t0);
    if (ms >= 30000.0) ok = false;
    char msg[160];
    std::snprintf(msg, sizeof(msg), "d in {2,3,4,10,100}%s, %.0f ms",
                  ok ? "" : note.str().c_str(), ms);
    report(5, "frontier endpoints and symmetric point", ok, msg);
}

void criterion6_verifier_agreement() {
    auto t0 = std::chrono::steady_clock::now();
    SweepConfig cfg;
    cfg.tol = 1e-12;
    VerifyReport rep = sweep_verify(cfg, {2, 3});
    const double ms = elapsed_ms(t0);
    char msg[120];
    std::snprintf(msg, sizeof(msg), "max |dF| = %.3g, %.1f s",
                  rep.max_discrepancy, ms / 1000.0);
    report(6, "CP-map verifier agreement",
           rep.converged && rep.max_discrepancy < 1e-5 && ms < 120000.0,
           msg);
}

void criterion7_fig3_ordering() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    for (int d = 3; d <= 100; ++d) {
        const double fu = comparison_fidelity(ClonerKind::Universal, d);
        const double fpc = comparison_fidelity(ClonerKind::PhaseCovariant, d);
        const double fr = comparison_fidelity(ClonerKind::Real, d);
        const double fmu = comparison_fidelity(ClonerKind::MutuallyUnbiased, d);
        ok = ok && fu < fpc && fpc < fr && fr < fmu;
    }
    const double fpc2 = comparison_fidelity(ClonerKind::PhaseCovariant, 2);
    const double fr2 = comparison_fidelity(ClonerKind::Real, 2);
    const double fmu2 = comparison_fidelity(ClonerKind::MutuallyUnbiased, 2);
    const double fu2 = comparison_fidelity(ClonerKind::Universal, 2);
    ok = ok && std::abs(fpc2 - fmu2) < 1e-12 && std::abs(fr2 - fmu2) < 1e-12 &&
         std::abs(fu2 - 5.0 / 6.0) < 1e-12;
    const double ms = elapsed_ms(t0);
    if (ms >= 1000.0) ok = false;
    char msg[120];
    std::snprintf(msg, sizeof(msg),
                  "F_U < F_PC < F_R < F_MU on 3..100; F_U(2)=%.7f, %.0f ms",
                  fu2, ms);
    report(7, "cross-cloner ordering", ok, msg);
}

void criterion8_asymptotics() {
    bool ok = true;
    for (int d = 10; d <= 100; ++d)
        ok = ok && optimal_symmetric(d).first - 0.5 < 2.0 / d;
    char msg[80];
    std::snprintf(msg, sizeof(msg), "F_opt(100) - 1/2 = %.4g",
                  optimal_symmetric(100).first - 0.5);
    report(8, "1/2 + O(1/d) asymptotics", ok, msg);
}

}  // namespace

int main() {
    criterion1_landmarks();
    criterion2_closed_form_vs_search();
    criterion3_phase_covariance();
    criterion4_tripartite_oracle();
    criterion5_frontier_endpoints();
    criterion6_verifier_agreement();
    criterion7_fig3_ordering();
    criterion8_asymptotics();
    if (g_failures) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
