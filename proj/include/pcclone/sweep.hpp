// sweep.hpp
// Parameter sweeps behind the CLI: symmetric fidelity vs dimension,
// asymmetric tradeoff frontiers, cross-cloner comparison and the CP-map
// verification report. Output is plain numeric tables (CSV or JSON).

#pragma once

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pcclone/cloner_zoo.hpp"
#include "pcclone/cp_verifier.hpp"

namespace pcclone {

enum class OutputFormat { Csv, Json };

struct SweepConfig {
    int d_min = 2;
    int d_max = 100;
    std::vector<double> p_grid;  // empty -> per-command default
    double tol = 1e-10;
    std::uint64_t seed = 0;
    std::string output_path;  // empty -> stdout
    OutputFormat format = OutputFormat::Csv;

    void validate() const {
        if (d_min < 2 || d_min > d_max)
            throw std::domain_error("require 2 <= d_min <= d_max");
        for (double p : p_grid)
            if (p < 0.0 || p > 1.0)
                throw std::domain_error("p-grid entries must lie in [0,1]");
        if (tol <= 0.0) throw std::domain_error("tol must be > 0");
    }
};

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

// 9 significant digits; deterministic and file-diffable
inline std::string format_number(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", x);
    return buf;
}

inline void write_table(const Table& t, std::ostream& os, OutputFormat fmt) {
    if (fmt == OutputFormat::Csv) {
        for (std::size_t i = 0; i < t.header.size(); ++i)
            os << (i ? "," : "") << t.header[i];
        os << "\n";
        for (const auto& row : t.rows) {
            for (std::size_t i = 0; i < row.size(); ++i)
                os << (i ? "," : "") << format_number(row[i]);
            os << "\n";
        }
    } else {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& row : t.rows) {
            nlohmann::json obj = nlohmann::json::object();
            for (std::size_t i = 0; i < row.size(); ++i)
                obj[t.header[i]] = row[i];
            arr.push_back(obj);
        }
        os << arr.dump(2) << "\n";
    }
}

inline void emit_table(const Table& t, const SweepConfig& cfg) {
    if (cfg.output_path.empty()) {
        write_table(t, std::cout, cfg.format);
        return;
    }
    std::ofstream os(cfg.output_path, std::ios::binary);
    if (!os)
        throw std::runtime_error("cannot open output path: " + cfg.output_path);
    write_table(t, os, cfg.format);
}

// (d, F_opt, V, X, eta) over [d_min, d_max]
inline Table sweep_fig1(const SweepConfig& cfg) {
    cfg.validate();
    Table t{{"d", "F_opt", "V", "X", "eta"}, {}};
    for (int d = cfg.d_min; d <= cfg.d_max; ++d) {
        auto [f, s] = optimal_symmetric(d);
        t.rows.push_back({static_cast<double>(d), f, s.V, s.X,
                          shrinking_factor(f, d)});
    }
    return t;
}

inline std::vector<double> default_p_grid(int n = 41) {
    std::vector<double> g(n);
    for (int i = 0; i < n; ++i) g[i] = static_cast<double>(i) / (n - 1);
    return g;
}

// (d, p, F_A, F_B, eta_A, eta_B) along the frontier for each requested d
inline Table sweep_fig2(const SweepConfig& cfg, const std::vector<int>& dims) {
    cfg.validate();
    if (dims.empty()) throw std::domain_error("fig2: no dimensions requested");
    const std::vector<double> grid =
        cfg.p_grid.empty() ? default_p_grid() : cfg.p_grid;
    FrontierOptions opt;
    opt.tol = cfg.tol;
    opt.seed = cfg.seed;
    Table t{{"d", "p", "F_A", "F_B", "eta_A", "eta_B"}, {}};
    for (int d : dims)
        for (std::size_t i = 0; i < grid.size(); ++i) {
            try {
                TradeoffPoint pt = tradeoff_point(d, grid[i], opt);
                t.rows.push_back({static_cast<double>(d), grid[i], pt.fa,
                                  pt.fb, pt.eta_a, pt.eta_b});
            } catch (const ConvergenceError& e) {
                // sentinel row; remaining dimensions still get traced
                std::cerr << "fig2: d=" << d << " p=" << grid[i] << ": "
                          << e.what() << "\n";
                t.rows.push_back(
                    {static_cast<double>(d), grid[i], -1.0, -1.0, -1.0, -1.0});
            }
        }
    return t;
}

// (d, F_U, F_R, F_PC, F_MU) over [d_min, d_max]
inline Table sweep_fig3(const SweepConfig& cfg) {
    cfg.validate();
    Table t{{"d", "F_U", "F_R", "F_PC", "F_MU"}, {}};
    for (int d = cfg.d_min; d <= cfg.d_max; ++d)
        t.rows.push_back(
            {static_cast<double>(d),
             comparison_fidelity(ClonerKind::Universal, d),
             comparison_fidelity(ClonerKind::Real, d),
             comparison_fidelity(ClonerKind::PhaseCovariant, d),
             comparison_fidelity(ClonerKind::MutuallyUnbiased, d)});
    return t;
}

struct VerifyReport {
    Table table;  // d, p, F_A_ansatz, F_B_ansatz, F_A_choi, F_B_choi, dF_A, dF_B
    double max_discrepancy = 0.0;
    bool converged = true;
};

// Frontier scalarization vs Choi-operator optimization, per (d, p) cell.
inline VerifyReport sweep_verify(const SweepConfig& cfg,
                                 const std::vector<int>& dims) {
    cfg.validate();
    VerifyReport rep;
    rep.table.header = {"d",        "p",        "F_A_ansatz", "F_B_ansatz",
                        "F_A_choi", "F_B_choi", "dF_A",       "dF_B"};
    const std::vector<double> grid =
        cfg.p_grid.empty()
            ? std::vector<double>{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9}
            : cfg.p_grid;
    FrontierOptions opt;
    opt.seed = cfg.seed;
    for (int d : dims) {
        for (double p : grid) {
            TradeoffPoint pt = tradeoff_point(d, p, opt);
            try {
                auto [choi, fa, fb] = optimize_map(build_fom(d, p), cfg.tol);
                const double dfa = std::abs(fa - pt.fa);
                const double dfb = std::abs(fb - pt.fb);
                rep.max_discrepancy =
                    std::max({rep.max_discrepancy, dfa, dfb});
                rep.table.rows.push_back({static_cast<double>(d), p, pt.fa,
                                          pt.fb, fa, fb, dfa, dfb});
            } catch (const ConvergenceError&) {
                rep.converged = false;
                rep.table.rows.push_back({static_cast<double>(d), p, pt.fa,
                                          pt.fb, -1.0, -1.0, -1.0, -1.0});
            }
        }
    }
    return rep;
}

}  // namespace pcclone
