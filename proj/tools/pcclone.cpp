// pcclone — phase-covariant qudit cloning toolkit CLI.
//
// Subcommands:
//   fig1      symmetric optimal fidelity vs dimension
//   fig2      asymmetric tradeoff frontier for selected dimensions
//   fig3      comparison fidelities of the known d-dimensional cloners
//   verify    cross-check the ansatz frontier against the CP-map optimizer
//   optimal   single symmetric optimum for one dimension
//   tradeoff  single frontier point for one (d, p)
//
// Exit codes: 0 ok, 1 usage error, 2 non-convergence, 3 verification
// discrepancy above threshold.

#include <CLI11.hpp>

#include "pcclone/sweep.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitNoConvergence = 2;
constexpr int kExitDiscrepancy = 3;

void add_common_flags(CLI::App* cmd, pcclone::SweepConfig& cfg,
                      std::string& format) {
    cmd->add_option("--d-min", cfg.d_min, "smallest dimension");
    cmd->add_option("--d-max", cfg.d_max, "largest dimension");
    cmd->add_option("--p-grid", cfg.p_grid,
                    "asymmetry weights in [0,1] (comma separated)")
        ->delimiter(',');
    cmd->add_option("--tol", cfg.tol, "solver tolerance");
    cmd->add_option("--seed", cfg.seed, "optimizer restart seed");
    cmd->add_option("--out", cfg.output_path, "output file (default stdout)");
    cmd->add_option("--format", format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"phase-covariant qudit cloning toolkit"};
    app.require_subcommand(1);

    pcclone::SweepConfig cfg;
    std::string format = "csv";
    std::vector<int> dims;
    int d_single = 2;
    double p_single = 0.5;

    auto* fig1 = app.add_subcommand("fig1", "symmetric fidelity vs d");
    add_common_flags(fig1, cfg, format);

    auto* fig2 = app.add_subcommand("fig2", "tradeoff frontier");
    add_common_flags(fig2, cfg, format);
    fig2->add_option("--dims", dims, "dimensions to trace")->delimiter(',');

    auto* fig3 = app.add_subcommand("fig3", "cloner comparison vs d");
    add_common_flags(fig3, cfg, format);

    auto* verify = app.add_subcommand("verify", "CP-map verification");
    add_common_flags(verify, cfg, format);
    verify->add_option("--dims", dims, "dimensions to verify (2..6)")
        ->delimiter(',');

    auto* optimal = app.add_subcommand("optimal", "symmetric optimum");
    add_common_flags(optimal, cfg, format);
    optimal->add_option("--d", d_single, "dimension")->required();

    auto* tradeoff = app.add_subcommand("tradeoff", "single frontier point");
    add_common_flags(tradeoff, cfg, format);
    tradeoff->add_option("--d", d_single, "dimension")->required();
    tradeoff->add_option("--p", p_single, "asymmetry weight")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }
    cfg.format = format == "json" ? pcclone::OutputFormat::Json
                                  : pcclone::OutputFormat::Csv;

    try {
        if (fig1->parsed()) {
            pcclone::emit_table(pcclone::sweep_fig1(cfg), cfg);
        } else if (fig2->parsed()) {
            if (dims.empty()) dims = {2, 3, 4, 10, 100};
            pcclone::emit_table(pcclone::sweep_fig2(cfg, dims), cfg);
        } else if (fig3->parsed()) {
            pcclone::emit_table(pcclone::sweep_fig3(cfg), cfg);
        } else if (verify->parsed()) {
            if (dims.empty()) dims = {2, 3};
            for (int d : dims)
                if (d < 2 || d > 6) {
                    std::cerr << "verify: dimensions must lie in 2..6\n";
                    return kExitUsage;
                }
            auto rep = pcclone::sweep_verify(cfg, dims);
            pcclone::emit_table(rep.table, cfg);
            std::cerr << "max discrepancy: "
                      << pcclone::format_number(rep.max_discrepancy) << "\n";
            if (!rep.converged) return kExitNoConvergence;
            if (rep.max_discrepancy > 1e-5) return kExitDiscrepancy;
        } else if (optimal->parsed()) {
            auto [f, s] = pcclone::optimal_symmetric(d_single);
            pcclone::Table t{{"d", "F_opt", "V", "X", "eta"},
                             {{static_cast<double>(d_single), f, s.V, s.X,
                               pcclone::shrinking_factor(f, d_single)}}};
            pcclone::emit_table(t, cfg);
        } else if (tradeoff->parsed()) {
            pcclone::FrontierOptions opt;
            opt.tol = cfg.tol;
            opt.seed = cfg.seed;
            auto pt = pcclone::tradeoff_point(d_single, p_single, opt);
            pcclone::Table t{{"d", "p", "F_A", "F_B", "eta_A", "eta_B"},
                             {{static_cast<double>(d_single), p_single, pt.fa,
                               pt.fb, pt.eta_a, pt.eta_b}}};
            pcclone::emit_table(t, cfg);
        }
    } catch (const pcclone::ConvergenceError& e) {
        std::cerr << "error: " << e.what()
                  << " (residual " << e.residual << ")\n";
        return kExitNoConvergence;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return 0;
}
