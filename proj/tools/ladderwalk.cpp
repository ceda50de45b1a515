// Command-line front end: sweeps, simulations, figure series and the
// verification suite. Exit codes: 0 success, 1 verification failure,
// 2 usage error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include <CLI11.hpp>

#include "ladderwalk/ladderwalk.hpp"

namespace {

using namespace ladderwalk;

struct CommonFlags {
    std::vector<int> configs;
    std::optional<std::size_t> length;
    std::size_t lmin = 1;
    std::size_t lmax = 14;
    std::string init = "0,1,0";
    bool normalize = false;
    bool simulate = false;
    double tol = 1e-10;
    std::size_t t_cap = 1'000'000;
    std::uint64_t seed = 20200301;
    std::string out;
};

void add_config_flags(CLI::App *cmd, CommonFlags &f) {
    cmd->add_option("--config", f.configs, "ladder configuration 1..4 (repeatable)")->check(CLI::Range(1, 4));
}

void add_range_flags(CLI::App *cmd, CommonFlags &f) {
    cmd->add_option("--length", f.length, "single ladder length L")->check(CLI::PositiveNumber);
    cmd->add_option("--lmin", f.lmin, "smallest L of a range")->check(CLI::PositiveNumber);
    cmd->add_option("--lmax", f.lmax, "largest L of a range")->check(CLI::PositiveNumber);
}

void add_init_flags(CLI::App *cmd, CommonFlags &f) {
    cmd->add_option("--init", f.init, "amplitudes x,y,z on (0,2),(0,1),(0,0); complex as re+imj");
    cmd->add_flag("--normalize", f.normalize, "rescale --init to unit norm");
}

void add_limit_flags(CLI::App *cmd, CommonFlags &f) {
    cmd->add_option("--tol", f.tol, "convergence tolerance of the simulated limit")->check(CLI::PositiveNumber);
    cmd->add_option("--t-cap", f.t_cap, "maximum number of simulated steps");
}

void add_out_flag(CLI::App *cmd, CommonFlags &f) { cmd->add_option("--out", f.out, "output path (default stdout)"); }

std::vector<LadderConfig> configs_of(const CommonFlags &f, std::vector<int> fallback) {
    const auto &ids = f.configs.empty() ? fallback : f.configs;
    std::vector<LadderConfig> out;
    for (int id : ids) {
        out.push_back(config_from_int(id));
    }
    return out;
}

std::pair<std::size_t, std::size_t> range_of(const CommonFlags &f) {
    if (f.length) {
        return {*f.length, *f.length};
    }
    if (f.lmax < f.lmin) {
        throw std::invalid_argument("--lmax must not be smaller than --lmin");
    }
    return {f.lmin, f.lmax};
}

class Output {
  public:
    explicit Output(const std::string &path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) {
                throw std::invalid_argument("cannot open output file '" + path + "'");
            }
        }
    }
    std::ostream &stream() { return file_.is_open() ? static_cast<std::ostream &>(file_) : std::cout; }

  private:
    std::ofstream file_;
};

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Survival probability of the Grover walk on the ladder graph with a sink"};
    app.require_subcommand(1);
    CommonFlags f;

    auto *sweep = app.add_subcommand("sweep", "closed form, projector and optional simulation per L");
    add_config_flags(sweep, f);
    add_range_flags(sweep, f);
    add_init_flags(sweep, f);
    sweep->add_flag("--simulate", f.simulate, "also simulate the walk to its limit");
    add_limit_flags(sweep, f);
    add_out_flag(sweep, f);

    auto *simulate = app.add_subcommand("simulate", "iterate the absorbing walk until S(t) converges");
    bool series = false;
    add_config_flags(simulate, f);
    add_range_flags(simulate, f);
    add_init_flags(simulate, f);
    add_limit_flags(simulate, f);
    simulate->add_flag("--series", series, "print S(t) for t = 0..t-cap instead of the limit");
    add_out_flag(simulate, f);

    auto *analytic = app.add_subcommand("analytic", "closed-form components only");
    add_config_flags(analytic, f);
    add_range_flags(analytic, f);
    add_init_flags(analytic, f);
    add_out_flag(analytic, f);

    auto *darkdim = app.add_subcommand("darkdim", "dark-subspace dimension, Krylov vs analytic count");
    add_config_flags(darkdim, f);
    add_range_flags(darkdim, f);
    add_out_flag(darkdim, f);

    auto *verify = app.add_subcommand("verify", "run the invariant suite for L = 1..lmax");
    std::size_t verify_lmax = 6;
    verify->add_option("--lmax", verify_lmax, "largest ladder length")->check(CLI::PositiveNumber);
    verify->add_option("--seed", f.seed, "seed for the random states");
    add_out_flag(verify, f);

    auto *figure = app.add_subcommand("figure", "series of one figure panel: 4, 5L, 5R, 6L, 6R");
    std::string figure_id;
    figure->add_option("id", figure_id, "panel id")->required();
    add_out_flag(figure, f);

    auto *dump = app.add_subcommand("dump-graph", "edge list as `tail head kind` lines");
    add_config_flags(dump, f);
    dump->add_option("--length", f.length, "ladder length L")->check(CLI::PositiveNumber)->required();
    add_out_flag(dump, f);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 2;
    }

    try {
        Output out(f.out);
        auto &os = out.stream();
        if (sweep->parsed()) {
            SweepOptions opts;
            opts.configs = configs_of(f, {1});
            std::tie(opts.lmin, opts.lmax) = range_of(f);
            opts.init = parse_init(f.init, f.normalize);
            opts.simulate = f.simulate;
            opts.limit = {f.tol, f.t_cap};
            write_sweep(os, opts);
        } else if (simulate->parsed()) {
            const auto init = parse_init(f.init, f.normalize);
            const auto [lmin, lmax] = range_of(f);
            const auto configs = configs_of(f, {1});
            if (series) {
                if (configs.size() != 1 || lmin != lmax) {
                    throw std::invalid_argument("--series needs exactly one --config and one --length");
                }
                write_series(os, {configs.front(), lmin}, init, f.t_cap);
            } else {
                write_simulation(os, configs, lmin, lmax, init, {f.tol, f.t_cap});
            }
        } else if (analytic->parsed()) {
            const auto [lmin, lmax] = range_of(f);
            write_analytic(os, configs_of(f, {1, 2, 3, 4}), lmin, lmax, parse_init(f.init, f.normalize));
        } else if (darkdim->parsed()) {
            const auto [lmin, lmax] = range_of(f);
            write_darkdim(os, configs_of(f, {1, 2, 3, 4}), lmin, lmax);
        } else if (verify->parsed()) {
            VerifyOptions opts;
            opts.lmax = verify_lmax;
            opts.seed = f.seed;
            const auto rep = run_verification(opts);
            write_verify_report(os, rep);
            return rep.passed() ? 0 : 1;
        } else if (figure->parsed()) {
            write_figure(os, parse_figure_id(figure_id));
        } else if (dump->parsed()) {
            const auto configs = configs_of(f, {1});
            if (configs.size() != 1) {
                throw std::invalid_argument("dump-graph takes a single --config");
            }
            dump_graph(os, build_ladder({configs.front(), *f.length}));
        }
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
