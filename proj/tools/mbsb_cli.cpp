#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "mbsb/bench.hpp"
#include "mbsb/dataset.hpp"
#include "mbsb/errors.hpp"
#include "mbsb/generators.hpp"
#include "mbsb/oracle.hpp"
#include "mbsb/report.hpp"
#include "mbsb/solver.hpp"

namespace {

struct IoOpts {
    std::string input, red_file, blue_file;
    std::string format = "csv";
    std::string out;
};

mbsb::Dataset read_input(const IoOpts& io) {
    const mbsb::Format fmt = mbsb::format_from_name(io.format);
    if (!io.input.empty()) return mbsb::load_dataset_file(io.input, fmt);
    if (io.red_file.empty()) throw mbsb::invalid_parameters("need --input or --red");
    mbsb::Dataset ds;
    ds.red = mbsb::load_points_file(io.red_file, fmt);
    if (!io.blue_file.empty()) ds.blue = mbsb::load_points_file(io.blue_file, fmt);
    return ds;
}

void write_text(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw mbsb::error("cannot open " + out_path);
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
}

int run_solve(const IoOpts& io, const std::string& mode, bool timings) {
    mbsb::Dataset ds = read_input(io);
    mbsb::Scene scene = mbsb::build_scene(ds.red, ds.blue);

    if (mode == "oracle") {
        mbsb::OracleResult orc = mbsb::solve_bruteforce(ds.red, ds.blue);
        write_text(io.out, mbsb::oracle_report_json(scene, orc));
        return 0;
    }
    if (mode == "both") {
        mbsb::SolveResult sr = mbsb::solve_scene(scene);
        mbsb::OracleResult orc = mbsb::solve_bruteforce(ds.red, ds.blue);
        const double fast_vol = sr.bounded ? volume(sr.best->box) : mbsb::inf;
        const double oracle_vol = orc.bounded ? orc.best_volume : mbsb::inf;
        std::cout << "fast:   " << mbsb::format_double(fast_vol) << "\n";
        std::cout << "oracle: " << mbsb::format_double(oracle_vol) << "\n";
        const bool outcome_match = sr.bounded == orc.bounded;
        const bool equal = outcome_match && (!sr.bounded || fast_vol == oracle_vol);
        std::cout << (equal ? "MATCH" : "MISMATCH") << "\n";
        return equal ? 0 : 1;
    }
    mbsb::SolveResult sr = mbsb::solve_scene(scene);
    write_text(io.out, mbsb::solve_report_json(scene, sr, timings));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"maximum-volume bichromatic separating box"};
    app.require_subcommand(1);

    IoOpts io;
    std::string mode = "fast";
    bool timings = false;

    auto add_io = [&](CLI::App* cmd) {
        cmd->add_option("--input", io.input, "combined dataset file (label,x,y,z)");
        cmd->add_option("--red", io.red_file, "red points file (x,y,z rows or JSON array)");
        cmd->add_option("--blue", io.blue_file, "blue points file");
        cmd->add_option("--format", io.format, "csv|json")->capture_default_str();
        cmd->add_option("--out", io.out, "output path (default stdout)");
    };

    CLI::App* solve = app.add_subcommand("solve", "compute the maximum separating box");
    add_io(solve);
    solve->add_option("--mode", mode, "fast|oracle|both")->capture_default_str();
    solve->add_flag("--timings", timings, "include wall-clock timings in the report");

    CLI::App* oracle = app.add_subcommand("oracle", "brute-force reference solver");
    add_io(oracle);

    mbsb::GenSpec gen;
    std::string gen_out, gen_format = "csv";
    CLI::App* genc = app.add_subcommand("gen", "generate a deterministic instance");
    genc->add_option("--generator", gen.generator,
                     "uniform-annulus|clustered-corners|grid-degenerate|sparse-blockers")
        ->required();
    genc->add_option("--n", gen.n, "red point count")->required();
    genc->add_option("--m", gen.m, "blue point count")->required();
    genc->add_option("--seed", gen.seed, "rng seed")->capture_default_str();
    genc->add_option("--grid", gen.grid, "grid cells (grid-degenerate)")->capture_default_str();
    genc->add_option("--out", gen_out, "output path (default stdout)");
    genc->add_option("--format", gen_format, "csv|json")->capture_default_str();

    mbsb::BenchSweep sweep;
    std::string bench_out;
    CLI::App* bench = app.add_subcommand("bench", "scaling sweep, CSV per run");
    bench->add_option("--generator", sweep.generator)->capture_default_str();
    bench->add_option("--m-list", sweep.m_values, "blue counts to sweep");
    bench->add_option("--n-list", sweep.n_values, "red counts to sweep");
    bench->add_option("--reps", sweep.reps)->capture_default_str();
    bench->add_option("--mode", sweep.mode, "fast|oracle")->capture_default_str();
    bench->add_option("--seed", sweep.seed)->capture_default_str();
    bench->add_option("--grid", sweep.grid)->capture_default_str();
    bench->add_option("--out", bench_out, "CSV path (default stdout)");

    std::uint64_t selftest_seed = 1;
    std::size_t selftest_count = 50;
    CLI::App* selftest = app.add_subcommand("selftest", "quick differential check vs the oracle");
    selftest->add_option("--seed", selftest_seed)->capture_default_str();
    selftest->add_option("--count", selftest_count, "instances per generator")
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) return run_solve(io, mode, timings);
        if (oracle->parsed()) return run_solve(io, "oracle", false);
        if (genc->parsed()) {
            mbsb::Dataset ds = mbsb::generate(gen);
            std::ostringstream os;
            mbsb::save_dataset(os, ds, mbsb::format_from_name(gen_format));
            write_text(gen_out, os.str());
            return 0;
        }
        if (bench->parsed()) {
            std::vector<mbsb::BenchRecord> recs;
            if (bench_out.empty()) {
                recs = mbsb::run_bench(sweep, std::cout);
                std::cerr << mbsb::slope_summary(recs);
            } else {
                std::ofstream out(bench_out);
                if (!out) throw mbsb::error("cannot open " + bench_out);
                recs = mbsb::run_bench(sweep, out);
                std::cout << mbsb::slope_summary(recs);
            }
            return 0;
        }
        if (selftest->parsed()) {
            const std::vector<std::string> gens = {"uniform-annulus", "clustered-corners",
                                                   "grid-degenerate", "sparse-blockers"};
            std::size_t failures = 0, runs = 0;
            for (const std::string& g : gens) {
                for (std::size_t i = 0; i < selftest_count; ++i) {
                    mbsb::GenSpec gs;
                    gs.generator = g;
                    gs.seed = selftest_seed + i;
                    gs.n = 1 + (gs.seed * 7 + i) % 20;
                    gs.m = (g == "sparse-blockers") ? 6 + i % 7 : i % 13;
                    mbsb::Dataset ds = mbsb::generate(gs);
                    mbsb::SolveResult sr = mbsb::solve(ds.red, ds.blue);
                    mbsb::OracleResult orc = mbsb::solve_bruteforce(ds.red, ds.blue);
                    ++runs;
                    const bool ok =
                        sr.bounded == orc.bounded &&
                        (!sr.bounded || volume(sr.best->box) == orc.best_volume);
                    if (!ok) {
                        ++failures;
                        std::cerr << "MISMATCH " << g << " seed=" << gs.seed << " n=" << gs.n
                                  << " m=" << gs.m << "\n";
                    }
                }
            }
            std::cout << (failures == 0 ? "selftest PASS" : "selftest FAIL") << " (" << runs
                      << " instances)\n";
            return failures == 0 ? 0 : 1;
        }
    } catch (const mbsb::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
