#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "envelope.hpp"

namespace {

int write_output(const gegchain::cli::Envelope& env, const std::string& format,
                 const std::string& out_path) {
    std::string text;
    if (format == "csv")
        text = gegchain::cli::to_csv(env);
    else
        text = env.dump(2) + "\n";

    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return 0;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open output file '" << out_path << "'\n";
        return 3;
    }
    out << text;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gegenbauer chain model: spectra, banded metrics and positivity domains"};
    app.require_subcommand(1);

    double a = 1.0;
    std::size_t n = 3;
    double tol = 1e-9;
    std::string format = "json";
    int jobs = 0;
    std::string out_path;
    app.add_option("--a", a, "Gegenbauer parameter a > 0")->capture_default_str();
    app.add_option("--n", n, "matrix dimension N")->capture_default_str();
    app.add_option("--tol", tol, "numerical tolerance")->capture_default_str();
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_option("--jobs", jobs, "worker threads (0 = logical CPU count)")
        ->capture_default_str();
    app.add_option("--out", out_path, "output path (default stdout)");

    // let the global flags appear after the subcommand name as well
    app.fallthrough();

    auto* table1 = app.add_subcommand("table1", "positivity boundaries G, G', G'' for N = 1..n-max");
    table1->fallthrough();
    std::size_t n_max = 9;
    table1->add_option("--n-max", n_max, "largest dimension")->capture_default_str();

    auto* fig1 = app.add_subcommand("fig1", "eigenvalue tracks of theta0 + g*p1 over a g-grid");
    fig1->fallthrough();
    std::size_t samples = 121;
    double g_min = -1.2, g_max = 1.2;
    fig1->add_option("--samples", samples, "grid size")->capture_default_str();
    fig1->add_option("--g-min", g_min, "left end of the grid")->capture_default_str();
    fig1->add_option("--g-max", g_max, "right end of the grid")->capture_default_str();

    auto* dump = app.add_subcommand("dump", "serialize a matrix or spectrum");
    dump->fallthrough();
    std::string object;
    dump->add_option("--object", object,
                     "hamiltonian | theta0 | p1 | p2 | plongrange | partner | zeros")
        ->required();

    auto* resid = app.add_subcommand("residual", "intertwining residual of a pseudometric");
    resid->fallthrough();
    std::string resid_object;
    resid->add_option("--object", resid_object, "theta0 | p1 | p2 | plongrange")->required();

    auto* bound = app.add_subcommand("boundary", "coupling at which the negative count grows");
    bound->fallthrough();
    int max_negatives = 0;
    bound->add_option("--max-negatives", max_negatives, "0, 1 or 2")
        ->check(CLI::Range(0, 2))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        gegchain::cli::Envelope env;
        if (*table1)
            env = gegchain::cli::cmd_table1(n_max, a, tol, jobs);
        else if (*fig1)
            env = gegchain::cli::cmd_fig1(samples, g_min, g_max, n, a);
        else if (*dump)
            env = gegchain::cli::cmd_dump(object, n, a);
        else if (*resid)
            env = gegchain::cli::cmd_residual(resid_object, n, a);
        else
            env = gegchain::cli::cmd_boundary(n, a, max_negatives, tol);
        return write_output(env, format, out_path);
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    }
}
