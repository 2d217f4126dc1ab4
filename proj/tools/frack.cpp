// frack — command-line front end for the fractional-kinetics library.
//
// Subcommands:
//   ml         evaluate the three-parameter Mittag-Leffler function on a grid
//   kinetic    solve the fractional kinetic equation (closed form, optional
//              Volterra oracle cross-check columns)
//   diffusion  evaluate the fractional diffusion propagator in real space
//              and/or Fourier space
//   verify     run the library's self-verification suites
//
// Exit codes: 0 success, 1 verification failure, 2 argument/parameter error
// (including evaluations that honestly fail to converge), 3 ingestion error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include <frack/frack.hpp>

namespace {

// Strict double parse for the forcing mini-grammar; failures are argument
// errors (exit 2), unlike CSV ingestion failures (exit 3).
double parse_forcing_number(const std::string& text, const char* what) {
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (end == text.c_str() || *end != '\0')
        throw frack::InvalidParameters(std::string("forcing: cannot parse ") +
                                       what + " from '" + text + "'");
    return v;
}

// forcing-spec grammar:
//   const | power:rho=<r> | prabhakar:mu=<m>,gamma=<g> | csv:<path>
frack::ForcingTerm parse_forcing_spec(const std::string& spec) {
    if (spec == "const") return frack::ForcingTerm::constant();
    if (spec.rfind("power:", 0) == 0) {
        const std::string rest = spec.substr(6);
        if (rest.rfind("rho=", 0) != 0)
            throw frack::InvalidParameters(
                "forcing: expected power:rho=<r>, got '" + spec + "'");
        auto f = frack::ForcingTerm::power_law(
            parse_forcing_number(rest.substr(4), "rho"));
        f.validate();
        return f;
    }
    if (spec.rfind("prabhakar:", 0) == 0) {
        const std::string rest = spec.substr(10);
        const std::size_t comma = rest.find(',');
        if (rest.rfind("mu=", 0) != 0 || comma == std::string::npos ||
            rest.compare(comma + 1, 6, "gamma=") != 0)
            throw frack::InvalidParameters(
                "forcing: expected prabhakar:mu=<m>,gamma=<g>, got '" + spec + "'");
        auto f = frack::ForcingTerm::prabhakar(
            parse_forcing_number(rest.substr(3, comma - 3), "mu"),
            parse_forcing_number(rest.substr(comma + 7), "gamma"));
        f.validate();
        return f;
    }
    if (spec.rfind("csv:", 0) == 0) {
        const std::string path = spec.substr(4);
        std::ifstream in(path);
        if (!in)
            throw frack::IngestionError("forcing: cannot open '" + path + "'");
        return frack::ForcingTerm::sampled(frack::read_sampled_csv(in));
    }
    throw frack::InvalidParameters(
        "forcing: unknown spec '" + spec +
        "'; want const | power:rho=<r> | prabhakar:mu=<m>,gamma=<g> | csv:<path>");
}

void emit_table(const frack::SolutionTable& table, const std::string& format,
                const std::string& output_path) {
    table.validate();
    const std::string text =
        format == "json" ? frack::to_json(table) : frack::to_csv(table);
    if (output_path.empty() || output_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(output_path, std::ios::binary);
    if (!out)
        throw frack::InvalidParameters("cannot open output file '" + output_path +
                                       "'");
    out << text;
}

struct MlArgs {
    double alpha = 1.0, beta = 1.0, gamma = 1.0;
    std::vector<double> z;
    int steps = 101;
    std::string format = "csv", output;
};

int run_ml(const MlArgs& a) {
    const frack::MLParams p{a.alpha, a.beta, a.gamma};
    if (a.steps < 1)
        throw frack::InvalidParameters("ml: steps must be >= 1");
    const double z_min = a.z.at(0), z_max = a.z.at(1);
    if (!(z_min <= z_max))
        throw frack::InvalidParameters("ml: need z_min <= z_max");
    if (a.steps > 1 && !(z_min < z_max))
        throw frack::InvalidParameters("ml: need z_min < z_max when steps > 1");

    frack::SolutionTable table;
    table.axis_names = {"z"};
    for (int i = 0; i < a.steps; ++i) {
        const double z =
            a.steps == 1
                ? z_min
                : z_min + (z_max - z_min) * static_cast<double>(i) /
                              static_cast<double>(a.steps - 1);
        table.rows.push_back(
            frack::SolutionRow{{z}, {frack::mittag_leffler(p, z)}});
    }
    table.metadata["alpha"] = frack::format_double(a.alpha);
    table.metadata["beta"] = frack::format_double(a.beta);
    table.metadata["gamma"] = frack::format_double(a.gamma);
    emit_table(table, a.format, a.output);
    return 0;
}

struct KineticArgs {
    double nu = 1.0, c = 1.0, n0 = 1.0, t_max = 0.0;
    std::string forcing = "const";
    int steps = 256;
    bool with_oracle = false;
    std::string format = "csv", output;
};

int run_kinetic(const KineticArgs& a) {
    if (a.steps < 1)
        throw frack::InvalidParameters("kinetic: steps must be >= 1");
    if (!(a.t_max > 0.0))
        throw frack::InvalidParameters("kinetic: t_max must be > 0");
    frack::KineticProblem prob;
    prob.nu = a.nu;
    prob.c = a.c;
    prob.n0 = a.n0;
    prob.forcing = parse_forcing_spec(a.forcing);
    prob.validate();

    // Request grid excludes t = 0: catalog forcings may diverge there and
    // the closed form is an initial-value statement anyway.
    std::vector<double> t(static_cast<std::size_t>(a.steps));
    for (int i = 1; i <= a.steps; ++i)
        t[static_cast<std::size_t>(i - 1)] =
            a.t_max * static_cast<double>(i) / static_cast<double>(a.steps);

    frack::SolutionTable table = frack::solve_closed_form(prob, t);
    table.value_names = {"N_closed"};

    if (a.with_oracle) {
        // Internal fine grid: a multiple of `steps` panels so every request
        // node is an oracle node exactly.
        const int per = std::max(1, (4096 + a.steps - 1) / a.steps);
        const int n = a.steps * per;
        const std::vector<double> fine =
            frack::uniform_grid(0.0, a.t_max, static_cast<std::size_t>(n) + 1);
        const frack::SolutionTable oracle = frack::solve_oracle(prob, fine);
        const std::size_t offset =
            oracle.metadata.count("first_node_omitted") ? 1 : 0;
        table.value_names = {"N_closed", "N_oracle", "abs_diff"};
        for (int i = 1; i <= a.steps; ++i) {
            const std::size_t fine_index = static_cast<std::size_t>(i * per);
            const double n_oracle =
                oracle.rows.at(fine_index - offset).values.at(0);
            frack::SolutionRow& row = table.rows.at(static_cast<std::size_t>(i - 1));
            row.values.push_back(n_oracle);
            row.values.push_back(std::fabs(row.values.at(0) - n_oracle));
        }
        table.metadata["oracle_grid_points"] = std::to_string(n + 1);
    }
    emit_table(table, a.format, a.output);
    return 0;
}

struct DiffusionArgs {
    double nu = 1.0, c_pow_nu = 1.0, t = 1.0;
    std::vector<double> x;
    std::vector<double> k{0.0, 4.0};
    int steps = 101;
    std::string emit = "realspace";
    std::string format = "csv", output;
};

int run_diffusion(const DiffusionArgs& a) {
    if (a.steps < 1)
        throw frack::InvalidParameters("diffusion: steps must be >= 1");
    frack::DiffusionQuery probe{a.nu, a.c_pow_nu, 0.0, a.t};
    probe.validate();

    const bool realspace = a.emit == "realspace" || a.emit == "both";
    const bool fourier = a.emit == "fourier" || a.emit == "both";
    auto grid = [&](const std::vector<double>& range, const char* name) {
        const double lo = range.at(0), hi = range.at(1);
        if (!(lo <= hi) || (a.steps > 1 && !(lo < hi)))
            throw frack::InvalidParameters(std::string("diffusion: bad ") + name +
                                           " range");
        std::vector<double> g(static_cast<std::size_t>(a.steps));
        for (int i = 0; i < a.steps; ++i)
            g[static_cast<std::size_t>(i)] =
                a.steps == 1 ? lo
                             : lo + (hi - lo) * static_cast<double>(i) /
                                        static_cast<double>(a.steps - 1);
        return g;
    };

    frack::SolutionTable table;
    if (a.emit == "both") {
        // Mixed-domain table: first coordinate selects the domain
        // (0 = realspace x, 1 = fourier k), second is the coordinate itself.
        table.axis_names = {"domain", "coord"};
        for (double x : grid(a.x, "x")) {
            frack::DiffusionQuery q{a.nu, a.c_pow_nu, x, a.t};
            table.rows.push_back(
                frack::SolutionRow{{0.0, x}, {frack::green_function(q)}});
        }
        for (double k : grid(a.k, "k"))
            table.rows.push_back(frack::SolutionRow{
                {1.0, k}, {frack::fourier_mode(a.nu, a.c_pow_nu, k, a.t)}});
        table.metadata["domain_key"] = "0=realspace;1=fourier";
    } else if (realspace) {
        table.axis_names = {"x"};
        for (double x : grid(a.x, "x")) {
            frack::DiffusionQuery q{a.nu, a.c_pow_nu, x, a.t};
            table.rows.push_back(
                frack::SolutionRow{{x}, {frack::green_function(q)}});
        }
    } else if (fourier) {
        table.axis_names = {"k"};
        for (double k : grid(a.k, "k"))
            table.rows.push_back(frack::SolutionRow{
                {k}, {frack::fourier_mode(a.nu, a.c_pow_nu, k, a.t)}});
    }
    table.metadata["nu"] = frack::format_double(a.nu);
    table.metadata["c_pow_nu"] = frack::format_double(a.c_pow_nu);
    table.metadata["t"] = frack::format_double(a.t);
    table.metadata["normalization"] =
        frack::format_double(frack::normalization_check(a.nu, a.c_pow_nu, a.t));
    emit_table(table, a.format, a.output);
    return 0;
}

int run_verify(const std::string& suite) {
    std::string warning;
    const double scale = frack::verify_tolerance_scale(&warning);
    if (!warning.empty()) std::cerr << "warning: " << warning << "\n";

    const frack::VerifyReport report = frack::run_verification(suite, scale);
    std::size_t failed = 0;
    for (const frack::VerifyCheck& check : report.checks) {
        std::cout << frack::format_check_line(check) << "\n";
        if (!check.passed) ++failed;
    }
    std::cout << report.checks.size() << " checks, " << failed << " failed\n";
    return report.all_passed() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"fractional kinetics & diffusion toolkit"};
    app.require_subcommand(1);

    MlArgs ml;
    CLI::App* cmd_ml = app.add_subcommand(
        "ml", "evaluate E^gamma_{alpha,beta}(z) on a uniform z grid");
    cmd_ml->add_option("--alpha", ml.alpha, "first order parameter, > 0")
        ->required();
    cmd_ml->add_option("--beta", ml.beta, "second parameter (default 1)");
    cmd_ml->add_option("--gamma", ml.gamma, "Prabhakar level (default 1)");
    cmd_ml->add_option("--z", ml.z, "argument range: z_min z_max")
        ->expected(2)
        ->required();
    cmd_ml->add_option("--steps", ml.steps, "number of grid rows (default 101)");
    cmd_ml->add_option("--format", ml.format, "output format (default csv)")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd_ml->add_option("--output", ml.output, "output file (default stdout)");

    KineticArgs kin;
    CLI::App* cmd_kinetic = app.add_subcommand(
        "kinetic", "solve the fractional kinetic equation on (0, t_max]");
    cmd_kinetic->add_option("--nu", kin.nu, "fractional order in (0, 2]")
        ->required();
    cmd_kinetic->add_option("--c", kin.c, "rate constant, > 0 (default 1)");
    cmd_kinetic->add_option("--n0", kin.n0, "initial density (default 1)");
    cmd_kinetic->add_option(
        "--forcing", kin.forcing,
        "const | power:rho=<r> | prabhakar:mu=<m>,gamma=<g> | csv:<path>");
    cmd_kinetic->add_option("--t-max", kin.t_max, "end of the time grid, > 0")
        ->required();
    cmd_kinetic->add_option("--steps", kin.steps,
                            "number of grid rows (default 256)");
    cmd_kinetic->add_flag("--with-oracle", kin.with_oracle,
                          "add Volterra-oracle and abs-diff columns");
    cmd_kinetic->add_option("--format", kin.format, "output format (default csv)")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd_kinetic->add_option("--output", kin.output,
                            "output file (default stdout)");

    DiffusionArgs dif;
    CLI::App* cmd_diffusion = app.add_subcommand(
        "diffusion", "evaluate the fractional diffusion propagator at time t");
    cmd_diffusion->add_option("--nu", dif.nu, "fractional order in (0, 2)")
        ->required();
    cmd_diffusion->add_option("--c", dif.c_pow_nu,
                              "diffusion constant c^nu, > 0 (default 1)");
    cmd_diffusion->add_option("--t", dif.t, "time, > 0")->required();
    cmd_diffusion->add_option("--x", dif.x, "position range: x_min x_max")
        ->expected(2);
    cmd_diffusion->add_option("--k", dif.k,
                              "wavenumber range for fourier output (default 0 4)")
        ->expected(2);
    cmd_diffusion->add_option("--steps", dif.steps,
                              "number of grid rows per domain (default 101)");
    cmd_diffusion
        ->add_option("--emit", dif.emit, "realspace | fourier | both")
        ->check(CLI::IsMember({"realspace", "fourier", "both"}));
    cmd_diffusion
        ->add_option("--format", dif.format, "output format (default csv)")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd_diffusion->add_option("--output", dif.output,
                              "output file (default stdout)");

    std::string suite = "all";
    CLI::App* cmd_verify =
        app.add_subcommand("verify", "run self-verification suites");
    cmd_verify->add_option(
        "--suite", suite, "ml | hfun | kinetic | diffusion | transforms | all");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2; // argument errors map to the exit-2 contract
    }

    try {
        if (app.got_subcommand(cmd_ml)) return run_ml(ml);
        if (app.got_subcommand(cmd_kinetic)) return run_kinetic(kin);
        if (app.got_subcommand(cmd_diffusion)) {
            if (dif.x.empty() &&
                (dif.emit == "realspace" || dif.emit == "both"))
                throw frack::InvalidParameters(
                    "diffusion: --x <min> <max> is required for realspace output");
            return run_diffusion(dif);
        }
        if (app.got_subcommand(cmd_verify)) return run_verify(suite);
    } catch (const frack::IngestionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const frack::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
