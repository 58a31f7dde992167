// Command-line front end: parameter sweeps to CSV / gnuplot column files and
// single-point evaluations.

#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "filmwave/filmwave.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_validation = 1;
constexpr int exit_numerical = 2;

void write_output(const filmwave::SweepResult& result, filmwave::OutputFormat format,
                  const std::optional<std::string>& path) {
    if (path)
        filmwave::emit(result, format, *path);
    else
        filmwave::emit(result, format, std::cout);
}

std::optional<filmwave::OutputFormat> parse_format_flag(const std::string& name) {
    if (name == "csv") return filmwave::OutputFormat::csv;
    if (name == "gnuplot" || name == "gnuplot-columns")
        return filmwave::OutputFormat::gnuplot_columns;
    return std::nullopt;
}

int run_command(const std::string& config_path, const std::optional<std::string>& out_flag,
                const std::string& format_flag, unsigned threads) {
    std::ifstream in(config_path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot open config file: " << config_path << "\n";
        return exit_validation;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();

    const filmwave::ParseResult parsed = filmwave::parse_config(buffer.str());
    if (!parsed.ok()) {
        for (const auto& issue : parsed.issues) {
            if (issue.line > 0)
                std::cerr << config_path << ":" << issue.line << ": error: " << issue.message
                          << "\n";
            else
                std::cerr << config_path << ": error: " << issue.message << "\n";
        }
        return exit_validation;
    }

    filmwave::RunConfig config = *parsed.config;
    if (!format_flag.empty()) {
        const auto f = parse_format_flag(format_flag);
        if (!f) {
            std::cerr << "error: unknown format: " << format_flag << "\n";
            return exit_validation;
        }
        config.format = *f;
    }
    const std::optional<std::string> out = out_flag ? out_flag : config.out;

    const filmwave::SweepResult result = filmwave::run_sweep(config.sweep, threads);
    write_output(result, config.format, out);
    return exit_ok;
}

int preset_command(const std::string& id, const std::optional<std::string>& out_flag,
                   const std::string& format_flag, unsigned threads) {
    const filmwave::FigurePreset preset = filmwave::figure_preset(id);
    filmwave::OutputFormat format = filmwave::OutputFormat::csv;
    if (!format_flag.empty()) {
        const auto f = parse_format_flag(format_flag);
        if (!f) {
            std::cerr << "error: unknown format: " << format_flag << "\n";
            return exit_validation;
        }
        format = *f;
    }
    const filmwave::SweepResult result = filmwave::run_sweep(preset.spec, threads);
    write_output(result, format, out_flag);
    return exit_ok;
}

int point_command(double omega, double d, double theta, double p,
                  const std::string& variant_name, const std::string& g_literal,
                  double rel_tol) {
    const auto variant = filmwave::parse_variant(variant_name);
    if (!variant) {
        std::cerr << "error: variant must be full_kd, thin_kd or low_freq_simplified\n";
        return exit_validation;
    }
    std::complex<double> G{1.0, 0.0};
    if (!g_literal.empty()) {
        const auto g = filmwave::detail::parse_complex(g_literal);
        if (!g) {
            std::cerr << "error: G must be a real or complex number (e.g. 0.9 or 0.9-0.1i)\n";
            return exit_validation;
        }
        G = *g;
    }

    const filmwave::MaterialParams material = filmwave::sodium();
    const filmwave::FilmConfig film{d, p, G};
    const filmwave::WaveConfig wave{omega, theta};
    film.validate();
    wave.validate();

    const filmwave::OpticalCoefficients c =
        filmwave::evaluate(material, film, wave, *variant, rel_tol);

    using filmwave::format_complex_g9;
    using filmwave::format_g9;
    std::cout << "omega = " << format_g9(omega) << "\n"
              << "d = " << format_g9(d) << "\n"
              << "theta = " << format_g9(theta) << "\n"
              << "p = " << format_g9(p) << "\n"
              << "variant = " << filmwave::to_string(*variant) << "\n"
              << "T = " << format_g9(c.T) << "\n"
              << "R = " << format_g9(c.R) << "\n"
              << "A = " << format_g9(c.A) << "\n"
              << "sigma_d_re = " << format_g9(c.sigma_d.real()) << "\n"
              << "sigma_d_im = " << format_g9(c.sigma_d.imag()) << "\n"
              << "Z1 = " << (c.Z1 ? format_complex_g9(*c.Z1) : "n/a") << "\n"
              << "Z2 = " << format_complex_g9(c.Z2) << "\n"
              << "P1 = " << (c.P1 ? format_complex_g9(*c.P1) : "n/a") << "\n"
              << "P2 = " << format_complex_g9(c.P2) << "\n";
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Thin metal film p-wave transmission/reflection/absorption sweeps"};
    app.set_version_flag("--version", std::string(filmwave::version_string));
    app.require_subcommand(0, 1);

    auto* run = app.add_subcommand("run", "run a sweep described by a config file");
    std::string config_path;
    std::optional<std::string> run_out;
    std::string run_format;
    unsigned run_threads = 0;
    run->add_option("--config", config_path, "config file path")->required();
    run->add_option("--out", run_out, "output file (default: stdout)");
    run->add_option("--format", run_format, "csv | gnuplot");
    run->add_option("--threads", run_threads, "worker threads (0 = auto)");

    auto* preset = app.add_subcommand("preset", "run one of the bundled presets fig1..fig9");
    std::string preset_id;
    std::optional<std::string> preset_out;
    std::string preset_format;
    unsigned preset_threads = 0;
    preset->add_option("--id", preset_id, "preset id (fig1..fig9)")->required();
    preset->add_option("--out", preset_out, "output file (default: stdout)");
    preset->add_option("--format", preset_format, "csv | gnuplot");
    preset->add_option("--threads", preset_threads, "worker threads (0 = auto)");

    auto* point = app.add_subcommand("point", "evaluate a single parameter point (sodium)");
    double omega = 0.0, d = 0.0, theta = 0.0, p = 0.0, rel_tol = 1e-10;
    std::string variant_name = "thin_kd";
    std::string g_literal;
    point->add_option("--omega", omega, "angular frequency [rad/s]")->required();
    point->add_option("--d", d, "film thickness [cm]")->required();
    point->add_option("--theta", theta, "incidence angle [rad]")->required();
    point->add_option("--p", p, "specularity coefficient")->required();
    point->add_option("--variant", variant_name, "full_kd | thin_kd | low_freq_simplified");
    point->add_option("--G", g_literal, "field-penetration factor (default 1)");
    point->add_option("--rel-tol", rel_tol, "quadrature relative tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_validation;
    }

    try {
        if (run->parsed()) return run_command(config_path, run_out, run_format, run_threads);
        if (preset->parsed())
            return preset_command(preset_id, preset_out, preset_format, preset_threads);
        if (point->parsed())
            return point_command(omega, d, theta, p, variant_name, g_literal, rel_tol);
        std::cerr << app.help();
        return exit_validation;
    } catch (const filmwave::validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_validation;
    } catch (const filmwave::io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_validation;
    } catch (const filmwave::numerical_error& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return exit_numerical;
    }
}
