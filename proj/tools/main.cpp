// Command-line front end: eigenvalues, polynomial tables, sampled fields,
// spectral lines, lifetimes, the transition matrix, and the verification
// suite. Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 numerical failure.
#include <complex>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ppb/dynamics.hpp"
#include "ppb/eigen.hpp"
#include "ppb/errors.hpp"
#include "ppb/polys.hpp"
#include "ppb/spectra.hpp"
#include "ppb/verify.hpp"

namespace {

using ppb::BarrierParams;
using ppb::Branch;
using ppb::Complex;
using ppb::GridSpec;
using ppb::TimeMode;

Branch parse_branch(const std::string& name) {
    if (name == "plus") return Branch::Plus;
    if (name == "minus") return Branch::Minus;
    throw std::invalid_argument("unknown branch: " + name + " (use plus or minus)");
}

TimeMode parse_mode(const std::string& name) {
    if (name == "separate") return TimeMode::Separate;
    if (name == "combined") return TimeMode::Combined;
    throw std::invalid_argument("unknown mode: " + name + " (use separate or combined)");
}

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
    out << text;
}

std::ostringstream make_csv_stream() {
    std::ostringstream csv;
    csv << std::scientific << std::setprecision(16);
    return csv;
}

nlohmann::ordered_json params_json(const BarrierParams& p) {
    return {{"m", p.m}, {"gamma", p.gamma}, {"V0", p.V0}, {"hbar", p.hbar}};
}

std::string run_eigen(const BarrierParams& params, std::size_t n_max) {
    nlohmann::ordered_json j;
    j["params"] = params_json(params);
    j["beta"] = params.beta();
    j["beta_tilde"] = params.beta_tilde();
    nlohmann::ordered_json states = nlohmann::ordered_json::array();
    for (std::size_t n = 0; n <= n_max; ++n) {
        for (Branch branch : {Branch::Plus, Branch::Minus}) {
            const auto state = ppb::eigen::make_state(branch, n, params);
            const Complex bt = ppb::eigen::normalization_B_tilde(branch, n, params);
            const auto lt = ppb::dynamics::mean_lifetime(branch, n, params);
            states.push_back({
                {"n", n},
                {"branch", branch == Branch::Plus ? "plus" : "minus"},
                {"energy", {{"re", state.E.real()}, {"im", state.E.imag()}}},
                {"half_width", ppb::spectra::half_width(n, params)},
                {"B", {{"re", state.B.real()}, {"im", state.B.imag()}}},
                {"B_tilde", {{"re", bt.real()}, {"im", bt.imag()}}},
                {"lifetime_mean", lt.mean},
                {"lifetime_spread", lt.spread},
            });
        }
    }
    j["states"] = states;
    return j.dump(2) + "\n";
}

std::string run_polys(Branch branch, std::size_t n_max) {
    auto csv = make_csv_stream();
    csv << "n,k,re,im\n";
    for (std::size_t n = 0; n <= n_max; ++n) {
        const auto& h = ppb::polys::hermite_like_coeffs(branch, n);
        for (std::size_t k = 0; k <= n; ++k)
            csv << n << "," << k << "," << h.coeff(k).real() << "," << h.coeff(k).imag()
                << "\n";
    }
    return csv.str();
}

std::string run_field(const BarrierParams& params, const std::string& what, Branch branch,
                      std::size_t n, TimeMode mode, double t, double lo, double hi,
                      std::size_t points) {
    if (points < 2) throw std::invalid_argument("need at least 2 points");
    if (!(hi > lo)) throw std::invalid_argument("need x-max > x-min");
    const GridSpec grid = GridSpec::linspace(lo, hi, points);
    auto csv = make_csv_stream();
    if (what == "psi" || what == "psi-momentum" || what == "u" || what == "u-momentum") {
        ppb::SampledField field;
        const char* axis = "x";
        if (what == "psi") {
            field = ppb::dynamics::sample_wavefunction(branch, n, params, t, grid, mode);
        } else if (what == "psi-momentum") {
            axis = "p";
            field.grid = grid;
            field.values.reserve(points);
            for (std::size_t i = 0; i < points; ++i)
                field.values.push_back(
                    ppb::dynamics::wavefunction_p(branch, n, params, t, grid.x(i), mode));
        } else if (what == "u") {
            field = ppb::eigen::sample_eigenfunction_x(branch, n, params, grid);
        } else {
            axis = "p";
            field = ppb::eigen::sample_eigenfunction_p(branch, n, params, grid);
        }
        csv << axis << ",re,im\n";
        for (std::size_t i = 0; i < points; ++i)
            csv << field.grid.x(i) << "," << field.values[i].real() << ","
                << field.values[i].imag() << "\n";
        return csv.str();
    }
    if (what == "density" || what == "current") {
        const auto field = what == "density"
                               ? ppb::dynamics::sample_density(branch, n, params, t, grid, mode)
                               : ppb::dynamics::sample_current(branch, n, params, t, grid, mode);
        csv << "x," << what << "\n";
        for (std::size_t i = 0; i < points; ++i)
            csv << field.grid.x(i) << "," << field.values[i] << "\n";
        return csv.str();
    }
    throw std::invalid_argument(
        "unknown field: " + what +
        " (use psi, psi-momentum, density, current, u, u-momentum)");
}

std::string run_spectrum(const BarrierParams& params, std::size_t n, TimeMode mode,
                         double window, std::size_t points) {
    const auto shape = ppb::spectra::sample_line_shape(n, params, mode, window, points);
    auto csv = make_csv_stream();
    csv << "E,density\n";
    for (std::size_t i = 0; i < shape.values.size(); ++i)
        csv << shape.grid.x(i) << "," << shape.values[i] << "\n";
    return csv.str();
}

std::string run_lifetimes(const BarrierParams& params, std::size_t n_max) {
    auto csv = make_csv_stream();
    csv << "n,half_width,decay_mean,growth_mean,spread,uncertainty_product\n";
    for (std::size_t n = 0; n <= n_max; ++n) {
        const auto plus = ppb::dynamics::mean_lifetime(Branch::Plus, n, params);
        const auto minus = ppb::dynamics::mean_lifetime(Branch::Minus, n, params);
        csv << n << "," << ppb::spectra::half_width(n, params) << "," << plus.mean << ","
            << minus.mean << "," << plus.spread << ","
            << ppb::spectra::uncertainty_product(n, params) << "\n";
    }
    return csv.str();
}

std::string run_smatrix(const BarrierParams& params, std::size_t size) {
    auto csv = make_csv_stream();
    csv << "m,n,re,im\n";
    for (std::size_t m = 0; m < size; ++m)
        for (std::size_t n = 0; n < size; ++n) {
            const Complex s = ppb::dynamics::transition_matrix(m, n, params);
            csv << m << "," << n << "," << s.real() << "," << s.imag() << "\n";
        }
    return csv.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Analytic solution of the inverted-oscillator barrier: complex "
                 "eigenvalues, resonance eigenfunctions, growth/decay dynamics, and "
                 "Breit-Wigner energy lines"};
    app.require_subcommand(1);
    app.fallthrough(); // global options remain valid after the subcommand name

    BarrierParams params;
    app.add_option("--m", params.m, "particle mass")->capture_default_str();
    app.add_option("--gamma", params.gamma, "barrier curvature frequency")
        ->capture_default_str();
    app.add_option("--v0", params.V0, "barrier height")->capture_default_str();
    app.add_option("--hbar", params.hbar, "reduced Planck constant")->capture_default_str();
    std::string out_path;
    app.add_option("--out", out_path, "write output to this file instead of stdout");

    auto* eigen_cmd = app.add_subcommand("eigen", "complex eigenvalue ladder and "
                                                  "normalization constants (JSON)");
    std::size_t eigen_n_max = 5;
    eigen_cmd->add_option("--n-max", eigen_n_max, "largest quantum number")
        ->capture_default_str();

    auto* polys_cmd =
        app.add_subcommand("polys", "complex Hermite-like coefficient table (CSV)");
    std::string polys_branch = "plus";
    std::size_t polys_n_max = 10;
    polys_cmd->add_option("--branch", polys_branch, "plus or minus")->capture_default_str();
    polys_cmd->add_option("--n-max", polys_n_max, "largest degree")->capture_default_str();

    auto* field_cmd = app.add_subcommand("field", "sample a field on a uniform grid (CSV)");
    std::string field_what = "density";
    std::string field_branch = "plus";
    std::string field_mode = "separate";
    std::size_t field_n = 0;
    double field_t = 0.0, field_lo = -4.0, field_hi = 4.0;
    std::size_t field_points = 401;
    field_cmd
        ->add_option("--what", field_what,
                     "psi, psi-momentum, density, current, u, or u-momentum")
        ->capture_default_str();
    field_cmd->add_option("--branch", field_branch, "plus or minus")->capture_default_str();
    field_cmd->add_option("--n", field_n, "quantum number")->capture_default_str();
    field_cmd->add_option("--mode", field_mode, "separate or combined")
        ->capture_default_str();
    field_cmd->add_option("--t", field_t, "time")->capture_default_str();
    field_cmd->add_option("--x-min", field_lo, "grid start")->capture_default_str();
    field_cmd->add_option("--x-max", field_hi, "grid end")->capture_default_str();
    field_cmd->add_option("--points", field_points, "grid size")->capture_default_str();

    auto* spectrum_cmd =
        app.add_subcommand("spectrum", "energy line shape around V0 (CSV)");
    std::size_t spectrum_n = 0;
    std::string spectrum_mode = "separate";
    double spectrum_window = 20.0;
    std::size_t spectrum_points = 4096;
    spectrum_cmd->add_option("--n", spectrum_n, "quantum number")->capture_default_str();
    spectrum_cmd->add_option("--mode", spectrum_mode, "separate or combined")
        ->capture_default_str();
    spectrum_cmd
        ->add_option("--window", spectrum_window, "half-window in units of the half-width")
        ->capture_default_str();
    spectrum_cmd->add_option("--points", spectrum_points, "sample count")
        ->capture_default_str();

    auto* lifetimes_cmd =
        app.add_subcommand("lifetimes", "lifetimes, widths, uncertainty products (CSV)");
    std::size_t lifetimes_n_max = 10;
    lifetimes_cmd->add_option("--n-max", lifetimes_n_max, "largest quantum number")
        ->capture_default_str();

    auto* smatrix_cmd =
        app.add_subcommand("smatrix", "transition matrix <u^+_m | u^-_n> (CSV)");
    std::size_t smatrix_size = 6;
    smatrix_cmd->add_option("--size", smatrix_size, "matrix dimension")
        ->capture_default_str();

    auto* verify_cmd = app.add_subcommand(
        "verify", "machine-check every identity of the solution; exit 1 on any failure");
    std::vector<std::string> verify_suites = {"all"};
    std::string verify_format = "text";
    std::vector<std::string> verify_scales;
    verify_cmd->add_option("--suite", verify_suites,
                           "polys, quad, eigen, dynamics, spectra, or all (repeatable)");
    verify_cmd->add_option("--format", verify_format, "text or json")->capture_default_str();
    verify_cmd->add_option(
        "--scale", verify_scales,
        "name=factor tolerance scaling, e.g. spectra.dft.plus=0.01 (repeatable)");

    try {
        app.parse(argc, argv);
        params.validate();

        if (*eigen_cmd) {
            write_output(out_path, run_eigen(params, eigen_n_max));
        } else if (*polys_cmd) {
            write_output(out_path, run_polys(parse_branch(polys_branch), polys_n_max));
        } else if (*field_cmd) {
            write_output(out_path,
                         run_field(params, field_what, parse_branch(field_branch), field_n,
                                   parse_mode(field_mode), field_t, field_lo, field_hi,
                                   field_points));
        } else if (*spectrum_cmd) {
            write_output(out_path, run_spectrum(params, spectrum_n,
                                                parse_mode(spectrum_mode), spectrum_window,
                                                spectrum_points));
        } else if (*lifetimes_cmd) {
            write_output(out_path, run_lifetimes(params, lifetimes_n_max));
        } else if (*smatrix_cmd) {
            write_output(out_path, run_smatrix(params, smatrix_size));
        } else if (*verify_cmd) {
            unsigned suites = 0;
            for (const auto& name : verify_suites)
                suites |= ppb::verify::parse_suite(name);
            ppb::verify::Options options;
            for (const auto& spec : verify_scales) {
                const auto eq = spec.find('=');
                if (eq == std::string::npos)
                    throw std::invalid_argument("bad --scale, expected name=factor: " + spec);
                options.tolerance_scale[spec.substr(0, eq)] =
                    std::stod(spec.substr(eq + 1));
            }
            const auto report = ppb::verify::emit_verification(params, suites, options);
            write_output(out_path, verify_format == "json"
                                       ? ppb::verify::to_json(report)
                                       : ppb::verify::to_text(report));
            if (!report.all_pass()) return 1;
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const ppb::numerical_error& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return 3;
    }
}
