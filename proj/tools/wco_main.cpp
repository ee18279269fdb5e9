// Command-line surface: exact operator matrices, symmetry classification,
// spectra, Koenigs eigenfunctions, and the verification suite.
//
// Exit codes: 0 success / all checks pass, 1 numerical failure,
// 2 usage or parameter error, 3 verification failures.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>

#include "wco/expr.hpp"
#include "wco/koenigs.hpp"
#include "wco/operators.hpp"
#include "wco/verify.hpp"

namespace {

using wco::Complex;
using ordered_json = nlohmann::ordered_json;

constexpr const char* kSchema = "wco-report/1";

int exit_code_for(wco::Errc code) {
    switch (code) {
        case wco::Errc::ParseError:
        case wco::Errc::NotSelfMap:
        case wco::Errc::ParameterOutsideDisk:
        case wco::Errc::BasePointOutsideDisk:
        case wco::Errc::InnerConstantTooLarge:
        case wco::Errc::PoleInsideDisk:
        case wco::Errc::NotInvertible:
        case wco::Errc::GridDegenerate:
            return 2;
        default:
            return 1;
    }
}

std::string csv_num(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

ordered_json to_json(Complex c) { return ordered_json::array({c.real(), c.imag()}); }

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << content;
}

// --------------------------------------------------------------------------
// symbol input shared by matrix / check / spectrum / koenigs
// --------------------------------------------------------------------------

struct SymbolOptions {
    std::string phi_expr;
    std::string psi_expr;
    std::string a0_text, a1_text, b_text;
    double kappa = 1.0;
    std::size_t trunc = 32;
    bool trunc_given = false;

    bool ppf_mode() const { return !a0_text.empty() || !a1_text.empty() || !b_text.empty(); }
};

void add_symbol_flags(CLI::App* cmd, SymbolOptions& opts, bool wants_psi) {
    cmd->add_option("--phi", opts.phi_expr, "composition symbol as an expression in z");
    if (wants_psi) cmd->add_option("--psi", opts.psi_expr, "weight symbol as an expression in z");
    cmd->add_option("--a0", opts.a0_text, "PPF parameter a0, complex as re+imi");
    cmd->add_option("--a1", opts.a1_text, "PPF parameter a1, complex as re+imi");
    if (wants_psi) cmd->add_option("--b", opts.b_text, "PPF parameter b, complex as re+imi");
    cmd->add_option("--kappa", opts.kappa, "kernel exponent kappa of the space (>= 1)");
    cmd->add_option("--trunc", opts.trunc, "truncation size")
        ->capture_default_str()
        ->check(CLI::Range(std::size_t{1}, std::size_t{4096}));
}

struct ResolvedSymbols {
    wco::TruncatedSeries phi;
    wco::TruncatedSeries psi;
    std::optional<wco::PPFParams> ppf;
    std::string phi_desc;
    std::string psi_desc;
};

// Expression symbols get a sampled self-map screen at radius 0.99; the PPF
// route delegates to the exact boundary sweep inside ppf_map.
void screen_series_self_map(const wco::TruncatedSeries& phi) {
    double worst = 0.0;
    for (int k = 0; k < 4096; ++k) {
        const double theta = 2.0 * std::numbers::pi * k / 4096.0;
        worst = std::max(worst, std::abs(wco::evaluate(phi, std::polar(0.99, theta))));
    }
    if (worst > 1.0 + 1e-6)
        throw wco::Error(wco::Errc::NotSelfMap,
                         "phi reaches modulus " + std::to_string(worst) + " at radius 0.99");
}

ResolvedSymbols resolve_symbols(const SymbolOptions& opts, std::size_t degree) {
    if (opts.ppf_mode()) {
        if (!opts.phi_expr.empty() || !opts.psi_expr.empty())
            throw wco::Error(wco::Errc::ParseError,
                             "give either PPF flags (--a0/--a1/--b) or expressions, not both");
        wco::PPFParams p;
        p.a0 = opts.a0_text.empty() ? Complex{0.0} : wco::parse_complex(opts.a0_text);
        p.a1 = opts.a1_text.empty() ? Complex{0.0} : wco::parse_complex(opts.a1_text);
        p.b = opts.b_text.empty() ? Complex{1.0} : wco::parse_complex(opts.b_text);
        p.kappa = opts.kappa;
        (void)wco::ppf_map(p);  // throws NotSelfMap on a bad phi
        return ResolvedSymbols{wco::ppf_phi_series(p, degree), wco::ppf_psi_series(p, degree), p,
                               "ppf(a0=" + wco::format_complex(p.a0) +
                                   ",a1=" + wco::format_complex(p.a1) + ")",
                               "ppf(b=" + wco::format_complex(p.b) +
                                   ",kappa=" + csv_num(p.kappa) + ")"};
    }
    if (opts.phi_expr.empty())
        throw wco::Error(wco::Errc::ParseError, "no symbol given: use --phi or PPF flags");
    const wco::TruncatedSeries phi = wco::parse_series(opts.phi_expr, degree);
    const std::string psi_text = opts.psi_expr.empty() ? "1" : opts.psi_expr;
    const wco::TruncatedSeries psi = wco::parse_series(psi_text, degree);
    screen_series_self_map(phi);
    return ResolvedSymbols{phi, psi, std::nullopt, opts.phi_expr, psi_text};
}

std::string header_comment(const char* command, const SymbolOptions& opts,
                           const ResolvedSymbols& sym) {
    std::string line = std::string("# wco ") + command + " kappa=" + csv_num(opts.kappa) +
                       " trunc=" + std::to_string(opts.trunc);
    if (!opts.trunc_given) line += " (default)";
    line += " phi=" + sym.phi_desc + " psi=" + sym.psi_desc + "\n";
    return line;
}

// --------------------------------------------------------------------------
// subcommands
// --------------------------------------------------------------------------

int run_matrix(const SymbolOptions& opts, const std::string& csv_path) {
    const std::size_t N = opts.trunc;
    const ResolvedSymbols sym = resolve_symbols(opts, N - 1);
    const wco::WeightSequence weights = wco::WeightSequence::beta_kappa(opts.kappa, N - 1);
    const wco::OperatorMatrix M = wco::build_matrix(sym.phi, sym.psi, weights, N);

    std::string out = header_comment("matrix", opts, sym);
    out += "row,col,re,im\n";
    for (std::size_t m = 0; m < N; ++m)
        for (std::size_t n = 0; n < N; ++n) {
            const Complex e = M.entries()(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(n));
            out += std::to_string(m) + "," + std::to_string(n) + "," + csv_num(e.real()) + "," +
                   csv_num(e.imag()) + "\n";
        }
    write_output(csv_path, out);
    return 0;
}

int run_check(const SymbolOptions& opts, double tol, int grid_side, const std::string& json_path) {
    const std::size_t N = opts.trunc;
    const ResolvedSymbols sym = resolve_symbols(opts, N - 1);
    const wco::WeightSequence weights = wco::WeightSequence::beta_kappa(opts.kappa, N - 1);

    wco::ClassifyOptions copts;
    copts.exact_tolerance = tol;
    copts.grid_min_points = grid_side * grid_side;
    wco::SymmetryReport report =
        wco::classify_symmetry(sym.phi, sym.psi, weights, opts.kappa, N, copts);
    if (report.ppf && grid_side != 5) {
        report.normality_residual =
            wco::normality_residual_grid(*report.ppf, wco::normality_grid(grid_side));
        report.normal = report.normality_residual <= report.normality_tolerance;
    }

    ordered_json j;
    j["schema"] = kSchema;
    j["command"] = "check";
    j["kappa"] = opts.kappa;
    j["trunc"] = N;
    j["phi"] = sym.phi_desc;
    j["psi"] = sym.psi_desc;
    j["transpose_sym_residual"] = report.transpose_sym_residual;
    j["hermitian_residual"] = report.hermitian_residual;
    j["normality_residual"] = report.normality_residual;
    j["commutator_residual"] = report.commutator_residual;
    if (report.ppf) {
        ordered_json p;
        p["a0"] = to_json(report.ppf->a0);
        p["a1"] = to_json(report.ppf->a1);
        p["b"] = to_json(report.ppf->b);
        p["kappa"] = report.ppf->kappa;
        j["ppf"] = p;
    } else {
        j["ppf"] = nullptr;
    }
    j["ppf_residual"] = report.ppf_residual;
    j["verdicts"] = {{"complex_symmetric_standard_J", report.complex_symmetric_standard_J},
                     {"hermitian", report.hermitian},
                     {"normal", report.normal}};
    j["tolerances"] = {{"exact", report.exact_tolerance}, {"normality", report.normality_tolerance}};
    j["normality_from_grid"] = report.normality_from_grid;
    write_output(json_path, j.dump(2) + "\n");
    return 0;
}

int run_spectrum(const SymbolOptions& opts, bool ladder, const std::string& csv_path) {
    const std::size_t N = opts.trunc;
    const ResolvedSymbols sym = resolve_symbols(opts, N - 1);
    const wco::WeightSequence weights = wco::WeightSequence::beta_kappa(opts.kappa, N - 1);
    const wco::OperatorMatrix M = wco::build_matrix(sym.phi, sym.psi, weights, N);
    const std::vector<Complex> eig = wco::spectrum(M);

    std::vector<double> distances;
    if (ladder) {
        const wco::FixedPointInfo fp = sym.ppf
                                           ? wco::fixed_point_in_disk(wco::ppf_map(*sym.ppf))
                                           : wco::series_fixed_point(sym.phi);
        if (!fp.interior)
            throw wco::Error(wco::Errc::NoFixedPointFound,
                             "--ladder needs an interior fixed point");
        const Complex psi_w0 = sym.ppf ? wco::ppf_psi_eval(*sym.ppf, fp.w0)
                                       : wco::evaluate(sym.psi, fp.w0);
        distances = wco::eigen_ladder_check(eig, fp, psi_w0, static_cast<int>(N) - 1);
    }

    std::string out = header_comment("spectrum", opts, sym);
    out += "# eigenvalues of the truncated matrix; parts of the spectrum supported on the\n";
    out += "# boundary or essential part are not captured at finite truncation\n";
    out += ladder ? "index,re,im,modulus,ladder_distance\n" : "index,re,im,modulus\n";
    for (std::size_t i = 0; i < eig.size(); ++i) {
        out += std::to_string(i) + "," + csv_num(eig[i].real()) + "," + csv_num(eig[i].imag()) +
               "," + csv_num(std::abs(eig[i]));
        if (ladder) out += "," + csv_num(distances[i]);
        out += "\n";
    }
    write_output(csv_path, out);
    return 0;
}

int run_koenigs(const SymbolOptions& opts, const std::string& json_path) {
    const std::size_t N = opts.trunc;
    const ResolvedSymbols sym = [&] {
        SymbolOptions phi_only = opts;
        phi_only.b_text.clear();
        phi_only.psi_expr.clear();
        return resolve_symbols(phi_only, N);
    }();
    const wco::WeightSequence weights = wco::WeightSequence::beta_kappa(opts.kappa, N);

    wco::KoenigsResult kr = [&] {
        if (sym.ppf) {
            const wco::MobiusMap phi = wco::ppf_map(*sym.ppf);
            return wco::koenigs_iterate(phi, wco::fixed_point_in_disk(phi), N, 2000);
        }
        return wco::koenigs_iterate(sym.phi, wco::series_fixed_point(sym.phi), 2000);
    }();

    const auto membership = wco::power_membership_report(kr, weights, 4);

    ordered_json j;
    j["schema"] = kSchema;
    j["command"] = "koenigs";
    j["kappa_space"] = opts.kappa;
    j["trunc"] = N;
    j["phi"] = sym.phi_desc;
    j["w0"] = to_json(kr.w0);
    j["lambda"] = to_json(kr.lambda);
    j["iterations"] = kr.iterations;
    j["schroeder_residual"] = kr.schroeder_residual;
    ordered_json coeffs = ordered_json::array();
    for (std::size_t k = 0; k <= kr.kappa_series.trunc_degree(); ++k)
        coeffs.push_back(to_json(kr.kappa_series.coeff(k)));
    j["kappa_coefficients"] = coeffs;
    ordered_json mem = ordered_json::array();
    for (const auto& entry : membership)
        mem.push_back({{"power", entry.power},
                       {"tail_slope", entry.norm_profile_tail_slope},
                       {"divergence_flag", entry.divergence_flag}});
    j["membership"] = mem;

    ordered_json obstruction;
    obstruction["value"] = wco::obstruction_value(kr.w0, weights, N);
    try {
        const wco::ConsistencyCheck cc = wco::consistency_check(kr, weights);
        obstruction["kappa0_normalized"] = cc.lhs;
        obstruction["residual"] = cc.residual;
        obstruction["divergent_norm"] = false;
    } catch (const wco::Error& e) {
        if (e.code() != wco::Errc::DivergentKoenigsNorm) throw;
        obstruction["kappa0_normalized"] = nullptr;
        obstruction["residual"] = nullptr;
        obstruction["divergent_norm"] = true;
    }
    j["obstruction"] = obstruction;
    write_output(json_path, j.dump(2) + "\n");
    return 0;
}

int run_verify(std::uint64_t seed, const std::string& filter, const std::string& json_path) {
    wco::VerifyOptions opts;
    opts.seed = seed;
    opts.filter = filter;
    const std::vector<wco::CheckRecord> records = wco::run_verification(opts);

    bool all_pass = true;
    ordered_json arr = ordered_json::array();
    for (const wco::CheckRecord& r : records) {
        all_pass = all_pass && r.pass;
        ordered_json params;
        for (const auto& [k, v] : r.params) params[k] = v;
        arr.push_back({{"test_id", r.test_id},
                       {"params", params},
                       {"metric", r.metric},
                       {"tolerance", r.tolerance},
                       {"pass", r.pass},
                       {"anchor", r.anchor}});
    }
    ordered_json j;
    j["schema"] = kSchema;
    j["command"] = "verify";
    j["seed"] = seed;
    j["filter"] = filter;
    j["all_pass"] = all_pass;
    j["records"] = arr;
    write_output(json_path, j.dump(2) + "\n");

    if (records.empty()) {
        std::cerr << "no checks match filter \"" << filter << "\"\n";
        return 2;
    }
    if (!all_pass) {
        for (const wco::CheckRecord& r : records)
            if (!r.pass)
                std::cerr << "FAIL " << r.test_id << " metric=" << r.metric
                          << " tolerance=" << r.tolerance << "\n";
        return 3;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"weighted composition operators on weighted Hardy spaces"};
    app.require_subcommand(1);

    SymbolOptions matrix_opts, check_opts, spectrum_opts, koenigs_opts;
    std::string matrix_csv, check_json, spectrum_csv, koenigs_json, verify_json;
    double check_tol = 1e-12;
    int grid_side = 5;
    bool ladder = false;
    std::uint64_t seed = 0xC0FFEE;
    std::string filter;

    CLI::App* matrix = app.add_subcommand("matrix", "write the operator matrix as CSV");
    add_symbol_flags(matrix, matrix_opts, true);
    matrix->add_option("--csv", matrix_csv, "output path (stdout if omitted)");

    CLI::App* check = app.add_subcommand("check", "classify symmetry / hermiticity / normality");
    add_symbol_flags(check, check_opts, true);
    check->add_option("--tol", check_tol, "tolerance for exact residuals")->capture_default_str();
    check->add_option("--grid", grid_side, "normality grid side length")->capture_default_str();
    check->add_option("--json", check_json, "output path (stdout if omitted)");

    CLI::App* spec_cmd = app.add_subcommand("spectrum", "eigenvalues of the truncated matrix");
    add_symbol_flags(spec_cmd, spectrum_opts, true);
    spec_cmd->add_flag("--ladder", ladder, "append fixed-point eigenvalue ladder distances");
    spec_cmd->add_option("--csv", spectrum_csv, "output path (stdout if omitted)");

    CLI::App* koenigs = app.add_subcommand("koenigs", "Koenigs eigenfunction and membership report");
    add_symbol_flags(koenigs, koenigs_opts, false);
    koenigs->add_option("--json", koenigs_json, "output path (stdout if omitted)");

    CLI::App* verify = app.add_subcommand("verify", "run the verification suite");
    verify->add_option("--seed", seed, "seed for randomized sweeps")->capture_default_str();
    verify->add_option("--filter", filter, "run only test_ids containing this substring");
    verify->add_option("--json", verify_json, "output path (stdout if omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    for (auto& [cmd, opts] : {std::pair{matrix, &matrix_opts}, std::pair{check, &check_opts},
                              std::pair{spec_cmd, &spectrum_opts}, std::pair{koenigs, &koenigs_opts}})
        opts->trunc_given = cmd->count("--trunc") > 0;

    try {
        if (matrix->parsed()) return run_matrix(matrix_opts, matrix_csv);
        if (check->parsed()) return run_check(check_opts, check_tol, grid_side, check_json);
        if (spec_cmd->parsed()) return run_spectrum(spectrum_opts, ladder, spectrum_csv);
        if (koenigs->parsed()) return run_koenigs(koenigs_opts, koenigs_json);
        if (verify->parsed()) return run_verify(seed, filter, verify_json);
    } catch (const wco::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
