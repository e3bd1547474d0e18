// Command-line front end: every library operation as a subcommand with
// machine-readable (CSV or JSON) output and a strict exit-status contract:
//   0  success, all invoked checks passed
//   1  usage or configuration error
//   2  a computation check failed
#include <cmath>
#include <complex>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bergman/analysis.hpp"
#include "bergman/errors.hpp"
#include "bergman/funcspace.hpp"
#include "bergman/grid.hpp"
#include "bergman/io.hpp"
#include "bergman/kernel.hpp"
#include "bergman/moments.hpp"
#include "bergman/projector.hpp"
#include "bergman/verification.hpp"
#include "bergman/weights.hpp"

namespace {

using bergman::io::fmt_double;
using bergman::io::json_escape;

struct RunConfig {
    std::string weight;
    std::optional<double> alpha_override;
    int n_max = 32;
    int grid_r = 256;
    int grid_k = 512;
    std::vector<double> p{2.0};
    int degree = -1; // -1: use the grid default
    std::string fn;
    std::vector<std::string> battery;
    std::complex<double> z{0.0, 0.0};
    std::complex<double> w{0.0, 0.0};
    std::vector<int> ns{1250, 2500, 5000};
    double kernel_tol = 1e-10;
    double residual_tol = 1e-8;
    double moment_err_tol = 1e-12;
    std::optional<double> max_sup_scaled;
    std::string format = "csv";
    std::string out; // empty: stdout
    bergman::Precision precision = bergman::Precision::Double;
};

// Raw option holders; unset values fall back to config file then defaults.
struct RawOpts {
    std::optional<std::string> weight, fn, battery, format, out, precision, p, ns, z, w;
    std::optional<double> alpha, kernel_tol, residual_tol, moment_err_tol, max_sup_scaled;
    std::optional<int> n_max, grid_r, grid_k, degree;
    std::optional<std::string> config_path;
};

std::vector<double> parse_double_list(const std::string& text, const char* what) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        std::string item = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        try {
            std::size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw bergman::ParseError(std::string("bad number in ") + what + ": '" + item + "'");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
    std::vector<int> out;
    for (double v : parse_double_list(text, what)) out.push_back(static_cast<int>(v));
    return out;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto next = text.find(sep, pos);
        out.push_back(text.substr(pos, next == std::string::npos ? next : next - pos));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return out;
}

std::complex<double> parse_complex(const std::string& text, const char* what) {
    auto parts = parse_double_list(text, what);
    if (parts.size() == 1) return {parts[0], 0.0};
    if (parts.size() == 2) return {parts[0], parts[1]};
    throw bergman::ParseError(std::string(what) + ": expected RE or RE,IM");
}

void load_config_file(const std::string& path, RunConfig& cfg) {
    std::ifstream in(path);
    if (!in) throw bergman::ParseError("config: cannot open '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw bergman::ParseError(std::string("config: invalid JSON: ") + e.what());
    }
    if (j.contains("weight")) cfg.weight = j["weight"].get<std::string>();
    if (j.contains("alpha")) cfg.alpha_override = j["alpha"].get<double>();
    if (j.contains("n_max")) cfg.n_max = j["n_max"].get<int>();
    if (j.contains("grid")) {
        if (j["grid"].contains("r")) cfg.grid_r = j["grid"]["r"].get<int>();
        if (j["grid"].contains("k")) cfg.grid_k = j["grid"]["k"].get<int>();
    }
    if (j.contains("p")) cfg.p = j["p"].get<std::vector<double>>();
    if (j.contains("degree")) cfg.degree = j["degree"].get<int>();
    if (j.contains("fn")) cfg.fn = j["fn"].get<std::string>();
    if (j.contains("battery")) cfg.battery = j["battery"].get<std::vector<std::string>>();
    if (j.contains("ns")) cfg.ns = j["ns"].get<std::vector<int>>();
    if (j.contains("format")) cfg.format = j["format"].get<std::string>();
    if (j.contains("out")) cfg.out = j["out"].get<std::string>();
    if (j.contains("precision")) {
        cfg.precision = j["precision"].get<std::string>() == "extended"
                            ? bergman::Precision::Extended
                            : bergman::Precision::Double;
    }
    if (j.contains("tolerances")) {
        const auto& t = j["tolerances"];
        if (t.contains("kernel")) cfg.kernel_tol = t["kernel"].get<double>();
        if (t.contains("residual")) cfg.residual_tol = t["residual"].get<double>();
        if (t.contains("moment_err")) cfg.moment_err_tol = t["moment_err"].get<double>();
        if (t.contains("max_sup_scaled")) cfg.max_sup_scaled = t["max_sup_scaled"].get<double>();
    }
}

RunConfig merge(const RawOpts& raw) {
    RunConfig cfg;
    if (raw.config_path) load_config_file(*raw.config_path, cfg);
    if (raw.weight) cfg.weight = *raw.weight;
    if (raw.alpha) cfg.alpha_override = *raw.alpha;
    if (raw.n_max) cfg.n_max = *raw.n_max;
    if (raw.grid_r) cfg.grid_r = *raw.grid_r;
    if (raw.grid_k) cfg.grid_k = *raw.grid_k;
    if (raw.p) cfg.p = parse_double_list(*raw.p, "--p");
    if (raw.degree) cfg.degree = *raw.degree;
    if (raw.fn) cfg.fn = *raw.fn;
    if (raw.battery) cfg.battery = split(*raw.battery, ';');
    if (raw.ns) cfg.ns = parse_int_list(*raw.ns, "--ns");
    if (raw.z) cfg.z = parse_complex(*raw.z, "--z");
    if (raw.w) cfg.w = parse_complex(*raw.w, "--w");
    if (raw.kernel_tol) cfg.kernel_tol = *raw.kernel_tol;
    if (raw.residual_tol) cfg.residual_tol = *raw.residual_tol;
    if (raw.moment_err_tol) cfg.moment_err_tol = *raw.moment_err_tol;
    if (raw.max_sup_scaled) cfg.max_sup_scaled = *raw.max_sup_scaled;
    if (raw.format) cfg.format = *raw.format;
    if (raw.out) cfg.out = *raw.out;
    if (raw.precision) {
        if (*raw.precision != "double" && *raw.precision != "extended") {
            throw bergman::ParseError("--precision must be double or extended");
        }
        cfg.precision = *raw.precision == "extended" ? bergman::Precision::Extended
                                                     : bergman::Precision::Double;
    }

    if (cfg.format != "csv" && cfg.format != "json") {
        throw bergman::ParseError("--format must be csv or json");
    }
    if (cfg.n_max < 1) throw bergman::ParseError("--n-max must be >= 1");
    if (cfg.grid_r < 8) throw bergman::ParseError("--grid-r must be >= 8");
    if (cfg.grid_k < 4 || (cfg.grid_k & (cfg.grid_k - 1)) != 0) {
        throw bergman::ParseError("--grid-k must be a power of two >= 4");
    }
    if (!(cfg.kernel_tol > 0.0) || !(cfg.residual_tol > 0.0) || !(cfg.moment_err_tol > 0.0)) {
        throw bergman::ParseError("tolerances must be positive");
    }
    return cfg;
}

bergman::WeightSpec resolve_weight(const RunConfig& cfg) {
    if (cfg.weight.empty()) throw bergman::ParseError("--weight is required");
    std::string spec = cfg.weight;
    if (cfg.alpha_override) {
        auto semi = spec.find(';');
        if (semi == std::string::npos) throw bergman::ParseError("--weight: malformed spec");
        spec = "alpha=" + bergman::io::fmt_double(*cfg.alpha_override) + spec.substr(semi);
    }
    return bergman::WeightSpec::parse(spec);
}

void write_output(const RunConfig& cfg, const std::string& payload) {
    if (cfg.out.empty()) {
        std::cout << payload;
        return;
    }
    std::string path = cfg.out;
    const char* dir = std::getenv("BERGMAN_OUT_DIR");
    if (dir && *dir && path.front() != '/') path = std::string(dir) + "/" + path;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw bergman::ParseError("cannot open output file '" + path + "'");
    out << payload;
}

int run_moments(const RunConfig& cfg) {
    auto w = resolve_weight(cfg);
    auto table = bergman::MomentTable::compute(w, cfg.n_max, cfg.precision);
    bool ok = true;
    for (int n = 0; n <= cfg.n_max; ++n) {
        if (table.error(n) > cfg.moment_err_tol * table.value(n)) ok = false;
    }
    if (cfg.format == "json") {
        write_output(cfg, table.to_json() + "\n");
    } else {
        std::string csv = "n,I_n,err_n\n";
        for (int n = 0; n <= cfg.n_max; ++n) {
            csv += std::to_string(n) + ',' + fmt_double(table.value(n)) + ',' +
                   fmt_double(table.error(n)) + '\n';
        }
        write_output(cfg, csv);
    }
    if (!ok) {
        std::cerr << "error (check): moment error estimates exceed " << cfg.moment_err_tol
                  << " * I_n; order policy violation\n";
        return 2;
    }
    return 0;
}

int run_coeffs(const RunConfig& cfg) {
    auto w = resolve_weight(cfg);
    auto table = bergman::MomentTable::compute(w, cfg.n_max, cfg.precision);
    const double two_pi = 2.0 * 3.14159265358979323846;
    if (cfg.format == "json") {
        std::string j = "{\"weight\":\"" + json_escape(w.label()) + "\",\"coeffs\":[";
        for (int n = 0; n <= cfg.n_max; ++n) {
            if (n) j += ',';
            j += fmt_double(1.0 / (two_pi * table.value(n)));
        }
        write_output(cfg, j + "]}\n");
    } else {
        std::string csv = "n,coeff\n";
        for (int n = 0; n <= cfg.n_max; ++n) {
            csv += std::to_string(n) + ',' + fmt_double(1.0 / (two_pi * table.value(n))) + '\n';
        }
        write_output(cfg, csv);
    }
    return 0;
}

int run_kernel(const RunConfig& cfg) {
    auto w = resolve_weight(cfg);
    double rho = std::abs(cfg.z) * std::abs(cfg.w);
    // For general weights the lambda_alpha tail majorant is rescaled by
    // 1/min M (sandwich bound), tightening tol accordingly.
    int trunc = bergman::truncation_degree(w.alpha(), rho, cfg.kernel_tol * w.min_m());
    auto series = bergman::KernelSeries::build(w, trunc, cfg.precision);
    auto value = series.eval(cfg.z, cfg.w);

    bool have_closed = w.is_lambda_alpha();
    std::complex<double> closed;
    double abs_err = 0.0, rel_err = 0.0;
    if (have_closed) {
        closed = bergman::eval_kernel_closed(w.alpha(), cfg.z, cfg.w);
        abs_err = std::abs(value - closed);
        rel_err = abs_err / std::abs(closed);
    }

    if (cfg.format == "json") {
        std::string j = "{\"weight\":\"" + json_escape(w.label()) + "\",\"truncation\":" +
                        std::to_string(trunc) + ",\"z\":" + bergman::io::fmt_complex_pair(cfg.z) +
                        ",\"w\":" + bergman::io::fmt_complex_pair(cfg.w) + ",\"series\":" +
                        bergman::io::fmt_complex_pair(value);
        if (have_closed) {
            j += ",\"closed\":" + bergman::io::fmt_complex_pair(closed) +
                 ",\"abs_err\":" + fmt_double(abs_err) + ",\"rel_err\":" + fmt_double(rel_err);
        }
        write_output(cfg, j + "}\n");
    } else {
        std::string csv =
            "z_re,z_im,w_re,w_im,series_re,series_im,closed_re,closed_im,abs_err,rel_err\n";
        csv += fmt_double(cfg.z.real()) + ',' + fmt_double(cfg.z.imag()) + ',' +
               fmt_double(cfg.w.real()) + ',' + fmt_double(cfg.w.imag()) + ',' +
               fmt_double(value.real()) + ',' + fmt_double(value.imag()) + ',';
        if (have_closed) {
            csv += fmt_double(closed.real()) + ',' + fmt_double(closed.imag()) + ',' +
                   fmt_double(abs_err) + ',' + fmt_double(rel_err);
        } else {
            csv += ",,,";
        }
        write_output(cfg, csv + "\n");
    }
    if (have_closed && rel_err > cfg.kernel_tol) {
        std::cerr << "error (check): kernel series misses the closed form: rel_err=" << rel_err
                  << " > tol=" << cfg.kernel_tol << "\n";
        return 2;
    }
    return 0;
}

int run_project(const RunConfig& cfg, bool identity_check) {
    auto w = resolve_weight(cfg);
    if (cfg.fn.empty()) throw bergman::ParseError("--fn is required");
    auto grid = std::make_shared<const bergman::PolarGrid>(w, cfg.grid_r, cfg.grid_k);
    int degree = cfg.degree >= 0 ? cfg.degree : bergman::default_projection_degree(*grid);
    auto f = bergman::sample(cfg.fn, grid);

    if (!identity_check) {
        auto coeffs = bergman::project(f, w, degree);
        if (cfg.format == "json") {
            write_output(cfg, "{\"weight\":\"" + json_escape(w.label()) + "\",\"fn\":\"" +
                                  json_escape(cfg.fn) + "\",\"degree\":" + std::to_string(degree) +
                                  ",\"coeffs\":" + coeffs.to_json() + "}\n");
        } else {
            std::string csv = "n,re,im\n";
            for (int n = 0; n <= degree; ++n) {
                csv += std::to_string(n) + ',' + fmt_double(coeffs.c[n].real()) + ',' +
                       fmt_double(coeffs.c[n].imag()) + '\n';
            }
            write_output(cfg, csv);
        }
        return 0;
    }

    auto direct = bergman::project(f, w, degree);
    auto via = bergman::project_via_identity(f, w, degree);
    double residual = 0.0;
    for (int n = 0; n <= degree; ++n) {
        residual = std::max(residual, std::abs(direct.c[n] - via.c[n]));
    }
    bool ok = residual <= cfg.residual_tol;
    if (cfg.format == "json") {
        write_output(cfg, "{\"weight\":\"" + json_escape(w.label()) + "\",\"fn\":\"" +
                              json_escape(cfg.fn) + "\",\"degree\":" + std::to_string(degree) +
                              ",\"direct\":" + direct.to_json() + ",\"via_identity\":" +
                              via.to_json() + ",\"residual\":" + fmt_double(residual) +
                              ",\"pass\":" + (ok ? "true" : "false") + "}\n");
    } else {
        std::string csv = "n,direct_re,direct_im,via_re,via_im\n";
        for (int n = 0; n <= degree; ++n) {
            csv += std::to_string(n) + ',' + fmt_double(direct.c[n].real()) + ',' +
                   fmt_double(direct.c[n].imag()) + ',' + fmt_double(via.c[n].real()) + ',' +
                   fmt_double(via.c[n].imag()) + '\n';
        }
        write_output(cfg, csv);
    }
    if (!ok) {
        std::cerr << "error (check): identity residual " << residual << " exceeds "
                  << cfg.residual_tol << "\n";
        return 2;
    }
    return 0;
}

int run_bv(const RunConfig& cfg) {
    auto w = resolve_weight(cfg);
    bergman::BVOptions options;
    options.precision = cfg.precision;
    auto report = bergman::bv_report(w, w.alpha(), cfg.n_max, options);
    double max_sup = cfg.max_sup_scaled
                         ? *cfg.max_sup_scaled
                         : 2.0 * (std::abs(report.predicted.delta_inf) + 1.0);
    bool ok = std::isfinite(report.sup_scaled) && report.sup_scaled <= max_sup;

    if (cfg.format == "json") {
        std::string j = "{\"weight\":\"" + json_escape(w.label()) + "\",\"alpha\":" +
                        fmt_double(report.alpha) + ",\"n_max\":" + std::to_string(report.n_max) +
                        ",\"sup_scaled\":" + fmt_double(report.sup_scaled) + ",\"bv_partial\":" +
                        fmt_double(report.bv_partial) + ",\"limit_gap\":" +
                        fmt_double(report.limit_gap) + ",\"predicted\":{\"l12\":" +
                        fmt_double(report.predicted.l12) + ",\"l34\":" +
                        fmt_double(report.predicted.l34) + ",\"delta_inf\":" +
                        fmt_double(report.predicted.delta_inf) + "},\"pass\":" +
                        (ok ? "true" : "false") + "}";
        write_output(cfg, j + "\n");
    } else {
        std::string csv = "n,t,delta,n2_delta,method\n";
        for (int n = 0; n <= report.n_max; ++n) {
            double n2d = static_cast<double>(n) * n * report.delta[n];
            csv += std::to_string(n) + ',' + fmt_double(report.t[n]) + ',' +
                   fmt_double(report.delta[n]) + ',' + fmt_double(n2d) + ',' +
                   (report.method[n] == bergman::DeltaMethod::Ibp ? "ibp" : "direct");
            csv += '\n';
        }
        write_output(cfg, csv);
    }
    if (!ok) {
        std::cerr << "error (check): sup_scaled " << report.sup_scaled << " exceeds " << max_sup
                  << "\n";
        return 2;
    }
    return 0;
}

int run_limits(const RunConfig& cfg) {
    auto w = resolve_weight(cfg);
    auto rows = bergman::limit_convergence(w, w.alpha(), cfg.ns, cfg.precision);
    auto lim = bergman::delta_limits(w, w.alpha());
    if (cfg.format == "json") {
        std::string j = "{\"weight\":\"" + json_escape(w.label()) + "\",\"predicted\":{\"l12\":" +
                        fmt_double(lim.l12) + ",\"l34\":" + fmt_double(lim.l34) +
                        ",\"delta_inf\":" + fmt_double(lim.delta_inf) + "},\"rows\":[";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i) j += ',';
            j += "{\"n\":" + std::to_string(rows[i].n) + ",\"t_n\":" + fmt_double(rows[i].t_n) +
                 ",\"n2_delta\":" + fmt_double(rows[i].n2_delta) + ",\"c1c2_over_a\":" +
                 fmt_double(rows[i].c1c2_over_a) + ",\"c3c4_over_a\":" +
                 fmt_double(rows[i].c3c4_over_a) + "}";
        }
        write_output(cfg, j + "]}\n");
    } else {
        std::string csv = "n,t_n,n2_delta,c1c2_over_a,c3c4_over_a\n";
        for (const auto& row : rows) {
            csv += std::to_string(row.n) + ',' + fmt_double(row.t_n) + ',' +
                   fmt_double(row.n2_delta) + ',' + fmt_double(row.c1c2_over_a) + ',' +
                   fmt_double(row.c3c4_over_a) + '\n';
        }
        write_output(cfg, csv);
    }
    return 0;
}

int run_opnorm(const RunConfig& cfg) {
    auto w = resolve_weight(cfg);
    if (cfg.battery.empty()) throw bergman::ParseError("--battery is required");
    auto grid = std::make_shared<const bergman::PolarGrid>(w, cfg.grid_r, cfg.grid_k);
    int degree = cfg.degree >= 0 ? cfg.degree : bergman::default_projection_degree(*grid);
    auto table = bergman::opnorm_experiment(w, cfg.p, cfg.battery, degree, grid);

    if (cfg.format == "json") {
        std::string j = "{\"weight\":\"" + json_escape(w.label()) + "\",\"degree\":" +
                        std::to_string(degree) + ",\"rows\":[";
        for (std::size_t i = 0; i < table.rows.size(); ++i) {
            if (i) j += ',';
            j += "{\"p\":" + fmt_double(table.rows[i].p) + ",\"fn\":\"" +
                 json_escape(table.rows[i].fn) + "\",\"ratio\":" + fmt_double(table.rows[i].ratio) +
                 "}";
        }
        j += "],\"max_ratio\":" + fmt_double(table.max_ratio) + "}";
        write_output(cfg, j + "\n");
    } else {
        std::string csv = "p,fn,ratio\n";
        for (const auto& row : table.rows) {
            csv += fmt_double(row.p) + ',' + row.fn + ',' + fmt_double(row.ratio) + '\n';
        }
        write_output(cfg, csv);
    }
    return 0;
}

int run_sn(const RunConfig& cfg) {
    auto w = resolve_weight(cfg);
    if (cfg.fn.empty()) throw bergman::ParseError("--fn is required");
    auto grid = std::make_shared<const bergman::PolarGrid>(w, cfg.grid_r, cfg.grid_k);
    auto rows = bergman::sn_experiment(w, cfg.p, cfg.fn, cfg.n_max, grid);
    if (cfg.format == "json") {
        std::string j = "{\"weight\":\"" + json_escape(w.label()) + "\",\"fn\":\"" +
                        json_escape(cfg.fn) + "\",\"rows\":[";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i) j += ',';
            j += "{\"p\":" + fmt_double(rows[i].p) + ",\"N\":" + std::to_string(rows[i].n_trunc) +
                 ",\"ratio\":" + fmt_double(rows[i].ratio) + ",\"err\":" + fmt_double(rows[i].err) +
                 "}";
        }
        write_output(cfg, j + "]}\n");
    } else {
        std::string csv = "p,N,ratio,err\n";
        for (const auto& row : rows) {
            csv += fmt_double(row.p) + ',' + std::to_string(row.n_trunc) + ',' +
                   fmt_double(row.ratio) + ',' + fmt_double(row.err) + '\n';
        }
        write_output(cfg, csv);
    }
    return 0;
}

int run_report(const RunConfig& cfg) {
    auto results = bergman::verification::run_verification_suite();
    for (const auto& r : results) {
        std::cerr << (r.pass ? "PASS" : "FAIL") << "  criterion " << r.id << ": " << r.name
                  << " -- " << r.detail << "\n";
    }
    write_output(cfg, bergman::verification::to_json(results) + "\n");
    return bergman::verification::all_pass(results) ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"weighted Bergman projections on the unit disc: moments, kernels, "
                 "projections, multiplier diagnostics"};
    app.require_subcommand(1);

    RawOpts raw;
    std::string subcommand;
    for (const char* name : {"moments", "coeffs", "kernel", "project", "identity-check", "bv",
                             "limits", "opnorm", "sn", "report"}) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("--weight", raw.weight, "weight spec, e.g. alpha=0;M=poly-r2:2,-1");
        sub->add_option("--alpha", raw.alpha, "override the alpha in --weight");
        sub->add_option("--config", raw.config_path, "JSON config file (flags take precedence)");
        sub->add_option("--n-max", raw.n_max, "largest index n");
        sub->add_option("--grid-r", raw.grid_r, "radial nodes (>= 8)");
        sub->add_option("--grid-k", raw.grid_k, "angular nodes (power of two >= 4)");
        sub->add_option("--p", raw.p, "comma-separated norm exponents in (1,inf)");
        sub->add_option("--degree", raw.degree, "projection truncation degree");
        sub->add_option("--fn", raw.fn, "test function spec");
        sub->add_option("--battery", raw.battery, "semicolon-separated function specs");
        sub->add_option("--z", raw.z, "kernel argument z as RE or RE,IM");
        sub->add_option("--w", raw.w, "kernel argument w as RE or RE,IM");
        sub->add_option("--ns", raw.ns, "comma-separated n values for limits");
        sub->add_option("--tol", raw.kernel_tol, "kernel series tolerance");
        sub->add_option("--residual-tol", raw.residual_tol, "identity residual tolerance");
        sub->add_option("--err-tol", raw.moment_err_tol, "moment error policy tolerance");
        sub->add_option("--max-sup-scaled", raw.max_sup_scaled, "bv pass bound on sup n^2|delta|");
        sub->add_option("--format", raw.format, "csv or json");
        sub->add_option("--out", raw.out, "output path (default stdout; BERGMAN_OUT_DIR applies)");
        sub->add_option("--precision", raw.precision, "double or extended");
        sub->callback([&subcommand, name] { subcommand = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        RunConfig cfg = merge(raw);
        if (subcommand == "moments") return run_moments(cfg);
        if (subcommand == "coeffs") return run_coeffs(cfg);
        if (subcommand == "kernel") return run_kernel(cfg);
        if (subcommand == "project") return run_project(cfg, false);
        if (subcommand == "identity-check") return run_project(cfg, true);
        if (subcommand == "bv") return run_bv(cfg);
        if (subcommand == "limits") return run_limits(cfg);
        if (subcommand == "opnorm") return run_opnorm(cfg);
        if (subcommand == "sn") return run_sn(cfg);
        if (subcommand == "report") return run_report(cfg);
        std::cerr << "error (usage): unknown subcommand\n";
        return 1;
    } catch (const bergman::ParseError& e) {
        std::cerr << "error (parse): " << e.what() << "\n";
        return 1;
    } catch (const bergman::DomainError& e) {
        std::cerr << "error (domain): " << e.what() << "\n";
        return 1;
    } catch (const bergman::QuadratureError& e) {
        std::cerr << "error (quadrature): " << e.what() << "\n";
        return 2;
    } catch (const bergman::CheckError& e) {
        std::cerr << "error (check): " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
