// chrw_cli — command-line front end over the libchrw C API.
//
// Subcommands: solve, evolve, compare, sweep, spectrum. All physics lives
// behind chrw/chrw.h; this file only parses arguments, converts units and
// formats CSV/JSON. Output is deterministic: identical invocations produce
// byte-identical files.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "chrw/chrw.h"

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// exit codes: 0 ok, 2 invalid arguments, 3 solver non-convergence,
// 4 integrator failure
int exit_code(chrw_status st) {
    switch (st) {
        case CHRW_OK: return 0;
        case CHRW_ERR_NO_CONVERGENCE: return 3;
        case CHRW_ERR_INTEGRATOR: return 4;
        case CHRW_ERR_INVALID_ARGUMENT:
        case CHRW_ERR_DOMAIN: return 2;
    }
    return 2;
}

struct CliError {
    int code;
    std::string message;
};

void require_ok(chrw_status st, const std::string& what) {
    if (st != CHRW_OK)
        throw CliError{exit_code(st), what + ": " + chrw_status_message(st)};
}

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

struct Global {
    std::string units = "angular";
    std::string output;
    std::string format = "csv";

    bool hz() const { return units == "hz"; }
    // ordinary-frequency inputs are converted to angular at the boundary
    double in(double v) const { return hz() ? kTwoPi * v : v; }
    double out_freq(double v) const { return hz() ? v / kTwoPi : v; }
};

struct ParamsOpt {
    double delta = 1.0;
    double epsilon = 0.0;
    double amplitude = 0.0;
    double omega = 1.0;

    chrw_params scaled(const Global& g) const {
        return {g.in(delta), g.in(epsilon), g.in(amplitude), g.in(omega)};
    }
};

void add_params(CLI::App* sub, ParamsOpt& p) {
    sub->add_option("--delta", p.delta, "Tunneling strength")->capture_default_str();
    sub->add_option("--epsilon", p.epsilon, "Static bias")->capture_default_str();
    sub->add_option("--amplitude", p.amplitude, "Drive amplitude")
        ->capture_default_str();
    sub->add_option("--omega", p.omega, "Drive frequency")->capture_default_str();
}

void write_out(const Global& g, const std::string& text) {
    if (g.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(g.output, std::ios::binary);
    if (!f) throw CliError{2, "cannot open output file " + g.output};
    f << text;
}

// ---- series generation over the C API ----------------------------------

std::vector<double> series_chrw(const chrw_params& p, double dt, std::size_t n) {
    chrw_solution* s = nullptr;
    require_ok(chrw_solve(&p, 0.0, 0, &s), "solve");
    std::vector<double> out(n);
    chrw_status st = chrw_population_series(s, &p, 0.0, dt, n, out.data());
    chrw_solution_free(s);
    require_ok(st, "population");
    return out;
}

std::vector<double> series_exact(const chrw_params& p, double dt, std::size_t n) {
    std::vector<double> out(n);
    require_ok(chrw_exact_population_series(&p, 0.0, dt, n, 0.0, 0.0, out.data()),
               "exact integration");
    return out;
}

std::vector<double> series_rabi_rwa(const chrw_params& p, double dt, std::size_t n) {
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i)
        require_ok(chrw_rabi_rwa_population(&p, dt * static_cast<double>(i), &out[i]),
                   "rabi-rwa population");
    return out;
}

std::vector<double> series_rwa_rf(const chrw_params& p, int photon_n, double dt,
                                  std::size_t n, bool* warned) {
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        int off = 0;
        require_ok(chrw_rwa_rf_population(&p, photon_n, dt * static_cast<double>(i),
                                          &out[i], &off),
                   "rwa-rf population");
        if (off && warned) *warned = true;
    }
    return out;
}

std::vector<double> make_series(const std::string& method, const chrw_params& p,
                                int photon_n, double dt, std::size_t n) {
    if (method == "chrw") return series_chrw(p, dt, n);
    if (method == "exact") return series_exact(p, dt, n);
    if (method == "rabi-rwa") return series_rabi_rwa(p, dt, n);
    if (method == "rwa-rf") {
        bool warned = false;
        std::vector<double> out = series_rwa_rf(p, photon_n, dt, n, &warned);
        if (warned)
            std::cerr << "warning: rwa-rf evaluated off resonance (n*omega + epsilon != 0)\n";
        return out;
    }
    throw CliError{2, "unknown method " + method};
}

int resolve_photon_n(const chrw_params& p, int requested, bool use_default) {
    return use_default ? chrw_default_photon_n(&p) : requested;
}

// ---- solve ---------------------------------------------------------------

void run_solve(const Global& g, const ParamsOpt& po, double tol, int max_iter) {
    chrw_params p = po.scaled(g);
    chrw_solution* s = nullptr;
    require_ok(chrw_solve(&p, tol, max_iter, &s), "solve");

    struct Field {
        const char* name;
        chrw_field id;
        bool is_freq;
    };
    const Field fields[] = {
        {"xi", CHRW_FIELD_XI, false},
        {"zeta", CHRW_FIELD_ZETA, false},
        {"x_norm", CHRW_FIELD_X_NORM, false},
        {"z_arg", CHRW_FIELD_Z_ARG, false},
        {"delta_tilde", CHRW_FIELD_DELTA_TILDE, true},
        {"epsilon_tilde", CHRW_FIELD_EPSILON_TILDE, true},
        {"j_c", CHRW_FIELD_J_C, false},
        {"xi_big_tilde", CHRW_FIELD_XI_BIG_TILDE, true},
        {"a_tilde", CHRW_FIELD_A_TILDE, true},
        {"u", CHRW_FIELD_U, false},
        {"v", CHRW_FIELD_V, false},
        {"detuning_tilde", CHRW_FIELD_DETUNING_TILDE, true},
        {"rabi_freq", CHRW_FIELD_RABI_FREQ, true},
        {"residual_norm", CHRW_FIELD_RESIDUAL_NORM, false},
    };
    std::string json = "{";
    for (std::size_t i = 0; i < std::size(fields); ++i) {
        double v = 0.0;
        chrw_solution_get(s, fields[i].id, &v);
        if (fields[i].is_freq) v = g.out_freq(v);
        json += std::string("\"") + fields[i].name + "\": " + num(v);
        if (i + 1 < std::size(fields)) json += ", ";
    }
    json += "}\n";
    chrw_solution_free(s);
    write_out(g, json);
}

// ---- evolve / compare ----------------------------------------------------

std::string csv_table(const std::vector<std::string>& header,
                      const std::vector<std::vector<double>>& columns) {
    std::string out;
    for (std::size_t c = 0; c < header.size(); ++c)
        out += header[c] + (c + 1 < header.size() ? "," : "\n");
    for (std::size_t r = 0; r < columns[0].size(); ++r)
        for (std::size_t c = 0; c < columns.size(); ++c)
            out += num(columns[c][r]) + (c + 1 < columns.size() ? "," : "\n");
    return out;
}

std::string json_table(const std::vector<std::string>& header,
                       const std::vector<std::vector<double>>& columns) {
    std::string out = "{";
    for (std::size_t c = 0; c < columns.size(); ++c) {
        out += "\"" + header[c] + "\": [";
        for (std::size_t r = 0; r < columns[c].size(); ++r) {
            out += num(columns[c][r]);
            if (r + 1 < columns[c].size()) out += ", ";
        }
        out += "]";
        if (c + 1 < columns.size()) out += ", ";
    }
    out += "}";
    return out;
}

void run_evolve(const Global& g, const ParamsOpt& po, const std::string& method,
                double t_max, std::size_t samples, int photon_n, bool n_given) {
    if (samples < 2) throw CliError{2, "samples must be >= 2"};
    if (!(t_max > 0.0)) throw CliError{2, "t-max must be positive"};
    chrw_params p = po.scaled(g);
    double dt = t_max / static_cast<double>(samples - 1);
    int n = resolve_photon_n(p, photon_n, !n_given);
    std::vector<double> t(samples);
    for (std::size_t i = 0; i < samples; ++i) t[i] = dt * static_cast<double>(i);
    std::vector<double> pop = make_series(method, p, n, dt, samples);
    std::string col = method == "rabi-rwa" ? "rabi_rwa"
                      : method == "rwa-rf" ? "rwa_rf"
                                           : method;
    if (g.format == "json")
        write_out(g, json_table({"t", col}, {t, pop}) + "\n");
    else
        write_out(g, csv_table({"t", col}, {t, pop}));
}

void run_compare(const Global& g, const ParamsOpt& po, double t_max,
                 std::size_t samples, int photon_n, bool n_given) {
    if (samples < 2) throw CliError{2, "samples must be >= 2"};
    if (!(t_max > 0.0)) throw CliError{2, "t-max must be positive"};
    chrw_params p = po.scaled(g);
    double dt = t_max / static_cast<double>(samples - 1);
    int n = resolve_photon_n(p, photon_n, !n_given);

    std::vector<double> t(samples);
    for (std::size_t i = 0; i < samples; ++i) t[i] = dt * static_cast<double>(i);
    std::vector<double> chrw_s = series_chrw(p, dt, samples);
    std::vector<double> rwa_s = series_rabi_rwa(p, dt, samples);
    bool warned = false;
    std::vector<double> rf_s = series_rwa_rf(p, n, dt, samples, &warned);
    if (warned)
        std::cerr << "warning: rwa-rf evaluated off resonance (n*omega + epsilon != 0)\n";
    std::vector<double> ex_s = series_exact(p, dt, samples);

    auto max_dev = [&](const std::vector<double>& a) {
        double d = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i)
            d = std::max(d, std::abs(a[i] - ex_s[i]));
        return d;
    };
    std::string devs = "{\"max_dev_chrw\": " + num(max_dev(chrw_s)) +
                       ", \"max_dev_rabi_rwa\": " + num(max_dev(rwa_s)) +
                       ", \"max_dev_rwa_rf\": " + num(max_dev(rf_s)) + "}";

    if (g.format == "json") {
        std::string body = json_table({"t", "chrw", "rabi_rwa", "rwa_rf", "exact"},
                                      {t, chrw_s, rwa_s, rf_s, ex_s});
        body.pop_back();  // replace the closing brace to append the summary
        write_out(g, body + ", \"max_dev\": " + devs + "}\n");
    } else {
        std::string body = csv_table({"t", "chrw", "rabi_rwa", "rwa_rf", "exact"},
                                     {t, chrw_s, rwa_s, rf_s, ex_s});
        write_out(g, body + "# " + devs + "\n");
    }
}

// ---- sweep -----------------------------------------------------------------

void run_sweep(const Global& g, const ParamsOpt& po, const std::string& axis,
               double from, double to, std::size_t points,
               const std::string& quantity, bool lock_resonance) {
    if (points < 2) throw CliError{2, "points must be >= 2"};
    const chrw_params base = po.scaled(g);

    std::vector<double> axis_values(points);
    for (std::size_t i = 0; i < points; ++i)
        axis_values[i] =
            from + (to - from) * static_cast<double>(i) / static_cast<double>(points - 1);

    std::vector<std::optional<double>> rows(points);
    std::vector<chrw_status> errors(points, CHRW_OK);

    auto row = [&](std::size_t i) {
        chrw_params p = base;
        double v = g.in(axis_values[i]);
        if (axis == "amplitude") p.amplitude = v;
        else if (axis == "bias") p.epsilon = v;
        else if (axis == "tunneling") p.delta = v;
        else p.omega = v;
        if (lock_resonance) {
            double split = chrw_bare_splitting(&p);
            if (std::isfinite(split) && split > 0.0) p.omega = split;
        }
        double out = 0.0;
        chrw_status st;
        if (quantity == "rabi") st = chrw_generalized_rabi(&p, &out);
        else if (quantity == "rabi2nd") st = chrw_rabi_2nd(&p, &out);
        else if (quantity == "rabi_rwa_freq") st = chrw_rabi_rwa_frequency(&p, &out);
        else st = chrw_bs_shift_2nd(&p, &out);
        if (st == CHRW_OK)
            rows[i] = g.out_freq(out);
        else
            errors[i] = st;
    };

    // rows are independent; compute them concurrently, emit in axis order
    unsigned workers = std::max(1u, std::min(std::thread::hardware_concurrency(), 8u));
    std::vector<std::future<void>> futs;
    for (unsigned w = 0; w < workers; ++w)
        futs.push_back(std::async(std::launch::async, [&, w] {
            for (std::size_t i = w; i < points; i += workers) row(i);
        }));
    for (auto& f : futs) f.get();

    for (std::size_t i = 0; i < points; ++i)
        if (errors[i] != CHRW_OK)
            std::cerr << "warning: " << axis << " = " << num(axis_values[i]) << ": "
                      << chrw_status_message(errors[i]) << "\n";

    if (g.format == "json") {
        std::string out = "{\"" + axis + "\": [";
        for (std::size_t i = 0; i < points; ++i) {
            out += num(axis_values[i]);
            if (i + 1 < points) out += ", ";
        }
        out += "], \"" + quantity + "\": [";
        for (std::size_t i = 0; i < points; ++i) {
            out += rows[i] ? num(*rows[i]) : std::string("null");
            if (i + 1 < points) out += ", ";
        }
        write_out(g, out + "]}\n");
    } else {
        std::string out = axis + "," + quantity + "\n";
        for (std::size_t i = 0; i < points; ++i)
            out += num(axis_values[i]) + "," + (rows[i] ? num(*rows[i]) : "") + "\n";
        write_out(g, out);
    }
}

// ---- spectrum ---------------------------------------------------------------

const char* comb_name(chrw_comb_kind k) {
    switch (k) {
        case CHRW_COMB_HARMONIC: return "harmonic";
        case CHRW_COMB_RABI_PLUS: return "rabi_plus";
        case CHRW_COMB_RABI_MINUS: return "rabi_minus";
        case CHRW_COMB_UNCLASSIFIED: return "unclassified";
    }
    return "unclassified";
}

void run_spectrum(const Global& g, const ParamsOpt& po, const std::string& method,
                  double t_max, double dt, int pad_factor, double peak_threshold,
                  int photon_n, bool n_given) {
    chrw_params p = po.scaled(g);
    double rabi = 0.0;
    require_ok(chrw_generalized_rabi(&p, &rabi), "solve");

    if (!(t_max > 0.0)) {
        if (!(rabi > 0.0)) throw CliError{2, "t-max required when the Rabi frequency vanishes"};
        t_max = 40.0 * kTwoPi / rabi;  // 40 Rabi periods by default
    }
    if (!(dt > 0.0)) {
        double top = std::max({p.omega, rabi, chrw_bare_splitting(&p)});
        dt = kTwoPi / (64.0 * top);
    }
    std::size_t n = static_cast<std::size_t>(t_max / dt) + 1;
    if (n < 64) throw CliError{2, "window too short: fewer than 64 samples"};

    int pn = resolve_photon_n(p, photon_n, !n_given);
    std::vector<double> series = make_series(method, p, pn, dt, n);

    chrw_spectrum* sp = nullptr;
    require_ok(chrw_spectrum_compute(series.data(), n, 0.0, dt, pad_factor, &sp),
               "spectrum");
    std::size_t bins = chrw_spectrum_size(sp);
    double bin_width = 0.0;
    if (bins > 1) {
        double nu1 = 0.0;
        chrw_spectrum_bin(sp, 1, &nu1, nullptr);
        bin_width = nu1;
    }

    std::vector<double> freqs(256), weights(256);
    std::size_t found = 0;
    chrw_status st = chrw_spectrum_peaks(sp, peak_threshold, freqs.size(),
                                         freqs.data(), weights.data(), &found);
    if (st != CHRW_OK) {
        chrw_spectrum_free(sp);
        require_ok(st, "peaks");
    }
    std::size_t npeaks = std::min(found, freqs.size());

    std::string peaks_json = "[";
    for (std::size_t i = 0; i < npeaks; ++i) {
        chrw_comb_kind kind = CHRW_COMB_UNCLASSIFIED;
        int cn = 0;
        chrw_comb_match(freqs[i], p.omega, rabi, std::max(5.0 * bin_width, 1e-9),
                        &kind, &cn);
        peaks_json += "{\"frequency\": " + num(g.out_freq(freqs[i])) +
                      ", \"weight\": " + num(weights[i]) + ", \"comb\": \"" +
                      comb_name(kind) + "\", \"n\": " + std::to_string(cn) + "}";
        if (i + 1 < npeaks) peaks_json += ", ";
    }
    peaks_json += "]";

    if (g.format == "json") {
        std::string out = "{\"nu\": [";
        for (std::size_t k = 0; k < bins; ++k) {
            double nu = 0.0;
            chrw_spectrum_bin(sp, k, &nu, nullptr);
            out += num(g.out_freq(nu));
            if (k + 1 < bins) out += ", ";
        }
        out += "], \"magnitude\": [";
        for (std::size_t k = 0; k < bins; ++k) {
            double mag = 0.0;
            chrw_spectrum_bin(sp, k, nullptr, &mag);
            out += num(mag);
            if (k + 1 < bins) out += ", ";
        }
        out += "], \"peaks\": " + peaks_json + "}\n";
        write_out(g, out);
    } else {
        std::string out = "nu,magnitude\n";
        for (std::size_t k = 0; k < bins; ++k) {
            double nu = 0.0, mag = 0.0;
            chrw_spectrum_bin(sp, k, &nu, &mag);
            out += num(g.out_freq(nu)) + "," + num(mag) + "\n";
        }
        out += "# peaks: " + peaks_json + "\n";
        write_out(g, out);
    }
    chrw_spectrum_free(sp);
}

// Expand "--config FILE" into the flags listed in FILE (key = value lines,
// '#' comments). Flags given explicitly on the command line take precedence.
std::vector<std::string> expand_config(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::string path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
        else if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
    }
    if (path.empty()) return args;

    std::ifstream in(path);
    if (!in) throw CliError{2, "cannot open config file: " + path};
    std::set<std::string> given;
    for (const std::string& a : args)
        if (a.rfind("--", 0) == 0) given.insert(a.substr(0, a.find('=')));

    std::string line;
    auto trim = [](std::string s) {
        const char* ws = " \t\r";
        s.erase(0, s.find_first_not_of(ws));
        s.erase(s.find_last_not_of(ws) + 1);
        return s;
    };
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (std::size_t h = line.find('#'); h != std::string::npos) line.erase(h);
        line = trim(line);
        if (line.empty()) continue;
        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw CliError{2, path + ":" + std::to_string(lineno) + ": expected key = value"};
        std::string key = "--" + trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key == "--" || value.empty())
            throw CliError{2, path + ":" + std::to_string(lineno) + ": expected key = value"};
        if (given.count(key)) continue;  // command line wins
        if (value == "true") {
            args.push_back(key);
        } else if (value != "false") {
            args.push_back(key);
            args.push_back(value);
        }
    }
    return args;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Driven two-level system toolkit (CHRW, RWA baselines, exact integration)"};
    app.require_subcommand(1);
    app.fallthrough();

    Global g;
    app.add_option("--units", g.units, "Frequency units of inputs/outputs")
        ->check(CLI::IsMember({"angular", "hz"}))
        ->capture_default_str();
    app.add_option("--output", g.output, "Output file (default: stdout)");
    app.add_option("--format", g.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();

    ParamsOpt po_solve, po_evolve, po_compare, po_sweep, po_spectrum;
    double tol = 0.0;
    int max_iter = 0;
    CLI::App* solve = app.add_subcommand("solve", "Solve the two-parameter self-consistency");
    add_params(solve, po_solve);
    solve->add_option("--tol", tol, "Solver tolerance (default 1e-10)");
    solve->add_option("--max-iter", max_iter, "Newton iterations per step (default 200)");
    solve->add_option("--config", "Config file (key = value lines, # comments)");

    std::string ev_method = "chrw";
    double ev_tmax = 50.0;
    std::size_t ev_samples = 2001;
    int ev_photon = 0;
    CLI::App* evolve = app.add_subcommand("evolve", "Time-evolve the population with one method");
    add_params(evolve, po_evolve);
    evolve->add_option("--method", ev_method, "chrw | rabi-rwa | rwa-rf | exact")
        ->check(CLI::IsMember({"chrw", "rabi-rwa", "rwa-rf", "exact"}))
        ->capture_default_str();
    evolve->add_option("--t-max", ev_tmax, "Duration")->capture_default_str();
    evolve->add_option("--samples", ev_samples, "Grid size")->capture_default_str();
    CLI::Option* ev_n = evolve->add_option("--photon-n", ev_photon,
                                           "RWA-RF photon number (default -round(eps/w))");
    evolve->add_option("--config", "Config file (key = value lines, # comments)");

    double cp_tmax = 50.0;
    std::size_t cp_samples = 2001;
    int cp_photon = 0;
    CLI::App* compare = app.add_subcommand("compare", "All methods side by side vs exact");
    add_params(compare, po_compare);
    compare->add_option("--t-max", cp_tmax, "Duration")->capture_default_str();
    compare->add_option("--samples", cp_samples, "Grid size")->capture_default_str();
    CLI::Option* cp_n = compare->add_option("--photon-n", cp_photon,
                                            "RWA-RF photon number (default -round(eps/w))");
    compare->add_option("--config", "Config file (key = value lines, # comments)");

    std::string sw_axis = "amplitude", sw_quantity = "rabi";
    double sw_from = 0.0, sw_to = 1.0;
    std::size_t sw_points = 101;
    bool sw_lock = false;
    CLI::App* sweep = app.add_subcommand("sweep", "Sweep one parameter, tabulate one quantity");
    add_params(sweep, po_sweep);
    sweep->add_option("--axis", sw_axis, "amplitude | bias | tunneling | omega")
        ->check(CLI::IsMember({"amplitude", "bias", "tunneling", "omega"}))
        ->capture_default_str();
    sweep->add_option("--from", sw_from, "Axis start")->required();
    sweep->add_option("--to", sw_to, "Axis end")->required();
    sweep->add_option("--points", sw_points, "Number of rows")->capture_default_str();
    sweep->add_option("--quantity", sw_quantity,
                      "rabi | rabi2nd | rabi_rwa_freq | bs_shift")
        ->check(CLI::IsMember({"rabi", "rabi2nd", "rabi_rwa_freq", "bs_shift"}))
        ->capture_default_str();
    sweep->add_flag("--lock-omega-resonance", sw_lock,
                    "Set omega to the bare splitting at every row");
    sweep->add_option("--config", "Config file (key = value lines, # comments)");

    std::string sp_method = "exact";
    double sp_tmax = 0.0, sp_dt = 0.0, sp_threshold = 0.01;
    int sp_pad = 8, sp_photon = 0;
    CLI::App* spectrum = app.add_subcommand("spectrum", "Fourier spectrum and comb peaks");
    add_params(spectrum, po_spectrum);
    spectrum->add_option("--method", sp_method, "chrw | rabi-rwa | rwa-rf | exact")
        ->check(CLI::IsMember({"chrw", "rabi-rwa", "rwa-rf", "exact"}))
        ->capture_default_str();
    spectrum->add_option("--t-max", sp_tmax, "Window length (default: 40 Rabi periods)");
    spectrum->add_option("--dt", sp_dt, "Sample spacing (default: auto)");
    spectrum->add_option("--pad-factor", sp_pad, "Zero-padding factor")
        ->capture_default_str();
    spectrum->add_option("--peak-threshold", sp_threshold,
                         "Relative magnitude floor for peaks")
        ->capture_default_str();
    CLI::Option* sp_n = spectrum->add_option(
        "--photon-n", sp_photon, "RWA-RF photon number (default -round(eps/w))");
    spectrum->add_option("--config", "Config file (key = value lines, # comments)");

    try {
        std::vector<std::string> args = expand_config(argc, argv);
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    }

    try {
        if (solve->parsed()) run_solve(g, po_solve, tol, max_iter);
        else if (evolve->parsed())
            run_evolve(g, po_evolve, ev_method, ev_tmax, ev_samples, ev_photon,
                       ev_n->count() > 0);
        else if (compare->parsed())
            run_compare(g, po_compare, cp_tmax, cp_samples, cp_photon,
                        cp_n->count() > 0);
        else if (sweep->parsed())
            run_sweep(g, po_sweep, sw_axis, sw_from, sw_to, sw_points, sw_quantity,
                      sw_lock);
        else if (spectrum->parsed())
            run_spectrum(g, po_spectrum, sp_method, sp_tmax, sp_dt, sp_pad,
                         sp_threshold, sp_photon, sp_n->count() > 0);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
