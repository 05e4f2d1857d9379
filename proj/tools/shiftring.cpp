// (C) Copyright 2026, shiftring contributors.
//
// Licensed under the Apache License, Version 2.0; you may obtain a copy at
// http://www.apache.org/licenses/LICENSE-2.0.
//
// Command-line laboratory front end: every experiment is a subcommand that
// reads a flat key=value config (dotted sections), applies flag overrides,
// writes its artifact atomically with an embedded config hash, and exits
// 0 (all certificates pass) / 1 (a named inequality failed) / 2 (usage) /
// 3 (resource cap).

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "shiftring/experiments.hpp"

using json = nlohmann::json;
using namespace shiftring;

namespace {

constexpr const char* kVersion = "shiftring 0.1.0";
constexpr int kExitPass = 0, kExitCertificate = 1, kExitUsage = 2, kExitResource = 3;

struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CertificateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Config = std::map<std::string, std::string>;

Config load_config(const std::string& path) {
    Config cfg;
    if (path.empty()) return cfg;
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("config", "cannot open config file " + path);
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            const auto a = s.find_first_not_of(" \t\r");
            const auto b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
        if (!key.empty()) cfg[key] = value;
    }
    return cfg;
}

double getd(const Config& cfg, const std::string& key, double def) {
    auto it = cfg.find(key);
    return it == cfg.end() ? def : std::stod(it->second);
}

long geti(const Config& cfg, const std::string& key, long def) {
    auto it = cfg.find(key);
    return it == cfg.end() ? def : std::stol(it->second);
}

std::string gets(const Config& cfg, const std::string& key, const std::string& def) {
    auto it = cfg.find(key);
    return it == cfg.end() ? def : it->second;
}

std::string config_hash(const std::string& command, const Config& cfg) {
    std::uint64_t h = 0xcbf29ce484222325ull;  // FNV-1a
    auto mix = [&h](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 0x100000001b3ull;
        }
    };
    mix(command);
    for (const auto& [k, v] : cfg) {
        mix("|");
        mix(k);
        mix("=");
        mix(v);
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

void write_atomic(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp);
        out << content;
    }
    std::filesystem::rename(tmp, path);
}

bool cache_hit(const std::string& path, const std::string& hash, bool force) {
    if (force || path.empty() || path == "-") return false;
    std::ifstream in(path);
    if (!in) return false;
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str().find(hash) != std::string::npos;
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12e", v);
    return buf;
}

json config_echo(const std::string& command, const Config& cfg) {
    json j;
    j["command"] = command;
    j["version"] = kVersion;
    j["config"] = cfg;
    j["config_hash"] = config_hash(command, cfg);
    return j;
}

std::string csv_header(const std::string& command, const Config& cfg, const std::string& columns) {
    std::string out = "# " + std::string(kVersion) + " " + command + "\n";
    out += "# config_hash=" + config_hash(command, cfg) + "\n";
    for (const auto& [k, v] : cfg) out += "# " + k + "=" + v + "\n";
    out += columns + "\n";
    return out;
}

void require_dense_cap(long n) {
    if (n > 12) throw ResourceError("dense cap exceeded: n = " + std::to_string(n) + " > 12");
    if (n < 4 || n % 4 != 0)
        throw CLI::ValidationError("lattice.n", "ring size must be a positive multiple of 4");
}

// ---------------------------------------------------------------------------

int run_scan_lr(const Config& cfg, const std::string& out, bool force) {
    const long n = geti(cfg, "lattice.n", 8);
    require_dense_cap(n);
    const std::string hash = config_hash("scan-lr", cfg);
    if (cache_hit(out, hash, force)) return kExitPass;

    RingLattice lat(static_cast<int>(n));
    HamiltonianModel model = build_nearest_neighbor(lat, geti(cfg, "model.seed", 1));
    const double tmax = getd(cfg, "time.T", 1.0);
    const long steps = geti(cfg, "time.steps", 5);
    std::vector<double> tgrid;
    for (long i = 1; i <= steps; ++i) tgrid.push_back(tmax * static_cast<double>(i) / steps);
    std::vector<int> xgrid;
    for (int x = 0; x < lat.n; ++x) xgrid.push_back(x);

    PauliString a0 = PauliString::single(lat, 0, PauliLetter::X);
    PauliString b0 = PauliString::single(lat, 0, PauliLetter::Z);
    auto table = commutator_front(model, a0, b0, tgrid, xgrid);

    std::string csv = csv_header("scan-lr", cfg, "t,x,value");
    for (size_t ti = 0; ti < tgrid.size(); ++ti)
        for (size_t xi = 0; xi < xgrid.size(); ++xi)
            csv += fmt(tgrid[ti]) + "," + std::to_string(xgrid[xi]) + "," + fmt(table[ti][xi]) + "\n";
    write_atomic(out, csv);
    return kExitPass;
}

int run_scan_frobenius(const Config& cfg, const std::string& out, bool force) {
    const long n = geti(cfg, "lattice.n", 8);
    require_dense_cap(n);
    const std::string hash = config_hash("scan-frobenius", cfg);
    if (cache_hit(out, hash, force)) return kExitPass;

    const double alpha = getd(cfg, "model.alpha", 3.0);
    const double tmax = getd(cfg, "time.T", 1.0);
    const long steps = geti(cfg, "time.steps", 3);
    const long rmax = geti(cfg, "scan.rmax", n / 2 - 2);
    std::vector<double> ts;
    for (long i = 1; i <= steps; ++i) ts.push_back(tmax * static_cast<double>(i) / steps);
    std::vector<int> rs;
    for (int r = 2; r <= rmax; ++r) rs.push_back(r);
    LeakageScan scan =
        leakage_scan(static_cast<int>(n), alpha, ts, rs, geti(cfg, "model.seed", 1));

    std::string csv = csv_header("scan-frobenius", cfg, "t,r,value");
    for (const ScanPoint& pt : scan.fb_points)
        csv += fmt(pt.t) + "," + fmt(pt.r) + "," + fmt(pt.value) + "\n";
    write_atomic(out, csv);
    return kExitPass;
}

int run_circuitize(const Config& cfg, const std::string& out, bool force) {
    const long n = geti(cfg, "lattice.n", 8);
    require_dense_cap(n);
    const std::string hash = config_hash("circuitize", cfg);
    if (cache_hit(out, hash, force)) return kExitPass;

    RingLattice lat(static_cast<int>(n));
    const std::string kind = gets(cfg, "model.kind", "nearest-neighbor");
    HamiltonianModel model =
        kind == "power-law"
            ? build_powerlaw(lat, getd(cfg, "model.alpha", 3.0), getd(cfg, "model.K", 1.0),
                             geti(cfg, "model.seed", 1), true)
            : build_nearest_neighbor(lat, geti(cfg, "model.seed", 1));
    BoundParams params;
    params.epsilon = getd(cfg, "params.epsilon", 0.01);
    CircuitizeReport rep = circuitize(model, getd(cfg, "time.T", 0.25), params,
                                      static_cast<int>(geti(cfg, "circuit.ell_override", -1)),
                                      getd(cfg, "time.dt", -1.0));
    json j = config_echo("circuitize", cfg);
    j["err_total"] = rep.err_total;
    j["far_budget"] = rep.far_budget;
    j["cut_a_err"] = rep.cut_a_err;
    j["cut_b_err"] = rep.cut_b_err;
    j["cut_a_bound"] = rep.cut_a_bound;
    j["cut_b_bound"] = rep.cut_b_bound;
    j["slack"] = rep.slack;
    j["ell"] = rep.ell;
    j["regime_check_bypassed"] = rep.regime_check_bypassed;
    write_atomic(out, j.dump(2) + "\n");
    const double budget = rep.far_budget + rep.cut_a_bound + rep.cut_b_bound + rep.slack;
    if (rep.cut_a_err > rep.cut_a_bound + rep.slack || rep.cut_b_err > rep.cut_b_bound + rep.slack)
        throw CertificateError("cut error exceeded its integrated leakage bound + slack");
    (void)budget;
    return kExitPass;
}

int run_verify_lemma(const Config& cfg, const std::string& out, bool force) {
    const long n = geti(cfg, "lattice.n", 4 * geti(cfg, "lattice.l", 2));
    require_dense_cap(n);
    const long l = n / 4;
    const std::string hash = config_hash("verify-lemma", cfg);
    if (cache_hit(out, hash, force)) return kExitPass;

    LemmaSweepReport rep =
        lemma_sweep(static_cast<int>(l), static_cast<int>(geti(cfg, "samples", 100)),
                    static_cast<int>(geti(cfg, "z_samples", 16)), geti(cfg, "model.seed", 7));
    json j = config_echo("verify-lemma", cfg);
    j["tuples"] = rep.tuples;
    j["z_per_tuple"] = rep.z_per_tuple;
    j["min_distance"] = rep.min_distance;
    j["max_spectral_norm"] = rep.max_spectral_norm;
    j["pass"] = rep.pass;
    write_atomic(out, j.dump(2) + "\n");
    if (!rep.pass)
        throw CertificateError("hard-state trace distance fell below 1/2 (min = " +
                               std::to_string(rep.min_distance) + ")");
    return kExitPass;
}

int run_verify_super2(const Config& cfg, const std::string& out, bool force) {
    const std::string hash = config_hash("verify-super2", cfg);
    if (cache_hit(out, hash, force)) return kExitPass;

    SuperSweepReport rep = super_sweep(static_cast<int>(geti(cfg, "samples", 20)),
                                       geti(cfg, "model.seed", 7));
    json j = config_echo("verify-super2", cfg);
    j["tuples"] = rep.tuples;
    j["min_halfchain"] = rep.min_halfchain;
    j["min_max_value"] = rep.min_max_value;
    j["worst_pauli"] = rep.worst_pauli;
    j["pass"] = rep.pass;
    write_atomic(out, j.dump(2) + "\n");
    if (!rep.pass)
        throw CertificateError("operator-space witness fell below 1/2 or Pauli scan below 1/4");
    return kExitPass;
}

int run_verify_fidelity(const Config& cfg, const std::string& out, bool force) {
    const std::string hash = config_hash("verify-fidelity-chain", cfg);
    if (cache_hit(out, hash, force)) return kExitPass;

    FidelitySweepReport rep = fidelity_sweep(static_cast<int>(geti(cfg, "samples", 20)),
                                             geti(cfg, "model.seed", 7));
    json j = config_echo("verify-fidelity-chain", cfg);
    j["tuples"] = rep.tuples;
    j["min_link"] = rep.min_link;
    j["min_frobenius"] = rep.min_frob;
    j["max_identity_error"] = rep.max_identity_error;
    j["pass"] = rep.pass;
    write_atomic(out, j.dump(2) + "\n");
    if (!rep.pass)
        throw CertificateError("a fidelity link fell below 1/16 or the assembled norm below 1/4");
    return kExitPass;
}

int run_end_to_end(const Config& cfg, const std::string& out, bool force) {
    const std::string hash = config_hash("end-to-end", cfg);
    if (cache_hit(out, hash, force)) return kExitPass;

    EndToEndSuite suite = end_to_end_suite(geti(cfg, "model.seed", 1));
    json j = config_echo("end-to-end", cfg);
    j["verdicts"] = json::array();
    for (const EndToEndVerdict& v : suite.verdicts) {
        json jv;
        jv["err_circuit"] = v.err_circuit;
        jv["tilde_dist_frobenius"] = v.tilde_dist_frob;
        jv["tilde_dist_operator"] = v.tilde_dist_op;
        jv["final_dist"] = v.final_dist;
        jv["min_state_distance"] = v.min_state_distance;
        jv["triangle_ok"] = v.triangle_ok;
        jv["pass"] = v.pass;
        j["verdicts"].push_back(jv);
    }
    j["pass"] = suite.pass;
    write_atomic(out, j.dump(2) + "\n");
    if (!suite.pass)
        throw CertificateError("final distance to the shift fell below 1/8 with small circuit error");
    return kExitPass;
}

int run_bounds_table(const Config& cfg, const std::string& out, bool force) {
    const std::string hash = config_hash("bounds-table", cfg);
    if (cache_hit(out, hash, force)) return kExitPass;

    BoundParams params;
    params.epsilon = getd(cfg, "params.epsilon", 0.01);
    std::vector<double> alphas = {1.5, 2.0, 2.5, 2.0 + 1.0 / std::sqrt(2.0), 3.0, 3.5, 4.0, 5.0};
    std::vector<int> ls = {static_cast<int>(geti(cfg, "lattice.l", 100))};
    auto rows = bounds_table(alphas, ls, params.epsilon, params);

    std::string csv = csv_header("bounds-table", cfg, "alpha,L,source,T_threshold");
    csv += "# critical_alpha=" + fmt(critical_alpha()) + "\n";
    for (const ThresholdRow& row : rows)
        csv += fmt(row.alpha) + "," + std::to_string(row.big_l) + "," + row.source + "," +
               fmt(row.value) + "\n";
    write_atomic(out, csv);
    if (std::abs(critical_alpha() - (2.0 + 1.0 / std::sqrt(2.0))) > 1e-10)
        throw CertificateError("critical exponent bisection disagrees with 2 + 1/sqrt(2)");
    return kExitPass;
}

int run_fit_front(const Config& cfg, const std::string& out, bool force) {
    const std::string hash = config_hash("fit-front", cfg);
    if (cache_hit(out, hash, force)) return kExitPass;

    const std::string input = gets(cfg, "input.path", "");
    if (input.empty()) throw CLI::ValidationError("input.path", "fit-front needs an input CSV");
    std::ifstream in(input);
    if (!in) throw CLI::ValidationError("input.path", "cannot open " + input);
    std::vector<ScanPoint> scan;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#' || line[0] == 't') continue;
        std::stringstream ss(line);
        std::string a, b, c;
        if (!std::getline(ss, a, ',') || !std::getline(ss, b, ',') || !std::getline(ss, c))
            continue;
        scan.push_back({std::stod(a), std::stod(b), std::stod(c)});
    }
    const std::string model = gets(cfg, "fit.model", "powerlaw-front");
    FitReport rep = fit_front(scan,
                              model == "exponential-front" ? FrontModel::ExponentialFront
                                                           : FrontModel::PowerLawFront,
                              getd(cfg, "model.alpha", 3.0));
    json j = config_echo("fit-front", cfg);
    j["c_lr"] = rep.params.c_lr;
    j["mu"] = rep.params.mu;
    j["v"] = rep.params.v;
    j["c_fb"] = rep.params.c_fb;
    j["rms_log_residual"] = rep.rms_log_residual;
    j["inflation"] = rep.inflation;
    write_atomic(out, j.dump(2) + "\n");
    return kExitPass;
}

int run_spt_swap(const Config& cfg, const std::string& out, bool force) {
    const std::string hash = config_hash("spt-swap", cfg);
    if (cache_hit(out, hash, force)) return kExitPass;

    SptReport rep = spt_experiment();
    json j = config_echo("spt-swap", cfg);
    j["conjugation_error"] = rep.conjugation_error;
    j["circuit_error"] = rep.circuit_error;
    j["involution_ok"] = rep.involution_ok;
    j["commutes_ok"] = rep.commutes_ok;
    j["circuit_separable"] = rep.circuit_separable;
    j["pass"] = rep.pass;
    write_atomic(out, j.dump(2) + "\n");
    if (!rep.pass) throw CertificateError("two-copy swap-string conjugation check failed");
    return kExitPass;
}

int run_haar_projector(const Config& cfg, const std::string& out, bool force) {
    const long n = geti(cfg, "lattice.n", 6);
    if (n > 10) throw ResourceError("haar-projector cap: n <= 10");
    const std::string hash = config_hash("haar-projector", cfg);
    if (cache_hit(out, hash, force)) return kExitPass;

    ProjectorReport rep = haar_projector_experiment(
        static_cast<int>(n), static_cast<int>(geti(cfg, "samples", 1000)),
        geti(cfg, "model.seed", 7));
    json j = config_echo("haar-projector", cfg);
    j["samples"] = rep.samples;
    j["max_deviation"] = rep.max_deviation;
    j["tolerance"] = rep.tolerance;
    j["pass"] = rep.pass;
    write_atomic(out, j.dump(2) + "\n");
    if (!rep.pass)
        throw CertificateError("Monte Carlo twirl deviated from the exact projector beyond 5 dim/sqrt(M)");
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{std::string(kVersion) + " - shift-unitary numerical laboratory"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    std::string config_path, out_path = "-";
    bool force = false;
    Config overrides;
    app.add_option("--config", config_path, "flat key=value config file");
    app.add_option("--out,-o", out_path, "output artifact path ('-' = stdout)");
    app.add_flag("--force", force, "recompute even if the cached output matches");
    app.add_option("--set", [&overrides](const std::vector<std::string>& kvs) {
        for (const std::string& kv : kvs) {
            const auto eq = kv.find('=');
            if (eq == std::string::npos) return false;
            overrides[kv.substr(0, eq)] = kv.substr(eq + 1);
        }
        return true;
    }, "override a config key (key=value, repeatable)");

    long n_flag = -1, l_flag = -1, seed_flag = -1, samples_flag = -1;
    double alpha_flag = -1.0, t_flag = -1.0, dt_flag = -2.0;
    app.add_option("--n", n_flag, "ring size (multiple of 4)");
    app.add_option("--l", l_flag, "quarter-ring length L");
    app.add_option("--seed", seed_flag, "master seed");
    app.add_option("--samples", samples_flag, "sample count");
    app.add_option("--alpha", alpha_flag, "power-law exponent");
    app.add_option("--T", t_flag, "total evolution time");
    app.add_option("--dt", dt_flag, "integrator step");

    const std::map<std::string, std::pair<std::string, int (*)(const Config&, const std::string&, bool)>>
        commands = {
            {"scan-lr", {"operator-norm commutator light-cone scan (CSV)", run_scan_lr}},
            {"scan-frobenius", {"Frobenius leakage scan (CSV)", run_scan_frobenius}},
            {"circuitize", {"four-block circuit approximation report (JSON)", run_circuitize}},
            {"verify-lemma", {"hard-state trace-distance certificate sweep", run_verify_lemma}},
            {"verify-super2", {"operator-space certificate sweep", run_verify_super2}},
            {"verify-fidelity-chain", {"per-z fidelity chain sweep", run_verify_fidelity}},
            {"end-to-end", {"full pipeline verdicts at n = 8", run_end_to_end}},
            {"bounds-table", {"threshold table and critical exponent (CSV)", run_bounds_table}},
            {"fit-front", {"fit front constants to a scan CSV", run_fit_front}},
            {"spt-swap", {"two-copy swap-string checks", run_spt_swap}},
            {"haar-projector", {"Monte Carlo twirl vs exact projector", run_haar_projector}},
        };
    for (const auto& [name, meta] : commands) app.add_subcommand(name, meta.first)->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    Config cfg;
    try {
        cfg = load_config(config_path);
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }
    for (const auto& [k, v] : overrides) cfg[k] = v;
    if (n_flag >= 0) cfg["lattice.n"] = std::to_string(n_flag);
    if (l_flag >= 0) cfg["lattice.l"] = std::to_string(l_flag);
    if (seed_flag >= 0) cfg["model.seed"] = std::to_string(seed_flag);
    if (samples_flag >= 0) cfg["samples"] = std::to_string(samples_flag);
    if (alpha_flag >= 0) cfg["model.alpha"] = std::to_string(alpha_flag);
    if (t_flag >= 0) cfg["time.T"] = std::to_string(t_flag);
    if (dt_flag > -2.0) cfg["time.dt"] = std::to_string(dt_flag);
    if (cfg.count("output.path") && out_path == "-") out_path = cfg["output.path"];

    const std::string name = app.get_subcommands().front()->get_name();
    try {
        return commands.at(name).second(cfg, out_path, force);
    } catch (const CertificateError& e) {
        std::cerr << "certificate failure: " << e.what() << "\n";
        return kExitCertificate;
    } catch (const ResourceError& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::bad_alloc&) {
        std::cerr << "resource error: allocation failed\n";
        return kExitResource;
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    }
}
