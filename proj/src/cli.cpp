#include "cli.hpp"

#include "risbeam/correlation.hpp"
#include "risbeam/csv.hpp"
#include "risbeam/geometry.hpp"
#include "risbeam/pas.hpp"
#include "risbeam/phase_optim.hpp"
#include "risbeam/rng.hpp"
#include "risbeam/snr.hpp"
#include "risbeam/special.hpp"
#include "risbeam/toeplitz.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>

namespace risbeam::cli {

namespace {

std::string trim(std::string_view s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string_view::npos) return {};
    const auto end = s.find_last_not_of(" \t\r");
    return std::string(s.substr(begin, end - begin + 1));
}

double parse_double(const std::string& value, const std::string& context) {
    double out = 0;
    const char* first = value.data();
    const char* last = value.data() + value.size();
    const auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc() || ptr != last) {
        throw ConfigError(context + ": cannot parse '" + value + "' as a number");
    }
    return out;
}

}  // namespace

ConfigMap ConfigMap::parse(std::string_view text, std::string_view source_name) {
    ConfigMap cfg;
    cfg.source_ = std::string(source_name);
    cfg.text_ = std::string(text);

    std::istringstream in(cfg.text_);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto comment = line.find('#');
        if (comment != std::string::npos) line.erase(comment);
        const std::string stripped = trim(line);
        if (stripped.empty()) continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(cfg.source_ + ":" + std::to_string(line_no) +
                              ": expected 'key = value', got '" + stripped + "'");
        }
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key.empty() || value.empty()) {
            throw ConfigError(cfg.source_ + ":" + std::to_string(line_no) +
                              ": empty key or value");
        }
        if (cfg.entries_.count(key)) {
            throw ConfigError(cfg.source_ + ":" + std::to_string(line_no) + ": duplicate key '" +
                              key + "'");
        }
        cfg.entries_[key] = Entry{value, line_no, false};
    }
    return cfg;
}

bool ConfigMap::has(const std::string& key) const { return entries_.count(key) > 0; }

ConfigMap::Entry& ConfigMap::require(const std::string& key) {
    const auto it = entries_.find(key);
    if (it == entries_.end()) {
        throw ConfigError(source_ + ": missing required key '" + key + "'");
    }
    it->second.consumed = true;
    return it->second;
}

std::string ConfigMap::get_string(const std::string& key) { return require(key).value; }

std::optional<std::string> ConfigMap::get_optional_string(const std::string& key) {
    const auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    it->second.consumed = true;
    return it->second.value;
}

double ConfigMap::get_double(const std::string& key) {
    return parse_double(require(key).value, source_ + ": key '" + key + "'");
}

std::optional<double> ConfigMap::get_optional_double(const std::string& key) {
    if (!has(key)) return std::nullopt;
    return get_double(key);
}

Index ConfigMap::get_index(const std::string& key, Index fallback) {
    if (!has(key)) return fallback;
    const double v = get_double(key);
    if (v < 0 || v != std::floor(v)) {
        throw ConfigError(source_ + ": key '" + key + "' must be a nonnegative integer");
    }
    return static_cast<Index>(v);
}

std::uint64_t ConfigMap::get_uint64(const std::string& key, std::uint64_t fallback) {
    if (!has(key)) return fallback;
    const std::string value = require(key).value;
    std::uint64_t out = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc() || ptr != value.data() + value.size()) {
        throw ConfigError(source_ + ": key '" + key + "' must be an unsigned integer");
    }
    return out;
}

std::vector<double> ConfigMap::get_double_list(const std::string& key) {
    const std::string raw = require(key).value;
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= raw.size()) {
        const auto comma = raw.find(',', pos);
        const std::string item =
            trim(raw.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos));
        if (!item.empty()) {
            out.push_back(parse_double(item, source_ + ": key '" + key + "'"));
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (out.empty()) {
        throw ConfigError(source_ + ": key '" + key + "' must hold a nonempty list");
    }
    return out;
}

std::vector<Index> ConfigMap::get_index_list(const std::string& key) {
    std::vector<Index> out;
    for (const double v : get_double_list(key)) {
        if (v < 1 || v != std::floor(v)) {
            throw ConfigError(source_ + ": key '" + key + "' must hold positive integers");
        }
        out.push_back(static_cast<Index>(v));
    }
    return out;
}

void ConfigMap::finish() const {
    for (const auto& [key, entry] : entries_) {
        if (!entry.consumed) {
            throw ConfigError(source_ + ":" + std::to_string(entry.line) + ": unknown key '" +
                              key + "'");
        }
    }
}

namespace {

constexpr double pi = std::numbers::pi;

double to_radians(double value, bool degrees) { return degrees ? value * pi / 180.0 : value; }
double to_degrees(double value) { return value * 180.0 / pi; }

std::vector<std::array<double, 2>> load_table(const std::string& path, bool degrees) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open table_file '" + path + "'");
    std::vector<std::array<double, 2>> samples;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto comment = line.find('#');
        if (comment != std::string::npos) line.erase(comment);
        const std::string stripped = trim(line);
        if (stripped.empty()) continue;
        const auto comma = stripped.find(',');
        if (comma == std::string::npos) {
            throw ConfigError(path + ":" + std::to_string(line_no) +
                              ": expected 'angle,density'");
        }
        const double angle = parse_double(trim(stripped.substr(0, comma)),
                                          path + ":" + std::to_string(line_no));
        const double density = parse_double(trim(stripped.substr(comma + 1)),
                                            path + ":" + std::to_string(line_no));
        samples.push_back({to_radians(angle, degrees), density});
    }
    if (samples.size() < 2) {
        throw ConfigError(path + ": table must hold at least two samples");
    }
    return samples;
}

/// Shared experiment ingredients resolved from a config.
struct Experiment {
    PasModel<double> pas = PasModel<double>::exponential_correlation(0.0);
    ArrayGeometry<double> geometry;
    std::string family_name;
};

PasModel<double> resolve_pas(ConfigMap& cfg, bool degrees, std::string& family_name) {
    const std::string family = cfg.get_string("family");
    family_name = family;
    if (family == "gaussian") {
        return PasModel<double>::truncated_gaussian(
            to_radians(cfg.get_double("mean_angle"), degrees),
            to_radians(cfg.get_double("angular_spread"), degrees));
    }
    if (family == "laplacian") {
        return PasModel<double>::truncated_laplacian(
            to_radians(cfg.get_double("mean_angle"), degrees),
            to_radians(cfg.get_double("angular_spread"), degrees));
    }
    if (family == "exponential") {
        const double mean = cfg.has("mean_angle")
                                ? to_radians(cfg.get_double("mean_angle"), degrees)
                                : pi / 2;
        return PasModel<double>::exponential_correlation(cfg.get_double("kappa"), mean);
    }
    if (family == "tabulated") {
        return PasModel<double>::tabulated(load_table(cfg.get_string("table_file"), degrees));
    }
    throw ConfigError("unknown family '" + family +
                      "' (expected gaussian | laplacian | exponential | tabulated)");
}

ArrayGeometry<double> resolve_geometry(ConfigMap& cfg, bool degrees, Index n_elements) {
    ArrayGeometry<double> geom;
    geom.n_elements = n_elements;
    if (cfg.has("spacing") || cfg.has("wavelength")) {
        if (cfg.has("spacing_ratio")) {
            throw ConfigError("give either spacing_ratio or spacing+wavelength, not both");
        }
        geom.spacing = cfg.get_double("spacing");
        geom.wavelength = cfg.get_double("wavelength");
    } else {
        geom.spacing = cfg.has("spacing_ratio") ? cfg.get_double("spacing_ratio") : 0.5;
        geom.wavelength = 1.0;
    }
    geom.departure_angle = cfg.has("departure_angle")
                               ? to_radians(cfg.get_double("departure_angle"), degrees)
                               : pi / 2;
    geom.validate();
    return geom;
}

void check_sweep_strictly_increasing(const std::vector<Index>& sweep, const std::string& key) {
    for (std::size_t i = 1; i < sweep.size(); ++i) {
        if (sweep[i] <= sweep[i - 1]) {
            throw ConfigError("sweep '" + key + "' must be strictly increasing");
        }
    }
}

std::ofstream open_output(const std::string& path) {
    if (const auto parent = std::filesystem::path(path).parent_path(); !parent.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(parent, ec);
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open output file '" + path + "'");
    return out;
}

void write_common_metadata(CsvWriter& csv, const Invocation& inv, const ConfigMap& cfg) {
    csv.metadata("tool", std::string("risbeam ") + tool_version);
    csv.metadata("subcommand", inv.subcommand);
    char hash[20];
    std::snprintf(hash, sizeof(hash), "%016llx",
                  static_cast<unsigned long long>(fnv1a64(cfg.text())));
    csv.metadata("config_hash", hash);
    csv.metadata("seed", std::to_string(inv.seed));
    csv.metadata("rng", RandomStream::algorithm());
    csv.metadata("angle_units", inv.degrees ? "degrees" : "radians");
}

// ---------------------------------------------------------------------
// corr: correlation coefficients, exact quadrature and closed form side
// by side where both routes exist.
void run_corr(ConfigMap& cfg, const Invocation& inv, const std::string& out_path,
              std::ostream& diag) {
    std::string family;
    const PasModel<double> pas = resolve_pas(cfg, inv.degrees, family);
    const Index n_lags = cfg.get_index("n_lags", 32);
    if (n_lags < 1) throw ConfigError("n_lags must be >= 1");
    const ArrayGeometry<double> geom = resolve_geometry(cfg, inv.degrees, std::max<Index>(n_lags, 1));
    cfg.finish();

    const bool has_exact = pas.has_density();
    const bool has_approx = pas.family() != PasFamily::tabulated;

    std::optional<CorrelationSequence<double>> exact;
    std::optional<CorrelationSequence<double>> approx;
    if (has_exact) exact = correlation_exact(pas, geom, n_lags);
    if (has_approx) approx = correlation_approx(pas, geom, n_lags);

    auto out = open_output(out_path);
    CsvWriter csv(out);
    write_common_metadata(csv, inv, cfg);
    csv.metadata("family", family);
    csv.metadata("n_lags", std::to_string(n_lags));
    csv.metadata("spacing_ratio", format_value(geom.spacing_ratio()));

    if (has_exact && has_approx) {
        csv.header({"n", "re_exact", "im_exact", "abs_exact", "re_approx", "im_approx",
                    "abs_approx"});
        for (Index n = 0; n < n_lags; ++n) {
            const auto ce = exact->coeffs[n];
            const auto ca = approx->coeffs[n];
            csv.row({n, ce.real(), ce.imag(), std::abs(ce), ca.real(), ca.imag(), std::abs(ca)});
        }
    } else {
        const auto& seq = has_exact ? *exact : *approx;
        csv.metadata("provenance", to_string(seq.provenance));
        csv.header({"n", "re", "im", "abs"});
        for (Index n = 0; n < n_lags; ++n) {
            const auto c = seq.coeffs[n];
            csv.row({n, c.real(), c.imag(), std::abs(c)});
        }
    }
    diag << "wrote " << out_path << '\n';
}

// ---------------------------------------------------------------------
// gain-vs-n: optimized/DFT/relaxation/bound/benchmark gains over an
// element-count sweep. Long-form gain report rows.
void run_gain_vs_n(ConfigMap& cfg, const Invocation& inv, const std::string& out_path,
                   std::ostream& diag) {
    std::string family;
    const PasModel<double> pas = resolve_pas(cfg, inv.degrees, family);
    const std::vector<Index> sweep = cfg.get_index_list("sweep_n");
    check_sweep_strictly_increasing(sweep, "sweep_n");
    const Index samples = cfg.get_index("samples", 20000);
    const Index restarts = cfg.get_index("restarts", 5);
    ArrayGeometry<double> geom = resolve_geometry(cfg, inv.degrees, sweep.back());
    cfg.finish();

    const auto seq = pas.has_density() ? correlation_exact(pas, geom, sweep.back())
                                       : correlation_approx(pas, geom, sweep.back());
    const bool has_bound = pas.family() != PasFamily::tabulated;
    const double bound = has_bound ? family_bound(pas, geom)
                                   : std::numeric_limits<double>::quiet_NaN();

    auto out = open_output(out_path);
    CsvWriter csv(out);
    write_common_metadata(csv, inv, cfg);
    csv.metadata("family", family);
    csv.metadata("samples", std::to_string(samples));
    csv.header({"method", "N_r", "zeta", "zeta_db"});

    for (const Index n : sweep) {
        geom.n_elements = n;
        const auto cov = build_covariance(seq, n);
        const auto ca = optimize_phases(cov, geom, inv.seed, restarts);
        const auto dft = dft_phase_profile(build_gain_matrix(cov, geom));
        const auto top = lambda_max(cov);
        const auto bench = instantaneous_benchmark(cov, samples, inv.seed);

        csv.row({std::string("coordinate_ascent"), n, ca.gain, to_db(ca.gain)});
        csv.row({std::string("fourier_asymptotic"), n, dft.gain, to_db(dft.gain)});
        csv.row({std::string("lambda_max"), n, top.value, to_db(top.value)});
        if (has_bound) {
            csv.row({std::string("family_bound"), n, bound, to_db(bound)});
        }
        csv.row({std::string("instantaneous"), n, bench.mean, to_db(bench.mean)});
    }
    diag << "wrote " << out_path << '\n';
}

// ---------------------------------------------------------------------
// gain-vs-spread: optimized gain and closed-form bound against the
// angular spread, Gaussian and Laplacian families side by side.
void run_gain_vs_spread(ConfigMap& cfg, const Invocation& inv, const std::string& out_path,
                        std::ostream& diag) {
    const double mean_angle = cfg.has("mean_angle")
                                  ? to_radians(cfg.get_double("mean_angle"), inv.degrees)
                                  : pi / 2;
    const Index n_elements = cfg.get_index("n_elements", 100);
    if (n_elements < 1) throw ConfigError("n_elements must be >= 1");
    const std::vector<double> sweep_raw = cfg.get_double_list("sweep_spread");
    for (std::size_t i = 1; i < sweep_raw.size(); ++i) {
        if (sweep_raw[i] <= sweep_raw[i - 1]) {
            throw ConfigError("sweep 'sweep_spread' must be strictly increasing");
        }
    }
    const Index restarts = cfg.get_index("restarts", 5);
    const ArrayGeometry<double> geom = resolve_geometry(cfg, inv.degrees, n_elements);
    cfg.finish();

    auto out = open_output(out_path);
    CsvWriter csv(out);
    write_common_metadata(csv, inv, cfg);
    csv.metadata("n_elements", std::to_string(n_elements));
    csv.metadata("mean_angle_rad", format_value(mean_angle));
    csv.header({"family", "sigma_rad", "sigma_deg", "zeta", "zeta_db", "bound", "bound_db"});

    for (const std::string family : {"gaussian", "laplacian"}) {
        for (const double raw : sweep_raw) {
            const double sigma = to_radians(raw, inv.degrees);
            const double sigma_deg = inv.degrees ? raw : to_degrees(sigma);
            const PasModel<double> pas =
                family == "gaussian" ? PasModel<double>::truncated_gaussian(mean_angle, sigma)
                                     : PasModel<double>::truncated_laplacian(mean_angle, sigma);
            const auto seq = correlation_exact(pas, geom, n_elements);
            const auto cov = build_covariance(seq, n_elements);
            const auto ca = optimize_phases(cov, geom, inv.seed, restarts);
            const double bound = family_bound(pas, geom);
            csv.row({family, sigma, sigma_deg, ca.gain, to_db(ca.gain), bound, to_db(bound)});
        }
    }
    diag << "wrote " << out_path << '\n';
}

// ---------------------------------------------------------------------
// snr-vs-n: analytic and Monte Carlo average SNR over an element-count
// sweep, for numerically optimized and Fourier phase profiles, plus the
// instantaneous upper benchmark.
void run_snr_vs_n(ConfigMap& cfg, const Invocation& inv, const std::string& out_path,
                  std::ostream& diag) {
    std::string family;
    const PasModel<double> pas = resolve_pas(cfg, inv.degrees, family);
    const std::vector<Index> sweep = cfg.get_index_list("sweep_n");
    check_sweep_strictly_increasing(sweep, "sweep_n");
    const Index n_b = cfg.get_index("n_bs_antennas", 10);
    const double link_budget_db = cfg.has("link_budget_db") ? cfg.get_double("link_budget_db")
                                                            : -10.0;
    const Index samples = cfg.get_index("samples", 100000);
    const Index restarts = cfg.get_index("restarts", 5);
    ArrayGeometry<double> geom = resolve_geometry(cfg, inv.degrees, sweep.back());
    cfg.finish();

    const auto seq = pas.has_density() ? correlation_exact(pas, geom, sweep.back())
                                       : correlation_approx(pas, geom, sweep.back());

    auto out = open_output(out_path);
    CsvWriter csv(out);
    write_common_metadata(csv, inv, cfg);
    csv.metadata("family", family);
    csv.metadata("n_bs_antennas", std::to_string(n_b));
    csv.metadata("link_budget_db", format_value(link_budget_db));
    csv.metadata("samples", std::to_string(samples));
    csv.header({"N_r", "method", "snr_analytic_db", "snr_mc_db", "std_err_db", "cv"});

    const double nan = std::numeric_limits<double>::quiet_NaN();
    for (const Index n : sweep) {
        geom.n_elements = n;
        const auto cov = build_covariance(seq, n);
        SnrConfig<double> snr_cfg{n_b, from_db(link_budget_db), geom, pas, inv.seed, samples};

        const auto emit = [&](const std::string& method, const PhaseProfile<double>& profile) {
            const double analytic = average_snr_analytic(snr_cfg, profile);
            const auto sim = simulate_snr(snr_cfg, cov, profile);
            const double se_db = 10.0 / std::numbers::ln10 * (sim.std_error / sim.mean);
            csv.row({n, std::string(method), to_db(analytic), to_db(sim.mean), se_db, sim.cv});
        };
        emit("coordinate_ascent", optimize_phases(cov, geom, inv.seed, restarts));
        emit("fourier_asymptotic", dft_phase_profile(build_gain_matrix(cov, geom)));

        const auto bench = instantaneous_benchmark(cov, samples, inv.seed);
        const double scale = from_db(link_budget_db) * static_cast<double>(n_b) *
                             static_cast<double>(n);
        const double mc = scale * bench.mean;
        const double se_db = 10.0 / std::numbers::ln10 * (bench.std_error / bench.mean);
        const double cv = bench.std_error * std::sqrt(static_cast<double>(bench.samples)) /
                          bench.mean;
        csv.row({n, std::string("instantaneous"), nan, to_db(mc), se_db, cv});
    }
    diag << "wrote " << out_path << '\n';
}

std::string with_suffix(const std::string& path, const std::string& suffix) {
    if (suffix.empty()) return path;
    const std::filesystem::path p(path);
    std::filesystem::path out = p.parent_path() / p.stem();
    out += "_" + suffix;
    out += p.extension().empty() ? std::filesystem::path(".csv") : p.extension();
    return out.string();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

std::vector<std::pair<std::string, std::string>> preset_configs(const std::string& subcommand,
                                                                const std::string& preset) {
    const std::string sweep_n = "sweep_n = 1,2,4,8,16,32,64,100,128,200,256\n";
    const auto gain_curve = [&](const std::string& family, const std::string& spread) {
        return "family = " + family + "\nmean_angle = 45\nangular_spread = " + spread +
               "\nspacing_ratio = 0.5\ndeparture_angle = 80\nsamples = 20000\n" + sweep_n;
    };
    const auto snr_curve = [&](const std::string& family, const std::string& spread) {
        return "family = " + family + "\nmean_angle = 45\nangular_spread = " + spread +
               "\nspacing_ratio = 0.5\ndeparture_angle = 80\nn_bs_antennas = 10\n"
               "link_budget_db = -10\nsamples = 100000\n" + sweep_n;
    };

    if (preset == "fig1") {
        if (subcommand != "gain-vs-n") {
            throw ConfigError("preset fig1 belongs to the gain-vs-n subcommand");
        }
        return {{gain_curve("gaussian", "3"), "gaussian_s3"},
                {gain_curve("gaussian", "6"), "gaussian_s6"},
                {gain_curve("gaussian", "17"), "gaussian_s17"},
                {gain_curve("laplacian", "6"), "laplacian_s6"},
                {gain_curve("laplacian", "23"), "laplacian_s23"}};
    }
    if (preset == "fig2") {
        if (subcommand != "gain-vs-spread") {
            throw ConfigError("preset fig2 belongs to the gain-vs-spread subcommand");
        }
        return {{"mean_angle = 90\nspacing_ratio = 0.5\nn_elements = 100\n"
                 "sweep_spread = 1,2,3,4,5,6,8,10,12,14,17,20,23,26,30,35\n",
                 ""}};
    }
    if (preset == "fig3") {
        if (subcommand != "snr-vs-n") {
            throw ConfigError("preset fig3 belongs to the snr-vs-n subcommand");
        }
        return {{snr_curve("gaussian", "3"), "gaussian_s3"},
                {snr_curve("laplacian", "23"), "laplacian_s23"}};
    }
    throw ConfigError("unknown preset '" + preset + "' (expected fig1 | fig2 | fig3)");
}

int run(const Invocation& inv, std::ostream& diag) {
    try {
        if (inv.config_path.has_value() == inv.preset.has_value()) {
            throw ConfigError("give exactly one of --config and --defaults");
        }
        if (inv.out_path.empty()) throw ConfigError("--out is required");

        std::vector<std::pair<std::string, std::string>> jobs;  // (config text, suffix)
        Invocation resolved = inv;
        if (inv.preset) {
            jobs = preset_configs(inv.subcommand, *inv.preset);
            resolved.degrees = true;  // presets mirror the figure captions, stated in degrees
        } else {
            jobs.emplace_back(read_file(*inv.config_path), "");
        }

        for (const auto& [text, suffix] : jobs) {
            const std::string source =
                inv.preset ? ("preset " + *inv.preset +
                              (suffix.empty() ? std::string() : " [" + suffix + "]"))
                           : *inv.config_path;
            ConfigMap cfg = ConfigMap::parse(text, source);
            const std::string out_path = with_suffix(inv.out_path, suffix);
            if (inv.subcommand == "corr") {
                run_corr(cfg, resolved, out_path, diag);
            } else if (inv.subcommand == "gain-vs-n") {
                run_gain_vs_n(cfg, resolved, out_path, diag);
            } else if (inv.subcommand == "gain-vs-spread") {
                run_gain_vs_spread(cfg, resolved, out_path, diag);
            } else if (inv.subcommand == "snr-vs-n") {
                run_snr_vs_n(cfg, resolved, out_path, diag);
            } else {
                throw ConfigError("unknown subcommand '" + inv.subcommand + "'");
            }
        }
        return 0;
    } catch (const ConfigError& e) {
        diag << "config error: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        diag << "config error: " << e.what() << '\n';
        return 2;
    } catch (const NumericalError& e) {
        diag << "numerical failure: " << e.what() << '\n';
        return 3;
    } catch (const InvalidCorrelationError& e) {
        diag << "numerical failure: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        diag << "error: " << e.what() << '\n';
        return 3;
    }
}

}  // namespace risbeam::cli
