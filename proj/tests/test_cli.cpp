#include "cli.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

using namespace risbeam::cli;
namespace fs = std::filesystem;

namespace {

fs::path test_dir() {
    const auto dir = fs::temp_directory_path() / "risbeam_cli_tests";
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path write_config(const std::string& name, const std::string& text) {
    const auto path = test_dir() / name;
    std::ofstream out(path, std::ios::binary);
    out << text;
    return path;
}

struct Csv {
    std::map<std::string, std::string> metadata;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

Csv parse_csv(const std::string& text) {
    Csv csv;
    std::istringstream in(text);
    std::string line;
    bool header_done = false;
    while (std::getline(in, line)) {
        if (line.rfind("# ", 0) == 0) {
            const auto colon = line.find(": ");
            REQUIRE(colon != std::string::npos);
            csv.metadata[line.substr(2, colon - 2)] = line.substr(colon + 2);
            continue;
        }
        std::vector<std::string> fields;
        std::istringstream ls(line);
        std::string field;
        while (std::getline(ls, field, ',')) fields.push_back(field);
        if (!header_done) {
            csv.columns = fields;
            header_done = true;
        } else {
            csv.rows.push_back(fields);
        }
    }
    return csv;
}

int run_quiet(const Invocation& inv) {
    std::ostringstream diag;
    const int code = run(inv, diag);
    INFO(diag.str());
    return code;
}

}  // namespace

TEST_CASE("config parser: values, comments, and typed accessors") {
    auto cfg = ConfigMap::parse("# comment\nfamily = gaussian\n\nkappa=0.5 # inline\n"
                                "sweep_n = 1, 2,4\n",
                                "inline");
    CHECK(cfg.get_string("family") == "gaussian");
    CHECK(cfg.get_double("kappa") == 0.5);
    const auto sweep = cfg.get_index_list("sweep_n");
    REQUIRE(sweep.size() == 3);
    CHECK(sweep[2] == 4);
    CHECK_NOTHROW(cfg.finish());
}

TEST_CASE("config parser: malformed inputs carry line context") {
    CHECK_THROWS_WITH(ConfigMap::parse("family gaussian\n", "bad.cfg"),
                      Catch::Matchers::ContainsSubstring("bad.cfg:1"));
    CHECK_THROWS_WITH(ConfigMap::parse("a = 1\na = 2\n", "dup.cfg"),
                      Catch::Matchers::ContainsSubstring("duplicate"));

    auto cfg = ConfigMap::parse("family = gaussian\nmystery = 1\n", "unknown.cfg");
    cfg.get_string("family");
    CHECK_THROWS_WITH(cfg.finish(), Catch::Matchers::ContainsSubstring("unknown.cfg:2"));
    CHECK_THROWS_WITH(cfg.finish(), Catch::Matchers::ContainsSubstring("mystery"));

    auto bad_num = ConfigMap::parse("kappa = zero\n", "num.cfg");
    CHECK_THROWS_AS(bad_num.get_double("kappa"), ConfigError);
}

TEST_CASE("unknown keys and bad values map to exit code 2") {
    const auto cfg = write_config("bad_key.cfg",
                                  "family = exponential\nkappa = 0.5\nn_lags = 8\nwat = 1\n");
    const auto out = test_dir() / "bad_key.csv";
    CHECK(run_quiet({"corr", cfg.string(), std::nullopt, out.string(), 1, false}) == 2);

    const auto bad = write_config("bad_kappa.cfg", "family = exponential\nkappa = 1.5\n");
    CHECK(run_quiet({"corr", bad.string(), std::nullopt, out.string(), 1, false}) == 2);

    const auto missing = write_config("missing.cfg", "family = gaussian\n");
    CHECK(run_quiet({"corr", missing.string(), std::nullopt, out.string(), 1, false}) == 2);

    CHECK(run_quiet({"corr", std::string("/nonexistent/x.cfg"), std::nullopt, out.string(), 1,
                     false}) == 2);
    // Preset and config are mutually exclusive; neither is also an error.
    CHECK(run_quiet({"corr", cfg.string(), std::string("fig1"), out.string(), 1, false}) == 2);
    CHECK(run_quiet({"corr", std::nullopt, std::nullopt, out.string(), 1, false}) == 2);
}

TEST_CASE("sweeps must be strictly increasing") {
    const auto cfg = write_config("sweep.cfg",
                                  "family = exponential\nkappa = 0.5\nsweep_n = 4,2\n");
    const auto out = test_dir() / "sweep.csv";
    CHECK(run_quiet({"gain-vs-n", cfg.string(), std::nullopt, out.string(), 1, false}) == 2);
}

TEST_CASE("corr subcommand: exponential magnitudes are exact powers") {
    const auto cfg = write_config("corr_exp.cfg", "family = exponential\nkappa = 0.5\n"
                                                  "n_lags = 12\n");
    const auto out = test_dir() / "corr_exp.csv";
    REQUIRE(run_quiet({"corr", cfg.string(), std::nullopt, out.string(), 1, false}) == 0);
    const auto csv = parse_csv(slurp(out));
    CHECK(csv.metadata.at("rng") == "mt19937_64/box-muller");
    CHECK(csv.metadata.at("subcommand") == "corr");
    CHECK(csv.metadata.count("config_hash") == 1);
    REQUIRE(csv.columns == std::vector<std::string>{"n", "re", "im", "abs"});
    REQUIRE(csv.rows.size() == 12);
    CHECK(std::stod(csv.rows[0][3]) == 1.0);
    for (std::size_t n = 0; n < csv.rows.size(); ++n) {
        CHECK(std::stod(csv.rows[n][3]) == std::pow(0.5, double(n)));
    }
}

TEST_CASE("corr subcommand: exact and approximate sequences side by side") {
    const auto cfg = write_config("corr_gauss.cfg",
                                  "family = gaussian\nmean_angle = 45\nangular_spread = 3\n"
                                  "n_lags = 32\n");
    const auto out = test_dir() / "corr_gauss.csv";
    REQUIRE(run_quiet({"corr", cfg.string(), std::nullopt, out.string(), 1, true}) == 0);
    const auto csv = parse_csv(slurp(out));
    REQUIRE(csv.columns ==
            std::vector<std::string>{"n", "re_exact", "im_exact", "abs_exact", "re_approx",
                                     "im_approx", "abs_approx"});
    REQUIRE(csv.rows.size() == 32);
    CHECK(std::stod(csv.rows[0][3]) == Catch::Approx(1.0).margin(1e-8));
    // The closed-form magnitude decays monotonically.
    for (std::size_t n = 1; n < csv.rows.size(); ++n) {
        CHECK(std::stod(csv.rows[n][6]) < std::stod(csv.rows[n - 1][6]));
        CHECK(std::stod(csv.rows[n][3]) <=
              std::stod(csv.rows[n - 1][3]) + 1e-9);  // exact track follows at 3 degrees
    }
    CHECK(csv.metadata.at("angle_units") == "degrees");
}

TEST_CASE("gain-vs-n subcommand: row schema and bound ordering") {
    const auto cfg = write_config("gain_n.cfg",
                                  "family = exponential\nkappa = 0.6\nsweep_n = 1,2,4,8\n"
                                  "samples = 2000\nrestarts = 2\n");
    const auto out = test_dir() / "gain_n.csv";
    REQUIRE(run_quiet({"gain-vs-n", cfg.string(), std::nullopt, out.string(), 7, false}) == 0);
    const auto csv = parse_csv(slurp(out));
    REQUIRE(csv.columns == std::vector<std::string>{"method", "N_r", "zeta", "zeta_db"});
    REQUIRE(csv.rows.size() == 4 * 5);

    std::map<std::pair<std::string, long>, double> zeta;
    for (const auto& row : csv.rows) {
        zeta[{row[0], std::stol(row[1])}] = std::stod(row[2]);
    }
    for (const long n : {1L, 2L, 4L, 8L}) {
        const double ca = zeta.at({"coordinate_ascent", n});
        CHECK(ca <= zeta.at({"family_bound", n}) + 1e-6);
        CHECK(zeta.at({"lambda_max", n}) <= zeta.at({"family_bound", n}) + 1e-6);
        CHECK(zeta.at({"fourier_asymptotic", n}) <= ca + 1e-9);
    }
    CHECK(zeta.at({"coordinate_ascent", 1}) == Catch::Approx(1.0));
    CHECK(zeta.at({"fourier_asymptotic", 1}) == Catch::Approx(1.0));
    CHECK(zeta.at({"lambda_max", 1}) == Catch::Approx(1.0));
}

TEST_CASE("gain-vs-spread subcommand: gains decay with the spread") {
    const auto cfg = write_config("spread.cfg",
                                  "mean_angle = 90\nn_elements = 24\n"
                                  "sweep_spread = 4,10,20,35\nrestarts = 2\n");
    const auto out = test_dir() / "spread.csv";
    REQUIRE(run_quiet({"gain-vs-spread", cfg.string(), std::nullopt, out.string(), 3, true}) ==
            0);
    const auto csv = parse_csv(slurp(out));
    REQUIRE(csv.columns == std::vector<std::string>{"family", "sigma_rad", "sigma_deg", "zeta",
                                                    "zeta_db", "bound", "bound_db"});
    REQUIRE(csv.rows.size() == 8);
    double prev_g = 1e30, prev_l = 1e30;
    for (const auto& row : csv.rows) {
        const double zeta = std::stod(row[3]);
        CHECK(zeta >= 1.0 - 1e-9);
        if (row[0] == "gaussian") {
            CHECK(zeta < prev_g);
            prev_g = zeta;
        } else {
            CHECK(zeta < prev_l);
            prev_l = zeta;
        }
    }
    // Vanishing correlation at the widest spread: the gain collapses toward
    // its 0 dB floor (the heavy-tailed Laplacian approaches it more slowly,
    // and past ~40 degrees truncation dominance turns the gains back up).
    CHECK(prev_g < 1.4);
    CHECK(prev_l < 2.5);
}

TEST_CASE("snr-vs-n subcommand: schema and analytic/mc agreement") {
    const auto cfg = write_config("snr.cfg",
                                  "family = gaussian\nmean_angle = 45\nangular_spread = 6\n"
                                  "departure_angle = 80\nsweep_n = 1,4\nn_bs_antennas = 10\n"
                                  "link_budget_db = -10\nsamples = 20000\nrestarts = 2\n");
    const auto out = test_dir() / "snr.csv";
    REQUIRE(run_quiet({"snr-vs-n", cfg.string(), std::nullopt, out.string(), 5, true}) == 0);
    const auto csv = parse_csv(slurp(out));
    REQUIRE(csv.columns == std::vector<std::string>{"N_r", "method", "snr_analytic_db",
                                                    "snr_mc_db", "std_err_db", "cv"});
    REQUIRE(csv.rows.size() == 6);
    for (const auto& row : csv.rows) {
        if (row[1] == "instantaneous") {
            CHECK(row[2] == "nan");
            continue;
        }
        const double analytic = std::stod(row[2]);
        const double mc = std::stod(row[3]);
        const double se_db = std::stod(row[4]);
        CHECK(std::abs(analytic - mc) <= 4.0 * se_db + 1e-9);
        CHECK(std::stod(row[5]) == Catch::Approx(1.0).margin(0.05));
    }
    // N_r = 1 with N_b = 10 and -10 dB budget: analytic SNR is 0 dB.
    CHECK(std::stod(csv.rows[0][2]) == Catch::Approx(0.0).margin(1e-9));
}

TEST_CASE("identical invocations produce byte-identical outputs") {
    const auto cfg = write_config("det.cfg",
                                  "family = laplacian\nmean_angle = 60\nangular_spread = 10\n"
                                  "sweep_n = 2,4\nsamples = 2000\nrestarts = 2\n");
    const auto out_a = test_dir() / "det_a.csv";
    const auto out_b = test_dir() / "det_b.csv";
    REQUIRE(run_quiet({"gain-vs-n", cfg.string(), std::nullopt, out_a.string(), 9, true}) == 0);
    REQUIRE(run_quiet({"gain-vs-n", cfg.string(), std::nullopt, out_b.string(), 9, true}) == 0);
    CHECK(slurp(out_a) == slurp(out_b));

    // A different seed must change the metadata line even when the math
    // is deterministic.
    const auto out_c = test_dir() / "det_c.csv";
    REQUIRE(run_quiet({"gain-vs-n", cfg.string(), std::nullopt, out_c.string(), 10, true}) == 0);
    CHECK(slurp(out_a) != slurp(out_c));
}

TEST_CASE("presets expand to the documented figure configurations") {
    const auto fig1 = preset_configs("gain-vs-n", "fig1");
    REQUIRE(fig1.size() == 5);
    CHECK(fig1[0].second == "gaussian_s3");
    CHECK(fig1[4].second == "laplacian_s23");
    CHECK(fig1[2].first.find("angular_spread = 17") != std::string::npos);

    const auto fig2 = preset_configs("gain-vs-spread", "fig2");
    REQUIRE(fig2.size() == 1);
    CHECK(fig2[0].first.find("n_elements = 100") != std::string::npos);
    CHECK(fig2[0].first.find("mean_angle = 90") != std::string::npos);

    const auto fig3 = preset_configs("snr-vs-n", "fig3");
    REQUIRE(fig3.size() == 2);
    CHECK(fig3[0].first.find("n_bs_antennas = 10") != std::string::npos);
    CHECK(fig3[0].first.find("link_budget_db = -10") != std::string::npos);
    CHECK(fig3[0].first.find("departure_angle = 80") != std::string::npos);

    CHECK_THROWS_AS(preset_configs("corr", "fig1"), ConfigError);
    CHECK_THROWS_AS(preset_configs("gain-vs-n", "fig9"), ConfigError);
}

TEST_CASE("tabulated spectra load from csv tables") {
    const auto table = write_config("uniform_pas.csv", "# angle, density\n0, 1\n180, 1\n");
    const auto cfg = write_config("corr_tab.cfg", "family = tabulated\ntable_file = " +
                                                      table.string() + "\nn_lags = 2\n");
    const auto out = test_dir() / "corr_tab.csv";
    REQUIRE(run_quiet({"corr", cfg.string(), std::nullopt, out.string(), 1, true}) == 0);
    const auto csv = parse_csv(slurp(out));
    REQUIRE(csv.columns == std::vector<std::string>{"n", "re", "im", "abs"});
    // Uniform spectrum at half-wave spacing: |c_1| = |J0(pi)|.
    CHECK(std::stod(csv.rows[1][3]) == Catch::Approx(0.3042).margin(1e-3));
}
