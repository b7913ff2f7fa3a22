// risbeam command-line front end.
//
// Subcommands expose the pipeline stages: corr (spatial correlations),
// gain-vs-n (beamforming gain vs element count), gain-vs-spread
// (gain vs angular spread), snr-vs-n (average SNR vs element count).
// Exit codes: 0 success, 2 configuration error, 3 numerical failure.
#include "cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

int main(int argc, char** argv) {
    CLI::App app{"Two-timescale RIS beamforming gain experiments"};
    app.require_subcommand(1);

    struct SubArgs {
        std::optional<std::string> config;
        std::optional<std::string> preset;
        std::string out;
        std::uint64_t seed = 1;
        bool degrees = false;
    };

    std::map<std::string, SubArgs> args;
    for (const std::string name : {"corr", "gain-vs-n", "gain-vs-spread", "snr-vs-n"}) {
        auto* sub = app.add_subcommand(name);
        auto& a = args[name];
        sub->add_option("--config", a.config, "Experiment config file (key = value lines)");
        sub->add_option("--defaults", a.preset, "Built-in figure preset (fig1 | fig2 | fig3)");
        sub->add_option("--out", a.out, "Output CSV path")->required();
        sub->add_option("--seed", a.seed, "Random seed")->capture_default_str();
        sub->add_flag("--degrees", a.degrees, "Interpret config angles as degrees");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const std::string name = app.get_subcommands().front()->get_name();
    const SubArgs& a = args[name];
    risbeam::cli::Invocation inv{name, a.config, a.preset, a.out, a.seed, a.degrees};
    return risbeam::cli::run(inv, std::cerr);
}
