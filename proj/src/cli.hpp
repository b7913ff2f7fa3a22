// Command-line experiment front end: declarative key=value configs,
// figure presets, and CSV emission for each pipeline stage.
#pragma once

#include "risbeam/types.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace risbeam::cli {

inline constexpr const char* tool_version = "0.1.0";

/// Raised on malformed or invalid experiment configuration; the CLI maps
/// it to exit code 2.
class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Flat key = value configuration with '#' comments. Keys are consumed by
/// typed getters; finish() rejects any key the subcommand did not consume,
/// reporting its line number.
class ConfigMap {
  public:
    static ConfigMap parse(std::string_view text, std::string_view source_name);

    bool has(const std::string& key) const;
    std::string get_string(const std::string& key);
    std::optional<std::string> get_optional_string(const std::string& key);
    double get_double(const std::string& key);
    std::optional<double> get_optional_double(const std::string& key);
    Index get_index(const std::string& key, Index fallback);
    std::uint64_t get_uint64(const std::string& key, std::uint64_t fallback);
    std::vector<double> get_double_list(const std::string& key);
    std::vector<Index> get_index_list(const std::string& key);

    /// Throws ConfigError on the first unconsumed key.
    void finish() const;

    const std::string& text() const { return text_; }

  private:
    struct Entry {
        std::string value;
        int line;
        bool consumed = false;
    };
    std::string source_;
    std::string text_;
    std::map<std::string, Entry> entries_;

    Entry& require(const std::string& key);
};

struct Invocation {
    std::string subcommand;  // corr | gain-vs-n | gain-vs-spread | snr-vs-n
    std::optional<std::string> config_path;
    std::optional<std::string> preset;  // fig1 | fig2 | fig3
    std::string out_path;
    std::uint64_t seed = 1;
    bool degrees = false;
};

/// Embedded preset config text reproducing the default figure settings.
/// Returns one (config text, output suffix) pair per curve.
std::vector<std::pair<std::string, std::string>> preset_configs(const std::string& subcommand,
                                                                const std::string& preset);

/// Execute an invocation. Exceptions are mapped to the documented exit
/// codes: 0 success, 2 configuration error, 3 numerical failure.
int run(const Invocation& inv, std::ostream& diagnostics);

}  // namespace risbeam::cli
