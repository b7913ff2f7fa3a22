// Deterministic CSV output: '#'-prefixed metadata lines, a header row,
// then comma-separated data rows. Doubles are printed with round-trip
// precision so identical runs produce byte-identical files.
#pragma once

#include "risbeam/types.hpp"

#include <cstdint>
#include <cstdio>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace risbeam {

inline std::string format_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline std::string format_value(Index v) {
    return std::to_string(v);
}

/// FNV-1a 64-bit hash; stamps resolved configs into output metadata.
inline std::uint64_t fnv1a64(std::string_view text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const char c : text) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

class CsvWriter {
  public:
    using Cell = std::variant<std::string, double, Index>;

    explicit CsvWriter(std::ostream& os) : os_(os) {}

    void metadata(std::string_view key, std::string_view value) {
        os_ << "# " << key << ": " << value << '\n';
    }

    void header(const std::vector<std::string>& columns) {
        write_joined(columns);
    }

    void row(const std::vector<Cell>& cells) {
        std::vector<std::string> fields;
        fields.reserve(cells.size());
        for (const auto& cell : cells) {
            if (std::holds_alternative<std::string>(cell)) {
                fields.push_back(std::get<std::string>(cell));
            } else if (std::holds_alternative<double>(cell)) {
                fields.push_back(format_value(std::get<double>(cell)));
            } else {
                fields.push_back(format_value(std::get<Index>(cell)));
            }
        }
        write_joined(fields);
    }

  private:
    void write_joined(const std::vector<std::string>& fields) {
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i > 0) os_ << ',';
            os_ << fields[i];
        }
        os_ << '\n';
    }

    std::ostream& os_;
};

}  // namespace risbeam
