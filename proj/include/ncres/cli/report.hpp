#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ncres/groebner/presentation.hpp"

namespace ncres::cli {

using Json = nlohmann::ordered_json;

inline const std::vector<std::string>& commands() {
    static const std::vector<std::string> names = {"gb",   "chains", "resolution", "betti", "koszul",
                                                   "dual", "hilbert", "gldim",     "graph"};
    return names;
}

struct Config {
    std::size_t max_deg = 8;
    std::optional<std::size_t> max_level;  ///< defaults to max_deg

    std::size_t level() const { return max_level.value_or(max_deg); }
};

/// The engine output of one subcommand.
struct Report {
    std::string command;
    Json config;
    Json payload;
    std::string text;
    std::string dot;  ///< only for `graph`
    /// Whether every Groebner basis the answer rests on is certified complete.
    bool certified = true;
};

/// Runs one subcommand. Throws std::invalid_argument on unknown commands and
/// passes engine errors through.
Report build_report(const std::string& command, const gb::Presentation& presentation, const Config& config);

/// {"command", "config", "payload"} plus "timing" when elapsed_ms is given.
Json to_json(const Report& report, std::optional<double> elapsed_ms);

/// Command-line entry point. Exit codes: 0 success, 1 input error,
/// 2 when --require-certified is given and the answer is not certified.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace ncres::cli
