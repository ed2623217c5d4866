#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hopf2x/bundle.hpp"

namespace hopf2x {

// Bad command line or a command applied to the wrong kind of entry.
class UsageError : public Error {
public:
    using Error::Error;
};

struct CommandOptions {
    std::optional<std::string> name;
    int level = 1;
    MooreMode mode = MooreMode::both;
    std::size_t n = 2;        // peiffer
    std::size_t k = 2;        // decompose
    bool closed_forms = false;
    bool precrossed = false;  // check-xmod
    Field field;              // linearize
};

struct CommandResult {
    Report report;
    // Constructive commands return what they built as a one-entry bundle
    // (plus hoisted sub-objects on emission).
    std::optional<Bundle> built;
};

const std::vector<std::string_view>& command_names();

// Load-time validator failures of every entry the target references are
// prepended as "load/<entry>/<id>" records.
CommandResult run_command(std::string_view cmd, const Bundle& bundle, const CommandOptions& opts);

}  // namespace hopf2x
