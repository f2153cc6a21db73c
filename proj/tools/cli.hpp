#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ctkit::cli {

// Dispatches one subcommand invocation. Success output goes to out, errors
// to err. Exit status: 0 on success/pass, 1 on mathematical failure
// (invalid table, failed expectation, inconsistent data), 2 on usage or
// I/O errors.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

// Resolves a table reference: an existing file path is used as-is;
// otherwise the name is looked up in <data_dir>/manifest.json. Returns
// nullopt when the reference cannot be resolved.
std::optional<std::string> resolve_table_path(
    const std::string& reference, const std::optional<std::string>& data_dir);

}  // namespace ctkit::cli
