#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qbox/deriver.hpp"

namespace qbox::cli {

enum ExitCode : int { kOk = 0, kFailed = 1, kUsage = 2 };

/// Runs one command line (args[0] is the program name). Results go to `out`,
/// diagnostics to `err`; `in` backs `--table -`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

/// ClosedFormTable <-> JSON array of
/// {"kind", "p", "coefficient", "pi_power", "decimal", "relation_derived"}.
std::string table_to_json(const ClosedFormTable& table);
ClosedFormTable table_from_json(const std::string& text);

}  // namespace qbox::cli
