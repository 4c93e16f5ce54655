#ifndef BELLCERT_CLI_HPP
#define BELLCERT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace bellcert::cli {

// Full command-line front end. `args` excludes the program name. All report
// and table output goes to `out` (or the --out file), diagnostics to `err`.
// Exit status: 0 success / clean validation, 1 validation findings,
// 2 unusable input (parse failures, bad flags, invalid states or POVMs).
// Never throws on malformed input.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

// main() adapter: skips argv[0] and wires std::cout / std::cerr.
int run(int argc, const char* const* argv);

} // namespace bellcert::cli

#endif
