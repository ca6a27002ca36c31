#ifndef KEMPE_CLI_HPP
#define KEMPE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace kempe {

// Exit codes: 0 ok, 1 proved-theorem failure, 2 usage error, 3 capacity hit
// (partial report printed).
inline constexpr int kExitOk = 0;
inline constexpr int kExitClaimFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCapacity = 3;

// The whole CLI behind a testable entry point; `args` excludes argv[0].
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace kempe

#endif
