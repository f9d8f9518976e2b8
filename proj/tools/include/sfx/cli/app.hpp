#ifndef SFX_CLI_APP_HPP
#define SFX_CLI_APP_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace sfx::cli {

enum ExitCode : int { kPass = 0, kValidationFailure = 1, kUsage = 2, kParseFailure = 3 };

struct Environment {
    bool color = false;
};

// Color unless SFX_COLOR=0; unset means "only on a terminal".
Environment environment_from_process();

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Environment& env = {});

}  // namespace sfx::cli

#endif
