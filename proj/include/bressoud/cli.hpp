#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bressoud {

/* Runs one CLI invocation. args excludes the program name. Exit codes:
 * 0 = success / all identities pass, 1 = verification failure (witnesses
 * are printed), 2 = invalid input or parameters. */
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace bressoud
