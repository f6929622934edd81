#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rigidtrace {

// Parses and executes one command-line invocation; args excludes the program
// name. Reports go to out, diagnostics to err. Exit code: 0 success, 1
// validation failure or negative verdict, 2 usage error or unreadable /
// ill-formed input. The RIGIDTRACE_CAP environment variable overrides the
// enumeration caps of the dual and sections verbs.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rigidtrace
