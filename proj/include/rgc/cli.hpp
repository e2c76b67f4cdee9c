#ifndef RGC_CLI_HPP
#define RGC_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace rgc {

// The rgc command line, callable in-process. Exit codes: 0 positive verdict
// or success, 1 negative verdict, 2 usage/format error, 3 bound-exhausted
// UNKNOWN.
int run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err);

}

#endif
