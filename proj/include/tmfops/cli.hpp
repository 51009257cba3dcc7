#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace tmfops {

// Command-line front end.  Subcommands: homotopy, qexp, pairing, dualize,
// verify.  Returns 0 when no check FAILed, 1 on any FAIL, 2 on flag errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out = std::cout,
            std::ostream& err = std::cerr);

} // namespace tmfops
