#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vecchoose::cli
{
    enum ExitCode
    {
        success = 0,
        refuted = 1,
        usage = 2,
        budget = 3
    };

    /// Runs one command line; args excludes the program name.
    auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;
}
