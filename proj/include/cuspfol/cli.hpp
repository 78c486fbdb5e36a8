#pragma once

#include <string>
#include <vector>

namespace cuspfol::cli {

enum ExitCode { Success = 0, Negative = 1, Inconclusive = 2, InputError = 3 };

struct Result {
    int exit_code = Success;
    std::string json;  // one object {command, order, verdict, data, certificates}
    std::string text;  // human-readable report
};

// args without the program name, e.g. {"reduce", "mero: (y^2+x^3)/(x*y)", "--order", "12"}
Result run(const std::vector<std::string> &args);

}  // namespace cuspfol::cli
