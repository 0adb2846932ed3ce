#pragma once

#include "symprod/serialization.hpp"

#include <string>
#include <vector>

namespace symprod {

// Result of one CLI invocation.  Every command is a thin shim over a library
// call: `outputs` is exactly the serialization of that call's result, so
// printing it is byte-identical to serializing the library value directly.
// Exit codes: 0 success, 1 internal error, 2 usage error, 3 domain error
// (precondition violation), 4 resource guard.
struct CommandResult {
    std::string command;
    Json inputs = Json::object();
    Json outputs = Json::object();
    int exit_code = 0;
    std::string error_code;  // empty on success
    std::string error_message;
    bool json_output = false;

    Json to_json() const;
    std::string render_human() const;
};

CommandResult run(const std::vector<std::string>& args);

}  // namespace symprod
