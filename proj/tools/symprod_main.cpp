#include "symprod/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    const symprod::CommandResult res = symprod::run(args);
    if (res.json_output)
        std::cout << res.to_json().dump(2) << "\n";
    else
        std::cout << res.render_human() << "\n";
    return res.exit_code;
}
