#pragma once

namespace labcli {

// Entry point of the command line tool. Exit codes: 0 all checks pass,
// 1 any FAIL, 2 configuration or usage error.
int run_app(int argc, char** argv);

}  // namespace labcli
