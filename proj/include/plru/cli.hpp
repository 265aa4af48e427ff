#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace plru::cli {

enum ExitCode : int {
  ok = 0,
  not_witnessed = 1,
  query_error = 2,
  invalid_params = 3,
  usage = 64,
  no_input = 66,
  cant_create = 73,
};

/// Entry point shared by the executable and the tests. `args` includes the
/// program name at index 0.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace plru::cli
