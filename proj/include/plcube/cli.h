#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "plcube/json_io.h"

namespace plcube {

struct CommandResult {
  int status = 0;  // 0 success, 1 property violation, 2 usage or input error
  json payload;
  std::string summary;
};

// args excludes the program name. Maps given as "-" are read from `in`.
CommandResult run(const std::vector<std::string>& args, std::istream& in);

}  // namespace plcube
