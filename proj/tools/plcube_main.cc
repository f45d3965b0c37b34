#include <iostream>

#include "plcube/cli.h"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const auto r = plcube::run(args, std::cin);
  if (!r.payload.is_null() && !(r.payload.is_object() && r.payload.empty())) std::cout << r.payload.dump(2) << '\n';
  if (!r.summary.empty()) std::cerr << r.summary << (r.summary.back() == '\n' ? "" : "\n");
  return r.status;
}
