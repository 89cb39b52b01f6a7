#include "cli.hpp"

#include "contractad/graphic_function.hpp"

#include <cstdlib>
#include <iostream>
#include <string>

int main(int argc, char** argv) {
  using namespace contractad;
  if (const char* limit = std::getenv(cli::kMemoLimitEnv)) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(limit, &used);
      if (used != std::string(limit).size()) throw std::invalid_argument(limit);
      set_memo_limit(static_cast<std::size_t>(v));
    } catch (const std::exception&) {
      std::cerr << "error: " << cli::kMemoLimitEnv << " must be a non-negative integer\n";
      return cli::kUsageError;
    }
  }
  std::vector<std::string> args(argv + 1, argv + argc);
  return cli::run(args, std::cout, std::cerr);
}
