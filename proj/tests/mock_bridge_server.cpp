// Line-protocol encoder server on stdin/stdout for the bridge tests.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "mock_bridge.hpp"

int main(int argc, char** argv) {
  mock::Options opts;
  std::size_t announce = 0;
  CLI::App app{"mock bridge server"};
  app.add_option("--mode", opts.mode)->check(CLI::IsMember({"normal", "hang", "garbage", "fail", "short"}));
  app.add_option("--announce-max-len", announce, "max_len reported by meta (0: the real one)");
  app.add_option("--vocab", opts.vocab);
  app.add_option("--dim", opts.dim);
  app.add_option("--max-len", opts.max_len);
  app.add_option("--seed", opts.seed);
  CLI11_PARSE(app, argc, argv);
  if (announce > 0) opts.announce_max_len = announce;

  const mock::Handler handler(opts);
  std::string line;
  while (std::getline(std::cin, line)) {
    const auto resp = handler.handle(line);
    if (!resp) continue;
    std::cout << *resp << '\n' << std::flush;
  }
  return 0;
}
