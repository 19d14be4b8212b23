#ifndef NCWHEEL_CLI_RUNNER_HPP
#define NCWHEEL_CLI_RUNNER_HPP

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

// Spawns the installed CLI binary (path injected by the build) and captures
// exit code, stdout, and stderr.

namespace cliutil {

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

inline std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

inline CliResult run_cli(const std::string& args) {
  static int counter = 0;
  const std::string tag = std::to_string(getpid()) + "_" + std::to_string(counter++);
  const std::string out_path = "/tmp/ncwheel_cli_out_" + tag;
  const std::string err_path = "/tmp/ncwheel_cli_err_" + tag;
  const std::string cmd = std::string("\"") + NCWHEEL_CLI_PATH + "\" " + args + " > " +
                          out_path + " 2> " + err_path;
  const int rc = std::system(cmd.c_str());

  CliResult result;
  result.exit_code = (rc >= 0 && WIFEXITED(rc)) ? WEXITSTATUS(rc) : -1;
  result.out = slurp(out_path);
  result.err = slurp(err_path);
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  return result;
}

}  // namespace cliutil

#endif
