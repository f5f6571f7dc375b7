#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

// Helpers for driving the command line binary from tests. The binary path
// and golden directory come from compile definitions set by CMake.
namespace cli {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

inline std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void spit(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

inline RunResult run(const std::string& args) {
  namespace fs = std::filesystem;
  static int counter = 0;
  fs::path dir = fs::temp_directory_path() / "spinideal-tests";
  fs::create_directories(dir);
  fs::path out_path = dir / ("out" + std::to_string(++counter) + ".txt");
  fs::path err_path = dir / ("err" + std::to_string(counter) + ".txt");

  std::string command = std::string("\"") + SPINIDEAL_CLI_PATH + "\" " + args + " > \"" +
                        out_path.string() + "\" 2> \"" + err_path.string() + "\"";
  int status = std::system(command.c_str());

  RunResult result;
#ifdef _WIN32
  result.exit_code = status;
#else
  result.exit_code = WEXITSTATUS(status);
#endif
  result.out = slurp(out_path);
  result.err = slurp(err_path);
  fs::remove(out_path);
  fs::remove(err_path);
  return result;
}

inline std::string golden(const std::string& name) {
  return slurp(std::filesystem::path(SPINIDEAL_GOLDEN_DIR) / name);
}

inline std::filesystem::path write_temp(const std::string& name, const std::string& content) {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "spinideal-tests";
  fs::create_directories(dir);
  fs::path p = dir / name;
  spit(p, content);
  return p;
}

}  // namespace cli
