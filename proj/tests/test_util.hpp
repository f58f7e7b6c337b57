#pragma once

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>

#include "rotn/linalg.hpp"

namespace testutil {

struct CmdResult {
  int exit_code;
  std::string output;  // stdout and stderr combined
};

// Runs a shell command, capturing stdout+stderr and the exit code.
inline CmdResult run_cmd(const std::string& cmd) {
  const std::string full = cmd + " 2>&1";
  FILE* pipe = popen(full.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed for: " + cmd);
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, out};
}

inline std::string cli_path() { return ROTN_CLI_PATH; }
inline std::string golden_dir() { return ROTN_GOLDEN_DIR; }

// Per-process scratch directory for files the tests generate.
inline std::string temp_dir() {
  static const std::string dir = [] {
    const std::string d =
        "/tmp/rotn_tests_" + std::to_string(static_cast<long>(getpid()));
    std::filesystem::create_directories(d);
    return d;
  }();
  return dir;
}

inline std::string write_temp_file(const std::string& name,
                                   const std::string& content) {
  const std::string path = temp_dir() + "/" + name;
  std::ofstream out(path, std::ios::binary);
  out << content;
  if (!out) throw std::runtime_error("cannot write " + path);
  return path;
}

// Quotes a path for the shell.
inline std::string q(const std::string& s) { return "'" + s + "'"; }

// |a - b| <= tol * max(1, |a|, |b|) applied entrywise.
inline bool matrices_close(const rotn::Matrix& a, const rotn::Matrix& b,
                           double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (!rotn::approx_equal(a(i, j), b(i, j), tol)) return false;
  return true;
}

inline bool vectors_close(const rotn::Vector& a, const rotn::Vector& b,
                          double tol) {
  if (a.dim() != b.dim()) return false;
  for (int i = 0; i < a.dim(); ++i)
    if (!rotn::approx_equal(a[i], b[i], tol)) return false;
  return true;
}

}  // namespace testutil
