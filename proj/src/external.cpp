#include <fcntl.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "gsa/errors.hpp"
#include "gsa/model.hpp"

namespace gsa {

ExternalModel::ExternalModel(std::string command, std::vector<std::string> args,
                             std::size_t arity)
    : command_(std::move(command)), args_(std::move(args)), arity_(arity) {
  if (command_.empty()) throw ConfigError("external model: empty command");
  if (arity_ == 0) throw ConfigError("external model: arity must be >= 1");
}

namespace {

struct Pipe {
  int fds[2] = {-1, -1};
  Pipe() {
    if (pipe(fds) != 0) throw EvaluationError("external model: pipe() failed");
  }
  ~Pipe() {
    if (fds[0] >= 0) close(fds[0]);
    if (fds[1] >= 0) close(fds[1]);
  }
  int take_read() {
    int fd = fds[0];
    fds[0] = -1;
    return fd;
  }
  int take_write() {
    int fd = fds[1];
    fds[1] = -1;
    return fd;
  }
};

void write_all(int fd, const std::string& s) {
  std::size_t off = 0;
  while (off < s.size()) {
    ssize_t n = write(fd, s.data() + off, s.size() - off);
    if (n < 0) {
      if (errno == EINTR) continue;
      throw EvaluationError("external model: writing to child stdin failed");
    }
    off += static_cast<std::size_t>(n);
  }
}

}  // namespace

void ExternalModel::evaluate_rows(const Matrix& X, std::span<double> out) const {
  Pipe to_child, from_child;

  pid_t pid = fork();
  if (pid < 0) throw EvaluationError("external model: fork() failed");
  if (pid == 0) {
    // Child: wire pipes to stdio and exec.
    dup2(to_child.fds[0], STDIN_FILENO);
    dup2(from_child.fds[1], STDOUT_FILENO);
    close(to_child.fds[0]);
    close(to_child.fds[1]);
    close(from_child.fds[0]);
    close(from_child.fds[1]);
    std::vector<char*> argv;
    argv.push_back(const_cast<char*>(command_.c_str()));
    for (const auto& a : args_) argv.push_back(const_cast<char*>(a.c_str()));
    argv.push_back(nullptr);
    execvp(command_.c_str(), argv.data());
    _exit(127);
  }

  int in_fd = to_child.take_write();
  close(to_child.fds[0]);
  to_child.fds[0] = -1;
  int out_fd = from_child.take_read();
  close(from_child.fds[1]);
  from_child.fds[1] = -1;

  std::size_t n = X.rows(), p = X.cols();
  std::string payload;
  payload.reserve(32 + n * p * 26);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%zu,%zu\n", p, n);
  payload += buf;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < p; ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", X(i, j));
      payload += buf;
      payload += (j + 1 < p) ? ',' : '\n';
    }
  }

  // A streaming child can fill its stdout pipe while we are still writing
  // its stdin; feed stdin from a separate thread so both sides drain.
  static std::once_flag sigpipe_once;
  std::call_once(sigpipe_once, [] { signal(SIGPIPE, SIG_IGN); });

  std::string err;
  long bad_row = -1;
  std::string write_err;
  std::thread writer([&] {
    try {
      write_all(in_fd, payload);
    } catch (const EvaluationError& e) {
      write_err = e.what();
    }
    close(in_fd);
  });

  // Read everything the child produces, then parse line by line.
  std::string response;
  char rbuf[4096];
  for (;;) {
    ssize_t got = read(out_fd, rbuf, sizeof rbuf);
    if (got < 0) {
      if (errno == EINTR) continue;
      if (err.empty()) err = "external model: reading child stdout failed";
      break;
    }
    if (got == 0) break;
    response.append(rbuf, static_cast<std::size_t>(got));
  }
  close(out_fd);
  writer.join();

  int status = 0;
  while (waitpid(pid, &status, 0) < 0 && errno == EINTR) {
  }
  bool clean_exit = WIFEXITED(status) && WEXITSTATUS(status) == 0;
  if (!clean_exit) {
    err = "external model '" + command_ + "' exited with status " +
          std::to_string(WIFEXITED(status) ? WEXITSTATUS(status) : -1);
  } else if (err.empty() && !write_err.empty()) {
    err = write_err;
  }

  if (err.empty()) {
    std::size_t pos = 0, row = 0;
    while (row < n) {
      std::size_t nl = response.find('\n', pos);
      std::string line = nl == std::string::npos ? response.substr(pos)
                                                 : response.substr(pos, nl - pos);
      if (line.empty() && nl == std::string::npos) {
        err = "external model: expected " + std::to_string(n) +
              " output lines, got " + std::to_string(row);
        bad_row = static_cast<long>(row);
        break;
      }
      char* endp = nullptr;
      double v = std::strtod(line.c_str(), &endp);
      while (endp && (*endp == ' ' || *endp == '\r' || *endp == '\t')) ++endp;
      if (endp == line.c_str() || (endp && *endp != '\0')) {
        err = "external model: malformed output line " + std::to_string(row + 1) +
              ": '" + line + "'";
        bad_row = static_cast<long>(row);
        break;
      }
      if (std::isnan(v)) {
        err = "external model: NaN output at row " + std::to_string(row + 1);
        bad_row = static_cast<long>(row);
        break;
      }
      out[row] = v;
      ++row;
      pos = nl == std::string::npos ? response.size() : nl + 1;
    }
  }

  if (!err.empty()) throw EvaluationError(err, bad_row);
}

}  // namespace gsa
