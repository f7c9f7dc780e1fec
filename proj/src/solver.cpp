#include "plift/solver.hpp"

#include <cerrno>
#include <csignal>
#include <cstdlib>
#include <cctype>
#include <cstring>
#include <set>

#include <fcntl.h>
#include <poll.h>
#include <sys/wait.h>
#include <unistd.h>

#ifndef PLIFT_DEFAULT_SOLVER
#define PLIFT_DEFAULT_SOLVER "z3"
#endif

namespace plift {

std::string default_solver_command() {
  if (const char* env = std::getenv("PLIFT_SOLVER"); env != nullptr && *env != '\0')
    return env;
  return std::string(PLIFT_DEFAULT_SOLVER) + " -in";
}

namespace {

[[noreturn]] void process_error(const std::string& what) {
  throw Error(ErrorKind::SolverProcessError, what + ": " + std::strerror(errno));
}

struct Pipe {
  int fd[2] = {-1, -1};
  Pipe() {
    if (::pipe2(fd, O_CLOEXEC) != 0) process_error("pipe");
  }
  ~Pipe() {
    close_read();
    close_write();
  }
  void close_read() {
    if (fd[0] >= 0) ::close(fd[0]);
    fd[0] = -1;
  }
  void close_write() {
    if (fd[1] >= 0) ::close(fd[1]);
    fd[1] = -1;
  }
};

// First status token on its own, skipping anything else the solver prints.
SolverStatus scan_status(const std::string& out, std::size_t& where) {
  std::size_t pos = 0;
  while (pos < out.size()) {
    std::size_t end = out.find('\n', pos);
    if (end == std::string::npos) end = out.size();
    std::string line = out.substr(pos, end - pos);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    where = pos;
    if (line == "sat") return SolverStatus::Sat;
    if (line == "unsat") return SolverStatus::Unsat;
    if (line == "unknown") return SolverStatus::Unknown;
    if (line.rfind("(error", 0) == 0)
      throw Error(ErrorKind::SolverParseError, "solver reported " + line);
    pos = end + 1;
  }
  where = std::string::npos;
  return SolverStatus::Unknown;
}

}  // namespace

SolverResult run_solver(const std::string& script, const SolverOptions& options) {
  const std::string command =
      options.command.empty() ? default_solver_command() : options.command;
  const auto start = std::chrono::steady_clock::now();

  Pipe in, out, err;
  pid_t pid = ::fork();
  if (pid < 0) process_error("fork");
  if (pid == 0) {
    ::setpgid(0, 0);
    ::dup2(in.fd[0], STDIN_FILENO);
    ::dup2(out.fd[1], STDOUT_FILENO);
    ::dup2(err.fd[1], STDERR_FILENO);
    ::execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
    ::_exit(127);
  }
  ::setpgid(pid, pid);
  in.close_read();
  out.close_write();
  err.close_write();

  std::signal(SIGPIPE, SIG_IGN);
  ::fcntl(in.fd[1], F_SETFL, O_NONBLOCK);

  SolverResult result;
  std::size_t written = 0;
  bool timed_out = false;
  const auto deadline = start + options.timeout;
  char buffer[65536];

  while (out.fd[0] >= 0 || err.fd[0] >= 0) {
    pollfd fds[3];
    int n = 0;
    int in_slot = -1, out_slot = -1, err_slot = -1;
    if (in.fd[1] >= 0) {
      fds[n] = {in.fd[1], POLLOUT, 0};
      in_slot = n++;
    }
    if (out.fd[0] >= 0) {
      fds[n] = {out.fd[0], POLLIN, 0};
      out_slot = n++;
    }
    if (err.fd[0] >= 0) {
      fds[n] = {err.fd[0], POLLIN, 0};
      err_slot = n++;
    }
    auto left = std::chrono::duration_cast<std::chrono::milliseconds>(
        deadline - std::chrono::steady_clock::now());
    if (left.count() <= 0) {
      timed_out = true;
      break;
    }
    int ready = ::poll(fds, static_cast<nfds_t>(n), static_cast<int>(left.count()));
    if (ready < 0) {
      if (errno == EINTR) continue;
      process_error("poll");
    }
    if (in_slot >= 0 && fds[in_slot].revents != 0) {
      ssize_t k = ::write(in.fd[1], script.data() + written, script.size() - written);
      if (k > 0) written += static_cast<std::size_t>(k);
      if (k < 0 && errno != EAGAIN && errno != EINTR) written = script.size();
      if (written == script.size()) in.close_write();
    }
    auto drain = [&](int slot, Pipe& p, std::string& sink) {
      if (slot < 0 || fds[slot].revents == 0) return;
      ssize_t k = ::read(p.fd[0], buffer, sizeof buffer);
      if (k > 0)
        sink.append(buffer, static_cast<std::size_t>(k));
      else if (k == 0 || (errno != EAGAIN && errno != EINTR))
        p.close_read();
    };
    drain(out_slot, out, result.output);
    drain(err_slot, err, result.errors);
  }

  int status = 0;
  if (timed_out) {
    ::kill(-pid, SIGKILL);
    ::waitpid(pid, &status, 0);
    result.status = SolverStatus::Timeout;
    result.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    return result;
  }
  ::waitpid(pid, &status, 0);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : 128 + WTERMSIG(status);
  result.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);

  if (result.exit_code == 127 && result.output.empty())
    throw Error(ErrorKind::SolverProcessError,
                "cannot run solver '" + command + "': " + result.errors);
  std::size_t where = 0;
  result.status = scan_status(result.output, where);
  if (where == std::string::npos) {
    std::string detail = result.errors.empty() ? result.output : result.errors;
    throw Error(ErrorKind::SolverProcessError,
                "solver '" + command + "' exited with code " +
                    std::to_string(result.exit_code) + " without a status: " + detail);
  }
  return result;
}

// ---------------------------------------------------------------------------

namespace {

class SExprParser {
public:
  explicit SExprParser(const std::string& text) : text_(text) {}

  std::vector<SExpr> all() {
    std::vector<SExpr> out;
    for (skip(); pos_ < text_.size(); skip()) out.push_back(one());
    return out;
  }

private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::SolverParseError,
                "offset " + std::to_string(pos_) + ": " + what);
  }

  void skip() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  SExpr one() {
    SExpr e;
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      e.is_list = true;
      for (skip(); pos_ < text_.size() && text_[pos_] != ')'; skip()) e.items.push_back(one());
      if (pos_ >= text_.size()) fail("unbalanced parenthesis");
      ++pos_;
      return e;
    }
    if (c == ')') fail("unexpected ')'");
    std::size_t begin = pos_;
    if (c == '"') {
      for (++pos_;; ++pos_) {
        if (pos_ >= text_.size()) fail("unterminated string");
        if (text_[pos_] == '"') {
          if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '"') {
            ++pos_;
            continue;
          }
          ++pos_;
          break;
        }
      }
    } else if (c == '|') {
      pos_ = text_.find('|', pos_ + 1);
      if (pos_ == std::string::npos) fail("unterminated quoted symbol");
      ++pos_;
    } else {
      while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
             text_[pos_] != '(' && text_[pos_] != ')')
        ++pos_;
    }
    e.atom = text_.substr(begin, pos_ - begin);
    return e;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

std::string unquote(std::string symbol) {
  if (symbol.size() >= 2 && symbol.front() == '|' && symbol.back() == '|')
    return symbol.substr(1, symbol.size() - 2);
  return symbol;
}

}  // namespace

std::vector<SExpr> parse_sexprs(const std::string& text) { return SExprParser(text).all(); }

Configuration decode_model(const std::string& solver_output, const FeatureModel& fm) {
  std::size_t where = 0;
  if (scan_status(solver_output, where) != SolverStatus::Sat)
    throw Error(ErrorKind::DecodeError, "solver output is not a sat response");
  std::size_t body = solver_output.find('\n', where);
  auto exprs = parse_sexprs(body == std::string::npos ? "" : solver_output.substr(body));

  const std::set<std::string> features(fm.features.begin(), fm.features.end());
  Assignment assignment;
  for (const auto& f : fm.features) assignment[f] = false;

  auto visit_define = [&](const SExpr& d) {
    if (!d.is_list || d.items.size() != 5 || d.items[0].atom != "define-fun") return;
    std::string name = unquote(d.items[1].atom);
    if (features.count(name) == 0) return;
    if (!d.items[2].is_list || !d.items[2].items.empty()) return;
    if (d.items[3].atom != "Bool")
      throw Error(ErrorKind::DecodeError, "feature " + name + " is not Bool in the model");
    const std::string& v = d.items[4].atom;
    if (v == "true")
      assignment[name] = true;
    else if (v == "false")
      assignment[name] = false;
    else
      throw Error(ErrorKind::DecodeError, "unreadable value for feature " + name);
  };
  for (const auto& e : exprs) {
    if (!e.is_list) continue;
    // z3 prints "(model ...)" in older versions and a bare list in newer.
    std::size_t first = !e.items.empty() && e.items[0].atom == "model" ? 1 : 0;
    for (std::size_t i = first; i < e.items.size(); ++i) visit_define(e.items[i]);
    visit_define(e);
  }
  return make_configuration(fm, assignment);
}

}  // namespace plift
