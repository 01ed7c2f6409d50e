// Error taxonomy. The CLI maps these onto process exit codes: input errors to
// 3, budget errors to 2. internal_error marks a failed self-verification of a
// construction that was proved correct, i.e. an implementation bug.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "freicond/ints.hpp"

namespace freicond {

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class input_error : public error {
 public:
  explicit input_error(const std::string& msg) : error(msg), line_(0) {}
  input_error(const std::string& msg, std::uint64_t line)
      : error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  std::uint64_t line() const { return line_; }

 private:
  std::uint64_t line_;
};

class budget_error : public error {
 public:
  budget_error(const std::string& what_exceeded, const Int& requested,
               const Int& limit)
      : error("budget exceeded: " + what_exceeded + " needs " + requested.str() +
              ", limit " + limit.str()),
        requested_(requested),
        limit_(limit) {}
  const Int& requested() const { return requested_; }
  const Int& limit() const { return limit_; }

 private:
  Int requested_;
  Int limit_;
};

class internal_error : public error {
 public:
  using error::error;
};

// Enumeration and search limits. max_tuples guards every cartesian-power
// enumeration (the CLI's --budget flag sets it); the remaining knobs guard
// auxiliary searches and have fixed defaults documented in the README.
struct Budget {
  Int max_tuples = 100000000;        // evaluation tuples per enumeration
  Int max_box_cap = 10000000;        // residue-class scan iterations
  std::uint64_t max_lcm_bound = 10000;  // cap on (Lambda+1)^card for lcm[1..n]
  std::uint64_t prime_candidates = 1000000;
  unsigned window_doublings = 64;

  void charge_tuples(const Int& n, const char* what) const {
    if (n > max_tuples) throw budget_error(what, n, max_tuples);
  }
};

}  // namespace freicond
