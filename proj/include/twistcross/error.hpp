#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace twistcross {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input (degree mismatch, bad tuple, bad JSON).
class InputError : public Error {
 public:
  using Error::Error;
};

// A bounded enumeration hit its cap.
class LimitError : public Error {
 public:
  LimitError(std::string const& what, std::size_t found)
      : Error(what), found_(found) {}

  std::size_t found() const noexcept { return found_; }

 private:
  std::size_t found_;
};

// A structural requirement failed; `clause` names the violated condition.
class ConstructionError : public Error {
 public:
  ConstructionError(std::string clause, std::string const& what)
      : Error(clause + ": " + what), clause_(std::move(clause)) {}

  std::string const& clause() const noexcept { return clause_; }

 private:
  std::string clause_;
};

}  // namespace twistcross
