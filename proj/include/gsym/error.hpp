/**
 * @file error.hpp
 * @brief Named error type shared by every module.
 *
 * Each failure carries a stable kebab-case name (for example
 * "not-self-injective") that the command-line front end prints verbatim
 * and maps onto exit codes.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace gsym {

/** @brief Error with a stable machine-readable name and a human message. */
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& message)
      : std::runtime_error(name + ": " + message), name_(std::move(name)) {}

  /** @brief Stable identifier such as "bad-character". */
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

/** @brief Throws an Error unless @p cond holds. */
inline void require(bool cond, const char* name, const std::string& message) {
  if (!cond) throw Error(name, message);
}

}  // namespace gsym
