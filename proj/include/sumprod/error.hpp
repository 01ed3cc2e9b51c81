#pragma once

#include <stdexcept>
#include <string>

namespace sumprod {

// Error taxonomy mirrored by the CLI exit codes:
//   parse        -> exit 2 (malformed input, bad flags)
//   precondition -> exit 3 (violated mathematical precondition, e.g. 0 in a
//                   multiplicative input)
//   budget       -> exit 3 (configured size/cost budget exceeded)
//   internal     -> exit 4 (should not happen)
enum class errc { parse, precondition, budget, internal };

class error : public std::runtime_error {
public:
  error(errc kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  errc kind() const noexcept { return kind_; }

private:
  errc kind_;
};

[[noreturn]] inline void throw_parse(const std::string& msg) { throw error(errc::parse, msg); }
[[noreturn]] inline void throw_precondition(const std::string& msg) {
  throw error(errc::precondition, msg);
}
[[noreturn]] inline void throw_budget(const std::string& msg) { throw error(errc::budget, msg); }
[[noreturn]] inline void throw_internal(const std::string& msg) { throw error(errc::internal, msg); }

} // namespace sumprod
