#pragma once

#include <stdexcept>
#include <string>

namespace catpart {

enum class Errc {
  invalid_argument,  // precondition violated or unparseable input
  domain,            // input outside the domain of a bijection / family
  cap_exceeded,      // enumeration would exceed the configured cap
  internal,          // a claimed invariant failed at runtime
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

inline Error invalid_argument(const std::string& what) { return {Errc::invalid_argument, what}; }
inline Error domain_error(const std::string& what) { return {Errc::domain, what}; }
inline Error cap_exceeded(const std::string& what) { return {Errc::cap_exceeded, what}; }
inline Error internal_error(const std::string& what) { return {Errc::internal, what}; }

}  // namespace catpart
