#ifndef BOSC_ERROR_HPP
#define BOSC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace bosc {

enum class ErrorCode {
  EmptyClass,
  Infeasible,
  UnknownNode,
  NotBatteryHosted,
  Unavailable,
  InstanceTooLarge,
  InvalidConfig,
  EmptySet,
  ParseError,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyClass: return "EMPTY_CLASS";
    case ErrorCode::Infeasible: return "INFEASIBLE";
    case ErrorCode::UnknownNode: return "UNKNOWN_NODE";
    case ErrorCode::NotBatteryHosted: return "NOT_BATTERY_HOSTED";
    case ErrorCode::Unavailable: return "UNAVAILABLE";
    case ErrorCode::InstanceTooLarge: return "INSTANCE_TOO_LARGE";
    case ErrorCode::InvalidConfig: return "INVALID_CONFIG";
    case ErrorCode::EmptySet: return "EMPTY_SET";
    case ErrorCode::ParseError: return "PARSE_ERROR";
  }
  return "UNKNOWN";
}

}  // namespace bosc

#endif  // BOSC_ERROR_HPP
