#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace wheelramsey::app {

// Process exit codes shared by the CLI and the pipeline runner.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;  // a witness was found
inline constexpr int kExitUsage = 2;               // bad arguments, config or input
inline constexpr int kExitIntegrity = 3;           // hash mismatch on a stored artifact

// Error with a machine-readable code, reported as "ERROR: <code> <message>".
class AppError : public std::runtime_error {
 public:
  AppError(std::string code, int exit_code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)), exit_code_(exit_code) {}

  const std::string& code() const { return code_; }
  int exit_code() const { return exit_code_; }

 private:
  std::string code_;
  int exit_code_;
};

inline AppError hash_mismatch(const std::string& message) { return {"HASH_MISMATCH", kExitIntegrity, message}; }
inline AppError config_error(const std::string& message) { return {"BAD_CONFIG", kExitUsage, message}; }
inline AppError missing_input(const std::string& message) { return {"MISSING_INPUT", kExitUsage, message}; }
inline AppError unknown_id(const std::string& message) { return {"UNKNOWN_ID", kExitUsage, message}; }

}  // namespace wheelramsey::app
