#pragma once

#include <stdexcept>
#include <string>

namespace querysum {

// Error kinds map 1:1 onto CLI exit codes and C API return codes.
enum class ErrorKind { usage = 1, data = 2, runtime = 3 };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail_usage(const std::string& msg) { throw Error(ErrorKind::usage, msg); }
[[noreturn]] inline void fail_data(const std::string& msg) { throw Error(ErrorKind::data, msg); }
[[noreturn]] inline void fail_runtime(const std::string& msg) { throw Error(ErrorKind::runtime, msg); }

}  // namespace querysum
