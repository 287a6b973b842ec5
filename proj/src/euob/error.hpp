#pragma once

#include <stdexcept>
#include <string>

namespace euob {

// Status codes shared by the C API and the CLI exit codes.
enum class Status : int {
    Ok = 0,
    Internal = 1,
    Schema = 2,
    Resource = 3,
    Seed = 4,
    Validation = 5,
};

class Error : public std::runtime_error {
public:
    Error(Status s, std::string msg) : std::runtime_error(std::move(msg)), status_(s) {}
    Status status() const { return status_; }

private:
    Status status_;
};

[[noreturn]] inline void throw_schema(const std::string& msg) { throw Error(Status::Schema, msg); }
[[noreturn]] inline void throw_resource(const std::string& msg) { throw Error(Status::Resource, msg); }
[[noreturn]] inline void throw_seed(const std::string& msg) { throw Error(Status::Seed, msg); }
[[noreturn]] inline void throw_validation(const std::string& msg) { throw Error(Status::Validation, msg); }
[[noreturn]] inline void throw_internal(const std::string& msg) { throw Error(Status::Internal, msg); }

}  // namespace euob
