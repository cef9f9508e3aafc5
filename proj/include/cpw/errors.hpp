#pragma once

#include <stdexcept>
#include <string>

namespace cpw {

// Malformed input text (edge lists, graph6, certificate JSON).
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& msg, int line = -1)
        : std::runtime_error(line >= 0 ? "parse error (line " + std::to_string(line) + "): " + msg
                                       : "parse error: " + msg),
          line(line) {}
    int line;
};

// A documented precondition of an operation does not hold.
struct precondition_error : std::runtime_error {
    explicit precondition_error(const std::string& msg)
        : std::runtime_error("precondition violated: " + msg) {}
};

// Instance exceeds an oracle or generator resource ceiling.
struct budget_error : std::runtime_error {
    explicit budget_error(const std::string& msg)
        : std::runtime_error("budget exceeded: " + msg) {}
};

// A certificate failed validation or a proof-derived inequality failed at
// runtime. Always carries a diagnostic trace; never ignored.
struct verification_error : std::runtime_error {
    explicit verification_error(const std::string& msg)
        : std::runtime_error("verification failed: " + msg) {}
};

}  // namespace cpw
