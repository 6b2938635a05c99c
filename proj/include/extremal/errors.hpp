#pragma once

#include <stdexcept>
#include <string>

namespace extremal {

// Bad user-facing input (malformed files, out-of-range vertices,
// disconnected graphs fed to connectivity-requiring operations).
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A caller broke an API contract (precondition documented on the
// operation). These are programming errors, not data errors.
class contract_error : public std::logic_error {
public:
    explicit contract_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace extremal
