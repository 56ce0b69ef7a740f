#pragma once

#include <stdexcept>
#include <string>

namespace qgan {

// All-zero input where a nonzero norm is required (mu = 0).
class degenerate_input_error : public std::runtime_error {
public:
    explicit degenerate_input_error(const std::string& what)
        : std::runtime_error(what) {}
};

// More data values than the register can hold (length > 2^n).
class capacity_error : public std::runtime_error {
public:
    explicit capacity_error(const std::string& what)
        : std::runtime_error(what) {}
};

// Experiment configuration that cannot produce a runnable setup.
class configuration_error : public std::runtime_error {
public:
    explicit configuration_error(const std::string& what)
        : std::runtime_error(what) {}
};

// Gradient method not applicable to the given parameter family.
class unsupported_method_error : public std::runtime_error {
public:
    explicit unsupported_method_error(const std::string& what)
        : std::runtime_error(what) {}
};

} // namespace qgan
