#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sphavg {

struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

struct dimension_mismatch : error {
    explicit dimension_mismatch(const std::string& what) : error(what) {}
};

/// Grid spacing cannot resolve the requested feature scale.
struct resolution_error : error {
    explicit resolution_error(const std::string& what) : error(what) {}
};

struct parse_error : error {
    parse_error(const std::string& what, std::size_t position)
        : error(what + " (at position " + std::to_string(position) + ")"), position(position) {}
    std::size_t position;
};

}  // namespace sphavg
