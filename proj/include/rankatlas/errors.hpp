// Error taxonomy shared across the library. Each type maps to one CLI exit code:
// usage_error -> 2, capacity_error -> 3, io_error -> 4 (domain_error and
// not_found_error are reported as usage problems, exit code 2).
#pragma once

#include <stdexcept>
#include <string>

namespace rankatlas {

// Input outside an operation's documented domain (bad node index, wrong vector length, ...).
using domain_error = std::domain_error;

// Full-enumeration request beyond the configured dimension cap.
struct capacity_error : std::runtime_error {
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

// File read/write/parse failure.
struct io_error : std::runtime_error {
    explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

// A lookup key (class id, dimension) absent from its container.
struct not_found_error : std::runtime_error {
    explicit not_found_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed command-line input.
struct usage_error : std::runtime_error {
    explicit usage_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rankatlas
