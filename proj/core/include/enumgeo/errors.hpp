#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace enumgeo {

/// A computed value violated a structural guarantee (a count that must be
/// integral was not, an integrand that must be even was odd). Indicates a
/// formula or convention bug, never bad user input.
class ConsistencyError : public std::runtime_error {
public:
    explicit ConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

/// A cache file failed to parse. Carries the 1-based line number of the
/// offending record; nothing from the file is applied.
class CacheFormatError : public std::runtime_error {
public:
    CacheFormatError(std::size_t line, const std::string& what)
        : std::runtime_error("cache line " + std::to_string(line) + ": " + what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace enumgeo
