#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace permkit {

/// Base class for every error reported by this library.
class PermError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A cycle mentions the same point twice.
class MalformedCycle : public PermError {
public:
    using PermError::PermError;
};

/// An array form contains duplicates or out-of-range entries.
class NotABijection : public PermError {
public:
    using PermError::PermError;
};

/// A requested size does not cover every moved point.
class SizeTooSmall : public PermError {
public:
    using PermError::PermError;
};

/// A rank lies outside [0, size!).
class RankOutOfRange : public PermError {
public:
    using PermError::PermError;
};

/// Generator closure would exceed the configured group size limit.
class GroupTooLarge : public PermError {
public:
    GroupTooLarge(std::size_t attained, std::size_t limit)
        : PermError("group closure exceeded the maximum order (limit " + std::to_string(limit) +
                    ", reached " + std::to_string(attained) + " elements)"),
          attained_(attained),
          limit_(limit) {}

    std::size_t attained_order() const { return attained_; }
    std::size_t limit() const { return limit_; }

private:
    std::size_t attained_;
    std::size_t limit_;
};

/// Cycle text that does not match the grammar; carries the byte offset.
class ParseError : public PermError {
public:
    ParseError(const std::string& what, std::size_t position)
        : PermError(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

}  // namespace permkit
