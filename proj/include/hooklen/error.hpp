#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hooklen {

/// Raised when an operation is called outside its documented parameter range.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised by `decode` for malformed preorder codes.
class DecodeError : public std::runtime_error {
public:
    DecodeError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace hooklen
