#pragma once

#include <stdexcept>
#include <string>

namespace ealkit {

// Base class for all errors raised by the library. Concrete error types live
// next to the operations that raise them and carry structured context.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ealkit
