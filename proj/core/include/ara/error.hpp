#pragma once

#include <stdexcept>
#include <string>

namespace ara {

// All precondition violations and parse failures surface as ara::Error.
// Verification *outcomes* (refuted, inconclusive) are report data, not errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ara
