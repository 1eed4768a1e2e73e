#pragma once

#include <cstdint>
#include <string>

#include "ara/error.hpp"

namespace ara {

// Coefficient field selector: the rationals (characteristic 0) or a prime
// field F_p.  Construction always happens over Q; prime fields exist so
// verification verdicts can be re-checked for characteristic dependence.
class FieldSpec {
public:
    FieldSpec() = default; // rationals

    static FieldSpec rationals() { return FieldSpec{}; }
    static FieldSpec prime(std::uint64_t p);

    bool is_rationals() const { return p_ == 0; }
    std::uint64_t characteristic() const { return p_; }

    std::string str() const { return p_ == 0 ? "q" : "fp:" + std::to_string(p_); }
    static FieldSpec parse(const std::string& text);

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

private:
    std::uint64_t p_ = 0;
};

} // namespace ara
