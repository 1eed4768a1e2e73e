#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ara/monomial.hpp"

namespace ara {

enum class OrderKind { degrevlex, lex, deglex };

// A monomial order compatible with multiplication and with 1 minimal.
// Variable significance defaults to ascending index (x0 < x1 < ...); an
// explicit rank table may reorder the significance of the first k variables.
// Indices beyond the table rank above everything in it, so freshly appended
// slack variables always carry the highest priority.
class TermOrder {
public:
    TermOrder() : TermOrder(OrderKind::degrevlex) {}
    explicit TermOrder(OrderKind kind, std::vector<std::uint32_t> ranks = {});

    static TermOrder degrevlex() { return TermOrder(OrderKind::degrevlex); }
    static TermOrder lex() { return TermOrder(OrderKind::lex); }
    static TermOrder deglex() { return TermOrder(OrderKind::deglex); }
    // Ranks listed per variable index; higher rank = more significant.
    static TermOrder with_ranks(OrderKind kind, std::vector<std::uint32_t> ranks) {
        return TermOrder(kind, std::move(ranks));
    }

    OrderKind kind() const { return kind_; }
    std::string name() const;
    static TermOrder by_name(const std::string& name);

    int compare(const Monomial& a, const Monomial& b) const; // -1, 0, 1
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

    friend bool operator==(const TermOrder&, const TermOrder&) = default;

private:
    std::uint64_t rank_of(std::uint32_t index) const;

    OrderKind kind_;
    std::vector<std::uint32_t> ranks_; // empty = identity
};

} // namespace ara
