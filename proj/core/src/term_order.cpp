#include "ara/term_order.hpp"

#include <algorithm>

namespace ara {

TermOrder::TermOrder(OrderKind kind, std::vector<std::uint32_t> ranks)
    : kind_(kind), ranks_(std::move(ranks)) {
    std::vector<std::uint32_t> sorted = ranks_;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] != i) throw Error("term order ranks must be a permutation of 0..k-1");
}

std::string TermOrder::name() const {
    switch (kind_) {
        case OrderKind::degrevlex: return "degrevlex";
        case OrderKind::lex: return "lex";
        case OrderKind::deglex: return "deglex";
    }
    return "?";
}

TermOrder TermOrder::by_name(const std::string& name) {
    if (name == "degrevlex") return degrevlex();
    if (name == "lex") return lex();
    if (name == "deglex") return deglex();
    throw Error("unknown term order '" + name + "'");
}

std::uint64_t TermOrder::rank_of(std::uint32_t index) const {
    if (index < ranks_.size()) return ranks_[index];
    return index; // beyond the table: rank = index, above all table ranks
}

namespace {

// Identity-rank fast paths: entries are already sorted by index = rank.
int compare_revlex_identity(const Monomial& a, const Monomial& b) {
    auto i = a.entries().begin();
    auto j = b.entries().begin();
    const auto ae = a.entries().end();
    const auto be = b.entries().end();
    while (i != ae || j != be) {
        if (j == be) return -1; // a has an extra exponent at the least rank left
        if (i == ae) return 1;
        if (i->first != j->first) return i->first < j->first ? -1 : 1;
        if (i->second != j->second) return i->second > j->second ? -1 : 1;
        ++i;
        ++j;
    }
    return 0;
}

int compare_lex_identity(const Monomial& a, const Monomial& b) {
    auto i = a.entries().rbegin();
    auto j = b.entries().rbegin();
    const auto ae = a.entries().rend();
    const auto be = b.entries().rend();
    while (i != ae || j != be) {
        if (j == be) return 1; // a has an extra exponent at the highest rank left
        if (i == ae) return -1;
        if (i->first != j->first) return i->first > j->first ? 1 : -1;
        if (i->second != j->second) return i->second > j->second ? 1 : -1;
        ++i;
        ++j;
    }
    return 0;
}

} // namespace

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
    if (kind_ != OrderKind::lex) {
        const std::uint64_t da = a.degree();
        const std::uint64_t db = b.degree();
        if (da != db) return da < db ? -1 : 1;
    }
    if (ranks_.empty())
        return kind_ == OrderKind::degrevlex ? compare_revlex_identity(a, b)
                                             : compare_lex_identity(a, b);
    if (a == b) return 0;

    // Exponents keyed by rank.
    auto ranked = [&](const Monomial& m) {
        std::vector<std::pair<std::uint64_t, std::uint64_t>> v;
        v.reserve(m.entries().size());
        for (const auto& [idx, exp] : m.entries()) v.push_back({rank_of(idx), exp});
        std::sort(v.begin(), v.end());
        return v;
    };
    const auto ra = ranked(a);
    const auto rb = ranked(b);

    if (kind_ == OrderKind::degrevlex) {
        // Walk from the least significant rank up; at the first difference the
        // *smaller* exponent belongs to the larger monomial.
        auto i = ra.begin();
        auto j = rb.begin();
        while (i != ra.end() || j != rb.end()) {
            if (j == rb.end()) return -1;                 // a has extra low-rank exponent
            if (i == ra.end()) return 1;
            if (i->first != j->first) return i->first < j->first ? -1 : 1;
            if (i->second != j->second) return i->second > j->second ? -1 : 1;
            ++i;
            ++j;
        }
        return 0;
    }

    // lex / deglex: walk from the most significant rank down; at the first
    // difference the larger exponent wins.
    auto i = ra.rbegin();
    auto j = rb.rbegin();
    while (i != ra.rend() || j != rb.rend()) {
        if (j == rb.rend()) return 1;                     // a has extra high-rank exponent
        if (i == ra.rend()) return -1;
        if (i->first != j->first) return i->first > j->first ? 1 : -1;
        if (i->second != j->second) return i->second > j->second ? 1 : -1;
        ++i;
        ++j;
    }
    return 0;
}

} // namespace ara
