#include "ara/monomial.hpp"

#include <algorithm>
#include <charconv>

namespace ara {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    if (__builtin_add_overflow(a, b, &r)) throw Error("monomial exponent overflow");
    return r;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r)) throw Error("monomial exponent overflow");
    return r;
}

} // namespace

Variable Variable::parse(std::string_view text) {
    if (text.size() < 2 || text[0] != 'x')
        throw Error("invalid variable '" + std::string(text) + "': expected x<k>");
    std::uint32_t idx = 0;
    auto [ptr, ec] = std::from_chars(text.data() + 1, text.data() + text.size(), idx);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw Error("invalid variable '" + std::string(text) + "': expected x<k>");
    return Variable{idx};
}

Monomial Monomial::variable(Variable v, std::uint64_t exp) {
    Monomial m;
    if (exp > 0) m.entries_.push_back({v.index, exp});
    return m;
}

Monomial Monomial::from_entries(std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end());
    Monomial m;
    for (const auto& [idx, exp] : entries) {
        if (exp == 0) continue;
        if (!m.entries_.empty() && m.entries_.back().first == idx)
            m.entries_.back().second = checked_add(m.entries_.back().second, exp);
        else
            m.entries_.push_back({idx, exp});
    }
    return m;
}

std::uint64_t Monomial::degree() const {
    std::uint64_t d = 0;
    for (const auto& [idx, exp] : entries_) d = checked_add(d, exp);
    return d;
}

std::uint64_t Monomial::exponent(Variable v) const {
    for (const auto& [idx, exp] : entries_)
        if (idx == v.index) return exp;
    return 0;
}

std::vector<Variable> Monomial::support() const {
    std::vector<Variable> vars;
    vars.reserve(entries_.size());
    for (const auto& [idx, exp] : entries_) vars.push_back(Variable{idx});
    return vars;
}

std::uint32_t Monomial::max_index() const {
    if (entries_.empty()) throw Error("unit monomial has no variables");
    return entries_.back().first;
}

bool Monomial::divides(const Monomial& other) const {
    auto it = other.entries_.begin();
    for (const auto& [idx, exp] : entries_) {
        while (it != other.entries_.end() && it->first < idx) ++it;
        if (it == other.entries_.end() || it->first != idx || it->second < exp) return false;
    }
    return true;
}

bool Monomial::is_squarefree() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const Entry& e) { return e.second == 1; });
}

Monomial Monomial::squarefree_part() const {
    Monomial m;
    m.entries_.reserve(entries_.size());
    for (const auto& [idx, exp] : entries_) m.entries_.push_back({idx, 1});
    return m;
}

Monomial Monomial::squared() const {
    Monomial m;
    m.entries_.reserve(entries_.size());
    for (const auto& [idx, exp] : entries_) m.entries_.push_back({idx, checked_mul(exp, 2)});
    return m;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial m;
    m.entries_.reserve(entries_.size() + other.entries_.size());
    auto a = entries_.begin();
    auto b = other.entries_.begin();
    while (a != entries_.end() || b != other.entries_.end()) {
        if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
            m.entries_.push_back(*a++);
        } else if (a == entries_.end() || b->first < a->first) {
            m.entries_.push_back(*b++);
        } else {
            m.entries_.push_back({a->first, checked_add(a->second, b->second)});
            ++a;
            ++b;
        }
    }
    return m;
}

Monomial Monomial::divide_by(const Monomial& divisor) const {
    Monomial m;
    auto b = divisor.entries_.begin();
    for (const auto& [idx, exp] : entries_) {
        if (b != divisor.entries_.end() && b->first == idx) {
            if (b->second > exp) throw Error("monomial division is not exact");
            if (exp > b->second) m.entries_.push_back({idx, exp - b->second});
            ++b;
        } else {
            m.entries_.push_back({idx, exp});
        }
    }
    if (b != divisor.entries_.end()) throw Error("monomial division is not exact");
    return m;
}

Monomial Monomial::pow(std::uint64_t k) const {
    Monomial m;
    if (k == 0) return m;
    m.entries_.reserve(entries_.size());
    for (const auto& [idx, exp] : entries_) m.entries_.push_back({idx, checked_mul(exp, k)});
    return m;
}

Monomial Monomial::rename(const std::vector<std::pair<std::uint32_t, std::uint32_t>>& map) const {
    std::vector<Entry> entries;
    entries.reserve(entries_.size());
    for (const auto& [idx, exp] : entries_) {
        std::uint32_t target = idx;
        for (const auto& [from, to] : map)
            if (from == idx) {
                target = to;
                break;
            }
        entries.push_back({target, exp});
    }
    return from_entries(std::move(entries));
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial m;
    auto i = a.entries_.begin();
    auto j = b.entries_.begin();
    while (i != a.entries_.end() || j != b.entries_.end()) {
        if (j == b.entries_.end() || (i != a.entries_.end() && i->first < j->first)) {
            m.entries_.push_back(*i++);
        } else if (i == a.entries_.end() || j->first < i->first) {
            m.entries_.push_back(*j++);
        } else {
            m.entries_.push_back({i->first, std::max(i->second, j->second)});
            ++i;
            ++j;
        }
    }
    return m;
}

bool Monomial::coprime(const Monomial& other) const {
    auto i = entries_.begin();
    auto j = other.entries_.begin();
    while (i != entries_.end() && j != other.entries_.end()) {
        if (i->first < j->first)
            ++i;
        else if (j->first < i->first)
            ++j;
        else
            return false;
    }
    return true;
}

std::string Monomial::str() const {
    if (entries_.empty()) return "1";
    std::string out;
    for (const auto& [idx, exp] : entries_) {
        if (!out.empty()) out += '*';
        out += 'x';
        out += std::to_string(idx);
        if (exp != 1) {
            out += '^';
            out += std::to_string(exp);
        }
    }
    return out;
}

Monomial Monomial::parse(std::string_view text) {
    if (text == "1") return Monomial{};
    std::vector<Entry> entries;
    std::size_t pos = 0;
    auto parse_uint = [&](std::uint64_t& value, const char* what) {
        auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
        if (ec != std::errc{})
            throw Error("monomial parse error at position " + std::to_string(pos) + ": expected " +
                        what);
        pos = static_cast<std::size_t>(ptr - text.data());
    };
    while (true) {
        if (pos >= text.size() || text[pos] != 'x')
            throw Error("monomial parse error at position " + std::to_string(pos) +
                        ": expected variable");
        ++pos;
        std::uint64_t idx = 0;
        parse_uint(idx, "variable index");
        if (idx > UINT32_MAX) throw Error("variable index out of range");
        std::uint64_t exp = 1;
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            parse_uint(exp, "exponent");
        }
        entries.push_back({static_cast<std::uint32_t>(idx), exp});
        if (pos == text.size()) break;
        if (text[pos] != '*')
            throw Error("monomial parse error at position " + std::to_string(pos) +
                        ": expected '*'");
        ++pos;
    }
    return from_entries(std::move(entries));
}

bool display_greater(const Monomial& a, const Monomial& b) {
    auto i = a.entries().begin();
    auto j = b.entries().begin();
    while (i != a.entries().end() || j != b.entries().end()) {
        if (j == b.entries().end()) return true; // a has an extra factor at this index
        if (i == a.entries().end()) return false;
        if (i->first < j->first) return true;  // a is nonzero at a smaller index
        if (j->first < i->first) return false;
        if (i->second != j->second) return i->second > j->second;
        ++i;
        ++j;
    }
    return false;
}

} // namespace ara
