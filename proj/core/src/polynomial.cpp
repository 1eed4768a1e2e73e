#include "ara/polynomial.hpp"

#include <algorithm>
#include <cctype>

namespace ara {

std::string rational_str(const Rational& c) {
    return c.get_str();
}

Rational rational_parse(std::string_view text) {
    Rational c;
    if (c.set_str(std::string(text), 10) != 0)
        throw Error("invalid rational '" + std::string(text) + "'");
    c.canonicalize();
    if (c.get_den() == 0) throw Error("invalid rational '" + std::string(text) + "': zero denominator");
    return c;
}

Polynomial::Polynomial(const Rational& c) {
    if (c != 0) terms_.emplace(Monomial{}, c);
}

Polynomial::Polynomial(const Monomial& m, const Rational& c) {
    if (c != 0) terms_.emplace(m, c);
}

Polynomial Polynomial::variable(Variable v) {
    return Polynomial(Monomial::variable(v));
}

std::uint64_t Polynomial::degree() const {
    std::uint64_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

std::vector<Variable> Polynomial::support() const {
    std::vector<Variable> vars;
    for (const auto& [m, c] : terms_)
        for (const auto& [idx, exp] : m.entries()) vars.push_back(Variable{idx});
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return vars;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r;
    for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, -c);
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    Polynomial r;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : other.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Polynomial Polynomial::scale(const Rational& c) const {
    Polynomial r;
    if (c == 0) return r;
    for (const auto& [m, coef] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, coef * c);
    return r;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Rational& c) const {
    Polynomial r;
    if (c == 0) return r;
    for (const auto& [mon, coef] : terms_) r.add_term(mon * m, coef * c);
    return r;
}

Polynomial Polynomial::pow(std::uint64_t k) const {
    Polynomial result(Rational(1));
    Polynomial base = *this;
    while (k > 0) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return result;
}

Polynomial Polynomial::rename(
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& map) const {
    Polynomial r;
    for (const auto& [m, c] : terms_) r.add_term(m.rename(map), c);
    return r;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        Rational a = abs(c);
        if (out.empty()) {
            if (c < 0) out += '-';
        } else {
            out += (c < 0) ? " - " : " + ";
        }
        if (a != 1 || m.is_unit()) {
            out += rational_str(a);
            if (!m.is_unit()) out += '*';
        }
        if (!m.is_unit()) out += m.str();
    }
    return out;
}

namespace {

struct Parser {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() { return text[pos]; }

    [[noreturn]] void fail(const std::string& what) {
        throw Error("polynomial parse error at position " + std::to_string(pos) + ": " + what);
    }

    std::string read_number() {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected digits");
        return std::string(text.substr(start, pos - start));
    }

    // term := [coef ['*']] factor ('*' factor)* | coef
    void read_term(Polynomial& out, bool negative) {
        skip_ws();
        Rational coef = 1;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            std::string num = read_number();
            std::string den;
            skip_ws();
            if (pos < text.size() && text[pos] == '/') {
                ++pos;
                skip_ws();
                den = read_number();
            }
            coef = rational_parse(den.empty() ? num : num + "/" + den);
            skip_ws();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                skip_ws();
            } else {
                if (pos < text.size() && text[pos] == 'x') fail("expected '*' between coefficient and variable");
                out.add_term(Monomial{}, negative ? -coef : coef);
                return;
            }
        }
        Monomial m;
        bool have_factor = false;
        while (true) {
            skip_ws();
            if (pos >= text.size() || text[pos] != 'x') {
                if (!have_factor) fail("expected variable");
                break;
            }
            std::size_t start = pos;
            ++pos;
            std::string idx = read_number();
            std::uint64_t exp = 1;
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                std::string e = read_number();
                exp = std::stoull(e);
            }
            (void)start;
            unsigned long long index = std::stoull(idx);
            if (index > UINT32_MAX) fail("variable index out of range");
            m = m * Monomial::variable(Variable{static_cast<std::uint32_t>(index)}, exp);
            have_factor = true;
            skip_ws();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                continue;
            }
            break;
        }
        out.add_term(m, negative ? -coef : coef);
    }
};

} // namespace

Polynomial Polynomial::parse(std::string_view text) {
    Parser p{text};
    Polynomial out;
    if (p.at_end()) throw Error("polynomial parse error: empty input");
    bool negative = false;
    if (p.peek() == '-') {
        negative = true;
        ++p.pos;
    } else if (p.peek() == '+') {
        ++p.pos;
    }
    p.read_term(out, negative);
    while (!p.at_end()) {
        char sign = p.peek();
        if (sign != '+' && sign != '-') p.fail("expected '+' or '-'");
        ++p.pos;
        p.read_term(out, sign == '-');
    }
    return out;
}

Polynomial square_substitution(const Polynomial& f) {
    Polynomial r;
    for (const auto& [m, c] : f.terms()) r.add_term(m.squared(), c);
    return r;
}

} // namespace ara
