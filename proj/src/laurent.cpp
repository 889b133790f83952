#include "crosscap/laurent.hpp"

#include "crosscap/error.hpp"

#include <cctype>
#include <optional>
#include <sstream>

namespace crosscap {

char variable_symbol(Variable v) noexcept { return v == Variable::A ? 'A' : 't'; }

LaurentPoly::LaurentPoly(Variable var, const Terms& terms) : var_(var) {
    for (const auto& [e, c] : terms)
        if (c != 0) terms_.emplace(e, c);
}

LaurentPoly LaurentPoly::monomial(Variable var, BigInt coeff, int exp) {
    LaurentPoly p(var);
    if (coeff != 0) p.terms_.emplace(exp, std::move(coeff));
    return p;
}

int LaurentPoly::max_degree() const {
    if (terms_.empty()) throw Error(ErrorKind::ZeroPolynomial, "max_degree of zero polynomial");
    return terms_.rbegin()->first;
}

int LaurentPoly::min_degree() const {
    if (terms_.empty()) throw Error(ErrorKind::ZeroPolynomial, "min_degree of zero polynomial");
    return terms_.begin()->first;
}

int LaurentPoly::span() const { return max_degree() - min_degree(); }

BigInt LaurentPoly::coefficient_at(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? BigInt(0) : it->second;
}

LaurentPoly LaurentPoly::scalar_shift(const BigInt& coeff, int exp) const {
    LaurentPoly out(var_);
    if (coeff == 0) return out;
    for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + exp, c * coeff);
    return out;
}

LaurentPoly LaurentPoly::invert_variable() const {
    LaurentPoly out(var_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(-e, c);
    return out;
}

LaurentPoly LaurentPoly::substitute_power(Variable new_var, int factor) const {
    LaurentPoly out(new_var);
    for (const auto& [e, c] : terms_) out.add_term(e * factor, c);
    return out;
}

void LaurentPoly::require_same_variable(const LaurentPoly& other) const {
    if (var_ != other.var_)
        throw Error(ErrorKind::VariableMismatch,
                    std::string("cannot combine polynomials in ") + variable_symbol(var_) + " and " +
                        variable_symbol(other.var_));
}

void LaurentPoly::add_term(int exp, const BigInt& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(exp, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    require_same_variable(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
    require_same_variable(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
    lhs.require_same_variable(rhs);
    LaurentPoly out(lhs.var_);
    for (const auto& [e1, c1] : lhs.terms_)
        for (const auto& [e2, c2] : rhs.terms_) out.add_term(e1 + e2, c1 * c2);
    return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }

LaurentPoly operator-(const LaurentPoly& p) {
    LaurentPoly out(p.var_);
    for (const auto& [e, c] : p.terms_) out.terms_.emplace_hint(out.terms_.end(), e, -c);
    return out;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
    require_same_variable(divisor);
    if (divisor.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "division by zero polynomial");
    LaurentPoly quotient(var_);
    LaurentPoly rest = *this;
    const int dtop = divisor.max_degree();
    const BigInt& lead = divisor.terms_.rbegin()->second;
    while (!rest.is_zero()) {
        if (rest.span() < divisor.span())
            throw Error(ErrorKind::InvalidArgument, "division is not exact");
        const int rtop = rest.max_degree();
        const BigInt& rc = rest.terms_.rbegin()->second;
        if (rc % lead != 0) throw Error(ErrorKind::InvalidArgument, "division is not exact");
        BigInt q = rc / lead;
        quotient.add_term(rtop - dtop, q);
        rest -= divisor.scalar_shift(q, rtop - dtop);
    }
    return quotient;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    const char x = variable_symbol(var_);
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        os << (c < 0 ? BigInt(-c) : c) << '*' << x << '^' << e;
        first = false;
    }
    return os.str();
}

namespace {

struct Cursor {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char ch) {
        skip_ws();
        if (pos < s.size() && s[pos] == ch) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& why) const {
        throw Error(ErrorKind::MalformedCode, why + " at offset " + std::to_string(pos) + " in '" + s + "'");
    }
    std::string digits() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) fail("expected digits");
        return s.substr(start, pos - start);
    }
};

}  // namespace

LaurentPoly parse_laurent(const std::string& text) {
    Cursor cur{text};
    cur.skip_ws();
    if (cur.pos < text.size() && text.substr(cur.pos) == "0") return LaurentPoly(Variable::A);
    std::optional<Variable> var;
    LaurentPoly::Terms terms;
    bool first = true;
    while (true) {
        cur.skip_ws();
        if (cur.pos >= text.size()) break;
        bool negative = false;
        if (cur.eat('-')) {
            negative = true;
        } else if (!cur.eat('+') && !first) {
            cur.fail("expected '+' or '-'");
        }
        BigInt c(cur.digits());
        if (!cur.eat('*')) cur.fail("expected '*'");
        cur.skip_ws();
        if (cur.pos >= text.size()) cur.fail("expected variable");
        Variable v;
        if (text[cur.pos] == 'A') v = Variable::A;
        else if (text[cur.pos] == 't') v = Variable::t;
        else cur.fail("unknown variable");
        ++cur.pos;
        if (var && *var != v) cur.fail("mixed variables");
        var = v;
        if (!cur.eat('^')) cur.fail("expected '^'");
        bool eneg = cur.eat('-');
        int e = std::stoi(cur.digits());
        if (eneg) e = -e;
        if (terms.count(e)) cur.fail("repeated exponent");
        terms.emplace(e, negative ? BigInt(-c) : c);
        first = false;
    }
    if (!var) cur.fail("empty polynomial");
    return LaurentPoly(*var, terms);
}

}  // namespace crosscap
