#ifndef CROSSCAP_LAURENT_HPP
#define CROSSCAP_LAURENT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <string>

namespace crosscap {

using BigInt = boost::multiprecision::cpp_int;

enum class Variable : std::uint8_t { A, t };

char variable_symbol(Variable v) noexcept;

// Single-variable Laurent polynomial with exact integer coefficients.
// Zero coefficients are never stored; the empty map is the zero polynomial.
// The variable tag is metadata, but arithmetic refuses to mix tags.
class LaurentPoly {
public:
    using Terms = std::map<int, BigInt>;

    explicit LaurentPoly(Variable var = Variable::A) : var_(var) {}
    LaurentPoly(Variable var, const Terms& terms);

    static LaurentPoly monomial(Variable var, BigInt coeff, int exp);
    static LaurentPoly constant(Variable var, BigInt coeff) { return monomial(var, std::move(coeff), 0); }

    Variable variable() const noexcept { return var_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }

    // Throws ZeroPolynomial on the zero polynomial.
    int max_degree() const;
    int min_degree() const;
    int span() const;

    BigInt coefficient_at(int exp) const;

    // Multiply by coeff * x^exp.
    LaurentPoly scalar_shift(const BigInt& coeff, int exp) const;

    // x -> x^-1
    LaurentPoly invert_variable() const;

    // Exact division; throws InvalidArgument if the remainder is nonzero.
    LaurentPoly divide_exact(const LaurentPoly& divisor) const;

    // Substitute x = y^factor, renaming the variable.
    LaurentPoly substitute_power(Variable new_var, int factor) const;

    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const LaurentPoly& rhs);

    // Accumulate coeff * x^exp in place.
    void add_term(int exp, const BigInt& coeff);

    friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
    friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }
    friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
    friend LaurentPoly operator-(const LaurentPoly& p);

    // Equality ignores nothing: tags must match too.
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.var_ == b.var_ && a.terms_ == b.terms_;
    }

    // "c1*x^e1 + c2*x^e2 ..." in descending degree, "0" for zero.
    std::string to_string() const;

private:
    void require_same_variable(const LaurentPoly& other) const;

    Variable var_;
    Terms terms_;
};

// Parses the to_string() format.  Throws MalformedCode on bad input.
LaurentPoly parse_laurent(const std::string& text);

}  // namespace crosscap

#endif  // CROSSCAP_LAURENT_HPP
