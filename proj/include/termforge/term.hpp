#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace termforge {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational coefficient. cpp_rational keeps the invariants we need:
// always reduced to lowest terms, denominator > 0, zero is 0/1.
using Coefficient = boost::multiprecision::cpp_rational;

// Dense index into the program's symbol table, assigned in declaration order.
using SymbolId = std::uint32_t;

using Exponent = std::int64_t;

struct Factor {
    SymbolId symbol;
    Exponent exponent;

    friend bool operator==(const Factor&, const Factor&) = default;
};

// One term: rational coefficient times a Laurent monomial. The factor list is
// strictly ascending by symbol and holds no zero exponents; it alone is the
// sort key.
struct Term {
    Coefficient coeff;
    std::vector<Factor> factors;

    friend bool operator==(const Term&, const Term&) = default;
};

struct Expression {
    std::string name;
    std::vector<Term> terms;
};

// Total order on monomial keys; coefficients never participate. Factor lists
// are compared position-wise, symbols ascending and exponents descending; a
// symbol absent from one side compares as exponent 0.
std::strong_ordering compare_terms(const Term& lhs, const Term& rhs);

inline bool key_less(const Term& lhs, const Term& rhs) {
    return compare_terms(lhs, rhs) == std::strong_ordering::less;
}

inline bool key_equal(const Term& lhs, const Term& rhs) {
    return compare_terms(lhs, rhs) == std::strong_ordering::equal;
}

// Sum of two terms with equal keys. Empty result when the coefficients cancel.
// Calling this on unequal keys is a programming error.
std::optional<Term> merge_like(const Term& lhs, const Term& rhs);

Term multiply_terms(const Term& lhs, const Term& rhs);

// Exponent of `symbol` in `term`, 0 when absent.
Exponent exponent_of(const Term& term, SymbolId symbol);

// Builds a term from an unnormalized factor list: sorts factors, adds
// exponents of repeated symbols, drops zero exponents.
Term make_term(Coefficient coeff, std::vector<Factor> factors);

// Sorts by key, sums coefficients of equal keys, deletes zero terms.
void canonicalize(std::vector<Term>& terms);

std::vector<Term> multiply_expanded(const std::vector<Term>& lhs, const std::vector<Term>& rhs);

// Fully expanded e^n for n >= 1; throws std::domain_error otherwise.
Expression power_expression(const Expression& e, long long n);

std::vector<Term> power_terms(const std::vector<Term>& base, long long n);

// Exact evaluation at a point, one nonzero rational per symbol.
Coefficient evaluate_term(const Term& term, std::span<const Coefficient> point);
Coefficient evaluate(const std::vector<Term>& terms, std::span<const Coefficient> point);

std::string coefficient_text(const Coefficient& c);

// Canonical text of one term, used in goldens and determinism diffs:
// explicit sign and numerator, `/den` unless 1, factors in key order with
// `^1` elided. Examples: `+3*a*b`, `-1/2*x^-2`, `+1*b^2`.
std::string term_text(const Term& term, std::span<const std::string> symbols);

// Human-readable polynomial: ` + `/` - ` separators, unit coefficients
// elided in front of factors, `0` when empty. Example: `14*a^2 + b^2`.
std::string expression_text(const std::vector<Term>& terms, std::span<const std::string> symbols);

} // namespace termforge
