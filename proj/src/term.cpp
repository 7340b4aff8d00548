#include "termforge/term.hpp"

#include <algorithm>
#include <stdexcept>

namespace termforge {

std::strong_ordering compare_terms(const Term& lhs, const Term& rhs) {
    std::size_t i = 0;
    std::size_t j = 0;
    const auto& a = lhs.factors;
    const auto& b = rhs.factors;
    while (i < a.size() || j < b.size()) {
        // A side that ran out behaves as exponent 0 at the other side's symbol.
        if (i == a.size()) {
            return b[j].exponent > 0 ? std::strong_ordering::greater : std::strong_ordering::less;
        }
        if (j == b.size()) {
            return a[i].exponent > 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        }
        if (a[i].symbol == b[j].symbol) {
            if (a[i].exponent != b[j].exponent) {
                // Exponent descending: the larger exponent sorts first.
                return a[i].exponent > b[j].exponent ? std::strong_ordering::less
                                                     : std::strong_ordering::greater;
            }
            ++i;
            ++j;
        } else if (a[i].symbol < b[j].symbol) {
            return a[i].exponent > 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        } else {
            return b[j].exponent > 0 ? std::strong_ordering::greater : std::strong_ordering::less;
        }
    }
    return std::strong_ordering::equal;
}

std::optional<Term> merge_like(const Term& lhs, const Term& rhs) {
    if (!key_equal(lhs, rhs)) {
        throw std::logic_error("merge_like called on terms with different keys");
    }
    Coefficient sum = lhs.coeff + rhs.coeff;
    if (sum.is_zero()) {
        return std::nullopt;
    }
    return Term{std::move(sum), lhs.factors};
}

Term multiply_terms(const Term& lhs, const Term& rhs) {
    Term out;
    out.coeff = lhs.coeff * rhs.coeff;
    out.factors.reserve(lhs.factors.size() + rhs.factors.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < lhs.factors.size() && j < rhs.factors.size()) {
        const Factor& fa = lhs.factors[i];
        const Factor& fb = rhs.factors[j];
        if (fa.symbol == fb.symbol) {
            Exponent e = fa.exponent + fb.exponent;
            if (e != 0) {
                out.factors.push_back({fa.symbol, e});
            }
            ++i;
            ++j;
        } else if (fa.symbol < fb.symbol) {
            out.factors.push_back(fa);
            ++i;
        } else {
            out.factors.push_back(fb);
            ++j;
        }
    }
    out.factors.insert(out.factors.end(), lhs.factors.begin() + i, lhs.factors.end());
    out.factors.insert(out.factors.end(), rhs.factors.begin() + j, rhs.factors.end());
    return out;
}

Exponent exponent_of(const Term& term, SymbolId symbol) {
    for (const Factor& f : term.factors) {
        if (f.symbol == symbol) {
            return f.exponent;
        }
        if (f.symbol > symbol) {
            break;
        }
    }
    return 0;
}

Term make_term(Coefficient coeff, std::vector<Factor> factors) {
    std::sort(factors.begin(), factors.end(),
              [](const Factor& a, const Factor& b) { return a.symbol < b.symbol; });
    std::vector<Factor> merged;
    merged.reserve(factors.size());
    for (const Factor& f : factors) {
        if (!merged.empty() && merged.back().symbol == f.symbol) {
            merged.back().exponent += f.exponent;
            if (merged.back().exponent == 0) {
                merged.pop_back();
            }
        } else if (f.exponent != 0) {
            merged.push_back(f);
        }
    }
    return Term{std::move(coeff), std::move(merged)};
}

void canonicalize(std::vector<Term>& terms) {
    std::sort(terms.begin(), terms.end(), key_less);
    std::vector<Term> out;
    out.reserve(terms.size());
    for (Term& t : terms) {
        if (!out.empty() && key_equal(out.back(), t)) {
            out.back().coeff += t.coeff;
        } else {
            out.push_back(std::move(t));
        }
    }
    std::erase_if(out, [](const Term& t) { return t.coeff.is_zero(); });
    terms = std::move(out);
}

std::vector<Term> multiply_expanded(const std::vector<Term>& lhs, const std::vector<Term>& rhs) {
    std::vector<Term> out;
    out.reserve(lhs.size() * rhs.size());
    for (const Term& a : lhs) {
        for (const Term& b : rhs) {
            out.push_back(multiply_terms(a, b));
        }
    }
    canonicalize(out);
    return out;
}

std::vector<Term> power_terms(const std::vector<Term>& base, long long n) {
    if (n < 1) {
        throw std::domain_error("expression power requires a positive exponent");
    }
    std::vector<Term> acc = base;
    for (long long i = 1; i < n; ++i) {
        acc = multiply_expanded(acc, base);
    }
    return acc;
}

Expression power_expression(const Expression& e, long long n) {
    return Expression{e.name, power_terms(e.terms, n)};
}

Coefficient evaluate_term(const Term& term, std::span<const Coefficient> point) {
    Coefficient value = term.coeff;
    for (const Factor& f : term.factors) {
        const Coefficient& x = point[f.symbol];
        Exponent e = f.exponent;
        Coefficient base = e < 0 ? Coefficient(denominator(x), numerator(x)) : x;
        auto k = static_cast<unsigned>(e < 0 ? -e : e);
        value *= Coefficient(boost::multiprecision::pow(numerator(base), k),
                             boost::multiprecision::pow(denominator(base), k));
    }
    return value;
}

Coefficient evaluate(const std::vector<Term>& terms, std::span<const Coefficient> point) {
    Coefficient sum = 0;
    for (const Term& t : terms) {
        sum += evaluate_term(t, point);
    }
    return sum;
}

std::string coefficient_text(const Coefficient& c) {
    std::string s = numerator(c).str();
    if (denominator(c) != 1) {
        s += "/" + denominator(c).str();
    }
    return s;
}

std::string term_text(const Term& term, std::span<const std::string> symbols) {
    std::string s = term.coeff < 0 ? "-" : "+";
    s += abs(numerator(term.coeff)).str();
    if (denominator(term.coeff) != 1) {
        s += "/" + denominator(term.coeff).str();
    }
    for (const Factor& f : term.factors) {
        s += "*";
        s += symbols[f.symbol];
        if (f.exponent != 1) {
            s += "^" + std::to_string(f.exponent);
        }
    }
    return s;
}

std::string expression_text(const std::vector<Term>& terms, std::span<const std::string> symbols) {
    if (terms.empty()) {
        return "0";
    }
    std::string s;
    bool first = true;
    for (const Term& t : terms) {
        if (first) {
            if (t.coeff < 0) {
                s += "-";
            }
            first = false;
        } else {
            s += t.coeff < 0 ? " - " : " + ";
        }
        BigInt num = abs(numerator(t.coeff));
        bool unit = num == 1 && denominator(t.coeff) == 1 && !t.factors.empty();
        bool printed = false;
        if (!unit) {
            s += num.str();
            if (denominator(t.coeff) != 1) {
                s += "/" + denominator(t.coeff).str();
            }
            printed = true;
        }
        for (const Factor& f : t.factors) {
            if (printed) {
                s += "*";
            }
            s += symbols[f.symbol];
            if (f.exponent != 1) {
                s += "^" + std::to_string(f.exponent);
            }
            printed = true;
        }
    }
    return s;
}

} // namespace termforge
