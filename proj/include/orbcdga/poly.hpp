#pragma once

#include <map>
#include <string>
#include <vector>

#include "orbcdga/rational.hpp"

namespace orbcdga {

using Exps = std::vector<int>;

long total_degree(const Exps& e);

/// Graded lexicographic order: total degree first, ties broken
/// lexicographically with earlier variables more significant.
struct GrlexLess {
    bool operator()(const Exps& a, const Exps& b) const;
};

/// Sparse multivariate polynomial over Q with a fixed, ordered variable list.
/// Invariants: no zero coefficients stored; every exponent vector has the
/// same length as the variable list.
class MultiPoly {
public:
    using TermMap = std::map<Exps, Rat, GrlexLess>;

    MultiPoly() = default;
    explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static MultiPoly constant(std::vector<std::string> vars, const Rat& c);
    static MultiPoly variable(std::vector<std::string> vars, std::size_t idx,
                              int exp = 1);

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rat constant_term() const;

    // accumulates; drops the term if the sum cancels
    void add_term(const Exps& e, const Rat& c);

    const Exps& leading_exps() const;
    const Rat& leading_coeff() const;

    bool operator==(const MultiPoly& o) const {
        return vars_ == o.vars_ && terms_ == o.terms_;
    }

private:
    std::vector<std::string> vars_;
    TermMap terms_;
};

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
MultiPoly operator-(const MultiPoly& a);
MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
MultiPoly scale(const MultiPoly& a, const Rat& c);
MultiPoly poly_pow(const MultiPoly& a, long n);

/// Image of f under variable substitution; images[i] replaces vars()[i] and
/// they must all live over one common ring.
MultiPoly substitute(const MultiPoly& f, const std::vector<MultiPoly>& images);

/// Rewrites f over a superset of its variables.
MultiPoly extend_vars(const MultiPoly& f, const std::vector<std::string>& vars);

std::string to_string(const MultiPoly& f);

}  // namespace orbcdga
