#pragma once

#include "graphjac/intlinalg.hpp"
#include "graphjac/multigraph.hpp"

#include <map>
#include <string>
#include <utility>

namespace graphjac {

/// Two-variable Tutte polynomial with nonnegative integer coefficients.
struct TuttePolynomial {
    std::map<std::pair<int, int>, long long> coeff; // (i, j) -> coefficient of x^i y^j

    bool operator==(const TuttePolynomial&) const = default;

    long long at(int i, int j) const;
    /// T(1,1): the spanning tree count of a connected graph.
    Int eval_at_ones() const;
    /// "i j c" lines in lexicographic order.
    std::string to_lines() const;
};

/// Deletion-contraction with bridge/loop factoring and isomorphism-verified
/// memoization. Guarded to m <= 18; requires a connected graph.
TuttePolynomial tutte_polynomial(const Multigraph& g);

inline bool polynomials_equal(const TuttePolynomial& a, const TuttePolynomial& b) {
    return a == b;
}

} // namespace graphjac
