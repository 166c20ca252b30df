#pragma once

#include <vector>

#include "quadric/polynomial.hpp"

namespace quadric {

// All monomials of exactly `degree`, in descending monomial order. When
// `allowed` is non-empty only variables with allowed[i] set may appear.
// Throws DegreeCapExceeded above the ring's cap.
std::vector<Monomial> enumerate_monomials(const Ring& ring, int degree,
                                          const std::vector<bool>& allowed = {});

// Number of monomials of the given degree (same filter), without listing them.
std::size_t count_monomials(const Ring& ring, int degree, const std::vector<bool>& allowed = {});

}  // namespace quadric
