#pragma once

#include <cstdint>

#include "quadric/polynomial.hpp"

namespace quadric {

// A monomial of F2[w1..w_{2n}] written as
// (odd w's) · (squares of even w's) · v_T with T the set of i whose w_{2i}
// appears to an odd power.
struct MonomialFactorization {
    Monomial odd_part;
    Monomial even_square_part;
    std::uint32_t squarefree_even = 0;

    Monomial reassemble(const Ring& bo) const;
};

MonomialFactorization factorize(const Ring& bo, const Monomial& m);

// s(w_{2i}) = w_{2i-1}, s(w_{2i-1}) = 0, extended as a derivation.
Polynomial derivation_s(const Polynomial& p);

// H*(BO(2n)) -> H*(BGO_even(2n)), degree -1.
Polynomial gysin_d_even(const Polynomial& p);

// H*(BO(2n+1)) -> H*(BGO_odd(2n+1)), degree -1. Accepts BO(2n+1) (converted
// to the (w, ŵ) coordinates first) or BOHat(2n+1): Σ w^i f_i(ŵ) -> Σ c^j f_{2j+1}.
Polynomial gysin_d_odd(const Polynomial& p);

// h ∈ F2[ŵ2..ŵ_{2n+1}] ⊂ BGO_odd(2n+1)  ->  BGO_even(2n); scaled by parity.
Polynomial boundary_odd_to_even(const Polynomial& h, int parity = 1);
// h ∈ BGO_even(2n+2)  ->  BGO_odd(2n+1); scaled by parity.
Polynomial boundary_even_to_odd(const Polynomial& h, int parity = 1);

}  // namespace quadric
