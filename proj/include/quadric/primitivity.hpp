#pragma once

#include <cstdint>
#include <map>

#include "quadric/generator_set.hpp"

namespace quadric {

// B(μ)*(P) == 1⊗P, using the ring's own coaction: action_even (compared per
// t-coefficient up to the relations), action_odd, or Toda's φ on
// BO / BGL / TodaA. Throws ContextMismatch for other rings.
bool primitive_check(const Polynomial& p);

// B(μ)*(P) - 1⊗P in ring[t] (ring[w] for BO); for BGO_even each t-coefficient
// is put in normal form. Zero iff P is primitive.
Polynomial primitivity_defect(const Polynomial& p);

// rank 2 and 4m+2: the constructed set; rank 4: the four classical elements;
// odd rank: ŵ2..ŵ_{2n+1}. Even ranks divisible by 4 above 4: UnsupportedRank.
GeneratorSet ph_generators(const RingPtr& ring);

struct Rank4m2Construction {
    int m = 0;
    RingPtr go;          // BGO_even(4m+2)
    RingPtr bo;          // BO(4m+2)
    RingPtr gl;          // BGL(4m+2)
    GeneratorSet toda;   // α, β, δ in BO(4m+2)
    std::map<int, Polynomial> alpha_prime;          // i -> α'_{2i-1}
    std::map<std::uint32_t, Polynomial> delta_prime;  // T -> δ'_T
    std::map<int, Polynomial> c_hat;                // k -> ĉ_k in BGL(4m+2)
    std::map<int, Polynomial> b_hat;                // i -> b̂_{4i}
    std::map<int, Polynomial> g;                    // i -> g_{2i+1}
    std::map<int, Polynomial> beta_prime;           // i -> β'_{4i}
    GeneratorSet generators;
    // Largest solution-space dimension met in the pullback solves, and
    // whether every ambiguity was zero in H*(BGO).
    std::size_t max_ambiguity = 0;
    bool pullbacks_unique = true;
};

const Rank4m2Construction& rank_4m2_construction(int m, int degree_cap = 48);
GeneratorSet construct_rank_4m2_generators(int m);

}  // namespace quadric
