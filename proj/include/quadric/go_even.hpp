#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "quadric/hom_map.hpp"

namespace quadric {

// H*(BGO(2n)) is decided through the pair Ψ = (π*, strip): π* lands in
// H*(BO(2n)); strip kills a_{2i-1} and d_T and keeps λ and b_{4i}.
struct EmbeddingImage {
    Polynomial bo_part;
    Polynomial lambda_part;

    bool is_zero() const { return bo_part.is_zero() && lambda_part.is_zero(); }
    friend bool operator==(const EmbeddingImage&, const EmbeddingImage&) = default;
};

bool is_go_even(const Ring& ring);

// BO(2n) carrying the same extra variables (and degree cap) as `go`.
RingPtr bo_ring_for(const RingPtr& go);

// π*: λ -> 0, a_{2i-1} -> w_{2i-1}, b_{4i} -> w_{2i}^2, d_T -> Σ_{i∈T} w_{2i-1} v_{T-i};
// extra variables map to themselves.
const HomMap& pistar_even_map(const RingPtr& go);
// λ -> λ, b -> b, a -> 0, d -> 0 (into the same ring).
const HomMap& strip_map(const RingPtr& go);

// d_S with the conventions d_{i} = a_{2i-1} and d_∅ = 0.
Polynomial d_or_a(const RingPtr& go, std::uint32_t mask);

EmbeddingImage psi_embed(const Polynomial& p);
bool eq_go_even(const Polynomial& p, const Polynomial& q);

// Canonical representative: in each degree, the solution of
// Ψ(Σ x_j m_j) = Ψ(P) over all monomials m_j of that degree that uses the
// smallest monomials.
Polynomial normal_form(const Polynomial& p);

struct Expression {
    Polynomial value;
    // Differences between admissible answers: λ-free polynomials in a, b, d
    // whose π* image vanishes.
    std::vector<Polynomial> ambiguity;
};

// G in a, b, d_T (no λ, no extras) with π*(G) = h. h lives in BO(2n) (any
// ring with the same variable names is converted). Throws NotInImage.
Polynomial express_in_generators(const Polynomial& h, const RingPtr& go);
Expression express_with_kernel(const Polynomial& h, const RingPtr& go);

struct Relation {
    int family = 0;  // 1..5 in the order λa, λd, Σ a d, d_{ij}^2, d_T d_U
    std::string label;
    Polynomial value;
};

std::vector<Relation> relation_generators(const RingPtr& go);

}  // namespace quadric
