#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "quadric/generator_set.hpp"
#include "quadric/hom_map.hpp"

namespace quadric {

// Coaction machinery on a polynomial ring F2[x1..xN] with deg x_i = s·i:
// TodaA(N) and BO(N) (s = 1, adjoined variable of degree 1) or BGL(N)
// (s = 2, adjoined t of degree 2).
//   φ(x_r) = Σ_{i=0}^{r} C(N-i, r-i) t^{r-i} x_i,   φ(P) = Σ_i t^i d_i(P)
//   B = { a : d_i(a) = 0 for all i >= q },   q = 2-part of N
class TodaContext {
public:
    explicit TodaContext(RingPtr ring);

    int N() const noexcept { return n_; }
    int q() const noexcept { return q_; }
    int h() const noexcept { return n_ / q_; }
    int scale() const noexcept { return scale_; }
    const RingPtr& ring() const noexcept { return ring_; }
    // ring with the coaction variable adjoined ("w" for BO, "t" otherwise).
    const RingPtr& extended() const noexcept { return ext_; }
    std::size_t coaction_var() const noexcept { return tvar_; }

    Polynomial x(int i) const;
    const HomMap& phi() const { return phi_; }
    Polynomial coaction(const Polynomial& p) const;
    // Coefficient of t^i in φ(P), as an element of ring().
    Polynomial d(const Polynomial& p, int i) const;
    std::map<int, Polynomial> components(const Polynomial& p) const;

    bool is_in_B(const Polynomial& p) const;
    bool is_primitive(const Polynomial& p) const;

    // The unique homogeneous b ∈ B with b ≡ a modulo x_q (per homogeneous part).
    Polynomial psi_inverse(const Polynomial& a) const;

    // N ≡ 2 mod 4 only: entries 1..N (index 0 holds 1).
    //   x̂1 = x1, x̂2 = x2, x̂_{2k} = ψ^{-1}(x_{2k}), x̂_{2k-1} = d1(x̂_{2k}).
    const std::vector<Polynomial>& hat_elements() const;
    // The s_i/t_i closed formula for x̂_k.
    Polynomial recursion_hat(int k) const;
    // One line per index k >= 3 where the closed formula disagrees with hat_elements().
    std::vector<std::string> recursion_discrepancies() const;

    // b*c = bc + d1(b) d1(c) x2.
    Polynomial star(const Polynomial& b, const Polynomial& c) const;

    // α_{2k-1}, β_{4k} (k >= 2), δ_T (T ⊆ {2..2m+1}, |T| >= 2) for N = 4m+2.
    GeneratorSet toda_generators() const;

private:
    void require_4m2(const char* op) const;

    RingPtr ring_;
    RingPtr ext_;
    int n_ = 0;
    int q_ = 1;
    int scale_ = 1;
    std::size_t tvar_ = 0;
    std::vector<std::size_t> gens_;
    HomMap phi_;

    mutable std::once_flag hats_once_;
    mutable std::vector<Polynomial> hats_;
};

// Shared, lazily built context for a ring.
const TodaContext& toda_context(const RingPtr& ring);

Polynomial coaction_phi(const Polynomial& p);
Polynomial d_i_op(const Polynomial& p, int i);
bool is_in_B(const Polynomial& p);
Polynomial psi_inverse(const Polynomial& a);
std::vector<Polynomial> hat_elements(int N);
Polynomial star_product(const Polynomial& b, const Polynomial& c);
GeneratorSet toda_generators(int N);
// x1, d4 = x2^2 + x1x3, d6 = x3^2 + x1^2x4 + x1x2x3 in TodaA(4).
GeneratorSet toda_generators_N4();
bool primitive_check_A(const Polynomial& p);

}  // namespace quadric
