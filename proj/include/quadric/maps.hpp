#pragma once

#include "quadric/go_even.hpp"

namespace quadric {

// Each map comes in two forms: by n on default-cap rings, or built on a given
// ring (whose degree cap is then shared by source and target).

// BGO_odd(2n+1) -> BO(2n+1): c -> w1^2,
// ŵ_r -> C(2n,r) w1^r + Σ_{2<=i<=r} C(2n+1-i, r-i) w1^{r-i} w_i.
HomMap pistar_odd(int n);
HomMap pistar_odd(const RingPtr& go_odd);
// BGO_even(2n) -> BO(2n).
HomMap pistar_even(int n);
HomMap pistar_even(const RingPtr& go_even);

// Coordinate changes on H*(BO(2n+1)) between (w1..w_{2n+1}) and (w, ŵ2..ŵ_{2n+1}).
HomMap w_to_what(int n);  // BO(2n+1) -> BOHat(2n+1)
HomMap what_to_w(int n);  // BOHat(2n+1) -> BO(2n+1)
HomMap w_to_what(const RingPtr& bo_odd);
HomMap what_to_w(const RingPtr& bohat);

// The f_{n,r}(λ, b4..b_{4r-4}) with c̄_{2r-1} = a_{2r-1}^2 + λ f_{n,r}.
Polynomial chern_odd_correction(const RingPtr& go_even, int r);
// BGL(2n) -> BGO_even(2n).
HomMap chern_to_go_even(int n);
HomMap chern_to_go_even(const RingPtr& go_even);
// BGL(2n+1) -> BGO_odd(2n+1):
// c̄_r -> C(2n+1,r) c^r + Σ_{2<=i<=r} C(2n+1-i, r-i) c^{r-i} ŵ_i^2.
HomMap chern_to_go_odd(int n);
HomMap chern_to_go_odd(const RingPtr& go_odd);

// ring[t] with deg t = 2.
RingPtr with_t(const RingPtr& ring);

// Coaction BGO_even(2n) -> BGO_even(2n)[t]. Closed formulas for λ, a, b;
// d_T through the BO coaction and re-expression in the generators.
const HomMap& action_even(const RingPtr& go_even);
HomMap action_even(int n);
// BGO_odd(2n+1) -> BGO_odd(2n+1)[t]: c -> c + t, ŵ_i -> ŵ_i.
HomMap action_odd(const RingPtr& go_odd);
HomMap action_odd(int n);

// The closed |T| = 2 formula for B(μ)* d_{p,q}, p < q.
Polynomial action_even_dpq_closed(const RingPtr& go_even, int p, int q);
// Same shape with the d{i,j} term weighted by C(2n-2i,2p-2i) C(2n-2j,2q-2j);
// this is the version that agrees with the linear-solve action.
Polynomial action_even_dpq_weighted(const RingPtr& go_even, int p, int q);

// BO(N) -> BO(N)[w]: w_r -> Σ C(N-i, r-i) w^{r-i} w_i.
const HomMap& bo_coaction(const RingPtr& bo);

// θ: BGO_even(2n)[t] -> BO(2n)[w], π* on the generators and t -> w^2.
HomMap theta_map(const RingPtr& go_even);
// θ(B(μ)* x) == B(μ)*(π* x) in BO(2n)[w].
bool theta_compat_check(const Polynomial& x);
bool theta_compat_check(int n, const Polynomial& x);

}  // namespace quadric
