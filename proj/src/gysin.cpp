#include "quadric/gysin.hpp"

#include "quadric/errors.hpp"
#include "quadric/go_even.hpp"
#include "quadric/maps.hpp"

namespace quadric {

namespace {

void require_bo(const RingPtr& ring, bool even, const char* op) {
    if (!ring || ring->family() != Family::BO || ring->is_extended() ||
        (ring->rank() % 2 == 0) != even)
        throw ContextMismatch(std::string(op) + ": unexpected ring " +
                              (ring ? ring->describe() : "<none>"));
}

}  // namespace

Monomial MonomialFactorization::reassemble(const Ring& bo) const {
    Monomial m = monomial_product(odd_part, even_square_part);
    for (int i : mask_elements(squarefree_even)) {
        const std::size_t v = bo.w(2 * i);
        m.exps[v] += 1;
        m.degree += bo.var(v).degree;
    }
    return m;
}

MonomialFactorization factorize(const Ring& bo, const Monomial& m) {
    MonomialFactorization f;
    for (std::size_t v = 0; v < bo.size(); ++v) {
        const VarSpec& spec = bo.var(v);
        if (spec.kind != VarKind::W)
            throw ContextMismatch("factorize expects a BO ring");
        const int e = m.exps[v];
        if (!e)
            continue;
        if (spec.index % 2 == 1) {
            f.odd_part.exps[v] = static_cast<std::uint8_t>(e);
            f.odd_part.degree += e * spec.degree;
        } else {
            const int sq = e - e % 2;
            f.even_square_part.exps[v] = static_cast<std::uint8_t>(sq);
            f.even_square_part.degree += sq * spec.degree;
            if (e % 2)
                f.squarefree_even |= 1u << (spec.index / 2 - 1);
        }
    }
    return f;
}

Polynomial derivation_s(const Polynomial& p) {
    const RingPtr& bo = p.ring();
    if (!bo || bo->family() != Family::BO)
        throw ContextMismatch("derivation_s needs a BO ring");
    const int top = bo->rank() / 2;
    std::vector<Monomial> terms;
    for (const auto& m : p.terms()) {
        for (int i = 1; i <= top; ++i) {
            const std::size_t even = bo->w(2 * i);
            const std::size_t odd = bo->w(2 * i - 1);
            // ∂/∂w_{2i} of w_{2i}^e is e w_{2i}^{e-1}: vanishes for even e.
            if (m.exps[even] % 2 == 0)
                continue;
            Monomial out = m;
            out.exps[even] -= 1;
            out.exps[odd] += 1;
            out.degree -= 1;
            terms.push_back(out);
        }
    }
    return Polynomial::from_terms(bo, std::move(terms));
}

Polynomial gysin_d_even(const Polynomial& p) {
    require_bo(p.ring(), true, "gysin_d_even");
    const RingPtr& bo = p.ring();
    RingPtr go = make_ring(Family::BGO_even, bo->rank(), bo->degree_cap());
    const HomMap lift = [&] {
        // f(w_odd) g(w_even^2) -> f(a) g(b).
        HomMap m(bo, go);
        for (int i = 1; i <= bo->rank() / 2; ++i) {
            m.set(bo->w(2 * i - 1), Polynomial::variable(go, go->a(i)));
            m.set(bo->w(2 * i), Polynomial::zero(go));
        }
        return m;
    }();
    std::vector<Monomial> terms;
    for (const auto& m : p.terms()) {
        MonomialFactorization f = factorize(*bo, m);
        if (f.squarefree_even == 0)
            continue;
        Polynomial base = lift(Polynomial::monomial(bo, f.odd_part));
        for (int i = 1; i <= bo->rank() / 2; ++i) {
            const int e = f.even_square_part.exps[bo->w(2 * i)];
            if (e)
                base = base * Polynomial::variable(go, go->b(i), e / 2);
        }
        Polynomial r = base * d_or_a(go, f.squarefree_even);
        terms.insert(terms.end(), r.terms().begin(), r.terms().end());
    }
    return Polynomial::from_terms(go, std::move(terms));
}

Polynomial gysin_d_odd(const Polynomial& p) {
    RingPtr ring = p.ring();
    if (!ring)
        throw ContextMismatch("gysin_d_odd on an unbound polynomial");
    Polynomial hat;
    if (ring->family() == Family::BO) {
        require_bo(ring, false, "gysin_d_odd");
        hat = w_to_what(ring)(p);
    } else if (ring->family() == Family::BOHat && !ring->is_extended()) {
        hat = p;
    } else {
        throw ContextMismatch("gysin_d_odd needs BO(2n+1) or BOhat(2n+1), got " + ring->describe());
    }
    const RingPtr& hr = hat.ring();
    RingPtr go = make_ring(Family::BGO_odd, hr->rank(), hr->degree_cap());
    const Polynomial c = Polynomial::variable(go, go->c());
    Polynomial out = Polynomial::zero(go);
    for (const auto& [e, coeff] : hat.split_by(hr->index_of("w"))) {
        if (e % 2 == 0)
            continue;
        out += c.pow(static_cast<unsigned>(e / 2)) * convert(coeff, go);
    }
    return out;
}

namespace {

int check_parity(int parity) {
    if (parity != 0 && parity != 1)
        throw PreconditionViolation("parity must be 0 or 1");
    return parity;
}

}  // namespace

Polynomial boundary_odd_to_even(const Polynomial& h, int parity) {
    const RingPtr& go = h.ring();
    if (!go || go->family() != Family::BGO_odd || go->is_extended())
        throw ContextMismatch("boundary_odd_to_even needs a BGO_odd ring");
    if (go->rank() < 3)
        throw RankError("boundary_odd_to_even needs rank 2n+1 >= 3");
    if (h.involves(go->c()))
        throw PreconditionViolation("boundary_odd_to_even expects a polynomial in the ŵ's only");
    const int n = go->half_rank();
    RingPtr bo_odd = make_ring(Family::BO, 2 * n + 1, go->degree_cap());
    RingPtr bo_even = make_ring(Family::BO, 2 * n, go->degree_cap());
    // ŵ -> w-coordinates, then w_{2n+1} = 0.
    HomMap restrict_map(bo_odd, bo_even);
    for (int i = 1; i <= 2 * n; ++i)
        restrict_map.set(bo_odd->w(i), Polynomial::variable(bo_even, bo_even->w(i)));
    restrict_map.set(bo_odd->w(2 * n + 1), Polynomial::zero(bo_even));
    if (!check_parity(parity))
        return Polynomial::zero(make_ring(Family::BGO_even, 2 * n, go->degree_cap()));
    return gysin_d_even(restrict_map(pistar_odd(go)(h)));
}

Polynomial boundary_even_to_odd(const Polynomial& h, int parity) {
    const RingPtr& go = h.ring();
    if (!go || go->family() != Family::BGO_even || go->is_extended())
        throw ContextMismatch("boundary_even_to_odd needs a BGO_even ring");
    const int n = go->half_rank() - 1;
    RingPtr bo_big = make_ring(Family::BO, 2 * n + 2, go->degree_cap());
    RingPtr bo_odd = make_ring(Family::BO, 2 * n + 1, go->degree_cap());
    HomMap restrict_map(bo_big, bo_odd);
    for (int i = 1; i <= 2 * n + 1; ++i)
        restrict_map.set(bo_big->w(i), Polynomial::variable(bo_odd, bo_odd->w(i)));
    restrict_map.set(bo_big->w(2 * n + 2), Polynomial::zero(bo_odd));
    if (!check_parity(parity))
        return Polynomial::zero(make_ring(Family::BGO_odd, 2 * n + 1, go->degree_cap()));
    return gysin_d_odd(restrict_map(pistar_even_map(go)(h)));
}

}  // namespace quadric
