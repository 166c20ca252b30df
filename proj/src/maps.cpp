#include "quadric/maps.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "quadric/binomial.hpp"
#include "quadric/errors.hpp"
#include "quadric/toda.hpp"

namespace quadric {

namespace {

void require(const RingPtr& ring, Family family, const char* op) {
    if (!ring || ring->family() != family || ring->is_extended())
        throw ContextMismatch(std::string(op) + ": unexpected ring " +
                              (ring ? ring->describe() : "<none>"));
}

Polynomial var(const RingPtr& r, std::size_t i, int e = 1) { return Polynomial::variable(r, i, e); }

Polynomial power(const Polynomial& p, int e) { return p.pow(static_cast<unsigned>(e)); }

// C(m,r) u^r + Σ_{2<=i<=r} C(m-i, r-i) u^{r-i} g(i); shared by π*_odd, the
// Coordinate change w <-> wh and the odd Chern map.
template <class Gen>
Polynomial odd_rank_formula(const RingPtr& target, int lead, int m, int r, const Polynomial& u,
                            Gen&& g) {
    Polynomial out = Polynomial::zero(target);
    if (binom_mod2(lead, r))
        out += power(u, r);
    for (int i = 2; i <= r; ++i)
        if (binom_mod2(m - i, r - i))
            out += power(u, r - i) * g(i);
    return out;
}

}  // namespace

HomMap pistar_odd(const RingPtr& go) {
    require(go, Family::BGO_odd, "pistar_odd");
    const int n = go->half_rank();
    RingPtr bo = make_ring(Family::BO, 2 * n + 1, go->degree_cap());
    HomMap m(go, bo);
    const Polynomial w1 = var(bo, bo->w(1));
    m.set(go->c(), w1.square());
    for (int r = 2; r <= 2 * n + 1; ++r)
        m.set(go->what(r), odd_rank_formula(bo, 2 * n, 2 * n + 1, r, w1,
                                            [&](int i) { return var(bo, bo->w(i)); }));
    return m;
}

HomMap pistar_odd(int n) { return pistar_odd(make_ring(Family::BGO_odd, 2 * n + 1)); }

HomMap pistar_even(const RingPtr& go) {
    require(go, Family::BGO_even, "pistar_even");
    return pistar_even_map(go);
}

HomMap pistar_even(int n) { return pistar_even(make_ring(Family::BGO_even, 2 * n)); }

HomMap w_to_what(const RingPtr& bo) {
    require(bo, Family::BO, "w_to_what");
    if (bo->rank() % 2 != 1)
        throw RankError("w_to_what needs BO of odd rank");
    const int n = bo->half_rank();
    RingPtr hat = make_ring(Family::BOHat, 2 * n + 1, bo->degree_cap());
    HomMap m(bo, hat);
    const Polynomial w = var(hat, hat->index_of("w"));
    m.set(bo->w(1), w);
    for (int r = 2; r <= 2 * n + 1; ++r)
        m.set(bo->w(r), odd_rank_formula(hat, 2 * n + 1, 2 * n + 1, r, w,
                                         [&](int i) { return var(hat, hat->what(i)); }));
    return m;
}

HomMap what_to_w(const RingPtr& hat) {
    require(hat, Family::BOHat, "what_to_w");
    const int n = hat->half_rank();
    RingPtr bo = make_ring(Family::BO, 2 * n + 1, hat->degree_cap());
    HomMap m(hat, bo);
    const Polynomial w1 = var(bo, bo->w(1));
    m.set("w", w1);
    for (int r = 2; r <= 2 * n + 1; ++r)
        m.set(hat->what(r), odd_rank_formula(bo, 2 * n, 2 * n + 1, r, w1,
                                             [&](int i) { return var(bo, bo->w(i)); }));
    return m;
}

HomMap w_to_what(int n) { return w_to_what(make_ring(Family::BO, 2 * n + 1)); }
HomMap what_to_w(int n) { return what_to_w(make_ring(Family::BOHat, 2 * n + 1)); }

Polynomial chern_odd_correction(const RingPtr& go, int r) {
    require(go, Family::BGO_even, "chern_odd_correction");
    const int n = go->half_rank();
    if (r < 1 || r > n)
        throw PreconditionViolation("chern_odd_correction: r out of range");
    const Polynomial lambda = var(go, go->lambda());
    // A_{r,k} = C(n-k, 2r-2k) λ^{2r-2k}; B = A^{-1} by forward substitution.
    auto A = [&](int i, int k) {
        return binom_mod2(n - k, 2 * i - 2 * k) ? power(lambda, 2 * i - 2 * k)
                                                : Polynomial::zero(go);
    };
    std::vector<std::vector<Polynomial>> B(static_cast<std::size_t>(n) + 1,
                                           std::vector<Polynomial>(static_cast<std::size_t>(n) + 1,
                                                                   Polynomial::zero(go)));
    for (int i = 1; i <= n; ++i) {
        B[i][i] = Polynomial::one(go);
        for (int k = i - 1; k >= 1; --k) {
            Polynomial s = Polynomial::zero(go);
            for (int j = k; j < i; ++j)
                s += A(i, j) * B[j][k];
            B[i][k] = s;
        }
    }
    Polynomial f = binom_mod2(n, 2 * r - 1) ? power(lambda, 2 * r - 2) : Polynomial::zero(go);
    for (int k = 1; k <= r - 1; ++k) {
        if (!binom_mod2(n - k, 2 * r - 1 - 2 * k))
            continue;
        Polynomial inner = Polynomial::zero(go);
        for (int j = 1; j <= k; ++j) {
            Polynomial bj = var(go, go->b(j));
            if (binom_mod2(n, 2 * j))
                bj += power(lambda, 2 * j);
            inner += B[k][j] * bj;
        }
        f += power(lambda, 2 * r - 2 - 2 * k) * inner;
    }
    return f;
}

HomMap chern_to_go_even(const RingPtr& go) {
    require(go, Family::BGO_even, "chern_to_go_even");
    const int n = go->half_rank();
    RingPtr gl = make_ring(Family::BGL, 2 * n, go->degree_cap());
    HomMap m(gl, go);
    const Polynomial lambda = var(go, go->lambda());
    for (int r = 1; r <= n; ++r) {
        m.set(gl->cbar(2 * r - 1), var(go, go->a(r)).square() + lambda * chern_odd_correction(go, r));
        m.set(gl->cbar(2 * r), var(go, go->b(r)));
    }
    return m;
}

HomMap chern_to_go_even(int n) { return chern_to_go_even(make_ring(Family::BGO_even, 2 * n)); }

HomMap chern_to_go_odd(const RingPtr& go) {
    require(go, Family::BGO_odd, "chern_to_go_odd");
    const int n = go->half_rank();
    RingPtr gl = make_ring(Family::BGL, 2 * n + 1, go->degree_cap());
    HomMap m(gl, go);
    const Polynomial c = var(go, go->c());
    for (int r = 1; r <= 2 * n + 1; ++r)
        m.set(gl->cbar(r), odd_rank_formula(go, 2 * n + 1, 2 * n + 1, r, c,
                                            [&](int i) { return var(go, go->what(i)).square(); }));
    return m;
}

HomMap chern_to_go_odd(int n) { return chern_to_go_odd(make_ring(Family::BGO_odd, 2 * n + 1)); }

RingPtr with_t(const RingPtr& ring) { return extend_ring(ring, {t_var(2)}); }

const HomMap& bo_coaction(const RingPtr& bo) {
    require(bo, Family::BO, "bo_coaction");
    return toda_context(bo).phi();
}

namespace {

// B(μ)* d_T via the BO side: push π*(d_T) through the BO coaction, read off
// the w^{2k} coefficients, pull each back through π*.
Polynomial action_on_d(const RingPtr& go, const RingPtr& go_t, std::uint32_t mask) {
    RingPtr bo = make_ring(Family::BO, go->rank(), go->degree_cap());
    const TodaContext& ctx = toda_context(bo);
    const Polynomial image = ctx.coaction(pistar_even_map(go)(var(go, go->d(mask))));
    const Polynomial t = var(go_t, go_t->index_of("t"));
    Polynomial out = Polynomial::zero(go_t);
    for (const auto& [e, coeff] : image.split_by(ctx.coaction_var())) {
        if (e % 2 != 0)
            throw InternalInvariantViolation("coaction of pi*(" + d_name(mask) +
                                             ") has an odd power of w");
        const Polynomial g = express_in_generators(convert(coeff, bo), go);
        out += convert(g, go_t) * power(t, e / 2);
    }
    return out;
}

}  // namespace

const HomMap& action_even(const RingPtr& go) {
    require(go, Family::BGO_even, "action_even");
    static std::mutex mutex;
    static std::map<const Ring*, std::shared_ptr<const HomMap>> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(go.get()); it != cache.end())
            return *it->second;
    }
    const int n = go->half_rank();
    RingPtr gt = with_t(go);
    auto lift = [&](const Polynomial& p) { return convert(p, gt); };
    const Polynomial t = var(gt, gt->index_of("t"));
    const Polynomial lambda = var(gt, gt->lambda());
    auto m = std::make_shared<HomMap>(go, gt);
    m->set(go->lambda(), lambda);
    for (int r = 1; r <= n; ++r) {
        Polynomial a = Polynomial::zero(gt);
        for (int i = 1; i <= r; ++i)
            if (binom_mod2(2 * n + 1 - 2 * i, 2 * r - 2 * i))
                a += var(gt, gt->a(i)) * power(t, r - i);
        m->set(go->a(r), a);

        Polynomial b = binom_mod2(2 * n, 2 * r) ? power(t, 2 * r) : Polynomial::zero(gt);
        for (int i = 1; i <= r; ++i) {
            if (!binom_mod2(2 * n - 2 * i, 2 * r - 2 * i))
                continue;
            Polynomial inner = var(gt, gt->b(i)) +
                               (lambda * lift(chern_odd_correction(go, i)) +
                                var(gt, gt->a(i)).square()) * t;
            b += inner * power(t, 2 * r - 2 * i);
        }
        m->set(go->b(r), b);
    }
    for (std::size_t i = 0; i < go->size(); ++i)
        if (go->var(i).kind == VarKind::D)
            m->set(i, action_on_d(go, gt, go->var(i).set_mask));
    std::lock_guard lock(mutex);
    return *cache.try_emplace(go.get(), std::move(m)).first->second;
}

HomMap action_even(int n) { return action_even(make_ring(Family::BGO_even, 2 * n)); }

HomMap action_odd(const RingPtr& go) {
    require(go, Family::BGO_odd, "action_odd");
    RingPtr gt = with_t(go);
    HomMap m = HomMap::inclusion(go, gt);
    m.set(go->c(), var(gt, gt->c()) + var(gt, gt->index_of("t")));
    return m;
}

HomMap action_odd(int n) { return action_odd(make_ring(Family::BGO_odd, 2 * n + 1)); }

namespace {

Polynomial dpq_formula(const RingPtr& go, int p, int q, bool weighted) {
    require(go, Family::BGO_even, "action_even_dpq_closed");
    const int n = go->half_rank();
    if (!(1 <= p && p < q && q <= n))
        throw PreconditionViolation("action_even_dpq_closed needs 1 <= p < q <= n");
    RingPtr gt = with_t(go);
    const Polynomial t = var(gt, gt->index_of("t"));
    Polynomial out = Polynomial::zero(gt);
    for (int i = 1; i <= p; ++i)
        if (binom_mod2(2 * n, 2 * q) && binom_mod2(2 * n - 2 * i, 2 * p - 2 * i))
            out += var(gt, gt->a(i)) * power(t, p + q - i);
    for (int j = 1; j <= q; ++j)
        if (binom_mod2(2 * n, 2 * p) && binom_mod2(2 * n - 2 * j, 2 * q - 2 * j))
            out += var(gt, gt->a(j)) * power(t, p + q - j);
    for (int i = 1; i <= p; ++i)
        for (int j = 1; j <= q; ++j)
            if (i != j && (!weighted || (binom_mod2(2 * n - 2 * i, 2 * p - 2 * i) &&
                                         binom_mod2(2 * n - 2 * j, 2 * q - 2 * j))))
                out += var(gt, gt->d(mask_of({i, j}))) * power(t, p + q - i - j);
    return out;
}

}  // namespace

Polynomial action_even_dpq_closed(const RingPtr& go, int p, int q) {
    return dpq_formula(go, p, q, false);
}

Polynomial action_even_dpq_weighted(const RingPtr& go, int p, int q) {
    return dpq_formula(go, p, q, true);
}

HomMap theta_map(const RingPtr& go) {
    require(go, Family::BGO_even, "theta_map");
    RingPtr gt = with_t(go);
    RingPtr bo = make_ring(Family::BO, go->rank(), go->degree_cap());
    const TodaContext& ctx = toda_context(bo);
    RingPtr bow = ctx.extended();
    const HomMap& pi = pistar_even_map(go);
    HomMap m(gt, bow);
    for (std::size_t i = 0; i < go->size(); ++i)
        m.set(gt->index_of(go->var(i).name), convert(pi.image(i), bow));
    m.set("t", var(bow, ctx.coaction_var(), 2));
    return m;
}

bool theta_compat_check(const Polynomial& x) {
    const RingPtr& go = x.ring();
    require(go, Family::BGO_even, "theta_compat_check");
    RingPtr bo = make_ring(Family::BO, go->rank(), go->degree_cap());
    const Polynomial lhs = theta_map(go)(action_even(go)(x));
    const Polynomial rhs = bo_coaction(bo)(pistar_even_map(go)(x));
    return lhs == rhs;
}

bool theta_compat_check(int n, const Polynomial& x) {
    if (x.ring()->half_rank() != n)
        throw ContextMismatch("theta_compat_check: rank mismatch");
    return theta_compat_check(x);
}

}  // namespace quadric
