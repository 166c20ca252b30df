#include "quadric/primitivity.hpp"

#include <memory>
#include <mutex>

#include "quadric/errors.hpp"
#include "quadric/go_even.hpp"
#include "quadric/maps.hpp"
#include "quadric/toda.hpp"

namespace quadric {

Polynomial primitivity_defect(const Polynomial& p) {
    const RingPtr& ring = p.ring();
    if (!ring || ring->is_extended())
        throw ContextMismatch("primitivity check needs an unextended ring");
    switch (ring->family()) {
    case Family::BGO_even: {
        RingPtr gt = with_t(ring);
        const Polynomial diff = action_even(ring)(p) + convert(p, gt);
        const std::size_t t = gt->index_of("t");
        const Polynomial tv = Polynomial::variable(gt, t);
        Polynomial out = Polynomial::zero(gt);
        for (const auto& [e, coeff] : diff.split_by(t))
            out += convert(normal_form(convert(coeff, ring)), gt) * tv.pow(static_cast<unsigned>(e));
        return out;
    }
    case Family::BGO_odd: {
        const HomMap act = action_odd(ring);
        return act(p) + convert(p, act.target());
    }
    case Family::BO:
    case Family::BGL:
    case Family::TodaA: {
        const TodaContext& ctx = toda_context(ring);
        return ctx.coaction(p) + convert(p, ctx.extended());
    }
    default:
        throw ContextMismatch("no coaction is defined on " + ring->describe());
    }
}

bool primitive_check(const Polynomial& p) {
    const RingPtr& ring = p.ring();
    if (ring && ring->family() == Family::BGO_even && !ring->is_extended()) {
        RingPtr gt = with_t(ring);
        const Polynomial diff = action_even(ring)(p) + convert(p, gt);
        for (const auto& [e, coeff] : diff.split_by(gt->index_of("t")))
            if (!psi_embed(convert(coeff, ring)).is_zero())
                return false;
        return true;
    }
    return primitivity_defect(p).is_zero();
}

namespace {

// "delta_{2,3}" -> {2,3}
std::uint32_t label_mask(const std::string& label) {
    std::vector<int> elems;
    for (std::size_t pos = label.find('{') + 1; pos < label.size();) {
        std::size_t end = label.find_first_of(",}", pos);
        elems.push_back(std::stoi(label.substr(pos, end - pos)));
        pos = end + 1;
    }
    return mask_of(elems);
}

Rank4m2Construction build(int m, int cap) {
    if (m < 0)
        throw RankError("m must be nonnegative");
    Rank4m2Construction out;
    const int N = 4 * m + 2;
    const int top = 2 * m + 1;
    out.m = m;
    out.go = make_ring(Family::BGO_even, N, cap);
    out.bo = make_ring(Family::BO, N, cap);
    out.gl = make_ring(Family::BGL, N, cap);
    const RingPtr& go = out.go;

    const TodaContext& bo_ctx = toda_context(out.bo);
    out.toda = bo_ctx.toda_generators();

    auto pull = [&](const Polynomial& h) {
        Expression e = express_with_kernel(h, go);
        out.max_ambiguity = std::max(out.max_ambiguity, e.ambiguity.size());
        for (const auto& k : e.ambiguity)
            if (!psi_embed(k).is_zero())
                out.pullbacks_unique = false;
        return e.value;
    };

    for (int i = 1; i <= top; ++i)
        out.alpha_prime[i] = pull(out.toda.at("alpha_" + std::to_string(2 * i - 1)));
    for (const auto& [label, value] : out.toda.entries) {
        if (label.rfind("delta_", 0) == 0)
            out.delta_prime[label_mask(label)] = pull(value);
    }

    const TodaContext& gl_ctx = toda_context(out.gl);
    const auto& c_hat = gl_ctx.hat_elements();
    for (int k = 1; k <= N; ++k)
        out.c_hat[k] = c_hat[static_cast<std::size_t>(k)];
    const HomMap p_star = chern_to_go_even(go);
    const auto& w_hat = bo_ctx.hat_elements();
    const Polynomial w1 = bo_ctx.x(1);
    const Polynomial w2 = bo_ctx.x(2);
    for (int i = 1; i <= top; ++i) {
        out.b_hat[i] = p_star(c_hat[static_cast<std::size_t>(2 * i)]);
        if (i < 2)
            continue;
        out.g[i] = pull(w_hat[static_cast<std::size_t>(2 * i)] * w1 +
                        w_hat[static_cast<std::size_t>(2 * i - 1)] * w2);
        out.beta_prime[i] = out.b_hat[i] + out.alpha_prime[i] * out.g[i];
    }

    GeneratorSet& gs = out.generators;
    gs.ring = go;
    gs.add("lambda", Polynomial::variable(go, go->lambda()));
    for (const auto& [i, v] : out.alpha_prime)
        gs.add("alpha'_" + std::to_string(2 * i - 1), v);
    for (const auto& [i, v] : out.beta_prime)
        gs.add("beta'_" + std::to_string(4 * i), v);
    for (const auto& [label, value] : out.toda.entries)
        if (label.rfind("delta_", 0) == 0)
            gs.add("delta'_" + label.substr(6), out.delta_prime.at(label_mask(label)));
    if (!out.pullbacks_unique)
        throw InternalInvariantViolation("rank-" + std::to_string(N) +
                                         " pullback is not unique in H*(BGO)");
    return out;
}

}  // namespace

const Rank4m2Construction& rank_4m2_construction(int m, int degree_cap) {
    static std::mutex mutex;
    static std::map<std::pair<int, int>, std::unique_ptr<Rank4m2Construction>> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find({m, degree_cap}); it != cache.end())
            return *it->second;
    }
    auto built = std::make_unique<Rank4m2Construction>(build(m, degree_cap));
    std::lock_guard lock(mutex);
    return *cache.try_emplace({m, degree_cap}, std::move(built)).first->second;
}

GeneratorSet construct_rank_4m2_generators(int m) { return rank_4m2_construction(m).generators; }

GeneratorSet ph_generators(const RingPtr& ring) {
    if (!ring || ring->is_extended())
        throw ContextMismatch("ph_generators needs an unextended ring");
    GeneratorSet gs{ring, {}};
    if (ring->family() == Family::BGO_odd) {
        for (int i = 2; i <= ring->rank(); ++i)
            gs.add("wh" + std::to_string(i), Polynomial::variable(ring, ring->what(i)));
        return gs;
    }
    if (ring->family() != Family::BGO_even)
        throw ContextMismatch("ph_generators needs a BGO ring, got " + ring->describe());
    const int r = ring->rank();
    if (r % 4 == 2)
        return rank_4m2_construction((r - 2) / 4, ring->degree_cap()).generators;
    if (r == 4) {
        auto v = [&](std::string_view name) { return Polynomial::variable(ring, name); };
        gs.add("lambda", v("lambda"));
        gs.add("a1", v("a1"));
        gs.add("a1*a3+b4", v("a1") * v("a3") + v("b4"));
        gs.add("a3^2+a1*d{1,2}", v("a3").square() + v("a1") * v("d{1,2}"));
        return gs;
    }
    throw UnsupportedRank("no primitive generating set is known for BGO(" + std::to_string(r) +
                          ")");
}

}  // namespace quadric
