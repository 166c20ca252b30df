#include "quadric/toda.hpp"

#include <unordered_map>

#include "quadric/binomial.hpp"
#include "quadric/enumerate.hpp"
#include "quadric/errors.hpp"
#include "quadric/gf2.hpp"

namespace quadric {

void GeneratorSet::add(std::string label, Polynomial value) {
    if (find(label))
        throw PreconditionViolation("duplicate generator label '" + label + "'");
    entries.emplace_back(std::move(label), std::move(value));
}

const Polynomial* GeneratorSet::find(std::string_view label) const {
    for (const auto& [name, value] : entries)
        if (name == label)
            return &value;
    return nullptr;
}

const Polynomial& GeneratorSet::at(std::string_view label) const {
    if (const Polynomial* p = find(label))
        return *p;
    throw UnboundVariable(std::string(label));
}

namespace {

std::string gen_name(VarKind kind, int i) {
    switch (kind) {
    case VarKind::W: return "w" + std::to_string(i);
    case VarKind::CBar: return "cb" + std::to_string(i);
    default: return "x" + std::to_string(i);
    }
}

}  // namespace

TodaContext::TodaContext(RingPtr ring) : ring_(std::move(ring)) {
    if (!ring_ || ring_->is_extended())
        throw ContextMismatch("TodaContext needs an unextended BO, BGL or TodaA ring");
    const VarKind kind = ring_->toda_kind();
    scale_ = ring_->toda_scale();
    n_ = ring_->rank();
    q_ = n_ & -n_;
    ext_ = extend_ring(ring_, {kind == VarKind::W ? w_class_var() : t_var(scale_)});
    tvar_ = ext_->index_of(kind == VarKind::W ? "w" : "t");
    gens_.assign(static_cast<std::size_t>(n_) + 1, 0);
    for (int i = 1; i <= n_; ++i)
        gens_[static_cast<std::size_t>(i)] = ring_->index_of(gen_name(kind, i));

    std::vector<Polynomial> ext_gens(static_cast<std::size_t>(n_) + 1);
    ext_gens[0] = Polynomial::one(ext_);
    for (int i = 1; i <= n_; ++i)
        ext_gens[static_cast<std::size_t>(i)] =
            Polynomial::variable(ext_, ext_->index_of(gen_name(kind, i)));
    phi_ = HomMap(ring_, ext_);
    for (int r = 1; r <= n_; ++r) {
        Polynomial img = Polynomial::zero(ext_);
        for (int i = 0; i <= r; ++i)
            if (binom_mod2(n_ - i, r - i))
                img += ext_gens[static_cast<std::size_t>(i)] *
                       Polynomial::variable(ext_, tvar_, 1).pow(static_cast<unsigned>(r - i));
        phi_.set(gens_[static_cast<std::size_t>(r)], img);
    }
}

Polynomial TodaContext::x(int i) const {
    if (i == 0)
        return Polynomial::one(ring_);
    if (i < 0 || i > n_)
        return Polynomial::zero(ring_);
    return Polynomial::variable(ring_, gens_[static_cast<std::size_t>(i)]);
}

Polynomial TodaContext::coaction(const Polynomial& p) const { return phi_(p); }

std::map<int, Polynomial> TodaContext::components(const Polynomial& p) const {
    std::map<int, Polynomial> out;
    for (auto& [e, coeff] : coaction(p).split_by(tvar_))
        out.emplace(e, convert(coeff, ring_));
    return out;
}

Polynomial TodaContext::d(const Polynomial& p, int i) const {
    auto parts = components(p);
    auto it = parts.find(i);
    return it == parts.end() ? Polynomial::zero(ring_) : it->second;
}

bool TodaContext::is_in_B(const Polynomial& p) const {
    for (const auto& [e, coeff] : components(p))
        if (e >= q_ && !coeff.is_zero())
            return false;
    return true;
}

bool TodaContext::is_primitive(const Polynomial& p) const {
    return coaction(p) == convert(p, ext_);
}

Polynomial TodaContext::psi_inverse(const Polynomial& a) const {
    if (a.ring() != ring_ && !a.is_zero())
        throw ContextMismatch("psi_inverse: element of " + a.ring()->describe() + ", expected " +
                              ring_->describe());
    const std::size_t xq = gens_[static_cast<std::size_t>(q_)];
    const int xq_deg = ring_->var(xq).degree;
    Polynomial out = Polynomial::zero(ring_);
    for (int deg : a.degrees()) {
        // a' = part of a not divisible by x_q.
        std::vector<Monomial> kept;
        for (const auto& m : a.homogeneous_part(deg).terms())
            if (m.exps[xq] == 0)
                kept.push_back(m);
        const Polynomial base = Polynomial::from_terms(ring_, kept);

        // Unknown y of degree deg - deg(x_q); need d_i(a' + x_q y) = 0 for i >= q.
        std::vector<Monomial> unknowns;
        if (deg >= xq_deg)
            unknowns = enumerate_monomials(*ring_, deg - xq_deg);
        const Polynomial xqp = x(q_);
        std::map<std::pair<int, Monomial>, std::size_t> rows;
        auto slot = [&](int i, const Monomial& m) {
            return rows.try_emplace({i, m}, rows.size()).first->second;
        };
        std::vector<std::vector<std::size_t>> col_rows;
        for (const auto& m : unknowns) {
            std::vector<std::size_t> r;
            for (const auto& [i, coeff] : components(xqp.times(m)))
                if (i >= q_)
                    for (const auto& term : coeff.terms())
                        r.push_back(slot(i, term));
            col_rows.push_back(std::move(r));
        }
        std::vector<std::size_t> rhs_rows;
        for (const auto& [i, coeff] : components(base))
            if (i >= q_)
                for (const auto& term : coeff.terms())
                    rhs_rows.push_back(slot(i, term));

        std::vector<BitVector> cols(unknowns.size(), BitVector(rows.size()));
        for (std::size_t j = 0; j < unknowns.size(); ++j)
            for (auto r : col_rows[j])
                cols[j].flip(r);
        BitVector rhs(rows.size());
        for (auto r : rhs_rows)
            rhs.flip(r);
        Gf2Solver solver(rows.size(), cols);
        if (solver.nullity() != 0)
            throw InternalInvariantViolation("psi_inverse: preimage is not unique in degree " +
                                             std::to_string(deg));
        auto y = solver.solve(rhs);
        if (!y)
            throw InternalInvariantViolation("psi_inverse: no preimage in B for " +
                                             base.str());
        Polynomial correction = Polynomial::zero(ring_);
        for (auto j : y->ones())
            correction += xqp.times(unknowns[j]);
        out += base + correction;
    }
    return out;
}

void TodaContext::require_4m2(const char* op) const {
    if (n_ % 4 != 2)
        throw PreconditionViolation(std::string(op) + " needs N = 4m+2, got N = " +
                                    std::to_string(n_));
}

const std::vector<Polynomial>& TodaContext::hat_elements() const {
    require_4m2("hat_elements");
    std::call_once(hats_once_, [&] {
        std::vector<Polynomial> h(static_cast<std::size_t>(n_) + 1);
        h[0] = Polynomial::one(ring_);
        h[1] = x(1);
        h[2] = x(2);
        for (int k = 2; 2 * k <= n_; ++k) {
            h[static_cast<std::size_t>(2 * k)] = psi_inverse(x(2 * k));
            h[static_cast<std::size_t>(2 * k - 1)] = d(h[static_cast<std::size_t>(2 * k)], 1);
        }
        hats_ = std::move(h);
    });
    return hats_;
}

Polynomial TodaContext::recursion_hat(int k) const {
    require_4m2("recursion_hat");
    const int r = (k + 1) / 2;
    std::vector<Polynomial> s{Polynomial::one(ring_)}, t{Polynomial::zero(ring_)};
    for (int i = 1; i <= 2 * r; ++i) {
        s.push_back(x(2) * t[static_cast<std::size_t>(i - 1)]);
        t.push_back(s[static_cast<std::size_t>(i - 1)] + x(1) * t[static_cast<std::size_t>(i - 1)]);
    }
    const auto& st = (k % 2 == 0) ? s : t;
    Polynomial out = Polynomial::zero(ring_);
    for (int i = 0; i <= 2 * r; ++i)
        if (binom_mod2(n_ - 2 * r + i, i))
            out += x(2 * r - i) * st[static_cast<std::size_t>(i)];
    return out;
}

std::vector<std::string> TodaContext::recursion_discrepancies() const {
    std::vector<std::string> out;
    const auto& h = hat_elements();
    for (int k = 3; k <= n_; ++k) {
        Polynomial rec = recursion_hat(k);
        if (rec != h[static_cast<std::size_t>(k)])
            out.push_back("k=" + std::to_string(k) + ": closed formula gives " + rec.str() +
                          ", defining property gives " + h[static_cast<std::size_t>(k)].str());
    }
    return out;
}

Polynomial TodaContext::star(const Polynomial& b, const Polynomial& c) const {
    return b * c + d(b, 1) * d(c, 1) * x(2);
}

GeneratorSet TodaContext::toda_generators() const {
    require_4m2("toda_generators");
    const auto& h = hat_elements();
    const int top = n_ / 2;  // 2m+1
    GeneratorSet gs{ring_, {}};
    for (int k = 1; k <= top; ++k)
        gs.add("alpha_" + std::to_string(2 * k - 1), h[static_cast<std::size_t>(2 * k - 1)]);
    for (int k = 2; k <= top; ++k) {
        const Polynomial& even = h[static_cast<std::size_t>(2 * k)];
        const Polynomial& odd = h[static_cast<std::size_t>(2 * k - 1)];
        gs.add("beta_" + std::to_string(4 * k), star(even, even) + x(1) * odd * even);
    }
    // T ⊆ {2..top}; bit j of `sub` stands for element j+2.
    const int span = top - 1;
    std::vector<std::uint32_t> sets;
    for (std::uint32_t sub = 1; sub < (1u << span); ++sub)
        if (mask_size(sub) >= 2)
            sets.push_back(sub << 1);
    std::stable_sort(sets.begin(), sets.end(), [](std::uint32_t l, std::uint32_t r) {
        if (mask_size(l) != mask_size(r))
            return mask_size(l) < mask_size(r);
        return mask_elements(l) < mask_elements(r);
    });
    for (std::uint32_t t : sets) {
        Polynomial prod;
        bool first = true;
        for (int p : mask_elements(t)) {
            const Polynomial& f = h[static_cast<std::size_t>(2 * p)];
            prod = first ? f : star(prod, f);
            first = false;
        }
        std::string label = "delta_{";
        for (int p : mask_elements(t))
            label += (label.back() == '{' ? "" : ",") + std::to_string(p);
        gs.add(label + "}", d(prod, 1));
    }
    return gs;
}

const TodaContext& toda_context(const RingPtr& ring) {
    static std::mutex mutex;
    static std::unordered_map<const Ring*, std::unique_ptr<TodaContext>> contexts;
    std::lock_guard lock(mutex);
    auto& slot = contexts[ring.get()];
    if (!slot)
        slot = std::make_unique<TodaContext>(ring);
    return *slot;
}

Polynomial coaction_phi(const Polynomial& p) { return toda_context(p.ring()).coaction(p); }
Polynomial d_i_op(const Polynomial& p, int i) { return toda_context(p.ring()).d(p, i); }
bool is_in_B(const Polynomial& p) { return toda_context(p.ring()).is_in_B(p); }
Polynomial psi_inverse(const Polynomial& a) { return toda_context(a.ring()).psi_inverse(a); }

std::vector<Polynomial> hat_elements(int N) {
    return toda_context(make_ring(Family::TodaA, N)).hat_elements();
}

Polynomial star_product(const Polynomial& b, const Polynomial& c) {
    return toda_context(b.ring()).star(b, c);
}

GeneratorSet toda_generators(int N) {
    return toda_context(make_ring(Family::TodaA, N)).toda_generators();
}

GeneratorSet toda_generators_N4() {
    RingPtr a = make_ring(Family::TodaA, 4);
    const TodaContext& ctx = toda_context(a);
    GeneratorSet gs{a, {}};
    gs.add("x1", ctx.x(1));
    gs.add("d4", ctx.x(2).square() + ctx.x(1) * ctx.x(3));
    gs.add("d6", ctx.x(3).square() + ctx.x(1).square() * ctx.x(4) + ctx.x(1) * ctx.x(2) * ctx.x(3));
    return gs;
}

bool primitive_check_A(const Polynomial& p) { return toda_context(p.ring()).is_primitive(p); }

}  // namespace quadric
