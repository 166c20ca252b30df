#include "quadric/go_even.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>

#include "quadric/enumerate.hpp"
#include "quadric/errors.hpp"
#include "quadric/gf2.hpp"

namespace quadric {

bool is_go_even(const Ring& ring) { return ring.family() == Family::BGO_even; }

namespace {

void require_go_even(const RingPtr& ring, const char* op) {
    if (!ring || !is_go_even(*ring))
        throw ContextMismatch(std::string(op) + " needs a BGO_even context, got " +
                              (ring ? ring->describe() : "<none>"));
}

// Dense coordinates for a family of polynomials: every monomial that occurs
// gets a row.
class RowIndex {
public:
    std::size_t slot(const Monomial& m) {
        auto [it, inserted] = rows_.try_emplace(m, rows_.size());
        return it->second;
    }
    std::optional<std::size_t> find(const Monomial& m) const {
        auto it = rows_.find(m);
        if (it == rows_.end())
            return std::nullopt;
        return it->second;
    }
    std::size_t size() const { return rows_.size(); }

private:
    std::unordered_map<Monomial, std::size_t, MonomialHash> rows_;
};

// One degree of a "which combination of these columns gives this vector"
// problem, with the column images stored sparsely until the solver is built.
struct DegreeTable {
    std::vector<Monomial> columns;
    RowIndex bo_rows;
    RowIndex lam_rows;
    Gf2Solver solver;
};

template <class Key, class Value>
class Memo {
public:
    template <class Make>
    std::shared_ptr<const Value> get(const Key& key, Make&& make) {
        {
            std::lock_guard lock(mutex_);
            if (auto it = map_.find(key); it != map_.end())
                return it->second;
        }
        auto value = std::make_shared<const Value>(make());
        std::lock_guard lock(mutex_);
        return map_.try_emplace(key, std::move(value)).first->second;
    }

private:
    std::mutex mutex_;
    std::map<Key, std::shared_ptr<const Value>> map_;
};

}  // namespace

RingPtr bo_ring_for(const RingPtr& go) {
    require_go_even(go, "bo_ring_for");
    RingPtr bo = make_ring(Family::BO, go->rank(), go->degree_cap());
    if (go->is_extended())
        bo = extend_ring(bo, go->extras());
    return bo;
}

Polynomial d_or_a(const RingPtr& go, std::uint32_t mask) {
    const int size = mask_size(mask);
    if (size == 0)
        return Polynomial::zero(go);
    if (size == 1)
        return Polynomial::variable(go, go->a(mask_elements(mask)[0]));
    return Polynomial::variable(go, go->d(mask));
}

const HomMap& pistar_even_map(const RingPtr& go) {
    require_go_even(go, "pistar_even");
    static Memo<const Ring*, HomMap> memo;
    auto built = memo.get(go.get(), [&] {
        RingPtr bo = bo_ring_for(go);
        HomMap m(go, bo);
        for (std::size_t i = 0; i < go->size(); ++i) {
            const VarSpec& v = go->var(i);
            switch (v.kind) {
            case VarKind::Lambda:
                m.set(i, Polynomial::zero(bo));
                break;
            case VarKind::A:
                m.set(i, Polynomial::variable(bo, bo->w(2 * v.index - 1)));
                break;
            case VarKind::B:
                m.set(i, Polynomial::variable(bo, bo->w(2 * v.index), 2));
                break;
            case VarKind::D: {
                Polynomial img = Polynomial::zero(bo);
                for (int e : mask_elements(v.set_mask)) {
                    Polynomial term = Polynomial::variable(bo, bo->w(2 * e - 1));
                    for (int f : mask_elements(v.set_mask))
                        if (f != e)
                            term = term * Polynomial::variable(bo, bo->w(2 * f));
                    img += term;
                }
                m.set(i, img);
                break;
            }
            default:
                m.set(i, Polynomial::variable(bo, bo->index_of(v.name)));
            }
        }
        return m;
    });
    // The memo keeps the value alive for the life of the process.
    return *built;
}

const HomMap& strip_map(const RingPtr& go) {
    require_go_even(go, "strip");
    static Memo<const Ring*, HomMap> memo;
    auto built = memo.get(go.get(), [&] {
        HomMap m = HomMap::identity(go);
        for (std::size_t i = 0; i < go->size(); ++i) {
            const VarKind k = go->var(i).kind;
            if (k == VarKind::A || k == VarKind::D)
                m.set(i, Polynomial::zero(go));
        }
        return m;
    });
    return *built;
}

EmbeddingImage psi_embed(const Polynomial& p) {
    require_go_even(p.ring(), "psi_embed");
    return {pistar_even_map(p.ring())(p), strip_map(p.ring())(p)};
}

bool eq_go_even(const Polynomial& p, const Polynomial& q) {
    if (p.ring() != q.ring())
        throw ContextMismatch("eq_go_even: operands live in different rings");
    return psi_embed(p + q).is_zero();
}

namespace {

const DegreeTable& normal_form_table(const RingPtr& go, int degree) {
    static Memo<std::pair<const Ring*, int>, DegreeTable> memo;
    return *memo.get({go.get(), degree}, [&] {
        DegreeTable t;
        t.columns = enumerate_monomials(*go, degree);
        const HomMap& pi = pistar_even_map(go);
        const HomMap& strip = strip_map(go);
        std::vector<std::vector<std::size_t>> bo_cols, lam_cols;
        for (const auto& m : t.columns) {
            Polynomial mono = Polynomial::monomial(go, m);
            std::vector<std::size_t> b, l;
            for (const auto& term : pi(mono).terms())
                b.push_back(t.bo_rows.slot(term));
            for (const auto& term : strip(mono).terms())
                l.push_back(t.lam_rows.slot(term));
            bo_cols.push_back(std::move(b));
            lam_cols.push_back(std::move(l));
        }
        const std::size_t rows = t.bo_rows.size() + t.lam_rows.size();
        std::vector<BitVector> cols(t.columns.size(), BitVector(rows));
        for (std::size_t j = 0; j < t.columns.size(); ++j) {
            for (auto r : bo_cols[j])
                cols[j].set(r);
            for (auto r : lam_cols[j])
                cols[j].set(t.bo_rows.size() + r);
        }
        t.solver = Gf2Solver(rows, cols);
        return t;
    });
}

struct ExpressTable {
    std::vector<Monomial> columns;
    RowIndex rows;
    Gf2Solver solver;
};

const ExpressTable& express_table(const RingPtr& go, int degree) {
    static Memo<std::pair<const Ring*, int>, ExpressTable> memo;
    return *memo.get({go.get(), degree}, [&] {
        ExpressTable t;
        std::vector<bool> allowed(go->size(), false);
        for (std::size_t i = 0; i < go->size(); ++i) {
            const VarKind k = go->var(i).kind;
            allowed[i] = k == VarKind::A || k == VarKind::B || k == VarKind::D;
        }
        t.columns = enumerate_monomials(*go, degree, allowed);
        const HomMap& pi = pistar_even_map(go);
        std::vector<std::vector<std::size_t>> slots;
        for (const auto& m : t.columns) {
            std::vector<std::size_t> s;
            for (const auto& term : pi(Polynomial::monomial(go, m)).terms())
                s.push_back(t.rows.slot(term));
            slots.push_back(std::move(s));
        }
        std::vector<BitVector> cols(t.columns.size(), BitVector(t.rows.size()));
        for (std::size_t j = 0; j < slots.size(); ++j)
            for (auto r : slots[j])
                cols[j].set(r);
        t.solver = Gf2Solver(t.rows.size(), cols);
        return t;
    });
}

Polynomial from_bits(const RingPtr& ring, const std::vector<Monomial>& columns,
                     const BitVector& x) {
    std::vector<Monomial> terms;
    for (auto j : x.ones())
        terms.push_back(columns[j]);
    return Polynomial::from_terms(ring, std::move(terms));
}

}  // namespace

Polynomial normal_form(const Polynomial& p) {
    require_go_even(p.ring(), "normal_form");
    const RingPtr& go = p.ring();
    Polynomial out = Polynomial::zero(go);
    for (int k : p.degrees()) {
        const DegreeTable& t = normal_form_table(go, k);
        EmbeddingImage img = psi_embed(p.homogeneous_part(k));
        BitVector rhs(t.bo_rows.size() + t.lam_rows.size());
        for (const auto& m : img.bo_part.terms()) {
            auto r = t.bo_rows.find(m);
            if (!r)
                throw InternalInvariantViolation("normal_form: Ψ image leaves its own span");
            rhs.flip(*r);
        }
        for (const auto& m : img.lambda_part.terms()) {
            auto r = t.lam_rows.find(m);
            if (!r)
                throw InternalInvariantViolation("normal_form: Ψ image leaves its own span");
            rhs.flip(t.bo_rows.size() + *r);
        }
        auto x = t.solver.solve(rhs);
        if (!x)
            throw InternalInvariantViolation("normal_form: Ψ image leaves its own span");
        out += from_bits(go, t.columns, *x);
    }
    return out;
}

Expression express_with_kernel(const Polynomial& h, const RingPtr& go) {
    require_go_even(go, "express_in_generators");
    RingPtr bo = make_ring(Family::BO, go->rank(), go->degree_cap());
    const Polynomial hb = convert(h, bo);
    Expression result{Polynomial::zero(go), {}};
    for (int k : hb.degrees()) {
        const ExpressTable& t = express_table(go, k);
        BitVector rhs(t.rows.size());
        for (const auto& m : hb.homogeneous_part(k).terms()) {
            auto r = t.rows.find(m);
            if (!r)
                throw NotInImage("degree-" + std::to_string(k) + " part of " + hb.str() +
                                 " is not in the image of pi*");
            rhs.flip(*r);
        }
        auto x = t.solver.solve(rhs);
        if (!x)
            throw NotInImage("degree-" + std::to_string(k) + " part of " + hb.str() +
                             " is not in the image of pi*");
        result.value += from_bits(go, t.columns, *x);
        for (const auto& v : t.solver.kernel_basis())
            result.ambiguity.push_back(from_bits(go, t.columns, v));
    }
    return result;
}

Polynomial express_in_generators(const Polynomial& h, const RingPtr& go) {
    return express_with_kernel(h, go).value;
}

std::vector<Relation> relation_generators(const RingPtr& go) {
    require_go_even(go, "relation_generators");
    const int n = go->half_rank();
    const std::uint32_t full = (1u << n) - 1;
    auto var = [&](std::size_t i) { return Polynomial::variable(go, i); };
    const Polynomial lambda = var(go->lambda());
    std::vector<Relation> out;

    for (int i = 1; i <= n; ++i)
        out.push_back({1, "lambda*a" + std::to_string(2 * i - 1), lambda * var(go->a(i))});
    for (std::uint32_t t = 1; t <= full; ++t)
        if (mask_size(t) >= 2)
            out.push_back({2, "lambda*" + d_name(t), lambda * var(go->d(t))});
    for (std::uint32_t t = 1; t <= full; ++t) {
        if (mask_size(t) < 3)
            continue;
        Polynomial r = Polynomial::zero(go);
        for (int i : mask_elements(t))
            r += var(go->a(i)) * d_or_a(go, t & ~(1u << (i - 1)));
        out.push_back({3, "sum a*d over " + d_name(t), r});
    }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            const std::uint32_t t = mask_of({i, j});
            Polynomial r = var(go->d(t)).square() + var(go->a(i)).square() * var(go->b(j)) +
                           var(go->a(j)).square() * var(go->b(i));
            out.push_back({4, d_name(t) + "^2", r});
        }
    for (std::uint32_t t = 1; t <= full; ++t) {
        if (mask_size(t) < 2)
            continue;
        for (std::uint32_t u = 1; u <= full; ++u) {
            if (mask_size(u) < 2 || (t == u && mask_size(t) == 2))
                continue;
            Polynomial r = var(go->d(t)) * var(go->d(u));
            for (int p : mask_elements(t)) {
                const std::uint32_t pbit = 1u << (p - 1);
                Polynomial term = var(go->a(p));
                for (int q : mask_elements((t & u) & ~pbit))
                    term = term * var(go->b(q));
                r += term * d_or_a(go, (t & ~pbit) ^ u);
            }
            out.push_back({5, d_name(t) + "*" + d_name(u), r});
        }
    }
    return out;
}

}  // namespace quadric
