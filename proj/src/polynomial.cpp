#include "quadric/polynomial.hpp"

#include <algorithm>
#include <cstring>
#include <functional>

#include "quadric/errors.hpp"

namespace quadric {

bool Monomial::divides(const Monomial& other) const noexcept {
    if (degree > other.degree)
        return false;
    for (std::size_t i = 0; i < exps.size(); ++i)
        if (exps[i] > other.exps[i])
            return false;
    return true;
}

Monomial monomial_product(const Monomial& a, const Monomial& b) {
    Monomial m;
    kernels::active().exps_add(m.exps.data(), a.exps.data(), b.exps.data());
    m.degree = a.degree + b.degree;
    return m;
}

Monomial monomial_quotient(const Ring& ring, const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < ring.size(); ++i) {
        if (b.exps[i] > a.exps[i])
            throw PreconditionViolation("monomial_quotient: divisor does not divide");
        m.exps[i] = static_cast<std::uint8_t>(a.exps[i] - b.exps[i]);
    }
    m.degree = a.degree - b.degree;
    return m;
}

Monomial make_monomial(const Ring& ring, const std::vector<std::pair<std::size_t, int>>& powers) {
    Monomial m;
    int deg = 0;
    for (auto [var, e] : powers) {
        if (var >= ring.size())
            throw DimensionMismatch("variable index out of range");
        deg += e * ring.var(var).degree;
        const int total = m.exps[var] + e;
        if (e < 0 || total > 255)
            throw DegreeCapExceeded(deg, ring.degree_cap());
        m.exps[var] = static_cast<std::uint8_t>(total);
    }
    m.degree = deg;
    return m;
}

int monomial_degree(const Ring& ring, const Monomial& m) {
    int d = 0;
    for (std::size_t i = 0; i < ring.size(); ++i)
        d += m.exps[i] * ring.var(i).degree;
    return d;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
    std::uint64_t words[kernels::kExpWidth / 8];
    std::memcpy(words, m.exps.data(), sizeof(words));
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ static_cast<std::uint64_t>(m.degree);
    for (std::uint64_t w : words) {
        h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
}

namespace {

// Sort descending and cancel equal pairs.
void normalize(std::vector<Monomial>& terms) {
    std::sort(terms.begin(), terms.end(), std::greater<>());
    std::size_t out = 0;
    std::size_t i = 0;
    while (i < terms.size()) {
        std::size_t j = i + 1;
        while (j < terms.size() && terms[j] == terms[i])
            ++j;
        if ((j - i) % 2 == 1)
            terms[out++] = terms[i];
        i = j;
    }
    terms.resize(out);
}

void check_cap(const Ring& ring, int degree) {
    if (degree > ring.degree_cap())
        throw DegreeCapExceeded(degree, ring.degree_cap());
}

}  // namespace

Polynomial Polynomial::one(RingPtr ring) {
    Polynomial p(std::move(ring));
    p.terms_.push_back(Monomial{});
    return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index, int power) {
    if (!ring)
        throw ContextMismatch("variable() on a null ring");
    Monomial m = make_monomial(*ring, {{index, power}});
    check_cap(*ring, m.degree);
    Polynomial p(std::move(ring));
    p.terms_.push_back(m);
    return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::string_view name, int power) {
    const std::size_t idx = ring->index_of(name);
    return variable(std::move(ring), idx, power);
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m) {
    check_cap(*ring, m.degree);
    Polynomial p(std::move(ring));
    p.terms_.push_back(m);
    return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Monomial> terms) {
    for (const auto& m : terms)
        check_cap(*ring, m.degree);
    normalize(terms);
    Polynomial p(std::move(ring));
    p.terms_ = std::move(terms);
    return p;
}

bool Polynomial::is_homogeneous() const noexcept {
    return terms_.empty() || terms_.front().degree == terms_.back().degree;
}

Polynomial Polynomial::homogeneous_part(int degree) const {
    Polynomial p(ring_);
    for (const auto& m : terms_)
        if (m.degree == degree)
            p.terms_.push_back(m);
    return p;
}

std::vector<int> Polynomial::degrees() const {
    std::vector<int> out;
    for (const auto& m : terms_)
        if (out.empty() || out.back() != m.degree)
            out.push_back(m.degree);
    return out;
}

bool Polynomial::contains(const Monomial& m) const {
    return std::binary_search(terms_.begin(), terms_.end(), m, std::greater<>());
}

int Polynomial::max_exponent(std::size_t var) const {
    int e = 0;
    for (const auto& m : terms_)
        e = std::max<int>(e, m.exps[var]);
    return e;
}

std::map<int, Polynomial> Polynomial::split_by(std::size_t var) const {
    std::map<int, Polynomial> parts;
    const int vdeg = ring_->var(var).degree;
    for (const auto& m : terms_) {
        Monomial rest = m;
        const int e = rest.exps[var];
        rest.exps[var] = 0;
        rest.degree -= e * vdeg;
        auto [it, inserted] = parts.try_emplace(e, ring_);
        it->second.terms_.push_back(rest);
    }
    // Each bucket inherits a subsequence of a descending list with a common
    // factor removed, so it is still sorted and duplicate-free.
    return parts;
}

void Polynomial::check_same_ring(const Polynomial& other, const char* op) const {
    if (ring_ != other.ring_) {
        if (!ring_ && !other.ring_)
            return;
        throw ContextMismatch(std::string(op) + ": operands live in " +
                              (ring_ ? ring_->describe() : "<none>") + " and " +
                              (other.ring_ ? other.ring_->describe() : "<none>"));
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    if (other.terms_.empty()) {
        if (!ring_)
            ring_ = other.ring_;
        else
            check_same_ring(other, "add");
        return *this;
    }
    check_same_ring(other, "add");
    std::vector<Monomial> merged;
    merged.reserve(terms_.size() + other.terms_.size());
    auto a = terms_.begin();
    auto b = other.terms_.begin();
    while (a != terms_.end() && b != other.terms_.end()) {
        if (*a == *b) {
            ++a;
            ++b;
        } else if (*a > *b) {
            merged.push_back(*a++);
        } else {
            merged.push_back(*b++);
        }
    }
    merged.insert(merged.end(), a, terms_.end());
    merged.insert(merged.end(), b, other.terms_.end());
    terms_ = std::move(merged);
    return *this;
}

Polynomial operator*(const Polynomial& l, const Polynomial& r) {
    l.check_same_ring(r, "mul");
    Polynomial out(l.ring_);
    if (l.is_zero() || r.is_zero())
        return out;
    check_cap(*l.ring_, l.degree() + r.degree());
    if (l.terms_.size() == 1)
        return r.times(l.terms_[0]);
    if (r.terms_.size() == 1)
        return l.times(r.terms_[0]);
    std::vector<Monomial> terms;
    terms.reserve(l.terms_.size() * r.terms_.size());
    for (const auto& a : l.terms_)
        for (const auto& b : r.terms_)
            terms.push_back(monomial_product(a, b));
    normalize(terms);
    out.terms_ = std::move(terms);
    return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
    *this = *this * other;
    return *this;
}

Polynomial Polynomial::times(const Monomial& m) const {
    Polynomial out(ring_);
    if (terms_.empty())
        return out;
    check_cap(*ring_, degree() + m.degree);
    out.terms_.reserve(terms_.size());
    // Multiplying by a fixed monomial preserves the graded order.
    for (const auto& t : terms_)
        out.terms_.push_back(monomial_product(t, m));
    return out;
}

Polynomial Polynomial::square() const {
    Polynomial out(ring_);
    if (terms_.empty())
        return out;
    check_cap(*ring_, 2 * degree());
    out.terms_.reserve(terms_.size());
    // Frobenius: cross terms appear twice and cancel.
    for (const auto& t : terms_)
        out.terms_.push_back(monomial_product(t, t));
    return out;
}

Polynomial Polynomial::pow(unsigned exponent) const {
    if (exponent == 0) {
        if (!ring_)
            throw ContextMismatch("pow on a polynomial without a ring");
        return one(ring_);
    }
    Polynomial result;
    Polynomial base = *this;
    bool have = false;
    while (true) {
        if (exponent & 1u) {
            result = have ? result * base : base;
            have = true;
        }
        exponent >>= 1;
        if (!exponent)
            break;
        base = base.square();
    }
    return result;
}

bool operator==(const Polynomial& l, const Polynomial& r) {
    if (l.terms_ != r.terms_)
        return false;
    return l.ring_ == r.ring_ || l.terms_.empty();
}

std::string format_monomial(const Ring& ring, const Monomial& m) {
    if (m.is_one())
        return "1";
    std::string s;
    for (std::size_t i = 0; i < ring.size(); ++i) {
        if (!m.exps[i])
            continue;
        if (!s.empty())
            s += '*';
        s += ring.var(i).name;
        if (m.exps[i] > 1)
            s += '^' + std::to_string(m.exps[i]);
    }
    return s;
}

std::string Polynomial::str() const {
    if (terms_.empty())
        return "0";
    std::string s;
    for (const auto& m : terms_) {
        if (!s.empty())
            s += " + ";
        s += format_monomial(*ring_, m);
    }
    return s;
}

Polynomial convert(const Polynomial& p, const RingPtr& target) {
    if (p.ring() == target)
        return p;
    const Ring& src = *p.ring();
    std::vector<int> slot(src.size(), -1);
    std::vector<bool> used(src.size(), false);
    for (const auto& m : p.terms())
        for (std::size_t i = 0; i < src.size(); ++i)
            if (m.exps[i])
                used[i] = true;
    for (std::size_t i = 0; i < src.size(); ++i) {
        if (!used[i])
            continue;
        auto j = target->find(src.var(i).name);
        if (!j)
            throw UnboundVariable(src.var(i).name);
        if (target->var(*j).degree != src.var(i).degree)
            throw ContextMismatch("variable '" + src.var(i).name + "' changes degree");
        slot[i] = static_cast<int>(*j);
    }
    std::vector<Monomial> terms;
    terms.reserve(p.size());
    for (const auto& m : p.terms()) {
        Monomial out;
        out.degree = m.degree;
        for (std::size_t i = 0; i < src.size(); ++i)
            if (m.exps[i])
                out.exps[static_cast<std::size_t>(slot[i])] = m.exps[i];
        terms.push_back(out);
    }
    return Polynomial::from_terms(target, std::move(terms));
}

}  // namespace quadric
