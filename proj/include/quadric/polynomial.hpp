#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "quadric/ring.hpp"

namespace quadric {

// Exponent vector over a ring's variables plus its total degree.
struct Monomial {
    std::array<std::uint8_t, kernels::kExpWidth> exps{};
    int degree = 0;

    // Graded order: degree first, then exponents lexicographically in
    // variable order (a larger exponent on an earlier variable is larger).
    friend std::strong_ordering operator<=>(const Monomial& l, const Monomial& r) noexcept {
        if (auto c = l.degree <=> r.degree; c != 0)
            return c;
        return l.exps <=> r.exps;
    }
    friend bool operator==(const Monomial& l, const Monomial& r) noexcept {
        return l.degree == r.degree && l.exps == r.exps;
    }

    bool divides(const Monomial& other) const noexcept;
    bool is_one() const noexcept { return degree == 0; }
};

Monomial monomial_product(const Monomial& a, const Monomial& b);
// Exponent-wise a - b; requires b | a.
Monomial monomial_quotient(const Ring& ring, const Monomial& a, const Monomial& b);
Monomial make_monomial(const Ring& ring, const std::vector<std::pair<std::size_t, int>>& powers);
int monomial_degree(const Ring& ring, const Monomial& m);

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept;
};

// Element of F2[vars]: a set of monomials, stored in strictly descending order.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
    static Polynomial one(RingPtr ring);
    static Polynomial variable(RingPtr ring, std::size_t index, int power = 1);
    static Polynomial variable(RingPtr ring, std::string_view name, int power = 1);
    static Polynomial monomial(RingPtr ring, const Monomial& m);
    // Any order, duplicates cancel in pairs.
    static Polynomial from_terms(RingPtr ring, std::vector<Monomial> terms);

    const RingPtr& ring() const noexcept { return ring_; }
    const std::vector<Monomial>& terms() const& noexcept { return terms_; }
    // By value on temporaries, so `for (auto& m : f(p).terms())` stays valid.
    std::vector<Monomial> terms() && noexcept { return std::move(terms_); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_one() const noexcept { return terms_.size() == 1 && terms_[0].is_one(); }
    std::size_t size() const noexcept { return terms_.size(); }

    // -1 for the zero polynomial.
    int degree() const noexcept { return terms_.empty() ? -1 : terms_.front().degree; }
    bool is_homogeneous() const noexcept;
    Polynomial homogeneous_part(int degree) const;
    std::vector<int> degrees() const;
    bool contains(const Monomial& m) const;

    // Largest exponent of variable `var` over all terms.
    int max_exponent(std::size_t var) const;
    bool involves(std::size_t var) const { return max_exponent(var) > 0; }
    // P = Σ_k var^k · coeff_k with coeff_k free of var.
    std::map<int, Polynomial> split_by(std::size_t var) const;

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other);
    friend Polynomial operator+(Polynomial l, const Polynomial& r) { return l += r; }
    friend Polynomial operator-(Polynomial l, const Polynomial& r) { return l += r; }
    friend Polynomial operator*(const Polynomial& l, const Polynomial& r);
    Polynomial times(const Monomial& m) const;
    Polynomial square() const;
    Polynomial pow(unsigned exponent) const;

    friend bool operator==(const Polynomial& l, const Polynomial& r);

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

private:
    void check_same_ring(const Polynomial& other, const char* op) const;

    RingPtr ring_;
    std::vector<Monomial> terms_;
};

// Re-express P in `target` by matching variable names. Throws UnboundVariable
// if a variable used by P has no namesake in target.
Polynomial convert(const Polynomial& p, const RingPtr& target);

std::string format_monomial(const Ring& ring, const Monomial& m);

}  // namespace quadric
