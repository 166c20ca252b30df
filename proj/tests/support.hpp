#pragma once

#include <random>

#include "quadric/enumerate.hpp"
#include "quadric/polynomial.hpp"

namespace quadric::testing {

inline constexpr int kCases = 200;

class Random {
public:
    explicit Random(std::uint64_t seed = 0x51ab'2026ull) : gen_(seed) {}
    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
    std::uint64_t word() { return gen_(); }

    Monomial monomial(const RingPtr& ring, int lo, int hi) {
        for (;;) {
            const auto monos = enumerate_monomials(*ring, uniform(lo, hi));
            if (!monos.empty())
                return monos[pick(monos.size())];
        }
    }

    // Homogeneous with up to `terms` terms; never zero.
    Polynomial homogeneous(const RingPtr& ring, int lo, int hi, int terms = 4) {
        for (;;) {
            const auto monos = enumerate_monomials(*ring, uniform(lo, hi));
            if (monos.empty())
                continue;
            std::vector<Monomial> chosen;
            for (int k = uniform(1, terms); k > 0; --k)
                chosen.push_back(monos[pick(monos.size())]);
            Polynomial p = Polynomial::from_terms(ring, chosen);
            if (!p.is_zero())
                return p;
        }
    }

    // Mixed degrees, possibly zero.
    Polynomial any(const RingPtr& ring, int max_degree, int terms = 5) {
        std::vector<Monomial> chosen;
        for (int k = uniform(0, terms); k > 0; --k)
            chosen.push_back(monomial(ring, 0, max_degree));
        return Polynomial::from_terms(ring, chosen);
    }

private:
    std::size_t pick(std::size_t n) {
        return std::uniform_int_distribution<std::size_t>(0, n - 1)(gen_);
    }
    std::mt19937_64 gen_;
};

}  // namespace quadric::testing
