#include "quadric/enumerate.hpp"

#include <algorithm>
#include <functional>

#include "quadric/errors.hpp"

namespace quadric {

namespace {

// Depth-first over variables in order, trying the largest exponent first, so
// the output comes out already in descending order.
void walk(const Ring& ring, const std::vector<bool>& allowed, std::size_t var, int remaining,
          Monomial& cur, std::vector<Monomial>& out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    if (var == ring.size())
        return;
    const int d = ring.var(var).degree;
    const bool ok = allowed.empty() || allowed[var];
    for (int e = ok ? remaining / d : 0; e >= 0; --e) {
        cur.exps[var] = static_cast<std::uint8_t>(e);
        walk(ring, allowed, var + 1, remaining - e * d, cur, out);
    }
    cur.exps[var] = 0;
}

}  // namespace

std::vector<Monomial> enumerate_monomials(const Ring& ring, int degree,
                                          const std::vector<bool>& allowed) {
    if (degree > ring.degree_cap())
        throw DegreeCapExceeded(degree, ring.degree_cap());
    std::vector<Monomial> out;
    if (degree < 0)
        return out;
    if (!allowed.empty() && allowed.size() != ring.size())
        throw DimensionMismatch("enumerate_monomials: filter size mismatch");
    Monomial cur;
    cur.degree = degree;
    walk(ring, allowed, 0, degree, cur, out);
    return out;
}

std::size_t count_monomials(const Ring& ring, int degree, const std::vector<bool>& allowed) {
    if (degree < 0)
        return 0;
    std::vector<std::size_t> ways(static_cast<std::size_t>(degree) + 1, 0);
    ways[0] = 1;
    for (std::size_t i = 0; i < ring.size(); ++i) {
        if (!allowed.empty() && !allowed[i])
            continue;
        const int d = ring.var(i).degree;
        for (int k = d; k <= degree; ++k)
            ways[static_cast<std::size_t>(k)] += ways[static_cast<std::size_t>(k - d)];
    }
    return ways[static_cast<std::size_t>(degree)];
}

}  // namespace quadric
