#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quadric/polynomial.hpp"

namespace quadric {

// Ring homomorphism F2[source vars] -> target, given by the images of the
// source generators. Generators may be left unassigned; evaluating a
// polynomial that uses one throws UnboundVariable.
class HomMap {
public:
    HomMap() = default;
    HomMap(RingPtr source, RingPtr target);
    HomMap(RingPtr source, RingPtr target, std::vector<Polynomial> images);

    static HomMap identity(const RingPtr& ring);
    // Sends every variable of `source` to its namesake in `target`.
    static HomMap inclusion(const RingPtr& source, const RingPtr& target);

    const RingPtr& source() const noexcept { return source_; }
    const RingPtr& target() const noexcept { return target_; }

    void set(std::size_t var, Polynomial image);
    void set(std::string_view name, Polynomial image);
    bool has(std::size_t var) const { return images_.at(var).has_value(); }
    const Polynomial& image(std::size_t var) const;
    const Polynomial& image(std::string_view name) const;

    Polynomial operator()(const Polynomial& p) const;

    // x -> next(this(x)).
    HomMap then(const HomMap& next) const;

    // True when every assigned image is homogeneous of its generator's degree.
    bool preserves_degree() const;

private:
    RingPtr source_;
    RingPtr target_;
    std::vector<std::optional<Polynomial>> images_;
};

inline Polynomial substitute(const Polynomial& p, const HomMap& map) { return map(p); }
inline HomMap compose(const HomMap& second, const HomMap& first) { return first.then(second); }

}  // namespace quadric
