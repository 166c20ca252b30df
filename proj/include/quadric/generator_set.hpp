#pragma once

#include <string>
#include <utility>
#include <vector>

#include "quadric/polynomial.hpp"

namespace quadric {

struct GeneratorSet {
    RingPtr ring;
    std::vector<std::pair<std::string, Polynomial>> entries;

    void add(std::string label, Polynomial value);
    const Polynomial* find(std::string_view label) const;
    const Polynomial& at(std::string_view label) const;
    std::size_t size() const noexcept { return entries.size(); }
};

}  // namespace quadric
