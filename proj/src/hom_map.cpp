#include "quadric/hom_map.hpp"

#include "quadric/errors.hpp"

namespace quadric {

HomMap::HomMap(RingPtr source, RingPtr target)
    : source_(std::move(source)), target_(std::move(target)) {
    if (!source_ || !target_)
        throw ContextMismatch("HomMap needs a source and a target ring");
    images_.resize(source_->size());
}

HomMap::HomMap(RingPtr source, RingPtr target, std::vector<Polynomial> images)
    : HomMap(std::move(source), std::move(target)) {
    if (images.size() != images_.size())
        throw DimensionMismatch("HomMap: " + std::to_string(images.size()) + " images for " +
                                std::to_string(images_.size()) + " generators");
    for (std::size_t i = 0; i < images.size(); ++i)
        set(i, std::move(images[i]));
}

HomMap HomMap::identity(const RingPtr& ring) { return inclusion(ring, ring); }

HomMap HomMap::inclusion(const RingPtr& source, const RingPtr& target) {
    HomMap m(source, target);
    for (std::size_t i = 0; i < source->size(); ++i)
        m.set(i, Polynomial::variable(target, target->index_of(source->var(i).name)));
    return m;
}

void HomMap::set(std::size_t var, Polynomial image) {
    if (var >= images_.size())
        throw DimensionMismatch("HomMap::set: variable index out of range");
    if (image.ring() != target_) {
        if (!image.is_zero() || image.ring())
            throw ContextMismatch("HomMap image for '" + source_->var(var).name + "' lives in " +
                                  (image.ring() ? image.ring()->describe() : "<none>") +
                                  ", expected " + target_->describe());
        image = Polynomial::zero(target_);
    }
    images_[var] = std::move(image);
}

void HomMap::set(std::string_view name, Polynomial image) {
    set(source_->index_of(name), std::move(image));
}

const Polynomial& HomMap::image(std::size_t var) const {
    const auto& img = images_.at(var);
    if (!img)
        throw UnboundVariable(source_->var(var).name);
    return *img;
}

const Polynomial& HomMap::image(std::string_view name) const {
    return image(source_->index_of(name));
}

Polynomial HomMap::operator()(const Polynomial& p) const {
    if (p.ring() != source_) {
        if (p.is_zero())
            return Polynomial::zero(target_);
        throw ContextMismatch("HomMap from " + source_->describe() + " applied to an element of " +
                              p.ring()->describe());
    }
    // Powers of each image, filled on demand.
    std::vector<std::vector<Polynomial>> powers(source_->size());
    auto power = [&](std::size_t var, int e) -> const Polynomial& {
        auto& cache = powers[var];
        if (cache.empty())
            cache.push_back(image(var));
        while (static_cast<int>(cache.size()) < e)
            cache.push_back(cache.back() * cache.front());
        return cache[static_cast<std::size_t>(e - 1)];
    };

    std::vector<Monomial> terms;
    for (const auto& m : p.terms()) {
        Polynomial acc = Polynomial::one(target_);
        bool zero = false;
        for (std::size_t i = 0; i < source_->size() && !zero; ++i) {
            if (!m.exps[i])
                continue;
            const Polynomial& f = power(i, m.exps[i]);
            if (f.is_zero())
                zero = true;
            else
                acc = acc * f;
        }
        if (!zero)
            terms.insert(terms.end(), acc.terms().begin(), acc.terms().end());
    }
    return Polynomial::from_terms(target_, std::move(terms));
}

HomMap HomMap::then(const HomMap& next) const {
    if (next.source_ != target_)
        throw ContextMismatch("cannot compose: " + target_->describe() + " vs " +
                              next.source_->describe());
    HomMap out(source_, next.target_);
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i])
            out.images_[i] = next(*images_[i]);
    return out;
}

bool HomMap::preserves_degree() const {
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (!images_[i] || images_[i]->is_zero())
            continue;
        const auto& img = *images_[i];
        if (!img.is_homogeneous() || img.degree() != source_->var(i).degree)
            return false;
    }
    return true;
}

}  // namespace quadric
