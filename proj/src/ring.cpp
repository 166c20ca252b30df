#include "quadric/ring.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <tuple>

#include "quadric/errors.hpp"

namespace quadric {

int mask_size(std::uint32_t mask) noexcept { return std::popcount(mask); }

int mask_sum(std::uint32_t mask) noexcept {
    int s = 0;
    for (int i = 0; i < 32; ++i)
        if (mask & (1u << i))
            s += i + 1;
    return s;
}

std::vector<int> mask_elements(std::uint32_t mask) {
    std::vector<int> out;
    for (int i = 0; i < 32; ++i)
        if (mask & (1u << i))
            out.push_back(i + 1);
    return out;
}

std::uint32_t mask_of(const std::vector<int>& elements) {
    std::uint32_t m = 0;
    for (int e : elements)
        m |= 1u << (e - 1);
    return m;
}

std::string d_name(std::uint32_t mask) {
    std::string s = "d{";
    bool first = true;
    for (int e : mask_elements(mask)) {
        if (!first)
            s += ',';
        s += std::to_string(e);
        first = false;
    }
    return s + '}';
}

VarSpec t_var(int degree, int index) {
    return {index == 0 ? "t" : "t" + std::to_string(index), degree, VarKind::T, index, 0};
}

VarSpec w_class_var() { return {"w", 1, VarKind::WClass, 0, 0}; }

namespace {

auto order_key(const VarSpec& v) {
    // d_T sorted by |T|, then by the element list.
    std::vector<int> elems = mask_elements(v.set_mask);
    return std::make_tuple(static_cast<int>(v.kind), mask_size(v.set_mask), std::move(elems),
                           v.index, v.name);
}

void sort_vars(std::vector<VarSpec>& vars) {
    std::stable_sort(vars.begin(), vars.end(), [](const VarSpec& l, const VarSpec& r) {
        return order_key(l) < order_key(r);
    });
}

std::vector<VarSpec> family_vars(Family family, int rank) {
    std::vector<VarSpec> v;
    switch (family) {
    case Family::BO:
        for (int i = 1; i <= rank; ++i)
            v.push_back({"w" + std::to_string(i), i, VarKind::W, i, 0});
        break;
    case Family::BOHat:
        for (int i = 2; i <= rank; ++i)
            v.push_back({"wh" + std::to_string(i), i, VarKind::WHat, i, 0});
        v.push_back(w_class_var());
        break;
    case Family::BGO_odd:
        for (int i = 2; i <= rank; ++i)
            v.push_back({"wh" + std::to_string(i), i, VarKind::WHat, i, 0});
        v.push_back({"c", 2, VarKind::C, 0, 0});
        break;
    case Family::BGO_even: {
        const int n = rank / 2;
        if (n > 16)
            throw UnsupportedRank("BGO(" + std::to_string(rank) + ") has too many d_T generators");
        v.push_back({"lambda", 2, VarKind::Lambda, 0, 0});
        for (int i = 1; i <= n; ++i)
            v.push_back({"a" + std::to_string(2 * i - 1), 2 * i - 1, VarKind::A, i, 0});
        for (int i = 1; i <= n; ++i)
            v.push_back({"b" + std::to_string(4 * i), 4 * i, VarKind::B, i, 0});
        for (std::uint32_t m = 1; m < (1u << n); ++m)
            if (mask_size(m) >= 2)
                v.push_back({d_name(m), 2 * mask_sum(m) - 1, VarKind::D, 0, m});
        break;
    }
    case Family::BGL:
        for (int i = 1; i <= rank; ++i)
            v.push_back({"cb" + std::to_string(i), 2 * i, VarKind::CBar, i, 0});
        break;
    case Family::TodaA:
        for (int i = 1; i <= rank; ++i)
            v.push_back({"x" + std::to_string(i), i, VarKind::X, i, 0});
        break;
    case Family::Custom:
        break;
    }
    return v;
}

std::string family_name(Family f) {
    switch (f) {
    case Family::BO: return "BO";
    case Family::BOHat: return "BOhat";
    case Family::BGO_odd:
    case Family::BGO_even: return "BGO";
    case Family::BGL: return "BGL";
    case Family::TodaA: return "A";
    case Family::Custom: return "custom";
    }
    return "?";
}

std::mutex& registry_mutex() {
    static std::mutex m;
    return m;
}

std::map<std::string, RingPtr>& registry() {
    static std::map<std::string, RingPtr> r;
    return r;
}

}  // namespace

class RingFactory {
public:
    static std::shared_ptr<Ring> blank() { return std::shared_ptr<Ring>(new Ring()); }
};

void Ring::finalize() {
    if (vars_.size() > kMaxVars)
        throw UnsupportedRank(describe() + " needs " + std::to_string(vars_.size()) +
                              " generators; at most " + std::to_string(kMaxVars) +
                              " are supported");
    if (degree_cap_ < 0 || degree_cap_ > 255)
        throw RankError("degree cap must lie in [0, 255]");
    by_name_.clear();
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i].degree < 1)
            throw RankError("variable '" + vars_[i].name + "' must have positive degree");
        if (!by_name_.emplace(vars_[i].name, i).second)
            throw RankError("duplicate variable name '" + vars_[i].name + "'");
    }
}

std::optional<std::size_t> Ring::find(std::string_view name) const {
    auto it = by_name_.find(std::string(name));
    if (it == by_name_.end())
        return std::nullopt;
    return it->second;
}

std::size_t Ring::index_of(std::string_view name) const {
    if (auto i = find(name))
        return *i;
    throw UnboundVariable(std::string(name));
}

std::string Ring::family_tag() const {
    switch (base_ ? base_->family_ : family_) {
    case Family::BO: return "o";
    case Family::BOHat: return "o-hat";
    case Family::BGO_odd:
    case Family::BGO_even: return "go";
    case Family::BGL: return "gl";
    case Family::TodaA: return "toda";
    case Family::Custom: return "custom";
    }
    return "?";
}

std::size_t Ring::lambda() const { return index_of("lambda"); }
std::size_t Ring::a(int i) const { return index_of("a" + std::to_string(2 * i - 1)); }
std::size_t Ring::b(int i) const { return index_of("b" + std::to_string(4 * i)); }
std::size_t Ring::d(std::uint32_t mask) const { return index_of(d_name(mask)); }
std::size_t Ring::w(int i) const { return index_of("w" + std::to_string(i)); }
std::size_t Ring::what(int i) const { return index_of("wh" + std::to_string(i)); }
std::size_t Ring::c() const { return index_of("c"); }
std::size_t Ring::x(int i) const { return index_of("x" + std::to_string(i)); }
std::size_t Ring::cbar(int i) const { return index_of("cb" + std::to_string(i)); }

VarKind Ring::toda_kind() const {
    switch (family_) {
    case Family::BO: return VarKind::W;
    case Family::BGL: return VarKind::CBar;
    case Family::TodaA: return VarKind::X;
    default: throw PreconditionViolation(describe() + " does not carry a Toda coaction");
    }
}

int Ring::toda_scale() const { return toda_kind() == VarKind::CBar ? 2 : 1; }

RingPtr make_ring(Family family, int rank, int degree_cap) {
    if (rank < 1)
        throw RankError("rank must be at least 1");
    if (family == Family::BGO_even && rank % 2 != 0)
        throw RankError("BGO_even needs an even rank, got " + std::to_string(rank));
    if ((family == Family::BGO_odd || family == Family::BOHat) && rank % 2 != 1)
        throw RankError("odd-rank family needs an odd rank, got " + std::to_string(rank));
    if (family == Family::Custom)
        throw RankError("use make_custom_ring for custom rings");

    const std::string key = family_name(family) + (family == Family::BGO_odd ? "o" : "") + "(" +
                            std::to_string(rank) + ")#" + std::to_string(degree_cap);
    std::lock_guard lock(registry_mutex());
    if (auto it = registry().find(key); it != registry().end())
        return it->second;

    auto ring = RingFactory::blank();
    ring->family_ = family;
    ring->rank_ = rank;
    ring->degree_cap_ = degree_cap;
    ring->description_ = family_name(family) + "(" + std::to_string(rank) + ")";
    ring->key_ = key;
    ring->vars_ = family_vars(family, rank);
    sort_vars(ring->vars_);
    ring->finalize();
    registry().emplace(key, ring);
    return ring;
}

RingPtr extend_ring(const RingPtr& base, std::vector<VarSpec> extras) {
    if (!base)
        throw ContextMismatch("extend_ring on a null ring");
    const RingPtr& root = base->is_extended() ? base->base() : base;
    std::vector<VarSpec> all_extras = base->extras();
    all_extras.insert(all_extras.end(), extras.begin(), extras.end());
    sort_vars(all_extras);

    std::string key = root->key() + "[";
    std::string desc = root->describe() + "[";
    for (std::size_t i = 0; i < all_extras.size(); ++i) {
        key += (i ? "," : "") + all_extras[i].name + ":" + std::to_string(all_extras[i].degree);
        desc += (i ? "," : "") + all_extras[i].name;
    }
    key += "]";
    desc += "]";

    std::lock_guard lock(registry_mutex());
    if (auto it = registry().find(key); it != registry().end())
        return it->second;
    auto ring = RingFactory::blank();
    ring->family_ = root->family();
    ring->rank_ = root->rank();
    ring->degree_cap_ = root->degree_cap();
    ring->vars_ = root->vars();
    ring->vars_.insert(ring->vars_.end(), all_extras.begin(), all_extras.end());
    sort_vars(ring->vars_);
    ring->extras_ = std::move(all_extras);
    ring->base_ = root;
    ring->key_ = key;
    ring->description_ = desc;
    ring->finalize();
    registry().emplace(key, ring);
    return ring;
}

RingPtr make_custom_ring(std::string name, std::vector<VarSpec> vars, int degree_cap) {
    std::string key = "custom:" + name + "(";
    for (const auto& v : vars)
        key += v.name + ":" + std::to_string(v.degree) + ",";
    key += ")#" + std::to_string(degree_cap);
    std::lock_guard lock(registry_mutex());
    if (auto it = registry().find(key); it != registry().end())
        return it->second;
    auto ring = RingFactory::blank();
    ring->family_ = Family::Custom;
    ring->degree_cap_ = degree_cap;
    ring->vars_ = std::move(vars);
    sort_vars(ring->vars_);
    ring->key_ = key;
    ring->description_ = name;
    ring->finalize();
    registry().emplace(key, ring);
    return ring;
}

}  // namespace quadric
