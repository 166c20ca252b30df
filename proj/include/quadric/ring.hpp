#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "quadric/kernels.hpp"

namespace quadric {

inline constexpr int kDefaultDegreeCap = 48;
inline constexpr std::size_t kMaxVars = kernels::kExpWidth;

// Kinds of generator symbols. The enumerator order is the global variable
// order used for monomial comparison inside every ring.
enum class VarKind : std::uint8_t {
    Lambda,  // λ, degree 2
    A,       // a_{2i-1}
    B,       // b_{4i}
    D,       // d_T, |T| >= 2
    W,       // Stiefel-Whitney w_i
    WHat,    // special classes ŵ_i
    C,       // c, degree 2 (the C* factor of GO(2n+1))
    T,       // adjoined coaction variable t (also t1, t2)
    WClass,  // adjoined w in H^1(BZ/2)
    X,       // Toda's x_i
    CBar,    // mod-2 Chern classes c̄_i
    CHat,    // Toda-style ĉ_i (labels only)
};

struct VarSpec {
    std::string name;
    int degree = 1;
    VarKind kind = VarKind::X;
    // Subscript ordinal: i for w_i, ŵ_i, x_i, c̄_i, a_{2i-1}, b_{4i}; 0/1/2 for t, t1, t2.
    int index = 0;
    // Index set T ⊆ {1..n} as a bitmask (bit i-1 <-> i); only for VarKind::D.
    std::uint32_t set_mask = 0;
};

enum class Family : std::uint8_t { BO, BOHat, BGO_odd, BGO_even, BGL, TodaA, Custom };

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

class Ring {
public:
    Family family() const noexcept { return family_; }
    int rank() const noexcept { return rank_; }
    // n for ranks 2n and 2n+1.
    int half_rank() const noexcept { return rank_ / 2; }
    int degree_cap() const noexcept { return degree_cap_; }

    const std::vector<VarSpec>& vars() const noexcept { return vars_; }
    std::size_t size() const noexcept { return vars_.size(); }
    const VarSpec& var(std::size_t i) const { return vars_.at(i); }

    std::optional<std::size_t> find(std::string_view name) const;
    // Throws UnboundVariable.
    std::size_t index_of(std::string_view name) const;

    // The unextended ring this one was built from (itself for base rings).
    const RingPtr& base() const noexcept { return base_; }
    bool is_extended() const noexcept { return !extras_.empty(); }
    const std::vector<VarSpec>& extras() const noexcept { return extras_; }

    const std::string& key() const noexcept { return key_; }
    // Short human form, e.g. "BGO(4)[t]".
    const std::string& describe() const noexcept { return description_; }
    // CLI family tag: go | o | gl | toda | o-hat | custom name.
    std::string family_tag() const;

    // Typed lookups; each throws UnboundVariable when the symbol is absent.
    std::size_t lambda() const;
    std::size_t a(int i) const;  // a_{2i-1}
    std::size_t b(int i) const;  // b_{4i}
    std::size_t d(std::uint32_t mask) const;
    std::size_t w(int i) const;
    std::size_t what(int i) const;
    std::size_t c() const;
    std::size_t x(int i) const;
    std::size_t cbar(int i) const;

    // For rings used by the Toda machinery: the generator kind and the degree
    // of its first member (1 for w/x, 2 for c̄).
    VarKind toda_kind() const;
    int toda_scale() const;

private:
    friend RingPtr make_ring(Family, int, int);
    friend RingPtr extend_ring(const RingPtr&, std::vector<VarSpec>);
    friend RingPtr make_custom_ring(std::string, std::vector<VarSpec>, int);
    friend class RingFactory;

    Ring() = default;
    void finalize();

    Family family_ = Family::Custom;
    int rank_ = 0;
    int degree_cap_ = kDefaultDegreeCap;
    std::vector<VarSpec> vars_;
    std::vector<VarSpec> extras_;
    RingPtr base_;
    std::string key_;
    std::string description_;
    std::unordered_map<std::string, std::size_t> by_name_;
};

// Interned: the same (family, rank, cap) always yields the same pointer, so
// contexts compare by identity.
//   BO(n)          w1..wn                     deg w_i = i
//   BOHat(2n+1)    ŵ2..ŵ_{2n+1}, w            H*(BO(2n+1)) in the (w, ŵ) coordinates
//   BGO_odd(2n+1)  ŵ2..ŵ_{2n+1}, c            deg c = 2
//   BGO_even(2n)   λ, a_{2i-1}, b_{4i}, d_T   deg d_T = 2ΣT - 1
//   BGL(n)         c̄1..c̄n                     deg c̄_i = 2i
//   TodaA(N)       x1..xN                     deg x_i = i
// Throws RankError on a parity mismatch or rank < 1, UnsupportedRank when the
// generator count exceeds kMaxVars.
RingPtr make_ring(Family family, int rank, int degree_cap = kDefaultDegreeCap);

// base with extra variables adjoined (interned on the full variable list).
RingPtr extend_ring(const RingPtr& base, std::vector<VarSpec> extras);

RingPtr make_custom_ring(std::string name, std::vector<VarSpec> vars,
                         int degree_cap = kDefaultDegreeCap);

VarSpec t_var(int degree = 2, int index = 0);  // "t", or "t1"/"t2" for index 1/2
VarSpec w_class_var();                         // "w", degree 1

std::string d_name(std::uint32_t mask);
int mask_size(std::uint32_t mask) noexcept;
int mask_sum(std::uint32_t mask) noexcept;
std::vector<int> mask_elements(std::uint32_t mask);
std::uint32_t mask_of(const std::vector<int>& elements);

}  // namespace quadric
