#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace addgen {

// One group element, as a mixed-radix coordinate vector.  coords[i] is
// reduced modulo the i-th invariant factor of the owning group.
struct Element {
    std::vector<int> coords;

    Element() = default;
    Element(std::initializer_list<int> c) : coords(c) {}
    explicit Element(std::vector<int> c) : coords(std::move(c)) {}

    friend auto operator<=>(const Element&, const Element&) = default;
};

// A finite abelian group given by its invariant-factor chain m_1 | ... | m_r.
// The empty chain denotes the trivial group.  Canonicalization happens at
// construction; instances are immutable values, cheap to copy and safe to
// share between threads.
//
// Elements are addressed by mixed-radix index
//   idx(g) = sum_i g_i * prod_{j<i} m_j,
// which every dense table in the library is keyed by.
class GroupType {
public:
    GroupType();  // trivial group

    // Canonicalizes arbitrary cyclic orders into an invariant-factor chain
    // via pairwise (a,b) -> (gcd,lcm) sweeps.  Unit factors are dropped.
    // Throws std::invalid_argument on non-positive moduli.
    static GroupType of(std::span<const int> moduli);
    static GroupType of(std::initializer_list<int> moduli);

    const std::vector<int>& invariant_factors() const { return impl_->factors; }
    int rank() const { return static_cast<int>(impl_->factors.size()); }
    long long order() const { return impl_->order; }
    int exponent() const;  // 1 for the trivial group
    bool trivial() const { return impl_->factors.empty(); }

    int order_int() const { return static_cast<int>(impl_->order); }

    // Mixed-radix indexing.
    int index_of(const Element& g) const;  // validates and reduces nothing: throws on out-of-range coords
    Element element_at(int idx) const;

    // Arithmetic on element indices.
    int add(int a, int b) const;
    int neg(int a) const;
    int scale(long long k, int a) const;  // k*a, k may be negative
    int element_order(int a) const;       // least n >= 1 with n*a = 0
    int element_order(const Element& g) const { return element_order(index_of(g)); }

    bool operator==(const GroupType& o) const { return impl_->factors == o.impl_->factors; }
    bool operator!=(const GroupType& o) const { return !(*this == o); }

    // Group literal, e.g. "2,8"; "1" for the trivial group.
    std::string to_string() const;

private:
    struct Impl {
        std::vector<int> factors;
        std::vector<int> radix;  // prefix products, radix[i] = prod_{j<i} m_j
        long long order = 1;
        // Dense addition table for small groups; empty above the cache cutoff.
        std::vector<int32_t> add_table;
        std::vector<int32_t> neg_table;
    };

    explicit GroupType(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    static GroupType from_canonical(std::vector<int> factors);

    std::shared_ptr<const Impl> impl_;

    friend std::pair<GroupType, std::vector<int>> canonical_form(
        int n, const std::function<int(int, int)>& add);
};

// Enumerates every invariant-factor chain with 2 <= order <= max_order,
// sorted by order then lexicographically by chain.
std::vector<GroupType> all_group_types(long long max_order);

// Computes the canonical invariant-factor form of an abstract finite abelian
// group given as an addition law on [0,n), together with the isomorphism
// iso[raw index] -> canonical mixed-radix index.
std::pair<GroupType, std::vector<int>> canonical_form(
    int n, const std::function<int(int, int)>& add);

// Canonical type of G1 (+) G2 and the embedding pair-index -> canonical index,
// where the pair (x,y) is addressed as x.index + |G1| * y.index.
std::pair<GroupType, std::vector<int>> direct_sum(const GroupType& g1, const GroupType& g2);

}  // namespace addgen
