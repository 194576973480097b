#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "addgen/group.hpp"

namespace addgen {

// Dense subset of a finite abelian group: one membership bit per element,
// keyed by mixed-radix index.  Immutable value semantics; binary operations
// require both operands to live in the same group.
class ElementSet {
public:
    explicit ElementSet(GroupType g);
    ElementSet(GroupType g, std::initializer_list<Element> elems);

    static ElementSet from_indices(const GroupType& g, std::span<const int> idx);
    static ElementSet full(const GroupType& g);
    static ElementSet singleton_zero(const GroupType& g);

    const GroupType& group() const { return group_; }

    bool contains(int idx) const { return bits_[idx >> 6] >> (idx & 63) & 1; }
    bool contains(const Element& g) const { return contains(group_.index_of(g)); }
    void insert(int idx) { bits_[idx >> 6] |= std::uint64_t{1} << (idx & 63); }
    void insert(const Element& g) { insert(group_.index_of(g)); }
    void erase(int idx) { bits_[idx >> 6] &= ~(std::uint64_t{1} << (idx & 63)); }

    long long size() const;
    bool empty() const;
    std::vector<int> indices() const;  // ascending
    std::vector<Element> elements() const;

    ElementSet translate(int a) const;  // {x + a : x in set}
    bool is_subset_of(const ElementSet& o) const;

    ElementSet& operator|=(const ElementSet& o);
    ElementSet& operator&=(const ElementSet& o);
    bool operator==(const ElementSet& o) const;
    bool operator!=(const ElementSet& o) const { return !(*this == o); }

    // Lexicographic order on the sorted index sequences; canonical everywhere
    // deterministic ordering of sets is required.
    bool operator<(const ElementSet& o) const;

    // Raw membership word for groups of order <= 64.
    std::uint64_t word() const;
    static ElementSet from_word(const GroupType& g, std::uint64_t w);

private:
    GroupType group_;
    std::vector<std::uint64_t> bits_;
};

// {a + b : a in A, b in B}; empty if either operand is empty.
ElementSet sumset(const ElementSet& a, const ElementSet& b);

// {r*a : a in A}.
ElementSet dilate(long long r, const ElementSet& a);

// <A>_rho^+ : all elements representable as a sum of at most rho elements
// of A, i.e. the rho-fold sumset of A union {0}.  {0} for rho = 0.
ElementSet bounded_generation(const ElementSet& a, int rho);

// BFS distances from 0 in the Cayley digraph {x -> x+a : a in A}.
// Entries outside <A> are infinite.
class LengthTable {
public:
    static constexpr int kInfinite = -1;

    LengthTable(GroupType g, std::vector<int> lengths)
        : group_(std::move(g)), len_(std::move(lengths)) {}

    const GroupType& group() const { return group_; }
    bool finite(int idx) const { return len_[idx] >= 0; }
    int at(int idx) const { return len_[idx]; }  // kInfinite when unreachable
    int at(const Element& g) const { return len_[group_.index_of(g)]; }

    // Max over the group; nullopt when some element is unreachable.
    std::optional<int> max() const;

private:
    GroupType group_;
    std::vector<int> len_;
};

LengthTable length_table(const ElementSet& a);

// diam_A^+(G); nullopt (= infinite) when A does not generate G.
std::optional<int> diameter(const ElementSet& a);

// The period (stabilizer) {g : S+g = S} as a plain set.  period of the empty
// set is the full group by convention.
ElementSet period_set(const ElementSet& s);

bool is_aperiodic(const ElementSet& s);

}  // namespace addgen
