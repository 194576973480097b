#pragma once

#include <utility>
#include <vector>

#include "addgen/element_set.hpp"
#include "addgen/group.hpp"

namespace addgen {

// A subgroup of a finite abelian group, stored as its member set together
// with the canonical type of the quotient and the projection G -> G/H.
// coset_index maps each element index of G to the mixed-radix index of its
// coset inside quotient_type; the map is a homomorphism by construction.
class Subgroup {
public:
    // Smallest subgroup containing A (the closure <A>).
    static Subgroup closure(const GroupType& g, const ElementSet& a);
    static Subgroup closure(const GroupType& g, std::initializer_list<Element> a);

    // Wraps an already-closed member set; throws if it is not a subgroup.
    static Subgroup from_members(ElementSet members);

    const GroupType& group() const { return members_.group(); }
    const ElementSet& members() const { return members_; }
    const GroupType& quotient_type() const { return quotient_type_; }

    long long size() const { return members_.size(); }
    bool contains(int idx) const { return members_.contains(idx); }
    bool contains(const Element& g) const { return members_.contains(g); }
    bool is_whole_group() const { return size() == group().order(); }
    bool is_trivial() const { return size() == 1; }

    int project(int element_idx) const { return coset_index_[element_idx]; }
    Element project(const Element& g) const {
        return quotient_type_.element_at(coset_index_[group().index_of(g)]);
    }
    const std::vector<int>& coset_index() const { return coset_index_; }

    bool operator==(const Subgroup& o) const { return members_ == o.members_; }

private:
    Subgroup(ElementSet members, GroupType quotient_type, std::vector<int> coset_index)
        : members_(std::move(members)),
          quotient_type_(std::move(quotient_type)),
          coset_index_(std::move(coset_index)) {}

    ElementSet members_;
    GroupType quotient_type_;
    std::vector<int> coset_index_;
};

// All subgroups of G, each exactly once, sorted by size then lexicographically
// by member indices.  Iterative closure over the subgroup lattice; throws
// BudgetError when order(G) exceeds order_bound.
std::vector<Subgroup> enumerate_subgroups(const GroupType& g, long long order_bound = 4096);

// The quotient type of G/H together with the projection element -> coset
// index (in quotient_type indexing).
std::pair<GroupType, std::vector<int>> quotient(const GroupType& g, const Subgroup& h);

// period as a Subgroup value.
Subgroup period(const ElementSet& s);

}  // namespace addgen
