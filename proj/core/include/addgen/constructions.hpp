#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "addgen/element_set.hpp"
#include "addgen/group.hpp"
#include "addgen/subgroup.hpp"

namespace addgen {

// Recipe for a near-standard set: a standard generating basis e_1..e_r and a
// partial map sigma with sigma(i) in (i, r].  Indices are 0-based here;
// a_i = e_i when sigma is undefined at i and a_i = e_i + a_{sigma(i)}
// otherwise, built from a_{r-1} = e_{r-1} downward.
struct NearStandardSpec {
    std::vector<Element> basis;   // empty = coordinate units
    std::map<int, int> sigma;     // i -> sigma(i), 0-based, sigma(i) > i

    static NearStandardSpec standard() { return {}; }
};

// Coefficients of the unique box decomposition g = sum lambda_i a_i with
// lambda_i in [0, m_i - 1]; total equals l_A^+(g) for near-standard A.
struct Decomposition {
    std::vector<int> coefficients;
    long long total = 0;
};

// {e_1, ..., e_r}: the coordinate units.  Diameter sum (m_i - 1).
ElementSet standard_generating_set(const GroupType& g);

// A_0 = {0, a_1, ..., a_r} from the given spec; attains the absolute diameter.
ElementSet near_standard(const GroupType& g, const NearStandardSpec& spec);

// The unique coefficient vector; rejects sets not produced by near_standard
// with this spec.
Decomposition decompose_near_standard(const GroupType& g, const NearStandardSpec& spec,
                                      const ElementSet& a, const Element& target);

// Every (basis, sigma) recipe over every standard generating basis; the sets
// they induce, deduplicated, form near_standard_family.  Bounded search;
// intended for small groups.
std::vector<NearStandardSpec> near_standard_specs(const GroupType& g);

// All near-standard A_0 sets over every standard basis and every sigma map,
// deduplicated and sorted canonically.  Bounded search; intended for small
// groups.
std::vector<ElementSet> near_standard_family(const GroupType& g);

// {0, 1, ..., k} in Z_m with k = floor((m-2)/(rho-1)); an aperiodic
// rho-maximal witness of the cyclic extremal size.
ElementSet interval_set(int m, int rho);

// {0} u (g + H) \ {g}; requires g outside H, g+H generating G/H, |H| >= 3.
ElementSet punctured_coset(const GroupType& g, const Subgroup& h, const Element& coset_rep);

// Selection of one element per pair {x, g-x} in a group of odd order >= 5,
// containing 0 and avoiding g; g is not a sum of two members.
ElementSet odd_pairing_set(const GroupType& g, const Element& pair_sum);

// The 4-maximal product witness in G1 (+) G2 for cyclic G1 of order
// m = 1 mod 3: (A1 + G2) u ({(m-1)/3} + A2) with A1 = {0..(m-4)/3}.
// Returns the set inside the canonical type of the direct sum, together with
// that group.
std::pair<GroupType, ElementSet> product_4maximal(const GroupType& g1, const ElementSet& a2);

// H u (g + H) with G/H cyclic and g+H a generator of G/H.
ElementSet double_coset(const GroupType& g, const Subgroup& h, const Element& coset_rep);

// Full preimage of a generating set of G/H containing 0; preserves the
// diameter exactly and absorbs H into the period.
ElementSet lift(const GroupType& g, const Subgroup& h, const ElementSet& a_bar);

}  // namespace addgen
