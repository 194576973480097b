#include "addgen/constructions.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "addgen/oracle.hpp"

namespace addgen {

namespace {

std::vector<Element> coordinate_units(const GroupType& g) {
    std::vector<Element> units;
    for (int i = 0; i < g.rank(); ++i) {
        Element e;
        e.coords.assign(g.rank(), 0);
        e.coords[i] = 1;
        units.push_back(std::move(e));
    }
    return units;
}

// ord(a_i) = m_i and each partial span is a direct sum.
bool is_standard_basis(const GroupType& g, const std::vector<Element>& basis) {
    if (static_cast<int>(basis.size()) != g.rank()) return false;
    ElementSet span = ElementSet::singleton_zero(g);
    long long expect = 1;
    for (int i = 0; i < g.rank(); ++i) {
        if (g.element_order(basis[i]) != g.invariant_factors()[i]) return false;
        ElementSet gens = span;
        gens.insert(basis[i]);
        span = Subgroup::closure(g, gens).members();
        expect *= g.invariant_factors()[i];
        if (span.size() != expect) return false;
    }
    return true;
}

std::vector<int> build_near_standard_elements(const GroupType& g, const NearStandardSpec& spec,
                                              const std::vector<Element>& basis) {
    const int r = g.rank();
    for (const auto& [i, s] : spec.sigma)
        if (i < 0 || i >= r || s <= i || s >= r)
            throw std::invalid_argument("sigma out of range: requires i < sigma(i) < rank");
    std::vector<int> a(r);
    for (int i = r - 1; i >= 0; --i) {
        a[i] = g.index_of(basis[i]);
        if (auto it = spec.sigma.find(i); it != spec.sigma.end()) a[i] = g.add(a[i], a[it->second]);
    }
    return a;
}

}  // namespace

ElementSet standard_generating_set(const GroupType& g) {
    ElementSet s(g);
    for (const auto& e : coordinate_units(g)) s.insert(e);
    return s;
}

ElementSet near_standard(const GroupType& g, const NearStandardSpec& spec) {
    std::vector<Element> basis = spec.basis.empty() ? coordinate_units(g) : spec.basis;
    if (!is_standard_basis(g, basis))
        throw std::invalid_argument("near_standard: basis is not a standard generating set");
    ElementSet s = ElementSet::singleton_zero(g);
    for (int idx : build_near_standard_elements(g, spec, basis)) s.insert(idx);
    return s;
}

Decomposition decompose_near_standard(const GroupType& g, const NearStandardSpec& spec,
                                      const ElementSet& a, const Element& target) {
    if (a != near_standard(g, spec))
        throw std::invalid_argument("decompose_near_standard: set was not produced by this spec");
    std::vector<Element> basis = spec.basis.empty() ? coordinate_units(g) : spec.basis;
    const auto elems = build_near_standard_elements(g, spec, basis);
    const int r = g.rank();
    const int want = g.index_of(target);

    // The box [0,m_1) x ... x [0,m_r) maps bijectively onto G; walk it.
    std::vector<int> lambda(r, 0);
    while (true) {
        int sum = 0;
        long long total = 0;
        for (int i = 0; i < r; ++i) {
            sum = g.add(sum, g.scale(lambda[i], elems[i]));
            total += lambda[i];
        }
        if (sum == want) return Decomposition{lambda, total};
        int i = 0;
        while (i < r && ++lambda[i] == g.invariant_factors()[i]) lambda[i++] = 0;
        if (i == r) throw std::logic_error("decompose_near_standard: box map missed the target");
    }
}

std::vector<NearStandardSpec> near_standard_specs(const GroupType& g) {
    std::vector<NearStandardSpec> specs;
    const int r = g.rank();
    if (r == 0) {
        specs.push_back(NearStandardSpec::standard());
        return specs;
    }

    std::vector<Element> basis;
    ElementSet span = ElementSet::singleton_zero(g);
    std::vector<ElementSet> span_stack{span};

    std::map<int, int> sigma;
    std::function<void(int)> pick_sigma = [&](int i) {
        if (i == r) {
            specs.push_back(NearStandardSpec{basis, sigma});
            return;
        }
        pick_sigma(i + 1);  // sigma undefined at i
        for (int s = i + 1; s < r; ++s) {
            sigma[i] = s;
            pick_sigma(i + 1);
            sigma.erase(i);
        }
    };

    std::function<void()> extend = [&]() {
        const int i = static_cast<int>(basis.size());
        if (i == r) {
            pick_sigma(0);
            return;
        }
        long long expect = 1;
        for (int j = 0; j <= i; ++j) expect *= g.invariant_factors()[j];
        for (int x = 0; x < g.order(); ++x) {
            if (g.element_order(x) != g.invariant_factors()[i]) continue;
            ElementSet gens = span_stack.back();
            gens.insert(x);
            ElementSet next = Subgroup::closure(g, gens).members();
            if (next.size() != expect) continue;  // partial sum not direct
            basis.push_back(g.element_at(x));
            span_stack.push_back(std::move(next));
            extend();
            span_stack.pop_back();
            basis.pop_back();
        }
    };
    extend();
    return specs;
}

std::vector<ElementSet> near_standard_family(const GroupType& g) {
    std::set<ElementSet> family;
    for (const auto& spec : near_standard_specs(g)) family.insert(near_standard(g, spec));
    return {family.begin(), family.end()};
}

ElementSet interval_set(int m, int rho) {
    if (rho < 2 || rho > m - 1) throw std::invalid_argument("interval_set requires rho in [2, m-1]");
    GroupType z = GroupType::of({m});
    const int k = (m - 2) / (rho - 1);
    ElementSet s(z);
    for (int i = 0; i <= k; ++i) s.insert(i);
    return s;
}

ElementSet punctured_coset(const GroupType& g, const Subgroup& h, const Element& coset_rep) {
    if (h.group() != g) throw std::invalid_argument("subgroup belongs to a different group");
    const int gi = g.index_of(coset_rep);
    if (h.contains(gi)) throw std::invalid_argument("punctured_coset: g must lie outside H");
    const auto& q = h.quotient_type();
    if (q.element_order(h.project(gi)) != q.order())
        throw std::invalid_argument("punctured_coset: g+H must generate G/H");
    if (h.size() < 3) throw std::invalid_argument("punctured_coset: |H| >= 3 required");
    ElementSet s = ElementSet::singleton_zero(g);
    for (int x : h.members().indices()) s.insert(g.add(gi, x));
    s.erase(gi);
    return s;
}

ElementSet odd_pairing_set(const GroupType& g, const Element& pair_sum) {
    const long long n = g.order();
    if (n % 2 == 0) throw std::invalid_argument("odd_pairing_set: group order must be odd");
    if (n < 5) throw std::invalid_argument("odd_pairing_set: group order must be at least 5");
    const int gi = g.index_of(pair_sum);
    if (gi == 0) throw std::invalid_argument("odd_pairing_set: pair sum must be non-zero");
    const int half = g.scale((n + 1) / 2, gi);  // the unique h with 2h = g

    ElementSet s(g);
    std::vector<char> done(static_cast<size_t>(n), 0);
    done[half] = 1;
    for (int x = 0; x < n; ++x) {
        if (done[x]) continue;
        const int partner = g.add(gi, g.neg(x));
        done[x] = done[partner] = 1;
        s.insert(std::min(x, partner));  // 0 beats g in its own pair
    }
    return s;
}

std::pair<GroupType, ElementSet> product_4maximal(const GroupType& g1, const ElementSet& a2) {
    if (g1.rank() > 1) throw std::invalid_argument("product_4maximal: G1 must be cyclic");
    const long long m = g1.order();
    if (m % 3 != 1 || m < 4)
        throw std::invalid_argument("product_4maximal: |G1| must be 1 mod 3 and at least 4");
    const GroupType& g2 = a2.group();
    if (a2.size() != (g2.order() - 1) / 3 || !is_aperiodic(a2) || !is_rho_maximal(a2, 4))
        throw std::invalid_argument(
            "product_4maximal: A2 must be an aperiodic 4-maximal set of size (|G2|-1)/3");

    auto [sum_group, embed] = direct_sum(g1, g2);
    ElementSet s(sum_group);
    const int n1 = g1.order_int();
    for (int x = 0; x <= (n1 - 4) / 3; ++x)
        for (int y = 0; y < g2.order(); ++y) s.insert(embed[x + n1 * y]);
    const int shift = (n1 - 1) / 3;
    for (int y : a2.indices()) s.insert(embed[shift + n1 * y]);
    return {sum_group, std::move(s)};
}

ElementSet double_coset(const GroupType& g, const Subgroup& h, const Element& coset_rep) {
    if (h.group() != g) throw std::invalid_argument("subgroup belongs to a different group");
    const auto& q = h.quotient_type();
    if (q.rank() > 1) throw std::invalid_argument("double_coset: G/H must be cyclic");
    const int gi = g.index_of(coset_rep);
    if (q.element_order(h.project(gi)) != q.order())
        throw std::invalid_argument("double_coset: g+H must generate G/H");
    ElementSet s = h.members();
    for (int x : h.members().indices()) s.insert(g.add(gi, x));
    return s;
}

ElementSet lift(const GroupType& g, const Subgroup& h, const ElementSet& a_bar) {
    if (h.group() != g) throw std::invalid_argument("subgroup belongs to a different group");
    if (a_bar.group() != h.quotient_type())
        throw std::invalid_argument("lift: set must live in the quotient G/H");
    if (!a_bar.contains(0)) throw std::invalid_argument("lift: 0 must belong to the lifted set");
    if (!diameter(a_bar)) throw std::invalid_argument("lift: set must generate G/H");
    ElementSet s(g);
    for (int x = 0; x < g.order(); ++x)
        if (a_bar.contains(h.project(x))) s.insert(x);
    return s;
}

}  // namespace addgen
