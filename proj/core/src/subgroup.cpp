#include "addgen/subgroup.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "addgen/errors.hpp"

namespace addgen {

namespace {

// Closure of {0} union gens under addition (inverses come for free in a
// finite group).
ElementSet close_under_addition(const GroupType& g, const std::vector<int>& gens) {
    ElementSet s = ElementSet::singleton_zero(g);
    std::vector<int> queue{0};
    while (!queue.empty()) {
        int x = queue.back();
        queue.pop_back();
        for (int a : gens) {
            int y = g.add(x, a);
            if (!s.contains(y)) {
                s.insert(y);
                queue.push_back(y);
            }
        }
    }
    return s;
}

bool is_closed_subgroup(const ElementSet& s) {
    const auto& g = s.group();
    if (!s.contains(0)) return false;
    auto idx = s.indices();
    for (int x : idx) {
        if (!s.contains(g.neg(x))) return false;
        for (int y : idx)
            if (!s.contains(g.add(x, y))) return false;
    }
    return true;
}

// Quotient type and projection for a verified subgroup member set.
std::pair<GroupType, std::vector<int>> quotient_of_members(const ElementSet& members) {
    const auto& g = members.group();
    const int n = g.order_int();
    const auto h = members.indices();

    // Coset ids in order of first appearance when scanning element indices.
    std::vector<int> coset_id(n, -1);
    std::vector<int> rep;
    for (int x = 0; x < n; ++x) {
        if (coset_id[x] >= 0) continue;
        int id = static_cast<int>(rep.size());
        rep.push_back(x);
        for (int s : h) coset_id[g.add(x, s)] = id;
    }
    const int nq = static_cast<int>(rep.size());

    auto add = [&](int a, int b) { return coset_id[g.add(rep[a], rep[b])]; };
    auto [qtype, iso] = canonical_form(nq, add);

    std::vector<int> proj(n);
    for (int x = 0; x < n; ++x) proj[x] = iso[coset_id[x]];
    return {std::move(qtype), std::move(proj)};
}

}  // namespace

Subgroup Subgroup::closure(const GroupType& g, const ElementSet& a) {
    if (a.group() != g) throw std::invalid_argument("generator set belongs to a different group");
    ElementSet members = close_under_addition(g, a.indices());
    auto [qtype, proj] = quotient_of_members(members);
    return Subgroup(std::move(members), std::move(qtype), std::move(proj));
}

Subgroup Subgroup::closure(const GroupType& g, std::initializer_list<Element> a) {
    return closure(g, ElementSet(g, a));
}

Subgroup Subgroup::from_members(ElementSet members) {
    if (!is_closed_subgroup(members)) throw std::invalid_argument("member set is not a subgroup");
    auto [qtype, proj] = quotient_of_members(members);
    return Subgroup(std::move(members), std::move(qtype), std::move(proj));
}

std::vector<Subgroup> enumerate_subgroups(const GroupType& g, long long order_bound) {
    if (g.order() > order_bound)
        throw BudgetError("enumerate_subgroups: group order " + std::to_string(g.order()) +
                          " exceeds bound " + std::to_string(order_bound));
    const int n = g.order_int();

    // Lattice closure: start from {0}, adjoin <H u {x}> until fixpoint.
    std::map<std::vector<int>, ElementSet> found;
    ElementSet triv = ElementSet::singleton_zero(g);
    found.emplace(triv.indices(), triv);
    std::vector<ElementSet> work{triv};
    while (!work.empty()) {
        ElementSet h = std::move(work.back());
        work.pop_back();
        for (int x = 0; x < n; ++x) {
            if (h.contains(x)) continue;
            auto gens = h.indices();
            gens.push_back(x);
            ElementSet bigger = close_under_addition(g, gens);
            auto key = bigger.indices();
            if (!found.contains(key)) {
                found.emplace(key, bigger);
                work.push_back(std::move(bigger));
            }
        }
    }

    std::vector<ElementSet> sets;
    sets.reserve(found.size());
    for (auto& [key, s] : found) sets.push_back(std::move(s));
    std::sort(sets.begin(), sets.end(), [](const ElementSet& a, const ElementSet& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });

    std::vector<Subgroup> out;
    out.reserve(sets.size());
    for (auto& s : sets) out.push_back(Subgroup::from_members(std::move(s)));
    return out;
}

std::pair<GroupType, std::vector<int>> quotient(const GroupType& g, const Subgroup& h) {
    if (h.group() != g) throw std::invalid_argument("subgroup belongs to a different group");
    return {h.quotient_type(), h.coset_index()};
}

Subgroup period(const ElementSet& s) { return Subgroup::from_members(period_set(s)); }

}  // namespace addgen
