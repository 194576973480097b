#include "addgen/formulas.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "addgen/subgroup.hpp"

namespace addgen {

std::string Rational::to_string() const {
    if (num % den == 0) return std::to_string(num / den);
    return std::to_string(num) + "/" + std::to_string(den);
}

long long diam_formula(const GroupType& g) {
    long long d = 0;
    for (int m : g.invariant_factors()) d += m - 1;
    return d;
}

namespace {

bool every_divisor_is_1_mod_3(long long n) {
    // Trial division; equivalent to all prime divisors being 1 mod 3.
    for (long long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        if (d % 3 != 1 || (n / d) % 3 != 1) return false;
    }
    return true;
}

// Tag precedence when several theorem cases apply to the same (G, rho): the
// narrower case wins.  All applicable cases are computed and must agree.
int tag_rank(const std::string& tag) {
    if (tag == "eq2.1") return 0;
    if (tag == "2.7i" || tag == "2.7ii") return 1;
    if (tag == "2.5") return 2;
    if (tag == "2.4iv") return 3;
    return 4;
}

FormulaResult pick(const std::vector<FormulaResult>& candidates) {
    if (candidates.empty()) return FormulaResult::unknown();
    const FormulaResult* best = &candidates.front();
    for (const auto& c : candidates) {
        if (c.value != best->value)
            throw std::logic_error("formula dispatch: overlapping theorem cases disagree (" +
                                   best->source + " vs " + c.source + ")");
        if (tag_rank(c.source) < tag_rank(best->source)) best = &c;
    }
    return *best;
}

long long t_cyclic(long long m, int rho) { return (m - 2) / (rho - 1) + 1; }

long long s_cyclic(long long m, int rho) {
    long long best = 0;
    for (long long d = 1; d <= m; ++d)
        if (m % d == 0 && d >= rho + 1) best = std::max(best, (m / d) * t_cyclic(d, rho));
    return best;
}

}  // namespace

FormulaResult t_formula(const GroupType& g, int rho) {
    const long long d = diam_formula(g);
    if (rho < 1 || rho > d) return FormulaResult::out_of_range();
    if (rho == 1) return FormulaResult::known(0, "2.4i");

    const long long n = g.order();
    std::vector<FormulaResult> cases;
    if (g.rank() == 1) cases.push_back(FormulaResult::known(t_cyclic(n, rho), "2.5"));
    if (rho == d) cases.push_back(FormulaResult::known(g.rank() + 1, "2.4iv"));
    if (rho == 2) cases.push_back(FormulaResult::known(n - 1, "2.4ii"));
    if (rho == 3) cases.push_back(FormulaResult::known(n / 2, "2.4iii"));
    if (rho == 4) {
        if (n % 3 == 0) cases.push_back(FormulaResult::known(n / 3, "2.7i"));
        else if (every_divisor_is_1_mod_3(n))
            cases.push_back(FormulaResult::known((n - 1) / 3, "2.7i"));
        if (g.exponent() == 2 && g.rank() >= 4)
            cases.push_back(FormulaResult::known((1LL << (g.rank() - 2)) + 1, "eq2.1"));
    }
    return pick(cases);
}

FormulaResult s_formula(const GroupType& g, int rho) {
    const long long d = diam_formula(g);
    if (rho < 1 || rho > d) return FormulaResult::out_of_range();
    if (rho == 1) return FormulaResult::known(g.order(), "2.4i");

    const long long n = g.order();
    std::vector<FormulaResult> cases;
    if (g.rank() == 1) cases.push_back(FormulaResult::known(s_cyclic(n, rho), "2.5"));
    if (rho == d) cases.push_back(FormulaResult::known(g.rank() + 1, "2.4iv"));
    if (rho == 2) cases.push_back(FormulaResult::known(n - 1, "2.4ii"));
    if (rho == 3) cases.push_back(FormulaResult::known(n / 2, "2.4iii"));
    if (rho == 4) {
        if (g.exponent() == 2) {
            if (g.rank() >= 4)
                cases.push_back(FormulaResult::known(5LL << (g.rank() - 4), "eq2.1"));
        } else {
            const long long e = eta(g);
            long long v;
            if (e != 0) v = (n + e) / 3;
            else if (n % 3 == 0) v = n / 3;
            else v = (n - 1) / 3;
            cases.push_back(FormulaResult::known(v, "2.7ii"));
        }
    }
    return pick(cases);
}

long long eta(const GroupType& g) {
    long long best = 0;
    for (const auto& h : enumerate_subgroups(g)) {
        const auto& q = h.quotient_type();
        if (q.exponent() != 2 && q.order() % 3 == 2) best = std::max(best, h.size());
    }
    return best;
}

long long t_upper_bound(const GroupType& g, int rho) {
    if (rho < 2) throw std::invalid_argument("t_upper_bound requires rho >= 2");
    if (g.order() < 2) return 0;
    return (g.order() - 2) / (rho - 1) + 1;
}

Rational s_upper_bound(const GroupType& g, int rho) {
    if (rho < 4) throw std::invalid_argument("s_upper_bound requires rho >= 4");
    return Rational{2 * g.order(), rho + 1};
}

std::optional<long long> s_from_quotients(const GroupType& g, int rho, const TProvider& t_provider) {
    if (rho < 2) throw std::invalid_argument("s_from_quotients requires rho >= 2");
    long long best = 0;
    for (const auto& h : enumerate_subgroups(g)) {
        if (h.is_whole_group()) continue;
        auto t = t_provider(h.quotient_type(), rho);
        if (!t) return std::nullopt;
        best = std::max(best, h.size() * *t);
    }
    return best;
}

}  // namespace addgen
