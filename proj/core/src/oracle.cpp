#include "addgen/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "addgen/literals.hpp"
#include "addgen/subgroup.hpp"

namespace addgen {

namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
    Clock::time_point at;
    bool armed = false;

    static Deadline from(const SearchBudget& b) {
        Deadline d;
        if (b.time_limit.count() > 0) {
            d.at = Clock::now() + b.time_limit;
            d.armed = true;
        }
        return d;
    }
    bool expired() const { return armed && Clock::now() > at; }
};

}  // namespace

void SearchBudget::validate() const {
    if (exhaustive_order_bound > bnb_order_bound)
        throw std::invalid_argument("exhaustive bound must not exceed the branch-and-bound bound");
    if (jobs < 1) throw std::invalid_argument("worker count must be positive");
}

std::string MaximalSetRecord::to_line() const {
    const auto& g = set.group();
    std::string line = "group=" + format_group(g);
    line += " rho=" + std::to_string(rho);
    line += " set=" + format_set(set);
    line += " size=" + std::to_string(set.size());
    line += std::string(" aperiodic=") + (aperiodic ? "1" : "0");
    line += std::string(" generating=") + (generating ? "1" : "0");
    line += " certificate=" + format_element(g, certificate);
    return line;
}

// ---------------------------------------------------------------------------
// SubsetSurvey

void SubsetSurvey::build(const GroupType& g, int jobs) {
    group_ = g;
    n_ = g.order_int();
    full_ = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;

    perm_.resize(static_cast<size_t>(n_) * n_);
    for (int a = 0; a < n_; ++a)
        for (int x = 0; x < n_; ++x) perm_[a * n_ + x] = static_cast<std::uint8_t>(g.add(a, x));

    const std::uint32_t masks = std::uint32_t{1} << (n_ - 1);
    limit_.assign(masks, 0);

    auto scan = [this](std::uint32_t lo, std::uint32_t hi) {
        std::vector<int> gens;
        gens.reserve(n_);
        for (std::uint32_t mask = lo; mask < hi; ++mask) {
            gens.clear();
            for (std::uint32_t m = mask; m; m &= m - 1) gens.push_back(std::countr_zero(m) + 1);
            std::uint64_t reached = 1, frontier = 1;
            int level = 0;
            std::uint8_t result;
            if (reached == full_) {
                result = 0;  // trivial group
            } else {
                while (true) {
                    std::uint64_t grown = 0;
                    for (int a : gens)
                        for (std::uint64_t f = frontier; f; f &= f - 1)
                            grown |= std::uint64_t{1} << perm_[a * n_ + std::countr_zero(f)];
                    frontier = grown & ~reached;
                    reached |= frontier;
                    ++level;
                    if (reached == full_) {
                        result = static_cast<std::uint8_t>(level);
                        break;
                    }
                    if (frontier == 0) {
                        result = 0xFF;  // does not generate
                        break;
                    }
                }
            }
            limit_[mask] = result;
        }
    };

    jobs = std::min<int>(std::max(jobs, 1), 64);
    if (jobs == 1 || masks < 1024) {
        scan(0, masks);
    } else {
        std::vector<std::thread> pool;
        std::uint32_t chunk = (masks + jobs - 1) / jobs;
        for (int t = 0; t < jobs; ++t) {
            std::uint32_t lo = t * chunk, hi = std::min(masks, lo + chunk);
            if (lo < hi) pool.emplace_back(scan, lo, hi);
        }
        for (auto& t : pool) t.join();
    }

    abs_diam_ = 0;
    for (std::uint32_t mask = 0; mask < masks; ++mask)
        if (limit_[mask] != 0xFF) abs_diam_ = std::max<int>(abs_diam_, limit_[mask]);
}

std::shared_ptr<const SubsetSurvey> SubsetSurvey::get(const GroupType& g, const SearchBudget& budget) {
    budget.validate();
    if (g.order() > budget.exhaustive_order_bound)
        throw BudgetError("group order " + std::to_string(g.order()) +
                          " exceeds the exhaustive bound " +
                          std::to_string(budget.exhaustive_order_bound));
    if (g.order() > 24)
        throw BudgetError("exhaustive subset scan is capped at order 24");

    static std::mutex mu;
    static std::map<std::vector<int>, std::shared_ptr<const SubsetSurvey>> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(g.invariant_factors()); it != cache.end()) return it->second;
    }
    auto survey = std::shared_ptr<SubsetSurvey>(new SubsetSurvey());
    survey->build(g, budget.jobs);
    std::lock_guard lock(mu);
    auto [it, inserted] = cache.emplace(g.invariant_factors(), survey);
    return it->second;
}

int SubsetSurvey::set_size(std::uint32_t mask) const { return std::popcount(mask) + 1; }

int SubsetSurvey::max_extension_limit(std::uint32_t mask) const {
    int best = 0;
    for (int i = 0; i < n_ - 1; ++i) {
        if (mask >> i & 1) continue;
        best = std::max(best, limit(mask | (std::uint32_t{1} << i)));
        if (best == kInfiniteLimit) break;
    }
    return best;
}

bool SubsetSurvey::aperiodic(std::uint32_t mask) const {
    const std::uint64_t w = word_of(mask);
    for (int t = 1; t < n_; ++t) {
        std::uint64_t shifted = 0;
        for (std::uint64_t m = w; m; m &= m - 1)
            shifted |= std::uint64_t{1} << perm_[t * n_ + std::countr_zero(m)];
        if (shifted == w) return false;
    }
    return true;
}

ElementSet SubsetSurvey::set_of(std::uint32_t mask) const {
    return ElementSet::from_word(group_, word_of(mask));
}

std::uint32_t SubsetSurvey::mask_of(const ElementSet& s) const {
    return static_cast<std::uint32_t>(s.word() >> 1);
}

std::uint64_t SubsetSurvey::bounded_generation_word(std::uint64_t set_word, int rho) const {
    std::uint64_t reached = 1, frontier = 1;
    for (int step = 0; step < rho && frontier; ++step) {
        std::uint64_t grown = 0;
        for (std::uint64_t a = set_word & ~std::uint64_t{1}; a; a &= a - 1) {
            const int gen = std::countr_zero(a);
            for (std::uint64_t f = frontier; f; f &= f - 1)
                grown |= std::uint64_t{1} << perm_[gen * n_ + std::countr_zero(f)];
        }
        frontier = grown & ~reached;
        reached |= frontier;
    }
    return reached;
}

// ---------------------------------------------------------------------------
// Definition-level checks

bool is_rho_maximal(const ElementSet& a, int rho) {
    if (rho < 1) throw std::invalid_argument("rho must be at least 1");
    const auto& g = a.group();
    ElementSet covered = bounded_generation(a, rho - 1);
    if (covered.size() == g.order()) return false;
    for (int x = 0; x < g.order(); ++x) {
        if (a.contains(x)) continue;
        ElementSet ext = a;
        ext.insert(x);
        if (bounded_generation(ext, rho - 1).size() != g.order()) return false;
    }
    return true;
}

std::vector<MaximalSetRecord> enumerate_rho_maximal(const GroupType& g, int rho,
                                                    bool aperiodic_only,
                                                    const SearchBudget& budget) {
    if (rho < 1) throw std::invalid_argument("rho must be at least 1");
    auto survey = SubsetSurvey::get(g, budget);
    std::vector<MaximalSetRecord> out;
    for (std::uint32_t mask = 0; mask < survey->mask_count(); ++mask) {
        if (!survey->is_rho_maximal(mask, rho)) continue;
        const bool ap = survey->aperiodic(mask);
        if (aperiodic_only && !ap) continue;
        const std::uint64_t reach = survey->bounded_generation_word(survey->word_of(mask), rho - 1);
        const int missing = std::countr_zero(~reach & survey->full_word());
        out.push_back(MaximalSetRecord{
            .set = survey->set_of(mask),
            .rho = rho,
            .aperiodic = ap,
            .generating = survey->generating(mask),
            .certificate = g.element_at(missing),
        });
    }
    std::sort(out.begin(), out.end(), [](const MaximalSetRecord& a, const MaximalSetRecord& b) {
        return a.set < b.set;
    });
    return out;
}

long long absolute_diameter_oracle(const GroupType& g, const SearchBudget& budget) {
    if (g.trivial()) return 0;
    return SubsetSurvey::get(g, budget)->absolute_diameter();
}

long long t_oracle(const GroupType& g, int rho, const SearchBudget& budget) {
    budget.validate();
    if (rho < 1) return 0;
    if (g.order() <= budget.exhaustive_order_bound && g.order() <= 24) {
        auto survey = SubsetSurvey::get(g, budget);
        if (rho == 1 || rho > survey->absolute_diameter()) return 0;
        long long best = 0;
        for (std::uint32_t mask = 0; mask < survey->mask_count(); ++mask) {
            if (survey->set_size(mask) <= best) continue;
            if (survey->is_rho_maximal(mask, rho) && survey->aperiodic(mask))
                best = survey->set_size(mask);
        }
        return best;
    }
    if (g.order() <= budget.bnb_order_bound) {
        BnbOutcome o = t_bnb(g, rho, budget);
        if (o.exact) return *o.exact;
        throw BudgetError("t_oracle: branch-and-bound search did not complete", o.lower, o.upper);
    }
    throw BudgetError("t_oracle: group order " + std::to_string(g.order()) +
                      " exceeds every search tier");
}

long long s_oracle(const GroupType& g, int rho, const SearchBudget& budget) {
    budget.validate();
    if (rho < 1) return 0;
    if (g.trivial()) return 0;
    if (rho == 1) return g.order();
    if (g.order() <= budget.exhaustive_order_bound && g.order() <= 24) {
        auto survey = SubsetSurvey::get(g, budget);
        long long best = 0;
        for (std::uint32_t mask = 0; mask < survey->mask_count(); ++mask) {
            const int lim = survey->limit(mask);
            if (lim != SubsetSurvey::kInfiniteLimit && lim >= rho)
                best = std::max<long long>(best, survey->set_size(mask));
        }
        return best;
    }
    // Quotient recursion: s_rho(G) = max |H| * t_rho(G/H) over H < G.
    long long best = 0;
    for (const auto& h : enumerate_subgroups(g)) {
        if (h.is_whole_group()) continue;
        best = std::max(best, h.size() * t_oracle(h.quotient_type(), rho, budget));
    }
    return best;
}

std::vector<ElementSet> enumerate_extremal_generating_sets(const GroupType& g,
                                                           const SearchBudget& budget) {
    auto survey = SubsetSurvey::get(g, budget);
    const int d = survey->absolute_diameter();
    std::vector<ElementSet> out;
    for (std::uint32_t mask = 0; mask < survey->mask_count(); ++mask)
        if (survey->generating(mask) && survey->limit(mask) == d) out.push_back(survey->set_of(mask));
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Branch-and-bound tier

namespace {

struct BnbSearch {
    const GroupType& g;
    int n;
    int rho;
    std::uint64_t full;
    std::vector<std::uint8_t> perm;
    Deadline deadline;
    bool timed_out = false;

    long long best = 0;
    std::optional<ElementSet> witness;

    explicit BnbSearch(const GroupType& grp, int r, const SearchBudget& b)
        : g(grp), n(grp.order_int()), rho(r), deadline(Deadline::from(b)) {
        full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
        perm.resize(static_cast<size_t>(n) * n);
        for (int a = 0; a < n; ++a)
            for (int x = 0; x < n; ++x) perm[a * n + x] = static_cast<std::uint8_t>(g.add(a, x));
    }

    std::uint64_t reach(std::uint64_t set_word, int steps) const {
        std::uint64_t reached = 1, frontier = 1;
        for (int s = 0; s < steps && frontier; ++s) {
            std::uint64_t grown = 0;
            for (std::uint64_t a = set_word & ~std::uint64_t{1}; a; a &= a - 1) {
                const int gen = std::countr_zero(a);
                for (std::uint64_t f = frontier; f; f &= f - 1)
                    grown |= std::uint64_t{1} << perm[gen * n + std::countr_zero(f)];
            }
            frontier = grown & ~reached;
            reached |= frontier;
        }
        return reached;
    }

    bool aperiodic(std::uint64_t w) const {
        for (int t = 1; t < n; ++t) {
            std::uint64_t shifted = 0;
            for (std::uint64_t m = w; m; m &= m - 1)
                shifted |= std::uint64_t{1} << perm[t * n + std::countr_zero(m)];
            if (shifted == w) return false;
        }
        return true;
    }

    // DFS over subsets containing 0, elements adjoined in ascending index
    // order.  A node is kept only while <A>_{rho-1}^+ != G, which is
    // downward closed, so every candidate set is reached exactly once.
    void dfs(std::uint64_t word, int last) {
        if (timed_out) return;
        if (deadline.expired()) {
            timed_out = true;
            return;
        }
        bool maximal = true;
        for (int x = 1; x < n && !timed_out; ++x) {
            if (word >> x & 1) continue;
            const std::uint64_t ext = word | (std::uint64_t{1} << x);
            const bool ext_open = reach(ext, rho - 1) != full;
            if (ext_open) maximal = false;
            if (ext_open && x > last &&
                std::popcount(ext) + (n - 1 - x) > best)  // size prune
                dfs(ext, x);
        }
        if (maximal && !timed_out) {
            const long long size = std::popcount(word);
            if (size > best && aperiodic(word)) {
                best = size;
                witness = ElementSet::from_word(g, word);
            }
        }
    }
};

}  // namespace

BnbOutcome t_bnb(const GroupType& g, int rho, const SearchBudget& budget) {
    budget.validate();
    if (g.order() > budget.bnb_order_bound || g.order() > 64)
        throw BudgetError("t_bnb: group order " + std::to_string(g.order()) +
                          " exceeds the branch-and-bound bound");
    BnbOutcome out;
    if (rho < 1 || rho == 1) {
        out.exact = 0;
        out.completed = true;
        return out;
    }
    // Prop 2.8 upper bound anchors the search.
    out.upper = (g.order() - 2) / (rho - 1) + 1;

    BnbSearch search(g, rho, budget);
    if (search.reach(1, rho - 1) != search.full) search.dfs(1, 0);
    out.lower = search.best;
    out.witness = search.witness;
    if (!search.timed_out) {
        out.exact = search.best;
        out.upper = search.best;
        out.completed = true;
    }
    return out;
}

}  // namespace addgen
