#pragma once

#include <chrono>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "addgen/element_set.hpp"
#include "addgen/errors.hpp"
#include "addgen/group.hpp"

namespace addgen {

// Limits for the brute-force tiers.  The exhaustive tier scans every subset;
// the branch-and-bound tier reports bounds and only claims exactness when the
// search completes.
struct SearchBudget {
    long long exhaustive_order_bound = 16;
    long long bnb_order_bound = 64;
    std::chrono::milliseconds time_limit{0};  // 0 = unlimited
    int jobs = 1;

    void validate() const;
};

// One rho-maximal subset found by enumeration.  The set equals its own A_0
// (rho-maximal sets contain 0); the certificate is an element outside
// <A>_{rho-1}^+.
struct MaximalSetRecord {
    ElementSet set;
    int rho;
    bool aperiodic;
    bool generating;
    Element certificate;

    std::string to_line() const;  // one-record line form
};

// Precomputed per-group scan over all subsets containing 0, for groups within
// the exhaustive bound.  For each subset A_0 it stores
//   limit(A) := max { rho : <A>_{rho-1}^+ != G }
// which equals diam_A^+(G) when A generates and is infinite otherwise.
// Shared and immutable once built; memoized per group type.
class SubsetSurvey {
public:
    static constexpr int kInfiniteLimit = 1 << 20;

    static std::shared_ptr<const SubsetSurvey> get(const GroupType& g, const SearchBudget& budget);

    const GroupType& group() const { return group_; }
    int n() const { return n_; }
    std::uint32_t mask_count() const { return static_cast<std::uint32_t>(limit_.size()); }

    // Masks range over the non-zero elements: bit i <-> element index i+1.
    int limit(std::uint32_t mask) const {
        std::uint8_t v = limit_[mask];
        return v == 0xFF ? kInfiniteLimit : v;
    }
    bool generating(std::uint32_t mask) const { return limit_[mask] != 0xFF; }
    int set_size(std::uint32_t mask) const;  // includes the implied 0

    // max over g not in A of limit(A u {g}); kInfiniteLimit when some
    // extension fails to generate.
    int max_extension_limit(std::uint32_t mask) const;

    bool is_rho_maximal(std::uint32_t mask, int rho) const {
        return rho <= limit(mask) && rho > max_extension_limit(mask);
    }
    bool aperiodic(std::uint32_t mask) const;

    int absolute_diameter() const { return abs_diam_; }

    ElementSet set_of(std::uint32_t mask) const;          // with 0 adjoined
    std::uint32_t mask_of(const ElementSet& s) const;     // 0 bit dropped
    std::uint64_t word_of(std::uint32_t mask) const { return (static_cast<std::uint64_t>(mask) << 1) | 1; }

    // <A>_rho^+ as a membership word.
    std::uint64_t bounded_generation_word(std::uint64_t set_word, int rho) const;
    std::uint64_t full_word() const { return full_; }
    int perm(int a, int x) const { return perm_[a * n_ + x]; }

private:
    SubsetSurvey() = default;
    void build(const GroupType& g, int jobs);

    GroupType group_;
    int n_ = 1;
    std::uint64_t full_ = 1;
    int abs_diam_ = 0;
    std::vector<std::uint8_t> perm_;   // perm[a*n + x] = x + a
    std::vector<std::uint8_t> limit_;  // per non-zero mask; 0xFF = non-generating
};

// True iff <A>_{rho-1}^+ != G and every one-element extension covers G in
// rho-1 steps.  Direct check from the definition; any group size.
bool is_rho_maximal(const ElementSet& a, int rho);

// All rho-maximal subsets (optionally only the aperiodic ones), sorted
// lexicographically by member indices.  Exhaustive tier only.
std::vector<MaximalSetRecord> enumerate_rho_maximal(const GroupType& g, int rho,
                                                    bool aperiodic_only,
                                                    const SearchBudget& budget = {});

// t_rho(G): maximum size of an aperiodic rho-maximal set, by exhaustive scan;
// 0 outside [1, diam+(G)] and for rho = 1.  Falls back to branch and bound
// within the bnb bound and throws BudgetError (with bounds) when inexact.
long long t_oracle(const GroupType& g, int rho, const SearchBudget& budget = {});

// s_rho(G): maximum size of a generating set with diam >= rho.  Direct scan
// within the exhaustive bound; otherwise the quotient recursion
// s_rho(G) = max |H| * t_rho(G/H) over proper subgroups H.
long long s_oracle(const GroupType& g, int rho, const SearchBudget& budget = {});

// diam+(G) = max over generating subsets of diam_A^+(G).
long long absolute_diameter_oracle(const GroupType& g, const SearchBudget& budget = {});

// All A_0 with diam_A^+(G) = diam+(G), sorted canonically.
std::vector<ElementSet> enumerate_extremal_generating_sets(const GroupType& g,
                                                           const SearchBudget& budget = {});

// Branch-and-bound tier: bounds on t_rho(G), with exact value when the
// search completed.
struct BnbOutcome {
    long long lower = 0;
    long long upper = 0;
    std::optional<long long> exact;
    bool completed = false;
    std::optional<ElementSet> witness;
};

BnbOutcome t_bnb(const GroupType& g, int rho, const SearchBudget& budget = {});

}  // namespace addgen
