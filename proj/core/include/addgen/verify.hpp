#pragma once

#include <optional>
#include <string>
#include <vector>

#include "addgen/element_set.hpp"
#include "addgen/group.hpp"
#include "addgen/oracle.hpp"

namespace addgen {

enum class Verdict { pass, fail, skipped, reported_only };

std::string to_string(Verdict v);

// One verification outcome: a claim tag, the inputs it was checked on, the
// values that were compared, and any witness sets.  A report passes only when
// every value pair present agrees and every witness validated; skipped means
// the budget did not cover the check (never a silent pass); reported_only is
// for open-problem probes whose values are recorded, not asserted.
struct VerificationReport {
    std::string theorem_id;
    GroupType group;
    std::optional<int> rho;
    std::optional<long long> oracle_value;
    std::optional<long long> formula_value;
    std::optional<std::string> bound_value;
    std::vector<ElementSet> witnesses;
    Verdict verdict = Verdict::skipped;
    std::string notes;
    long long runtime_ms = 0;  // informational; excluded from to_line()

    // Canonical single-line form; identical inputs yield identical lines.
    std::string to_line() const;
    std::string to_csv_row() const;
    static const char* csv_header();
};

// The claim tags verify_theorem understands, in canonical order.
const std::vector<std::string>& theorem_tags();

// Kneser identity check on one pair: when |A+B| <= |A|+|B|-1, verifies
// |A+B| = |A+H| + |B+H| - |H| with H the period of A+B; otherwise a vacuous
// pass ("hypothesis not met").
VerificationReport verify_kneser(const ElementSet& a, const ElementSet& b);

// Dispatch on the tag; when rho is absent, all applicable rho values for the
// group are checked in one report.  Groups beyond the budget yield skipped.
VerificationReport verify_theorem(const std::string& id, const GroupType& g,
                                  std::optional<int> rho = std::nullopt,
                                  const SearchBudget& budget = {});

// The Z_2 (+) Z_{2^n} family: every (2^n - 2)-maximal subset is periodic, so
// t_{2^n-2} vanishes.  n = 3 runs the exhaustive tier; n >= 4 runs the
// constrained tier (candidate-superset search after coordinate
// normalization).  The notes record which tier ran.
VerificationReport verify_appendix(int n, const SearchBudget& budget = {});

// Every applicable (tag, group, rho) task over all group types of order
// 2..max_order, in canonical task order.  Fans out across budget.jobs
// workers; the merged result is independent of the worker count.
std::vector<VerificationReport> verify_sweep(long long max_order, const SearchBudget& budget = {});

// Open-problem probe: scan small (G, rho) for vanishing t_rho(G) and report
// the instances found.  reported_only; no completeness is claimed.
std::vector<VerificationReport> scan_vanishing_t(long long max_order,
                                                 const SearchBudget& budget = {});

// Line-per-report form (canonical) and CSV summary (includes runtimes).
std::string serialize_reports(const std::vector<VerificationReport>& reports);
std::string reports_to_csv(const std::vector<VerificationReport>& reports);

}  // namespace addgen
