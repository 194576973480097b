#pragma once

#include <optional>
#include <string>

#include "addgen/group.hpp"

namespace addgen {

// Exact rational, kept unreduced comparisons away from floating point; the
// equality analysis of the s_rho upper bound needs exactness.
struct Rational {
    long long num = 0;
    long long den = 1;

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num * b.den == b.num * a.den;
    }
    friend bool operator<(long long v, const Rational& r) { return v * r.den < r.num; }
    friend bool operator<=(long long v, const Rational& r) { return v * r.den <= r.num; }
    friend bool operator==(long long v, const Rational& r) { return v * r.den == r.num; }
    std::string to_string() const;
};

enum class FormulaStatus { known, unknown, out_of_range };

// A closed-form value with its provenance tag; value is meaningful only when
// status == known.  Tags come from the fixed set
// {2.1, 2.4i, 2.4ii, 2.4iii, 2.4iv, 2.5, 2.6, 2.7i, 2.7ii, eq2.1}.
struct FormulaResult {
    FormulaStatus status = FormulaStatus::unknown;
    long long value = 0;
    std::string source;

    static FormulaResult known(long long v, std::string tag) {
        return {FormulaStatus::known, v, std::move(tag)};
    }
    static FormulaResult unknown() { return {FormulaStatus::unknown, 0, {}}; }
    static FormulaResult out_of_range(std::string tag = {}) {
        return {FormulaStatus::out_of_range, 0, std::move(tag)};
    }

    bool is_known() const { return status != FormulaStatus::unknown; }
    // out-of-range carries the definitional value 0
    std::optional<long long> as_value() const {
        if (status == FormulaStatus::unknown) return std::nullopt;
        return status == FormulaStatus::known ? value : 0;
    }
};

// diam+(G) = sum (m_i - 1).
long long diam_formula(const GroupType& g);

// Closed-form t_rho(G) / s_rho(G) where the literature pins them down;
// status=unknown where it does not (never interpolated).
FormulaResult t_formula(const GroupType& g, int rho);
FormulaResult s_formula(const GroupType& g, int rho);

// max{|H| : H <= G, exp(G/H) != 2, |G/H| = 2 mod 3}; 0 when no subgroup
// qualifies.
long long eta(const GroupType& g);

// t_rho(G) <= floor((|G|-2)/(rho-1)) + 1, rho >= 2.
long long t_upper_bound(const GroupType& g, int rho);

// s_rho(G) <= 2|G|/(rho+1), rho >= 4; exact rational, not rounded.
Rational s_upper_bound(const GroupType& g, int rho);

// s_rho(G) via the quotient recursion max |H| * t_rho(G/H), taking t values
// from the injected provider; nullopt when any needed t value is unknown.
using TProvider = std::function<std::optional<long long>(const GroupType&, int)>;
std::optional<long long> s_from_quotients(const GroupType& g, int rho, const TProvider& t_provider);

}  // namespace addgen
