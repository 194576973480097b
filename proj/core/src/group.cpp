#include "addgen/group.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>
#include <stdexcept>

namespace addgen {

namespace {

// Dense addition tables are cached up to this order.
constexpr long long kAddTableCutoff = 1024;

long long lcm_ll(long long a, long long b) { return a / std::gcd(a, b) * b; }

}  // namespace

GroupType GroupType::from_canonical(std::vector<int> factors) {
    auto impl = std::make_shared<Impl>();
    impl->factors = std::move(factors);
    impl->radix.resize(impl->factors.size());
    long long n = 1;
    for (size_t i = 0; i < impl->factors.size(); ++i) {
        impl->radix[i] = static_cast<int>(n);
        n *= impl->factors[i];
    }
    impl->order = n;
    if (n <= kAddTableCutoff) {
        const int ni = static_cast<int>(n);
        const int r = static_cast<int>(impl->factors.size());
        impl->add_table.resize(static_cast<size_t>(ni) * ni);
        impl->neg_table.resize(ni);
        std::vector<int> ca(r), cb(r);
        for (int a = 0; a < ni; ++a) {
            int x = a;
            for (int i = 0; i < r; ++i) {
                ca[i] = x % impl->factors[i];
                x /= impl->factors[i];
            }
            int negidx = 0;
            for (int i = 0; i < r; ++i) {
                int c = ca[i] == 0 ? 0 : impl->factors[i] - ca[i];
                negidx += c * impl->radix[i];
            }
            impl->neg_table[a] = negidx;
            for (int b = 0; b <= a; ++b) {
                int y = b;
                int idx = 0;
                for (int i = 0; i < r; ++i) {
                    int c = ca[i] + y % impl->factors[i];
                    y /= impl->factors[i];
                    if (c >= impl->factors[i]) c -= impl->factors[i];
                    idx += c * impl->radix[i];
                }
                impl->add_table[static_cast<size_t>(a) * ni + b] = idx;
                impl->add_table[static_cast<size_t>(b) * ni + a] = idx;
            }
        }
    }
    return GroupType(std::move(impl));
}

GroupType::GroupType() { *this = from_canonical({}); }

GroupType GroupType::of(std::span<const int> moduli) {
    std::vector<int> m;
    for (int v : moduli) {
        if (v < 1) throw std::invalid_argument("group modulus must be positive");
        if (v > 1) m.push_back(v);
    }
    // Pairwise (a,b) -> (gcd,lcm) sweeps until the divisibility chain holds.
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < m.size(); ++i) {
            for (size_t j = i + 1; j < m.size(); ++j) {
                if (m[j] % m[i] != 0) {
                    long long g = std::gcd(m[i], m[j]);
                    long long l = lcm_ll(m[i], m[j]);
                    m[i] = static_cast<int>(g);
                    m[j] = static_cast<int>(l);
                    changed = true;
                }
            }
        }
        std::erase(m, 1);
    }
    std::sort(m.begin(), m.end());
    return from_canonical(std::move(m));
}

GroupType GroupType::of(std::initializer_list<int> moduli) {
    return of(std::span<const int>(moduli.begin(), moduli.size()));
}

int GroupType::exponent() const {
    return impl_->factors.empty() ? 1 : impl_->factors.back();
}

int GroupType::index_of(const Element& g) const {
    const auto& f = impl_->factors;
    if (g.coords.size() != f.size())
        throw std::invalid_argument("element rank does not match group rank");
    int idx = 0;
    for (size_t i = 0; i < f.size(); ++i) {
        if (g.coords[i] < 0 || g.coords[i] >= f[i])
            throw std::invalid_argument("element coordinate out of range");
        idx += g.coords[i] * impl_->radix[i];
    }
    return idx;
}

Element GroupType::element_at(int idx) const {
    const auto& f = impl_->factors;
    Element g;
    g.coords.resize(f.size());
    for (size_t i = 0; i < f.size(); ++i) {
        g.coords[i] = idx % f[i];
        idx /= f[i];
    }
    return g;
}

int GroupType::add(int a, int b) const {
    if (!impl_->add_table.empty())
        return impl_->add_table[static_cast<size_t>(a) * impl_->order + b];
    const auto& f = impl_->factors;
    int idx = 0;
    for (size_t i = 0; i < f.size(); ++i) {
        int c = a % f[i] + b % f[i];
        a /= f[i];
        b /= f[i];
        if (c >= f[i]) c -= f[i];
        idx += c * impl_->radix[i];
    }
    return idx;
}

int GroupType::neg(int a) const {
    if (!impl_->neg_table.empty()) return impl_->neg_table[a];
    const auto& f = impl_->factors;
    int idx = 0;
    for (size_t i = 0; i < f.size(); ++i) {
        int c = a % f[i];
        a /= f[i];
        if (c != 0) c = f[i] - c;
        idx += c * impl_->radix[i];
    }
    return idx;
}

int GroupType::scale(long long k, int a) const {
    const auto& f = impl_->factors;
    int idx = 0;
    for (size_t i = 0; i < f.size(); ++i) {
        int c = a % f[i];
        a /= f[i];
        long long v = (k % f[i]) * c % f[i];
        if (v < 0) v += f[i];
        idx += static_cast<int>(v) * impl_->radix[i];
    }
    return idx;
}

int GroupType::element_order(int a) const {
    const auto& f = impl_->factors;
    long long ord = 1;
    for (size_t i = 0; i < f.size(); ++i) {
        int c = a % f[i];
        a /= f[i];
        ord = lcm_ll(ord, f[i] / std::gcd(f[i], c == 0 ? f[i] : c));
    }
    return static_cast<int>(ord);
}

std::string GroupType::to_string() const {
    if (trivial()) return "1";
    std::string s;
    for (size_t i = 0; i < impl_->factors.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(impl_->factors[i]);
    }
    return s;
}

namespace {

void chains_with_product(long long n, int min_factor, std::vector<int>& chain,
                         std::vector<std::vector<int>>& out) {
    // Chains are built from the largest factor down; the next factor must
    // divide the previous one.  min_factor here is the previous (larger) one.
    if (n == 1) {
        std::vector<int> c(chain.rbegin(), chain.rend());
        out.push_back(std::move(c));
        return;
    }
    for (int d = 2; d <= min_factor; ++d) {
        if (n % d == 0) {
            chain.push_back(d);
            chains_with_product(n / d, d, chain, out);
            chain.pop_back();
        }
    }
}

}  // namespace

std::vector<GroupType> all_group_types(long long max_order) {
    std::vector<GroupType> result;
    for (long long n = 2; n <= max_order; ++n) {
        std::vector<std::vector<int>> chains;
        std::vector<int> scratch;
        chains_with_product(n, static_cast<int>(n), scratch, chains);
        // Distinct factorizations can canonicalize to the same chain
        // (e.g. 2*3 and 6); keep one copy of each type, lexicographically.
        std::set<std::vector<int>> seen;
        for (auto& c : chains) seen.insert(GroupType::of(c).invariant_factors());
        for (const auto& f : seen) result.push_back(GroupType::of(f));
    }
    return result;
}

std::pair<GroupType, std::vector<int>> canonical_form(
    int n, const std::function<int(int, int)>& add) {
    // Successive maximal order in the quotient: pick b with maximal order of
    // b + S in Q/S among representatives whose raw order equals that coset
    // order; each pick extends the direct decomposition.
    std::vector<int> basis;         // chosen basis elements, orders descending
    std::vector<int> basis_order;   // d_1 >= d_2 >= ..., d_{i+1} | d_i
    std::vector<char> in_s(n, 0);   // membership in S = <basis>
    std::vector<int> s_members{0};
    in_s[0] = 1;

    auto raw_order = [&](int x) {
        int ord = 1;
        for (int y = x; y != 0; y = add(y, x)) ++ord;
        return ord;
    };
    auto coset_order = [&](int x) {
        int ord = 1;
        int y = x;
        while (!in_s[y]) {
            y = add(y, x);
            ++ord;
        }
        return ord;
    };

    while (static_cast<int>(s_members.size()) < n) {
        int best = -1, best_ord = 0;
        for (int x = 0; x < n; ++x) {
            if (in_s[x]) continue;
            int co = coset_order(x);
            if (co > best_ord && co == raw_order(x)) {
                best_ord = co;
                best = x;
            }
        }
        if (best < 0) throw std::logic_error("canonical_form: addition law is not a finite abelian group");
        if (!basis_order.empty() && basis_order.back() % best_ord != 0)
            throw std::logic_error("canonical_form: invariant factor chain violated");
        basis.push_back(best);
        basis_order.push_back(best_ord);
        // S <- S + <best>
        std::vector<int> grown = s_members;
        int mult = best;
        for (int k = 1; k < best_ord; ++k) {
            for (int s : s_members) {
                int e = add(s, mult);
                if (!in_s[e]) {
                    in_s[e] = 1;
                    grown.push_back(e);
                }
            }
            mult = add(mult, best);
        }
        s_members = std::move(grown);
    }

    // Ascending invariant factors and the coordinate map.
    std::vector<int> factors(basis_order.rbegin(), basis_order.rend());
    GroupType canon = GroupType::of(factors);
    if (canon.order() != n) throw std::logic_error("canonical_form: basis extraction failed");

    std::vector<int> iso(n, -1);
    const int k = static_cast<int>(basis.size());
    std::vector<int> lambda(k, 0);
    // Enumerate all coefficient vectors over the descending basis; canonical
    // coordinates are the reverse.
    int total = 1;
    for (int d : basis_order) total *= d;
    assert(total == n);
    for (int code = 0; code < total; ++code) {
        int c = code;
        int raw = 0;
        Element e;
        e.coords.assign(k, 0);
        for (int i = 0; i < k; ++i) {
            lambda[i] = c % basis_order[i];
            c /= basis_order[i];
            int term = 0;
            for (int t = 0; t < lambda[i]; ++t) term = add(term, basis[i]);
            raw = add(raw, term);
            e.coords[k - 1 - i] = lambda[i];
        }
        if (iso[raw] != -1) throw std::logic_error("canonical_form: coordinate map not injective");
        iso[raw] = canon.index_of(e);
    }
    return {canon, iso};
}

std::pair<GroupType, std::vector<int>> direct_sum(const GroupType& g1, const GroupType& g2) {
    const int n1 = g1.order_int();
    const int n2 = g2.order_int();
    const int n = n1 * n2;
    auto add = [&, n1](int a, int b) {
        int x = g1.add(a % n1, b % n1);
        int y = g2.add(a / n1, b / n1);
        return x + n1 * y;
    };
    return canonical_form(n, add);
}

}  // namespace addgen
