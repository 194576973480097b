#include "addgen/element_set.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace addgen {

namespace {

size_t words_for(long long n) { return static_cast<size_t>((n + 63) / 64); }

void require_same_group(const ElementSet& a, const ElementSet& b) {
    if (a.group() != b.group())
        throw std::invalid_argument("element sets belong to different groups");
}

}  // namespace

ElementSet::ElementSet(GroupType g) : group_(std::move(g)), bits_(words_for(group_.order()), 0) {}

ElementSet::ElementSet(GroupType g, std::initializer_list<Element> elems) : ElementSet(std::move(g)) {
    for (const auto& e : elems) insert(e);
}

ElementSet ElementSet::from_indices(const GroupType& g, std::span<const int> idx) {
    ElementSet s(g);
    for (int i : idx) {
        if (i < 0 || i >= g.order()) throw std::invalid_argument("element index out of range");
        s.insert(i);
    }
    return s;
}

ElementSet ElementSet::full(const GroupType& g) {
    ElementSet s(g);
    const long long n = g.order();
    for (size_t w = 0; w < s.bits_.size(); ++w) s.bits_[w] = ~std::uint64_t{0};
    if (n % 64 != 0) s.bits_.back() = (std::uint64_t{1} << (n % 64)) - 1;
    return s;
}

ElementSet ElementSet::singleton_zero(const GroupType& g) {
    ElementSet s(g);
    s.insert(0);
    return s;
}

long long ElementSet::size() const {
    long long c = 0;
    for (auto w : bits_) c += std::popcount(w);
    return c;
}

bool ElementSet::empty() const {
    for (auto w : bits_)
        if (w) return false;
    return true;
}

std::vector<int> ElementSet::indices() const {
    std::vector<int> out;
    for (size_t w = 0; w < bits_.size(); ++w) {
        std::uint64_t word = bits_[w];
        while (word) {
            int b = std::countr_zero(word);
            out.push_back(static_cast<int>(w * 64) + b);
            word &= word - 1;
        }
    }
    return out;
}

std::vector<Element> ElementSet::elements() const {
    std::vector<Element> out;
    for (int i : indices()) out.push_back(group_.element_at(i));
    return out;
}

ElementSet ElementSet::translate(int a) const {
    ElementSet out(group_);
    for (int i : indices()) out.insert(group_.add(i, a));
    return out;
}

bool ElementSet::is_subset_of(const ElementSet& o) const {
    require_same_group(*this, o);
    for (size_t w = 0; w < bits_.size(); ++w)
        if (bits_[w] & ~o.bits_[w]) return false;
    return true;
}

ElementSet& ElementSet::operator|=(const ElementSet& o) {
    require_same_group(*this, o);
    for (size_t w = 0; w < bits_.size(); ++w) bits_[w] |= o.bits_[w];
    return *this;
}

ElementSet& ElementSet::operator&=(const ElementSet& o) {
    require_same_group(*this, o);
    for (size_t w = 0; w < bits_.size(); ++w) bits_[w] &= o.bits_[w];
    return *this;
}

bool ElementSet::operator==(const ElementSet& o) const {
    return group_ == o.group_ && bits_ == o.bits_;
}

bool ElementSet::operator<(const ElementSet& o) const {
    return indices() < o.indices();
}

std::uint64_t ElementSet::word() const {
    if (group_.order() > 64) throw std::logic_error("word(): group order exceeds 64");
    return bits_.empty() ? 0 : bits_[0];
}

ElementSet ElementSet::from_word(const GroupType& g, std::uint64_t w) {
    if (g.order() > 64) throw std::logic_error("from_word(): group order exceeds 64");
    ElementSet s(g);
    if (!s.bits_.empty()) s.bits_[0] = w;
    return s;
}

ElementSet sumset(const ElementSet& a, const ElementSet& b) {
    require_same_group(a, b);
    ElementSet out(a.group());
    if (a.empty() || b.empty()) return out;
    // OR the membership table of B translated by each a; translation is the
    // group shift in index space, tables come from GroupType's cache.
    const auto bi = b.indices();
    const auto& g = a.group();
    for (int x : a.indices())
        for (int y : bi) out.insert(g.add(x, y));
    return out;
}

ElementSet dilate(long long r, const ElementSet& a) {
    ElementSet out(a.group());
    for (int i : a.indices()) out.insert(a.group().scale(r, i));
    return out;
}

ElementSet bounded_generation(const ElementSet& a, int rho) {
    if (rho < 0) throw std::invalid_argument("rho must be non-negative");
    const auto& g = a.group();
    ElementSet reached = ElementSet::singleton_zero(g);
    const auto gen = a.indices();
    for (int step = 0; step < rho; ++step) {
        ElementSet next = reached;
        for (int x : reached.indices())
            for (int y : gen) next.insert(g.add(x, y));
        if (next == reached) break;  // stabilized early
        reached = std::move(next);
    }
    return reached;
}

LengthTable length_table(const ElementSet& a) {
    const auto& g = a.group();
    const long long n = g.order();
    std::vector<int> len(static_cast<size_t>(n), LengthTable::kInfinite);
    len[0] = 0;
    const auto gen = a.indices();
    // Frontier-set iteration over the dense table.
    std::vector<int> frontier{0};
    int dist = 0;
    while (!frontier.empty()) {
        ++dist;
        std::vector<int> next;
        for (int x : frontier) {
            for (int y : gen) {
                int z = g.add(x, y);
                if (len[z] < 0) {
                    len[z] = dist;
                    next.push_back(z);
                }
            }
        }
        frontier = std::move(next);
    }
    return LengthTable(g, std::move(len));
}

std::optional<int> LengthTable::max() const {
    int m = 0;
    for (int v : len_) {
        if (v < 0) return std::nullopt;
        m = std::max(m, v);
    }
    return m;
}

std::optional<int> diameter(const ElementSet& a) { return length_table(a).max(); }

ElementSet period_set(const ElementSet& s) {
    const auto& g = s.group();
    if (s.empty()) return ElementSet::full(g);  // vacuous stabilizer, by convention
    ElementSet out(g);
    for (int x = 0; x < g.order(); ++x)
        if (s.translate(x) == s) out.insert(x);
    return out;
}

bool is_aperiodic(const ElementSet& s) { return period_set(s).size() == 1; }

}  // namespace addgen
