#include "addgen/literals.hpp"

#include <charconv>
#include <stdexcept>
#include <vector>

namespace addgen {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    size_t pos = 0;
    while (true) {
        size_t next = text.find(sep, pos);
        if (next == std::string_view::npos) {
            parts.push_back(text.substr(pos));
            return parts;
        }
        parts.push_back(text.substr(pos, next - pos));
        pos = next + 1;
    }
}

int parse_int(std::string_view s) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
    return value;
}

}  // namespace

GroupType parse_group(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty group literal");
    std::vector<int> moduli;
    for (auto part : split(text, ',')) moduli.push_back(parse_int(part));
    return GroupType::of(moduli);
}

std::string format_group(const GroupType& g) { return g.to_string(); }

Element parse_element(const GroupType& g, std::string_view text) {
    if (g.trivial()) {
        if (!text.empty() && text != "0") throw std::invalid_argument("bad trivial-group element literal");
        return Element{};
    }
    Element e;
    for (auto part : split(text, ':')) e.coords.push_back(parse_int(part));
    g.index_of(e);  // validates rank and ranges
    return e;
}

std::string format_element(const GroupType& g, const Element& e) {
    if (g.trivial()) return "0";
    std::string s;
    for (size_t i = 0; i < e.coords.size(); ++i) {
        if (i) s += ':';
        s += std::to_string(e.coords[i]);
    }
    return s;
}

std::string format_element(const GroupType& g, int idx) {
    return format_element(g, g.element_at(idx));
}

ElementSet parse_set(const GroupType& g, std::string_view text) {
    ElementSet s(g);
    if (text.empty()) return s;  // empty literal = empty set
    for (auto part : split(text, ';')) s.insert(parse_element(g, part));
    return s;
}

std::string format_set(const ElementSet& s) {
    std::string out;
    bool first = true;
    for (int idx : s.indices()) {
        if (!first) out += ';';
        first = false;
        out += format_element(s.group(), idx);
    }
    return out;
}

}  // namespace addgen
