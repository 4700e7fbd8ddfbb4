#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cnctp/bitset.hpp"
#include "cnctp/dataset.hpp"
#include "cnctp/error.hpp"
#include "cnctp/io.hpp"

namespace cnctp {

// One (attribute, value) pair of the multi-valued context.
struct attribute_value {
    std::size_t attribute = 0;
    value_index value = 0;
    friend auto operator<=>(const attribute_value&, const attribute_value&) = default;
};

struct scale_options {
    // Emit a single column for boolean-valued attributes ({TRUE,FALSE}, {yes,no}, {t,f},
    // {y,n}, {1,0}): only the positive value keeps a column.
    bool drop_binary_complement = false;
};

// Binary context <I, A, R>: objects are dataset rows, binary attributes are
// attribute=value pairs. Rows and columns are both kept as bitsets so that both
// derivation operators reduce to bulk ANDs.
class formal_context {
public:
    formal_context(std::size_t objects, std::vector<attribute_value> mapping)
        : objects_(objects), mapping_(std::move(mapping)), rows_(objects, bitset(mapping_.size())),
          columns_(mapping_.size(), bitset(objects)) {
        auto sorted = mapping_;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw schema_error("binary attribute mapping is not injective");
    }

    std::size_t object_count() const noexcept { return objects_; }
    std::size_t attribute_count() const noexcept { return mapping_.size(); }

    const attribute_value& meaning(std::size_t a) const { return mapping_.at(a); }
    const std::vector<attribute_value>& mapping() const noexcept { return mapping_; }

    std::optional<std::size_t> find(attribute_value pair) const {
        for (std::size_t a = 0; a < mapping_.size(); ++a)
            if (mapping_[a] == pair) return a;
        return std::nullopt;
    }

    void set(std::size_t object, std::size_t attribute) {
        rows_.at(object).set(attribute);
        columns_.at(attribute).set(object);
    }
    bool incidence(std::size_t object, std::size_t attribute) const { return rows_.at(object).test(attribute); }

    const bitset& row(std::size_t object) const { return rows_.at(object); }
    const bitset& column(std::size_t attribute) const { return columns_.at(attribute); }

    bitset no_objects() const { return bitset(objects_); }
    bitset all_objects() const { return bitset(objects_, true); }
    bitset no_attributes() const { return bitset(mapping_.size()); }
    bitset all_attributes() const { return bitset(mapping_.size(), true); }

    template <typename Range>
    bitset objects_of(const Range& indices) const {
        for (auto i : indices)
            if (static_cast<std::size_t>(i) >= objects_) throw std::out_of_range("object index out of range");
        return bitset::from_range(objects_, indices);
    }
    bitset objects_of(std::initializer_list<std::size_t> indices) const {
        return objects_of(std::vector<std::size_t>(indices));
    }
    template <typename Range>
    bitset attributes_of(const Range& indices) const {
        for (auto i : indices)
            if (static_cast<std::size_t>(i) >= mapping_.size()) throw std::out_of_range("attribute index out of range");
        return bitset::from_range(mapping_.size(), indices);
    }
    bitset attributes_of(std::initializer_list<std::size_t> indices) const {
        return attributes_of(std::vector<std::size_t>(indices));
    }

    // phi: attributes shared by every object of X. phi(empty) = A.
    bitset derive_attributes(const bitset& objects) const {
        if (objects.size() != objects_) throw std::out_of_range("object set does not match context");
        bitset out = all_attributes();
        for (auto i = objects.find_first(); i < objects_; i = objects.find_next(i + 1)) out &= rows_[i];
        return out;
    }

    // delta: objects holding every attribute of Y. delta(empty) = I.
    bitset derive_objects(const bitset& attributes) const {
        if (attributes.size() != mapping_.size()) throw std::out_of_range("attribute set does not match context");
        bitset out = all_objects();
        for (auto a = attributes.find_first(); a < mapping_.size(); a = attributes.find_next(a + 1)) out &= columns_[a];
        return out;
    }

    bitset close_objects(const bitset& objects) const { return derive_objects(derive_attributes(objects)); }
    bitset close_attributes(const bitset& attributes) const { return derive_attributes(derive_objects(attributes)); }

private:
    std::size_t objects_;
    std::vector<attribute_value> mapping_;
    std::vector<bitset> rows_;
    std::vector<bitset> columns_;
};

namespace detail {
inline bool positive_boolean_value(const attribute_spec& a, value_index v, value_index other) {
    static const std::pair<const char*, const char*> pairs[] = {
        {"true", "false"}, {"yes", "no"}, {"t", "f"}, {"y", "n"}, {"1", "0"}};
    const auto x = lower(a.domain[v]), y = lower(a.domain[other]);
    for (auto [pos, neg] : pairs) {
        if (x == pos && y == neg) return true;
    }
    return false;
}
inline bool negative_boolean_value(const attribute_spec& a, value_index v, value_index other) {
    return positive_boolean_value(a, other, v);
}
} // namespace detail

// One-hot scaling of the predictive attributes. Columns follow attribute order, then
// domain order, and only values that occur in the data get a column.
inline formal_context scale(const nominal_dataset& ds, scale_options options = {}) {
    if (ds.empty()) throw error("cannot scale an empty dataset");
    if (!ds.all_nominal()) throw schema_error("scale needs a nominal dataset; discretize first");
    std::vector<attribute_value> mapping;
    std::vector<std::vector<std::size_t>> column_of(ds.attribute_count());
    for (std::size_t j = 0; j < ds.attribute_count(); ++j) {
        const auto& a = ds.attribute(j);
        std::vector<bool> occurs(a.domain.size(), false);
        for (std::size_t i = 0; i < ds.size(); ++i) occurs[ds.value(i, j)] = true;
        std::vector<value_index> present;
        for (value_index v = 0; v < a.domain.size(); ++v)
            if (occurs[v]) present.push_back(v);
        column_of[j].assign(a.domain.size(), static_cast<std::size_t>(-1));
        for (auto v : present) {
            if (options.drop_binary_complement && a.domain.size() == 2 && present.size() == 2 &&
                detail::negative_boolean_value(a, v, v == present[0] ? present[1] : present[0]))
                continue;
            column_of[j][v] = mapping.size();
            mapping.push_back({j, v});
        }
    }
    formal_context ctx(ds.size(), mapping);
    for (std::size_t i = 0; i < ds.size(); ++i)
        for (std::size_t j = 0; j < ds.attribute_count(); ++j) {
            const auto col = column_of[j][ds.value(i, j)];
            if (col != static_cast<std::size_t>(-1)) ctx.set(i, col);
        }
    return ctx;
}

enum class intent_mode { generator, closed };

// Concept over attribute=value pairs, seeded by a single pair.
struct nominal_concept {
    bitset extent;
    std::vector<attribute_value> intent; // sorted
    attribute_value generator;

    friend bool operator==(const nominal_concept&, const nominal_concept&) = default;
};

inline std::vector<attribute_value> to_pairs(const formal_context& ctx, const bitset& attributes) {
    std::vector<attribute_value> out;
    for (auto a = attributes.find_first(); a < attributes.size(); a = attributes.find_next(a + 1))
        out.push_back(ctx.meaning(a));
    std::sort(out.begin(), out.end());
    return out;
}

// extent = delta({pair}); intent = {pair} (generator) or phi(extent) (closed).
// Returns nullopt when the extent is empty.
inline std::optional<nominal_concept> concept_from_value(const formal_context& ctx, attribute_value pair,
                                                         intent_mode mode = intent_mode::generator) {
    auto col = ctx.find(pair);
    if (!col) throw error("unknown attribute-value pair");
    bitset extent = ctx.column(*col);
    if (extent.empty_set()) return std::nullopt;
    nominal_concept c{extent, {pair}, pair};
    if (mode == intent_mode::closed) c.intent = to_pairs(ctx, ctx.derive_attributes(extent));
    return c;
}

struct formal_concept {
    bitset extent;
    bitset intent;
    friend bool operator==(const formal_concept&, const formal_concept&) = default;
};

inline constexpr std::size_t max_enumeration_objects = 24;

// All formal concepts by NextClosure over the object side, in lectic order, then
// sorted by extent size and lexicographic extent.
inline std::vector<formal_concept> enumerate_all_concepts(const formal_context& ctx) {
    const auto n = ctx.object_count();
    if (n > max_enumeration_objects)
        throw error("context too large for exhaustive enumeration (" + std::to_string(n) + " objects, limit " +
                    std::to_string(max_enumeration_objects) + ")");
    std::vector<formal_concept> out;
    bitset current = ctx.close_objects(ctx.no_objects());
    while (true) {
        out.push_back({current, ctx.derive_attributes(current)});
        if (current.count() == n) break;
        // next closed set in lectic order (object n-1 is least significant)
        bool advanced = false;
        for (std::size_t step = 0; step < n && !advanced; ++step) {
            const std::size_t i = n - 1 - step;
            if (current.test(i)) {
                current.reset(i);
                continue;
            }
            bitset candidate = current;
            candidate.set(i);
            candidate = ctx.close_objects(candidate);
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j)
                if (candidate.test(j) != current.test(j)) ok = false;
            if (ok) {
                current = std::move(candidate);
                advanced = true;
            }
        }
        if (!advanced) break;
    }
    std::sort(out.begin(), out.end(), [](const formal_concept& a, const formal_concept& b) {
        const auto ca = a.extent.count(), cb = b.extent.count();
        if (ca != cb) return ca < cb;
        return lex_less(a.extent, b.extent);
    });
    return out;
}

namespace detail {
inline std::string set_label(const bitset& s, char prefix) {
    std::string out = "{";
    bool first = true;
    for (auto i = s.find_first(); i < s.size(); i = s.find_next(i + 1)) {
        if (!first) out += ',';
        out += prefix + std::to_string(i + 1);
        first = false;
    }
    return out + "}";
}
} // namespace detail

// Graphviz DOT of the covering relation (Hasse diagram), edges from the larger extent
// to the smaller. Node ids follow the input order.
inline std::string export_dot(const std::vector<formal_concept>& concepts) {
    if (concepts.empty()) return "digraph{}\n";
    std::ostringstream out;
    out << "digraph lattice {\n";
    for (std::size_t c = 0; c < concepts.size(); ++c)
        out << "  c" << c << " [label=\"" << detail::set_label(concepts[c].extent, 'i') << '/'
            << detail::set_label(concepts[c].intent, 'a') << "\"];\n";
    auto strictly_below = [&](std::size_t lo, std::size_t hi) {
        return concepts[lo].extent != concepts[hi].extent && concepts[lo].extent.is_subset_of(concepts[hi].extent);
    };
    for (std::size_t hi = 0; hi < concepts.size(); ++hi)
        for (std::size_t lo = 0; lo < concepts.size(); ++lo) {
            if (!strictly_below(lo, hi)) continue;
            bool cover = true;
            for (std::size_t mid = 0; mid < concepts.size() && cover; ++mid)
                if (strictly_below(lo, mid) && strictly_below(mid, hi)) cover = false;
            if (cover) out << "  c" << hi << " -> c" << lo << ";\n";
        }
    out << "}\n";
    return out.str();
}

} // namespace cnctp
