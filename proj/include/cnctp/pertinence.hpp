#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <span>
#include <vector>

#include "cnctp/dataset.hpp"
#include "cnctp/error.hpp"

namespace cnctp {

namespace detail {

// -sum p log2 p from raw counts. Counts are sorted first so the result does not depend
// on the order in which classes or values are enumerated.
inline double entropy_of_counts(std::vector<std::size_t> counts) {
    std::sort(counts.begin(), counts.end());
    const double total = static_cast<double>(std::accumulate(counts.begin(), counts.end(), std::size_t{0}));
    if (total == 0) return 0.0;
    double h = 0.0;
    for (auto c : counts) {
        if (c == 0) continue;
        const double p = static_cast<double>(c) / total;
        h -= p * std::log2(p);
    }
    return h;
}

} // namespace detail

// Entropy of the class distribution over the given rows.
inline double class_entropy(const nominal_dataset& ds, std::span<const std::size_t> subset) {
    if (subset.empty()) throw error("class entropy of an empty subset");
    std::vector<std::size_t> counts(ds.class_count(), 0);
    for (auto i : subset) {
        if (i >= ds.size()) throw std::out_of_range("row index out of range");
        ++counts[ds.label(i)];
    }
    return detail::entropy_of_counts(std::move(counts));
}

inline double class_entropy(const nominal_dataset& ds) {
    if (ds.empty()) throw error("class entropy of an empty dataset");
    return detail::entropy_of_counts(ds.class_counts());
}

struct gain_ratio_result {
    double gain_ratio = 0.0;
    double info_gain = 0.0;
    double intrinsic_value = 0.0;
};

// Quinlan's gain ratio of one nominal attribute over the whole dataset. A constant
// attribute (intrinsic value 0) scores 0.
inline gain_ratio_result gain_ratio(const nominal_dataset& ds, std::size_t attribute) {
    if (attribute >= ds.attribute_count()) throw error("unknown attribute index " + std::to_string(attribute));
    const auto& a = ds.attribute(attribute);
    if (!a.is_nominal()) throw schema_error("gain ratio needs a nominal attribute; '" + a.name + "' is numeric");
    if (ds.empty()) throw error("gain ratio over an empty dataset");

    const auto k = ds.class_count();
    std::vector<std::vector<std::size_t>> table(a.domain.size(), std::vector<std::size_t>(k, 0));
    for (std::size_t i = 0; i < ds.size(); ++i) ++table[ds.value(i, attribute)][ds.label(i)];

    const double n = static_cast<double>(ds.size());
    struct part {
        std::size_t size;
        double entropy;
    };
    std::vector<part> parts;
    std::vector<std::size_t> sizes;
    for (auto& counts : table) {
        const auto size = std::accumulate(counts.begin(), counts.end(), std::size_t{0});
        if (size == 0) continue;
        sizes.push_back(size);
        parts.push_back({size, detail::entropy_of_counts(counts)});
    }
    std::sort(parts.begin(), parts.end(), [](const part& x, const part& y) {
        return x.size != y.size ? x.size < y.size : x.entropy < y.entropy;
    });
    double conditional = 0.0;
    for (const auto& p : parts) conditional += (static_cast<double>(p.size) / n) * p.entropy;

    gain_ratio_result r;
    r.info_gain = std::max(0.0, class_entropy(ds) - conditional);
    r.intrinsic_value = detail::entropy_of_counts(std::move(sizes));
    r.gain_ratio = r.intrinsic_value > 0.0 ? r.info_gain / r.intrinsic_value : 0.0;
    if (r.intrinsic_value <= 0.0) r.info_gain = 0.0;
    return r;
}

struct ranked_attribute {
    std::size_t attribute = 0;
    double gain_ratio = 0.0;
    double info_gain = 0.0;
    double intrinsic_value = 0.0;
};

// Predictive attributes by descending gain ratio, ties by ascending index.
struct attribute_ranking {
    std::vector<ranked_attribute> entries;

    std::size_t size() const noexcept { return entries.size(); }
    bool empty() const noexcept { return entries.empty(); }
};

inline attribute_ranking rank_attributes(const nominal_dataset& ds) {
    attribute_ranking r;
    for (std::size_t j = 0; j < ds.attribute_count(); ++j) {
        auto g = gain_ratio(ds, j);
        r.entries.push_back({j, g.gain_ratio, g.info_gain, g.intrinsic_value});
    }
    std::stable_sort(r.entries.begin(), r.entries.end(), [](const ranked_attribute& x, const ranked_attribute& y) {
        if (x.gain_ratio != y.gain_ratio) return x.gain_ratio > y.gain_ratio;
        return x.attribute < y.attribute;
    });
    return r;
}

enum class select_mode { fraction, value_threshold };

// fraction: the first ceil(p*m) ranked attributes (none when p = 0).
// value_threshold: every attribute with gain ratio >= p.
inline std::vector<std::size_t> select_top(const attribute_ranking& ranking, double p, select_mode mode = select_mode::fraction) {
    if (ranking.empty()) throw error("cannot select from an empty ranking");
    if (!(p >= 0.0 && p <= 1.0)) throw error("p must lie in [0, 1]");
    std::vector<std::size_t> out;
    if (mode == select_mode::fraction) {
        if (p == 0.0) return out;
        const double m = static_cast<double>(ranking.size());
        // absorb representation error such as 0.775 * 40 = 31.000000000000004
        auto count = static_cast<std::size_t>(std::ceil(p * m - 1e-9));
        count = std::clamp<std::size_t>(count, 1, ranking.size());
        for (std::size_t i = 0; i < count; ++i) out.push_back(ranking.entries[i].attribute);
    } else {
        for (const auto& e : ranking.entries)
            if (e.gain_ratio >= p) out.push_back(e.attribute);
    }
    return out;
}

} // namespace cnctp
