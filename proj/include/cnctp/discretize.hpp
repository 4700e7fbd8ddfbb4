#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "cnctp/dataset.hpp"
#include "cnctp/io.hpp"

namespace cnctp {

// Equal-width binning of one numeric attribute. `edges` holds bins+1 boundaries;
// a value falls in bin k when edges[k] <= v < edges[k+1], clamped to the end bins.
struct binning {
    std::size_t attribute = 0;
    std::vector<double> edges;
    bool with_missing = false;

    std::size_t bins() const noexcept { return edges.size() < 2 ? 1 : edges.size() - 1; }

    value_index bin_of(double v) const {
        if (std::isnan(v)) return static_cast<value_index>(bins());
        if (edges.size() <= 2) return 0;
        auto it = std::upper_bound(edges.begin() + 1, edges.end() - 1, v);
        return static_cast<value_index>(it - (edges.begin() + 1));
    }

    std::vector<std::string> labels() const {
        std::vector<std::string> out;
        if (edges.size() == 2 && edges[0] == edges[1]) {
            auto v = detail::format_number(edges[0]);
            out.push_back("[" + v + "," + v + "]");
        } else if (edges.empty()) {
            out.emplace_back("[-inf,inf]");
        } else {
            for (std::size_t k = 0; k + 1 < edges.size(); ++k)
                out.push_back("[" + detail::format_number(edges[k]) + "," + detail::format_number(edges[k + 1]) + ")");
        }
        if (with_missing) out.emplace_back(missing_label);
        return out;
    }
};

class discretizer {
public:
    discretizer() = default;

    // Fit edges on `train`. `with_missing[j]` forces a "?" label for attribute j even
    // when `train` itself has no missing cell there (the other split may).
    static discretizer fit(const nominal_dataset& train, std::size_t bins, const std::vector<bool>& with_missing = {}) {
        if (bins < 2) throw error("bins must be at least 2");
        discretizer d;
        for (std::size_t j = 0; j < train.attribute_count(); ++j) {
            if (train.attribute(j).is_nominal()) continue;
            binning b;
            b.attribute = j;
            double lo = std::numeric_limits<double>::infinity(), hi = -lo;
            bool missing = j < with_missing.size() && with_missing[j];
            for (std::size_t i = 0; i < train.size(); ++i) {
                const double v = train.numeric(i, j);
                if (std::isnan(v)) {
                    missing = true;
                    continue;
                }
                lo = std::min(lo, v);
                hi = std::max(hi, v);
            }
            b.with_missing = missing;
            if (lo > hi) {
                // no observed value: one catch-all bin
            } else if (lo == hi) {
                b.edges = {lo, hi};
            } else {
                b.edges.resize(bins + 1);
                for (std::size_t k = 0; k <= bins; ++k)
                    b.edges[k] = k == bins ? hi : lo + static_cast<double>(k) * (hi - lo) / static_cast<double>(bins);
            }
            d.columns_.push_back(std::move(b));
        }
        return d;
    }

    static discretizer from_columns(std::vector<binning> columns) {
        discretizer d;
        d.columns_ = std::move(columns);
        return d;
    }

    const std::vector<binning>& columns() const noexcept { return columns_; }
    bool empty() const noexcept { return columns_.empty(); }

    const binning* find(std::size_t attribute) const {
        for (const auto& b : columns_)
            if (b.attribute == attribute) return &b;
        return nullptr;
    }

    // Replace every numeric attribute by its bin labels.
    nominal_dataset apply(const nominal_dataset& ds) const {
        if (ds.all_nominal()) return ds;
        auto attrs = ds.attributes();
        for (const auto& b : columns_) {
            if (b.attribute >= attrs.size() || attrs[b.attribute].is_nominal())
                throw schema_error("discretizer does not match dataset schema");
            attrs[b.attribute].kind = attribute_kind::nominal;
            attrs[b.attribute].domain = b.labels();
        }
        for (const auto& a : attrs)
            if (!a.is_nominal()) throw schema_error("numeric attribute '" + a.name + "' was not fitted");
        nominal_dataset out(ds.name(), attrs, ds.class_attribute());
        std::vector<value_index> row(ds.attribute_count());
        for (std::size_t i = 0; i < ds.size(); ++i) {
            auto src = ds.row(i);
            std::copy(src.begin(), src.end(), row.begin());
            for (const auto& b : columns_) {
                const double v = ds.numeric(i, b.attribute);
                if (std::isnan(v) && !b.with_missing)
                    throw schema_error("missing value in attribute '" + attrs[b.attribute].name +
                                       "' has no bin; fit with missing support");
                row[b.attribute] = b.bin_of(v);
            }
            out.add_row(row, ds.label(i));
        }
        return out;
    }

private:
    std::vector<binning> columns_;
};

// Fit equal-width bins on `train` and apply them to both splits.
inline std::pair<nominal_dataset, nominal_dataset> discretize(const nominal_dataset& train, const nominal_dataset& apply_to,
                                                              std::size_t bins) {
    if (bins < 2) throw error("bins must be at least 2");
    if (train.attributes() != apply_to.attributes()) throw schema_error("train and apply_to schemas differ");
    std::vector<bool> missing(train.attribute_count(), false);
    for (std::size_t j = 0; j < apply_to.attribute_count(); ++j)
        for (std::size_t i = 0; i < apply_to.size() && !missing[j]; ++i)
            if (!apply_to.attribute(j).is_nominal() && apply_to.is_missing(i, j)) missing[j] = true;
    auto d = discretizer::fit(train, bins, missing);
    return {d.apply(train), d.apply(apply_to)};
}

} // namespace cnctp
