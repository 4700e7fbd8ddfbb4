#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "cnctp/error.hpp"

namespace cnctp {

using value_index = std::uint32_t;
using class_index = std::uint32_t;

inline constexpr std::string_view missing_label = "?";

enum class attribute_kind { nominal, numeric };

struct attribute_spec {
    std::string name;
    attribute_kind kind = attribute_kind::nominal;
    // Value labels for nominal attributes. When an attribute has missing cells the
    // reserved label "?" is the last entry.
    std::vector<std::string> domain;
    bool is_class = false;

    std::optional<value_index> index_of(std::string_view label) const {
        auto it = std::find(domain.begin(), domain.end(), label);
        if (it == domain.end()) return std::nullopt;
        return static_cast<value_index>(it - domain.begin());
    }

    std::optional<value_index> missing_index() const {
        if (!domain.empty() && domain.back() == missing_label)
            return static_cast<value_index>(domain.size() - 1);
        return std::nullopt;
    }

    bool is_nominal() const noexcept { return kind == attribute_kind::nominal; }

    friend bool operator==(const attribute_spec&, const attribute_spec&) = default;
};

// Labeled instance table over nominal (and, before discretization, numeric) attributes.
// Rows store one value index per predictive attribute; numeric attributes keep their raw
// value in a parallel table (NaN marks a missing numeric cell).
class nominal_dataset {
public:
    nominal_dataset() = default;

    nominal_dataset(std::string name, std::vector<attribute_spec> attributes, attribute_spec class_attribute)
        : name_(std::move(name)), attributes_(std::move(attributes)), class_(std::move(class_attribute)) {
        class_.is_class = true;
        class_.kind = attribute_kind::nominal;
        std::unordered_set<std::string> seen{class_.name};
        for (auto& a : attributes_) {
            a.is_class = false;
            if (!seen.insert(a.name).second)
                throw schema_error("duplicate attribute name '" + a.name + "'");
            if (a.kind == attribute_kind::numeric) has_numeric_ = true;
            else check_domain(a);
        }
        check_domain(class_);
    }

    const std::string& name() const noexcept { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    std::size_t attribute_count() const noexcept { return attributes_.size(); }
    std::size_t size() const noexcept { return labels_.size(); }
    bool empty() const noexcept { return labels_.empty(); }

    const std::vector<attribute_spec>& attributes() const noexcept { return attributes_; }
    const attribute_spec& attribute(std::size_t j) const { return attributes_.at(j); }
    const attribute_spec& class_attribute() const noexcept { return class_; }
    std::size_t class_count() const noexcept { return class_.domain.size(); }

    std::optional<std::size_t> find_attribute(std::string_view name) const {
        for (std::size_t j = 0; j < attributes_.size(); ++j)
            if (attributes_[j].name == name) return j;
        return std::nullopt;
    }

    bool all_nominal() const noexcept { return !has_numeric_; }

    // `numeric` must either be empty (no numeric attributes) or hold one entry per
    // attribute; entries for nominal attributes are ignored.
    void add_row(std::span<const value_index> values, class_index label, std::span<const double> numeric = {}) {
        const auto m = attributes_.size();
        if (values.size() != m)
            throw schema_error("row has " + std::to_string(values.size()) + " values, expected " + std::to_string(m));
        if (label >= class_.domain.size()) throw schema_error("class index out of range");
        for (std::size_t j = 0; j < m; ++j) {
            if (attributes_[j].is_nominal() && values[j] >= attributes_[j].domain.size())
                throw schema_error("value index out of range for attribute '" + attributes_[j].name + "'");
        }
        values_.insert(values_.end(), values.begin(), values.end());
        labels_.push_back(label);
        if (has_numeric_) {
            if (numeric.empty()) {
                numeric_.insert(numeric_.end(), m, std::numeric_limits<double>::quiet_NaN());
            } else {
                if (numeric.size() != m) throw schema_error("numeric row arity mismatch");
                for (std::size_t j = 0; j < m; ++j)
                    numeric_.push_back(attributes_[j].is_nominal() ? std::numeric_limits<double>::quiet_NaN() : numeric[j]);
            }
        }
    }

    std::span<const value_index> row(std::size_t i) const {
        return {values_.data() + i * attributes_.size(), attributes_.size()};
    }
    value_index value(std::size_t i, std::size_t j) const { return values_[i * attributes_.size() + j]; }
    class_index label(std::size_t i) const { return labels_[i]; }
    const std::vector<class_index>& labels() const noexcept { return labels_; }

    double numeric(std::size_t i, std::size_t j) const {
        if (!has_numeric_) return std::numeric_limits<double>::quiet_NaN();
        return numeric_[i * attributes_.size() + j];
    }

    bool is_missing(std::size_t i, std::size_t j) const {
        const auto& a = attributes_[j];
        if (a.is_nominal()) {
            auto mi = a.missing_index();
            return mi && value(i, j) == *mi;
        }
        return std::isnan(numeric(i, j));
    }

    std::vector<std::size_t> class_counts() const {
        std::vector<std::size_t> counts(class_.domain.size(), 0);
        for (auto c : labels_) ++counts[c];
        return counts;
    }

    // Missing cells in the table plus those on rows dropped at load for lacking a class.
    std::size_t missing_cells() const {
        std::size_t n = dropped_missing_cells_;
        for (std::size_t i = 0; i < size(); ++i)
            for (std::size_t j = 0; j < attributes_.size(); ++j)
                if (is_missing(i, j)) ++n;
        return n;
    }
    std::size_t dropped_missing_cells() const noexcept { return dropped_missing_cells_; }
    std::size_t dropped_rows() const noexcept { return dropped_rows_; }
    void record_dropped_row(std::size_t missing_cells) {
        ++dropped_rows_;
        dropped_missing_cells_ += missing_cells;
    }

    // Same schema, selected rows in the given order.
    nominal_dataset subset(std::span<const std::size_t> rows) const {
        nominal_dataset out;
        out.name_ = name_;
        out.attributes_ = attributes_;
        out.class_ = class_;
        out.has_numeric_ = has_numeric_;
        const auto m = attributes_.size();
        out.values_.reserve(rows.size() * m);
        for (auto i : rows) {
            if (i >= size()) throw std::out_of_range("row index out of range");
            auto r = row(i);
            out.values_.insert(out.values_.end(), r.begin(), r.end());
            out.labels_.push_back(labels_[i]);
            if (has_numeric_)
                out.numeric_.insert(out.numeric_.end(), numeric_.begin() + i * m, numeric_.begin() + (i + 1) * m);
        }
        return out;
    }

    friend bool operator==(const nominal_dataset& a, const nominal_dataset& b) {
        if (a.name_ != b.name_ || a.attributes_ != b.attributes_ || a.class_ != b.class_ ||
            a.values_ != b.values_ || a.labels_ != b.labels_ || a.has_numeric_ != b.has_numeric_ ||
            a.numeric_.size() != b.numeric_.size())
            return false;
        for (std::size_t k = 0; k < a.numeric_.size(); ++k) {
            const double x = a.numeric_[k], y = b.numeric_[k];
            if (!(x == y || (std::isnan(x) && std::isnan(y)))) return false;
        }
        return true;
    }

private:
    static void check_domain(const attribute_spec& a) {
        if (a.domain.empty()) throw schema_error("attribute '" + a.name + "' has an empty domain");
        std::unordered_set<std::string> seen;
        for (const auto& v : a.domain)
            if (!seen.insert(v).second)
                throw schema_error("attribute '" + a.name + "' declares value '" + v + "' twice");
    }

    std::string name_;
    std::vector<attribute_spec> attributes_;
    attribute_spec class_;
    bool has_numeric_ = false;
    std::vector<value_index> values_;
    std::vector<class_index> labels_;
    std::vector<double> numeric_;
    std::size_t dropped_rows_ = 0;
    std::size_t dropped_missing_cells_ = 0;
};

} // namespace cnctp
