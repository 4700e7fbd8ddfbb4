#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cnctp/context.hpp"
#include "cnctp/dataset.hpp"
#include "cnctp/discretize.hpp"
#include "cnctp/error.hpp"
#include "cnctp/pertinence.hpp"

namespace cnctp {

enum class strategy { all_values, relevant_values };

struct train_config {
    double p = 1.0;
    cnctp::strategy strategy = strategy::all_values;
    cnctp::select_mode select_mode = select_mode::fraction;
    cnctp::intent_mode intent = intent_mode::generator;

    friend bool operator==(const train_config&, const train_config&) = default;
};

struct classification_rule {
    std::vector<attribute_value> premises; // sorted, non-empty
    class_index conclusion = 0;
    double weight = 0.0;                   // correct_covered / n_total
    std::size_t covered = 0;
    std::size_t correct_covered = 0;

    bool matches(std::span<const value_index> instance) const {
        for (const auto& p : premises)
            if (instance[p.attribute] != p.value) return false;
        return true;
    }

    friend bool operator==(const classification_rule&, const classification_rule&) = default;
};

struct cnctp_model {
    std::vector<classification_rule> rules;
    std::vector<attribute_spec> attributes; // nominal schema the rules refer to
    attribute_spec class_attribute;
    std::vector<std::size_t> class_counts;  // training class distribution
    std::size_t n_total = 0;
    train_config config;
    std::string dataset;
    int fold = -1;
    discretizer bins;                       // empty unless trained through fit()
    std::vector<std::string> warnings;

    std::size_t class_count() const noexcept { return class_attribute.domain.size(); }
    const std::vector<std::string>& class_labels() const noexcept { return class_attribute.domain; }

    std::vector<double> class_priors() const {
        std::vector<double> out(class_counts.size(), 0.0);
        for (std::size_t k = 0; k < out.size(); ++k)
            out[k] = n_total ? static_cast<double>(class_counts[k]) / static_cast<double>(n_total) : 0.0;
        return out;
    }

    friend bool operator==(const cnctp_model& a, const cnctp_model& b) {
        return a.rules == b.rules && a.attributes == b.attributes && a.class_attribute == b.class_attribute &&
               a.class_counts == b.class_counts && a.n_total == b.n_total && a.config == b.config &&
               a.dataset == b.dataset && a.fold == b.fold;
    }
};

struct prediction {
    std::optional<class_index> label; // nullopt means rejected
    std::vector<double> scores;       // summed weights of fired rules per class
    std::vector<double> distribution; // normalized scores, uniform when rejected
    std::vector<std::size_t> fired_rules;

    bool rejected() const noexcept { return !label.has_value(); }
};

namespace detail {

// Larger count wins; ties by larger training prior, then lower class index.
inline class_index pick_class(std::span<const std::size_t> counts, std::span<const std::size_t> priors) {
    class_index best = 0;
    for (class_index k = 1; k < counts.size(); ++k) {
        if (counts[k] > counts[best] || (counts[k] == counts[best] && priors[k] > priors[best])) best = k;
    }
    return best;
}

inline value_index modal_value(const nominal_dataset& ds, std::size_t attribute) {
    const auto& a = ds.attribute(attribute);
    std::vector<std::size_t> counts(a.domain.size(), 0);
    for (std::size_t i = 0; i < ds.size(); ++i) ++counts[ds.value(i, attribute)];
    value_index best = 0;
    for (value_index v = 1; v < counts.size(); ++v) {
        if (counts[v] > counts[best] || (counts[v] == counts[best] && a.domain[v] < a.domain[best])) best = v;
    }
    return best;
}

} // namespace detail

// Gain-ratio ranking, top-p selection, one concept per selected value (all values or
// the modal value only), one weighted rule per concept.
inline cnctp_model train(const nominal_dataset& ds, const train_config& config) {
    if (ds.empty()) throw error("cannot train on an empty dataset");
    if (!ds.all_nominal()) throw schema_error("training needs a nominal dataset; discretize first");
    if (!(config.p >= 0.0 && config.p <= 1.0)) throw error("p must lie in [0, 1]");

    cnctp_model model;
    model.attributes = ds.attributes();
    model.class_attribute = ds.class_attribute();
    model.class_counts = ds.class_counts();
    model.n_total = ds.size();
    model.config = config;
    model.dataset = ds.name();

    if (ds.attribute_count() == 0) return model;
    const auto ranking = rank_attributes(ds);
    const auto selected = select_top(ranking, config.p, config.select_mode);
    if (selected.empty()) {
        model.warnings.emplace_back("no attribute selected: every instance will be rejected");
        return model;
    }

    const auto ctx = scale(ds);
    std::vector<std::size_t> extent_counts(ds.class_count());
    for (auto attribute : selected) {
        std::vector<attribute_value> pairs;
        if (config.strategy == strategy::all_values) {
            for (const auto& m : ctx.mapping())
                if (m.attribute == attribute) pairs.push_back(m);
        } else {
            pairs.push_back({attribute, detail::modal_value(ds, attribute)});
        }
        for (const auto& pair : pairs) {
            auto cpt = concept_from_value(ctx, pair, config.intent);
            if (!cpt) continue;
            std::fill(extent_counts.begin(), extent_counts.end(), 0);
            const auto& ext = cpt->extent;
            for (auto i = ext.find_first(); i < ext.size(); i = ext.find_next(i + 1)) ++extent_counts[ds.label(i)];
            classification_rule rule;
            rule.premises = std::move(cpt->intent);
            rule.conclusion = detail::pick_class(extent_counts, model.class_counts);
            rule.covered = ext.count();
            rule.correct_covered = extent_counts[rule.conclusion];
            rule.weight = static_cast<double>(rule.correct_covered) / static_cast<double>(model.n_total);
            // closed intents seeded by different pairs can coincide
            const bool duplicate = std::any_of(model.rules.begin(), model.rules.end(),
                                               [&](const classification_rule& r) { return r.premises == rule.premises; });
            if (!duplicate) model.rules.push_back(std::move(rule));
        }
    }
    return model;
}

// Weighted majority vote over the rules an instance satisfies; rejects when none fires.
// Votes are tallied as integer counts (all weights share the n_total denominator) so
// ties are exact.
inline prediction predict(const cnctp_model& model, std::span<const value_index> instance) {
    if (instance.size() != model.attributes.size())
        throw schema_error("instance has " + std::to_string(instance.size()) + " values, model expects " +
                           std::to_string(model.attributes.size()));
    const auto k = model.class_count();
    prediction out;
    std::vector<std::size_t> votes(k, 0);
    for (std::size_t r = 0; r < model.rules.size(); ++r) {
        const auto& rule = model.rules[r];
        if (!rule.matches(instance)) continue;
        votes[rule.conclusion] += rule.correct_covered;
        out.fired_rules.push_back(r);
    }
    out.scores.assign(k, 0.0);
    out.distribution.assign(k, 1.0 / static_cast<double>(k));
    if (out.fired_rules.empty()) return out;

    std::size_t total = 0;
    for (std::size_t c = 0; c < k; ++c) {
        out.scores[c] = static_cast<double>(votes[c]) / static_cast<double>(model.n_total);
        total += votes[c];
    }
    out.label = detail::pick_class(votes, model.class_counts);
    if (total > 0)
        for (std::size_t c = 0; c < k; ++c)
            out.distribution[c] = static_cast<double>(votes[c]) / static_cast<double>(total);
    return out;
}

// Discretize numeric attributes (edges kept in the model) and train.
inline cnctp_model fit(const nominal_dataset& raw, const train_config& config, std::size_t bins = 10,
                       const std::vector<bool>& with_missing = {}) {
    if (raw.all_nominal()) return train(raw, config);
    auto d = discretizer::fit(raw, bins, with_missing);
    auto model = train(d.apply(raw), config);
    model.bins = std::move(d);
    return model;
}

} // namespace cnctp
