#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <numeric>
#include <random>
#include <span>
#include <vector>

#include "cnctp/classifier.hpp"
#include "cnctp/dataset.hpp"
#include "cnctp/discretize.hpp"
#include "cnctp/error.hpp"
#include "cnctp/pertinence.hpp"

namespace cnctp {

struct fold_plan {
    std::size_t k = 0;
    std::uint64_t seed = 0;
    std::vector<std::size_t> assignments; // row -> fold

    std::vector<std::size_t> test_rows(std::size_t fold) const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < assignments.size(); ++i)
            if (assignments[i] == fold) out.push_back(i);
        return out;
    }
    std::vector<std::size_t> train_rows(std::size_t fold) const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < assignments.size(); ++i)
            if (assignments[i] != fold) out.push_back(i);
        return out;
    }
    std::vector<std::size_t> fold_sizes() const {
        std::vector<std::size_t> out(k, 0);
        for (auto f : assignments) ++out[f];
        return out;
    }

    friend bool operator==(const fold_plan&, const fold_plan&) = default;
};

namespace detail {

// Uniform integer in [0, bound) by rejection; mt19937_64 output is fully specified, so
// this (unlike std::uniform_int_distribution) gives the same stream on every platform.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

template <typename T>
void shuffle(std::vector<T>& v, std::mt19937_64& rng) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[uniform_below(rng, i)]);
}

} // namespace detail

// Stratified assignment: rows of each class are shuffled, classes are concatenated in
// index order and the sequence is dealt round-robin, so fold sizes and per-class counts
// both differ by at most one.
inline fold_plan make_folds(const nominal_dataset& ds, std::size_t k, std::uint64_t seed) {
    if (k < 2) throw error("k must be at least 2");
    if (k > ds.size())
        throw error("k = " + std::to_string(k) + " exceeds the " + std::to_string(ds.size()) + " instances");
    std::mt19937_64 rng(seed);
    std::vector<std::vector<std::size_t>> by_class(ds.class_count());
    for (std::size_t i = 0; i < ds.size(); ++i) by_class[ds.label(i)].push_back(i);
    fold_plan plan{k, seed, std::vector<std::size_t>(ds.size(), 0)};
    std::size_t next = 0;
    for (auto& rows : by_class) {
        detail::shuffle(rows, rng);
        for (auto i : rows) plan.assignments[i] = next++ % k;
    }
    return plan;
}

struct evaluation_report {
    std::size_t instances = 0;
    std::size_t correct = 0;
    std::size_t incorrect = 0;
    std::size_t unclassified = 0;
    double pct_correct = 0.0;
    double pct_incorrect = 0.0;
    double pct_unclassified = 0.0;
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    double kappa = 0.0;
    bool kappa_defined = true;
    double auc_roc = 0.5;
    bool auc_roc_defined = true;
    double auc_prc = 0.0;
    double rmse = 0.0;
    double mae = 0.0;
    // rows: true class; columns: predicted class, last column REJECTED
    std::vector<std::vector<std::size_t>> confusion;
};

namespace detail {

// Probability that a random positive outscores a random negative (ties count half),
// from mid-ranks.
inline std::optional<double> auc_roc_one_vs_rest(std::span<const double> scores, std::span<const bool> positive) {
    const auto n = scores.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });
    double rank_sum = 0.0;
    std::size_t npos = 0;
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i;
        while (j < n && scores[order[j]] == scores[order[i]]) ++j;
        const double mid = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
        for (std::size_t t = i; t < j; ++t)
            if (positive[order[t]]) {
                rank_sum += mid;
                ++npos;
            }
        i = j;
    }
    const std::size_t nneg = n - npos;
    if (npos == 0 || nneg == 0) return std::nullopt;
    const double p = static_cast<double>(npos), q = static_cast<double>(nneg);
    return (rank_sum - p * (p + 1.0) / 2.0) / (p * q);
}

// Average precision: sum over distinct thresholds (descending) of
// (recall gain) * precision, ties handled as one threshold.
inline std::optional<double> auc_prc_one_vs_rest(std::span<const double> scores, std::span<const bool> positive) {
    const auto n = scores.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });
    const auto npos = static_cast<std::size_t>(std::count(positive.begin(), positive.end(), true));
    if (npos == 0) return std::nullopt;
    double ap = 0.0, prev_recall = 0.0;
    std::size_t tp = 0, seen = 0;
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i;
        while (j < n && scores[order[j]] == scores[order[i]]) {
            tp += positive[order[j]];
            ++j;
        }
        seen = j;
        const double recall = static_cast<double>(tp) / static_cast<double>(npos);
        const double precision = static_cast<double>(tp) / static_cast<double>(seen);
        ap += (recall - prev_recall) * precision;
        prev_recall = recall;
        i = j;
    }
    return ap;
}

} // namespace detail

// Rejected predictions count as unclassified, are left out of the confusion tallies
// behind precision/recall/F1/kappa, and enter AUC/RMSE/MAE with their uniform
// distributions. Multi-class averages are weighted by class support.
inline evaluation_report compute_metrics(std::span<const class_index> truth, std::span<const prediction> predictions,
                                         std::size_t class_count) {
    if (truth.size() != predictions.size()) throw error("truth and predictions differ in length");
    if (truth.empty()) throw error("no predictions to evaluate");
    if (class_count < 1) throw error("class count must be positive");
    const auto n = truth.size();
    const auto k = class_count;
    for (std::size_t i = 0; i < n; ++i) {
        if (truth[i] >= k) throw error("true class index out of range");
        if (predictions[i].distribution.size() != k) throw error("prediction distribution has the wrong arity");
        if (predictions[i].label && *predictions[i].label >= k) throw error("predicted class index out of range");
    }

    evaluation_report r;
    r.instances = n;
    r.confusion.assign(k, std::vector<std::size_t>(k + 1, 0));
    for (std::size_t i = 0; i < n; ++i) {
        const auto& p = predictions[i];
        if (p.rejected()) {
            ++r.unclassified;
            ++r.confusion[truth[i]][k];
        } else {
            ++r.confusion[truth[i]][*p.label];
            if (*p.label == truth[i]) ++r.correct;
            else ++r.incorrect;
        }
    }
    const double dn = static_cast<double>(n);
    r.pct_correct = 100.0 * static_cast<double>(r.correct) / dn;
    r.pct_incorrect = 100.0 * static_cast<double>(r.incorrect) / dn;
    r.pct_unclassified = 100.0 * static_cast<double>(r.unclassified) / dn;

    // committed-decision tallies
    std::vector<double> row(k, 0.0), col(k, 0.0);
    double committed = 0.0, diag = 0.0;
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) {
            const auto c = static_cast<double>(r.confusion[a][b]);
            row[a] += c;
            col[b] += c;
            committed += c;
            if (a == b) diag += c;
        }
    if (committed > 0) {
        for (std::size_t c = 0; c < k; ++c) {
            const double tp = static_cast<double>(r.confusion[c][c]);
            const double prec = col[c] > 0 ? tp / col[c] : 0.0;
            const double rec = row[c] > 0 ? tp / row[c] : 0.0;
            const double f = prec + rec > 0 ? 2.0 * prec * rec / (prec + rec) : 0.0;
            r.precision += row[c] * prec;
            r.recall += row[c] * rec;
            r.f1 += row[c] * f;
        }
        r.precision /= committed;
        r.recall /= committed;
        r.f1 /= committed;

        const double po = diag / committed;
        double pe = 0.0;
        for (std::size_t c = 0; c < k; ++c) pe += (row[c] / committed) * (col[c] / committed);
        if (1.0 - pe > 1e-12) {
            r.kappa = (po - pe) / (1.0 - pe);
        } else {
            r.kappa = 0.0;
            r.kappa_defined = false;
        }
    } else {
        r.kappa_defined = false;
    }

    // distribution-based metrics over all instances
    std::vector<double> scores(n);
    std::unique_ptr<bool[]> positive(new bool[n]);
    std::vector<std::size_t> support(k, 0);
    for (auto t : truth) ++support[t];
    double roc_sum = 0.0, roc_weight = 0.0, prc_sum = 0.0, prc_weight = 0.0;
    for (std::size_t c = 0; c < k; ++c) {
        for (std::size_t i = 0; i < n; ++i) {
            scores[i] = predictions[i].distribution[c];
            positive[i] = truth[i] == c;
        }
        std::span<const bool> pos(positive.get(), n);
        const double w = static_cast<double>(support[c]);
        if (auto roc = detail::auc_roc_one_vs_rest(scores, pos)) {
            roc_sum += w * *roc;
            roc_weight += w;
        }
        if (auto prc = detail::auc_prc_one_vs_rest(scores, pos)) {
            prc_sum += w * *prc;
            prc_weight += w;
        }
    }
    if (roc_weight > 0) r.auc_roc = roc_sum / roc_weight;
    else r.auc_roc_defined = false;
    if (prc_weight > 0) r.auc_prc = prc_sum / prc_weight;

    double se = 0.0, ae = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t c = 0; c < k; ++c) {
            const double d = predictions[i].distribution[c] - (truth[i] == c ? 1.0 : 0.0);
            se += d * d;
            ae += std::abs(d);
        }
    const double cells = dn * static_cast<double>(k);
    r.rmse = std::sqrt(se / cells);
    r.mae = ae / cells;
    return r;
}

struct cv_result {
    evaluation_report pooled;
    std::vector<evaluation_report> folds;
    fold_plan plan;
};

// k-fold cross-validation. Discretization is fitted on each training split; all test
// predictions are pooled before computing the headline metrics.
inline cv_result cross_validate(const nominal_dataset& ds, std::size_t k, std::uint64_t seed, const train_config& config,
                                std::size_t bins = 10) {
    cv_result out;
    out.plan = make_folds(ds, k, seed);
    std::vector<class_index> truth;
    std::vector<prediction> predictions;
    truth.reserve(ds.size());
    predictions.reserve(ds.size());
    for (std::size_t f = 0; f < k; ++f) {
        const auto train_rows = out.plan.train_rows(f);
        const auto test_rows = out.plan.test_rows(f);
        auto [train_set, test_set] = discretize(ds.subset(train_rows), ds.subset(test_rows), bins);
        train_set.set_name(ds.name());
        auto model = train(train_set, config);
        model.fold = static_cast<int>(f);
        std::vector<class_index> fold_truth;
        std::vector<prediction> fold_pred;
        for (std::size_t i = 0; i < test_set.size(); ++i) {
            fold_truth.push_back(test_set.label(i));
            fold_pred.push_back(predict(model, test_set.row(i)));
        }
        out.folds.push_back(compute_metrics(fold_truth, fold_pred, ds.class_count()));
        truth.insert(truth.end(), fold_truth.begin(), fold_truth.end());
        predictions.insert(predictions.end(), std::make_move_iterator(fold_pred.begin()),
                           std::make_move_iterator(fold_pred.end()));
    }
    out.pooled = compute_metrics(truth, predictions, ds.class_count());
    return out;
}

struct dataset_profile {
    std::size_t n_attributes = 0; // including the class attribute
    std::size_t n_instances = 0;
    std::size_t n_classes = 0;
    std::size_t missing_cells = 0;
    double missing_pct = 0.0;
    double class_entropy = 0.0;
    double gini_index = 0.0;
    double palma_ratio = 0.0; // majority count / all other counts
};

inline dataset_profile profile(const nominal_dataset& ds) {
    dataset_profile p;
    p.n_attributes = ds.attribute_count() + 1;
    p.n_instances = ds.size();
    p.n_classes = ds.class_count();
    p.missing_cells = ds.missing_cells();
    const double cells = static_cast<double>((ds.size() + ds.dropped_rows()) * p.n_attributes);
    p.missing_pct = cells > 0 ? 100.0 * static_cast<double>(p.missing_cells) / cells : 0.0;
    if (ds.empty()) return p;
    const auto counts = ds.class_counts();
    p.class_entropy = detail::entropy_of_counts(counts);
    const double n = static_cast<double>(ds.size());
    double sq = 0.0;
    for (auto c : counts) sq += (static_cast<double>(c) / n) * (static_cast<double>(c) / n);
    p.gini_index = 1.0 - sq;
    const auto majority = *std::max_element(counts.begin(), counts.end());
    const auto rest = ds.size() - majority;
    p.palma_ratio = rest ? static_cast<double>(majority) / static_cast<double>(rest) : std::numeric_limits<double>::infinity();
    return p;
}

} // namespace cnctp
