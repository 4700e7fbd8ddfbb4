#pragma once

// Independent reference implementations shared by the unit suites and the acceptance
// binary. They use the library's data types but none of its algorithms.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "cnctp/context.hpp"
#include "cnctp/eval.hpp"
#include "cnctp/pertinence.hpp"

namespace oracles {

using namespace cnctp;

inline double h(std::initializer_list<double> ps) {
    double s = 0;
    for (double p : ps)
        if (p > 0) s -= p * std::log2(p);
    return s;
}

// Gain ratio straight from the textbook definition, with map-based counting.
inline gain_ratio_result oracle_gain_ratio(const nominal_dataset& ds, std::size_t j) {
    const double n = static_cast<double>(ds.size());
    std::map<std::size_t, std::map<std::size_t, double>> by_value;
    std::map<std::size_t, double> classes;
    for (std::size_t i = 0; i < ds.size(); ++i) {
        by_value[ds.value(i, j)][ds.label(i)] += 1;
        classes[ds.label(i)] += 1;
    }
    auto entropy = [](const std::map<std::size_t, double>& counts) {
        double total = 0, s = 0;
        for (auto& [k, c] : counts) total += c;
        for (auto& [k, c] : counts) s -= (c / total) * std::log2(c / total);
        return s;
    };
    double cond = 0, iv = 0;
    for (auto& [v, counts] : by_value) {
        double nv = 0;
        for (auto& [k, c] : counts) nv += c;
        cond += nv / n * entropy(counts);
        iv -= nv / n * std::log2(nv / n);
    }
    const double ig = entropy(classes) - cond;
    return {iv > 0 ? ig / iv : 0.0, ig, iv};
}

inline formal_context random_context(std::mt19937_64& rng, std::size_t n, std::size_t m, double density) {
    std::vector<attribute_value> mapping;
    for (std::size_t a = 0; a < m; ++a) mapping.push_back({a, 0});
    formal_context ctx(n, mapping);
    std::bernoulli_distribution cell(density);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t a = 0; a < m; ++a)
            if (cell(rng)) ctx.set(i, a);
    return ctx;
}

inline bitset random_subset(std::mt19937_64& rng, std::size_t size) {
    bitset s(size);
    for (std::size_t i = 0; i < size; ++i)
        if (rng() & 1) s.set(i);
    return s;
}

using index_set = std::vector<std::size_t>;

// Every subset of objects, closed by explicit loops over the incidence relation.
inline std::set<std::pair<index_set, index_set>> brute_force_concepts(const formal_context& ctx) {
    const auto n = ctx.object_count(), m = ctx.attribute_count();
    std::set<std::pair<index_set, index_set>> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        index_set intent;
        for (std::size_t a = 0; a < m; ++a) {
            bool shared = true;
            for (std::size_t i = 0; i < n; ++i)
                if ((mask >> i & 1) && !ctx.incidence(i, a)) shared = false;
            if (shared) intent.push_back(a);
        }
        index_set extent;
        for (std::size_t i = 0; i < n; ++i) {
            bool has_all = true;
            for (auto a : intent)
                if (!ctx.incidence(i, a)) has_all = false;
            if (has_all) extent.push_back(i);
        }
        out.insert({extent, intent});
    }
    return out;
}

inline std::set<std::pair<index_set, index_set>> as_index_sets(const std::vector<formal_concept>& cs) {
    std::set<std::pair<index_set, index_set>> out;
    for (const auto& c : cs) out.insert({c.extent.indices(), c.intent.indices()});
    return out;
}

inline prediction committed(class_index label, std::vector<double> dist) {
    prediction p;
    p.label = label;
    p.distribution = std::move(dist);
    p.scores = p.distribution;
    return p;
}
inline prediction rejected(std::size_t k) {
    prediction p;
    p.distribution.assign(k, 1.0 / static_cast<double>(k));
    p.scores.assign(k, 0.0);
    return p;
}

// Straight evaluation of the metric definitions with no shared code.
struct oracle_metrics {
    double pct_correct, pct_incorrect, pct_unclassified, precision, recall, f1, kappa, auc_roc, auc_prc, rmse, mae;
};

inline oracle_metrics brute_force(const std::vector<class_index>& truth, const std::vector<prediction>& preds, std::size_t k) {
    const auto n = truth.size();
    oracle_metrics o{};
    double correct = 0, incorrect = 0, unclassified = 0;
    std::vector<std::vector<double>> cm(k, std::vector<double>(k, 0));
    for (std::size_t i = 0; i < n; ++i) {
        if (!preds[i].label) {
            unclassified += 1;
            continue;
        }
        cm[truth[i]][*preds[i].label] += 1;
        (*preds[i].label == truth[i] ? correct : incorrect) += 1;
    }
    o.pct_correct = 100 * correct / static_cast<double>(n);
    o.pct_incorrect = 100 * incorrect / static_cast<double>(n);
    o.pct_unclassified = 100 * unclassified / static_cast<double>(n);
    double total = correct + incorrect;
    if (total > 0) {
        for (std::size_t c = 0; c < k; ++c) {
            double tp = cm[c][c], fp = 0, fn = 0;
            for (std::size_t d = 0; d < k; ++d)
                if (d != c) {
                    fp += cm[d][c];
                    fn += cm[c][d];
                }
            const double support = tp + fn;
            const double prec = tp + fp > 0 ? tp / (tp + fp) : 0;
            const double rec = support > 0 ? tp / support : 0;
            const double f = prec + rec > 0 ? 2 * prec * rec / (prec + rec) : 0;
            o.precision += support / total * prec;
            o.recall += support / total * rec;
            o.f1 += support / total * f;
        }
        double po = 0, pe = 0;
        for (std::size_t c = 0; c < k; ++c) {
            po += cm[c][c] / total;
            double row = 0, col = 0;
            for (std::size_t d = 0; d < k; ++d) {
                row += cm[c][d];
                col += cm[d][c];
            }
            pe += row * col / (total * total);
        }
        o.kappa = pe < 1 - 1e-12 ? (po - pe) / (1 - pe) : 0;
    }
    // AUC: all positive/negative pairs; AP: every distinct threshold
    double roc_w = 0, prc_w = 0;
    for (std::size_t c = 0; c < k; ++c) {
        double pos = 0, neg = 0, wins = 0;
        for (std::size_t i = 0; i < n; ++i) (truth[i] == c ? pos : neg) += 1;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (truth[i] != c || truth[j] == c) continue;
                const double si = preds[i].distribution[c], sj = preds[j].distribution[c];
                wins += si > sj ? 1.0 : (si == sj ? 0.5 : 0.0);
            }
        if (pos > 0 && neg > 0) {
            o.auc_roc += pos * wins / (pos * neg);
            roc_w += pos;
        }
        if (pos > 0) {
            std::set<double, std::greater<>> thresholds;
            for (std::size_t i = 0; i < n; ++i) thresholds.insert(preds[i].distribution[c]);
            double ap = 0, prev_recall = 0;
            for (double t : thresholds) {
                double tp = 0, flagged = 0;
                for (std::size_t i = 0; i < n; ++i)
                    if (preds[i].distribution[c] >= t) {
                        flagged += 1;
                        if (truth[i] == c) tp += 1;
                    }
                ap += (tp / pos - prev_recall) * (tp / flagged);
                prev_recall = tp / pos;
            }
            o.auc_prc += pos * ap;
            prc_w += pos;
        }
    }
    o.auc_roc = roc_w > 0 ? o.auc_roc / roc_w : 0.5;
    o.auc_prc = prc_w > 0 ? o.auc_prc / prc_w : 0;
    double se = 0, ae = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t c = 0; c < k; ++c) {
            const double y = truth[i] == c ? 1 : 0;
            se += (preds[i].distribution[c] - y) * (preds[i].distribution[c] - y);
            ae += std::abs(preds[i].distribution[c] - y);
        }
    o.rmse = std::sqrt(se / static_cast<double>(n * k));
    o.mae = ae / static_cast<double>(n * k);
    return o;
}

struct table {
    std::vector<class_index> truth;
    std::vector<prediction> preds;
    std::size_t k;
};

// Twenty truth/prediction tables: five written out, fifteen drawn with coarse
// probabilities so that ties, rejections and absent classes all occur.
inline std::vector<table> metric_tables() {
    std::vector<table> out;
    // 3-class, 10 instances, one rejection
    out.push_back({{0, 0, 0, 1, 1, 1, 2, 2, 2, 2},
                   {committed(0, {0.8, 0.1, 0.1}), committed(0, {0.6, 0.4, 0.0}), committed(1, {0.3, 0.7, 0.0}),
                    committed(1, {0.2, 0.8, 0.0}), committed(1, {0.0, 0.5, 0.5}), committed(2, {0.1, 0.2, 0.7}),
                    committed(2, {0.0, 0.0, 1.0}), committed(2, {0.2, 0.3, 0.5}), committed(0, {0.5, 0.25, 0.25}),
                    rejected(3)},
                   3});
    out.push_back({{0, 1, 0, 1}, {committed(0, {1, 0}), committed(1, {0, 1}), committed(0, {1, 0}), committed(1, {0, 1})}, 2});
    out.push_back({{0, 0, 1, 1}, {rejected(2), rejected(2), rejected(2), rejected(2)}, 2});
    out.push_back({{0, 0, 0}, {committed(0, {1, 0}), committed(0, {1, 0}), committed(0, {0.6, 0.4})}, 2});
    out.push_back({{1, 0, 1, 0, 1}, {committed(0, {0.5, 0.5}), committed(0, {0.5, 0.5}), committed(1, {0.4, 0.6}),
                                     committed(1, {0.4, 0.6}), rejected(2)},
                   2});
    std::mt19937_64 rng(424242);
    while (out.size() < 20) {
        table t;
        t.k = 2 + rng() % 3;
        const std::size_t n = 4 + rng() % 12;
        for (std::size_t i = 0; i < n; ++i) {
            t.truth.push_back(static_cast<class_index>(rng() % t.k));
            if (rng() % 5 == 0) {
                t.preds.push_back(rejected(t.k));
                continue;
            }
            std::vector<double> w(t.k);
            for (auto& x : w) x = static_cast<double>(rng() % 4);
            w[rng() % t.k] += 1;
            const double s = std::accumulate(w.begin(), w.end(), 0.0);
            for (auto& x : w) x /= s;
            const auto label = static_cast<class_index>(std::max_element(w.begin(), w.end()) - w.begin());
            t.preds.push_back(committed(label, w));
        }
        out.push_back(std::move(t));
    }
    return out;
}

} // namespace oracles
