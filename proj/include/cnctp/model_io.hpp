#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "cnctp/classifier.hpp"
#include "cnctp/error.hpp"

namespace cnctp {

inline constexpr int model_format_version = 1;

inline const char* to_string(strategy s) { return s == strategy::all_values ? "av" : "rv"; }
inline const char* to_string(select_mode m) { return m == select_mode::fraction ? "fraction" : "value"; }
inline const char* to_string(intent_mode m) { return m == intent_mode::generator ? "generator" : "closed"; }

inline strategy parse_strategy(std::string_view s) {
    if (s == "av") return strategy::all_values;
    if (s == "rv") return strategy::relevant_values;
    throw error("unknown strategy '" + std::string(s) + "' (expected av or rv)");
}
inline select_mode parse_select_mode(std::string_view s) {
    if (s == "fraction") return select_mode::fraction;
    if (s == "value") return select_mode::value_threshold;
    throw error("unknown select mode '" + std::string(s) + "' (expected fraction or value)");
}
inline intent_mode parse_intent_mode(std::string_view s) {
    if (s == "generator") return intent_mode::generator;
    if (s == "closed") return intent_mode::closed;
    throw error("unknown intent mode '" + std::string(s) + "' (expected generator or closed)");
}

// Canonical JSON document (.cnctp). Field order is fixed; weights are written with
// round-trip precision.
inline std::string save_model(const cnctp_model& m) {
    using json = nlohmann::ordered_json;
    json doc;
    doc["format"] = "cnctp-model";
    doc["version"] = model_format_version;
    doc["provenance"] = {{"dataset", m.dataset}, {"fold", m.fold}};
    doc["config"] = {{"p", m.config.p},
                     {"strategy", to_string(m.config.strategy)},
                     {"select_mode", to_string(m.config.select_mode)},
                     {"intent", to_string(m.config.intent)}};
    doc["class"] = {{"name", m.class_attribute.name}, {"labels", m.class_attribute.domain}, {"counts", m.class_counts}};
    doc["n_total"] = m.n_total;
    json attrs = json::array();
    for (std::size_t j = 0; j < m.attributes.size(); ++j) {
        json a = {{"name", m.attributes[j].name}, {"domain", m.attributes[j].domain}};
        if (const auto* b = m.bins.find(j)) a["bins"] = {{"edges", b->edges}, {"missing", b->with_missing}};
        attrs.push_back(std::move(a));
    }
    doc["attributes"] = std::move(attrs);
    json rules = json::array();
    for (const auto& r : m.rules) {
        json premises = json::array();
        for (const auto& p : r.premises)
            premises.push_back({{"attribute", m.attributes[p.attribute].name},
                                {"value", m.attributes[p.attribute].domain[p.value]}});
        rules.push_back({{"premises", std::move(premises)},
                         {"conclusion", m.class_attribute.domain[r.conclusion]},
                         {"weight", r.weight},
                         {"covered", r.covered},
                         {"correct_covered", r.correct_covered}});
    }
    doc["rules"] = std::move(rules);
    return doc.dump(2) + "\n";
}

inline cnctp_model load_model(std::string_view text) {
    using json = nlohmann::json;
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw error(std::string("malformed model document: ") + e.what());
    }
    try {
        if (doc.at("format").get<std::string>() != "cnctp-model") throw error("not a cnctp model document");
        const int version = doc.at("version").get<int>();
        if (version != model_format_version)
            throw error("unsupported model version " + std::to_string(version) + " (expected " +
                        std::to_string(model_format_version) + ")");
        cnctp_model m;
        m.dataset = doc.at("provenance").at("dataset").get<std::string>();
        m.fold = doc.at("provenance").at("fold").get<int>();
        const auto& cfg = doc.at("config");
        m.config.p = cfg.at("p").get<double>();
        m.config.strategy = parse_strategy(cfg.at("strategy").get<std::string>());
        m.config.select_mode = parse_select_mode(cfg.at("select_mode").get<std::string>());
        m.config.intent = parse_intent_mode(cfg.at("intent").get<std::string>());
        if (!(m.config.p >= 0.0 && m.config.p <= 1.0)) throw error("p out of range");

        m.class_attribute.name = doc.at("class").at("name").get<std::string>();
        m.class_attribute.domain = doc.at("class").at("labels").get<std::vector<std::string>>();
        m.class_attribute.is_class = true;
        m.class_counts = doc.at("class").at("counts").get<std::vector<std::size_t>>();
        m.n_total = doc.at("n_total").get<std::size_t>();
        if (m.class_attribute.domain.size() < 2) throw error("model needs at least two class labels");
        if (m.class_counts.size() != m.class_attribute.domain.size()) throw error("class counts do not match labels");
        std::size_t sum = 0;
        for (auto c : m.class_counts) sum += c;
        if (sum != m.n_total || m.n_total == 0) throw error("class counts do not sum to n_total");

        std::vector<binning> bins;
        for (const auto& a : doc.at("attributes")) {
            attribute_spec s;
            s.name = a.at("name").get<std::string>();
            s.domain = a.at("domain").get<std::vector<std::string>>();
            if (s.domain.empty()) throw error("attribute '" + s.name + "' has an empty domain");
            if (a.contains("bins")) {
                binning b;
                b.attribute = m.attributes.size();
                b.edges = a.at("bins").at("edges").get<std::vector<double>>();
                b.with_missing = a.at("bins").at("missing").get<bool>();
                if (b.labels() != s.domain) throw error("bin edges of '" + s.name + "' do not match its domain");
                bins.push_back(std::move(b));
            }
            m.attributes.push_back(std::move(s));
        }
        m.bins = discretizer::from_columns(std::move(bins));

        for (const auto& r : doc.at("rules")) {
            classification_rule rule;
            for (const auto& p : r.at("premises")) {
                const auto name = p.at("attribute").get<std::string>();
                const auto value = p.at("value").get<std::string>();
                std::size_t j = 0;
                while (j < m.attributes.size() && m.attributes[j].name != name) ++j;
                if (j == m.attributes.size()) throw error("rule refers to unknown attribute '" + name + "'");
                auto v = m.attributes[j].index_of(value);
                if (!v) throw error("rule refers to unknown value '" + value + "' of '" + name + "'");
                rule.premises.push_back({j, *v});
            }
            if (rule.premises.empty()) throw error("rule without premises");
            std::sort(rule.premises.begin(), rule.premises.end());
            auto c = m.class_attribute.index_of(r.at("conclusion").get<std::string>());
            if (!c) throw error("rule concludes an unknown class");
            rule.conclusion = *c;
            rule.weight = r.at("weight").get<double>();
            rule.covered = r.at("covered").get<std::size_t>();
            rule.correct_covered = r.at("correct_covered").get<std::size_t>();
            if (!(rule.weight >= 0.0 && rule.weight <= 1.0)) throw error("weight out of range");
            if (rule.correct_covered > rule.covered || rule.covered > m.n_total)
                throw error("rule coverage counts are inconsistent");
            if (std::abs(rule.weight - static_cast<double>(rule.correct_covered) / static_cast<double>(m.n_total)) > 1e-12)
                throw error("weight does not equal correct_covered / n_total");
            m.rules.push_back(std::move(rule));
        }
        return m;
    } catch (const json::exception& e) {
        throw error(std::string("malformed model document: ") + e.what());
    }
}

} // namespace cnctp
