#pragma once

#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cnctp/dataset.hpp"
#include "cnctp/io.hpp"

namespace testing_support {

// First seven rows of weather.symbolic.
inline const char* const weather_subset_arff = R"(@relation weather-subset
@attribute outlook {sunny, overcast, rainy}
@attribute temperature {hot, mild, cool}
@attribute humidity {high, normal}
@attribute windy {FALSE, TRUE}
@attribute play {yes, no}
@data
sunny,hot,high,FALSE,no
sunny,hot,high,TRUE,no
overcast,hot,high,FALSE,yes
rainy,mild,high,FALSE,yes
rainy,cool,normal,FALSE,yes
rainy,cool,normal,TRUE,no
overcast,cool,normal,TRUE,yes
)";

inline cnctp::nominal_dataset from_arff(const std::string& text) {
    std::istringstream in(text);
    return cnctp::load_arff(in);
}

inline cnctp::nominal_dataset weather_subset() { return from_arff(weather_subset_arff); }

inline std::string data_path(const std::string& file) { return std::string(CNCTP_DATA_DIR) + "/" + file; }

// Random nominal dataset: m attributes with 1..max_values values each, k classes. Every
// class is guaranteed at least one row.
inline cnctp::nominal_dataset random_dataset(std::mt19937_64& rng, std::size_t n, std::size_t m, std::size_t k,
                                             std::size_t max_values = 4) {
    std::vector<cnctp::attribute_spec> attrs;
    for (std::size_t j = 0; j < m; ++j) {
        const auto v = 1 + rng() % max_values;
        cnctp::attribute_spec a{"x" + std::to_string(j), cnctp::attribute_kind::nominal, {}, false};
        for (std::size_t t = 0; t < v; ++t) a.domain.push_back("v" + std::to_string(t));
        attrs.push_back(a);
    }
    cnctp::attribute_spec cls{"class", cnctp::attribute_kind::nominal, {}, true};
    for (std::size_t c = 0; c < k; ++c) cls.domain.push_back("c" + std::to_string(c));
    cnctp::nominal_dataset ds("random", attrs, cls);
    std::vector<cnctp::value_index> row(m);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) row[j] = static_cast<cnctp::value_index>(rng() % attrs[j].domain.size());
        const auto label = i < k ? i : rng() % k;
        ds.add_row(row, static_cast<cnctp::class_index>(label));
    }
    return ds;
}

} // namespace testing_support
