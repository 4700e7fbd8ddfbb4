// Walk through the classifier on weather.symbolic: ranking, rules, one prediction and a
// cross-validated score.

#include <cstdio>
#include <string>

#include "cnctp/classifier.hpp"
#include "cnctp/eval.hpp"
#include "cnctp/io.hpp"
#include "cnctp/pertinence.hpp"

int main(int argc, char** argv) {
    const std::string path = argc > 1 ? argv[1] : std::string(CNCTP_DATA_DIR) + "/weather.symbolic.arff";
    const auto ds = cnctp::load_file(path);

    std::printf("gain ratio ranking:\n");
    for (const auto& e : cnctp::rank_attributes(ds).entries)
        std::printf("  %-12s %.4f\n", ds.attribute(e.attribute).name.c_str(), e.gain_ratio);

    cnctp::train_config cfg;
    cfg.p = 0.25;
    const auto model = cnctp::train(ds, cfg);
    std::printf("\nrules at p = %.2f:\n", cfg.p);
    for (const auto& r : model.rules) {
        std::string premise;
        for (const auto& pv : r.premises)
            premise += (premise.empty() ? "" : " and ") + ds.attribute(pv.attribute).name + " = " +
                       ds.attribute(pv.attribute).domain[pv.value];
        std::printf("  if %s then %s  (%zu/%zu)\n", premise.c_str(), ds.class_attribute().domain[r.conclusion].c_str(),
                    r.correct_covered, model.n_total);
    }

    const auto p = cnctp::predict(model, ds.row(0));
    std::printf("\nfirst instance -> %s\n", p.rejected() ? "REJECTED" : ds.class_attribute().domain[*p.label].c_str());

    const auto cv = cnctp::cross_validate(ds, 10, 1, cfg);
    std::printf("10-fold: %.2f%% correct, %.2f%% incorrect, %.2f%% unclassified\n", cv.pooled.pct_correct,
                cv.pooled.pct_incorrect, cv.pooled.pct_unclassified);
    return 0;
}
