#pragma once

// Argument parsing for the cnctp tool. Kept in a header so tests can drive the full
// command line in-process.

#include <filesystem>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cnctp/commands.hpp"

namespace cnctp::cli {

namespace detail {

inline class_selector selector_of(const std::string& cls) {
    if (cls.empty()) return {};
    return cls;
}

struct model_flags {
    double p = 1.0;
    std::string strategy = "av";
    std::string select_mode = "fraction";
    std::string intent = "generator";

    void add_to(CLI::App& app) {
        app.add_option("--p", p, "fraction of ranked attributes kept, or the gain-ratio threshold in value mode")
            ->check(CLI::Range(0.0, 1.0))
            ->capture_default_str();
        app.add_option("--strategy", strategy, "av (all values) or rv (modal value)")
            ->check(CLI::IsMember({"av", "rv"}, CLI::ignore_case))
            ->capture_default_str();
        app.add_option("--select-mode", select_mode, "fraction or value")
            ->check(CLI::IsMember({"fraction", "value"}, CLI::ignore_case))
            ->capture_default_str();
        app.add_option("--intent", intent, "generator or closed")
            ->check(CLI::IsMember({"generator", "closed"}, CLI::ignore_case))
            ->capture_default_str();
    }

    train_config config() const {
        return {p, parse_strategy(cnctp::detail::lower(strategy)), parse_select_mode(cnctp::detail::lower(select_mode)),
                parse_intent_mode(cnctp::detail::lower(intent))};
    }
};

} // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"cnctp: concept-based classifier with gain-ratio attribute selection"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    std::string data, cls, model_path, out_path, config_path;
    std::vector<std::string> paths;
    std::size_t bins = 10, k = 10;
    std::uint64_t seed = 1;
    bool drop_complement = false;
    detail::model_flags mf;

    auto add_class = [&](CLI::App* sub) {
        sub->add_option("--class", cls, "class attribute name (default: last column)");
    };
    auto add_bins = [&](CLI::App* sub) {
        sub->add_option("--bins", bins, "equal-width bins for numeric attributes")
            ->check(CLI::Range(std::size_t{2}, std::size_t{100000}))
            ->capture_default_str();
    };

    auto* profile_cmd = app.add_subcommand("profile", "dataset statistics as CSV");
    profile_cmd->add_option("--data,paths", paths, "ARFF or CSV files");
    add_class(profile_cmd);

    auto* rank_cmd = app.add_subcommand("rank", "gain-ratio ranking as CSV");
    rank_cmd->add_option("--data", data)->required();
    add_class(rank_cmd);
    add_bins(rank_cmd);

    auto* train_cmd = app.add_subcommand("train", "train a model");
    train_cmd->add_option("--data", data)->required();
    train_cmd->add_option("--model,--out", model_path, "model file to write (default: stdout)");
    add_class(train_cmd);
    add_bins(train_cmd);
    mf.add_to(*train_cmd);

    auto* predict_cmd = app.add_subcommand("predict", "classify CSV instances with a saved model");
    predict_cmd->add_option("--model", model_path)->required();
    predict_cmd->add_option("--data", data, "CSV with a header naming the model attributes")->required();
    predict_cmd->add_option("--out", out_path, "output CSV (default: stdout)");

    auto* evaluate_cmd = app.add_subcommand("evaluate", "stratified k-fold cross-validation");
    evaluate_cmd->add_option("--data", data)->required();
    evaluate_cmd->add_option("--k", k)->check(CLI::Range(std::size_t{2}, std::size_t{1000000}))->capture_default_str();
    evaluate_cmd->add_option("--seed", seed)->capture_default_str();
    evaluate_cmd->add_option("--out", out_path, "also write the report as a CSV row");
    add_class(evaluate_cmd);
    add_bins(evaluate_cmd);
    mf.add_to(*evaluate_cmd);

    auto* context_cmd = app.add_subcommand("context", "scaled binary context as CSV");
    auto* lattice_cmd = app.add_subcommand("lattice", "concept lattice as Graphviz DOT");
    for (auto* sub : {context_cmd, lattice_cmd}) {
        sub->add_option("--data", data)->required();
        sub->add_flag("--drop-binary-complement", drop_complement,
                      "one column for boolean-valued attributes (the positive value)");
        add_class(sub);
        add_bins(sub);
    }

    auto* sweep_cmd = app.add_subcommand("sweep", "threshold sweep over datasets, CSV output");
    double p_start = 0.025, p_stop = 1.0, p_step = 0.025;
    std::string strategies = "both", sweep_mode = "fraction", sweep_intent = "generator";
    sweep_cmd->add_option("--config", config_path, "key=value sweep configuration");
    sweep_cmd->add_option("--data,paths", paths, "datasets (added to those in --config)");
    auto* o_start = sweep_cmd->add_option("--p-start", p_start);
    auto* o_stop = sweep_cmd->add_option("--p-stop", p_stop);
    auto* o_step = sweep_cmd->add_option("--p-step", p_step);
    auto* o_strat = sweep_cmd->add_option("--strategy", strategies, "av, rv or both")
                        ->check(CLI::IsMember({"av", "rv", "both"}, CLI::ignore_case));
    auto* o_mode = sweep_cmd->add_option("--select-mode", sweep_mode)
                       ->check(CLI::IsMember({"fraction", "value"}, CLI::ignore_case));
    auto* o_intent = sweep_cmd->add_option("--intent", sweep_intent)
                         ->check(CLI::IsMember({"generator", "closed"}, CLI::ignore_case));
    auto* o_k = sweep_cmd->add_option("--k", k);
    auto* o_seed = sweep_cmd->add_option("--seed", seed);
    auto* o_bins = sweep_cmd->add_option("--bins", bins);
    auto* o_out = sweep_cmd->add_option("--out", out_path);

    std::vector<std::string> argv_store{"cnctp"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        const auto cs = detail::selector_of(cls);
        if (*profile_cmd) return cmd_profile(paths, cs, out, err);
        if (*rank_cmd) return cmd_rank(data, cs, bins, out);
        if (*train_cmd) return cmd_train({data, cs, mf.config(), bins, model_path}, out, err);
        if (*predict_cmd) return cmd_predict({model_path, data, out_path}, out, err);
        if (*evaluate_cmd) return cmd_evaluate({data, cs, mf.config(), k, seed, bins, out_path}, out);
        if (*context_cmd) return cmd_context({data, cs, bins, drop_complement}, out);
        if (*lattice_cmd) return cmd_lattice({data, cs, bins, drop_complement}, out);
        if (*sweep_cmd) {
            sweep_config sc;
            if (!config_path.empty()) {
                std::ifstream in(config_path);
                if (!in) throw error("cannot open " + config_path);
                sc = parse_sweep_config(in, std::filesystem::path(config_path).parent_path());
            }
            sc.datasets.insert(sc.datasets.end(), paths.begin(), paths.end());
            if (o_start->count()) sc.p_start = p_start;
            if (o_stop->count()) sc.p_stop = p_stop;
            if (o_step->count()) sc.p_step = p_step;
            if (o_strat->count()) sc.strategies = parse_strategy_set(strategies);
            if (o_mode->count()) sc.select_mode = parse_select_mode(cnctp::detail::lower(sweep_mode));
            if (o_intent->count()) sc.intent = parse_intent_mode(cnctp::detail::lower(sweep_intent));
            if (o_k->count()) sc.k = k;
            if (o_seed->count()) sc.seed = seed;
            if (o_bins->count()) sc.bins = bins;
            if (o_out->count()) sc.output = out_path;
            sc.validate();
            return cmd_sweep(sc, out, err);
        }
    } catch (const schema_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_input_mismatch;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_failure;
    }
    return exit_failure;
}

} // namespace cnctp::cli
