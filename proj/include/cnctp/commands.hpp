#pragma once

// Command implementations behind the cnctp tool. Each command writes to caller-supplied
// streams and returns a process exit code.

#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "cnctp/classifier.hpp"
#include "cnctp/context.hpp"
#include "cnctp/discretize.hpp"
#include "cnctp/error.hpp"
#include "cnctp/eval.hpp"
#include "cnctp/io.hpp"
#include "cnctp/model_io.hpp"
#include "cnctp/pertinence.hpp"

namespace cnctp::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_input_mismatch = 2;

inline constexpr std::string_view rejected_marker = "REJECTED";

namespace detail {

inline std::string csv_field(std::string_view s) {
    if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

inline std::string num(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (std::isnan(v)) return "nan";
    return cnctp::detail::format_number(v);
}

// Grid points are snapped to 1e-9 so accumulated float error does not leak into output.
inline double snap(double v) { return std::round(v * 1e9) / 1e9; }

inline std::string read_whole(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_whole(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw error("cannot write " + path.string());
    out << text;
    if (!out) throw error("write failed: " + path.string());
}

} // namespace detail

// ---- report CSV -------------------------------------------------------------------

inline const std::vector<std::string>& report_columns() {
    static const std::vector<std::string> cols = {
        "dataset", "p",         "strategy", "select_mode", "pct_correct", "pct_incorrect", "pct_unclassified", "precision",
        "recall",  "f1",        "kappa",    "auc_roc",     "auc_prc",     "rmse",          "mae"};
    return cols;
}

inline std::string report_header() {
    std::string out;
    for (const auto& c : report_columns()) out += (out.empty() ? "" : ",") + c;
    return out;
}

inline std::string report_row(std::string_view dataset, double p, std::string_view strat, std::string_view mode,
                              const evaluation_report& r) {
    using detail::num;
    std::string out = detail::csv_field(dataset);
    for (const std::string& f :
         {num(p), std::string(strat), std::string(mode), num(r.pct_correct), num(r.pct_incorrect), num(r.pct_unclassified),
          num(r.precision), num(r.recall), num(r.f1), num(r.kappa), num(r.auc_roc), num(r.auc_prc), num(r.rmse), num(r.mae)})
        out += "," + f;
    return out;
}

// ---- profile ----------------------------------------------------------------------

inline int cmd_profile(const std::vector<std::string>& paths, const class_selector& cls, std::ostream& out,
                       std::ostream& err) {
    out << "dataset,n_attributes,n_instances,n_classes,missing_cells,missing_pct,class_entropy,gini_index,palma_ratio\n";
    int code = exit_ok;
    for (const auto& path : paths) {
        try {
            const auto ds = load_file(path, cls);
            const auto p = profile(ds);
            out << detail::csv_field(ds.name()) << ',' << p.n_attributes << ',' << p.n_instances << ',' << p.n_classes << ','
                << p.missing_cells << ',' << detail::num(p.missing_pct) << ',' << detail::num(p.class_entropy) << ','
                << detail::num(p.gini_index) << ',' << detail::num(p.palma_ratio) << '\n';
        } catch (const std::exception& e) {
            err << path << ": " << e.what() << '\n';
            code = exit_failure;
        }
    }
    return code;
}

// ---- rank -------------------------------------------------------------------------

inline nominal_dataset load_nominal(const std::string& path, const class_selector& cls, std::size_t bins) {
    auto ds = load_file(path, cls);
    if (ds.all_nominal()) return ds;
    return discretizer::fit(ds, bins).apply(ds);
}

inline int cmd_rank(const std::string& path, const class_selector& cls, std::size_t bins, std::ostream& out) {
    const auto ds = load_nominal(path, cls, bins);
    const auto ranking = rank_attributes(ds);
    out << "attribute,gain_ratio,info_gain,intrinsic_value\n";
    for (const auto& e : ranking.entries)
        out << detail::csv_field(ds.attribute(e.attribute).name) << ',' << detail::num(e.gain_ratio) << ','
            << detail::num(e.info_gain) << ',' << detail::num(e.intrinsic_value) << '\n';
    return exit_ok;
}

// ---- train / predict --------------------------------------------------------------

struct train_options {
    std::string data;
    class_selector cls;
    train_config config;
    std::size_t bins = 10;
    std::string model_path; // empty: model document goes to `out`
};

inline int cmd_train(const train_options& o, std::ostream& out, std::ostream& err) {
    const auto raw = load_file(o.data, o.cls);
    const auto model = fit(raw, o.config, o.bins);
    for (const auto& w : model.warnings) err << "warning: " << w << '\n';
    const auto doc = save_model(model);
    if (o.model_path.empty()) {
        out << doc;
    } else {
        detail::write_whole(o.model_path, doc);
        out << "trained " << model.rules.size() << " rules on " << model.n_total << " instances -> " << o.model_path << '\n';
    }
    return exit_ok;
}

// Maps CSV records onto model attributes by header name. The class column is optional
// and ignored. Values outside the training domain match no rule.
inline std::vector<std::vector<value_index>> map_instances(const cnctp_model& model, std::istream& in) {
    std::vector<std::size_t> lines;
    auto records = cnctp::detail::read_csv_records(in, lines);
    if (records.empty()) throw schema_error("instance file has no header");
    const auto& header = records.front();
    const auto m = model.attributes.size();
    std::vector<std::size_t> column_of(m, header.size());
    for (std::size_t c = 0; c < header.size(); ++c) {
        const auto name = std::string(cnctp::detail::trim(header[c]));
        bool known = false;
        for (std::size_t j = 0; j < m; ++j)
            if (model.attributes[j].name == name) {
                column_of[j] = c;
                known = true;
            }
        if (!known && name != model.class_attribute.name) throw schema_error("unknown column '" + name + "'");
    }
    for (std::size_t j = 0; j < m; ++j)
        if (column_of[j] == header.size())
            throw schema_error("missing column '" + model.attributes[j].name + "'");

    std::vector<std::vector<value_index>> out;
    for (std::size_t r = 1; r < records.size(); ++r) {
        const auto& rec = records[r];
        const auto where = "line " + std::to_string(lines[r]) + ": ";
        if (rec.size() != header.size()) {
            const auto& col = rec.size() < header.size() ? header[rec.size()] : header.back();
            throw schema_error(where + "expected " + std::to_string(header.size()) + " fields, found " +
                               std::to_string(rec.size()) +
                               (rec.size() < header.size() ? " (column '" + col + "' absent)"
                                                           : " (extra field after column '" + col + "')"));
        }
        std::vector<value_index> inst(m);
        for (std::size_t j = 0; j < m; ++j) {
            const auto cell = std::string(cnctp::detail::trim(rec[column_of[j]]));
            const auto& a = model.attributes[j];
            if (const auto* b = model.bins.find(j)) {
                if (cell == missing_label) {
                    inst[j] = b->bin_of(std::nan(""));
                } else {
                    auto v = cnctp::detail::parse_number(cell);
                    if (!v) throw schema_error(where + "column '" + a.name + "' expects a number, got '" + cell + "'");
                    inst[j] = b->bin_of(*v);
                }
            } else {
                inst[j] = a.index_of(cell).value_or(static_cast<value_index>(a.domain.size()));
            }
        }
        out.push_back(std::move(inst));
    }
    return out;
}

struct predict_options {
    std::string model_path;
    std::string data;
    std::string out_path; // empty: stdout
};

inline std::string format_predictions(const cnctp_model& model, const std::vector<std::vector<value_index>>& instances) {
    std::ostringstream o;
    o << "instance,prediction";
    for (const auto& label : model.class_labels()) o << ',' << detail::csv_field("p(" + label + ")");
    o << '\n';
    for (std::size_t i = 0; i < instances.size(); ++i) {
        const auto p = predict(model, instances[i]);
        o << (i + 1) << ','
          << (p.rejected() ? std::string(rejected_marker) : detail::csv_field(model.class_labels()[*p.label]));
        for (double d : p.distribution) o << ',' << detail::num(d);
        o << '\n';
    }
    return o.str();
}

inline int cmd_predict(const predict_options& o, std::ostream& out, std::ostream& err) {
    const auto model = load_model(detail::read_whole(o.model_path));
    std::ifstream in(o.data, std::ios::binary);
    if (!in) throw error("cannot open " + o.data);
    std::vector<std::vector<value_index>> instances;
    try {
        instances = map_instances(model, in);
    } catch (const schema_error& e) {
        err << o.data << ": " << e.what() << '\n';
        return exit_input_mismatch;
    }
    const auto text = format_predictions(model, instances);
    if (o.out_path.empty()) out << text;
    else detail::write_whole(o.out_path, text);
    return exit_ok;
}

// ---- evaluate ---------------------------------------------------------------------

struct evaluate_options {
    std::string data;
    class_selector cls;
    train_config config;
    std::size_t k = 10;
    std::uint64_t seed = 1;
    std::size_t bins = 10;
    std::string out_path; // CSV row; the text report always goes to `out`
};

inline std::string format_report(const nominal_dataset& ds, const evaluate_options& o, const cv_result& cv) {
    const auto& r = cv.pooled;
    std::ostringstream s;
    s << "dataset: " << ds.name() << '\n';
    s << "config: p=" << detail::num(o.config.p) << " strategy=" << to_string(o.config.strategy)
      << " select_mode=" << to_string(o.config.select_mode) << " intent=" << to_string(o.config.intent) << " k=" << o.k
      << " seed=" << o.seed << " bins=" << o.bins << '\n';
    s << "instances: " << r.instances << '\n';
    s << "correct: " << r.correct << " (" << detail::num(r.pct_correct) << "%)\n";
    s << "incorrect: " << r.incorrect << " (" << detail::num(r.pct_incorrect) << "%)\n";
    s << "unclassified: " << r.unclassified << " (" << detail::num(r.pct_unclassified) << "%)\n";
    s << "precision: " << detail::num(r.precision) << '\n';
    s << "recall: " << detail::num(r.recall) << '\n';
    s << "f1: " << detail::num(r.f1) << '\n';
    s << "kappa: " << detail::num(r.kappa) << (r.kappa_defined ? "" : " (undefined)") << '\n';
    s << "auc_roc: " << detail::num(r.auc_roc) << (r.auc_roc_defined ? "" : " (undefined)") << '\n';
    s << "auc_prc: " << detail::num(r.auc_prc) << '\n';
    s << "rmse: " << detail::num(r.rmse) << '\n';
    s << "mae: " << detail::num(r.mae) << '\n';
    s << "confusion (rows: true class; columns: predicted, then " << rejected_marker << "):\n";
    const auto& labels = ds.class_attribute().domain;
    std::size_t w = rejected_marker.size();
    for (const auto& l : labels) w = std::max(w, l.size());
    s << "  " << std::setw(static_cast<int>(w)) << "";
    for (const auto& l : labels) s << ' ' << std::setw(static_cast<int>(w)) << l;
    s << ' ' << std::setw(static_cast<int>(w)) << rejected_marker << '\n';
    for (std::size_t a = 0; a < labels.size(); ++a) {
        s << "  " << std::setw(static_cast<int>(w)) << labels[a];
        for (auto c : r.confusion[a]) s << ' ' << std::setw(static_cast<int>(w)) << c;
        s << '\n';
    }
    s << "per-fold pct_correct:";
    for (const auto& f : cv.folds) s << ' ' << detail::num(f.pct_correct);
    s << '\n';
    return s.str();
}

inline int cmd_evaluate(const evaluate_options& o, std::ostream& out) {
    const auto ds = load_file(o.data, o.cls);
    const auto cv = cross_validate(ds, o.k, o.seed, o.config, o.bins);
    out << format_report(ds, o, cv);
    if (!o.out_path.empty())
        detail::write_whole(o.out_path, report_header() + "\n" +
                                             report_row(ds.name(), o.config.p, to_string(o.config.strategy),
                                                        to_string(o.config.select_mode), cv.pooled) +
                                             "\n");
    return exit_ok;
}

// ---- context / lattice ------------------------------------------------------------

struct context_options {
    std::string data;
    class_selector cls;
    std::size_t bins = 10;
    bool drop_binary_complement = false;
};

inline formal_context context_of(const context_options& o) {
    const auto ds = load_nominal(o.data, o.cls, o.bins);
    return scale(ds, scale_options{o.drop_binary_complement});
}

// Cross table: one row per object (i1..), one 0/1 column per binary attribute (a1..),
// followed by a legend mapping each binary attribute to its attribute=value meaning.
inline int cmd_context(const context_options& o, std::ostream& out) {
    const auto ds = load_nominal(o.data, o.cls, o.bins);
    const auto ctx = scale(ds, scale_options{o.drop_binary_complement});
    out << "object";
    for (std::size_t a = 0; a < ctx.attribute_count(); ++a) out << ",a" << (a + 1);
    out << '\n';
    for (std::size_t i = 0; i < ctx.object_count(); ++i) {
        out << 'i' << (i + 1);
        for (std::size_t a = 0; a < ctx.attribute_count(); ++a) out << ',' << (ctx.incidence(i, a) ? '1' : '0');
        out << '\n';
    }
    out << '\n' << "attribute,meaning\n";
    for (std::size_t a = 0; a < ctx.attribute_count(); ++a) {
        const auto& m = ctx.mapping()[a];
        const auto& spec = ds.attribute(m.attribute);
        out << 'a' << (a + 1) << ',' << detail::csv_field(spec.name + "=" + spec.domain[m.value]) << '\n';
    }
    return exit_ok;
}

inline int cmd_lattice(const context_options& o, std::ostream& out) {
    out << export_dot(enumerate_all_concepts(context_of(o)));
    return exit_ok;
}

// ---- sweep ------------------------------------------------------------------------

struct sweep_config {
    std::vector<std::string> datasets;
    double p_start = 0.025;
    double p_stop = 1.0;
    double p_step = 0.025;
    std::vector<strategy> strategies{strategy::all_values, strategy::relevant_values};
    cnctp::select_mode select_mode = select_mode::fraction;
    intent_mode intent = intent_mode::generator;
    std::size_t k = 10;
    std::uint64_t seed = 1;
    std::size_t bins = 10;
    std::string output; // empty: stdout

    void validate() const {
        if (!(p_step > 0.0 && p_step <= 1.0)) throw error("p_step must lie in (0, 1]");
        if (!(p_start <= p_stop)) throw error("p_start must not exceed p_stop");
        if (p_start < 0.0 || p_stop > 1.0 + 1e-12) throw error("p grid must lie in [0, 1]");
        if (strategies.empty()) throw error("no strategy selected");
        if (k < 2) throw error("k must be at least 2");
        if (bins < 2) throw error("bins must be at least 2");
    }

    std::vector<double> grid() const {
        validate();
        const auto n = static_cast<std::size_t>(std::floor((p_stop - p_start) / p_step + 1e-9)) + 1;
        std::vector<double> out;
        for (std::size_t i = 0; i < n; ++i) out.push_back(detail::snap(p_start + static_cast<double>(i) * p_step));
        return out;
    }
};

inline std::vector<strategy> parse_strategy_set(std::string_view s) {
    if (cnctp::detail::lower(s) == "both") return {strategy::all_values, strategy::relevant_values};
    return {parse_strategy(cnctp::detail::lower(s))};
}

// key=value lines; '#' starts a comment. Relative dataset paths resolve against
// `base_dir`. `datasets` takes a comma-separated list and may repeat.
inline sweep_config parse_sweep_config(std::istream& in, const std::filesystem::path& base_dir = {}) {
    sweep_config c;
    bool datasets_seen = false;
    std::string line;
    std::size_t lineno = 0;
    auto to_double = [&](std::string_view v) {
        auto d = cnctp::detail::parse_number(v);
        if (!d) throw parse_error("expected a number, got '" + std::string(v) + "'", lineno);
        return *d;
    };
    auto to_count = [&](std::string_view v) {
        const double d = to_double(v);
        if (d < 0 || d != std::floor(d)) throw parse_error("expected a non-negative integer", lineno);
        return static_cast<std::uint64_t>(d);
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view sv = line;
        if (auto h = sv.find('#'); h != std::string_view::npos) sv = sv.substr(0, h);
        sv = cnctp::detail::trim(sv);
        if (sv.empty()) continue;
        const auto eq = sv.find('=');
        if (eq == std::string_view::npos) throw parse_error("expected key=value", lineno);
        const auto key = cnctp::detail::lower(cnctp::detail::trim(sv.substr(0, eq)));
        const auto value = cnctp::detail::trim(sv.substr(eq + 1));
        try {
            if (key == "datasets" || key == "dataset") {
                if (!datasets_seen) c.datasets.clear();
                datasets_seen = true;
                std::string_view rest = value;
                while (!rest.empty()) {
                    const auto comma = rest.find(',');
                    const auto item = cnctp::detail::trim(rest.substr(0, comma));
                    if (!item.empty()) {
                        std::filesystem::path p{std::string(item)};
                        if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
                        c.datasets.push_back(p.string());
                    }
                    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
                }
            } else if (key == "p_start") {
                c.p_start = to_double(value);
            } else if (key == "p_stop") {
                c.p_stop = to_double(value);
            } else if (key == "p_step") {
                c.p_step = to_double(value);
            } else if (key == "strategy") {
                c.strategies = parse_strategy_set(value);
            } else if (key == "select_mode") {
                c.select_mode = parse_select_mode(cnctp::detail::lower(value));
            } else if (key == "intent") {
                c.intent = parse_intent_mode(cnctp::detail::lower(value));
            } else if (key == "k") {
                c.k = static_cast<std::size_t>(to_count(value));
            } else if (key == "seed") {
                c.seed = to_count(value);
            } else if (key == "bins") {
                c.bins = static_cast<std::size_t>(to_count(value));
            } else if (key == "output") {
                std::filesystem::path p{std::string(value)};
                if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
                c.output = p.string();
            } else {
                throw parse_error("unknown key '" + key + "'", lineno);
            }
        } catch (const parse_error&) {
            throw;
        } catch (const std::exception& e) {
            throw parse_error(e.what(), lineno);
        }
    }
    c.validate();
    return c;
}

struct sweep_row {
    std::string dataset; // "MACRO" for the per-(p, strategy) average
    double p = 0.0;
    cnctp::strategy strategy = strategy::all_values;
    evaluation_report report;
    std::string error;
    bool macro = false;
};

// CNCTP_WORKERS overrides the pool size; otherwise one worker per hardware thread.
inline std::size_t worker_count() {
    if (const char* env = std::getenv("CNCTP_WORKERS")) {
        if (auto v = cnctp::detail::parse_number(env); v && *v >= 1) return static_cast<std::size_t>(*v);
    }
    return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

namespace detail {

inline evaluation_report macro_mean(const std::vector<const evaluation_report*>& rs) {
    evaluation_report m;
    m.auc_roc = 0.0;
    const double n = static_cast<double>(rs.size());
    for (const auto* r : rs) {
        m.instances += r->instances;
        m.correct += r->correct;
        m.incorrect += r->incorrect;
        m.unclassified += r->unclassified;
        m.pct_correct += r->pct_correct / n;
        m.pct_incorrect += r->pct_incorrect / n;
        m.pct_unclassified += r->pct_unclassified / n;
        m.precision += r->precision / n;
        m.recall += r->recall / n;
        m.f1 += r->f1 / n;
        m.kappa += r->kappa / n;
        m.auc_roc += r->auc_roc / n;
        m.auc_prc += r->auc_prc / n;
        m.rmse += r->rmse / n;
        m.mae += r->mae / n;
        m.kappa_defined = m.kappa_defined && r->kappa_defined;
    }
    return m;
}

} // namespace detail

// Rows come out strategy-major, then p, then dataset in config order, each (strategy, p)
// block closed by its MACRO row. Order does not depend on the worker count.
inline std::vector<sweep_row> run_sweep(const sweep_config& config, std::size_t workers = worker_count()) {
    const auto grid = config.grid();
    const auto nd = config.datasets.size();

    std::vector<std::optional<nominal_dataset>> data(nd);
    std::vector<std::string> load_errors(nd);
    std::vector<std::string> names(nd);
    for (std::size_t d = 0; d < nd; ++d) {
        names[d] = std::filesystem::path(config.datasets[d]).stem().string();
        try {
            data[d] = load_file(config.datasets[d]);
            names[d] = data[d]->name();
        } catch (const std::exception& e) {
            load_errors[d] = e.what();
        }
    }

    const std::size_t jobs = config.strategies.size() * grid.size() * nd;
    std::vector<sweep_row> cells(jobs);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t j; (j = next.fetch_add(1)) < jobs;) {
            const std::size_t d = j % nd;
            const std::size_t g = (j / nd) % grid.size();
            const std::size_t s = j / (nd * grid.size());
            auto& row = cells[j];
            row.dataset = names[d];
            row.p = grid[g];
            row.strategy = config.strategies[s];
            if (!data[d]) {
                row.error = load_errors[d];
                continue;
            }
            try {
                train_config tc{grid[g], row.strategy, config.select_mode, config.intent};
                row.report = cross_validate(*data[d], config.k, config.seed, tc, config.bins).pooled;
            } catch (const std::exception& e) {
                row.error = e.what();
            }
        }
    };
    const auto n_threads = std::min(std::max<std::size_t>(workers, 1), std::max<std::size_t>(jobs, 1));
    if (n_threads <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < n_threads; ++t) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    std::vector<sweep_row> out;
    out.reserve(jobs + config.strategies.size() * grid.size());
    for (std::size_t s = 0; s < config.strategies.size(); ++s)
        for (std::size_t g = 0; g < grid.size(); ++g) {
            std::vector<const evaluation_report*> ok;
            for (std::size_t d = 0; d < nd; ++d) {
                auto& cell = cells[(s * grid.size() + g) * nd + d];
                if (cell.error.empty()) ok.push_back(&cell.report);
                out.push_back(std::move(cell));
            }
            sweep_row macro;
            macro.dataset = "MACRO";
            macro.p = grid[g];
            macro.strategy = config.strategies[s];
            macro.macro = true;
            if (ok.empty()) macro.error = "no dataset evaluated";
            else macro.report = detail::macro_mean(ok);
            out.push_back(std::move(macro));
        }
    return out;
}

inline std::string format_sweep(const sweep_config& config, const std::vector<sweep_row>& rows) {
    std::ostringstream o;
    o << "# MACRO rows: unweighted mean over the datasets evaluated without error at each (p, strategy)\n";
    o << report_header() << ",error\n";
    for (const auto& r : rows) {
        if (r.error.empty()) o << report_row(r.dataset, r.p, to_string(r.strategy), to_string(config.select_mode), r.report) << ',';
        else
            o << detail::csv_field(r.dataset) << ',' << detail::num(r.p) << ',' << to_string(r.strategy) << ','
              << to_string(config.select_mode) << std::string(12, ',') << detail::csv_field(r.error);
        o << '\n';
    }
    return o.str();
}

inline int cmd_sweep(const sweep_config& config, std::ostream& out, std::ostream& err,
                     std::size_t workers = worker_count()) {
    const auto rows = run_sweep(config, workers);
    const auto text = format_sweep(config, rows);
    if (config.output.empty()) out << text;
    else detail::write_whole(config.output, text);
    int code = exit_ok;
    for (const auto& r : rows)
        if (!r.error.empty() && !r.macro) {
            err << r.dataset << " p=" << detail::num(r.p) << ' ' << to_string(r.strategy) << ": " << r.error << '\n';
            code = exit_failure;
        }
    return code;
}

} // namespace cnctp::cli
