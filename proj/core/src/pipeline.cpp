/*
 * Copyright (C) 2026 The lscsim authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "lscsim/pipeline.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "lscsim/error.hpp"

namespace lscsim {

namespace {

namespace fs = std::filesystem;

std::string format6(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", value);
    return buf;
}

std::string format3(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", value);
    return buf;
}

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> items;
    std::string item;
    std::istringstream in(value);
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (!item.empty()) items.push_back(item);
    }
    return items;
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
    try {
        return std::stoull(value);
    } catch (const std::exception&) {
        throw Error("config key '" + key + "': expected an integer, got '" + value + "'");
    }
}

double parse_f64(const std::string& key, const std::string& value) {
    try {
        return std::stod(value);
    } catch (const std::exception&) {
        throw Error("config key '" + key + "': expected a number, got '" + value + "'");
    }
}

std::vector<std::string> tsv_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, '\t')) fields.push_back(field);
    return fields;
}

std::ofstream open_output(const fs::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + path.string());
    return out;
}

std::uint64_t count_corpus_tokens(const std::string& path) {
    std::uint64_t tokens = 0;
    for (const auto& line : read_token_lines_file(path)) tokens += line.size();
    return tokens;
}

std::string optional6(const std::optional<double>& value) {
    return value ? format6(*value) : "NA";
}

GridCell parse_cell_id(const std::string& id) {
    const std::vector<std::string> parts = [&] {
        std::vector<std::string> out;
        std::string part;
        std::istringstream in(id);
        while (std::getline(in, part, '+')) out.push_back(part);
        return out;
    }();
    if (parts.size() != 5 || parts[3].size() < 2 || parts[3][0] != 'd' || parts[4].size() < 2 ||
        parts[4][0] != 'i')
        throw Error("malformed prediction cell id '" + id + "'");
    GridCell cell;
    cell.model = parse_model(parts[0]);
    cell.align = parse_alignment(parts[1]);
    cell.measure = parse_measure(parts[2]);
    cell.dim = parse_u64("dim", parts[3].substr(1));
    cell.iteration = parse_u64("iteration", parts[4].substr(1));
    return cell;
}

}  // namespace

void apply_config_entry(PipelineConfig& config, const std::string& key, const std::string& value) {
    if (key == "input") {
        config.input = value;
    } else if (key == "out") {
        config.out_dir = value;
    } else if (key == "seed") {
        config.split.seed = parse_u64(key, value);
    } else if (key == "target_min") {
        config.split.target_freq_min = parse_u64(key, value);
    } else if (key == "target_max") {
        config.split.target_freq_max = parse_u64(key, value);
    } else if (key == "k") {
        config.split.binary_k = parse_f64(key, value);
    } else if (key == "re_max") {
        config.split.re_max = parse_f64(key, value);
    } else if (key == "min_freq") {
        config.split.testset_freq_min = parse_u64(key, value);
    } else if (key == "models") {
        config.grid.models.clear();
        for (const std::string& name : split_list(value))
            config.grid.models.push_back(parse_model(name));
    } else if (key == "alignments") {
        config.grid.alignments.clear();
        for (const std::string& name : split_list(value))
            config.grid.alignments.push_back(parse_alignment(name));
    } else if (key == "measures") {
        config.grid.measures.clear();
        for (const std::string& name : split_list(value))
            config.grid.measures.push_back(parse_measure(name));
    } else if (key == "dims") {
        config.grid.dims.clear();
        for (const std::string& dim : split_list(value))
            config.grid.dims.push_back(parse_u64(key, dim));
    } else if (key == "iterations") {
        config.grid.iterations = parse_u64(key, value);
    } else if (key == "window") {
        config.grid.window = parse_u64(key, value);
    } else if (key == "knn") {
        config.grid.knn = parse_u64(key, value);
    } else if (key == "sgns_epochs") {
        config.grid.sgns.epochs = parse_u64(key, value);
    } else if (key == "sgns_negatives") {
        config.grid.sgns.negatives = parse_u64(key, value);
    } else if (key == "sgns_alpha") {
        config.grid.sgns.alpha = parse_f64(key, value);
    } else if (key == "svd_oversample") {
        config.grid.svd.oversample = parse_u64(key, value);
    } else if (key == "svd_power_iterations") {
        config.grid.svd.power_iterations = parse_u64(key, value);
    } else if (key == "rand_trials") {
        config.rand_trials = parse_u64(key, value);
    } else if (key == "jobs") {
        config.jobs = parse_u64(key, value);
    } else {
        throw Error("unknown config key '" + key + "'");
    }
}

PipelineConfig load_pipeline_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open config file: " + path);
    PipelineConfig config;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError(line_no, "expected key = value in " + path);
        try {
            apply_config_entry(config, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
        } catch (const Error& e) {
            throw ParseError(line_no, e.what());
        }
    }
    return config;
}

void run_simulate(const PipelineConfig& config, const LogFn& log) {
    config.split.validate();
    if (config.input.empty()) throw Error("simulate: no input corpus configured");
    const AnnotatedCorpus corpus = parse_corpus_file(config.input);

    const SimulationResult sim = run_simulation(corpus, config.split);
    const ExportStats stats =
        export_outputs(corpus, sim.split, sim.gold, config.out_dir);

    std::ofstream meta = open_output(fs::path(config.out_dir) / "simulate.log");
    meta << "input\t" << config.input << '\n';
    meta << "seed\t" << config.split.seed << '\n';
    meta << "target_min\t" << config.split.target_freq_min << '\n';
    meta << "target_max\t" << config.split.target_freq_max << '\n';
    meta << "k\t" << config.split.binary_k << '\n';
    meta << "re_max\t" << config.split.re_max << '\n';
    meta << "min_freq\t" << config.split.testset_freq_min << '\n';
    meta << "rng\t" << Rng::algorithm_id() << '\n';
    meta << "sentences\t" << corpus.sentences().size() << '\n';
    meta << "tokens_c1\t" << stats.tokens_c1 << '\n';
    meta << "tokens_c2\t" << stats.tokens_c2 << '\n';
    meta << "targets\t" << sim.split.targets.size() << '\n';
    meta << "gold_lemmas\t" << sim.gold.size() << '\n';
    meta << "testset\t" << stats.testset_size << '\n';
    if (log)
        log("simulate: " + std::to_string(corpus.sentences().size()) + " sentences -> C1 " +
            std::to_string(stats.tokens_c1) + " tokens, C2 " + std::to_string(stats.tokens_c2) +
            " tokens, " + std::to_string(sim.split.targets.size()) + " targets, testset " +
            std::to_string(stats.testset_size));
}

void run_models(const PipelineConfig& config, const LogFn& log) {
    const fs::path out(config.out_dir);
    for (const char* required : {"corpus1.txt", "corpus2.txt", "testset.tsv"}) {
        if (!fs::exists(out / required))
            throw IoError("models: missing " + (out / required).string() +
                          " (run simulate first)");
    }
    GridInputs inputs;
    inputs.c1 = read_token_lines_file((out / "corpus1.txt").string());
    inputs.c2 = read_token_lines_file((out / "corpus2.txt").string());
    inputs.seed = config.split.seed;
    inputs.corpus_id = config.input;
    for (const GoldFileRow& row : read_gold_file((out / "testset.tsv").string()))
        inputs.targets.push_back(row.lemma);

    const std::vector<std::string> cells = run_grid(
        inputs, config.grid, (out / "predictions").string(), std::max<std::size_t>(config.jobs, 1),
        log);
    if (log) log("models: wrote " + std::to_string(cells.size()) + " prediction files");
}

std::vector<GoldFileRow> read_gold_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open gold file: " + path);
    std::vector<GoldFileRow> rows;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line_no == 1) continue;  // header
        const std::vector<std::string> fields = tsv_fields(line);
        if (fields.size() != 9) throw ParseError(line_no, "expected 9 columns in " + path);
        GoldFileRow row;
        row.lemma = make_lemma_key(fields[0], fields[1]);
        row.scorable = fields[2] != "NA";
        if (row.scorable) {
            row.graded = parse_f64("graded", fields[2]);
            row.binary = static_cast<int>(parse_u64("binary", fields[3]));
        }
        row.freq_c1 = parse_u64("freq_c1", fields[4]);
        row.freq_c2 = parse_u64("freq_c2", fields[5]);
        row.re = parse_f64("re", fields[6]);
        row.is_target = fields[7] == "1";
        row.in_testset = fields[8] == "1";
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<GoldRecord> read_gold_records(const std::string& gold_path,
                                          const std::string& sfd_path) {
    std::map<LemmaKey, GoldRecord> by_key;
    std::vector<LemmaKey> order;
    for (const GoldFileRow& row : read_gold_file(gold_path)) {
        GoldRecord rec;
        rec.lemma = row.lemma;
        rec.scorable = row.scorable;
        rec.graded = row.graded;
        rec.binary = row.binary;
        rec.freq_c1 = row.freq_c1;
        rec.freq_c2 = row.freq_c2;
        rec.re = row.re;
        rec.is_target = row.is_target;
        rec.in_testset = row.in_testset;
        rec.t1.lemma = rec.t2.lemma = row.lemma;
        order.push_back(row.lemma);
        by_key.emplace(row.lemma, std::move(rec));
    }

    std::ifstream in(sfd_path, std::ios::binary);
    if (!in) throw IoError("cannot open sfd file: " + sfd_path);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line_no == 1) continue;
        const std::vector<std::string> fields = tsv_fields(line);
        if (fields.size() != 5) throw ParseError(line_no, "expected 5 columns in " + sfd_path);
        const auto it = by_key.find(make_lemma_key(fields[0], fields[1]));
        if (it == by_key.end())
            throw ParseError(line_no, "sfd row for unknown lemma " + fields[0]);
        it->second.t1.senses.push_back(fields[2]);
        it->second.t1.counts.push_back(parse_u64("count_c1", fields[3]));
        it->second.t2.senses.push_back(fields[2]);
        it->second.t2.counts.push_back(parse_u64("count_c2", fields[4]));
        it->second.annotated_c1 += it->second.t1.counts.back();
        it->second.annotated_c2 += it->second.t2.counts.back();
    }

    std::vector<GoldRecord> records;
    records.reserve(order.size());
    for (const LemmaKey& key : order) records.push_back(std::move(by_key.at(key)));
    return records;
}

void write_report(const EvaluationReport& report, const std::string& path) {
    std::ofstream out = open_output(path);
    out << "cell\tmodel\talignment\tmeasure\tdim\titerations\trho\tdegenerate\tap\tcoverage\n";
    for (const ReportRow& row : report.rows) {
        out << row.cell << '\t' << row.model << '\t' << row.alignment << '\t' << row.measure
            << '\t' << row.dim << '\t' << row.iterations << '\t' << optional6(row.rho) << '\t'
            << (row.degenerate ? 1 : 0) << '\t' << optional6(row.ap) << '\t'
            << format6(row.coverage) << '\n';
    }
    for (const BaselineRow& row : report.baselines) {
        out << row.name << '\t' << row.name << "\t-\t-\t0\t1\t" << optional6(row.rho) << "\t0\t"
            << optional6(row.ap) << '\t' << format6(row.coverage) << '\n';
    }
}

void write_summary(const EvaluationReport& report, const std::string& path) {
    std::ofstream out = open_output(path);
    out << "measure\tgraded_mean\tgraded_best\tgraded_model\tbinary_mean\tbinary_best\tbinary_"
           "model\n";
    auto opt3 = [](const std::optional<double>& v) { return v ? format3(*v) : std::string("-"); };
    out << "SIM\t" << opt3(report.mean_rho) << '\t' << opt3(report.best_rho) << '\t'
        << (report.best_rho ? report.best_rho_cell : "-") << '\t' << opt3(report.mean_ap) << '\t'
        << opt3(report.best_ap) << '\t' << (report.best_ap ? report.best_ap_cell : "-") << '\n';
    for (const BaselineRow& row : report.baselines) {
        out << row.name << '\t' << opt3(row.rho) << '\t' << opt3(row.rho) << "\t-\t"
            << opt3(row.ap) << '\t' << opt3(row.ap) << "\t-\n";
    }
}

EvaluationReport run_evaluate(const PipelineConfig& config, const LogFn& log) {
    const fs::path out(config.out_dir);
    const fs::path pred_dir = out / "predictions";
    // A deliberately empty grid evaluates the baselines alone; otherwise
    // prediction files must exist.
    const bool baselines_only = expand_grid(config.grid).cells.empty();
    if (!baselines_only && !fs::is_directory(pred_dir))
        throw IoError("evaluate: no prediction directory " + pred_dir.string() +
                      " (run models first)");

    std::map<LemmaKey, double> gold_graded;
    std::map<LemmaKey, int> gold_binary;
    for (const GoldFileRow& row : read_gold_file((out / "testset.tsv").string())) {
        gold_graded[row.lemma] = row.graded;
        gold_binary[row.lemma] = row.binary;
    }
    if (gold_graded.empty()) throw Error("evaluate: empty testset");
    const double testset_size = static_cast<double>(gold_graded.size());

    std::vector<std::string> files;
    if (!baselines_only) {
        for (const auto& entry : fs::directory_iterator(pred_dir))
            if (entry.is_regular_file() && entry.path().extension() == ".tsv")
                files.push_back(entry.path().string());
        std::sort(files.begin(), files.end());
        if (files.empty()) throw Error("evaluate: no prediction files in " + pred_dir.string());
    }

    std::vector<CellScore> scores;
    for (const std::string& file : files) {
        const PredictionSet predictions = read_predictions(file);
        const GridCell cell = parse_cell_id(predictions.id);
        CellScore score;
        score.cell = cell.base_id();
        score.model = to_string(cell.model);
        score.alignment = to_string(cell.align);
        score.measure = to_string(cell.measure);
        score.dim = cell.dim;
        score.iteration = cell.iteration;
        std::size_t covered = 0;
        for (const auto& [key, value] : predictions.scores)
            if (gold_graded.count(key)) ++covered;
        score.coverage = static_cast<double>(covered) / testset_size;
        try {
            const SpearmanResult rho = spearman(predictions, gold_graded);
            score.rho = rho.rho;
            score.degenerate = rho.degenerate;
        } catch (const Error& e) {
            if (log) log("evaluate: " + predictions.id + ": " + e.what());
        }
        try {
            score.ap = average_precision(predictions, gold_binary);
        } catch (const Error& e) {
            if (log) log("evaluate: " + predictions.id + ": " + e.what());
        }
        scores.push_back(std::move(score));
    }

    // Baselines over the testset rows.
    std::vector<GoldRecord> records =
        read_gold_records((out / "gold.tsv").string(), (out / "sfd.tsv").string());
    std::vector<GoldRecord> testset;
    for (GoldRecord& rec : records)
        if (rec.in_testset) testset.push_back(std::move(rec));

    const std::uint64_t n1 = count_corpus_tokens((out / "corpus1.txt").string());
    const std::uint64_t n2 = count_corpus_tokens((out / "corpus2.txt").string());

    std::vector<BaselineRow> baselines;
    auto eval_baseline = [&](const PredictionSet& predictions) {
        BaselineRow row;
        row.name = predictions.id;
        row.coverage = 1.0;
        try {
            row.rho = spearman(predictions, gold_graded).rho;
        } catch (const Error& e) {
            if (log) log("evaluate: " + predictions.id + ": " + e.what());
        }
        try {
            row.ap = average_precision(predictions, gold_binary);
        } catch (const Error& e) {
            if (log) log("evaluate: " + predictions.id + ": " + e.what());
        }
        return row;
    };
    baselines.push_back(eval_baseline(poly_baseline(testset)));
    baselines.push_back(eval_baseline(freq_baseline(testset, n1, n2)));

    std::vector<int> labels;
    labels.reserve(gold_binary.size());
    for (const auto& [key, label] : gold_binary) labels.push_back(label);
    BaselineRow rand_row;
    rand_row.name = "RAND";
    rand_row.coverage = 1.0;
    RandomBaselineResult rand;
    rand.trials = config.rand_trials;
    try {
        Rng rand_rng = Rng::derive(config.split.seed, "evaluate/random-baseline");
        rand = random_baseline_ap(labels, config.rand_trials, rand_rng);
        rand_row.ap = rand.mean_ap;
    } catch (const Error& e) {
        if (log) log(std::string("evaluate: RAND: ") + e.what());
    }
    baselines.push_back(rand_row);

    EvaluationReport report = aggregate(scores, std::move(baselines));
    write_report(report, (out / "report.tsv").string());
    write_summary(report, (out / "summary.tsv").string());

    std::ofstream meta = open_output(out / "evaluate.log");
    meta << "prediction_files\t" << files.size() << '\n';
    meta << "testset\t" << gold_graded.size() << '\n';
    meta << "rand_trials\t" << rand.trials << '\n';
    meta << "rand_mean_ap\t" << format6(rand.mean_ap) << '\n';
    meta << "rand_std_error\t" << format6(rand.std_error) << '\n';
    meta << "rand_analytic_positives_over_n\t" << format6(rand.analytic) << '\n';
    meta << "corpus_tokens_c1\t" << n1 << '\n';
    meta << "corpus_tokens_c2\t" << n2 << '\n';
    if (log) {
        log("evaluate: " + std::to_string(files.size()) + " prediction files over " +
            std::to_string(gold_graded.size()) + " testset lemmas");
        if (report.best_rho)
            log("evaluate: best rho " + format3(*report.best_rho) + " (" + report.best_rho_cell +
                ")");
        if (report.best_ap)
            log("evaluate: best ap " + format3(*report.best_ap) + " (" + report.best_ap_cell +
                ")");
    }
    return report;
}

EvaluationReport run_all(const PipelineConfig& config, const LogFn& log) {
    run_simulate(config, log);
    run_models(config, log);
    return run_evaluate(config, log);
}

}  // namespace lscsim
