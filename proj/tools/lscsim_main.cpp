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
#include <CLI11.hpp>
#include <iostream>
#include <string>
#include <vector>

#include "lscsim/error.hpp"
#include "lscsim/pipeline.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;

struct CliOptions {
    std::string config_path;
    std::vector<std::pair<std::string, std::string>> overrides;  // config keys set via flags
};

// Flags shared by every subcommand; each maps onto one config key so that
// "flag overrides config file" needs no special cases.
void add_common_flags(CLI::App* cmd, CliOptions& options) {
    cmd->add_option_function<std::string>(
           "--config", [&options](const std::string& v) { options.config_path = v; },
           "plain key=value config file");
    auto key_option = [cmd, &options](const std::string& flag, const std::string& key,
                                      const std::string& help) {
        cmd->add_option_function<std::string>(
            flag, [&options, key](const std::string& v) { options.overrides.emplace_back(key, v); },
            help);
    };
    key_option("--out", "out", "output directory");
    key_option("--seed", "seed", "master random seed");
    key_option("--jobs", "jobs", "worker threads for independent grid jobs");
    key_option("--input", "input", "annotated corpus in canonical format");
    key_option("--target-min", "target_min", "minimum annotated frequency of target lemmas");
    key_option("--target-max", "target_max", "maximum annotated frequency of target lemmas");
    key_option("--k", "k", "binary change probability threshold");
    key_option("--re-max", "re_max", "relative frequency error cutoff for the testset");
    key_option("--min-freq", "min_freq", "per-side frequency floor for the testset");
    key_option("--models", "models", "comma list: count,ppmi,svd,sgns");
    key_option("--alignments", "alignments", "comma list: ci,op,wi");
    key_option("--measures", "measures", "comma list: cd,lnd");
    key_option("--dims", "dims", "comma list of embedding dimensionalities");
    key_option("--iterations", "iterations", "iterations for models with a random component");
    key_option("--sgns-epochs", "sgns_epochs", "SGNS training epochs");
    key_option("--rand-trials", "rand_trials", "trials of the random baseline");
}

lscsim::PipelineConfig build_config(const CliOptions& options) {
    lscsim::PipelineConfig config;
    if (!options.config_path.empty())
        config = lscsim::load_pipeline_config(options.config_path);
    for (const auto& [key, value] : options.overrides)
        lscsim::apply_config_entry(config, key, value);
    return config;
}

void log_line(const std::string& message) { std::cerr << "[lscsim] " << message << "\n"; }

void print_summary(const lscsim::EvaluationReport& report) {
    auto show = [](const std::optional<double>& v) {
        if (!v) return std::string("-");
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3f", *v);
        return std::string(buf);
    };
    std::cout << "measure\tgraded_mean\tgraded_best\tgraded_model\tbinary_mean\tbinary_best"
                 "\tbinary_model\n";
    std::cout << "SIM\t" << show(report.mean_rho) << '\t' << show(report.best_rho) << '\t'
              << (report.best_rho ? report.best_rho_cell : "-") << '\t' << show(report.mean_ap)
              << '\t' << show(report.best_ap) << '\t'
              << (report.best_ap ? report.best_ap_cell : "-") << '\n';
    for (const auto& row : report.baselines) {
        std::cout << row.name << '\t' << show(row.rho) << '\t' << show(row.rho) << "\t-\t"
                  << show(row.ap) << '\t' << show(row.ap) << "\t-\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lexical semantic change simulation and model evaluation"};
    app.require_subcommand(1);

    CliOptions options;
    CLI::App* simulate = app.add_subcommand(
        "simulate", "split the corpus into C1/C2 and extract gold change scores");
    CLI::App* models =
        app.add_subcommand("models", "train the model grid and write prediction files");
    CLI::App* evaluate =
        app.add_subcommand("evaluate", "score predictions and baselines against gold");
    CLI::App* all = app.add_subcommand("all", "simulate, models and evaluate in sequence");
    for (CLI::App* cmd : {simulate, models, evaluate, all}) add_common_flags(cmd, options);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        const lscsim::PipelineConfig config = build_config(options);
        if (simulate->parsed()) {
            lscsim::run_simulate(config, log_line);
        } else if (models->parsed()) {
            lscsim::run_models(config, log_line);
        } else if (evaluate->parsed()) {
            print_summary(lscsim::run_evaluate(config, log_line));
        } else {
            print_summary(lscsim::run_all(config, log_line));
        }
        return kExitOk;
    } catch (const lscsim::Error& e) {
        std::cerr << "lscsim: error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "lscsim: internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
