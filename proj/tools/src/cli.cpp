// Copyright 2026 The rankgauge Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include "output.hpp"
#include "reproduce.hpp"
#include "version.hpp"

#include "rankgauge/catalog.hpp"
#include "rankgauge/errors.hpp"
#include "rankgauge/io.hpp"
#include "rankgauge/measures.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

namespace rankgauge::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Common {
    OptimConfig                  cfg;
    std::optional<std::uint64_t> seed;
    std::string                  out_dir;
    std::string                  example;
    std::string                  input;
    double                       zero_threshold = kZeroThreshold;
};

void add_optimizer_flags(CLI::App *cmd, Common &c) {
    cmd->add_option("--trials", c.cfg.trials, "Random trials per optimization")->capture_default_str();
    cmd->add_option("--seed", c.seed, "Base seed (falls back to RANKGAUGE_SEED, then 0)");
    cmd->add_option("--tol-grad", c.cfg.tol_grad, "Gradient max-norm tolerance")->capture_default_str();
    cmd->add_option("--tol-loss", c.cfg.tol_loss_rel, "Relative loss-change tolerance")->capture_default_str();
    cmd->add_option("--max-iters", c.cfg.max_iters, "Iteration cap per trial")->capture_default_str();
    cmd->add_option("--threads", c.cfg.threads, "Worker threads for trials and grid points")->capture_default_str();
    cmd->add_option("--out", c.out_dir, "Directory for CSV results and manifests");
}

void add_input_flags(CLI::App *cmd, Common &c) {
    cmd->add_option("--example", c.example, "Catalog example, name:key=val,...");
    cmd->add_option("input", c.input, "Vector-set JSON file");
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t> &flag) {
    if(flag) return *flag;
    const char *env = std::getenv("RANKGAUGE_SEED");
    if(env == nullptr || *env == '\0') return 0;
    try {
        std::size_t pos = 0;
        const auto  v   = std::stoull(env, &pos);
        if(pos != std::string(env).size()) throw std::invalid_argument(env);
        return v;
    } catch(const std::exception &) { throw UsageError(fmt::format("RANKGAUGE_SEED must be an unsigned integer, got '{}'", env)); }
}

json config_json(const Common &c) {
    return {
        {"trials", c.cfg.trials},       {"tol_grad", c.cfg.tol_grad}, {"tol_loss", c.cfg.tol_loss_rel},
        {"max_iters", c.cfg.max_iters}, {"memory", c.cfg.memory},     {"threads", c.cfg.threads},
        {"init_scale", c.cfg.init_scale}, {"max_reinit", c.cfg.max_reinit},
    };
}

struct Target {
    std::string              label;
    Subspace                 subspace;
    std::optional<PureState> state;
    std::string              hash;
};

Target load_target(const Common &c) {
    if(!c.example.empty() && !c.input.empty()) throw UsageError("give either an input file or --example, not both");
    if(c.example.empty() && c.input.empty()) throw UsageError("missing input: give a vector-set file or --example");
    if(!c.example.empty()) {
        auto ex = resolve_example(c.example);
        return {ex.canonical, std::move(ex.subspace), std::move(ex.state), hex64(fnv1a64(ex.canonical))};
    }
    std::ifstream in(c.input, std::ios::binary);
    if(!in) throw InputError(fmt::format("cannot open '{}'", c.input));
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    VectorSet         set;
    try {
        set = parse_vector_set(text);
    } catch(const InputError &e) { throw InputError(fmt::format("{}: {}", c.input, e.what())); }
    std::optional<PureState> state;
    if(set.vectors.size() == 1) {
        state = set.vectors.front().normalize();
    }
    return {c.input, Subspace::from_spanning_set(set.vectors), std::move(state), hex64(fnv1a64(text))};
}

class Session {
  public:
    Session(std::string command, std::vector<std::string> argv, std::ostream &out)
        : start_(std::chrono::steady_clock::now()), out_(out) {
        manifest_.command = std::move(command);
        manifest_.argv    = std::move(argv);
    }

    Manifest &manifest() { return manifest_; }

    void emit(const std::string &dir, const std::string &name, const std::string &text) {
        pending_.emplace_back(name, text);
        dir_ = dir;
    }

    /// Writes every pending file plus one sibling manifest per file.
    void finish() {
        if(pending_.empty()) return;
        manifest_.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        for(const auto &[name, text] : pending_) manifest_.outputs.push_back(name);
        const std::string manifest_text = manifest_.to_json().dump(2) + "\n";
        for(const auto &[name, text] : pending_) {
            const auto path = write_file(dir_, name, text);
            const auto stem = fs::path(name).stem().string();
            write_file(dir_, stem + ".manifest.json", manifest_text);
            out_ << "wrote " << path.string() << "\n";
        }
    }

  private:
    std::chrono::steady_clock::time_point            start_;
    std::ostream                                    &out_;
    Manifest                                         manifest_;
    std::string                                      dir_;
    std::vector<std::pair<std::string, std::string>> pending_;
};

std::string termination_of(const OptimReport &rep) {
    for(const auto &d : rep.per_trial)
        if(d.trial == rep.best_trial) return std::string(to_string(d.reason));
    return std::string(to_string(Termination::Failed));
}

int cmd_compute(Common &c, int r, bool emit_closest, Session &session, std::ostream &out) {
    if(r < 2) throw UsageError("--r must be >= 2");
    c.cfg.seed = resolve_seed(c.seed);
    c.cfg.validate();
    const Target t = load_target(c);
    const auto   rep   = er_subspace_report(t.subspace, r, c.cfg);
    const double value = std::clamp(rep.best_value, 0.0, 1.0);

    CsvTable summary({"r", "value", "best_trial", "termination"});
    summary.add({std::to_string(r), num(value), std::to_string(rep.best_trial), termination_of(rep)});
    CsvTable trials({"trial", "seed", "value", "iterations", "converged", "termination", "reinitializations"});
    for(const auto &d : rep.per_trial)
        trials.add({std::to_string(d.trial), std::to_string(d.seed), num(d.value), std::to_string(d.iterations),
                    d.converged ? "true" : "false", std::string(to_string(d.reason)), std::to_string(d.reinitializations)});
    out << summary.str() << "\n" << trials.str();

    auto &m      = session.manifest();
    m.config     = config_json(c);
    m.config["r"] = r;
    m.config["input"] = t.label;
    m.seed       = c.cfg.seed;
    m.input_hash = t.hash;

    const std::string dir = c.out_dir.empty() ? std::string(".") : c.out_dir;
    if(!c.out_dir.empty()) {
        session.emit(dir, "compute.csv", summary.str());
        session.emit(dir, "compute_trials.csv", trials.str());
    }
    if(emit_closest) session.emit(dir, "closest.json", state_to_json(rep.best_state));
    return kSuccess;
}

int cmd_border_rank(Common &c, int r_max, Session &session, std::ostream &out) {
    if(r_max < 2) throw UsageError("--r-max must be >= 2");
    if(!(c.zero_threshold > 0.0)) throw UsageError("--zero-threshold must be positive");
    c.cfg.seed = resolve_seed(c.seed);
    c.cfg.validate();
    const Target t    = load_target(c);
    const auto   scan = rank_scan(t.subspace, r_max, c.zero_threshold, c.cfg);

    CsvTable table({"r", "value", "termination"});
    for(const auto &e : scan.entries) table.add({std::to_string(e.r), num(e.value), std::string(to_string(e.reason))});
    table.add({"border_rank", scan.certified_rank ? std::to_string(*scan.certified_rank) : fmt::format(">={}", scan.r_max)});
    out << table.str();

    auto &m                   = session.manifest();
    m.config                  = config_json(c);
    m.config["r_max"]         = r_max;
    m.config["zero_threshold"] = c.zero_threshold;
    m.config["input"]         = t.label;
    m.seed                    = c.cfg.seed;
    m.input_hash              = t.hash;
    if(!c.out_dir.empty()) session.emit(c.out_dir, "border_rank.csv", table.str());
    return kSuccess;
}

int cmd_ges(Common &c, Session &session, std::ostream &out) {
    if(!(c.zero_threshold > 0.0)) throw UsageError("--zero-threshold must be positive");
    c.cfg.seed = resolve_seed(c.seed);
    c.cfg.validate();
    const Target t    = load_target(c);
    const auto   scan = genuine_entanglement_scan(t.subspace, c.cfg, c.zero_threshold);

    CsvTable table({"bipartition", "value"});
    for(const auto &v : scan.values) table.add({v.cut.label(), num(v.value)});
    table.add({"genuinely_entangled", scan.genuinely_entangled ? "true" : "false"});
    out << table.str();

    auto &m                    = session.manifest();
    m.config                   = config_json(c);
    m.config["zero_threshold"] = c.zero_threshold;
    m.config["input"]          = t.label;
    m.seed                     = c.cfg.seed;
    m.input_hash               = t.hash;
    if(!c.out_dir.empty()) session.emit(c.out_dir, "ges.csv", table.str());
    return kSuccess;
}

int cmd_reproduce(Common &c, const std::string &target, ReproduceOptions opt, Session &session, std::ostream &out) {
    if(!is_reproduce_target(target))
        throw UsageError(fmt::format("unknown reproduce target '{}' (expected fig1, fig2, fig3, table2 or examples)", target));
    c.cfg.seed = resolve_seed(c.seed);
    c.cfg.validate();
    opt.cfg = c.cfg;
    const auto files = reproduce(target, opt);

    auto &m             = session.manifest();
    m.config            = config_json(c);
    m.config["target"]  = target;
    m.config["samples"] = opt.samples;
    m.config["points"]  = opt.points;
    m.config["full"]    = opt.full;
    m.config["max_dim"] = opt.max_total_dim;
    m.seed              = c.cfg.seed;
    m.input_hash        = hex64(fnv1a64(target));
    const std::string dir = c.out_dir.empty() ? std::string("results") : c.out_dir;
    for(const auto &f : files) {
        out << f.table.str();
        session.emit(dir, f.name, f.table.str());
    }
    return kSuccess;
}

std::vector<std::string> replay_argv(const std::string &manifest_path, const std::string &out_override) {
    std::ifstream in(manifest_path, std::ios::binary);
    if(!in) throw InputError(fmt::format("cannot open '{}'", manifest_path));
    json doc;
    try {
        doc = json::parse(in);
    } catch(const json::parse_error &e) { throw InputError(fmt::format("{}: malformed manifest: {}", manifest_path, e.what())); }
    if(!doc.is_object() || !doc.contains("argv") || !doc["argv"].is_array())
        throw InputError(fmt::format("{}: field 'argv' missing or not an array", manifest_path));
    std::vector<std::string> argv;
    for(const auto &a : doc["argv"]) {
        if(!a.is_string()) throw InputError(fmt::format("{}: field 'argv' must hold strings", manifest_path));
        argv.push_back(a.get<std::string>());
    }
    if(argv.empty() || argv.front() == "replay") throw InputError(fmt::format("{}: not a replayable manifest", manifest_path));
    if(!out_override.empty()) {
        bool replaced = false;
        for(std::size_t i = 0; i < argv.size(); ++i) {
            if(argv[i] == "--out" && i + 1 < argv.size()) {
                argv[i + 1] = out_override;
                replaced    = true;
            } else if(argv[i].rfind("--out=", 0) == 0) {
                argv[i]  = "--out=" + out_override;
                replaced = true;
            }
        }
        if(!replaced) {
            argv.push_back("--out");
            argv.push_back(out_override);
        }
    }
    return argv;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Certify entanglement and tensor ranks through the geometric measure E_r", "rankgauge"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kVersion));

    Common common;

    auto *compute = app.add_subcommand("compute", "E_r of a subspace or state");
    int   r       = 2;
    bool  emit_closest = false;
    compute->add_option("--r", r, "Rank bound r (optimizes over rank r-1)")->capture_default_str();
    compute->add_flag("--emit-closest", emit_closest, "Write the minimizing state to closest.json");
    add_input_flags(compute, common);
    add_optimizer_flags(compute, common);

    auto *border = app.add_subcommand("border-rank", "E_r for r = 2..r_max and the zero/nonzero transition");
    int   r_max  = 5;
    border->add_option("--r-max", r_max, "Largest r to scan")->capture_default_str();
    border->add_option("--zero-threshold", common.zero_threshold, "Values below this count as zero")->capture_default_str();
    add_input_flags(border, common);
    add_optimizer_flags(border, common);

    auto *ges = app.add_subcommand("ges", "E_2 across every bipartition");
    ges->add_option("--zero-threshold", common.zero_threshold, "Values below this count as zero")->capture_default_str();
    add_input_flags(ges, common);
    add_optimizer_flags(ges, common);

    auto            *repro = app.add_subcommand("reproduce", "Regenerate reference data sets as CSV");
    std::string      target;
    ReproduceOptions ropt;
    repro->add_option("target", target, "fig1 | fig2 | fig3 | table2 | examples")->required();
    repro->add_option("--samples", ropt.samples, "fig2: perturbations per grid point")->capture_default_str();
    repro->add_option("--points", ropt.points, "fig3: random coefficient triples")->capture_default_str();
    repro->add_flag("--full", ropt.full, "table2: include the larger dimension rows");
    repro->add_option("--max-dim", ropt.max_total_dim, "table2: skip rows with d1*d2*d3 above this (0 = no cap)")
        ->capture_default_str();
    repro->add_option("--grid-step", ropt.grid_step, "fig2: trace-norm grid step")->capture_default_str();
    repro->add_option("--grid-max", ropt.grid_max, "fig2: largest trace norm")->capture_default_str();
    add_optimizer_flags(repro, common);

    auto       *replay = app.add_subcommand("replay", "Re-run the command recorded in a manifest");
    std::string manifest_path, replay_out;
    replay->add_option("manifest", manifest_path, "Manifest JSON")->required();
    replay->add_option("--out", replay_out, "Write results here instead of the recorded directory");

    app.add_subcommand("examples", "List the example catalog");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch(const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    try {
        Session session(app.get_subcommands().front()->get_name(), args, out);
        int     code = kSuccess;
        if(compute->parsed()) {
            code = cmd_compute(common, r, emit_closest, session, out);
        } else if(border->parsed()) {
            code = cmd_border_rank(common, r_max, session, out);
        } else if(ges->parsed()) {
            code = cmd_ges(common, session, out);
        } else if(repro->parsed()) {
            code = cmd_reproduce(common, target, ropt, session, out);
        } else if(replay->parsed()) {
            return run(replay_argv(manifest_path, replay_out), out, err);
        } else {
            for(const auto &line : catalog_help()) out << line << "\n";
            return kSuccess;
        }
        session.finish();
        return code;
    } catch(const UsageError &e) {
        err << "usage error: " << e.what() << "\n";
        return kUsageError;
    } catch(const InputError &e) {
        err << "input error: " << e.what() << "\n";
        return kInputError;
    } catch(const OptimizationFailure &e) {
        err << "optimization failed: " << e.what() << "\n";
        return kOptimizationFailed;
    } catch(const SingularParameterError &e) {
        err << "optimization failed: " << e.what() << "\n";
        return kOptimizationFailed;
    } catch(const Error &e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
}

} // namespace rankgauge::cli
