#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>

namespace clubswarm::cli {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr std::size_t kDefaultIterations = 10000;
constexpr std::size_t kDefaultRuns = 50;
constexpr std::size_t kDefaultInfluenceIterations = 500;
constexpr std::size_t kDefaultInfluenceRuns = 5;

const std::vector<std::pair<Subcommand, const char*>> kSubcommands{
    {Subcommand::Run, "single run; writes result.csv with the final best value"},
    {Subcommand::Batch, "repeated runs; one trace per run plus stats.csv"},
    {Subcommand::Table3, "5 functions x 5 optimizers; final values and mean curves"},
    {Subcommand::Table4, "5 functions x 5 optimizers; iterations-to-closeness statistics"},
    {Subcommand::Influence, "flow-of-influence experiment with frozen club membership"},
    {Subcommand::Trace, "single run; per-iteration best value and best particle index"},
};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::string join_list(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? "," : "") + items[i];
  return out;
}

std::string optimizer_flag_value(OptimizerKind k) {
  switch (k) {
    case OptimizerKind::GlobalBest: return "pso-g";
    case OptimizerKind::Ring: return "pso-l";
    case OptimizerKind::Clubs: return "cpso";
  }
  return "cpso";
}

void check_club_flags(const ClubParams& c) {
  if (c.n_clubs == 0) throw UsageError("--clubs: must be positive");
  if (c.min_level == 0) throw UsageError("--min-membership: must be at least 1");
  if (c.min_level > c.default_level)
    throw UsageError("--default-membership: " + std::to_string(c.default_level) +
                     " is below --min-membership " + std::to_string(c.min_level));
  if (c.default_level > c.max_level)
    throw UsageError("--default-membership: " + std::to_string(c.default_level) +
                     " exceeds --max-membership " + std::to_string(c.max_level));
  if (c.max_level > c.n_clubs)
    throw UsageError("--max-membership: " + std::to_string(c.max_level) + " exceeds --clubs " +
                     std::to_string(c.n_clubs));
  if (c.retention_ratio == 0) throw UsageError("--retention-ratio: must be at least 1");
}

}  // namespace

std::string_view subcommand_name(Subcommand c) {
  switch (c) {
    case Subcommand::Run: return "run";
    case Subcommand::Batch: return "batch";
    case Subcommand::Table3: return "table3";
    case Subcommand::Table4: return "table4";
    case Subcommand::Influence: return "influence";
    case Subcommand::Trace: return "trace";
  }
  return "run";
}

ExperimentSpec parse_args(const std::vector<std::string>& args) {
  CLI::App app{"Clubs-based particle swarm optimization: runs, batches and comparison tables",
               "clubswarm"};
  app.fallthrough();
  app.require_subcommand(1);

  std::string function_arg;
  std::string optimizer_arg = "cpso";
  ClubParams clubs;
  clubs.default_level = 15;
  std::size_t particles = 20;
  std::size_t iterations = 0;
  std::size_t runs = 0;
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
  std::string format_arg = "csv";
  std::string out_arg;
  std::size_t dimension = 0;
  std::string levels_arg = "3,10,30";

  auto* f_opt = app.add_option("--function", function_arg,
                               "sphere, rosenbrock, rastrigin, schaffer_f6, ackley "
                               "(comma-separated list for table presets)");
  app.add_option("--optimizer", optimizer_arg, "pso-g | pso-l | cpso (aliases: global, ring, clubs)")
      ->capture_default_str();
  app.add_option("--default-membership", clubs.default_level, "clubs joined at start")
      ->capture_default_str();
  app.add_option("--min-membership", clubs.min_level)->capture_default_str();
  app.add_option("--max-membership", clubs.max_level)->capture_default_str();
  app.add_option("--clubs", clubs.n_clubs, "number of clubs")->capture_default_str();
  app.add_option("--retention-ratio", clubs.retention_ratio,
                 "iterations between steps back toward the default level")
      ->capture_default_str();
  app.add_option("--particles", particles, "swarm size")->capture_default_str()->check(
      CLI::PositiveNumber);
  auto* it_opt = app.add_option("--iterations", iterations,
                                "iterations per run (default 10000; influence 500)");
  auto* runs_opt = app.add_option("--runs", runs, "runs per batch (default 50; influence 5)")
                       ->check(CLI::PositiveNumber);
  auto* seed_opt = app.add_option("--seed", seed, "master seed (random and printed if omitted)");
  app.add_option("--jobs", jobs, "parallel runs within a batch")->capture_default_str()->check(
      CLI::PositiveNumber);
  app.add_option("--format", format_arg, "csv | json")
      ->capture_default_str()
      ->check(CLI::IsMember({"csv", "json"}));
  auto* out_opt = app.add_option("--out", out_arg, "output directory (env CLUBSWARM_OUT)");
  auto* dim_opt = app.add_option("--dimension", dimension, "override problem dimension")
                      ->check(CLI::PositiveNumber);
  app.add_option("--levels", levels_arg, "influence: comma-separated membership levels")
      ->capture_default_str();

  std::vector<std::pair<CLI::App*, Subcommand>> subs;
  for (const auto& [cmd, desc] : kSubcommands)
    subs.emplace_back(app.add_subcommand(std::string(subcommand_name(cmd)), desc), cmd);

  if (args.empty()) throw HelpRequested(app.help(), false);
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help(), true);
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  ExperimentSpec spec;
  for (const auto& [sub, cmd] : subs)
    if (sub->parsed()) spec.command = cmd;
  const bool table = spec.command == Subcommand::Table3 || spec.command == Subcommand::Table4;
  const bool influence = spec.command == Subcommand::Influence;

  if (f_opt->count() > 0) {
    spec.functions.clear();
    for (const auto& name : split_list(function_arg)) {
      auto id = parse_function_name(name);
      if (!id)
        throw UsageError("--function: unknown function '" + name +
                         "' (expected sphere, rosenbrock, rastrigin, schaffer_f6, ackley)");
      spec.functions.push_back(*id);
    }
    if (spec.functions.empty()) throw UsageError("--function: empty list");
  } else if (table) {
    spec.functions.assign(kAllFunctions.begin(), kAllFunctions.end());
  }
  if (!table && !influence && spec.functions.size() != 1)
    throw UsageError("--function: '" + std::string(subcommand_name(spec.command)) +
                     "' takes exactly one function");

  auto kind = parse_optimizer_kind(optimizer_arg);
  if (!kind)
    throw UsageError("--optimizer: unknown optimizer '" + optimizer_arg +
                     "' (expected pso-g, pso-l, cpso)");

  RunConfig& cfg = spec.config;
  cfg.function = spec.functions.front();
  cfg.optimizer = *kind;
  cfg.clubs = clubs;
  cfg.swarm_size = particles;
  cfg.iterations = it_opt->count() && !influence ? iterations : kDefaultIterations;
  cfg.runs = runs_opt->count() ? runs : (influence ? kDefaultInfluenceRuns : kDefaultRuns);

  if (seed_opt->count()) {
    cfg.seed = seed;
  } else {
    std::random_device rd;
    cfg.seed = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
    spec.seed_generated = true;
  }

  spec.jobs = jobs;
  spec.format = format_arg == "json" ? OutputFormat::Json : OutputFormat::Csv;
  if (out_opt->count())
    spec.out_dir = out_arg;
  else if (const char* env = std::getenv("CLUBSWARM_OUT"); env && *env)
    spec.out_dir = env;

  spec.influence.n_clubs = clubs.n_clubs;
  spec.influence.swarm_size = particles;
  spec.influence.iterations =
      it_opt->count() && influence ? iterations : kDefaultInfluenceIterations;

  spec.levels.clear();
  for (const auto& item : split_list(levels_arg)) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != item.size() || v == 0 || v > clubs.n_clubs)
      throw UsageError("--levels: '" + item + "' is not a membership level in [1, " +
                       std::to_string(clubs.n_clubs) + "]");
    spec.levels.push_back(static_cast<std::size_t>(v));
  }
  if (influence && spec.levels.empty()) throw UsageError("--levels: empty list");

  if (dim_opt->count()) {
    if (influence) {
      spec.influence.dimension = dimension;
    } else {
      for (FunctionId f : spec.functions)
        if (f == FunctionId::SchafferF6 && dimension != 2)
          throw UsageError("--dimension: schaffer_f6 is fixed at 2 dimensions");
      cfg.dimension = dimension;
    }
  }

  if (table || cfg.optimizer == OptimizerKind::Clubs) check_club_flags(clubs);
  if (table) {
    for (FunctionId f : spec.functions)
      for (const auto& o : comparison_optimizers()) {
        RunConfig cell = cfg;
        cell.function = f;
        cell.optimizer = o.kind;
        cell.clubs.default_level = o.default_level;
        try {
          cell.validate();
        } catch (const ConfigError& e) {
          throw UsageError(std::string("preset ") + std::string(function_name(f)) + "/" +
                           optimizer_label(o) + ": " + e.what());
        }
      }
  } else if (!influence) {
    try {
      cfg.validate();
    } catch (const ConfigError& e) {
      throw UsageError(e.what());
    }
  }
  return spec;
}

std::vector<std::string> to_args(const ExperimentSpec& spec) {
  const RunConfig& c = spec.config;
  const bool influence = spec.command == Subcommand::Influence;
  std::vector<std::string> fnames;
  for (FunctionId f : spec.functions) fnames.emplace_back(function_name(f));
  std::vector<std::string> lv;
  for (auto l : spec.levels) lv.push_back(std::to_string(l));

  std::vector<std::string> a{std::string(subcommand_name(spec.command)),
                             "--function", join_list(fnames),
                             "--optimizer", optimizer_flag_value(c.optimizer),
                             "--default-membership", std::to_string(c.clubs.default_level),
                             "--min-membership", std::to_string(c.clubs.min_level),
                             "--max-membership", std::to_string(c.clubs.max_level),
                             "--clubs", std::to_string(c.clubs.n_clubs),
                             "--retention-ratio", std::to_string(c.clubs.retention_ratio),
                             "--particles", std::to_string(c.swarm_size),
                             "--iterations",
                             std::to_string(influence ? spec.influence.iterations : c.iterations),
                             "--runs", std::to_string(c.runs),
                             "--seed", std::to_string(c.seed),
                             "--jobs", std::to_string(spec.jobs),
                             "--format", spec.format == OutputFormat::Json ? "json" : "csv",
                             "--out", spec.out_dir.string(),
                             "--levels", join_list(lv)};
  if (influence) {
    a.insert(a.end(), {"--dimension", std::to_string(spec.influence.dimension)});
  } else if (c.dimension != 0) {
    a.insert(a.end(), {"--dimension", std::to_string(c.dimension)});
  }
  return a;
}

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::ofstream open_output(const fs::path& file) {
  std::ofstream out(file, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write output file: " + file.string());
  return out;
}

void finish(std::ofstream& out, const fs::path& file) {
  out.flush();
  if (!out) throw std::runtime_error("error while writing output file: " + file.string());
}

ordered_json optional_json(const std::optional<double>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

std::string optional_csv(const std::optional<double>& v) { return v ? format_real(*v) : ""; }

void write_json(const fs::path& file, const ordered_json& doc) {
  auto out = open_output(file);
  out << doc.dump(2) << '\n';
  finish(out, file);
}

}  // namespace

void write_trace(const fs::path& file, const RunTrace& trace, OutputFormat format,
                 const std::string& meta_json) {
  if (format == OutputFormat::Csv) {
    auto out = open_output(file);
    out << "iteration,best_value,best_particle_index\n";
    for (std::size_t t = 0; t < trace.best_value.size(); ++t)
      out << t + 1 << ',' << format_real(trace.best_value[t]) << ','
          << trace.best_particle_index[t] + 1 << '\n';
    finish(out, file);
    return;
  }
  ordered_json doc;
  doc["meta"] = ordered_json::parse(meta_json);
  auto& rows = doc["rows"] = ordered_json::array();
  for (std::size_t t = 0; t < trace.best_value.size(); ++t)
    rows.push_back({{"iteration", t + 1},
                    {"best_value", trace.best_value[t]},
                    {"best_particle_index", trace.best_particle_index[t] + 1}});
  write_json(file, doc);
}

void write_stats(const fs::path& file, const std::vector<StatsRow>& rows, OutputFormat format,
                 const std::string& meta_json) {
  if (format == OutputFormat::Csv) {
    auto out = open_output(file);
    out << "function,optimizer,avg,median,max,min,success_rate,mean_final_value\n";
    for (const auto& r : rows)
      out << function_name(r.function) << ',' << optimizer_label(r.optimizer) << ','
          << optional_csv(r.stats.avg) << ',' << optional_csv(r.stats.median) << ','
          << optional_csv(r.stats.max) << ',' << optional_csv(r.stats.min) << ','
          << format_real(r.stats.success_rate) << ',' << format_real(r.stats.mean_final_value)
          << '\n';
    finish(out, file);
    return;
  }
  ordered_json doc;
  doc["meta"] = ordered_json::parse(meta_json);
  auto& arr = doc["rows"] = ordered_json::array();
  for (const auto& r : rows)
    arr.push_back({{"function", function_name(r.function)},
                   {"optimizer", optimizer_label(r.optimizer)},
                   {"avg", optional_json(r.stats.avg)},
                   {"median", optional_json(r.stats.median)},
                   {"max", optional_json(r.stats.max)},
                   {"min", optional_json(r.stats.min)},
                   {"success_rate", r.stats.success_rate},
                   {"mean_final_value", r.stats.mean_final_value}});
  write_json(file, doc);
}

namespace {

ordered_json meta_record(const ExperimentSpec& spec) {
  const RunConfig& c = spec.config;
  ordered_json m;
  m["command"] = subcommand_name(spec.command);
  m["argv"] = to_args(spec);
  m["seed"] = c.seed;
  m["seed_generated"] = spec.seed_generated;
  m["seed_derivation"] = "run k uses seed (master XOR k); mt19937_64 seeded via seed_seq{lo32, hi32}";
  std::vector<std::string> fnames;
  for (FunctionId f : spec.functions) fnames.emplace_back(function_name(f));
  m["functions"] = fnames;
  m["optimizer"] = optimizer_flag_value(c.optimizer);
  m["clubs"] = {{"n_clubs", c.clubs.n_clubs},
                {"min_level", c.clubs.min_level},
                {"default_level", c.clubs.default_level},
                {"max_level", c.clubs.max_level},
                {"retention_ratio", c.clubs.retention_ratio}};
  m["particles"] = c.swarm_size;
  m["iterations"] = c.iterations;
  m["runs"] = c.runs;
  m["dimension_override"] = c.dimension;
  m["lrn1"] = c.lrn1;
  m["lrn2"] = c.lrn2;
  m["w_fixed"] = c.w_fixed;
  ordered_json w_cpso;
  for (FunctionId f : kAllFunctions) w_cpso[std::string(function_name(f))] = benchmark(f).w_cpso;
  m["w_cpso"] = w_cpso;
  m["jobs"] = spec.jobs;
  m["format"] = spec.format == OutputFormat::Json ? "json" : "csv";
  m["conventions"] = {
      {"velocity_init", "uniform in [-v_max, v_max] per dimension"},
      {"velocity_clamp", "hard clamp to [-v_max, v_max] after the full update"},
      {"random_draws", "per particle, per dimension, per iteration"},
      {"personal_best", "strict improvement only"},
      {"tie_break", "lowest particle index"},
      {"extremeness", "current fitness vs other neighbors; self-only neighborhood is not extreme"},
      {"retention", "iteration % retention_ratio == 0, iterations counted from 1"},
      {"best_particle_index", "1-based, by current fitness"},
      {"closeness", "swarm-wide best personal-best value"}};
  if (spec.command == Subcommand::Influence) {
    const InfluenceConfig& ic = spec.influence;
    m["influence"] = {{"levels", spec.levels},         {"iterations", ic.iterations},
                      {"dimension", ic.dimension},     {"particles", ic.swarm_size},
                      {"n_clubs", ic.n_clubs},         {"lrn1", ic.lrn1},
                      {"lrn2", ic.lrn2},               {"w_random_upper", ic.w},
                      {"v_max", ic.v_max},             {"init_lo", ic.init_lo},
                      {"init_hi", ic.init_hi},         {"initial_velocity", "zero"},
                      {"objective", "sum of coordinates"}};
  }
  return m;
}

RunConfig cell_config(const RunConfig& base, FunctionId f, const OptimizerSpec& o) {
  RunConfig cfg = base;
  cfg.function = f;
  cfg.optimizer = o.kind;
  if (o.kind == OptimizerKind::Clubs) cfg.clubs.default_level = o.default_level;
  return cfg;
}

std::string ext(OutputFormat f) { return f == OutputFormat::Json ? ".json" : ".csv"; }

std::string run_file_name(std::size_t k, OutputFormat f) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "trace_run_%03zu", k);
  return buf + ext(f);
}

void log_stats(std::ostream& log, FunctionId f, const OptimizerSpec& o, const BatchStats& s) {
  log << function_name(f) << ' ' << optimizer_label(o) << ": mean_final="
      << format_real(s.mean_final_value) << " success=" << s.success_rate << "%";
  if (s.avg) log << " avg_iters=" << *s.avg << " median_iters=" << *s.median;
  log << '\n';
}

void run_grid(const ExperimentSpec& spec, const fs::path& dir, const std::string& meta,
              std::ostream& log, bool curves) {
  std::vector<StatsRow> rows;
  ordered_json curve_json = ordered_json::array();
  std::ofstream curve_csv;
  const fs::path curve_file = dir / ("curves" + ext(spec.format));
  if (curves && spec.format == OutputFormat::Csv) {
    curve_csv = open_output(curve_file);
    curve_csv << "iteration,function,optimizer,mean_best_value\n";
  }
  for (FunctionId f : spec.functions) {
    for (const auto& o : comparison_optimizers()) {
      const RunConfig cfg = cell_config(spec.config, f, o);
      BatchOptions opts;
      opts.jobs = spec.jobs;
      opts.keep_traces = curves;
      BatchResult r = run_batch(cfg, opts);
      rows.push_back({f, o, r.stats});
      log_stats(log, f, o, r.stats);
      if (!curves) continue;
      std::vector<double> mean(cfg.iterations, 0.0);
      for (const auto& t : r.traces)
        for (std::size_t i = 0; i < mean.size(); ++i) mean[i] += t.best_value[i];
      for (auto& v : mean) v /= static_cast<double>(r.traces.size());
      const std::string label = optimizer_label(o);
      for (std::size_t i = 0; i < mean.size(); ++i) {
        if (spec.format == OutputFormat::Csv)
          curve_csv << i + 1 << ',' << function_name(f) << ',' << label << ','
                    << format_real(mean[i]) << '\n';
        else
          curve_json.push_back({{"iteration", i + 1},
                                {"function", function_name(f)},
                                {"optimizer", label},
                                {"mean_best_value", mean[i]}});
      }
    }
  }
  if (curves) {
    if (spec.format == OutputFormat::Csv) {
      finish(curve_csv, curve_file);
    } else {
      ordered_json doc;
      doc["meta"] = ordered_json::parse(meta);
      doc["rows"] = std::move(curve_json);
      write_json(curve_file, doc);
    }
  }
  write_stats(dir / ("stats" + ext(spec.format)), rows, spec.format, meta);
}

void run_influence(const ExperimentSpec& spec, const fs::path& dir, const std::string& meta,
                   std::ostream& log) {
  std::vector<std::vector<double>> series;
  for (std::size_t m : spec.levels) {
    InfluenceConfig ic = spec.influence;
    ic.membership = m;
    std::vector<double> mean(ic.iterations + 1, 0.0);
    for (std::size_t k = 0; k < spec.config.runs; ++k) {
      Rng rng(derive_run_seed(spec.config.seed, k));
      auto s = influence_experiment(ic, rng);
      for (std::size_t i = 0; i < s.size(); ++i) mean[i] += s[i];
    }
    for (auto& v : mean) v /= static_cast<double>(spec.config.runs);
    log << "influence m=" << m << ": mean value at last iteration " << format_real(mean.back())
        << '\n';
    series.push_back(std::move(mean));
  }
  const fs::path file = dir / ("influence" + ext(spec.format));
  if (spec.format == OutputFormat::Csv) {
    auto out = open_output(file);
    out << "m,iteration,mean_value\n";
    for (std::size_t l = 0; l < spec.levels.size(); ++l)
      for (std::size_t i = 0; i < series[l].size(); ++i)
        out << spec.levels[l] << ',' << i << ',' << format_real(series[l][i]) << '\n';
    finish(out, file);
  } else {
    ordered_json doc;
    doc["meta"] = ordered_json::parse(meta);
    auto& rows = doc["rows"] = ordered_json::array();
    for (std::size_t l = 0; l < spec.levels.size(); ++l)
      for (std::size_t i = 0; i < series[l].size(); ++i)
        rows.push_back({{"m", spec.levels[l]}, {"iteration", i}, {"mean_value", series[l][i]}});
    write_json(file, doc);
  }
}

}  // namespace

void execute(const ExperimentSpec& spec, std::ostream& log) {
  const fs::path& dir = spec.out_dir;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir))
    throw std::runtime_error("cannot create output directory: " + dir.string() +
                             (ec ? " (" + ec.message() + ")" : ""));

  const ordered_json meta_doc = meta_record(spec);
  const std::string meta = meta_doc.dump();
  write_json(dir / "meta.json", meta_doc);

  const RunConfig& cfg = spec.config;
  switch (spec.command) {
    case Subcommand::Run: {
      const RunTrace t = run_single(cfg, cfg.seed);
      const auto hit = iterations_to_closeness(t, cfg.objective().closeness_threshold);
      const fs::path file = dir / ("result" + ext(spec.format));
      if (spec.format == OutputFormat::Csv) {
        auto out = open_output(file);
        out << "function,optimizer,seed,final_best_value,iterations_to_closeness\n"
            << function_name(cfg.function) << ',' << optimizer_label(cfg.optimizer_spec()) << ','
            << cfg.seed << ',' << format_real(t.final_best_value) << ','
            << (hit ? std::to_string(*hit) : "") << '\n';
        finish(out, file);
      } else {
        ordered_json doc;
        doc["meta"] = meta_doc;
        doc["rows"] = ordered_json::array(
            {{{"function", function_name(cfg.function)},
              {"optimizer", optimizer_label(cfg.optimizer_spec())},
              {"seed", cfg.seed},
              {"final_best_value", t.final_best_value},
              {"iterations_to_closeness", hit ? ordered_json(*hit) : ordered_json(nullptr)}}});
        write_json(file, doc);
      }
      log << function_name(cfg.function) << ' ' << optimizer_label(cfg.optimizer_spec())
          << ": final_best_value=" << format_real(t.final_best_value) << " iterations_to_closeness="
          << (hit ? std::to_string(*hit) : "none") << '\n';
      break;
    }
    case Subcommand::Trace: {
      const RunTrace t = run_single(cfg, cfg.seed);
      write_trace(dir / ("trace" + ext(spec.format)), t, spec.format, meta);
      log << "wrote " << t.best_value.size() << " trace rows\n";
      break;
    }
    case Subcommand::Batch: {
      BatchOptions opts;
      opts.jobs = spec.jobs;
      const BatchResult r = run_batch(cfg, opts);
      for (std::size_t k = 0; k < r.traces.size(); ++k)
        write_trace(dir / run_file_name(k, spec.format), r.traces[k], spec.format, meta);
      write_stats(dir / ("stats" + ext(spec.format)),
                  {{cfg.function, cfg.optimizer_spec(), r.stats}}, spec.format, meta);
      log_stats(log, cfg.function, cfg.optimizer_spec(), r.stats);
      break;
    }
    case Subcommand::Table3: run_grid(spec, dir, meta, log, true); break;
    case Subcommand::Table4: run_grid(spec, dir, meta, log, false); break;
    case Subcommand::Influence: run_influence(spec, dir, meta, log); break;
  }
}

int main_with_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  ExperimentSpec spec;
  try {
    spec = parse_args(args);
  } catch (const HelpRequested& h) {
    (h.explicit_request ? out : err) << h.what();
    return h.explicit_request ? 0 : 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\nRun 'clubswarm --help' for usage.\n";
    return 2;
  }
  if (spec.seed_generated) out << "seed: " << spec.config.seed << '\n';
  try {
    execute(spec, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace clubswarm::cli
