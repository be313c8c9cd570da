#include "condmds/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "condmds/csv_io.hpp"
#include "condmds/errors.hpp"
#include "condmds/kinship.hpp"
#include "condmds/svg.hpp"

namespace condmds::cli {

const char* to_string(Command c) noexcept {
  switch (c) {
    case Command::condmds: return "condmds";
    case Command::condisomap: return "condisomap";
    case Command::kinship_demo: return "kinship-demo";
  }
  return "condmds";
}

void RunSpec::validate() const {
  cfg.validate();
  if (command == Command::condisomap && !neighborhood) {
    throw InputError("condisomap requires --k or --epsilon");
  }
  if (!use_kinship && (dissimilarity_path.empty() || auxiliary_path.empty())) {
    throw InputError("--dissimilarity and --auxiliary are required (or use --kinship)");
  }
  if (weights.scheme == WeightScheme::custom) throw InputError("--weights must be uniform or sammon");
}

namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

struct Problem {
  std::vector<std::string> labels;
  DissimilarityMatrix delta;
  AuxiliaryMatrix aux;
};

Problem load(const RunSpec& spec) {
  if (spec.use_kinship) {
    const std::vector<std::string> cond = spec.cond.empty() ? std::vector<std::string>{"gender"} : spec.cond;
    return {kinship::labels(), kinship::dissimilarities(), kinship::auxiliary(cond)};
  }
  LabeledDissimilarity d = parse_dissimilarity_csv(read_file(spec.dissimilarity_path));
  AuxiliaryMatrix all = parse_auxiliary_csv(read_file(spec.auxiliary_path), d.labels);
  AuxiliaryMatrix aux = spec.cond.empty() ? all : select_columns(all, spec.cond);
  return {std::move(d.labels), std::move(d.delta), std::move(aux)};
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << text;
  if (!out) throw InputError("failed writing " + path.string());
}

std::string embedding_csv(const Matrix& u, const std::vector<std::string>& labels) {
  std::string s = "label";
  for (Eigen::Index k = 0; k < u.cols(); ++k) s += ",u" + std::to_string(k + 1);
  s += "\n";
  for (Eigen::Index i = 0; i < u.rows(); ++i) {
    s += labels[std::size_t(i)];
    for (Eigen::Index k = 0; k < u.cols(); ++k) s += "," + format_number(u(i, k));
    s += "\n";
  }
  return s;
}

std::string b_matrix_csv(const Matrix& b, const std::vector<std::string>& names) {
  std::string s;
  for (const auto& n : names) s += "," + n;
  s += "\n";
  for (Eigen::Index i = 0; i < b.rows(); ++i) {
    s += names[std::size_t(i)];
    for (Eigen::Index j = 0; j < b.cols(); ++j) s += "," + format_number(b(i, j));
    s += "\n";
  }
  return s;
}

json config_json(const RunSpec& spec, const std::vector<std::string>& cond) {
  json c;
  c["p"] = spec.cfg.p;
  c["gamma"] = spec.cfg.gamma;
  c["max_iter"] = spec.cfg.l_max;
  c["seed"] = spec.cfg.seed;
  c["restarts"] = spec.cfg.restarts;
  c["weights"] = to_string(spec.weights.scheme);
  c["diag_b"] = spec.cfg.diag_b;
  c["cond"] = cond;
  if (spec.use_kinship) {
    c["input"] = "kinship";
  } else {
    c["dissimilarity"] = spec.dissimilarity_path;
    c["auxiliary"] = spec.auxiliary_path;
  }
  if (spec.neighborhood) {
    json nb;
    if (spec.neighborhood->mode == NeighborhoodMode::knn) {
      nb["k"] = spec.neighborhood->k;
      nb["mutual"] = spec.neighborhood->mutual;
    } else {
      nb["epsilon"] = spec.neighborhood->epsilon;
    }
    nb["largest_component"] = spec.largest_component;
    c["neighborhood"] = nb;
  }
  c["plot"] = spec.plot;
  return c;
}

void execute(const RunSpec& spec, std::ostream& log) {
  spec.validate();
  Problem prob = load(spec);
  std::vector<std::string> cond = prob.aux.names();

  FitReport report;
  std::vector<std::string> labels = prob.labels;
  std::vector<std::string> dropped;
  if (spec.neighborhood) {
    IsomapOptions opts;
    opts.largest_component = spec.largest_component;
    IsomapReport iso;
    try {
      iso = condisomap_fit(prob.delta, prob.aux, spec.weights, *spec.neighborhood, spec.cfg, opts);
    } catch (const DisconnectedGraphError& e) {
      std::string msg = "neighborhood graph is disconnected into " + std::to_string(e.components().size()) +
                        " components:";
      for (const auto& comp : e.components()) {
        msg += " {";
        for (std::size_t i = 0; i < comp.size(); ++i) msg += (i ? "," : "") + prob.labels[comp[i]];
        msg += "}";
      }
      msg += "; try a larger --k or --epsilon, or --largest-component";
      throw DisconnectedGraphError(msg, e.components());
    }
    labels.clear();
    for (std::size_t k : iso.kept) labels.push_back(prob.labels[k]);
    for (std::size_t k : iso.dropped) dropped.push_back(prob.labels[k]);
    report = std::move(iso.fit);
  } else {
    report = fit(prob.delta, prob.aux, make_weights(spec.weights, prob.delta), spec.cfg);
  }

  const fs::path out(spec.out_dir);
  std::error_code ec;
  fs::create_directories(out, ec);
  if (ec || !fs::is_directory(out)) throw InputError("cannot create output directory " + spec.out_dir);

  write_text(out / "embedding.csv", embedding_csv(report.final.u, labels));
  write_text(out / "b_matrix.csv", b_matrix_csv(report.final.b, cond));

  json j;
  j["command"] = to_string(spec.command);
  j["n"] = labels.size();
  j["config"] = config_json(spec, cond);
  j["seed"] = report.seed;
  j["iterations"] = report.iterations;
  j["termination"] = to_string(report.termination);
  j["final_stress"] = report.final_stress();
  j["stress_trace"] = report.stress_trace;
  json restarts = json::array();
  for (const auto& r : report.restarts) {
    restarts.push_back({{"seed", r.seed}, {"final_stress", r.final_stress}, {"iterations", r.iterations}});
  }
  j["restarts"] = restarts;
  if (spec.neighborhood) j["dropped"] = dropped;
  write_text(out / "report.json", j.dump(2) + "\n");

  if (spec.plot) emit_svg(report.final.u, labels, (out / "embedding.svg").string());

  log << to_string(spec.command) << ": " << to_string(report.termination) << " after " << report.iterations
      << " iterations, stress " << report.final_stress() << " (seed " << report.seed << "), wrote "
      << out.string() << "\n";
  if (!dropped.empty()) log << "dropped " << dropped.size() << " point(s) outside the largest component\n";
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

int run(const RunSpec& spec, std::ostream& log, std::ostream& err) {
  try {
    execute(spec, log);
    return kOk;
  } catch (const DisconnectedGraphError& e) {
    err << "error: " << e.what() << "\n";
    return kDisconnected;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInternal;
  }
}

int main_entry(const std::vector<std::string>& args, std::ostream& log, std::ostream& err) {
  CLI::App app{"Conditional multidimensional scaling (conditional SMACOF) and conditional ISOMAP"};
  app.require_subcommand(1);

  RunSpec spec;
  std::string weights = "uniform";
  std::string cond;
  std::optional<int> k;
  std::optional<double> epsilon;
  bool mutual = false;

  auto add_common = [&](CLI::App* sub, bool files) {
    if (files) {
      sub->add_option("--dissimilarity,-d", spec.dissimilarity_path, "Dissimilarity CSV");
      sub->add_option("--auxiliary,-a", spec.auxiliary_path, "Auxiliary variables CSV");
      sub->add_flag("--kinship", spec.use_kinship, "Use the built-in kinship terms data");
    }
    sub->add_option("--cond", cond, "Comma-separated conditioning columns");
    sub->add_option("--p", spec.cfg.p, "Embedding dimension")->capture_default_str();
    sub->add_option("--gamma", spec.cfg.gamma, "Minimum stress improvement per iteration")->capture_default_str();
    sub->add_option("--max-iter", spec.cfg.l_max, "Maximum iterations")->capture_default_str();
    sub->add_option("--seed", spec.cfg.seed, "Random seed")->capture_default_str();
    sub->add_option("--restarts", spec.cfg.restarts, "Random starts (best kept)")->capture_default_str();
    sub->add_option("--weights", weights, "Weight scheme")
        ->check(CLI::IsMember({"uniform", "sammon"}))
        ->capture_default_str();
    sub->add_flag("--sammon-allow-zero", spec.weights.allow_zero, "Give zero-dissimilarity pairs weight 0");
    sub->add_flag("--diag-b", spec.cfg.diag_b, "Constrain B to be diagonal");
    sub->add_option("--k", k, "Neighborhood size for condISOMAP");
    sub->add_option("--epsilon", epsilon, "Neighborhood radius for condISOMAP");
    sub->add_flag("--mutual-knn", mutual, "Keep only mutual k-nearest-neighbor edges");
    sub->add_flag("--largest-component", spec.largest_component, "Embed only the largest graph component");
    sub->add_flag("--plot{true}", spec.plot, "Write embedding.svg (requires --p 2)")->expected(0, 1);
    sub->add_option("--out", spec.out_dir, "Output directory")->capture_default_str();
  };

  CLI::App* mds = app.add_subcommand("condmds", "Conditional MDS on CSV inputs");
  CLI::App* iso = app.add_subcommand("condisomap", "Conditional ISOMAP on CSV inputs");
  CLI::App* demo = app.add_subcommand("kinship-demo", "Run on the built-in kinship terms data");
  add_common(mds, true);
  add_common(iso, true);
  add_common(demo, false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, log, err);
    return code == 0 ? kOk : kInvalidInput;
  }

  if (mds->parsed()) spec.command = Command::condmds;
  if (iso->parsed()) spec.command = Command::condisomap;
  if (demo->parsed()) {
    spec.command = Command::kinship_demo;
    spec.use_kinship = true;
  }
  spec.weights.scheme = weights == "sammon" ? WeightScheme::sammon : WeightScheme::uniform;
  spec.cond = split_list(cond);

  if (k && epsilon) {
    err << "error: --k and --epsilon are mutually exclusive\n";
    return kInvalidInput;
  }
  if (spec.command == Command::condmds && (k || epsilon)) {
    err << "error: --k/--epsilon apply to condisomap and kinship-demo only\n";
    return kInvalidInput;
  }
  if (k) spec.neighborhood = NeighborhoodSpec::knn(*k, mutual);
  if (epsilon) spec.neighborhood = NeighborhoodSpec::radius(*epsilon);

  return run(spec, log, err);
}

}  // namespace condmds::cli
