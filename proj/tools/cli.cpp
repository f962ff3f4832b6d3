#include "cli.hpp"

#include "flagiso/error.hpp"
#include "flagiso/mclass.hpp"

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif
#include <nlohmann/json.hpp>

#include <algorithm>
#include <atomic>
#include <ostream>
#include <sstream>
#include <thread>

namespace flagiso::cli {

namespace {

int min_rank(char f) {
  switch (f) {
  case 'A': return 1;
  case 'B':
  case 'G': return 2;
  case 'C': return 3;
  case 'D':
  case 'F': return 4;
  case 'E': return 6;
  }
  return 1;
}

int max_rank_of(char f, int cap) {
  switch (f) {
  case 'E': return std::min(cap, 8);
  case 'F': return std::min(cap, 4);
  case 'G': return std::min(cap, 2);
  }
  return cap;
}

std::string sizes(const ClassificationReport& r) {
  std::string s;
  for (std::size_t i = 0; i < r.blocks.size(); ++i) s += (i ? "," : "") + std::to_string(r.blocks[i].dim);
  return s;
}

} // namespace

std::string cmd_mclasses(DynkinType dynkin, const std::string& format) {
  RootSystem sys(dynkin);
  auto classes = positive_m_classes(sys);
  if (format == "json") {
    nlohmann::json j;
    j["type"] = std::string(1, static_cast<char>(dynkin.family));
    j["rank"] = dynkin.rank;
    j["classes"] = nlohmann::json::array();
    for (const auto& c : classes) {
      std::vector<std::string> labels;
      for (RootIndex r : c) labels.push_back(sys.label(r));
      j["classes"].push_back({{"roots", labels}, {"parity", parity_vector(sys, c.front()).to_string()}});
    }
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << dynkin.name() << ": " << classes.size() << " M-classes on " << sys.num_positive() << " positive roots\n";
  for (const auto& c : classes) {
    os << "  " << parity_vector(sys, c.front()).to_string() << "  {";
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? ", " : "") << sys.label(c[i]);
    os << "}\n";
  }
  return os.str();
}

bool cmd_classify(const CliConfig& cfg, std::ostream& out) {
  auto dynkin = DynkinType::make(cfg.family, cfg.rank);
  auto theta = ThetaSubset::from_indices(cfg.rank, cfg.theta);
  auto r = full_report(dynkin, theta, {cfg.verify});
  out << (cfg.format == "json" ? to_json(r) + "\n" : render_table(r));
  return !cfg.verify || r.oracle.verified;
}

bool cmd_sweep(const CliConfig& cfg, std::ostream& out) {
  struct Job {
    DynkinType dynkin;
    ThetaSubset theta;
  };
  std::vector<Job> jobs;
  for (char f : cfg.families) {
    for (int l = min_rank(f); l <= max_rank_of(f, cfg.max_rank); ++l) {
      auto d = DynkinType::make(f, l);
      for (std::uint32_t bits = 0; bits + 1 < (1u << l); ++bits) jobs.push_back({d, ThetaSubset(l, bits)});
    }
  }
  std::vector<ClassificationReport> reports(jobs.size());
  std::vector<std::string> errors(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      try {
        reports[i] = full_report(jobs[i].dynkin, jobs[i].theta, {cfg.verify});
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  unsigned n = cfg.jobs > 0 ? static_cast<unsigned>(cfg.jobs) : std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  std::size_t bad = 0;
  nlohmann::json all = nlohmann::json::array();
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const bool ok = errors[i].empty() && (!cfg.verify || reports[i].oracle.verified);
    bad += !ok;
    if (cfg.format == "json") {
      if (errors[i].empty()) all.push_back(nlohmann::json::parse(to_json(reports[i])));
      else all.push_back({{"type", jobs[i].dynkin.name()}, {"theta", jobs[i].theta.one_based()}, {"error", errors[i]}});
      continue;
    }
    out << jobs[i].dynkin.name() << " " << jobs[i].theta.to_string() << "  ";
    if (!errors[i].empty()) {
      out << "ERROR " << errors[i] << "\n";
      continue;
    }
    out << "blocks " << sizes(reports[i]) << "  equivalence classes " << reports[i].equivalences.size();
    if (cfg.verify) out << (ok ? "  verified" : "  DISAGREE");
    out << "\n";
  }
  if (cfg.format == "json")
    out << nlohmann::json{{"flags", jobs.size()}, {"failures", bad}, {"reports", all}}.dump(2) << "\n";
  else
    out << "\n" << jobs.size() << " flags, " << bad << " failures\n";
  return bad == 0;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Isotropy representations of real flag manifolds of split real forms"};
  app.require_subcommand(1);
  CliConfig cfg;
  std::string type = "A";
  std::string theta_text;

  auto add_type = [&](CLI::App* sub) {
    sub->add_option("--type", type, "Dynkin family A..G")->required()->check(CLI::IsMember({"A", "B", "C", "D", "E", "F", "G"}));
    sub->add_option("--rank", cfg.rank, "Rank")->required();
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "table"}));
  };
  auto* mcl = app.add_subcommand("mclasses", "M-equivalence classes of positive roots");
  add_type(mcl);
  auto* cls = app.add_subcommand("classify", "Classify one flag manifold");
  add_type(cls);
  cls->add_option("--theta", theta_text, "Simple roots in theta, 1-based, comma separated");
  cls->add_flag("--verify", cfg.verify, "Check every verdict with the oracle");
  auto* swp = app.add_subcommand("sweep", "Classify every flag up to a rank");
  swp->add_option("--max-rank", cfg.max_rank, "Largest rank")->check(CLI::Range(1, 8));
  swp->add_option("--families", cfg.families, "Families to include, e.g. ABCD");
  swp->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "table"}));
  swp->add_option("--jobs", cfg.jobs, "Worker threads");
  swp->add_flag("--verify", cfg.verify, "Check every verdict with the oracle");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    cfg.family = type.empty() ? 'A' : type[0];
    if (!theta_text.empty()) {
      std::stringstream ss(theta_text);
      std::string item;
      while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t used = 0;
        int v = std::stoi(item, &used);
        if (used != item.size()) throw Error("bad theta entry: " + item);
        cfg.theta.push_back(v);
      }
    }
    if (*mcl) {
      out << cmd_mclasses(DynkinType::make(cfg.family, cfg.rank), cfg.format);
      return 0;
    }
    if (*cls) return cmd_classify(cfg, out) ? 0 : 1;
    for (char f : cfg.families)
      if (std::string("ABCDEFG").find(f) == std::string::npos) throw Error(std::string("unknown family ") + f);
    return cmd_sweep(cfg, out) ? 0 : 1;
  } catch (const std::invalid_argument&) {
    err << "error: theta must be a comma-separated list of integers\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

} // namespace flagiso::cli
