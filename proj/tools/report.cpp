#include "report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace euroqual::cli {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

std::string fixed6(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

char league_of(const Team& t) { return tier_letter(tier_of_position(t.uefa_rank)); }

class Writer {
 public:
  explicit Writer(const fs::path& dir) : dir_(dir) {}

  void put(const std::string& name, const std::string& content) {
    const fs::path path = dir_ / name;
    std::ofstream out(path, std::ios::binary);
    out << content;
    out.close();
    if (!out) throw ReportError("cannot write " + path.string());
    written_.push_back(path);
  }

  std::vector<fs::path> written() && { return std::move(written_); }

 private:
  fs::path dir_;
  std::vector<fs::path> written_;
};

// Teams in initial rank order.
std::vector<TeamId> by_rank(const TeamSet& teams) {
  std::vector<TeamId> ids;
  for (int rank = 1; rank <= kNumTeams; ++rank) ids.push_back(teams.at_rank(rank));
  return ids;
}

std::string team_table(const ProbabilityReport& r) {
  std::ostringstream out;
  out << "team,league,uefa_rank,elo,p_direct,p_playoff,p_total,stderr_total\n";
  for (TeamId id : by_rank(r.teams)) {
    const Team& t = r.teams[id];
    out << csv_field(t.name) << ',' << league_of(t) << ',' << t.uefa_rank << ','
        << t.elo << ',' << fixed6(r.p_direct(id)) << ','
        << fixed6(r.p_playoff(id)) << ',' << fixed6(r.p_total(id)) << ','
        << fixed6(r.stderr_total(id)) << '\n';
  }
  return out.str();
}

// Elo against total probability, one series per league.
std::string scatter_table(const ProbabilityReport& r) {
  std::ostringstream out;
  out << "league,team,elo,p_total\n";
  for (Tier tier : kTiers) {
    for (TeamId id : by_rank(r.teams)) {
      const Team& t = r.teams[id];
      if (tier_of_position(t.uefa_rank) != tier) continue;
      out << tier_letter(tier) << ',' << csv_field(t.name) << ',' << t.elo
          << ',' << fixed6(r.p_total(id)) << '\n';
    }
  }
  return out.str();
}

// The two channels side by side, for stacked bars by initial rank.
std::string channel_table(const ProbabilityReport& r) {
  std::ostringstream out;
  out << "uefa_rank,team,league,p_direct,p_playoff\n";
  for (TeamId id : by_rank(r.teams)) {
    const Team& t = r.teams[id];
    out << t.uefa_rank << ',' << csv_field(t.name) << ',' << league_of(t) << ','
        << fixed6(r.p_direct(id)) << ',' << fixed6(r.p_playoff(id)) << '\n';
  }
  return out.str();
}

std::string bars_table(const CounterfactualBars& b) {
  std::ostringstream out;
  out << "scenario,team,uefa_rank,p_direct,p_playoff\n";
  out << "actual," << csv_field(b.team) << ',' << b.actual_rank << ','
      << fixed6(b.actual_direct) << ',' << fixed6(b.actual_playoff) << '\n';
  out << "hypothetical," << csv_field(b.team) << ',' << b.hypothetical_rank
      << ',' << fixed6(b.hypothetical_direct) << ','
      << fixed6(b.hypothetical_playoff) << '\n';
  return out.str();
}

json config_json(const SimConfig& c) {
  json j{{"s", c.s},
         {"home_advantage", c.home_advantage},
         {"iterations", c.iterations},
         {"master_seed", c.master_seed},
         {"policy", std::string(to_string(c.path_policy))},
         {"swap", nullptr}};
  if (c.counterfactual) {
    j["swap"] = {{"team", c.counterfactual->team},
                 {"target_rank", c.counterfactual->target_rank}};
  }
  return j;
}

json run_json(const LabeledReport& run) {
  const ProbabilityReport& r = run.report;
  json teams = json::array();
  for (TeamId id = 0; id < r.teams.size(); ++id) {
    const Team& t = r.teams[id];
    teams.push_back({{"id", id},
                     {"name", t.name},
                     {"uefa_rank", t.uefa_rank},
                     {"elo", t.elo},
                     {"direct", r.counts.direct[id]},
                     {"playoff", r.counts.playoff[id]}});
  }
  return {{"label", run.label},
          {"config", config_json(r.config)},
          {"iterations", r.iterations},
          {"master_seed", r.config.master_seed},
          {"relaxed_iterations", r.counts.relaxed_iterations},
          {"teams", std::move(teams)}};
}

}  // namespace

std::vector<fs::path> write_report(const Experiment& experiment,
                                   const RunSpec& spec) {
  std::error_code ec;
  fs::create_directories(spec.out_dir, ec);
  if (ec) {
    throw ReportError("cannot create " + spec.out_dir.string() + ": " +
                      ec.message());
  }
  Writer writer(spec.out_dir);

  json summary{{"mode", std::string(to_string(spec.mode))},
               {"teams_file", spec.teams_path.string()},
               {"config", config_json(spec.cfg)},
               {"runs", json::array()},
               {"counterfactuals", json::array()}};
  if (!spec.s_values.empty()) summary["s_values"] = spec.s_values;

  for (const LabeledReport& run : experiment.runs) {
    writer.put(run.label + ".csv", team_table(run.report));
    summary["runs"].push_back(run_json(run));
    if (spec.emit_figure_data) {
      writer.put("figure_" + run.label + "_elo_vs_total.csv",
                 scatter_table(run.report));
      writer.put("figure_" + run.label + "_channels.csv",
                 channel_table(run.report));
    }
  }
  for (const CounterfactualBars& b : experiment.counterfactuals) {
    summary["counterfactuals"].push_back(
        {{"label", b.label},
         {"team", b.team},
         {"actual_rank", b.actual_rank},
         {"hypothetical_rank", b.hypothetical_rank},
         {"actual", {{"p_direct", b.actual_direct}, {"p_playoff", b.actual_playoff}}},
         {"hypothetical",
          {{"p_direct", b.hypothetical_direct},
           {"p_playoff", b.hypothetical_playoff}}}});
    if (spec.emit_figure_data) {
      const std::string prefix = b.label.empty() ? "" : b.label + "_";
      writer.put("figure_" + prefix + "counterfactual_bars.csv", bars_table(b));
    }
  }
  writer.put("summary.json", summary.dump(2) + "\n");
  return std::move(writer).written();
}

std::vector<SummaryRun> read_summary(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ReportError("cannot open " + path.string());
  std::vector<SummaryRun> runs;
  try {
    const json doc = json::parse(in);
    for (const json& r : doc.at("runs")) {
      SummaryRun run;
      run.label = r.at("label").get<std::string>();
      run.iterations = r.at("iterations").get<std::uint64_t>();
      run.master_seed = r.at("master_seed").get<std::uint64_t>();
      run.counts.relaxed_iterations =
          r.at("relaxed_iterations").get<std::uint64_t>();
      const json& teams = r.at("teams");
      if (teams.size() != static_cast<std::size_t>(kNumTeams)) {
        throw ReportError(path.string() + ": run '" + run.label + "' lists " +
                          std::to_string(teams.size()) + " teams");
      }
      run.names.resize(kNumTeams);
      for (const json& t : teams) {
        const int id = t.at("id").get<int>();
        if (id < 0 || id >= kNumTeams) {
          throw ReportError(path.string() + ": team id out of range");
        }
        run.names[id] = t.at("name").get<std::string>();
        run.counts.direct[id] = t.at("direct").get<std::uint64_t>();
        run.counts.playoff[id] = t.at("playoff").get<std::uint64_t>();
      }
      runs.push_back(std::move(run));
    }
  } catch (const json::exception& e) {
    throw ReportError(path.string() + ": " + e.what());
  }
  return runs;
}

}  // namespace euroqual::cli
