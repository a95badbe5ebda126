// Copyright 2026 The HintGuess Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hintguess/eval/report_io.h"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "hintguess/errors.h"

namespace hintguess {

using nlohmann::json;

json ToJson(const CrossPlayReport& r) {
  json clusters = json::array();
  for (const Cluster& c : r.clusters) {
    clusters.push_back({{"members", c.members},
                        {"label", ClusterLabelName(c.label)},
                        {"sp_mean", c.sp_mean},
                        {"xp_mean", c.xp_mean},
                        {"exact_match_pct", c.exact_match_pct}});
  }
  return {{"ids", r.ids},
          {"scores", r.scores},
          {"games", r.games},
          {"sp_mean", r.sp_mean},
          {"sp_standard_error", r.sp_standard_error},
          {"xp_mean", r.xp_mean},
          {"xp_standard_error", r.xp_standard_error},
          {"clusters", clusters},
          {"cluster_of", r.cluster_of}};
}

CrossPlayReport CrossPlayReportFromJson(const json& j) {
  try {
    CrossPlayReport r;
    r.ids = j.at("ids").get<std::vector<std::string>>();
    r.scores = j.at("scores").get<std::vector<std::vector<double>>>();
    r.games = j.at("games").get<std::vector<std::vector<std::int64_t>>>();
    if (r.scores.size() != r.ids.size()) throw ConfigurationError("score matrix is not square");
    for (const auto& row : r.scores)
      if (row.size() != r.ids.size()) throw ConfigurationError("score matrix is not square");
    Summarize(r);
    r.cluster_of = j.value("cluster_of", std::vector<int>(r.ids.size(), -1));
    for (const auto& c : j.value("clusters", json::array())) {
      Cluster cl;
      cl.members = c.at("members").get<std::vector<int>>();
      const std::string label = c.value("label", "none");
      cl.label = label == "Sim" ? ClusterLabel::kSim
                 : label == "Dissim" ? ClusterLabel::kDissim
                                     : ClusterLabel::kNone;
      cl.sp_mean = c.value("sp_mean", 0.0);
      cl.xp_mean = c.value("xp_mean", 0.0);
      cl.exact_match_pct = c.value("exact_match_pct", -1.0);
      r.clusters.push_back(cl);
    }
    return r;
  } catch (const json::exception& e) {
    throw ConfigurationError(std::string("bad cross-play report: ") + e.what());
  }
}

json ToJson(const ConditionalMatrix& m) {
  return {{"kind", ConditionalKindName(m.kind)},
          {"labels", m.labels},
          {"probabilities", m.probabilities},
          {"counts", m.counts},
          {"row_totals", m.row_totals}};
}

json ToJson(const ProbeReport& report) {
  json results = json::array();
  for (const ProbeResult& r : report.results) {
    results.push_back({{"scenario", r.scenario},
                       {"human_pct", r.human_pct},
                       {"win_pct", r.win_pct},
                       {"repetitions", r.repetitions}});
  }
  return {{"mode", report.mode}, {"results", results}};
}

json ToJson(const OrderMatchingResult& r) {
  return {{"same_order_pct", r.same_order_pct},
          {"reversed_order_pct", r.reversed_order_pct},
          {"games", r.games}};
}

std::string CrossPlayCsv(const CrossPlayReport& r) {
  std::ostringstream out;
  out << std::setprecision(6) << "hinter\\guesser";
  for (const auto& id : r.ids) out << ',' << id;
  out << '\n';
  for (int i = 0; i < r.size(); ++i) {
    out << r.ids[i];
    for (double s : r.scores[i]) out << ',' << s;
    out << '\n';
  }
  return out.str();
}

std::string ConditionalCsv(const ConditionalMatrix& m) {
  std::ostringstream out;
  out << std::setprecision(6) << ConditionalKindName(m.kind);
  for (const auto& l : m.labels) out << ',' << l;
  out << ",samples\n";
  for (std::size_t r = 0; r < m.labels.size(); ++r) {
    out << m.labels[r];
    for (double p : m.probabilities[r]) out << ',' << p;
    out << ',' << m.row_totals[r] << '\n';
  }
  return out.str();
}

std::string ProbeCsv(const ProbeReport& report) {
  std::ostringstream out;
  out << "scenario,mode,human_pct,win_pct,repetitions\n";
  for (const ProbeResult& r : report.results) {
    out << r.scenario << ',' << report.mode << ',' << r.human_pct << ',' << r.win_pct << ','
        << r.repetitions << '\n';
  }
  return out.str();
}

std::string CurveCsv(const std::vector<CurvePoint>& curve) {
  std::ostringstream out;
  out << std::setprecision(8) << "episode,epsilon,score,loss_hinter,loss_guesser,updates\n";
  for (const CurvePoint& p : curve) {
    out << p.episode << ',' << p.epsilon << ',' << p.score << ',' << p.loss_hinter << ','
        << p.loss_guesser << ',' << p.updates << '\n';
  }
  return out.str();
}

void WriteTextFile(const std::string& path, const std::string& text) {
  const std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigurationError("cannot write " + path);
  out << text;
  if (!out) throw ConfigurationError("write failed: " + path);
}

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigurationError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace hintguess
