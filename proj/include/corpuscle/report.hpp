/*
 * Copyright 2026+ The corpuscle authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef CORPUSCLE_REPORT_HPP
#define CORPUSCLE_REPORT_HPP

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "corpuscle/errors.hpp"
#include "corpuscle/validate.hpp"

namespace corpuscle {

enum class ReportFormat { CSV, SVG };

namespace report_detail {

inline std::string fmt(double v, int decimals = 6) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
  return buf;
}

inline std::string fmt_opt(const std::optional<double>& v) {
  return v ? fmt(*v) : std::string();
}

inline std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out += "\"";
  return out;
}

inline std::string join_notes(const std::vector<std::string>& notes) {
  std::string out;
  for (std::size_t i = 0; i < notes.size(); ++i) {
    if (i) out += "; ";
    out += notes[i];
  }
  return out;
}

inline std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out.is_open()) throw Error(Errc::UnwritablePath, path.string());
  return out;
}

inline std::string svg_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

}  // namespace report_detail

inline void write_validation_csv(std::span<const ValidationReport> reports,
                                 const std::filesystem::path& path) {
  using namespace report_detail;
  std::ofstream out = open_out(path);
  out << "sample_size,weighting,alignment,pearson_r,spearman_rho,overlap_at_k,jaccard_top_k,notes\n";
  for (const ValidationReport& r : reports) {
    out << r.sample_size << ',' << weighting_name(r.weighting_mode) << ','
        << alignment_name(r.alignment_mode) << ',' << fmt_opt(r.pearson_r) << ','
        << fmt_opt(r.spearman_rho) << ',' << fmt(r.overlap_at_k) << ',' << fmt(r.jaccard_top_k)
        << ',' << csv_quote(join_notes(r.notes)) << '\n';
  }
  if (!out.good()) throw Error(Errc::UnwritablePath, path.string());
}

inline void write_screening_csv(std::span<const ScreeningReport> reports,
                                const std::filesystem::path& path) {
  using namespace report_detail;
  std::ofstream out = open_out(path);
  out << "pseudonym,user_vector_size,overlap_at_k,cosine_similarity,pearson_r,corpus_mode,notes\n";
  for (const ScreeningReport& r : reports) {
    out << r.pseudonym << ',' << r.user_vector_size << ',' << fmt(r.overlap_at_k) << ','
        << fmt(r.cosine_similarity) << ',' << fmt_opt(r.pearson_r) << ','
        << (r.corpus_mode_used == ScreeningReport::CorpusMode::LeaveUserOut ? "leave-user-out"
                                                                            : "full")
        << ',' << csv_quote(join_notes(r.notes)) << '\n';
  }
  if (!out.good()) throw Error(Errc::UnwritablePath, path.string());
}

inline void write_trajectory_csv(const std::map<std::string, std::vector<TrajectoryPoint>>& traj,
                                 const std::filesystem::path& path) {
  using namespace report_detail;
  std::ofstream out = open_out(path);
  out << "term,sample_size,rank,rel_freq\n";
  for (const auto& [term, points] : traj) {
    for (const TrajectoryPoint& p : points) {
      out << term << ',' << p.sample_size << ',';
      if (p.rank) out << *p.rank;
      out << ',' << fmt(p.rel_freq) << '\n';
    }
  }
  if (!out.good()) throw Error(Errc::UnwritablePath, path.string());
}

namespace report_detail {

// Grouped bars: standard vs social weight for the union of both top-k lists.
inline void write_keyword_bars_svg(const ValidationReport& r, const std::filesystem::path& path) {
  std::vector<std::pair<std::string, std::pair<double, double>>> rows;
  std::map<std::string, double> social_weight;
  for (const auto& [term, w] : r.top_social.items) social_weight[term] = w;
  std::map<std::string, bool> seen;
  for (const auto& [term, w] : r.top_standard.items) {
    auto it = social_weight.find(term);
    rows.push_back({term, {w, it == social_weight.end() ? 0.0 : it->second}});
    seen[term] = true;
  }
  for (const auto& [term, w] : r.top_social.items) {
    if (!seen.count(term)) rows.push_back({term, {0.0, w}});
  }
  double max_w = 0.0;
  for (const auto& row : rows) max_w = std::max({max_w, row.second.first, row.second.second});
  if (max_w <= 0.0) max_w = 1.0;

  const int chart_left = 60, chart_top = 70, chart_h = 280;
  const int group_w = 44, bar_w = 16;
  const int width = chart_left + static_cast<int>(rows.size()) * group_w + 40;
  const int height = chart_top + chart_h + 110;

  std::ofstream out = open_out(path);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << chart_left << "\" y=\"24\" font-family=\"monospace\" font-size=\"15\">"
      << "standard corpus vs social corpus keywords (" << weighting_name(r.weighting_mode)
      << ")</text>\n";
  out << "<text x=\"" << chart_left << "\" y=\"44\" font-family=\"monospace\" font-size=\"12\">"
      << "n=" << r.sample_size << " pearson=" << svg_escape(fmt_opt(r.pearson_r))
      << " overlap@" << r.k << "=" << fmt(r.overlap_at_k, 3) << "</text>\n";
  out << "<rect x=\"" << width - 190 << "\" y=\"14\" width=\"12\" height=\"12\" fill=\"#4c78a8\"/>"
      << "<text x=\"" << width - 172 << "\" y=\"25\" font-family=\"monospace\" font-size=\"11\">standard</text>\n";
  out << "<rect x=\"" << width - 190 << "\" y=\"32\" width=\"12\" height=\"12\" fill=\"#f58518\"/>"
      << "<text x=\"" << width - 172 << "\" y=\"43\" font-family=\"monospace\" font-size=\"11\">social</text>\n";
  out << "<line x1=\"" << chart_left << "\" y1=\"" << chart_top + chart_h << "\" x2=\""
      << width - 20 << "\" y2=\"" << chart_top + chart_h << "\" stroke=\"black\"/>\n";

  int x = chart_left + 8;
  for (const auto& [term, weights] : rows) {
    const int h_std = static_cast<int>(weights.first / max_w * chart_h);
    const int h_soc = static_cast<int>(weights.second / max_w * chart_h);
    out << "<rect x=\"" << x << "\" y=\"" << chart_top + chart_h - h_std << "\" width=\"" << bar_w
        << "\" height=\"" << h_std << "\" fill=\"#4c78a8\"/>\n";
    out << "<rect x=\"" << x + bar_w + 2 << "\" y=\"" << chart_top + chart_h - h_soc
        << "\" width=\"" << bar_w << "\" height=\"" << h_soc << "\" fill=\"#f58518\"/>\n";
    out << "<text x=\"" << x + bar_w << "\" y=\"" << chart_top + chart_h + 12
        << "\" font-family=\"monospace\" font-size=\"10\" transform=\"rotate(45 " << x + bar_w
        << ' ' << chart_top + chart_h + 12 << ")\">" << svg_escape(term) << "</text>\n";
    x += group_w;
  }
  out << "</svg>\n";
  if (!out.good()) throw Error(Errc::UnwritablePath, path.string());
}

// Correlation and overlap against sample size.
inline void write_sweep_lines_svg(std::span<const ValidationReport> reports,
                                  const std::filesystem::path& path) {
  const int chart_left = 70, chart_top = 60, chart_h = 260, step = 140;
  const int width = chart_left + std::max<int>(1, static_cast<int>(reports.size()) - 1) * step + 80;
  const int height = chart_top + chart_h + 70;

  std::ofstream out = open_out(path);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << chart_left << "\" y=\"24\" font-family=\"monospace\" font-size=\"15\">"
      << "correlation vs sample size</text>\n";
  out << "<rect x=\"" << width - 210 << "\" y=\"14\" width=\"12\" height=\"12\" fill=\"#4c78a8\"/>"
      << "<text x=\"" << width - 192 << "\" y=\"25\" font-family=\"monospace\" font-size=\"11\">pearson_r</text>\n";
  out << "<rect x=\"" << width - 210 << "\" y=\"32\" width=\"12\" height=\"12\" fill=\"#f58518\"/>"
      << "<text x=\"" << width - 192 << "\" y=\"43\" font-family=\"monospace\" font-size=\"11\">overlap@k</text>\n";

  for (int grid = 0; grid <= 4; ++grid) {
    const int y = chart_top + chart_h - grid * chart_h / 4;
    out << "<line x1=\"" << chart_left << "\" y1=\"" << y << "\" x2=\"" << width - 30 << "\" y2=\""
        << y << "\" stroke=\"#dddddd\"/>\n";
    out << "<text x=\"" << chart_left - 40 << "\" y=\"" << y + 4
        << "\" font-family=\"monospace\" font-size=\"10\">" << report_detail::fmt(grid * 0.25, 2)
        << "</text>\n";
  }

  const auto x_of = [&](std::size_t i) { return chart_left + static_cast<int>(i) * step; };
  const auto y_of = [&](double v) {
    v = std::clamp(v, 0.0, 1.0);
    return chart_top + chart_h - static_cast<int>(v * chart_h);
  };

  std::string pearson_points, overlap_points;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const ValidationReport& r = reports[i];
    if (r.pearson_r) {
      pearson_points += std::to_string(x_of(i)) + "," + std::to_string(y_of(*r.pearson_r)) + " ";
      out << "<circle cx=\"" << x_of(i) << "\" cy=\"" << y_of(*r.pearson_r)
          << "\" r=\"3\" fill=\"#4c78a8\"/>\n";
    }
    overlap_points += std::to_string(x_of(i)) + "," + std::to_string(y_of(r.overlap_at_k)) + " ";
    out << "<circle cx=\"" << x_of(i) << "\" cy=\"" << y_of(r.overlap_at_k)
        << "\" r=\"3\" fill=\"#f58518\"/>\n";
    out << "<text x=\"" << x_of(i) - 10 << "\" y=\"" << chart_top + chart_h + 18
        << "\" font-family=\"monospace\" font-size=\"11\">" << r.sample_size << "</text>\n";
  }
  if (!pearson_points.empty())
    out << "<polyline points=\"" << pearson_points
        << "\" fill=\"none\" stroke=\"#4c78a8\" stroke-width=\"2\"/>\n";
  if (!overlap_points.empty())
    out << "<polyline points=\"" << overlap_points
        << "\" fill=\"none\" stroke=\"#f58518\" stroke-width=\"2\"/>\n";
  out << "<text x=\"" << chart_left << "\" y=\"" << chart_top + chart_h + 40
      << "\" font-family=\"monospace\" font-size=\"11\">sample size</text>\n";
  out << "</svg>\n";
  if (!out.good()) throw Error(Errc::UnwritablePath, path.string());
}

}  // namespace report_detail

/// CSV writes one row per report; SVG renders keyword bars for a single
/// report or the correlation trend for a sweep. Output bytes depend only on
/// the reports.
inline void emit_report(std::span<const ValidationReport> reports,
                        const std::filesystem::path& path, ReportFormat format) {
  if (reports.empty()) throw Error(Errc::EmptyList, "emit_report needs at least one report");
  if (format == ReportFormat::CSV) {
    write_validation_csv(reports, path);
  } else if (reports.size() == 1) {
    report_detail::write_keyword_bars_svg(reports.front(), path);
  } else {
    report_detail::write_sweep_lines_svg(reports, path);
  }
}

}  // namespace corpuscle

#endif  // CORPUSCLE_REPORT_HPP
