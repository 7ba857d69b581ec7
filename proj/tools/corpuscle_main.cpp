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

// corpuscle: build keyword corpora from essays and tweet replay files, then
// validate the social corpus against the standard one.
//
// Exit codes: 0 ok, 1 input error, 2 output error, 3 configuration or key
// error.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "corpuscle/corpuscle.hpp"

namespace fs = std::filesystem;
using namespace corpuscle;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitOutput = 2;
constexpr int kExitConfig = 3;

std::string default_data_path(const char* file) {
  return std::string(CORPUSCLE_DATA_DIR) + "/" + file;
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Errc::UnwritablePath:
      return kExitOutput;
    case Errc::WeakKey:
      return kExitConfig;
    default:
      return kExitInput;
  }
}

std::optional<std::string> resolve_key(const std::string& key_file) {
  if (!key_file.empty()) {
    std::ifstream in(key_file, std::ios::binary);
    if (!in.is_open()) return std::nullopt;
    std::string key((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    while (!key.empty() && (key.back() == '\n' || key.back() == '\r')) key.pop_back();
    return key;
  }
  const char* env = std::getenv("CORPUSCLE_KEY");
  if (env && *env) return std::string(env);
  return std::nullopt;
}

void print_ingest_summary(const IngestReport& report) {
  if (report.malformed_lines)
    std::cout << "skipped " << report.malformed_lines << " malformed line(s)\n";
  if (report.duplicate_ids)
    std::cout << "skipped " << report.duplicate_ids << " duplicate id(s)\n";
  if (report.filtered_out)
    std::cout << "filtered out " << report.filtered_out << " tweet(s) without a seed hashtag\n";
  for (const std::string& err : report.file_errors) std::cout << "warning: " << err << "\n";
}

void print_keyword_table(const RankedKeywords& top) {
  std::cout << "top-" << top.k << " keywords (raw count after stop-listing):\n";
  for (std::size_t i = 0; i < top.items.size(); ++i) {
    std::printf("%3zu  %-18s %10.0f\n", i + 1, top.items[i].first.c_str(), top.items[i].second);
  }
}

std::string fmt_opt(const std::optional<double>& v) {
  if (!v) return "n/a";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", *v);
  return buf;
}

std::vector<UserRecord> user_records_for(std::span<const Document> docs) {
  std::map<std::string, std::vector<std::string>> by_user;
  for (const Document& d : docs) by_user[d.author].push_back(d.doc_id);
  std::vector<UserRecord> users;
  for (auto& [pseudonym, ids] : by_user) {
    std::sort(ids.begin(), ids.end());
    users.push_back(UserRecord{pseudonym, std::move(ids)});
  }
  return users;
}

struct Cli {
  RunConfig cfg;
  std::string key_file;
  StopList stops;
  Dictionary dict;

  void load_lexicon() {
    stops = load_stoplist(cfg.stoplist_path);
    dict = load_dictionary(cfg.dictionary_path);
  }
};

int cmd_build_standard(Cli& cli, const std::string& essays_dir, const std::string& out_snapshot) {
  try {
    cli.load_lexicon();
    IngestReport report;
    const std::vector<Document> docs =
        ingest_essays(essays_dir, cli.cfg.normalize, cli.stops, &report);
    print_ingest_summary(report);
    if (docs.empty()) {
      std::cerr << "error: no readable essays in " << essays_dir << "\n";
      return kExitInput;
    }
    const CorpusIndex index = build_index(docs);
    std::cout << "standard corpus: " << index.doc_count << " documents, "
              << index.term_stats.size() << " distinct terms\n";
    print_keyword_table(top_k(index, cli.cfg.k, WeightingMode::RawCount));
    save_snapshot(index, docs, {}, out_snapshot);
    std::cout << "snapshot written to " << out_snapshot << "\n";
    return kExitOk;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
}

int cmd_build_social(Cli& cli, const std::string& tweets_jsonl, const std::string& out_snapshot) {
  const std::optional<std::string> key = resolve_key(cli.key_file);
  if (!key) {
    std::cerr << "error: no pseudonymization key; set CORPUSCLE_KEY or pass --key-file\n";
    return kExitConfig;
  }
  try {
    cli.load_lexicon();
    IngestReport report;
    auto [docs, users] = ingest_tweets(tweets_jsonl, cli.cfg.normalize, cli.stops, *key, &report);
    const std::vector<Document> kept =
        filter_by_seed_hashtags(docs, cli.cfg.harvest.seed_hashtags, &report);
    print_ingest_summary(report);
    if (kept.empty()) {
      std::cerr << "error: no tweets matched the seed hashtags\n";
      return kExitInput;
    }
    const CorpusIndex index = build_index(kept);
    const std::vector<UserRecord> kept_users = user_records_for(kept);
    std::cout << "social corpus: " << index.doc_count << " tweets from " << kept_users.size()
              << " user(s), " << index.term_stats.size() << " distinct terms\n";
    save_snapshot(index, kept, kept_users, out_snapshot);
    std::cout << "snapshot written to " << out_snapshot << "\n";
    return kExitOk;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
}

int cmd_validate(Cli& cli, const std::string& standard_snapshot,
                 const std::string& social_snapshot, const std::string& out_dir) {
  try {
    cli.load_lexicon();
    const Snapshot standard = load_snapshot(standard_snapshot);
    const Snapshot social = load_snapshot(social_snapshot);
    ValidationReport report =
        compare_corpora(standard.index, social.index, cli.dict, cli.cfg.compare_options());
    for (const std::string& note : cli.cfg.provenance_notes()) report.notes.push_back(note);

    fs::create_directories(out_dir);
    const std::vector<ValidationReport> reports = {report};
    emit_report(reports, fs::path(out_dir) / "validation.csv", ReportFormat::CSV);
    emit_report(reports, fs::path(out_dir) / "validation.svg", ReportFormat::SVG);
    std::cout << "validation: n=" << report.sample_size << " pearson=" << fmt_opt(report.pearson_r)
              << " spearman=" << fmt_opt(report.spearman_rho) << " overlap@" << report.k << "="
              << report.overlap_at_k << " jaccard=" << report.jaccard_top_k << "\n";
    for (const std::string& note : report.notes) std::cout << "note: " << note << "\n";
    std::cout << "reports written to " << out_dir << "\n";
    return kExitOk;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
}

int cmd_sweep(Cli& cli, const std::string& standard_snapshot, const std::string& tweets_jsonl,
              const std::string& out_dir, bool filter_hashtags) {
  const std::optional<std::string> key = resolve_key(cli.key_file);
  if (!key) {
    std::cerr << "error: no pseudonymization key; set CORPUSCLE_KEY or pass --key-file\n";
    return kExitConfig;
  }
  try {
    cli.load_lexicon();
    const Snapshot standard = load_snapshot(standard_snapshot);
    IngestReport report;
    auto [docs, users] = ingest_tweets(tweets_jsonl, cli.cfg.normalize, cli.stops, *key, &report);
    std::vector<Document> pool = docs;
    if (filter_hashtags)
      pool = filter_by_seed_hashtags(docs, cli.cfg.harvest.seed_hashtags, &report);
    print_ingest_summary(report);
    if (pool.empty()) {
      std::cerr << "error: no tweets to sweep\n";
      return kExitInput;
    }
    SweepResult result =
        sweep(standard.index, pool, cli.cfg.harvest, cli.dict, cli.cfg.compare_options());
    for (ValidationReport& r : result.reports)
      for (const std::string& note : cli.cfg.provenance_notes()) r.notes.push_back(note);

    fs::create_directories(out_dir);
    emit_report(result.reports, fs::path(out_dir) / "sweep.csv", ReportFormat::CSV);
    emit_report(result.reports, fs::path(out_dir) / "sweep.svg", ReportFormat::SVG);
    write_trajectory_csv(result.trajectories, fs::path(out_dir) / "sweep_trajectory.csv");
    for (const ValidationReport& r : result.reports) {
      std::cout << "n=" << r.sample_size << " pearson=" << fmt_opt(r.pearson_r)
                << " spearman=" << fmt_opt(r.spearman_rho) << " overlap@" << r.k << "="
                << r.overlap_at_k << "\n";
    }
    std::cout << "reports written to " << out_dir << "\n";
    return kExitOk;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
}

int cmd_screen(Cli& cli, const std::string& social_snapshot, const std::string& who,
               const std::string& out_dir, std::size_t sample) {
  try {
    cli.load_lexicon();
    const Snapshot social = load_snapshot(social_snapshot);

    std::vector<UserRecord> selected;
    if (who == "all") {
      selected = social.users;
      std::sort(selected.begin(), selected.end(),
                [](const UserRecord& a, const UserRecord& b) { return a.pseudonym < b.pseudonym; });
      if (sample > 0 && sample < selected.size()) {
        std::uint64_t state = derive_seed(cli.cfg.harvest.rng_seed, 0x5c7ee2);
        for (std::size_t i = 0; i < sample; ++i) {
          const std::size_t j =
              i + static_cast<std::size_t>(store_detail::bounded(state, selected.size() - i));
          std::swap(selected[i], selected[j]);
        }
        selected.resize(sample);
        std::sort(selected.begin(), selected.end(), [](const UserRecord& a, const UserRecord& b) {
          return a.pseudonym < b.pseudonym;
        });
      }
    } else {
      bool found = false;
      for (const UserRecord& u : social.users) {
        if (u.pseudonym == who) {
          selected.push_back(u);
          found = true;
          break;
        }
      }
      if (!found) {
        std::cerr << "error: unknown pseudonym " << who << "\n";
        return kExitInput;
      }
    }

    std::vector<ScreeningReport> reports;
    for (const UserRecord& user : selected) {
      ScreeningReport r =
          screen_user(user, social.documents, social.index, cli.dict, cli.cfg.k);
      r.notes.push_back("dictionary=" + cli.dict.name);
      for (const std::string& note : cli.cfg.provenance_notes()) r.notes.push_back(note);
      reports.push_back(std::move(r));
    }
    fs::create_directories(out_dir);
    write_screening_csv(reports, fs::path(out_dir) / "screening.csv");
    for (const ScreeningReport& r : reports) {
      std::cout << r.pseudonym << " terms=" << r.user_vector_size << " overlap@" << cli.cfg.k
                << "=" << r.overlap_at_k << " cosine=" << r.cosine_similarity
                << " pearson=" << fmt_opt(r.pearson_r) << " corpus="
                << (r.corpus_mode_used == ScreeningReport::CorpusMode::LeaveUserOut
                        ? "leave-user-out"
                        : "full")
                << "\n";
    }
    std::cout << "report written to " << out_dir << "\n";
    return kExitOk;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
}

}  // namespace

int main(int argc, char** argv) {
  Cli cli;
  cli.cfg.stoplist_path = default_data_path("stopwords_en.txt");
  cli.cfg.dictionary_path = default_data_path("dictionary_en.txt");

  // The config file is applied before flag parsing so that flags override it.
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    std::string path;
    if (arg == "--config" && i + 1 < argc) path = argv[i + 1];
    else if (arg.rfind("--config=", 0) == 0) path = arg.substr(9);
    if (!path.empty()) {
      try {
        load_config_file(cli.cfg, path);
      } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
      }
    }
  }

  CLI::App app{"domain keyword corpus builder and validator"};
  app.fallthrough(true);
  std::string config_path_ignored;
  std::string weighting = weighting_name(cli.cfg.weighting);
  std::string alignment = alignment_name(cli.cfg.alignment);
  std::vector<std::string> hashtags;
  std::vector<std::int64_t> sizes;

  app.add_option("--config", config_path_ignored, "flat key=value config file");
  app.add_option("--stoplist", cli.cfg.stoplist_path, "stop word list, one word per line");
  app.add_option("--dictionary", cli.cfg.dictionary_path, "dictionary word list");
  app.add_option("--k", cli.cfg.k, "keyword list length");
  app.add_option("--weighting", weighting, "raw|relfreq|tfidf");
  app.add_option("--alignment", alignment, "dict-intersection|union");
  app.add_option("--seed", cli.cfg.harvest.rng_seed, "rng seed for sampling");
  app.add_flag("--stemming,!--no-stemming", cli.cfg.normalize.stemming_enabled,
               "stem tokens before counting");
  app.add_flag("--keep-seed-terms,!--no-keep-seed-terms", cli.cfg.keep_seed_terms,
               "keep seed hashtag terms in social top-k");
  app.add_option("--min-token-length", cli.cfg.normalize.min_token_length,
                 "minimum token length");
  app.add_flag("!--no-hashtag-tokens", cli.cfg.normalize.keep_hashtag_tokens,
               "drop hashtag tokens entirely");
  app.add_option("--hashtags", hashtags, "seed hashtags (replaces the default set)");
  app.add_option("--sizes", sizes, "sweep sample sizes (replaces 100 200 500 1000)");
  app.add_option("--key-file", cli.key_file, "file holding the pseudonymization key");

  std::string arg_a, arg_b, arg_c;
  bool filter_hashtags = false;
  std::size_t sample = 0;

  CLI::App* build_standard =
      app.add_subcommand("build-standard", "essays dir -> standard corpus snapshot");
  build_standard->add_option("essays_dir", arg_a)->required();
  build_standard->add_option("out_snapshot", arg_b)->required();

  CLI::App* build_social =
      app.add_subcommand("build-social", "tweet JSONL -> hashtag-filtered social snapshot");
  build_social->add_option("tweets_jsonl", arg_a)->required();
  build_social->add_option("out_snapshot", arg_b)->required();

  CLI::App* validate =
      app.add_subcommand("validate", "compare a social snapshot against the standard one");
  validate->add_option("standard_snapshot", arg_a)->required();
  validate->add_option("social_snapshot", arg_b)->required();
  validate->add_option("out_dir", arg_c)->required();

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "sample-size sweep over a tweet replay");
  sweep_cmd->add_option("standard_snapshot", arg_a)->required();
  sweep_cmd->add_option("tweets_jsonl", arg_b)->required();
  sweep_cmd->add_option("out_dir", arg_c)->required();
  sweep_cmd->add_flag("--filter-hashtags", filter_hashtags,
                      "apply the seed hashtag filter to the replay first");

  CLI::App* screen = app.add_subcommand("screen", "per-user keyword screening");
  screen->add_option("social_snapshot", arg_a)->required();
  screen->add_option("pseudonym", arg_b, "a pseudonym, or 'all'")->required();
  screen->add_option("out_dir", arg_c)->required();
  screen->add_option("--sample", sample, "screen this many randomly chosen users");

  app.require_subcommand(1);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitConfig;
  }

  try {
    cli.cfg.weighting = parse_weighting(weighting);
    cli.cfg.alignment = parse_alignment(alignment);
    if (!hashtags.empty()) {
      cli.cfg.harvest.seed_hashtags.clear();
      for (const std::string& tag : hashtags) cli.cfg.harvest.seed_hashtags.insert(tag);
    }
    if (!sizes.empty()) cli.cfg.harvest.sample_sizes = sizes;
    cli.cfg.harvest.validate();
    if (cli.cfg.normalize.min_token_length < 1) {
      std::cerr << "error: min_token_length must be >= 1\n";
      return kExitConfig;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }

  if (build_standard->parsed()) return cmd_build_standard(cli, arg_a, arg_b);
  if (build_social->parsed()) return cmd_build_social(cli, arg_a, arg_b);
  if (validate->parsed()) return cmd_validate(cli, arg_a, arg_b, arg_c);
  if (sweep_cmd->parsed()) return cmd_sweep(cli, arg_a, arg_b, arg_c, filter_hashtags);
  if (screen->parsed()) return cmd_screen(cli, arg_a, arg_b, arg_c, sample);
  return kExitConfig;
}
