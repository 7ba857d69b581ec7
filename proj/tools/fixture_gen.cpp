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

// Developer tool that (re)generates the bundled data files:
//
//   corpuscle-fixturegen dictionary   data/dictionary_en.txt from lemmas
//   corpuscle-fixturegen porter       data/porter/porter_pairs.txt
//   corpuscle-fixturegen counts       term-count table of the essay fixture
//   corpuscle-fixturegen paired       data/fixtures/tweets_paired.jsonl
//   corpuscle-fixturegen drift        data/fixtures/tweets_drift.jsonl
//   corpuscle-fixturegen social       data/fixtures/tweets_social.jsonl
//   corpuscle-fixturegen check        cross-checks every generated fixture
//
// Everything is deterministic; committed outputs are reproducible.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "corpuscle/corpuscle.hpp"
#include "support/porter_reference.hpp"

namespace fs = std::filesystem;
using namespace corpuscle;

namespace {

const std::string kDataDir = CORPUSCLE_DATA_DIR;

std::vector<std::string> load_lemmas() {
  std::set<std::string> set;
  lexicon_detail::load_wordfile(kDataDir + "/lemmas_en.txt", set);
  return {set.begin(), set.end()};
}

bool ends_with(const std::string& w, const std::string& s) {
  return w.size() >= s.size() && w.compare(w.size() - s.size(), s.size(), s) == 0;
}

bool vowel_at(const std::string& w, std::size_t i) {
  const char c = w[i];
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

// Regular orthographic inflections. Overgeneration is acceptable for the
// dictionary (junk entries are unreachable by real tokens); lemmas remain
// the source of truth for real words.
std::vector<std::string> inflections(const std::string& w) {
  std::vector<std::string> out;
  const std::size_t n = w.size();
  if (n < 2) return out;
  // plural / 3rd person singular
  if (ends_with(w, "s") || ends_with(w, "x") || ends_with(w, "z") || ends_with(w, "ch") ||
      ends_with(w, "sh")) {
    out.push_back(w + "es");
  } else if (w.back() == 'y' && n >= 2 && !vowel_at(w, n - 2)) {
    out.push_back(w.substr(0, n - 1) + "ies");
  } else {
    out.push_back(w + "s");
  }
  // past
  if (w.back() == 'e') {
    out.push_back(w + "d");
  } else if (w.back() == 'y' && !vowel_at(w, n - 2)) {
    out.push_back(w.substr(0, n - 1) + "ied");
  } else {
    out.push_back(w + "ed");
  }
  // gerund
  if (ends_with(w, "ie")) {
    out.push_back(w.substr(0, n - 2) + "ying");
  } else if (w.back() == 'e' && !ends_with(w, "ee") && !ends_with(w, "oe") &&
             !ends_with(w, "ye")) {
    out.push_back(w.substr(0, n - 1) + "ing");
  } else {
    out.push_back(w + "ing");
  }
  // single-vowel-group words ending CVC double the final consonant
  if (n >= 3 && !vowel_at(w, n - 1) && vowel_at(w, n - 2) && !vowel_at(w, n - 3) &&
      w.back() != 'w' && w.back() != 'x' && w.back() != 'y') {
    std::size_t groups = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (vowel_at(w, i) && (i == 0 || !vowel_at(w, i - 1))) ++groups;
    }
    if (groups == 1) {
      out.push_back(w + w.back() + "ed");
      out.push_back(w + w.back() + "ing");
    }
  }
  return out;
}

int cmd_dictionary() {
  const std::vector<std::string> lemmas = load_lemmas();
  std::set<std::string> words(lemmas.begin(), lemmas.end());
  for (const std::string& lemma : lemmas)
    for (const std::string& form : inflections(lemma)) words.insert(form);

  const std::string path = kDataDir + "/dictionary_en.txt";
  std::ofstream out(path, std::ios::trunc);
  out << "# Bundled English dictionary: " << lemmas.size()
      << " lemmas machine-expanded with regular inflections.\n";
  out << "# Regenerate with: corpuscle-fixturegen dictionary\n";
  for (const std::string& w : words) out << w << '\n';
  std::cout << "wrote " << words.size() << " entries to " << path << "\n";
  return 0;
}

// Real inflected and derived forms included alongside the lemmas in the
// stemmer fixture (the lemma list alone is light on -ed/-ing/-tion forms).
const std::vector<std::string> kCuratedForms = {
    "caresses", "ponies", "ties", "cats", "feed", "agreed", "plastered", "bled", "motoring",
    "sing", "conflated", "troubled", "sized", "hopping", "tanned", "falling", "hissing",
    "fizzed", "failing", "filing", "happy", "sky", "relational", "conditional", "rational",
    "digitizer", "radically", "differently", "analogously", "vietnamization", "predication",
    "operator", "feudalism", "decisiveness", "hopefulness", "callousness", "formality",
    "sensitivity", "sensibility", "triplicate", "formative", "formalize", "electricity",
    "electrical", "hopeful", "goodness", "allowance", "inference", "airliner", "gyroscopic",
    "adjustable", "defensible", "irritant", "replacement", "adjustment", "dependent",
    "adoption", "communism", "activate", "angularity", "homologous", "effective", "bowdlerize",
    "probate", "rate", "cease", "controlling", "rolling", "sleeping", "sleeps", "slept",
    "activities", "activity", "treatments", "treated", "treating", "pressures", "pressured",
    "pleasures", "therapies", "moods", "identities", "abused", "abusing", "abuses",
    "depressions", "depressed", "depressing", "depressive", "childhoods", "healthy",
    "meetings", "feelings", "generalization", "oscillators", "possibly", "apology",
    "psychology", "archaeology", "apologies", "studies", "studied", "studying", "carries",
    "carried", "carrying", "cries", "cried", "crying", "tries", "tried", "trying", "worries",
    "worried", "worrying", "families", "countries", "cities", "stories", "bodies", "babies",
    "parties", "copies", "theories", "memories", "histories", "categories", "strategies",
    "injuries", "victories", "libraries", "galleries", "batteries", "ceremonies", "colonies",
    "economies", "enemies", "industries", "qualities", "realities", "societies", "varieties",
    "abilities", "communities", "universities", "opportunities", "responsibilities",
    "authorities", "celebrities", "centuries", "deliveries", "discoveries", "emergencies",
    "boxes", "churches", "watches", "wishes", "dishes", "classes", "glasses", "passes",
    "processes", "addresses", "businesses", "illnesses", "witnesses", "successes", "crosses",
    "losses", "masses", "bosses", "buses", "gases", "viruses", "bonuses", "campuses",
    "running", "stopped", "stopping", "planned", "planning", "dropped", "dropping", "shopped",
    "shopping", "hugged", "hugging", "grabbed", "grabbing", "begged", "begging", "hopped",
    "fitted", "fitting", "admitted", "admitting", "committed", "committing", "preferred",
    "preferring", "occurred", "occurring", "controlled", "referred", "referring", "regretted",
    "submitted", "transmitted", "transferred", "equipped", "wrapped", "trapped", "stepped",
    "swimming", "winning", "beginning", "sitting", "getting", "putting", "letting", "setting",
    "cutting", "hitting", "digging", "jogging", "nodding", "robbed", "rubbing", "sobbing",
    "making", "taking", "giving", "having", "living", "loving", "moving", "saving", "writing",
    "riding", "rising", "using", "causing", "closing", "coming", "becoming", "choosing",
    "creating", "dancing", "deciding", "driving", "hoping", "judging", "managing", "noting",
    "placing", "preparing", "providing", "raising", "receiving", "reducing", "removing",
    "serving", "sharing", "smiling", "smoking", "stating", "voting", "arguing", "continuing",
    "valuing", "dying", "lying", "tying", "agreeing", "seeing", "freeing", "fleeing",
    "education", "information", "organization", "situation", "population", "administration",
    "association", "celebration", "combination", "communication", "concentration",
    "consideration", "conversation", "cooperation", "declaration", "demonstration",
    "description", "destruction", "determination", "discussion", "distribution", "evaluation",
    "examination", "expectation", "explanation", "exploration", "expression", "foundation",
    "generation", "imagination", "introduction", "investigation", "invitation", "observation",
    "operation", "participation", "preparation", "presentation", "production", "protection",
    "publication", "reaction", "recommendation", "registration", "regulation", "relaxation",
    "representation", "reputation", "reservation", "resolution", "restriction", "revolution",
    "separation", "translation", "transportation", "variation", "happiness", "darkness",
    "awareness", "business", "illness", "kindness", "sickness", "weakness", "willingness",
    "effectiveness", "loneliness", "seriousness", "thickness", "usefulness", "emptiness",
    "bitterness", "blindness", "boldness", "brightness", "calmness", "coldness",
    "completeness", "correctness", "eagerness", "fairness", "firmness", "fitness", "fondness",
    "freshness", "fullness", "gentleness", "gladness", "greatness", "hardness", "harshness",
    "holiness", "openness", "politeness", "readiness", "richness", "roughness", "rudeness",
    "sharpness", "shortness", "smoothness", "softness", "stiffness", "stillness",
    "strangeness", "sweetness", "tenderness", "tightness", "togetherness", "toughness",
    "vagueness", "wilderness", "nationality", "personality", "possibility", "probability",
    "productivity", "reliability", "security", "similarity", "simplicity", "stability",
    "validity", "creativity", "curiosity", "generosity", "intensity", "maturity", "publicity",
    "purity", "scarcity", "anxiety", "ability", "beautiful", "careful", "cheerful",
    "colorful", "doubtful", "faithful", "grateful", "harmful", "helpful", "meaningful",
    "painful", "peaceful", "powerful", "respectful", "skillful", "stressful", "successful",
    "thankful", "thoughtful", "useful", "wonderful", "dangerous", "delicious", "enormous",
    "fabulous", "famous", "generous", "jealous", "nervous", "obvious", "previous", "serious",
    "various", "anxious", "cautious", "conscious", "curious", "furious", "precious",
    "religious", "mysterious", "victorious", "memorize", "minimize", "maximize", "realize",
    "recognize", "emphasize", "organize", "apologize", "criticize", "summarize", "visualize",
    "modernize", "authorize", "stabilize", "sympathize", "analyzed", "analyzing", "relation",
    "relations", "relating", "related", "creation", "creations", "collections", "connections",
    "directions", "elections", "functions", "infections", "injections", "inspections",
    "instructions", "intentions", "positions", "questions", "sections", "sessions",
    "solutions", "suggestions", "traditions",
};

int cmd_porter() {
  std::set<std::string> words;
  for (const std::string& lemma : load_lemmas()) words.insert(lemma);
  for (const std::string& form : kCuratedForms) {
    bool ascii = !form.empty();
    for (char c : form)
      if (c < 'a' || c > 'z') ascii = false;
    if (ascii) words.insert(form);
  }

  std::size_t disagreements = 0;
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const std::string& word : words) {
    const std::string mine = porter_stem(word);
    const std::string ref = corpuscle_tests::porter_reference_stem(word);
    if (mine != ref) {
      ++disagreements;
      std::cerr << "DISAGREE " << word << ": table=" << mine << " reference=" << ref << "\n";
      continue;
    }
    pairs.emplace_back(word, mine);
  }
  if (disagreements != 0) {
    std::cerr << disagreements << " disagreements; fixture not written\n";
    return 1;
  }
  const std::string path = kDataDir + "/porter/porter_pairs.txt";
  std::ofstream out(path, std::ios::trunc);
  out << "# Porter stemmer test vocabulary: word and its stem, one pair per line.\n";
  out << "# Generated by two independent implementations in full agreement;\n";
  out << "# regenerate with: corpuscle-fixturegen porter\n";
  for (const auto& [word, stem] : pairs) out << word << ' ' << stem << '\n';
  std::cout << "wrote " << pairs.size() << " pairs to " << path << "\n";
  return 0;
}

struct StandardCorpus {
  StopList stops;
  Dictionary dict;
  std::vector<Document> docs;
  CorpusIndex index;
};

StandardCorpus load_standard() {
  StandardCorpus sc;
  sc.stops = load_stoplist(kDataDir + "/stopwords_en.txt");
  sc.dict = load_dictionary(kDataDir + "/dictionary_en.txt");
  NormalizeConfig cfg;
  sc.docs = ingest_essays(kDataDir + "/fixtures/essays", cfg, sc.stops);
  sc.index = build_index(sc.docs);
  return sc;
}

int cmd_counts() {
  StandardCorpus sc = load_standard();
  std::vector<std::pair<std::string, std::int64_t>> counts;
  for (const auto& [term, stats] : sc.index.term_stats)
    counts.emplace_back(term, stats.collection_count);
  std::sort(counts.begin(), counts.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  std::cout << "N=" << sc.index.doc_count << " distinct=" << counts.size()
            << " tokens=" << sc.index.total_tokens() << "\n";
  for (std::size_t i = 0; i < counts.size() && i < 45; ++i)
    std::printf("%3zu %-16s %4lld\n", i + 1, counts[i].first.c_str(),
                static_cast<long long>(counts[i].second));
  std::size_t oov = 0;
  for (const auto& [term, stats] : sc.index.term_stats)
    if (!sc.dict.contains(term)) {
      if (++oov <= 200) std::cout << "not in dictionary: " << term << "\n";
    }
  std::cout << oov << " essay terms missing from dictionary\n";
  return 0;
}

// Weighted sampler over a fixed term distribution.
class TermSampler {
 public:
  TermSampler(const TermVector& dist, const std::set<std::string>& exclude,
              double min_weight = 0.0) {
    double total = 0.0;
    for (const auto& [term, w] : dist.entries) {
      if (exclude.count(term) || w < min_weight) continue;
      total += w;
      terms_.push_back(term);
      cumulative_.push_back(total);
    }
    total_ = total;
  }

  const std::string& draw(std::uint64_t& state) const {
    const double u =
        static_cast<double>(store_detail::splitmix64_next(state) >> 11) * 0x1.0p-53 * total_;
    const auto it = std::lower_bound(cumulative_.begin(), cumulative_.end(), u);
    const std::size_t i =
        std::min(static_cast<std::size_t>(it - cumulative_.begin()), terms_.size() - 1);
    return terms_[i];
  }

 private:
  std::vector<std::string> terms_;
  std::vector<double> cumulative_;
  double total_ = 0.0;
};

std::vector<std::string> make_handles(std::size_t count) {
  const std::vector<std::string> first = {
      "Quiet",  "Misty",  "Velvet", "Copper", "Indigo", "Maple",  "Ember",  "Frost",
      "Cobalt", "Hazel",  "Onyx",   "Pearl",  "Raven",  "Slate",  "Topaz",  "Umber",
      "Willow", "Zephyr", "Auburn", "Birch",  "Cedar",  "Dusk",   "Fable",  "Gale",
      "Harbor", "Iris",   "Juniper","Karst",  "Lumen",  "Marsh",  "Nimbus", "Orchid",
      "Pinyon", "Quartz", "Ridge",  "Sable",  "Thistle","Updraft","Vesper", "Wren",
      "Yonder", "Zinnia", "Alder",  "Bracken","Cairn",  "Delta",  "Ester",  "Fjord",
      "Grove",  "Heath"};
  std::vector<std::string> handles;
  for (std::size_t i = 0; i < count; ++i) {
    handles.push_back(first[i % first.size()] + "Voice_" + std::to_string(1700 + 37 * i));
  }
  return handles;
}

void write_jsonl_line(std::ofstream& out, const std::string& id, const std::string& user,
                      const std::string& text, const std::string& created_at) {
  nlohmann::json j = {{"id", id}, {"user", user}, {"text", text}, {"created_at", created_at}};
  out << j.dump() << '\n';
}

std::string timestamp_for(std::size_t i) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "2018-0%zu-%02zuT%02zu:%02zu:00Z", 2 + (i % 7) / 28,
                1 + i % 28, i % 24, (7 * i) % 60);
  return buf;
}

int cmd_paired() {
  StandardCorpus sc = load_standard();
  const TermVector dist = corpus_vector(sc.index, WeightingMode::RelFreq);
  // leave out hapax terms: pearson is scale-invariant, so sampling the
  // renormalized head of the distribution keeps the correlation target
  // while removing the noisiest coordinates
  const double hapax_floor = 1.5 / static_cast<double>(sc.index.total_tokens());
  const TermSampler sampler(dist, {}, hapax_floor);
  const std::vector<std::string> handles = make_handles(50);

  const std::size_t tweet_count = 1200;
  std::uint64_t state = 0x9a1fc0ffee5eedULL;
  const std::string path = kDataDir + "/fixtures/tweets_paired.jsonl";
  std::ofstream out(path, std::ios::trunc);
  for (std::size_t i = 0; i < tweet_count; ++i) {
    const std::size_t tokens = 18 + store_detail::bounded(state, 7);
    std::string text;
    for (std::size_t t = 0; t < tokens; ++t) {
      if (t) text += ' ';
      text += sampler.draw(state);
    }
    char id[16];
    std::snprintf(id, sizeof(id), "p%04zu", i + 1);
    const std::string& user = handles[store_detail::bounded(state, handles.size())];
    write_jsonl_line(out, id, user, text, timestamp_for(i));
  }
  out.close();
  std::cout << "wrote " << tweet_count << " tweets to " << path << "\n";

  // verify: sweep pearson at n=100 and n=200 must clear 0.95 with margin
  NormalizeConfig cfg;
  IngestReport ingest;
  auto [docs, users] = ingest_tweets(path, cfg, sc.stops, "fixture-generation-key", &ingest);
  HarvestConfig harvest;
  CompareOptions opts;
  opts.exclude_social_terms = harvest.seed_hashtags;
  const SweepResult result = sweep(sc.index, docs, harvest, sc.dict, opts);
  for (const ValidationReport& r : result.reports) {
    std::printf("n=%lld pearson=%s spearman=%s overlap=%.3f\n",
                static_cast<long long>(r.sample_size),
                r.pearson_r ? std::to_string(*r.pearson_r).c_str() : "null",
                r.spearman_rho ? std::to_string(*r.spearman_rho).c_str() : "null",
                r.overlap_at_k);
    if (r.sample_size <= 200 && (!r.pearson_r || *r.pearson_r < 0.955)) {
      std::cerr << "paired fixture too noisy at n=" << r.sample_size << "\n";
      return 1;
    }
  }
  return 0;
}

int cmd_drift() {
  StandardCorpus sc = load_standard();
  const std::size_t tweet_count = 1000;

  // Which doc ids land in each sweep sample. Ids are zero-padded so the
  // sorted order used by subsample matches construction order.
  std::vector<Document> skeleton(tweet_count);
  std::vector<std::string> ids(tweet_count);
  for (std::size_t i = 0; i < tweet_count; ++i) {
    char id[16];
    std::snprintf(id, sizeof(id), "d%04zu", i + 1);
    ids[i] = id;
    skeleton[i].doc_id = id;
  }
  HarvestConfig harvest;  // sizes 100/200/500/1000, seed 42
  std::map<std::string, int> priority;  // smallest sample containing the doc
  for (const std::string& id : ids) priority[id] = 3;
  const std::vector<std::int64_t> sizes = {500, 200, 100};
  int level = 2;
  for (const std::int64_t n : sizes) {
    const std::uint64_t sub_seed = derive_seed(harvest.rng_seed, static_cast<std::uint64_t>(n));
    for (const Document& d : subsample(skeleton, static_cast<std::size_t>(n), sub_seed))
      priority[d.doc_id] = std::min(priority[d.doc_id], level);
    --level;
  }
  // priority 0 => in the n=100 sample ... 3 => only in the full pool
  const double insomnia_share[4] = {0.05, 0.22, 0.46, 0.74};

  const TermVector dist = corpus_vector(sc.index, WeightingMode::RelFreq);
  const std::set<std::string> ladder = {"fatigue", "anxiety", "worry",  "stress",
                                        "isolation", "sadness", "guilt"};
  std::set<std::string> excluded = ladder;
  excluded.insert("sleep");
  excluded.insert("insomnia");
  const TermSampler base(dist, excluded);

  const std::vector<std::pair<std::string, double>> ladder_weights = {
      {"fatigue", 0.30}, {"anxiety", 0.24}, {"worry", 0.16},  {"stress", 0.12},
      {"isolation", 0.08}, {"sadness", 0.06}, {"guilt", 0.04}};

  std::uint64_t state = 0xd51f7d1f7beefULL;
  const std::vector<std::string> handles = make_handles(40);
  const std::string path = kDataDir + "/fixtures/tweets_drift.jsonl";
  std::ofstream out(path, std::ios::trunc);
  for (std::size_t i = 0; i < tweet_count; ++i) {
    const int p = priority[ids[i]];
    std::vector<std::string> words;
    for (int slot = 0; slot < 2; ++slot) {
      const double u =
          static_cast<double>(store_detail::splitmix64_next(state) >> 11) * 0x1.0p-53;
      words.push_back(u < insomnia_share[p] ? "insomnia" : "sleep");
    }
    for (int slot = 0; slot < 3; ++slot) {
      double u = static_cast<double>(store_detail::splitmix64_next(state) >> 11) * 0x1.0p-53;
      for (const auto& [term, share] : ladder_weights) {
        u -= share;
        if (u <= 0.0) {
          words.push_back(term);
          break;
        }
      }
      if (static_cast<int>(words.size()) < 2 + slot + 1) words.push_back("guilt");
    }
    for (int slot = 0; slot < 7; ++slot) words.push_back(base.draw(state));
    // deterministic shuffle so drift terms are not always leading
    for (std::size_t w = words.size(); w > 1; --w)
      std::swap(words[w - 1], words[store_detail::bounded(state, w)]);
    std::string text;
    for (std::size_t w = 0; w < words.size(); ++w) {
      if (w) text += ' ';
      text += words[w];
    }
    const std::string& user = handles[store_detail::bounded(state, handles.size())];
    write_jsonl_line(out, ids[i], user, text, timestamp_for(i));
  }
  out.close();
  std::cout << "wrote " << tweet_count << " tweets to " << path << "\n";

  // verify the drift properties through the real pipeline
  NormalizeConfig cfg;
  auto [docs, users] = ingest_tweets(path, cfg, sc.stops, "fixture-generation-key");
  CompareOptions opts;
  opts.exclude_social_terms = harvest.seed_hashtags;
  const SweepResult result = sweep(sc.index, docs, harvest, sc.dict, opts);
  const auto insomnia = result.trajectories.find("insomnia");
  const auto sleep = result.trajectories.find("sleep");
  if (insomnia == result.trajectories.end() || sleep == result.trajectories.end()) {
    std::cerr << "drift terms not tracked\n";
    return 1;
  }
  bool ok = true;
  std::size_t prev_rank = 0;
  double prev_sleep = 2.0;
  for (std::size_t i = 0; i < insomnia->second.size(); ++i) {
    const TrajectoryPoint& ip = insomnia->second[i];
    const TrajectoryPoint& sp = sleep->second[i];
    std::printf("n=%lld insomnia rank=%s rf=%.4f | sleep rf=%.4f\n",
                static_cast<long long>(ip.sample_size),
                ip.rank ? std::to_string(*ip.rank).c_str() : "absent", ip.rel_freq, sp.rel_freq);
    if (!ip.rank) ok = false;
    if (i > 0 && ip.rank && *ip.rank >= prev_rank) ok = false;
    if (sp.rel_freq > prev_sleep) ok = false;
    if (ip.rank) prev_rank = *ip.rank;
    prev_sleep = sp.rel_freq;
  }
  if (!ok) {
    std::cerr << "drift property violated\n";
    return 1;
  }
  return 0;
}

int cmd_social() {
  StandardCorpus sc = load_standard();
  const TermVector dist = corpus_vector(sc.index, WeightingMode::RelFreq);
  const TermSampler sampler(dist, {});
  const std::vector<std::string> handles = make_handles(50);
  const std::vector<std::string> seed_tags = {"depression", "depressed", "feelingdown"};
  const std::vector<std::string> other_tags = {"mentalhealth", "selfcare", "mondays",
                                               "nosleepclub"};
  const std::vector<std::string> oov_bits = {"whazzup", "sooo", "ugh", "meh", "fml", "tbh"};

  std::uint64_t state = 0x50c1a11f0ULL;
  const std::string path = kDataDir + "/fixtures/tweets_social.jsonl";
  std::ofstream out(path, std::ios::trunc);
  std::size_t written = 0;
  for (std::size_t i = 0; i < 100; ++i) {
    char id[16];
    std::snprintf(id, sizeof(id), "s%04zu", i + 1);
    const std::string& user = handles[i % handles.size()];
    const std::size_t tokens = 7 + store_detail::bounded(state, 6);
    std::string text;
    for (std::size_t t = 0; t < tokens; ++t) {
      if (t) text += ' ';
      text += sampler.draw(state);
    }
    if (store_detail::bounded(state, 5) == 0) {
      text += " " + oov_bits[store_detail::bounded(state, oov_bits.size())];
    }
    if (i % 10 != 9) {  // 90 of 100 carry a seed hashtag
      text += " #" + seed_tags[store_detail::bounded(state, seed_tags.size())];
      if (store_detail::bounded(state, 4) == 0)
        text += " #" + other_tags[store_detail::bounded(state, other_tags.size())];
    } else if (store_detail::bounded(state, 2) == 0) {
      text += " #" + other_tags[store_detail::bounded(state, other_tags.size())];
    }
    write_jsonl_line(out, id, user, text, timestamp_for(i));
    ++written;
  }
  // two deliberately malformed lines and one duplicate id, to exercise the
  // skip-and-count path of ingest_tweets
  out << "{\"id\": \"s9998\", \"user\": \"GhostReader_77\"}\n";
  out << "this line is not json\n";
  {
    nlohmann::json dup = {{"id", "s0001"},
                          {"user", "DupVoice_1"},
                          {"text", "duplicate id line #depression"},
                          {"created_at", timestamp_for(3)}};
    out << dup.dump() << '\n';
  }
  out.close();
  std::cout << "wrote " << written << " tweets (+3 bad lines) to " << path << "\n";
  return 0;
}

int cmd_check() {
  StandardCorpus sc = load_standard();

  // every token of every fixture must be a dictionary word or a known OOV
  const std::set<std::string> allowed_oov = {"whazzup", "sooo", "ugh",  "meh",
                                             "fml",     "tbh",  "feelingdown", "selfcare",
                                             "mondays", "nosleepclub", "mentalhealth"};
  std::set<std::string> missing;
  for (const auto& [term, stats] : sc.index.term_stats)
    if (!sc.dict.contains(term)) missing.insert("essay:" + term);
  NormalizeConfig cfg;
  for (const char* name_cstr : {"tweets_paired", "tweets_drift", "tweets_social"}) {
    const std::string name = name_cstr;
    const std::string path = kDataDir + "/fixtures/" + name + ".jsonl";
    auto [docs, users] = ingest_tweets(path, cfg, sc.stops, "fixture-generation-key");
    for (const Document& d : docs)
      for (const Token& t : d.tokens)
        if (!sc.dict.contains(t.surface) && !allowed_oov.count(t.surface))
          missing.insert(name + ":" + t.surface);
  }
  for (const std::string& m : missing) std::cout << "missing from dictionary: " << m << "\n";

  // the essay fixture must put exactly the sixteen reference terms on top
  const std::set<std::string> expected = {
      "pleasure", "sleep",  "therapy",  "activities", "treatment", "long",
      "abuse",    "health", "identity", "life",       "mood",      "mental",
      "depression", "physical", "pressure", "childhood"};
  const RankedKeywords top = top_k(sc.index, 16, WeightingMode::RawCount);
  bool top_ok = top.term_set() == expected;
  std::cout << "essay top-16 " << (top_ok ? "matches" : "DOES NOT match") << " the target set\n";
  if (!top_ok) {
    for (const auto& [term, w] : top.items) std::cout << "  got: " << term << " " << w << "\n";
  }
  return (missing.empty() && top_ok) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: corpuscle-fixturegen"
              << " {dictionary|porter|counts|paired|drift|social|check}\n";
    return 2;
  }
  const std::string cmd = argv[1];
  try {
    if (cmd == "dictionary") return cmd_dictionary();
    if (cmd == "porter") return cmd_porter();
    if (cmd == "counts") return cmd_counts();
    if (cmd == "paired") return cmd_paired();
    if (cmd == "drift") return cmd_drift();
    if (cmd == "social") return cmd_social();
    if (cmd == "check") return cmd_check();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  std::cerr << "unknown subcommand: " << cmd << "\n";
  return 2;
}
