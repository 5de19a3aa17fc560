// autotext: recommend text representations for classification tasks from
// corpus meta-features and prior experience.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "autotext/autotext.hpp"

namespace fs = std::filesystem;
using namespace autotext;

namespace {

constexpr std::uint64_t kDefaultSeed = 13;

std::optional<std::size_t> cap_option(std::size_t cap) {
  if (cap == 0) return std::nullopt;
  return cap;
}

void emit(const std::string& content, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << content;
    if (!content.empty() && content.back() != '\n') std::cout << "\n";
  } else {
    write_file_atomic(out_path, content);
  }
}

std::vector<LabeledCorpus> load_corpus_dir(const std::string& dir,
                                           std::optional<std::size_t> cap) {
  std::vector<std::string> paths;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    auto ext = entry.path().extension().string();
    if (ext == ".jsonl" || ext == ".csv") paths.push_back(entry.path().string());
  }
  std::sort(paths.begin(), paths.end());
  if (paths.empty()) {
    throw ValidationError("no .jsonl or .csv corpora in " + dir);
  }
  std::vector<LabeledCorpus> corpora;
  for (const auto& p : paths) corpora.push_back(load_corpus(p, cap));
  return corpora;
}

std::vector<std::string> load_subset(const std::string& spec) {
  if (spec == "all72") return metafeature_names();
  if (spec == "traditional19") return traditional19_subset();
  std::ifstream in(spec);
  if (!in) throw ValidationError("cannot open subset file: " + spec);
  std::vector<std::string> names;
  std::string line;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    metafeature_index(t);  // validates the name
    names.push_back(t);
  }
  if (names.empty()) throw ValidationError("subset file is empty: " + spec);
  return names;
}

struct SharedResources {
  std::optional<WordVectors> vectors;
  std::optional<CategoryLexicon> lexicon;

  Resources view() const {
    Resources r;
    if (vectors) r.word_vectors = &*vectors;
    if (lexicon) r.lexicon = &*lexicon;
    return r;
  }
};

std::string reps_table(const RepresentationRegistry& registry,
                       const std::vector<double>& accuracy,
                       const std::vector<bool>& failed,
                       const std::string& format) {
  auto ranks = rank_row(accuracy);
  if (format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (std::size_t j = 0; j < registry.size(); ++j) {
      nlohmann::json row;
      row["id"] = j;
      row["representation"] = registry.specs[j].describe();
      row["accuracy"] = accuracy[j];
      row["rank"] = ranks[j];
      row["failed"] = static_cast<bool>(failed[j]);
      arr.push_back(row);
    }
    return arr.dump(1) + "\n";
  }
  if (format == "csv") {
    std::ostringstream out;
    out.precision(17);
    out << "id,representation,accuracy,rank,failed\n";
    for (std::size_t j = 0; j < registry.size(); ++j) {
      out << j << ",\"" << registry.specs[j].describe() << "\"," << accuracy[j]
          << "," << ranks[j] << "," << (failed[j] ? 1 : 0) << "\n";
    }
    return out.str();
  }
  std::ostringstream out;
  out << "id   accuracy  rank  representation\n";
  for (std::size_t j = 0; j < registry.size(); ++j) {
    char line[256];
    std::snprintf(line, sizeof(line), "%-4zu %8.4f %5.0f  %s%s\n", j,
                  accuracy[j], ranks[j], registry.specs[j].describe().c_str(),
                  failed[j] ? "  [failed]" : "");
    out << line;
  }
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"autotext: meta-learned text representation recommendation"};
  app.require_subcommand(1);

  // ---- extract-meta
  auto* cmd_extract = app.add_subcommand(
      "extract-meta", "Extract the 72 corpus meta-features");
  std::string em_corpus, em_out, em_format = "json";
  std::size_t em_cap = kDefaultPerCategoryCap;
  std::uint64_t em_seed = kDefaultSeed;
  cmd_extract->add_option("--corpus", em_corpus, "Corpus file (.jsonl/.csv)")
      ->required();
  cmd_extract->add_option("--out", em_out, "Output path (default: stdout)");
  cmd_extract->add_option("--format", em_format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd_extract->add_option("--cap", em_cap, "Per-category document cap, 0 = none");
  cmd_extract->add_option("--seed", em_seed, "Extraction seed");

  // ---- build-kb
  auto* cmd_build = app.add_subcommand(
      "build-kb", "Exhaustively evaluate the representation grid over a "
                  "corpus directory and assemble the knowledge base");
  std::string bk_dir, bk_out, bk_registry, bk_lexicon, bk_vectors, bk_ckpt;
  std::size_t bk_cap = kDefaultPerCategoryCap, bk_folds = kDefaultFolds,
              bk_jobs = 1;
  std::uint64_t bk_seed = kDefaultSeed;
  cmd_build->add_option("--corpus", bk_dir, "Directory of corpora")->required();
  cmd_build->add_option("--kb", bk_out, "Knowledge base output file")->required();
  cmd_build->add_option("--registry", bk_registry, "Registry config JSON");
  cmd_build->add_option("--lexicon", bk_lexicon, "Category lexicon file");
  cmd_build->add_option("--vectors", bk_vectors, "Pretrained word vectors");
  cmd_build->add_option("--checkpoint-dir", bk_ckpt,
                        "Checkpoint directory (default: <kb>.ckpt)");
  cmd_build->add_option("--cap", bk_cap, "Per-category document cap, 0 = none");
  cmd_build->add_option("--folds", bk_folds, "Cross-validation folds");
  cmd_build->add_option("--jobs", bk_jobs, "Concurrent cell evaluations");
  cmd_build->add_option("--seed", bk_seed, "Master seed");

  // ---- recommend
  auto* cmd_rec = app.add_subcommand(
      "recommend", "Recommend a representation for a new corpus");
  std::string rc_kb, rc_corpus, rc_strategy = "classify", rc_lexicon,
              rc_vectors, rc_out;
  std::size_t rc_cap = kDefaultPerCategoryCap, rc_folds = kDefaultFolds;
  std::uint64_t rc_seed = kDefaultSeed;
  bool rc_train = false;
  cmd_rec->add_option("--kb", rc_kb, "Knowledge base file")->required();
  cmd_rec->add_option("--corpus", rc_corpus, "Corpus file")->required();
  cmd_rec->add_option("--strategy", rc_strategy,
                      "nearest|classify|regress-error|regress-rank");
  cmd_rec->add_option("--seed", rc_seed, "Seed");
  cmd_rec->add_option("--cap", rc_cap, "Per-category document cap, 0 = none");
  cmd_rec->add_option("--folds", rc_folds, "Folds for --train");
  cmd_rec->add_flag("--train", rc_train,
                    "Also fit the final linear SVM with the recommended "
                    "representation and report its CV accuracy");
  cmd_rec->add_option("--lexicon", rc_lexicon, "Category lexicon file");
  cmd_rec->add_option("--vectors", rc_vectors, "Pretrained word vectors");
  cmd_rec->add_option("--out", rc_out, "Output path (default: stdout)");

  // ---- loo-eval
  auto* cmd_loo = app.add_subcommand(
      "loo-eval", "Leave-one-out evaluation of the strategies");
  std::string lo_kb, lo_out, lo_format = "table";
  std::size_t lo_runs = 5;
  std::uint64_t lo_seed = kDefaultSeed;
  std::vector<int> lo_baselines;
  cmd_loo->add_option("--kb", lo_kb, "Knowledge base file")->required();
  cmd_loo->add_option("--runs", lo_runs, "Runs for stochastic strategies");
  cmd_loo->add_option("--seed", lo_seed, "Base seed");
  cmd_loo->add_option("--baseline", lo_baselines,
                      "Representation ids reported as fixed baselines");
  cmd_loo->add_option("--out", lo_out, "Output path (default: stdout)");
  cmd_loo->add_option("--format", lo_format, "table|json|csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));

  // ---- feature-importance
  auto* cmd_imp = app.add_subcommand(
      "feature-importance", "Gini-ranked meta-feature names");
  std::string fi_kb, fi_out, fi_format = "table";
  std::size_t fi_top = kMetaFeatureCount, fi_runs = 5;
  std::uint64_t fi_seed = kDefaultSeed;
  cmd_imp->add_option("--kb", fi_kb, "Knowledge base file")->required();
  cmd_imp->add_option("--top", fi_top, "How many names to return (1..72)");
  cmd_imp->add_option("--runs", fi_runs, "Seeds to average importances over");
  cmd_imp->add_option("--seed", fi_seed, "Base seed");
  cmd_imp->add_option("--out", fi_out, "Output path (default: stdout)");
  cmd_imp->add_option("--format", fi_format, "table|json|csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));

  // ---- compare-subsets
  auto* cmd_cmp = app.add_subcommand(
      "compare-subsets", "Paired t-test between two meta-feature subsets");
  std::string cs_kb, cs_a, cs_b, cs_strategy = "classify", cs_out;
  std::size_t cs_runs = 5;
  std::uint64_t cs_seed = kDefaultSeed;
  cmd_cmp->add_option("--kb", cs_kb, "Knowledge base file")->required();
  cmd_cmp->add_option("--subset-a", cs_a,
                      "Subset file, or preset all72|traditional19")
      ->required();
  cmd_cmp->add_option("--subset-b", cs_b,
                      "Subset file, or preset all72|traditional19")
      ->required();
  cmd_cmp->add_option("--strategy", cs_strategy, "Strategy to compare under");
  cmd_cmp->add_option("--runs", cs_runs, "Runs");
  cmd_cmp->add_option("--seed", cs_seed, "Base seed");
  cmd_cmp->add_option("--out", cs_out, "Output path (default: stdout)");

  // ---- eval-reps
  auto* cmd_reps = app.add_subcommand(
      "eval-reps", "Evaluate every registry representation on one corpus");
  std::string er_corpus, er_registry, er_lexicon, er_vectors, er_out,
      er_format = "table";
  std::size_t er_cap = kDefaultPerCategoryCap, er_folds = kDefaultFolds;
  std::uint64_t er_seed = kDefaultSeed;
  cmd_reps->add_option("--corpus", er_corpus, "Corpus file")->required();
  cmd_reps->add_option("--registry", er_registry, "Registry config JSON");
  cmd_reps->add_option("--lexicon", er_lexicon, "Category lexicon file");
  cmd_reps->add_option("--vectors", er_vectors, "Pretrained word vectors");
  cmd_reps->add_option("--cap", er_cap, "Per-category document cap, 0 = none");
  cmd_reps->add_option("--folds", er_folds, "Cross-validation folds");
  cmd_reps->add_option("--seed", er_seed, "Seed");
  cmd_reps->add_option("--out", er_out, "Output path (default: stdout)");
  cmd_reps->add_option("--format", er_format, "table|json|csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cmd_extract) {
      auto corpus = load_corpus(em_corpus, cap_option(em_cap));
      auto mv = extract(corpus, em_seed);
      emit(em_format == "csv" ? mv.to_csv() : mv.to_json().dump(1) + "\n",
           em_out);
    } else if (*cmd_build) {
      SharedResources res;
      if (!bk_lexicon.empty()) res.lexicon = load_category_lexicon(bk_lexicon);
      if (!bk_vectors.empty()) {
        res.vectors = load_word_vectors(bk_vectors, &std::cerr);
      }
      RepresentationRegistry registry =
          bk_registry.empty()
              ? filter_registry(default_registry(), res.lexicon.has_value(),
                                res.vectors.has_value())
              : load_registry(bk_registry);
      BuildOptions opts;
      opts.folds = bk_folds;
      opts.seed = bk_seed;
      opts.jobs = bk_jobs;
      opts.checkpoint_dir = bk_ckpt.empty() ? bk_out + ".ckpt" : bk_ckpt;
      auto corpora = load_corpus_dir(bk_dir, cap_option(bk_cap));
      auto kb = build_knowledge_base(corpora, registry, res.view(), opts);
      save_kb(kb, bk_out);
      std::cerr << "knowledge base: " << kb.n_corpora() << " corpora x "
                << kb.n_representations() << " representations -> " << bk_out
                << "\n";
    } else if (*cmd_rec) {
      auto kb = load_kb(rc_kb);
      auto corpus = load_corpus(rc_corpus, cap_option(rc_cap));
      auto mv = extract(corpus, mix_seed(rc_seed, corpus_content_hash(corpus),
                                         fnv1a("metafeatures")));
      ForestConfig cfg;
      cfg.seed = rc_seed;
      auto rec = recommend(kb, parse_strategy(rc_strategy), mv.values, cfg);
      nlohmann::json out = rec.to_json(kb.registry);
      if (rc_train) {
        SharedResources res;
        if (!rc_lexicon.empty()) res.lexicon = load_category_lexicon(rc_lexicon);
        if (!rc_vectors.empty()) {
          res.vectors = load_word_vectors(rc_vectors, &std::cerr);
        }
        auto record = evaluate_representation(
            corpus, kb.registry.at(rec.representation_id), res.view(),
            rc_folds, rc_seed);
        out["cv_accuracy"] = record.accuracy;
        out["cv_failed"] = record.failed;
      }
      emit(out.dump(1) + "\n", rc_out);
    } else if (*cmd_loo) {
      auto kb = load_kb(lo_kb);
      LooOptions opts;
      opts.n_runs = lo_runs;
      opts.seed = lo_seed;
      auto report = loo_evaluate(kb, opts);
      std::string content;
      if (lo_format == "json") {
        content = report.to_json().dump(1) + "\n";
      } else if (lo_format == "csv") {
        content = report.details_csv();
      } else {
        content = report.to_table();
      }
      emit(content, lo_out);
    } else if (*cmd_imp) {
      auto kb = load_kb(fi_kb);
      ForestConfig cfg;
      cfg.seed = fi_seed;
      auto ranked = gini_select(kb, fi_top, cfg, fi_runs);
      std::string content;
      if (fi_format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : ranked) {
          arr.push_back({{"name", r.name}, {"importance", r.importance}});
        }
        content = arr.dump(1) + "\n";
      } else if (fi_format == "csv") {
        std::ostringstream out;
        out.precision(17);
        out << "name,importance\n";
        for (const auto& r : ranked) out << r.name << "," << r.importance << "\n";
        content = out.str();
      } else {
        std::ostringstream out;
        for (const auto& r : ranked) {
          char line[128];
          std::snprintf(line, sizeof(line), "%-34s %.6f\n", r.name.c_str(),
                        r.importance);
          out << line;
        }
        content = out.str();
      }
      emit(content, fi_out);
    } else if (*cmd_cmp) {
      auto kb = load_kb(cs_kb);
      auto result = compare_subsets(kb, load_subset(cs_a), load_subset(cs_b),
                                    parse_strategy(cs_strategy), cs_runs,
                                    cs_seed);
      nlohmann::json j;
      j["subset_a"] = result.subset_a;
      j["subset_b"] = result.subset_b;
      auto metrics_json = [](const MethodMetrics& m) {
        nlohmann::json mj;
        mj["avg_accuracy"] = {m.avg_accuracy, m.avg_accuracy_std};
        mj["avg_rank"] = {m.avg_rank, m.avg_rank_std};
        mj["rank1_hits"] = {m.rank1_hits, m.rank1_hits_std};
        return mj;
      };
      j["metrics_a"] = metrics_json(result.metrics_a);
      j["metrics_b"] = metrics_json(result.metrics_b);
      j["t"] = result.t_test.t;
      j["p"] = result.t_test.p;
      j["mean_difference"] = result.t_test.mean_difference;
      emit(j.dump(1) + "\n", cs_out);
    } else if (*cmd_reps) {
      SharedResources res;
      if (!er_lexicon.empty()) res.lexicon = load_category_lexicon(er_lexicon);
      if (!er_vectors.empty()) {
        res.vectors = load_word_vectors(er_vectors, &std::cerr);
      }
      RepresentationRegistry registry =
          er_registry.empty()
              ? filter_registry(default_registry(), res.lexicon.has_value(),
                                res.vectors.has_value())
              : load_registry(er_registry);
      auto corpus = load_corpus(er_corpus, cap_option(er_cap));
      std::vector<double> accuracy(registry.size(), 0.0);
      std::vector<bool> failed(registry.size(), false);
      for (std::size_t j = 0; j < registry.size(); ++j) {
        auto rec = evaluate_representation(
            corpus, registry.specs[j], res.view(), er_folds,
            mix_seed(er_seed, corpus_content_hash(corpus),
                     registry.specs[j].content_hash()));
        accuracy[j] = rec.accuracy;
        failed[j] = rec.failed;
      }
      emit(reps_table(registry, accuracy, failed, er_format), er_out);
    }
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
