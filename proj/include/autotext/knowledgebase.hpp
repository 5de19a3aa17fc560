#pragma once

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "autotext/common.hpp"
#include "autotext/corpus.hpp"
#include "autotext/learners.hpp"
#include "autotext/metafeatures.hpp"
#include "autotext/represent.hpp"

namespace autotext {

inline constexpr int kKbSchemaVersion = 1;
inline constexpr std::size_t kDefaultFolds = 3;
inline constexpr std::size_t kDefaultPerCategoryCap = 90000;

// ---------------------------------------------------------------- records

struct PerformanceRecord {
  double accuracy = 0;
  bool failed = false;
};

// Competition ("min-tie") ranking on descending accuracy: rank = 1 + number
// of strictly better entries.
inline std::vector<double> rank_row(const std::vector<double>& accuracies) {
  if (accuracies.empty()) throw ValidationError("rank_row: empty input");
  std::vector<double> ranks(accuracies.size());
  for (std::size_t i = 0; i < accuracies.size(); ++i) {
    std::size_t better = 0;
    for (std::size_t j = 0; j < accuracies.size(); ++j) {
      if (accuracies[j] > accuracies[i]) ++better;
    }
    ranks[i] = static_cast<double>(better + 1);
  }
  return ranks;
}

// ---------------------------------------------------------------- evaluation

// Atomic write: temp file in the same directory, then rename.
inline void write_file_atomic(const std::string& path,
                              const std::string& content) {
  namespace fs = std::filesystem;
  fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ValidationError("cannot write file: " + tmp.string());
    out << content;
    if (!out.good()) throw ValidationError("short write: " + tmp.string());
  }
  fs::rename(tmp, target);
}

// Mean accuracy of a linear SVM over stratified k-fold CV, the
// representation refitted on each fold's training part. A representation
// failure on any fold marks the whole cell failed with accuracy 0.
inline PerformanceRecord evaluate_representation(
    const LabeledCorpus& corpus, const RepresentationSpec& spec,
    const Resources& resources, std::size_t folds, std::uint64_t seed) {
  validate_corpus(corpus);
  auto labels = corpus.label_ids();
  const int n_classes = static_cast<int>(corpus.categories.size());
  // Folds depend on corpus content and the master seed only, so every spec
  // is scored on identical folds.
  auto fold_indices =
      stratified_kfold(corpus, folds, mix_seed(seed, fnv1a("folds")));
  PerformanceRecord record;
  double total = 0;
  for (std::size_t f = 0; f < fold_indices.size(); ++f) {
    const auto& fold = fold_indices[f];
    LabeledCorpus train = corpus_subset(corpus, fold.train);
    LabeledCorpus test = corpus_subset(corpus, fold.test);
    std::vector<int> y_train, y_test;
    for (std::size_t i : fold.train) y_train.push_back(labels[i]);
    for (std::size_t i : fold.test) y_test.push_back(labels[i]);
    try {
      std::uint64_t cell_seed = mix_seed(seed, spec.content_hash(), f);
      auto fitted = fit_representation(spec, train, resources, cell_seed);
      FeatureMatrix x_train = fitted->transform(train);
      FeatureMatrix x_test = fitted->transform(test);
      if (!x_train.all_finite() || !x_test.all_finite()) {
        throw RepresentationFailure("non-finite features");
      }
      auto svm = LinearSvm::fit(x_train, y_train, n_classes, SvmConfig{},
                                mix_seed(cell_seed, fnv1a("svm")));
      total += accuracy(svm.predict(x_test), y_test);
    } catch (const RepresentationFailure&) {
      record.failed = true;
      record.accuracy = 0;
      return record;
    }
  }
  record.accuracy = total / static_cast<double>(fold_indices.size());
  return record;
}

// ---------------------------------------------------------------- KB type

struct KnowledgeBase {
  std::vector<std::string> corpus_names;
  std::vector<std::vector<double>> meta;      // n_corpora x 72
  std::vector<std::vector<double>> accuracy;  // n_corpora x n_reps
  std::vector<std::vector<double>> rank;      // n_corpora x n_reps
  std::vector<std::vector<bool>> failed;      // n_corpora x n_reps
  std::string registry_fingerprint;
  RepresentationRegistry registry;
  ExtractionMetadata extractor_metadata;
  std::size_t folds = kDefaultFolds;
  std::uint64_t seed = 13;

  std::size_t n_corpora() const { return meta.size(); }
  std::size_t n_representations() const { return registry.size(); }

  // Lowest-id representation holding rank 1 in a row.
  int best_representation(std::size_t row) const {
    const auto& r = rank[row];
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (r[j] == 1.0) return static_cast<int>(j);
    }
    throw std::logic_error("rank row without a rank-1 entry");
  }

  void validate() const {
    if (meta.size() != accuracy.size() || meta.size() != rank.size() ||
        meta.size() != failed.size() || meta.size() != corpus_names.size()) {
      throw ValidationError("knowledge base: misaligned matrices");
    }
    const std::size_t reps = n_representations();
    for (std::size_t i = 0; i < meta.size(); ++i) {
      if (meta[i].size() != kMetaFeatureCount) {
        throw ValidationError("knowledge base: meta row size != 72");
      }
      if (accuracy[i].size() != reps || rank[i].size() != reps ||
          failed[i].size() != reps) {
        throw ValidationError("knowledge base: row width mismatch");
      }
      for (std::size_t j = 0; j < reps; ++j) {
        if (!(accuracy[i][j] >= 0.0 && accuracy[i][j] <= 1.0)) {
          throw ValidationError("knowledge base: accuracy out of [0,1]");
        }
        if (!(rank[i][j] >= 1.0 &&
              rank[i][j] <= static_cast<double>(reps))) {
          throw ValidationError("knowledge base: rank out of range");
        }
        if (failed[i][j] && accuracy[i][j] != 0.0) {
          throw ValidationError("knowledge base: failed cell with accuracy != 0");
        }
      }
      if (rank_row(accuracy[i]) != rank[i]) {
        throw ValidationError("knowledge base: rank row inconsistent");
      }
    }
    if (registry.fingerprint() != registry_fingerprint) {
      throw ValidationError("knowledge base: fingerprint mismatch");
    }
  }
};

// ---------------------------------------------------------------- building

struct BuildOptions {
  std::size_t folds = kDefaultFolds;
  std::uint64_t seed = 13;
  std::size_t jobs = 1;
  std::string checkpoint_dir;  // empty = no checkpointing
  std::ostream* log = &std::cerr;
  // Test hook: abort the build (as an interruption would) after this many
  // freshly computed cells.
  std::optional<std::size_t> interrupt_after_cells;
};

class BuildInterrupted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string cell_checkpoint_name(std::uint64_t corpus_hash,
                                        const RepresentationSpec& spec,
                                        std::size_t folds,
                                        std::uint64_t seed) {
  std::uint64_t key = mix_seed(corpus_hash, spec.content_hash(),
                               mix_seed(folds, seed));
  return "cell_" + hex64(corpus_hash) + "_" + hex64(key) + ".json";
}

inline std::string meta_checkpoint_name(std::uint64_t corpus_hash,
                                        std::uint64_t seed) {
  return "meta_" + hex64(corpus_hash) + "_" + hex64(seed) + ".json";
}

}  // namespace detail

// Exhaustive offline phase: evaluate every (corpus, representation) cell,
// rank per corpus, extract meta-features, assemble the knowledge base.
// Cells are pure functions of (content, spec, folds, seed); completed ones
// are checkpointed and never recomputed, making the build resumable.
inline KnowledgeBase build_knowledge_base(
    const std::vector<LabeledCorpus>& corpora,
    const RepresentationRegistry& registry, const Resources& resources,
    const BuildOptions& options = {}) {
  if (corpora.size() < 2) {
    throw ValidationError("knowledge base needs at least 2 corpora");
  }
  namespace fs = std::filesystem;
  const bool checkpointing = !options.checkpoint_dir.empty();
  if (checkpointing) fs::create_directories(options.checkpoint_dir);

  // Corpora failing fold feasibility are excluded with a warning.
  std::vector<const LabeledCorpus*> usable;
  for (const auto& corpus : corpora) {
    bool feasible = true;
    std::string reason;
    try {
      validate_corpus(corpus);
      for (std::size_t c : corpus.category_counts()) {
        if (c < options.folds) {
          feasible = false;
          reason = "a category has fewer documents than folds";
        }
      }
    } catch (const ValidationError& e) {
      feasible = false;
      reason = e.what();
    }
    if (!feasible) {
      if (options.log) {
        *options.log << "warning: excluding corpus '" << corpus.name << "': "
                     << reason << "\n";
      }
      continue;
    }
    usable.push_back(&corpus);
  }
  if (usable.size() < 2) {
    throw ValidationError("fewer than 2 corpora are fold-feasible");
  }

  std::vector<std::uint64_t> content_hashes(usable.size());
  for (std::size_t i = 0; i < usable.size(); ++i) {
    content_hashes[i] = corpus_content_hash(*usable[i]);
  }

  KnowledgeBase kb;
  kb.registry = registry;
  kb.registry_fingerprint = registry.fingerprint();
  kb.folds = options.folds;
  kb.seed = options.seed;
  kb.corpus_names.resize(usable.size());
  kb.meta.resize(usable.size());
  kb.accuracy.assign(usable.size(),
                     std::vector<double>(registry.size(), 0.0));
  kb.rank.resize(usable.size());
  kb.failed.assign(usable.size(), std::vector<bool>(registry.size(), false));

  struct Cell {
    std::size_t corpus = 0;
    std::size_t spec = 0;
  };
  std::vector<Cell> pending;
  std::mutex mutex;
  std::atomic<std::size_t> fresh_cells{0};

  auto cell_path = [&](std::size_t i, std::size_t j) {
    return options.checkpoint_dir + "/" +
           detail::cell_checkpoint_name(content_hashes[i], registry.specs[j],
                                        options.folds, options.seed);
  };

  for (std::size_t i = 0; i < usable.size(); ++i) {
    kb.corpus_names[i] = usable[i]->name;
    for (std::size_t j = 0; j < registry.size(); ++j) {
      bool restored = false;
      if (checkpointing) {
        std::ifstream in(cell_path(i, j));
        if (in) {
          try {
            nlohmann::json c = nlohmann::json::parse(in);
            kb.accuracy[i][j] = c.at("accuracy").get<double>();
            kb.failed[i][j] = c.at("failed").get<bool>();
            restored = true;
          } catch (const nlohmann::json::exception&) {
            // A torn checkpoint is recomputed.
          }
        }
      }
      if (!restored) pending.push_back({i, j});
    }
  }

  auto run_cell = [&](const Cell& cell) {
    const LabeledCorpus& corpus = *usable[cell.corpus];
    std::uint64_t cell_seed =
        mix_seed(options.seed, content_hashes[cell.corpus],
                 registry.specs[cell.spec].content_hash());
    PerformanceRecord rec =
        evaluate_representation(corpus, registry.specs[cell.spec], resources,
                                options.folds, cell_seed);
    {
      std::lock_guard<std::mutex> lock(mutex);
      kb.accuracy[cell.corpus][cell.spec] = rec.accuracy;
      kb.failed[cell.corpus][cell.spec] = rec.failed;
      if (checkpointing) {
        nlohmann::json c;
        c["accuracy"] = rec.accuracy;
        c["failed"] = rec.failed;
        write_file_atomic(cell_path(cell.corpus, cell.spec), c.dump());
      }
    }
    ++fresh_cells;
  };

  if (options.jobs <= 1) {
    for (const Cell& cell : pending) {
      if (options.interrupt_after_cells &&
          fresh_cells.load() >= *options.interrupt_after_cells) {
        throw BuildInterrupted("interrupted after " +
                               std::to_string(fresh_cells.load()) + " cells");
      }
      run_cell(cell);
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::atomic<bool> interrupted{false};
    std::vector<std::thread> workers;
    for (std::size_t t = 0; t < options.jobs; ++t) {
      workers.emplace_back([&] {
        while (true) {
          std::size_t k = next.fetch_add(1);
          if (k >= pending.size() || interrupted.load()) return;
          if (options.interrupt_after_cells &&
              fresh_cells.load() >= *options.interrupt_after_cells) {
            interrupted.store(true);
            return;
          }
          run_cell(pending[k]);
        }
      });
    }
    for (auto& w : workers) w.join();
    if (interrupted.load()) {
      throw BuildInterrupted("interrupted after " +
                             std::to_string(fresh_cells.load()) + " cells");
    }
  }

  // Meta-feature rows, checkpointed per corpus.
  for (std::size_t i = 0; i < usable.size(); ++i) {
    std::uint64_t meta_seed = mix_seed(options.seed, content_hashes[i],
                                       fnv1a("metafeatures"));
    std::string path;
    bool restored = false;
    if (checkpointing) {
      path = options.checkpoint_dir + "/" +
             detail::meta_checkpoint_name(content_hashes[i], meta_seed);
      std::ifstream in(path);
      if (in) {
        try {
          nlohmann::json m = nlohmann::json::parse(in);
          if (m.at("names_version").get<std::string>() ==
              kMetaFeatureNamesVersion) {
            kb.meta[i] = m.at("values").get<std::vector<double>>();
            restored = kb.meta[i].size() == kMetaFeatureCount;
          }
        } catch (const nlohmann::json::exception&) {
        }
      }
    }
    if (!restored) {
      auto mv = extract(*usable[i], meta_seed);
      kb.meta[i] = mv.values;
      kb.extractor_metadata = mv.metadata;
      if (checkpointing) {
        nlohmann::json m;
        m["names_version"] = kMetaFeatureNamesVersion;
        m["values"] = kb.meta[i];
        write_file_atomic(path, m.dump());
      }
    }
  }
  // Restore metadata hashes even if every row came from checkpoints.
  kb.extractor_metadata.seed = options.seed;
  kb.extractor_metadata.stopwords_hash = hex64(stopword_list_hash());
  kb.extractor_metadata.pos_lexicon_hash = hex64(bundled_pos_lexicon().content_hash);
  kb.extractor_metadata.easy_words_hash = hex64(easy_words_hash());

  for (std::size_t i = 0; i < usable.size(); ++i) {
    kb.rank[i] = rank_row(kb.accuracy[i]);
  }
  kb.validate();
  return kb;
}

// ---------------------------------------------------------------- persistence

namespace detail {

inline nlohmann::json registry_to_json(const RepresentationRegistry& reg) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& spec : reg.specs) {
    nlohmann::json s;
    s["family"] = to_string(spec.family);
    s["params"] = spec.params_json();
    arr.push_back(s);
  }
  return arr;
}

inline RepresentationRegistry registry_from_json(const nlohmann::json& arr) {
  RepresentationRegistry reg;
  for (const auto& item : arr) {
    RepresentationSpec s;
    s.id = static_cast<int>(reg.specs.size());
    const std::string family = item.at("family").get<std::string>();
    const auto& p = item.at("params");
    if (family == "ngram") {
      s.family = Family::kNgram;
      s.analyzer = parse_analyzer(p.at("analyzer").get<std::string>());
      s.stopwords = parse_stopwords(p.at("stopwords").get<std::string>());
      s.ngram_lo = p.at("range").at(0).get<int>();
      s.ngram_hi = p.at("range").at(1).get<int>();
      s.weighting = parse_weighting(p.at("weighting").get<std::string>());
    } else if (family == "lda") {
      s.family = Family::kLda;
      s.stopwords = parse_stopwords(p.at("stopwords").get<std::string>());
      s.topics = p.at("topics").get<std::size_t>();
      s.lda_sweeps = p.at("sweeps").get<std::size_t>();
    } else if (family == "lsa") {
      s.family = Family::kLsa;
      s.stopwords = parse_stopwords(p.at("stopwords").get<std::string>());
      s.weighting = parse_weighting(p.at("weighting").get<std::string>());
      s.svd_dims = p.at("dims").get<std::size_t>();
    } else if (family == "lexicon") {
      s.family = Family::kLexicon;
    } else if (family == "embedding") {
      s.family = Family::kEmbedding;
      s.pretrained = p.at("pretrained").get<bool>();
      s.aggregation = parse_aggregation(p.at("aggregation").get<std::string>());
      s.embedding_dim = p.at("dim").get<std::size_t>();
      s.embedding_epochs = p.at("epochs").get<std::size_t>();
    } else {
      throw ParseError("knowledge base: unknown family " + family);
    }
    reg.specs.push_back(s);
  }
  return reg;
}

}  // namespace detail

inline void save_kb(const KnowledgeBase& kb, const std::string& path) {
  nlohmann::json j;
  j["schema_version"] = kKbSchemaVersion;
  j["registry_fingerprint"] = kb.registry_fingerprint;
  j["registry"] = detail::registry_to_json(kb.registry);
  j["meta_feature_names"] = metafeature_names();
  j["names_version"] = kMetaFeatureNamesVersion;
  j["corpus_names"] = kb.corpus_names;
  j["meta"] = kb.meta;
  j["accuracy"] = kb.accuracy;
  j["rank"] = kb.rank;
  std::vector<std::vector<int>> failed_int(kb.failed.size());
  for (std::size_t i = 0; i < kb.failed.size(); ++i) {
    for (bool b : kb.failed[i]) failed_int[i].push_back(b ? 1 : 0);
  }
  j["failed"] = failed_int;
  j["folds"] = kb.folds;
  j["seed"] = kb.seed;
  nlohmann::json meta;
  meta["stopwords_hash"] = kb.extractor_metadata.stopwords_hash;
  meta["pos_lexicon_hash"] = kb.extractor_metadata.pos_lexicon_hash;
  meta["easy_words_hash"] = kb.extractor_metadata.easy_words_hash;
  j["extractor"] = meta;
  write_file_atomic(path, j.dump(1));
}

inline KnowledgeBase load_kb(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open knowledge base: " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("knowledge base: " + std::string(e.what()));
  }
  try {
    if (j.at("schema_version").get<int>() != kKbSchemaVersion) {
      throw ValidationError(
          "knowledge base schema version mismatch: expected " +
          std::to_string(kKbSchemaVersion));
    }
    KnowledgeBase kb;
    kb.registry = detail::registry_from_json(j.at("registry"));
    kb.registry_fingerprint = j.at("registry_fingerprint").get<std::string>();
    kb.corpus_names = j.at("corpus_names").get<std::vector<std::string>>();
    kb.meta = j.at("meta").get<std::vector<std::vector<double>>>();
    kb.accuracy = j.at("accuracy").get<std::vector<std::vector<double>>>();
    kb.rank = j.at("rank").get<std::vector<std::vector<double>>>();
    auto failed_int = j.at("failed").get<std::vector<std::vector<int>>>();
    kb.failed.resize(failed_int.size());
    for (std::size_t i = 0; i < failed_int.size(); ++i) {
      for (int b : failed_int[i]) kb.failed[i].push_back(b != 0);
    }
    kb.folds = j.at("folds").get<std::size_t>();
    kb.seed = j.at("seed").get<std::uint64_t>();
    kb.extractor_metadata.stopwords_hash =
        j.at("extractor").at("stopwords_hash").get<std::string>();
    kb.extractor_metadata.pos_lexicon_hash =
        j.at("extractor").at("pos_lexicon_hash").get<std::string>();
    kb.extractor_metadata.easy_words_hash =
        j.at("extractor").at("easy_words_hash").get<std::string>();
    kb.validate();
    return kb;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("knowledge base: " + std::string(e.what()));
  }
}

// Guard against mixing a knowledge base with a different grid.
inline void check_registry_compatible(const KnowledgeBase& kb,
                                      const RepresentationRegistry& registry) {
  if (kb.registry_fingerprint != registry.fingerprint()) {
    throw ValidationError("registry fingerprint mismatch: knowledge base has " +
                          kb.registry_fingerprint + ", requested registry is " +
                          registry.fingerprint());
  }
}

inline std::string matrix_to_csv(const std::vector<std::string>& row_names,
                                 const std::vector<std::string>& col_names,
                                 const std::vector<std::vector<double>>& m) {
  std::ostringstream out;
  out.precision(17);
  out << "corpus";
  for (const auto& c : col_names) out << "," << c;
  out << "\n";
  for (std::size_t i = 0; i < m.size(); ++i) {
    out << row_names[i];
    for (double v : m[i]) out << "," << v;
    out << "\n";
  }
  return out.str();
}

}  // namespace autotext
