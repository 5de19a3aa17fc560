#pragma once

// Synthetic corpora, datasets and matrices shared by the unit and acceptance
// suites.

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "autotext/corpus.hpp"
#include "autotext/numerics.hpp"
#include "autotext/represent.hpp"

namespace support {

using autotext::DenseMatrix;
using autotext::FeatureMatrix;
using autotext::LabeledCorpus;
using autotext::Rng;

inline FeatureMatrix dense_features(const DenseMatrix& d) {
  FeatureMatrix f;
  f.is_sparse = false;
  f.dense = d;
  return f;
}

inline LabeledCorpus make_corpus(
    const std::vector<std::pair<std::string, std::string>>& docs,
    const std::string& name = "test") {
  LabeledCorpus c;
  c.name = name;
  for (const auto& [text, label] : docs) {
    c.documents.push_back({text, label});
    if (std::find(c.categories.begin(), c.categories.end(), label) ==
        c.categories.end()) {
      c.categories.push_back(label);
    }
  }
  return c;
}

// Two Gaussian blobs separated along the first axis with the given margin.
inline void make_blobs(std::size_t per_class, double margin, std::uint64_t seed,
                       DenseMatrix& x, std::vector<int>& y,
                       std::size_t dims = 2) {
  Rng rng(seed);
  x = DenseMatrix(2 * per_class, dims);
  y.assign(2 * per_class, 0);
  for (std::size_t i = 0; i < 2 * per_class; ++i) {
    int cls = i < per_class ? 0 : 1;
    y[i] = cls;
    double center = cls == 0 ? -(margin / 2 + 1.0) : (margin / 2 + 1.0);
    x(i, 0) = center + rng.normal() * 0.3;
    for (std::size_t j = 1; j < dims; ++j) x(i, j) = rng.normal();
  }
}

// Topic-marker corpus: class determined by the presence of a marker token,
// surrounded by shared filler vocabulary.
inline LabeledCorpus marker_corpus(std::size_t docs_per_class,
                                   std::uint64_t seed,
                                   const std::string& name = "marker") {
  Rng rng(seed);
  const std::vector<std::string> filler = {
      "the", "quick", "brown", "fox", "jumps", "over", "lazy", "dog",
      "river", "stone", "cloud", "light", "green", "tree", "house", "road"};
  LabeledCorpus c;
  c.name = name;
  for (std::size_t i = 0; i < 2 * docs_per_class; ++i) {
    bool pos = i < docs_per_class;
    const char* marker = pos ? "alpha" : "omega";
    std::ostringstream text;
    text << marker << " ";
    std::size_t len = 6 + rng.below(6);
    for (std::size_t t = 0; t < len; ++t) {
      text << filler[rng.below(filler.size())] << " ";
    }
    text << marker;
    for (std::size_t t = 0; t < 3; ++t) {
      text << " " << filler[rng.below(filler.size())];
    }
    text << ".";
    c.documents.push_back({text.str(), pos ? "pos" : "neg"});
  }
  c.categories = {"pos", "neg"};
  return c;
}

// A family of generators producing corpora whose best representation family
// differs: the knowledge-base experiments need learnable structure.
//
// kind 0, "topic":   word-marker classes, long docs, rich shared filler
// kind 1, "char":    classes differ by character patterns inside words
// kind 2, "stopword":classes differ only in function-word usage profile
// kind 3, "short":   very short docs, tiny vocabulary, imbalanced classes
inline LabeledCorpus synthetic_corpus(int kind, std::uint64_t seed,
                                      const std::string& name,
                                      std::size_t docs_per_class = 24) {
  Rng rng(seed);
  LabeledCorpus c;
  c.name = name;
  auto word = [&](const std::vector<std::string>& pool) {
    return pool[rng.below(pool.size())];
  };
  const std::vector<std::string> filler = {
      "market", "report", "window", "garden", "music",  "travel",
      "silver", "bridge", "animal", "letter", "yellow", "driver",
      "bottle", "orange", "planet", "forest", "butter", "candle"};
  const std::vector<std::string> stop_a = {"the", "of", "and", "to", "in"};
  const std::vector<std::string> stop_b = {"a", "that", "it", "with", "as"};

  if (kind == 0) {
    // Weak topic signal: roughly a fifth of the tokens are topical, and
    // one doc in six carries no topic word at all.
    const std::vector<std::string> topic_a = {"goal", "match", "team", "score"};
    const std::vector<std::string> topic_b = {"senate", "vote", "law", "bill"};
    for (std::size_t i = 0; i < 2 * docs_per_class; ++i) {
      bool a = i < docs_per_class;
      std::ostringstream t;
      std::size_t len = 14 + rng.below(10);
      bool mute = rng.below(6) == 0;
      for (std::size_t k = 0; k < len; ++k) {
        if (!mute && rng.below(5) == 0) {
          t << word(a ? topic_a : topic_b) << " ";
        } else {
          t << word(filler) << " ";
        }
      }
      t << word(filler) << ".";
      c.documents.push_back({t.str(), a ? "sport" : "politics"});
    }
    c.categories = {"sport", "politics"};
  } else if (kind == 1) {
    // Shared stems, class-specific suffixes on about half the tokens. The
    // suffixed word types are numerous and rare, so character patterns
    // generalize where word types often do not.
    for (std::size_t i = 0; i < 2 * docs_per_class; ++i) {
      bool a = i < docs_per_class;
      std::ostringstream t;
      std::size_t len = 8 + rng.below(6);
      for (std::size_t k = 0; k < len; ++k) {
        if (rng.below(2) == 0) {
          t << word(filler) << (a ? "ino" : "etto") << " ";
        } else {
          t << word(filler) << " ";
        }
      }
      t << word(filler) << (a ? "ino" : "etto") << ".";
      c.documents.push_back({t.str(), a ? "ino" : "etto"});
    }
    c.categories = {"ino", "etto"};
  } else if (kind == 2) {
    // Classes differ only in their function-word mixture (80/20 versus
    // 20/80): removing stop words removes the signal.
    for (std::size_t i = 0; i < 2 * docs_per_class; ++i) {
      bool a = i < docs_per_class;
      std::ostringstream t;
      std::size_t len = 12 + rng.below(8);
      for (std::size_t k = 0; k < len; ++k) {
        if (k % 2 == 0) {
          bool own = rng.below(5) != 0;
          t << word((a == own) ? stop_a : stop_b) << " ";
        } else {
          t << word(filler) << " ";
        }
      }
      t << word(filler) << ".";
      c.documents.push_back({t.str(), a ? "formal" : "casual"});
    }
    c.categories = {"formal", "casual"};
  } else {
    // Very short imbalanced documents with a quarter of the tokens drawn
    // from the opposite class vocabulary.
    const std::vector<std::string> tiny_a = {"yes", "good", "fine"};
    const std::vector<std::string> tiny_b = {"no", "bad", "poor"};
    std::size_t n_a = docs_per_class + docs_per_class / 2;
    std::size_t n_b = docs_per_class / 2 + 4;
    for (std::size_t i = 0; i < n_a + n_b; ++i) {
      bool a = i < n_a;
      std::ostringstream t;
      std::size_t len = 2 + rng.below(3);
      for (std::size_t k = 0; k < len; ++k) {
        bool own = rng.below(4) != 0;
        t << word((a == own) ? tiny_a : tiny_b) << " ";
      }
      t << word(filler) << ".";
      c.documents.push_back({t.str(), a ? "up" : "down"});
    }
    c.categories = {"up", "down"};
  }
  return c;
}

inline std::string write_temp_jsonl(const LabeledCorpus& corpus,
                                    const std::string& dir,
                                    const std::string& filename) {
  std::filesystem::create_directories(dir);
  std::string path = dir + "/" + filename;
  autotext::save_corpus_jsonl(corpus, path);
  return path;
}

// Random dense matrix with a geometrically decaying spectrum, the realistic
// shape for document-term data.
inline DenseMatrix random_decaying_matrix(std::size_t rows, std::size_t cols,
                                          double decay, std::uint64_t seed) {
  Rng rng(seed);
  const std::size_t r = std::min(rows, cols);
  DenseMatrix u(rows, r), v(cols, r);
  for (double& x : u.a) x = rng.normal();
  for (double& x : v.a) x = rng.normal();
  autotext::detail::orthonormalize_columns(u);
  autotext::detail::orthonormalize_columns(v);
  DenseMatrix m(rows, cols);
  for (std::size_t k = 0; k < r; ++k) {
    double sigma = 10.0 * std::pow(decay, static_cast<double>(k));
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        m(i, j) += sigma * u(i, k) * v(j, k);
      }
    }
  }
  return m;
}

inline autotext::SparseMatrix to_sparse(const DenseMatrix& d) {
  std::vector<std::vector<std::pair<std::size_t, double>>> rows(d.rows);
  for (std::size_t i = 0; i < d.rows; ++i) {
    for (std::size_t j = 0; j < d.cols; ++j) {
      if (d(i, j) != 0.0) rows[i].emplace_back(j, d(i, j));
    }
  }
  return autotext::SparseMatrix::from_rows(d.cols, rows);
}

inline std::string temp_dir(const std::string& name) {
  std::string dir =
      (std::filesystem::temp_directory_path() / ("autotext_" + name)).string();
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace support
