#pragma once

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include <nlohmann/json.hpp>

#include "autotext/common.hpp"
#include "autotext/corpus.hpp"
#include "autotext/data/stopwords_data.hpp"
#include "autotext/lda.hpp"
#include "autotext/numerics.hpp"
#include "autotext/word2vec.hpp"

namespace autotext {

// ---------------------------------------------------------------- stopwords

inline const std::unordered_set<std::string>& english_stopwords() {
  static const std::unordered_set<std::string> set = [] {
    std::unordered_set<std::string> s;
    std::istringstream in(data::kEnglishStopwords);
    std::string w;
    while (std::getline(in, w)) {
      if (!w.empty()) s.insert(w);
    }
    return s;
  }();
  return set;
}

inline std::uint64_t stopword_list_hash() {
  return fnv1a(data::kEnglishStopwords);
}

// ---------------------------------------------------------------- spec

enum class Family { kNgram, kLda, kLsa, kLexicon, kEmbedding };
enum class Analyzer { kWord, kChar };
enum class StopwordSetting { kNone, kEnglish };
enum class Weighting { kBinary, kTf, kTfidf };

inline const char* to_string(Family f) {
  switch (f) {
    case Family::kNgram: return "ngram";
    case Family::kLda: return "lda";
    case Family::kLsa: return "lsa";
    case Family::kLexicon: return "lexicon";
    case Family::kEmbedding: return "embedding";
  }
  return "?";
}
inline const char* to_string(Analyzer a) {
  return a == Analyzer::kWord ? "word" : "char";
}
inline const char* to_string(StopwordSetting s) {
  return s == StopwordSetting::kNone ? "none" : "english";
}
inline const char* to_string(Weighting w) {
  switch (w) {
    case Weighting::kBinary: return "binary";
    case Weighting::kTf: return "tf";
    case Weighting::kTfidf: return "tfidf";
  }
  return "?";
}
inline const char* to_string(Aggregation a) {
  return a == Aggregation::kMean ? "mean" : "sum";
}

// Terms in any representation vocabulary are capped to this many most
// frequent entries (ties favour the lexicographically smaller term).
inline constexpr std::size_t kVocabularyCap = 50000;

struct RepresentationSpec {
  int id = -1;
  Family family = Family::kNgram;

  // ngram / lsa / lda
  Analyzer analyzer = Analyzer::kWord;
  StopwordSetting stopwords = StopwordSetting::kNone;
  int ngram_lo = 1;
  int ngram_hi = 1;
  Weighting weighting = Weighting::kTf;

  // lda
  std::size_t topics = 50;
  std::size_t lda_sweeps = 100;

  // lsa
  std::size_t svd_dims = 300;

  // embedding
  bool pretrained = false;
  Aggregation aggregation = Aggregation::kMean;
  std::size_t embedding_dim = 100;
  std::size_t embedding_epochs = 5;

  // Canonical parameter serialization; key order is fixed per family.
  nlohmann::ordered_json params_json() const {
    nlohmann::ordered_json p;
    switch (family) {
      case Family::kNgram:
        p["analyzer"] = to_string(analyzer);
        p["stopwords"] = to_string(stopwords);
        p["range"] = {ngram_lo, ngram_hi};
        p["weighting"] = to_string(weighting);
        break;
      case Family::kLda:
        p["stopwords"] = to_string(stopwords);
        p["topics"] = topics;
        p["sweeps"] = lda_sweeps;
        break;
      case Family::kLsa:
        p["stopwords"] = to_string(stopwords);
        p["weighting"] = to_string(weighting);
        p["dims"] = svd_dims;
        break;
      case Family::kLexicon:
        break;
      case Family::kEmbedding:
        p["pretrained"] = pretrained;
        p["aggregation"] = to_string(aggregation);
        p["dim"] = embedding_dim;
        p["epochs"] = embedding_epochs;
        break;
    }
    return p;
  }

  std::string describe() const {
    std::ostringstream out;
    out << to_string(family) << "(";
    switch (family) {
      case Family::kNgram:
        out << to_string(analyzer) << ", stopwords=" << to_string(stopwords)
            << ", range=(" << ngram_lo << "," << ngram_hi << ")"
            << ", weight=" << to_string(weighting);
        break;
      case Family::kLda:
        out << "stopwords=" << to_string(stopwords) << ", topics=" << topics;
        break;
      case Family::kLsa:
        out << "stopwords=" << to_string(stopwords)
            << ", weight=" << to_string(weighting) << ", dims=" << svd_dims;
        break;
      case Family::kLexicon:
        out << "categories";
        break;
      case Family::kEmbedding:
        out << "pretrained=" << (pretrained ? "true" : "false")
            << ", vector=" << to_string(aggregation);
        break;
    }
    out << ")";
    return out.str();
  }

  std::uint64_t content_hash() const {
    nlohmann::ordered_json j;
    j["family"] = to_string(family);
    j["params"] = params_json();
    return fnv1a(j.dump());
  }
};

// ---------------------------------------------------------------- registry

struct RepresentationRegistry {
  std::vector<RepresentationSpec> specs;

  std::size_t size() const { return specs.size(); }

  const RepresentationSpec& at(int id) const {
    if (id < 0 || static_cast<std::size_t>(id) >= specs.size()) {
      throw ValidationError("representation id out of range: " +
                            std::to_string(id));
    }
    return specs[static_cast<std::size_t>(id)];
  }

  // Pinned constants participate: a different stopword list or vocabulary
  // cap must yield a different fingerprint.
  std::string fingerprint() const {
    std::uint64_t h = kFnvOffset;
    for (const auto& spec : specs) h = fnv1a_u64(spec.content_hash(), h);
    h = fnv1a_u64(stopword_list_hash(), h);
    h = fnv1a_u64(kVocabularyCap, h);
    return hex64(h);
  }
};

// The literal cross-product of the representation grid: 36 n-gram cells,
// 2 LDA, 4 LSA, 1 lexicon, 4 embedding = 47 specs, in this fixed order.
inline RepresentationRegistry default_registry() {
  RepresentationRegistry reg;
  auto add = [&reg](RepresentationSpec spec) {
    spec.id = static_cast<int>(reg.specs.size());
    reg.specs.push_back(spec);
  };
  for (Analyzer an : {Analyzer::kWord, Analyzer::kChar}) {
    for (StopwordSetting sw : {StopwordSetting::kNone, StopwordSetting::kEnglish}) {
      for (int hi : {1, 2, 3}) {
        for (Weighting w : {Weighting::kBinary, Weighting::kTf, Weighting::kTfidf}) {
          RepresentationSpec s;
          s.family = Family::kNgram;
          s.analyzer = an;
          s.stopwords = sw;
          s.ngram_lo = 1;
          s.ngram_hi = hi;
          s.weighting = w;
          add(s);
        }
      }
    }
  }
  for (StopwordSetting sw : {StopwordSetting::kNone, StopwordSetting::kEnglish}) {
    RepresentationSpec s;
    s.family = Family::kLda;
    s.stopwords = sw;
    add(s);
  }
  for (StopwordSetting sw : {StopwordSetting::kNone, StopwordSetting::kEnglish}) {
    for (Weighting w : {Weighting::kTf, Weighting::kTfidf}) {
      RepresentationSpec s;
      s.family = Family::kLsa;
      s.stopwords = sw;
      s.weighting = w;
      add(s);
    }
  }
  {
    RepresentationSpec s;
    s.family = Family::kLexicon;
    add(s);
  }
  for (bool pre : {true, false}) {
    for (Aggregation agg : {Aggregation::kMean, Aggregation::kSum}) {
      RepresentationSpec s;
      s.family = Family::kEmbedding;
      s.pretrained = pre;
      s.aggregation = agg;
      add(s);
    }
  }
  return reg;
}

// Drop specs whose external resources are not configured. Exclusions change
// the fingerprint, which is exactly the point: a knowledge base built
// without a lexicon must not be confused with one built with it.
inline RepresentationRegistry filter_registry(RepresentationRegistry reg,
                                              bool has_lexicon,
                                              bool has_vectors) {
  std::vector<RepresentationSpec> kept;
  for (auto spec : reg.specs) {
    if (spec.family == Family::kLexicon && !has_lexicon) continue;
    if (spec.family == Family::kEmbedding && spec.pretrained && !has_vectors) {
      continue;
    }
    spec.id = static_cast<int>(kept.size());
    kept.push_back(spec);
  }
  reg.specs = std::move(kept);
  return reg;
}

namespace detail {

inline Analyzer parse_analyzer(const std::string& s) {
  if (s == "word") return Analyzer::kWord;
  if (s == "char") return Analyzer::kChar;
  throw ParseError("unknown analyzer: " + s);
}
inline StopwordSetting parse_stopwords(const std::string& s) {
  if (s == "none") return StopwordSetting::kNone;
  if (s == "english") return StopwordSetting::kEnglish;
  throw ParseError("unknown stopword setting: " + s);
}
inline Weighting parse_weighting(const std::string& s) {
  if (s == "binary") return Weighting::kBinary;
  if (s == "tf") return Weighting::kTf;
  if (s == "tfidf") return Weighting::kTfidf;
  throw ParseError("unknown weighting: " + s);
}
inline Aggregation parse_aggregation(const std::string& s) {
  if (s == "mean") return Aggregation::kMean;
  if (s == "sum") return Aggregation::kSum;
  throw ParseError("unknown aggregation: " + s);
}

}  // namespace detail

// Registry config: {"specs": [{"family": "...", ...params}, ...]}
inline RepresentationRegistry load_registry(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open registry file: " + path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("registry: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("specs") || !doc["specs"].is_array()) {
    throw ParseError("registry: expected an object with a 'specs' array");
  }
  RepresentationRegistry reg;
  for (const auto& item : doc["specs"]) {
    RepresentationSpec s;
    s.id = static_cast<int>(reg.specs.size());
    const std::string family = item.at("family").get<std::string>();
    if (family == "ngram") {
      s.family = Family::kNgram;
      s.analyzer = detail::parse_analyzer(item.value("analyzer", "word"));
      s.stopwords = detail::parse_stopwords(item.value("stopwords", "none"));
      if (item.contains("range")) {
        s.ngram_lo = item["range"].at(0).get<int>();
        s.ngram_hi = item["range"].at(1).get<int>();
      }
      s.weighting = detail::parse_weighting(item.value("weighting", "tf"));
      if (s.ngram_lo < 1 || s.ngram_lo > s.ngram_hi || s.ngram_hi > 3) {
        throw ParseError("registry: ngram range must satisfy 1 <= lo <= hi <= 3");
      }
    } else if (family == "lda") {
      s.family = Family::kLda;
      s.stopwords = detail::parse_stopwords(item.value("stopwords", "none"));
      s.topics = item.value("topics", std::size_t{50});
      s.lda_sweeps = item.value("sweeps", std::size_t{100});
      if (s.topics < 2) throw ParseError("registry: lda topics must be >= 2");
    } else if (family == "lsa") {
      s.family = Family::kLsa;
      s.stopwords = detail::parse_stopwords(item.value("stopwords", "none"));
      s.weighting = detail::parse_weighting(item.value("weighting", "tf"));
      s.svd_dims = item.value("dims", std::size_t{300});
    } else if (family == "lexicon") {
      s.family = Family::kLexicon;
    } else if (family == "embedding") {
      s.family = Family::kEmbedding;
      s.pretrained = item.value("pretrained", false);
      s.aggregation = detail::parse_aggregation(item.value("aggregation", "mean"));
      s.embedding_dim = item.value("dim", std::size_t{100});
      s.embedding_epochs = item.value("epochs", std::size_t{5});
    } else {
      throw ParseError("registry: unknown family: " + family);
    }
    reg.specs.push_back(s);
  }
  if (reg.specs.empty()) throw ParseError("registry: no specs");
  return reg;
}

// ---------------------------------------------------------------- lexicon

// Category lexicon, one category per line: "name: w1 w2 ...".
struct CategoryLexicon {
  std::vector<std::pair<std::string, std::unordered_set<std::string>>> categories;

  bool empty() const { return categories.empty(); }
};

inline CategoryLexicon load_category_lexicon(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open lexicon file: " + path);
  CategoryLexicon lex;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    auto colon = t.find(':');
    if (colon == std::string::npos) {
      throw ParseError("lexicon line " + std::to_string(line_no) +
                       ": expected 'name: w1 w2 ...'");
    }
    std::string name = trim(t.substr(0, colon));
    if (name.empty()) {
      throw ParseError("lexicon line " + std::to_string(line_no) +
                       ": empty category name");
    }
    std::unordered_set<std::string> words;
    std::istringstream rest(t.substr(colon + 1));
    std::string w;
    while (rest >> w) words.insert(ascii_lower(w));
    lex.categories.emplace_back(name, std::move(words));
  }
  if (lex.empty()) throw ValidationError("lexicon file has no categories");
  return lex;
}

// Fraction of document tokens falling in each category's word set.
inline std::vector<double> lexicon_features(
    const std::vector<std::string>& tokens, const CategoryLexicon& lexicon) {
  if (lexicon.empty()) throw ValidationError("empty lexicon");
  std::vector<double> out(lexicon.categories.size(), 0.0);
  if (tokens.empty()) return out;
  for (std::size_t c = 0; c < lexicon.categories.size(); ++c) {
    std::size_t hits = 0;
    const auto& words = lexicon.categories[c].second;
    for (const auto& t : tokens) {
      if (words.count(t)) ++hits;
    }
    out[c] = static_cast<double>(hits) / static_cast<double>(tokens.size());
  }
  return out;
}

// ---------------------------------------------------------------- matrices

struct FeatureMatrix {
  bool is_sparse = true;
  SparseMatrix sparse;
  DenseMatrix dense;
  std::vector<std::string> column_names;

  std::size_t rows() const { return is_sparse ? sparse.rows() : dense.rows; }
  std::size_t cols() const { return is_sparse ? sparse.cols() : dense.cols; }

  template <class Fn>  // fn(col, value)
  void for_each_in_row(std::size_t i, Fn fn) const {
    if (is_sparse) {
      sparse.for_each_in_row(i, fn);
    } else {
      for (std::size_t j = 0; j < dense.cols; ++j) {
        double v = dense(i, j);
        if (v != 0.0) fn(j, v);
      }
    }
  }

  bool all_finite() const {
    if (is_sparse) {
      bool ok = true;
      for (std::size_t i = 0; i < sparse.rows(); ++i) {
        sparse.for_each_in_row(i, [&](std::size_t, double v) {
          if (!std::isfinite(v)) ok = false;
        });
      }
      return ok;
    }
    for (double v : dense.a) {
      if (!std::isfinite(v)) return false;
    }
    return true;
  }
};

struct Resources {
  const WordVectors* word_vectors = nullptr;
  const CategoryLexicon* lexicon = nullptr;
};

// ---------------------------------------------------------------- terms

namespace detail {

// Word-level terms: non-punctuation tokens, lowercased, optionally stopword
// filtered.
inline std::vector<std::string> word_terms(const std::string& text,
                                           StopwordSetting stopwords) {
  std::vector<std::string> out;
  for (auto& tok : tokenize_words(text).tokens) {
    if (is_punct_token(tok)) continue;
    if (stopwords == StopwordSetting::kEnglish && english_stopwords().count(tok)) {
      continue;
    }
    out.push_back(std::move(tok));
  }
  return out;
}

// n-gram terms for one document. Char n-grams run over the document text
// normalized to stopword-filtered word tokens (punctuation runs kept)
// joined by single spaces, so the stopword setting matters for both
// analyzers.
inline std::vector<std::string> ngram_terms(const std::string& text,
                                            Analyzer analyzer,
                                            StopwordSetting stopwords,
                                            int lo, int hi) {
  std::vector<std::string> units;
  if (analyzer == Analyzer::kWord) {
    units = word_terms(text, stopwords);
  } else {
    std::string normalized;
    for (auto& tok : tokenize_words(text).tokens) {
      if (stopwords == StopwordSetting::kEnglish && !is_punct_token(tok) &&
          english_stopwords().count(tok)) {
        continue;
      }
      if (!normalized.empty()) normalized.push_back(' ');
      normalized += tok;
    }
    units = tokenize_chars(normalized).tokens;
  }
  std::vector<std::string> terms;
  const char joiner = analyzer == Analyzer::kWord ? ' ' : '\0';
  for (int n = lo; n <= hi; ++n) {
    if (units.size() < static_cast<std::size_t>(n)) continue;
    for (std::size_t i = 0; i + static_cast<std::size_t>(n) <= units.size(); ++i) {
      std::string term = units[i];
      for (int j = 1; j < n; ++j) {
        if (joiner != '\0') term.push_back(joiner);
        term += units[i + static_cast<std::size_t>(j)];
      }
      terms.push_back(std::move(term));
    }
  }
  return terms;
}

// Fitted vocabulary: index assignment is lexicographic over the terms kept
// after the frequency cap, so it does not depend on map iteration order.
struct FittedVocabulary {
  std::unordered_map<std::string, std::size_t> index;
  std::vector<std::string> terms;       // index -> term
  std::vector<std::size_t> doc_freqs;   // index -> document frequency
  std::size_t n_train_docs = 0;

  static FittedVocabulary build(const std::vector<std::vector<std::string>>& docs_terms) {
    std::map<std::string, std::pair<std::size_t, std::size_t>> stats;  // term -> (freq, df)
    for (const auto& terms : docs_terms) {
      std::set<std::string> seen;
      for (const auto& t : terms) {
        stats[t].first++;
        if (seen.insert(t).second) stats[t].second++;
      }
    }
    FittedVocabulary vocab;
    vocab.n_train_docs = docs_terms.size();
    if (stats.empty()) return vocab;
    std::vector<const std::pair<const std::string, std::pair<std::size_t, std::size_t>>*> entries;
    entries.reserve(stats.size());
    for (const auto& e : stats) entries.push_back(&e);
    if (entries.size() > kVocabularyCap) {
      // Most frequent first; ties favour lexicographically smaller terms.
      std::nth_element(entries.begin(),
                       entries.begin() + static_cast<long>(kVocabularyCap),
                       entries.end(), [](const auto* a, const auto* b) {
                         if (a->second.first != b->second.first) {
                           return a->second.first > b->second.first;
                         }
                         return a->first < b->first;
                       });
      entries.resize(kVocabularyCap);
      std::sort(entries.begin(), entries.end(),
                [](const auto* a, const auto* b) { return a->first < b->first; });
    }
    vocab.terms.reserve(entries.size());
    vocab.doc_freqs.reserve(entries.size());
    for (const auto* e : entries) {
      vocab.index.emplace(e->first, vocab.terms.size());
      vocab.terms.push_back(e->first);
      vocab.doc_freqs.push_back(e->second.second);
    }
    return vocab;
  }

  std::size_t size() const { return terms.size(); }
};

// Sparse count rows over a fitted vocabulary.
inline SparseMatrix count_matrix(
    const FittedVocabulary& vocab,
    const std::vector<std::vector<std::string>>& docs_terms) {
  std::vector<std::vector<std::pair<std::size_t, double>>> rows(docs_terms.size());
  for (std::size_t d = 0; d < docs_terms.size(); ++d) {
    std::map<std::size_t, double> counts;
    for (const auto& t : docs_terms[d]) {
      auto it = vocab.index.find(t);
      if (it != vocab.index.end()) counts[it->second] += 1.0;
    }
    rows[d].assign(counts.begin(), counts.end());
  }
  return SparseMatrix::from_rows(vocab.size(), rows);
}

// binary: 0/1 presence. tf: raw counts. tfidf: counts * smoothed idf then
// row-wise L2 normalization.
inline SparseMatrix apply_weighting(const SparseMatrix& counts,
                                    Weighting weighting,
                                    const std::vector<double>& idf) {
  std::vector<std::vector<std::pair<std::size_t, double>>> rows(counts.rows());
  for (std::size_t i = 0; i < counts.rows(); ++i) {
    counts.for_each_in_row(i, [&](std::size_t j, double v) {
      double w = v;
      if (weighting == Weighting::kBinary) {
        w = 1.0;
      } else if (weighting == Weighting::kTfidf) {
        w = v * idf[j];
      }
      rows[i].emplace_back(j, w);
    });
    if (weighting == Weighting::kTfidf) {
      double norm = 0;
      for (auto& [j, w] : rows[i]) norm += w * w;
      norm = std::sqrt(norm);
      if (norm > 0) {
        for (auto& [j, w] : rows[i]) w /= norm;
      }
    }
  }
  return SparseMatrix::from_rows(counts.cols(), rows);
}

inline std::vector<double> smoothed_idf(const FittedVocabulary& vocab) {
  std::vector<double> idf(vocab.size());
  const double n = static_cast<double>(vocab.n_train_docs);
  for (std::size_t j = 0; j < vocab.size(); ++j) {
    idf[j] = std::log((1.0 + n) / (1.0 + static_cast<double>(vocab.doc_freqs[j]))) + 1.0;
  }
  return idf;
}

}  // namespace detail

// ---------------------------------------------------------------- fitted reps

// A representation fitted on training data only; transform never mutates it.
class FittedRepresentation {
 public:
  virtual ~FittedRepresentation() = default;
  virtual FeatureMatrix transform(const LabeledCorpus& corpus) const = 0;
};

namespace detail {

class NgramFitted : public FittedRepresentation {
 public:
  NgramFitted(const RepresentationSpec& spec, const LabeledCorpus& train)
      : spec_(spec) {
    std::vector<std::vector<std::string>> docs_terms(train.size());
    for (std::size_t d = 0; d < train.size(); ++d) {
      docs_terms[d] = ngram_terms(train.documents[d].text, spec.analyzer,
                                  spec.stopwords, spec.ngram_lo, spec.ngram_hi);
    }
    vocab_ = FittedVocabulary::build(docs_terms);
    if (vocab_.size() == 0) {
      throw RepresentationFailure("ngram: empty training vocabulary for " +
                                  spec.describe());
    }
    if (spec.weighting == Weighting::kTfidf) idf_ = smoothed_idf(vocab_);
  }

  FeatureMatrix transform(const LabeledCorpus& corpus) const override {
    std::vector<std::vector<std::string>> docs_terms(corpus.size());
    for (std::size_t d = 0; d < corpus.size(); ++d) {
      docs_terms[d] = ngram_terms(corpus.documents[d].text, spec_.analyzer,
                                  spec_.stopwords, spec_.ngram_lo, spec_.ngram_hi);
    }
    FeatureMatrix out;
    out.is_sparse = true;
    out.sparse = apply_weighting(count_matrix(vocab_, docs_terms),
                                 spec_.weighting, idf_);
    out.column_names = vocab_.terms;
    return out;
  }

  const FittedVocabulary& vocabulary() const { return vocab_; }

 private:
  RepresentationSpec spec_;
  FittedVocabulary vocab_;
  std::vector<double> idf_;
};

class LdaFitted : public FittedRepresentation {
 public:
  LdaFitted(const RepresentationSpec& spec, const LabeledCorpus& train,
            std::uint64_t seed)
      : spec_(spec), seed_(seed) {
    std::vector<std::vector<std::string>> docs_terms(train.size());
    for (std::size_t d = 0; d < train.size(); ++d) {
      docs_terms[d] = word_terms(train.documents[d].text, spec.stopwords);
    }
    vocab_ = FittedVocabulary::build(docs_terms);
    if (vocab_.size() == 0) {
      throw RepresentationFailure("lda: empty training vocabulary");
    }
    std::vector<std::vector<std::size_t>> encoded(train.size());
    for (std::size_t d = 0; d < train.size(); ++d) {
      for (const auto& t : docs_terms[d]) {
        auto it = vocab_.index.find(t);
        if (it != vocab_.index.end()) encoded[d].push_back(it->second);
      }
    }
    LdaModel::Config cfg;
    cfg.topics = spec.topics;
    cfg.train_sweeps = spec.lda_sweeps;
    model_ = LdaModel::fit(encoded, vocab_.size(), cfg, seed);
  }

  FeatureMatrix transform(const LabeledCorpus& corpus) const override {
    FeatureMatrix out;
    out.is_sparse = false;
    out.dense = DenseMatrix(corpus.size(), model_.topics());
    for (std::size_t d = 0; d < corpus.size(); ++d) {
      std::vector<std::size_t> encoded;
      for (const auto& t : word_terms(corpus.documents[d].text, spec_.stopwords)) {
        auto it = vocab_.index.find(t);
        if (it != vocab_.index.end()) encoded.push_back(it->second);
      }
      auto theta = model_.infer(encoded, mix_seed(seed_, 0x1da, d));
      for (std::size_t j = 0; j < theta.size(); ++j) out.dense(d, j) = theta[j];
    }
    for (std::size_t j = 0; j < model_.topics(); ++j) {
      out.column_names.push_back("topic_" + std::to_string(j));
    }
    return out;
  }

 private:
  RepresentationSpec spec_;
  std::uint64_t seed_;
  FittedVocabulary vocab_;
  LdaModel model_;
};

class LsaFitted : public FittedRepresentation {
 public:
  LsaFitted(const RepresentationSpec& spec, const LabeledCorpus& train,
            std::uint64_t seed)
      : spec_(spec) {
    std::vector<std::vector<std::string>> docs_terms(train.size());
    for (std::size_t d = 0; d < train.size(); ++d) {
      docs_terms[d] = word_terms(train.documents[d].text, spec.stopwords);
    }
    vocab_ = FittedVocabulary::build(docs_terms);
    if (vocab_.size() == 0) {
      throw RepresentationFailure("lsa: empty training vocabulary");
    }
    if (spec.weighting == Weighting::kTfidf) idf_ = smoothed_idf(vocab_);
    SparseMatrix weighted = apply_weighting(count_matrix(vocab_, docs_terms),
                                            spec.weighting, idf_);
    k_ = std::min({spec.svd_dims, weighted.rows(), weighted.cols()});
    if (k_ == 0) throw RepresentationFailure("lsa: degenerate train matrix");
    auto svd = truncated_svd(weighted, k_, seed);
    basis_ = std::move(svd.v);  // cols x k
  }

  FeatureMatrix transform(const LabeledCorpus& corpus) const override {
    std::vector<std::vector<std::string>> docs_terms(corpus.size());
    for (std::size_t d = 0; d < corpus.size(); ++d) {
      docs_terms[d] = word_terms(corpus.documents[d].text, spec_.stopwords);
    }
    SparseMatrix weighted = apply_weighting(count_matrix(vocab_, docs_terms),
                                            spec_.weighting, idf_);
    FeatureMatrix out;
    out.is_sparse = false;
    out.dense = DenseMatrix(weighted.rows(), k_);
    for (std::size_t i = 0; i < weighted.rows(); ++i) {
      weighted.for_each_in_row(i, [&](std::size_t j, double v) {
        for (std::size_t c = 0; c < k_; ++c) {
          out.dense(i, c) += v * basis_(j, c);
        }
      });
    }
    for (std::size_t c = 0; c < k_; ++c) {
      out.column_names.push_back("lsa_" + std::to_string(c));
    }
    return out;
  }

 private:
  RepresentationSpec spec_;
  FittedVocabulary vocab_;
  std::vector<double> idf_;
  std::size_t k_ = 0;
  DenseMatrix basis_;
};

class LexiconFitted : public FittedRepresentation {
 public:
  explicit LexiconFitted(const CategoryLexicon* lexicon) : lexicon_(lexicon) {
    if (lexicon_ == nullptr || lexicon_->empty()) {
      throw ValidationError("lexicon representation requires a lexicon file");
    }
  }

  FeatureMatrix transform(const LabeledCorpus& corpus) const override {
    FeatureMatrix out;
    out.is_sparse = false;
    out.dense = DenseMatrix(corpus.size(), lexicon_->categories.size());
    for (std::size_t d = 0; d < corpus.size(); ++d) {
      auto vals = lexicon_features(tokenize_words(corpus.documents[d].text).tokens,
                                   *lexicon_);
      for (std::size_t j = 0; j < vals.size(); ++j) out.dense(d, j) = vals[j];
    }
    for (const auto& [name, words] : lexicon_->categories) {
      out.column_names.push_back(name);
    }
    return out;
  }

 private:
  const CategoryLexicon* lexicon_;
};

class EmbeddingFitted : public FittedRepresentation {
 public:
  EmbeddingFitted(const RepresentationSpec& spec, const LabeledCorpus& train,
                  const Resources& resources, std::uint64_t seed)
      : spec_(spec) {
    if (spec.pretrained) {
      if (resources.word_vectors == nullptr) {
        throw ValidationError(
            "pretrained embedding representation requires a vectors file");
      }
      pretrained_ = resources.word_vectors;
    } else {
      std::vector<std::vector<std::string>> docs(train.size());
      std::size_t tokens = 0;
      for (std::size_t d = 0; d < train.size(); ++d) {
        docs[d] = word_terms(train.documents[d].text, StopwordSetting::kNone);
        tokens += docs[d].size();
      }
      if (tokens == 0) {
        throw RepresentationFailure("embedding: no training tokens");
      }
      Word2VecConfig cfg;
      cfg.dim = spec.embedding_dim;
      cfg.epochs = spec.embedding_epochs;
      trained_ = train_embeddings(docs, cfg, seed);
    }
  }

  FeatureMatrix transform(const LabeledCorpus& corpus) const override {
    const WordVectors& vecs = pretrained_ ? *pretrained_ : trained_;
    FeatureMatrix out;
    out.is_sparse = false;
    out.dense = DenseMatrix(corpus.size(), vecs.dimension);
    for (std::size_t d = 0; d < corpus.size(); ++d) {
      auto tokens = word_terms(corpus.documents[d].text, StopwordSetting::kNone);
      auto agg = aggregate_embeddings(tokens, vecs, spec_.aggregation);
      for (std::size_t j = 0; j < agg.size(); ++j) out.dense(d, j) = agg[j];
    }
    for (std::size_t j = 0; j < vecs.dimension; ++j) {
      out.column_names.push_back("dim_" + std::to_string(j));
    }
    return out;
  }

 private:
  RepresentationSpec spec_;
  const WordVectors* pretrained_ = nullptr;
  WordVectors trained_;
};

}  // namespace detail

// Fit a representation on training data only. Throws RepresentationFailure
// when the spec cannot be fitted on this data (recorded as a failed cell
// downstream), ValidationError when required resources are missing.
inline std::unique_ptr<FittedRepresentation> fit_representation(
    const RepresentationSpec& spec, const LabeledCorpus& train,
    const Resources& resources, std::uint64_t seed) {
  switch (spec.family) {
    case Family::kNgram:
      return std::make_unique<detail::NgramFitted>(spec, train);
    case Family::kLda:
      return std::make_unique<detail::LdaFitted>(spec, train, seed);
    case Family::kLsa:
      return std::make_unique<detail::LsaFitted>(spec, train, seed);
    case Family::kLexicon:
      return std::make_unique<detail::LexiconFitted>(resources.lexicon);
    case Family::kEmbedding:
      return std::make_unique<detail::EmbeddingFitted>(spec, train, resources, seed);
  }
  throw ValidationError("unknown representation family");
}

// Fit on `train`, transform `apply_to`. Non-finite output is treated as a
// representation failure, never propagated into downstream matrices.
inline FeatureMatrix vectorize(const RepresentationSpec& spec,
                               const LabeledCorpus& train,
                               const LabeledCorpus& apply_to,
                               const Resources& resources, std::uint64_t seed) {
  auto fitted = fit_representation(spec, train, resources, seed);
  FeatureMatrix out = fitted->transform(apply_to);
  if (!out.all_finite()) {
    throw RepresentationFailure("non-finite features from " + spec.describe());
  }
  return out;
}

}  // namespace autotext
