#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include <nlohmann/json.hpp>

#include "autotext/common.hpp"
#include "autotext/corpus.hpp"
#include "autotext/data/pos_lexicon_data.hpp"
#include "autotext/learners.hpp"
#include "autotext/numerics.hpp"
#include "autotext/readability.hpp"
#include "autotext/represent.hpp"

namespace autotext {

// ---------------------------------------------------------------- constants

inline constexpr std::size_t kMetaFeatureCount = 72;
inline constexpr const char* kMetaFeatureNamesVersion = "autotext-mf72-v1";
inline constexpr std::size_t kLandmarkTermCap = 1000;
inline constexpr double kLandmarkTrainFraction = 0.7;
inline constexpr std::size_t kPcaComponentCap = 100;
inline constexpr double kPcacVarianceTarget = 0.95;
inline constexpr std::array<std::size_t, 7> kMetaFeatureGroupSizes = {
    2, 8, 24, 5, 11, 12, 10};

inline const std::vector<std::string>& metafeature_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    n.insert(n.end(), {"n_documents", "n_categories"});
    n.insert(n.end(), {"hardness_svb", "hardness_uvb", "hardness_mrh_j",
                       "hardness_ci", "hardness_sem", "hardness_vl",
                       "hardness_vdr", "hardness_avg_word_length"});
    const char* stats[] = {"min",      "max",      "mean",
                           "std",      "skewness", "kurtosis",
                           "mean_std_ratio", "entropy"};
    for (const char* block : {"vocab_freq", "docs_per_category",
                              "words_per_document"}) {
      for (const char* s : stats) {
        n.push_back(std::string(block) + "_" + s);
      }
    }
    n.insert(n.end(), {"landmark_knn1", "landmark_decision_tree",
                       "landmark_diag_lda", "landmark_naive_bayes",
                       "landmark_pct_zeros"});
    n.insert(n.end(), {"pca_pcac", "pca_singular_values_sum",
                       "pca_explained_ratio_sum", "pca_explained_variance_sum",
                       "pca_explained_variance_first"});
    for (const char* s : {"min", "max", "mean", "std", "skewness", "kurtosis"}) {
      n.push_back(std::string("pca_ev_") + s);
    }
    for (const char* t : {"adj", "adp", "adv", "conj", "det", "noun", "num",
                          "prt", "pron", "verb", "punct", "untagged"}) {
      n.push_back(std::string("pos_") + t);
    }
    for (const char* t :
         {"flesch_reading_ease", "smog", "flesch_kincaid", "coleman_liau",
          "ari", "dale_chall", "difficult_words", "linsear_write",
          "gunning_fog", "consensus_grade"}) {
      n.push_back(std::string("read_") + t);
    }
    if (n.size() != kMetaFeatureCount) throw std::logic_error("bad name list");
    return n;
  }();
  return names;
}

inline std::size_t metafeature_index(const std::string& name) {
  const auto& names = metafeature_names();
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return i;
  }
  throw ValidationError("unknown meta-feature name: " + name);
}

// ---------------------------------------------------------------- POS lexicon

// Tag order matches the pos_* feature block; PUNCT is assigned by rule and
// untagged is the fallback, so the lexicon itself maps only to 0..9.
inline const std::array<const char*, 12>& pos_tag_names() {
  static const std::array<const char*, 12> tags = {
      "ADJ", "ADP", "ADV", "CONJ", "DET", "NOUN",
      "NUM", "PRT", "PRON", "VERB", "PUNCT", "untagged"};
  return tags;
}

struct PosLexicon {
  std::unordered_map<std::string, std::size_t> word_tag;
  std::uint64_t content_hash = 0;

  bool empty() const { return word_tag.empty(); }
};

inline PosLexicon parse_pos_lexicon(const std::string& content) {
  PosLexicon lex;
  lex.content_hash = fnv1a(content);
  std::istringstream in(content);
  std::string word, tag;
  while (in >> word >> tag) {
    for (std::size_t t = 0; t < 10; ++t) {
      if (tag == pos_tag_names()[t]) {
        lex.word_tag[ascii_lower(word)] = t;
        break;
      }
    }
  }
  return lex;
}

inline const PosLexicon& bundled_pos_lexicon() {
  static const PosLexicon lex = parse_pos_lexicon(data::kPosLexicon);
  return lex;
}

// ---------------------------------------------------------------- vectors

struct ExtractionMetadata {
  std::uint64_t seed = 0;
  std::optional<std::size_t> cap;
  std::string names_version = kMetaFeatureNamesVersion;
  std::string stopwords_hash;
  std::string pos_lexicon_hash;
  std::string easy_words_hash;
};

struct MetaFeatureVector {
  std::vector<double> values;  // exactly 72, canonical order
  ExtractionMetadata metadata;

  double at(const std::string& name) const {
    return values[metafeature_index(name)];
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["names_version"] = metadata.names_version;
    j["seed"] = metadata.seed;
    if (metadata.cap) j["cap"] = *metadata.cap;
    j["stopwords_hash"] = metadata.stopwords_hash;
    j["pos_lexicon_hash"] = metadata.pos_lexicon_hash;
    j["easy_words_hash"] = metadata.easy_words_hash;
    nlohmann::json feats = nlohmann::json::object();
    for (std::size_t i = 0; i < values.size(); ++i) {
      feats[metafeature_names()[i]] = values[i];
    }
    j["features"] = feats;
    return j;
  }

  std::string to_csv() const {
    std::ostringstream out;
    out.precision(17);
    out << "name,value\n";
    for (std::size_t i = 0; i < values.size(); ++i) {
      out << metafeature_names()[i] << "," << values[i] << "\n";
    }
    return out.str();
  }
};

// ---------------------------------------------------------------- helpers

namespace detail {

// Canonical view: categories sorted lexicographically, documents sorted by
// content. Every downstream row or class index is then a pure function of
// corpus content, which is what makes extraction order-invariant.
inline LabeledCorpus canonicalize(const LabeledCorpus& corpus) {
  LabeledCorpus out;
  out.name = corpus.name;
  out.per_category_cap = corpus.per_category_cap;
  out.categories = corpus.categories;
  std::sort(out.categories.begin(), out.categories.end());
  out.documents = corpus.documents;
  std::sort(out.documents.begin(), out.documents.end(),
            [](const Document& a, const Document& b) {
              std::uint64_t ha = document_hash(a), hb = document_hash(b);
              if (ha != hb) return ha < hb;
              if (a.text != b.text) return a.text < b.text;
              return a.label < b.label;
            });
  return out;
}

struct TokenizedCorpus {
  std::vector<std::vector<std::string>> all_tokens;   // incl. punctuation runs
  std::vector<std::vector<std::string>> word_tokens;  // punctuation removed
  std::map<std::string, std::size_t> vocabulary;      // term -> corpus freq
};

inline TokenizedCorpus tokenize_corpus(const LabeledCorpus& corpus) {
  TokenizedCorpus tc;
  tc.all_tokens.resize(corpus.size());
  tc.word_tokens.resize(corpus.size());
  for (std::size_t d = 0; d < corpus.size(); ++d) {
    tc.all_tokens[d] = tokenize_words(corpus.documents[d].text).tokens;
    for (const auto& t : tc.all_tokens[d]) {
      if (is_punct_token(t)) continue;
      tc.word_tokens[d].push_back(t);
      tc.vocabulary[t]++;
    }
  }
  return tc;
}

// Stopword list in file order, for the SEM usage profiles.
inline const std::vector<std::string>& ordered_stopwords() {
  static const std::vector<std::string> list = [] {
    std::vector<std::string> out;
    std::istringstream in(data::kEnglishStopwords);
    std::string w;
    while (std::getline(in, w)) {
      if (!w.empty()) out.push_back(w);
    }
    return out;
  }();
  return list;
}

inline double cosine(const std::vector<double>& a,
                     const std::vector<double>& b) {
  double dot = 0, na = 0, nb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na <= 0 || nb <= 0) return 0;
  return dot / std::sqrt(na * nb);
}

}  // namespace detail

// ---------------------------------------------------------------- groups

// The eight corpus-hardness measures: SVB, UVB, MRH_J, CI, SEM, VL, VDR and
// average word length.
inline std::array<double, 8> hardness_features(const LabeledCorpus& corpus) {
  auto tc = detail::tokenize_corpus(corpus);
  const auto labels = corpus.label_ids();
  const std::size_t n_cats = corpus.categories.size();

  std::vector<std::set<std::string>> cat_vocab(n_cats);
  std::vector<std::size_t> cat_counts(n_cats, 0);
  double summed_doc_vocab = 0;
  double token_instances = 0, token_chars = 0;
  for (std::size_t d = 0; d < corpus.size(); ++d) {
    std::size_t c = static_cast<std::size_t>(labels[d]);
    cat_counts[c]++;
    std::set<std::string> doc_vocab;
    for (const auto& t : tc.word_tokens[d]) {
      cat_vocab[c].insert(t);
      doc_vocab.insert(t);
      token_instances += 1;
      token_chars += static_cast<double>(utf8_length(t));
    }
    summed_doc_vocab += static_cast<double>(doc_vocab.size());
  }
  const double v = static_cast<double>(tc.vocabulary.size());

  double svb = 0;
  if (v > 0) {
    for (const auto& cv : cat_vocab) {
      svb += static_cast<double>(cv.size()) / v;
    }
    svb /= static_cast<double>(n_cats);
  } else {
    svb = 1.0;
  }

  double uvb = summed_doc_vocab > 0 ? v / summed_doc_vocab : 1.0;

  double mrh = 1.0;
  if (n_cats >= 2) {
    double total = 0;
    std::size_t pairs = 0;
    for (std::size_t a = 0; a < n_cats; ++a) {
      for (std::size_t b = a + 1; b < n_cats; ++b) {
        std::size_t inter = 0;
        for (const auto& t : cat_vocab[a]) inter += cat_vocab[b].count(t);
        std::size_t uni = cat_vocab[a].size() + cat_vocab[b].size() - inter;
        total += uni == 0 ? 0.0
                          : static_cast<double>(inter) / static_cast<double>(uni);
        ++pairs;
      }
    }
    mrh = total / static_cast<double>(pairs);
  }

  double ci = 1.0;
  {
    std::size_t mx = 0, mn = std::numeric_limits<std::size_t>::max();
    for (std::size_t c : cat_counts) {
      mx = std::max(mx, c);
      mn = std::min(mn, c);
    }
    if (mn > 0) ci = static_cast<double>(mx) / static_cast<double>(mn);
  }

  // SEM: cosine similarity of per-category stopword usage profiles.
  double sem = 1.0;
  if (n_cats >= 2) {
    const auto& stopwords = detail::ordered_stopwords();
    std::unordered_map<std::string, std::size_t> stop_index;
    for (std::size_t i = 0; i < stopwords.size(); ++i) stop_index[stopwords[i]] = i;
    std::vector<std::vector<double>> profiles(
        n_cats, std::vector<double>(stopwords.size(), 0.0));
    for (std::size_t d = 0; d < corpus.size(); ++d) {
      auto& profile = profiles[static_cast<std::size_t>(labels[d])];
      for (const auto& t : tc.word_tokens[d]) {
        auto it = stop_index.find(t);
        if (it != stop_index.end()) profile[it->second] += 1.0;
      }
    }
    for (auto& profile : profiles) {
      double total = 0;
      for (double x : profile) total += x;
      if (total > 0) {
        for (double& x : profile) x /= total;
      }
    }
    double total = 0;
    std::size_t pairs = 0;
    for (std::size_t a = 0; a < n_cats; ++a) {
      for (std::size_t b = a + 1; b < n_cats; ++b) {
        total += detail::cosine(profiles[a], profiles[b]);
        ++pairs;
      }
    }
    sem = total / static_cast<double>(pairs);
  }

  double vdr = v / static_cast<double>(corpus.size());
  double awl = token_instances > 0 ? token_chars / token_instances : 0.0;
  return {svb, uvb, mrh, ci, sem, v, vdr, awl};
}

// Mean per-document fraction of tokens per POS tag; punctuation runs are
// tagged PUNCT by rule, lexicon misses count as untagged.
inline std::array<double, 12> pos_profile(const LabeledCorpus& corpus,
                                          const PosLexicon& lexicon) {
  std::array<double, 12> acc{};
  std::size_t counted_docs = 0;
  for (const auto& doc : corpus.documents) {
    auto tokens = tokenize_words(doc.text).tokens;
    if (tokens.empty()) continue;
    std::array<double, 12> frac{};
    for (const auto& t : tokens) {
      if (is_punct_token(t)) {
        frac[10] += 1;
        continue;
      }
      auto it = lexicon.word_tag.find(t);
      if (it != lexicon.word_tag.end()) {
        frac[it->second] += 1;
      } else {
        frac[11] += 1;
      }
    }
    for (auto& f : frac) f /= static_cast<double>(tokens.size());
    for (std::size_t i = 0; i < 12; ++i) acc[i] += frac[i];
    ++counted_docs;
  }
  if (counted_docs > 0) {
    for (auto& a : acc) a /= static_cast<double>(counted_docs);
  }
  return acc;
}

// ---------------------------------------------------------------- extraction

// The canonical 72-entry meta-feature vector. A pure function of corpus
// content, the seed and the lexicon: document order and corpus name never
// leak in.
inline MetaFeatureVector extract(const LabeledCorpus& corpus,
                                 std::uint64_t seed,
                                 const PosLexicon& pos_lexicon =
                                     bundled_pos_lexicon()) {
  if (corpus.documents.empty()) {
    throw ValidationError("extract: empty corpus");
  }
  if (pos_lexicon.empty()) {
    throw ValidationError("extract: empty POS lexicon");
  }
  LabeledCorpus canon = detail::canonicalize(corpus);
  auto tc = detail::tokenize_corpus(canon);
  const auto labels = canon.label_ids();
  const int n_classes = static_cast<int>(canon.categories.size());

  std::vector<double> out;
  out.reserve(kMetaFeatureCount);

  // (a) general
  out.push_back(static_cast<double>(canon.size()));
  out.push_back(static_cast<double>(canon.categories.size()));

  // (b) hardness
  for (double x : hardness_features(canon)) out.push_back(x);

  // (c) statistical: vocabulary frequencies, documents-per-category,
  // words-per-document
  auto push_stats = [&out](const std::vector<double>& values) {
    StatsBlock s = stats_block(values);
    out.insert(out.end(), {s.min, s.max, s.mean, s.std_dev, s.skewness,
                           s.kurtosis, s.mean_std_ratio, s.entropy});
  };
  {
    std::vector<double> vocab_freqs;
    vocab_freqs.reserve(tc.vocabulary.size());
    for (const auto& [term, freq] : tc.vocabulary) {
      vocab_freqs.push_back(static_cast<double>(freq));
    }
    if (vocab_freqs.empty()) vocab_freqs.push_back(0.0);
    push_stats(vocab_freqs);

    std::vector<double> docs_per_cat;
    for (std::size_t c : canon.category_counts()) {
      docs_per_cat.push_back(static_cast<double>(c));
    }
    push_stats(docs_per_cat);

    std::vector<double> words_per_doc;
    words_per_doc.reserve(canon.size());
    for (const auto& toks : tc.word_tokens) {
      words_per_doc.push_back(static_cast<double>(toks.size()));
    }
    push_stats(words_per_doc);
  }

  // (d) landmarking over the top-1000-term TF matrix
  {
    std::vector<std::pair<std::string, std::size_t>> terms(
        tc.vocabulary.begin(), tc.vocabulary.end());
    if (terms.size() > kLandmarkTermCap) {
      std::nth_element(terms.begin(),
                       terms.begin() + static_cast<long>(kLandmarkTermCap),
                       terms.end(), [](const auto& a, const auto& b) {
                         if (a.second != b.second) return a.second > b.second;
                         return a.first < b.first;
                       });
      terms.resize(kLandmarkTermCap);
      std::sort(terms.begin(), terms.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
    }
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t j = 0; j < terms.size(); ++j) index[terms[j].first] = j;

    if (terms.empty()) {
      out.insert(out.end(), {0.0, 0.0, 0.0, 0.0, 1.0});
    } else {
      std::vector<std::vector<std::pair<std::size_t, double>>> rows(canon.size());
      for (std::size_t d = 0; d < canon.size(); ++d) {
        std::map<std::size_t, double> counts;
        for (const auto& t : tc.word_tokens[d]) {
          auto it = index.find(t);
          if (it != index.end()) counts[it->second] += 1.0;
        }
        rows[d].assign(counts.begin(), counts.end());
      }
      FeatureMatrix tf;
      tf.is_sparse = true;
      tf.sparse = SparseMatrix::from_rows(terms.size(), rows);

      auto split = stratified_split(canon, kLandmarkTrainFraction,
                                    mix_seed(seed, fnv1a("landmark")));
      auto subset_matrix = [&](const std::vector<std::size_t>& idx) {
        std::vector<std::vector<std::pair<std::size_t, double>>> sub;
        sub.reserve(idx.size());
        for (std::size_t i : idx) sub.push_back(rows[i]);
        FeatureMatrix m;
        m.is_sparse = true;
        m.sparse = SparseMatrix::from_rows(terms.size(), sub);
        return m;
      };
      auto subset_labels = [&](const std::vector<std::size_t>& idx) {
        std::vector<int> sub;
        sub.reserve(idx.size());
        for (std::size_t i : idx) sub.push_back(labels[i]);
        return sub;
      };
      FeatureMatrix x_train = subset_matrix(split.train);
      FeatureMatrix x_test = subset_matrix(split.test);
      std::vector<int> y_train = subset_labels(split.train);
      std::vector<int> y_test = subset_labels(split.test);
      for (Landmarker kind : {Landmarker::kKnn1, Landmarker::kDecisionTree,
                              Landmarker::kDiagLda, Landmarker::kNaiveBayes}) {
        out.push_back(landmark_accuracy(kind, x_train, y_train, n_classes,
                                        x_test, y_test));
      }
      out.push_back(tf.sparse.fraction_zero());
    }
  }

  // (e) PC statistics over the TF-IDF document-term matrix
  {
    std::vector<std::vector<std::string>> docs_terms(canon.size());
    for (std::size_t d = 0; d < canon.size(); ++d) {
      docs_terms[d] = tc.word_tokens[d];
    }
    auto vocab = detail::FittedVocabulary::build(docs_terms);
    std::vector<double> lambdas;
    double total_var = 0;
    std::vector<double> sigmas;
    if (vocab.size() > 0 && canon.size() >= 2) {
      SparseMatrix tfidf = detail::apply_weighting(
          detail::count_matrix(vocab, docs_terms), Weighting::kTfidf,
          detail::smoothed_idf(vocab));
      auto pca = pca_explained(tfidf, kPcaComponentCap,
                               mix_seed(seed, fnv1a("pca")));
      lambdas = pca.explained_variances;
      sigmas = pca.singular_values;
      total_var = pca.total_variance;
    }
    double pcac = 1.0;
    if (total_var > 0 && !lambdas.empty()) {
      double prefix = 0;
      std::size_t m = 0;
      for (std::size_t i = 0; i < lambdas.size(); ++i) {
        prefix += lambdas[i];
        if (prefix >= kPcacVarianceTarget * total_var) {
          m = i + 1;
          break;
        }
      }
      pcac = m == 0 ? 1.0
                    : static_cast<double>(m) /
                          static_cast<double>(lambdas.size());
    }
    double sv_sum = 0, ev_sum = 0;
    for (double s : sigmas) sv_sum += s;
    for (double l : lambdas) ev_sum += l;
    out.push_back(pcac);
    out.push_back(sv_sum);
    out.push_back(total_var > 0 ? ev_sum / total_var : 0.0);
    out.push_back(ev_sum);
    out.push_back(lambdas.empty() ? 0.0 : lambdas.front());
    if (lambdas.empty()) {
      out.insert(out.end(), {0.0, 0.0, 0.0, 0.0, 0.0, 0.0});
    } else {
      StatsBlock s = stats_block(lambdas);
      out.insert(out.end(),
                 {s.min, s.max, s.mean, s.std_dev, s.skewness, s.kurtosis});
    }
  }

  // (f) lexical
  for (double x : pos_profile(canon, pos_lexicon)) out.push_back(x);

  // (g) readability, macro-averaged over documents that contain words
  {
    std::array<double, 10> acc{};
    std::size_t counted = 0;
    for (std::size_t d = 0; d < canon.size(); ++d) {
      if (tc.word_tokens[d].empty()) continue;
      auto scores = readability(canon.documents[d].text).as_vector();
      for (std::size_t i = 0; i < 10; ++i) acc[i] += scores[i];
      ++counted;
    }
    if (counted > 0) {
      for (auto& a : acc) a /= static_cast<double>(counted);
    }
    for (double x : acc) out.push_back(x);
  }

  if (out.size() != kMetaFeatureCount) {
    throw std::logic_error("meta-feature count drifted");
  }
  for (double v : out) {
    if (!std::isfinite(v)) throw std::logic_error("non-finite meta-feature");
  }

  MetaFeatureVector mv;
  mv.values = std::move(out);
  mv.metadata.seed = seed;
  mv.metadata.cap = corpus.per_category_cap;
  mv.metadata.stopwords_hash = hex64(stopword_list_hash());
  mv.metadata.pos_lexicon_hash = hex64(pos_lexicon.content_hash);
  mv.metadata.easy_words_hash = hex64(easy_words_hash());
  return mv;
}

}  // namespace autotext
