#include "autotext/represent.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <fstream>

#include "autotext/word2vec.hpp"
#include "test_support.hpp"

using namespace autotext;

namespace {

std::vector<double> dense_row(const FeatureMatrix& m, std::size_t i) {
  std::vector<double> buf(m.cols(), 0.0);
  m.for_each_in_row(i, [&](std::size_t j, double v) { buf[j] = v; });
  return buf;
}

TEST(Registry, DefaultHas47SpecsInDeclaredOrder) {
  auto reg = default_registry();
  ASSERT_EQ(reg.size(), 47u);
  EXPECT_EQ(reg.specs[0].describe(),
            "ngram(word, stopwords=none, range=(1,1), weight=binary)");
  std::size_t ngrams = 0, lda = 0, lsa = 0, lexicon = 0, embedding = 0;
  for (const auto& s : reg.specs) {
    switch (s.family) {
      case Family::kNgram: ++ngrams; break;
      case Family::kLda: ++lda; break;
      case Family::kLsa: ++lsa; break;
      case Family::kLexicon: ++lexicon; break;
      case Family::kEmbedding: ++embedding; break;
    }
  }
  EXPECT_EQ(ngrams, 36u);
  EXPECT_EQ(lda, 2u);
  EXPECT_EQ(lsa, 4u);
  EXPECT_EQ(lexicon, 1u);
  EXPECT_EQ(embedding, 4u);
  for (std::size_t i = 0; i < reg.size(); ++i) {
    EXPECT_EQ(reg.specs[i].id, static_cast<int>(i));
  }
}

TEST(Registry, FingerprintStableAcrossCalls) {
  EXPECT_EQ(default_registry().fingerprint(), default_registry().fingerprint());
}

TEST(Registry, FingerprintChangesWhenSpecsChange) {
  auto full = default_registry();
  auto filtered = filter_registry(full, false, false);
  EXPECT_EQ(filtered.size(), 44u);  // lexicon and 2 pretrained cells dropped
  EXPECT_NE(filtered.fingerprint(), full.fingerprint());
}

TEST(Registry, ConfigFileRoundTrip) {
  auto dir = support::temp_dir("registry_cfg");
  std::string path = dir + "/reg.json";
  {
    std::ofstream out(path);
    out << R"({"specs": [
      {"family": "ngram", "analyzer": "char", "stopwords": "english",
       "range": [1, 2], "weighting": "tfidf"},
      {"family": "lda", "topics": 8, "sweeps": 20},
      {"family": "embedding", "pretrained": false, "aggregation": "sum",
       "dim": 16, "epochs": 2}
    ]})";
  }
  auto reg = load_registry(path);
  ASSERT_EQ(reg.size(), 3u);
  EXPECT_EQ(reg.specs[0].family, Family::kNgram);
  EXPECT_EQ(reg.specs[0].analyzer, Analyzer::kChar);
  EXPECT_EQ(reg.specs[1].topics, 8u);
  EXPECT_EQ(reg.specs[2].aggregation, Aggregation::kSum);
}

TEST(Registry, BadRangeRejected) {
  auto dir = support::temp_dir("registry_bad");
  std::string path = dir + "/reg.json";
  {
    std::ofstream out(path);
    out << R"({"specs": [{"family": "ngram", "range": [2, 1],
               "weighting": "tf"}]})";
  }
  EXPECT_THROW(load_registry(path), ParseError);
}

TEST(Ngram, RawCountsExample) {
  auto train = support::make_corpus({{"a b", "x"}, {"a", "y"}});
  RepresentationSpec spec;
  spec.family = Family::kNgram;
  spec.weighting = Weighting::kTf;
  auto m = vectorize(spec, train, train, {}, 1);
  EXPECT_EQ(m.column_names, (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(dense_row(m, 0), (std::vector<double>{1, 1}));
  EXPECT_EQ(dense_row(m, 1), (std::vector<double>{1, 0}));
}

TEST(Ngram, TfidfHandComputedExample) {
  // idf(a) = ln(3/3)+1 = 1, idf(b) = ln(3/2)+1; row L2-normalized.
  auto train = support::make_corpus({{"a b", "x"}, {"a", "y"}});
  RepresentationSpec spec;
  spec.family = Family::kNgram;
  spec.weighting = Weighting::kTfidf;
  auto m = vectorize(spec, train, train, {}, 1);
  auto row = dense_row(m, 0);
  EXPECT_NEAR(row[0], 0.5797386715376657, 1e-9);
  EXPECT_NEAR(row[1], 0.8148024746671689, 1e-9);
  double norm = std::sqrt(row[0] * row[0] + row[1] * row[1]);
  EXPECT_NEAR(norm, 1.0, 1e-12);
}

TEST(Ngram, BinaryPresence) {
  auto train = support::make_corpus({{"w w w v", "x"}, {"v", "y"}});
  RepresentationSpec spec;
  spec.family = Family::kNgram;
  spec.weighting = Weighting::kBinary;
  auto m = vectorize(spec, train, train, {}, 1);
  EXPECT_EQ(dense_row(m, 0), (std::vector<double>{1, 1}));
  EXPECT_EQ(dense_row(m, 1), (std::vector<double>{1, 0}));
}

TEST(Ngram, WordBigramsJoinWithSpace) {
  auto train = support::make_corpus({{"a b c", "x"}, {"b c", "y"}});
  RepresentationSpec spec;
  spec.family = Family::kNgram;
  spec.ngram_lo = 1;
  spec.ngram_hi = 2;
  spec.weighting = Weighting::kTf;
  auto m = vectorize(spec, train, train, {}, 1);
  auto names = m.column_names;
  EXPECT_NE(std::find(names.begin(), names.end(), "a b"), names.end());
  EXPECT_NE(std::find(names.begin(), names.end(), "b c"), names.end());
}

TEST(Ngram, CharTrigrams) {
  auto train = support::make_corpus({{"abc", "x"}, {"bcd", "y"}});
  RepresentationSpec spec;
  spec.family = Family::kNgram;
  spec.analyzer = Analyzer::kChar;
  spec.ngram_lo = 1;
  spec.ngram_hi = 3;
  spec.weighting = Weighting::kTf;
  auto m = vectorize(spec, train, train, {}, 1);
  auto names = m.column_names;
  EXPECT_NE(std::find(names.begin(), names.end(), "abc"), names.end());
  EXPECT_NE(std::find(names.begin(), names.end(), "bc"), names.end());
}

TEST(Ngram, StopwordFilteringCanEmptyVocabulary) {
  auto train = support::make_corpus({{"the of and", "x"}, {"a an the", "y"}});
  RepresentationSpec spec;
  spec.family = Family::kNgram;
  spec.stopwords = StopwordSetting::kEnglish;
  spec.weighting = Weighting::kTf;
  EXPECT_THROW(vectorize(spec, train, train, {}, 1), RepresentationFailure);
}

TEST(Ngram, FitTransformSeparation) {
  auto train = support::make_corpus({{"seen words here", "x"}, {"more seen", "y"}});
  auto held = support::make_corpus({{"unseen vocabulary entirely", "x"},
                                    {"seen words", "y"}});
  RepresentationSpec spec;
  spec.family = Family::kNgram;
  spec.weighting = Weighting::kTf;
  auto fitted = fit_representation(spec, train, {}, 1);
  auto m1 = fitted->transform(train);
  auto m2 = fitted->transform(held);
  auto m3 = fitted->transform(train);
  EXPECT_EQ(m1.sparse.nnz(), m3.sparse.nnz());
  EXPECT_EQ(dense_row(m1, 0), dense_row(m3, 0));
  // Unseen terms vanish: the held-out first doc contains only one train term.
  EXPECT_EQ(m2.cols(), m1.cols());
}

TEST(Lsa, RankDeficientTrainGivesNearZeroSecondColumn) {
  auto train = support::make_corpus(
      {{"w w", "x"}, {"w w w w", "y"}, {"w", "x"}});
  RepresentationSpec spec;
  spec.family = Family::kLsa;
  spec.weighting = Weighting::kTf;
  spec.svd_dims = 2;
  auto m = vectorize(spec, train, train, {}, 3);
  ASSERT_EQ(m.cols(), 1u);  // k is capped at min(docs, vocab) = 1
  // With a single term the transform is exactly rank 1; nothing to assert
  // beyond shape and finiteness.
  EXPECT_TRUE(m.all_finite());
}

TEST(Lsa, SecondComponentNearZeroOnRankOneMatrix) {
  // Two distinct terms, but every document is a multiple of (1,1): the
  // second singular direction carries ~zero energy.
  auto train = support::make_corpus(
      {{"u v", "x"}, {"u v u v", "y"}, {"u v u v u v", "x"}});
  RepresentationSpec spec;
  spec.family = Family::kLsa;
  spec.weighting = Weighting::kTf;
  spec.svd_dims = 2;
  auto m = vectorize(spec, train, train, {}, 3);
  ASSERT_EQ(m.cols(), 2u);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    EXPECT_NEAR(dense_row(m, i)[1], 0.0, 1e-8);
  }
}

TEST(Lda, RowsAreSimplexPoints) {
  auto train = support::marker_corpus(6, 5);
  RepresentationSpec spec;
  spec.family = Family::kLda;
  spec.topics = 5;
  spec.lda_sweeps = 30;
  auto m = vectorize(spec, train, train, {}, 7);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto row = dense_row(m, i);
    double sum = 0;
    for (double v : row) {
      EXPECT_GE(v, 0.0);
      sum += v;
    }
    EXPECT_NEAR(sum, 1.0, 1e-9);
  }
}

TEST(Lda, DisjointVocabulariesSeparate) {
  // The symmetric prior is alpha = 50/K = 25, so theta can only concentrate
  // when documents are long: theta_max = (n + 25)/(n + 50) needs n >= 75
  // tokens on the majority topic to clear 0.8.
  std::vector<std::pair<std::string, std::string>> docs;
  Rng rng(3);
  const std::vector<std::string> vocab_a = {"apple", "banana", "cherry", "date"};
  const std::vector<std::string> vocab_b = {"engine", "wheel", "brake", "clutch"};
  for (int i = 0; i < 16; ++i) {
    for (bool a : {true, false}) {
      std::ostringstream text;
      const auto& vocab = a ? vocab_a : vocab_b;
      for (int t = 0; t < 120; ++t) {
        text << vocab[rng.below(vocab.size())] << " ";
      }
      docs.push_back({text.str(), a ? "A" : "B"});
    }
  }
  auto corpus = support::make_corpus(docs);
  RepresentationSpec spec;
  spec.family = Family::kLda;
  spec.topics = 2;
  spec.lda_sweeps = 150;
  auto m = vectorize(spec, corpus, corpus, {}, 11);
  // Majority-aligned: find the dominant topic of each class and require
  // >= 0.8 mass on it for every document of that class.
  std::vector<double> mass_a = dense_row(m, 0), mass_b = dense_row(m, 1);
  std::size_t topic_a = mass_a[0] > mass_a[1] ? 0 : 1;
  std::size_t topic_b = mass_b[0] > mass_b[1] ? 0 : 1;
  EXPECT_NE(topic_a, topic_b);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto row = dense_row(m, i);
    std::size_t want = corpus.documents[i].label == "A" ? topic_a : topic_b;
    EXPECT_GE(row[want], 0.8) << "doc " << i;
  }
}

TEST(Lda, EmptyDocumentGetsUniformVector) {
  auto train = support::make_corpus({{"apple apple", "x"}, {"pear pear", "y"}});
  auto held = support::make_corpus({{"zzz qqq", "x"}, {"apple", "y"}});
  RepresentationSpec spec;
  spec.family = Family::kLda;
  spec.topics = 4;
  spec.lda_sweeps = 10;
  auto fitted = fit_representation(spec, train, {}, 5);
  auto m = fitted->transform(held);
  // First held doc is entirely out of vocabulary -> uniform.
  auto row = dense_row(m, 0);
  for (double v : row) EXPECT_NEAR(v, 0.25, 1e-12);
}

TEST(Word2Vec, VectorsHaveRequestedDimension) {
  std::vector<std::vector<std::string>> docs = {
      {"x", "y", "x", "y"}, {"z", "w", "z", "w"}};
  Word2VecConfig cfg;
  cfg.dim = 12;
  cfg.epochs = 2;
  auto vecs = train_embeddings(docs, cfg, 3);
  EXPECT_EQ(vecs.dimension, 12u);
  for (const auto& [w, v] : vecs.vectors) EXPECT_EQ(v.size(), 12u);
}

TEST(Word2Vec, CooccurringTokensMoreSimilar) {
  std::vector<std::vector<std::string>> docs;
  for (int i = 0; i < 120; ++i) {
    docs.push_back({"x", "y"});
    docs.push_back({"z", "w"});
  }
  Word2VecConfig cfg;
  cfg.dim = 16;
  cfg.epochs = 10;
  auto vecs = train_embeddings(docs, cfg, 9);
  auto cosine = [&](const std::string& a, const std::string& b) {
    const auto& va = vecs.vectors.at(a);
    const auto& vb = vecs.vectors.at(b);
    double dot = 0, na = 0, nb = 0;
    for (std::size_t j = 0; j < va.size(); ++j) {
      dot += va[j] * vb[j];
      na += va[j] * va[j];
      nb += vb[j] * vb[j];
    }
    return dot / std::sqrt(na * nb);
  };
  EXPECT_GT(cosine("x", "y"), cosine("x", "z"));
}

TEST(Word2Vec, Aggregation) {
  WordVectors vecs;
  vecs.dimension = 2;
  vecs.vectors["a"] = {1.0f, 0.0f};
  vecs.vectors["b"] = {0.0f, 1.0f};
  auto mean = aggregate_embeddings({"a", "b"}, vecs, Aggregation::kMean);
  EXPECT_EQ(mean, (std::vector<double>{0.5, 0.5}));
  auto sum = aggregate_embeddings({"a", "b"}, vecs, Aggregation::kSum);
  EXPECT_EQ(sum, (std::vector<double>{1.0, 1.0}));
  auto oov = aggregate_embeddings({"q", "r"}, vecs, Aggregation::kMean);
  EXPECT_EQ(oov, (std::vector<double>{0.0, 0.0}));
}

TEST(WordVectorsIo, LoadAndValidate) {
  auto dir = support::temp_dir("wv");
  std::string path = dir + "/v.txt";
  {
    std::ofstream out(path);
    out << "2 3\nfoo 1 2 3\nbar 0.5 -1 2\n";
  }
  auto vecs = load_word_vectors(path);
  EXPECT_EQ(vecs.vectors.size(), 2u);
  EXPECT_EQ(vecs.dimension, 3u);
}

TEST(WordVectorsIo, DimensionMismatchNamesLine) {
  auto dir = support::temp_dir("wv_bad");
  std::string path = dir + "/v.txt";
  {
    std::ofstream out(path);
    out << "2 3\nfoo 1 2 3\nbar 1 2\n";
  }
  try {
    load_word_vectors(path);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
}

TEST(WordVectorsIo, DuplicateTokenLastWinsWithWarning) {
  auto dir = support::temp_dir("wv_dup");
  std::string path = dir + "/v.txt";
  {
    std::ofstream out(path);
    out << "2 2\nfoo 1 1\nfoo 9 9\n";
  }
  std::ostringstream warnings;
  auto vecs = load_word_vectors(path, &warnings);
  EXPECT_EQ(vecs.vectors.size(), 1u);
  EXPECT_FLOAT_EQ(vecs.vectors.at("foo")[0], 9.0f);
  EXPECT_NE(warnings.str().find("duplicate"), std::string::npos);
}

TEST(Lexicon, FeatureFractions) {
  CategoryLexicon lex;
  lex.categories.push_back({"pos", {"good"}});
  lex.categories.push_back({"neg", {"bad"}});
  auto v = lexicon_features({"good", "good", "bad", "x"}, lex);
  EXPECT_EQ(v, (std::vector<double>{0.5, 0.25}));
  EXPECT_EQ(lexicon_features({"zz"}, lex), (std::vector<double>{0.0, 0.0}));
  EXPECT_EQ(lexicon_features({}, lex), (std::vector<double>{0.0, 0.0}));
}

TEST(Lexicon, EmptyRejected) {
  CategoryLexicon lex;
  EXPECT_THROW(lexicon_features({"a"}, lex), ValidationError);
}

TEST(Lexicon, FileFormat) {
  auto dir = support::temp_dir("lex");
  std::string path = dir + "/l.txt";
  {
    std::ofstream out(path);
    out << "# comment\npos: good great Fine\nneg: bad poor\n";
  }
  auto lex = load_category_lexicon(path);
  ASSERT_EQ(lex.categories.size(), 2u);
  EXPECT_EQ(lex.categories[0].first, "pos");
  EXPECT_TRUE(lex.categories[0].second.count("fine"));  // lowercased
}

TEST(Embedding, PretrainedRequiresResources) {
  auto train = support::marker_corpus(3, 1);
  RepresentationSpec spec;
  spec.family = Family::kEmbedding;
  spec.pretrained = true;
  EXPECT_THROW(vectorize(spec, train, train, {}, 1), ValidationError);
}

TEST(Embedding, TrainedVectorizeShape) {
  auto train = support::marker_corpus(4, 8);
  RepresentationSpec spec;
  spec.family = Family::kEmbedding;
  spec.pretrained = false;
  spec.embedding_dim = 8;
  spec.embedding_epochs = 1;
  spec.aggregation = Aggregation::kSum;
  auto m = vectorize(spec, train, train, {}, 21);
  EXPECT_EQ(m.rows(), train.size());
  EXPECT_EQ(m.cols(), 8u);
  EXPECT_TRUE(m.all_finite());
}

TEST(Vectorize, EveryDefaultSpecSucceedsOrFailsCleanly) {
  auto corpus = support::marker_corpus(5, 604);
  WordVectors vecs;
  vecs.dimension = 4;
  vecs.vectors["alpha"] = {1, 0, 0, 0};
  vecs.vectors["omega"] = {0, 1, 0, 0};
  CategoryLexicon lex;
  lex.categories.push_back({"markers", {"alpha", "omega"}});
  Resources res;
  res.word_vectors = &vecs;
  res.lexicon = &lex;
  auto reg = default_registry();
  for (auto spec : reg.specs) {
    if (spec.family == Family::kLda) spec.lda_sweeps = 5;
    if (spec.family == Family::kEmbedding) {
      spec.embedding_dim = 8;
      spec.embedding_epochs = 1;
    }
    try {
      auto m = vectorize(spec, corpus, corpus, res, 3);
      EXPECT_EQ(m.rows(), corpus.size());
      EXPECT_TRUE(m.all_finite());
    } catch (const RepresentationFailure&) {
      // declared failure result, acceptable
    }
  }
}

}  // namespace
