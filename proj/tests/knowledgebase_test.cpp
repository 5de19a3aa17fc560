#include "autotext/knowledgebase.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "test_support.hpp"

using namespace autotext;

namespace {

RepresentationRegistry tiny_registry() {
  RepresentationRegistry reg;
  auto add = [&reg](RepresentationSpec s) {
    s.id = static_cast<int>(reg.specs.size());
    reg.specs.push_back(s);
  };
  RepresentationSpec tf;
  tf.family = Family::kNgram;
  tf.weighting = Weighting::kTf;
  add(tf);
  RepresentationSpec tfidf = tf;
  tfidf.weighting = Weighting::kTfidf;
  add(tfidf);
  RepresentationSpec chars;
  chars.family = Family::kNgram;
  chars.analyzer = Analyzer::kChar;
  chars.ngram_lo = 1;
  chars.ngram_hi = 2;
  chars.weighting = Weighting::kTf;
  add(chars);
  RepresentationSpec sw;
  sw.family = Family::kNgram;
  sw.stopwords = StopwordSetting::kEnglish;
  sw.weighting = Weighting::kTf;
  add(sw);
  return reg;
}

std::vector<LabeledCorpus> tiny_corpora() {
  return {support::synthetic_corpus(0, 1, "topic_a", 6),
          support::synthetic_corpus(1, 2, "char_a", 6),
          support::synthetic_corpus(2, 3, "stop_a", 6)};
}

TEST(RankRow, StrictOrder) {
  EXPECT_EQ(rank_row({0.9, 0.8, 0.7}), (std::vector<double>{1, 2, 3}));
}

TEST(RankRow, MinTieRanking) {
  EXPECT_EQ(rank_row({0.9, 0.9, 0.7}), (std::vector<double>{1, 1, 3}));
}

TEST(RankRow, Singleton) { EXPECT_EQ(rank_row({0.5}), (std::vector<double>{1})); }

TEST(EvaluateRepresentation, MarkerCorpusHighAccuracy) {
  auto corpus = support::marker_corpus(12, 5);
  RepresentationSpec spec;
  spec.family = Family::kNgram;
  spec.weighting = Weighting::kTf;
  auto rec = evaluate_representation(corpus, spec, {}, 3, 13);
  EXPECT_FALSE(rec.failed);
  EXPECT_GE(rec.accuracy, 0.95);
}

TEST(EvaluateRepresentation, ShuffledLabelsNearChance) {
  auto corpus = support::marker_corpus(12, 5);
  Rng rng(99);
  std::vector<std::string> labels;
  for (const auto& d : corpus.documents) labels.push_back(d.label);
  rng.shuffle(labels);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    corpus.documents[i].label = labels[i];
  }
  RepresentationSpec spec;
  spec.family = Family::kNgram;
  spec.weighting = Weighting::kTf;
  auto rec = evaluate_representation(corpus, spec, {}, 3, 13);
  EXPECT_GE(rec.accuracy, 0.35);
  EXPECT_LE(rec.accuracy, 0.65);
}

TEST(EvaluateRepresentation, EmptyVocabularyIsFailureNotCrash) {
  auto corpus = support::make_corpus({{"the of", "x"},
                                      {"and a", "x"},
                                      {"an the", "x"},
                                      {"of of", "y"},
                                      {"the the", "y"},
                                      {"a an", "y"}});
  RepresentationSpec spec;
  spec.family = Family::kNgram;
  spec.stopwords = StopwordSetting::kEnglish;
  spec.weighting = Weighting::kTf;
  auto rec = evaluate_representation(corpus, spec, {}, 3, 13);
  EXPECT_TRUE(rec.failed);
  EXPECT_DOUBLE_EQ(rec.accuracy, 0.0);
}

TEST(BuildKnowledgeBase, ShapeAndInvariants) {
  auto kb = build_knowledge_base(tiny_corpora(), tiny_registry(), {}, {});
  EXPECT_EQ(kb.n_corpora(), 3u);
  EXPECT_EQ(kb.n_representations(), 4u);
  for (std::size_t i = 0; i < kb.n_corpora(); ++i) {
    EXPECT_EQ(rank_row(kb.accuracy[i]), kb.rank[i]);
    double min_rank = *std::min_element(kb.rank[i].begin(), kb.rank[i].end());
    EXPECT_DOUBLE_EQ(min_rank, 1.0);
  }
  kb.validate();
}

TEST(BuildKnowledgeBase, DeterministicRebuild) {
  auto a = build_knowledge_base(tiny_corpora(), tiny_registry(), {}, {});
  auto b = build_knowledge_base(tiny_corpora(), tiny_registry(), {}, {});
  EXPECT_EQ(a.accuracy, b.accuracy);
  EXPECT_EQ(a.meta, b.meta);
}

TEST(BuildKnowledgeBase, DuplicateCorpusGetsIdenticalRows) {
  auto corpora = tiny_corpora();
  LabeledCorpus dup = corpora[0];
  dup.name = "copy_of_first";
  corpora.push_back(dup);
  auto kb = build_knowledge_base(corpora, tiny_registry(), {}, {});
  EXPECT_EQ(kb.accuracy[0], kb.accuracy[3]);
  EXPECT_EQ(kb.meta[0], kb.meta[3]);
}

TEST(BuildKnowledgeBase, InfeasibleCorpusExcludedWithWarning) {
  auto corpora = tiny_corpora();
  corpora.push_back(support::make_corpus(
      {{"one doc", "a"}, {"two doc", "a"}, {"only", "b"}}, "tiny"));
  std::ostringstream log;
  BuildOptions opts;
  opts.log = &log;
  auto kb = build_knowledge_base(corpora, tiny_registry(), {}, opts);
  EXPECT_EQ(kb.n_corpora(), 3u);
  EXPECT_NE(log.str().find("tiny"), std::string::npos);
}

TEST(BuildKnowledgeBase, ResumeAfterInterruptIsByteIdentical) {
  auto dir = support::temp_dir("kb_resume");
  auto corpora = tiny_corpora();
  auto registry = tiny_registry();

  BuildOptions uninterrupted;
  uninterrupted.checkpoint_dir = dir + "/ckpt_a";
  std::ostringstream sink;
  uninterrupted.log = &sink;
  auto kb_a = build_knowledge_base(corpora, registry, {}, uninterrupted);
  save_kb(kb_a, dir + "/a.json");

  BuildOptions interrupted = uninterrupted;
  interrupted.checkpoint_dir = dir + "/ckpt_b";
  interrupted.interrupt_after_cells = 6;  // half of the 12 cells
  EXPECT_THROW(build_knowledge_base(corpora, registry, {}, interrupted),
               BuildInterrupted);
  interrupted.interrupt_after_cells.reset();
  auto kb_b = build_knowledge_base(corpora, registry, {}, interrupted);
  save_kb(kb_b, dir + "/b.json");

  std::ifstream fa(dir + "/a.json"), fb(dir + "/b.json");
  std::stringstream sa, sb;
  sa << fa.rdbuf();
  sb << fb.rdbuf();
  EXPECT_EQ(sa.str(), sb.str());
  EXPECT_FALSE(sa.str().empty());
}

TEST(BuildKnowledgeBase, ParallelJobsMatchSerial) {
  auto serial = build_knowledge_base(tiny_corpora(), tiny_registry(), {}, {});
  BuildOptions opts;
  opts.jobs = 3;
  auto parallel = build_knowledge_base(tiny_corpora(), tiny_registry(), {}, opts);
  EXPECT_EQ(serial.accuracy, parallel.accuracy);
}

TEST(SaveLoad, RoundTrip) {
  auto dir = support::temp_dir("kb_io");
  auto kb = build_knowledge_base(tiny_corpora(), tiny_registry(), {}, {});
  save_kb(kb, dir + "/kb.json");
  auto loaded = load_kb(dir + "/kb.json");
  EXPECT_EQ(loaded.accuracy, kb.accuracy);
  EXPECT_EQ(loaded.rank, kb.rank);
  EXPECT_EQ(loaded.meta, kb.meta);
  EXPECT_EQ(loaded.corpus_names, kb.corpus_names);
  EXPECT_EQ(loaded.registry_fingerprint, kb.registry_fingerprint);
  EXPECT_EQ(loaded.registry.size(), kb.registry.size());
}

TEST(SaveLoad, FingerprintMismatchNamesBoth) {
  auto dir = support::temp_dir("kb_fp");
  auto kb = build_knowledge_base(tiny_corpora(), tiny_registry(), {}, {});
  save_kb(kb, dir + "/kb.json");
  auto loaded = load_kb(dir + "/kb.json");
  auto other = default_registry();
  try {
    check_registry_compatible(loaded, other);
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    std::string msg = e.what();
    EXPECT_NE(msg.find(kb.registry_fingerprint), std::string::npos);
    EXPECT_NE(msg.find(other.fingerprint()), std::string::npos);
  }
}

TEST(SaveLoad, CorruptedFileRejected) {
  auto dir = support::temp_dir("kb_corrupt");
  {
    std::ofstream out(dir + "/kb.json");
    out << "{ definitely broken";
  }
  EXPECT_THROW(load_kb(dir + "/kb.json"), ParseError);
}

TEST(SaveLoad, TamperedRanksRejected) {
  auto kb = build_knowledge_base(tiny_corpora(), tiny_registry(), {}, {});
  kb.rank[0][0] += 1.0;
  EXPECT_THROW(kb.validate(), ValidationError);
}

TEST(RandomBaselineConsistency, RowMeanMatches) {
  auto kb = build_knowledge_base(tiny_corpora(), tiny_registry(), {}, {});
  // The expected accuracy of a uniform random recommender on corpus i is the
  // mean of row i; cross-module consistency with evaluate's random baseline.
  for (std::size_t i = 0; i < kb.n_corpora(); ++i) {
    double mean = 0;
    for (double a : kb.accuracy[i]) mean += a;
    mean /= static_cast<double>(kb.n_representations());
    EXPECT_GE(mean, 0.0);
    EXPECT_LE(mean, 1.0);
  }
}

}  // namespace
