#pragma once

#include <cstddef>
#include <vector>

#include "autotext/common.hpp"

namespace autotext {

// Latent Dirichlet allocation trained by collapsed Gibbs sampling with
// symmetric priors alpha = 50/K, beta = 0.01. Documents are token-id
// sequences over a dense vocabulary 0..V-1.
class LdaModel {
 public:
  struct Config {
    std::size_t topics = 50;
    std::size_t train_sweeps = 100;
    std::size_t infer_sweeps = 20;
  };

  static LdaModel fit(const std::vector<std::vector<std::size_t>>& docs,
                      std::size_t vocab_size, const Config& cfg,
                      std::uint64_t seed) {
    if (cfg.topics < 2) throw ValidationError("lda: topics must be >= 2");
    if (vocab_size == 0) {
      throw RepresentationFailure("lda: empty vocabulary");
    }
    LdaModel model;
    model.topics_ = cfg.topics;
    model.vocab_ = vocab_size;
    model.infer_sweeps_ = cfg.infer_sweeps;
    model.alpha_ = 50.0 / static_cast<double>(cfg.topics);
    model.beta_ = 0.01;
    model.topic_word_.assign(cfg.topics * vocab_size, 0);
    model.topic_totals_.assign(cfg.topics, 0);

    const std::size_t k = cfg.topics;
    Rng rng(seed);
    std::vector<std::vector<int>> assignments(docs.size());
    std::vector<std::vector<std::size_t>> doc_topic(docs.size());
    for (std::size_t d = 0; d < docs.size(); ++d) {
      assignments[d].resize(docs[d].size());
      doc_topic[d].assign(k, 0);
      for (std::size_t t = 0; t < docs[d].size(); ++t) {
        int z = static_cast<int>(rng.below(k));
        assignments[d][t] = z;
        doc_topic[d][z]++;
        model.topic_word_[z * vocab_size + docs[d][t]]++;
        model.topic_totals_[z]++;
      }
    }

    std::vector<double> probs(k);
    const double v_beta = static_cast<double>(vocab_size) * model.beta_;
    for (std::size_t sweep = 0; sweep < cfg.train_sweeps; ++sweep) {
      for (std::size_t d = 0; d < docs.size(); ++d) {
        for (std::size_t t = 0; t < docs[d].size(); ++t) {
          const std::size_t w = docs[d][t];
          int z = assignments[d][t];
          doc_topic[d][z]--;
          model.topic_word_[z * vocab_size + w]--;
          model.topic_totals_[z]--;
          double total = 0;
          for (std::size_t j = 0; j < k; ++j) {
            double p = (static_cast<double>(doc_topic[d][j]) + model.alpha_) *
                       (static_cast<double>(
                            model.topic_word_[j * vocab_size + w]) +
                        model.beta_) /
                       (static_cast<double>(model.topic_totals_[j]) + v_beta);
            probs[j] = p;
            total += p;
          }
          double u = rng.uniform() * total;
          int nz = static_cast<int>(k) - 1;
          double acc = 0;
          for (std::size_t j = 0; j < k; ++j) {
            acc += probs[j];
            if (u < acc) {
              nz = static_cast<int>(j);
              break;
            }
          }
          assignments[d][t] = nz;
          doc_topic[d][nz]++;
          model.topic_word_[nz * vocab_size + w]++;
          model.topic_totals_[nz]++;
        }
      }
    }
    return model;
  }

  std::size_t topics() const { return topics_; }

  // Per-document topic proportions with topic-word counts held fixed.
  // Empty documents get the uniform vector.
  std::vector<double> infer(const std::vector<std::size_t>& doc,
                            std::uint64_t seed) const {
    const std::size_t k = topics_;
    std::vector<double> theta(k, 1.0 / static_cast<double>(k));
    if (doc.empty()) return theta;

    Rng rng(seed);
    std::vector<int> assignment(doc.size());
    std::vector<std::size_t> doc_topic(k, 0);
    for (std::size_t t = 0; t < doc.size(); ++t) {
      int z = static_cast<int>(rng.below(k));
      assignment[t] = z;
      doc_topic[z]++;
    }
    std::vector<double> probs(k);
    const double v_beta = static_cast<double>(vocab_) * beta_;
    for (std::size_t sweep = 0; sweep < infer_sweeps_; ++sweep) {
      for (std::size_t t = 0; t < doc.size(); ++t) {
        const std::size_t w = doc[t];
        int z = assignment[t];
        doc_topic[z]--;
        double total = 0;
        for (std::size_t j = 0; j < k; ++j) {
          double p = (static_cast<double>(doc_topic[j]) + alpha_) *
                     (static_cast<double>(topic_word_[j * vocab_ + w]) + beta_) /
                     (static_cast<double>(topic_totals_[j]) + v_beta);
          probs[j] = p;
          total += p;
        }
        double u = rng.uniform() * total;
        int nz = static_cast<int>(k) - 1;
        double acc = 0;
        for (std::size_t j = 0; j < k; ++j) {
          acc += probs[j];
          if (u < acc) {
            nz = static_cast<int>(j);
            break;
          }
        }
        assignment[t] = nz;
        doc_topic[nz]++;
      }
    }
    const double denom =
        static_cast<double>(doc.size()) + static_cast<double>(k) * alpha_;
    for (std::size_t j = 0; j < k; ++j) {
      theta[j] = (static_cast<double>(doc_topic[j]) + alpha_) / denom;
    }
    return theta;
  }

 private:
  std::size_t topics_ = 0;
  std::size_t vocab_ = 0;
  std::size_t infer_sweeps_ = 20;
  double alpha_ = 1.0;
  double beta_ = 0.01;
  std::vector<long> topic_word_;  // K x V
  std::vector<long> topic_totals_;
};

}  // namespace autotext
