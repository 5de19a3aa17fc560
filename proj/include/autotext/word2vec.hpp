#pragma once

#include <cmath>
#include <cstddef>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "autotext/common.hpp"

namespace autotext {

struct WordVectors {
  std::size_t dimension = 0;
  std::unordered_map<std::string, std::vector<float>> vectors;
};

struct Word2VecConfig {
  std::size_t dim = 100;
  std::size_t epochs = 5;
  std::size_t window = 5;
  std::size_t negatives = 5;
  double initial_lr = 0.025;
};

namespace detail {

inline double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

}  // namespace detail

// Skip-gram with negative sampling. Single-threaded on purpose: results are
// reproducible from the seed alone.
inline WordVectors train_embeddings(
    const std::vector<std::vector<std::string>>& docs,
    const Word2VecConfig& cfg, std::uint64_t seed) {
  std::vector<std::string> id_to_word;
  std::unordered_map<std::string, std::size_t> word_to_id;
  std::vector<std::vector<std::size_t>> encoded(docs.size());
  std::vector<std::size_t> counts;
  std::size_t total_tokens = 0;
  for (std::size_t d = 0; d < docs.size(); ++d) {
    encoded[d].reserve(docs[d].size());
    for (const auto& w : docs[d]) {
      auto [it, inserted] = word_to_id.try_emplace(w, id_to_word.size());
      if (inserted) {
        id_to_word.push_back(w);
        counts.push_back(0);
      }
      counts[it->second]++;
      encoded[d].push_back(it->second);
      ++total_tokens;
    }
  }
  if (total_tokens == 0) {
    throw RepresentationFailure("word2vec: corpus has no tokens");
  }
  const std::size_t v = id_to_word.size();
  const std::size_t dim = cfg.dim;

  // Unigram^0.75 negative-sampling table.
  const std::size_t table_size = std::max<std::size_t>(v * 32, 1u << 16);
  std::vector<std::uint32_t> table(table_size);
  {
    double norm = 0;
    for (std::size_t i = 0; i < v; ++i) {
      norm += std::pow(static_cast<double>(counts[i]), 0.75);
    }
    std::size_t i = 0;
    double cum = std::pow(static_cast<double>(counts[0]), 0.75) / norm;
    for (std::size_t t = 0; t < table_size; ++t) {
      table[t] = static_cast<std::uint32_t>(i);
      if (static_cast<double>(t) / static_cast<double>(table_size) > cum &&
          i + 1 < v) {
        ++i;
        cum += std::pow(static_cast<double>(counts[i]), 0.75) / norm;
      }
    }
  }

  Rng rng(seed);
  std::vector<float> syn0(v * dim);
  std::vector<float> syn1(v * dim, 0.0f);
  for (auto& x : syn0) {
    x = static_cast<float>((rng.uniform() - 0.5) / static_cast<double>(dim));
  }

  const double total_work =
      static_cast<double>(total_tokens) * static_cast<double>(cfg.epochs);
  std::size_t processed = 0;
  std::vector<float> grad(dim);
  for (std::size_t epoch = 0; epoch < cfg.epochs; ++epoch) {
    for (const auto& doc : encoded) {
      for (std::size_t pos = 0; pos < doc.size(); ++pos) {
        double lr = cfg.initial_lr *
                    (1.0 - static_cast<double>(processed) / (total_work + 1.0));
        lr = std::max(lr, cfg.initial_lr * 1e-4);
        ++processed;
        const std::size_t center = doc[pos];
        const std::size_t reduced = 1 + rng.below(cfg.window);
        for (std::size_t off = 1; off <= reduced; ++off) {
          for (int dir = -1; dir <= 1; dir += 2) {
            long q = static_cast<long>(pos) + dir * static_cast<long>(off);
            if (q < 0 || q >= static_cast<long>(doc.size())) continue;
            const std::size_t context = doc[static_cast<std::size_t>(q)];
            float* in = &syn0[context * dim];
            std::fill(grad.begin(), grad.end(), 0.0f);
            for (std::size_t s = 0; s <= cfg.negatives; ++s) {
              std::size_t target;
              double label;
              if (s == 0) {
                target = center;
                label = 1.0;
              } else {
                target = table[rng.below(table_size)];
                if (target == center) continue;
                label = 0.0;
              }
              float* out = &syn1[target * dim];
              double dot = 0;
              for (std::size_t j = 0; j < dim; ++j) dot += in[j] * out[j];
              double g = (label - detail::sigmoid(dot)) * lr;
              for (std::size_t j = 0; j < dim; ++j) {
                grad[j] += static_cast<float>(g) * out[j];
                out[j] += static_cast<float>(g) * in[j];
              }
            }
            for (std::size_t j = 0; j < dim; ++j) in[j] += grad[j];
          }
        }
      }
    }
  }

  WordVectors result;
  result.dimension = dim;
  for (std::size_t i = 0; i < v; ++i) {
    result.vectors.emplace(
        id_to_word[i],
        std::vector<float>(syn0.begin() + static_cast<long>(i * dim),
                           syn0.begin() + static_cast<long>((i + 1) * dim)));
  }
  return result;
}

enum class Aggregation { kMean, kSum };

// Mean or sum of in-vocabulary token vectors; no hits gives the zero vector.
inline std::vector<double> aggregate_embeddings(
    const std::vector<std::string>& tokens, const WordVectors& vectors,
    Aggregation mode) {
  std::vector<double> acc(vectors.dimension, 0.0);
  std::size_t hits = 0;
  for (const auto& t : tokens) {
    auto it = vectors.vectors.find(t);
    if (it == vectors.vectors.end()) continue;
    ++hits;
    for (std::size_t j = 0; j < vectors.dimension; ++j) acc[j] += it->second[j];
  }
  if (mode == Aggregation::kMean && hits > 0) {
    for (double& x : acc) x /= static_cast<double>(hits);
  }
  return acc;
}

// Text word-vector format: header "count dim", then "token v1 .. vdim" lines.
inline WordVectors load_word_vectors(const std::string& path,
                                     std::ostream* warnings = nullptr) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open word-vector file: " + path);
  std::string line;
  if (!std::getline(in, line)) throw ParseError("line 1: empty vector file");
  std::istringstream header(line);
  std::size_t count = 0, dim = 0;
  if (!(header >> count >> dim) || dim == 0) {
    throw ParseError("line 1: header must be 'count dim'");
  }
  WordVectors out;
  out.dimension = dim;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    std::istringstream ss(line);
    std::string token;
    ss >> token;
    std::vector<float> vec(dim);
    for (std::size_t j = 0; j < dim; ++j) {
      if (!(ss >> vec[j])) {
        throw ParseError("line " + std::to_string(line_no) + ": expected " +
                         std::to_string(dim) + " values for token '" + token +
                         "'");
      }
    }
    double extra;
    if (ss >> extra) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": too many values for token '" + token + "'");
    }
    auto [it, inserted] = out.vectors.insert_or_assign(token, std::move(vec));
    (void)it;
    if (!inserted && warnings) {
      *warnings << "warning: duplicate token '" << token << "' at line "
                << line_no << ", keeping the last occurrence\n";
    }
  }
  return out;
}

inline void save_word_vectors(const WordVectors& vectors,
                              const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write word-vector file: " + path);
  out << vectors.vectors.size() << " " << vectors.dimension << "\n";
  for (const auto& [token, vec] : vectors.vectors) {
    out << token;
    for (float x : vec) out << " " << x;
    out << "\n";
  }
}

}  // namespace autotext
