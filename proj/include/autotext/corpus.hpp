#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "autotext/common.hpp"

namespace autotext {

struct Document {
  std::string text;
  std::string label;
};

enum class Granularity { kWord, kChar };

struct TokenStream {
  std::vector<std::string> tokens;
  Granularity granularity = Granularity::kWord;
};

// Labeled corpus; categories kept in first-appearance order.
struct LabeledCorpus {
  std::string name;
  std::vector<Document> documents;
  std::vector<std::string> categories;
  std::optional<std::size_t> per_category_cap;

  std::size_t size() const { return documents.size(); }

  std::size_t category_index(const std::string& label) const {
    for (std::size_t i = 0; i < categories.size(); ++i) {
      if (categories[i] == label) return i;
    }
    throw ValidationError("unknown label: " + label);
  }

  std::vector<int> label_ids() const {
    std::unordered_map<std::string, int> idx;
    for (std::size_t i = 0; i < categories.size(); ++i) {
      idx[categories[i]] = static_cast<int>(i);
    }
    std::vector<int> out(documents.size());
    for (std::size_t i = 0; i < documents.size(); ++i) {
      out[i] = idx.at(documents[i].label);
    }
    return out;
  }

  std::vector<std::size_t> category_counts() const {
    std::vector<std::size_t> counts(categories.size(), 0);
    std::unordered_map<std::string, std::size_t> idx;
    for (std::size_t i = 0; i < categories.size(); ++i) idx[categories[i]] = i;
    for (const auto& d : documents) counts[idx.at(d.label)]++;
    return counts;
  }
};

struct Vocabulary {
  std::unordered_map<std::string, std::size_t> index;  // dense 0..V-1
  std::unordered_map<std::string, std::size_t> frequency;
};

// ---------------------------------------------------------------- tokenizing

// Lowercase, split on whitespace, strip leading/trailing ASCII punctuation
// from each chunk; stripped punctuation runs come out as their own tokens.
inline TokenStream tokenize_words(const std::string& text) {
  TokenStream out;
  out.granularity = Granularity::kWord;
  std::string lowered = ascii_lower(text);
  std::size_t i = 0;
  const std::size_t n = lowered.size();
  while (i < n) {
    while (i < n && std::isspace(static_cast<unsigned char>(lowered[i]))) ++i;
    std::size_t j = i;
    while (j < n && !std::isspace(static_cast<unsigned char>(lowered[j]))) ++j;
    if (j > i) {
      std::string chunk = lowered.substr(i, j - i);
      std::size_t b = 0, e = chunk.size();
      while (b < e && is_punct_char(chunk[b])) ++b;
      while (e > b && is_punct_char(chunk[e - 1])) --e;
      if (b == e) {
        out.tokens.push_back(chunk);  // pure punctuation run
      } else {
        if (b > 0) out.tokens.push_back(chunk.substr(0, b));
        out.tokens.push_back(chunk.substr(b, e - b));
        if (e < chunk.size()) out.tokens.push_back(chunk.substr(e));
      }
    }
    i = j;
  }
  return out;
}

// Lowercased UTF-8 code points, whitespace included; n-gram assembly is the
// vectorizer's job.
inline TokenStream tokenize_chars(const std::string& text) {
  TokenStream out;
  out.granularity = Granularity::kChar;
  std::string lowered = ascii_lower(text);
  std::size_t i = 0;
  while (i < lowered.size()) {
    std::size_t len = 1;
    unsigned char c = static_cast<unsigned char>(lowered[i]);
    if ((c & 0xf8) == 0xf0) len = 4;
    else if ((c & 0xf0) == 0xe0) len = 3;
    else if ((c & 0xe0) == 0xc0) len = 2;
    len = std::min(len, lowered.size() - i);
    out.tokens.push_back(lowered.substr(i, len));
    i += len;
  }
  return out;
}

// Split on . ! ? followed by whitespace or end of text; a non-empty text with
// no terminator is one sentence.
inline std::vector<std::string> split_sentences(const std::string& text) {
  std::vector<std::string> out;
  std::string current;
  const std::size_t n = text.size();
  for (std::size_t i = 0; i < n; ++i) {
    char c = text[i];
    current.push_back(c);
    bool terminator = (c == '.' || c == '!' || c == '?');
    bool boundary = terminator &&
                    (i + 1 == n ||
                     std::isspace(static_cast<unsigned char>(text[i + 1])));
    if (boundary) {
      std::string s = trim(current);
      if (!s.empty()) out.push_back(s);
      current.clear();
    }
  }
  std::string rest = trim(current);
  if (!rest.empty()) out.push_back(rest);
  return out;
}

// ---------------------------------------------------------------- hashing

inline std::uint64_t document_hash(const Document& d) {
  std::uint64_t h = fnv1a(d.text);
  h = fnv1a_u64(d.text.size(), h);
  h = fnv1a(d.label, h);
  return h;
}

// Order-invariant content hash: hash of the sorted per-document hashes. The
// corpus name is deliberately excluded.
inline std::uint64_t corpus_content_hash(const LabeledCorpus& corpus) {
  std::vector<std::uint64_t> hashes;
  hashes.reserve(corpus.documents.size());
  for (const auto& d : corpus.documents) hashes.push_back(document_hash(d));
  std::sort(hashes.begin(), hashes.end());
  std::uint64_t h = kFnvOffset;
  for (std::uint64_t x : hashes) h = fnv1a_u64(x, h);
  return h;
}

// ---------------------------------------------------------------- validation

inline void validate_document(const Document& d, std::size_t line_no) {
  if (trim(d.text).empty()) {
    throw ValidationError("record " + std::to_string(line_no) +
                          ": text is empty after trimming");
  }
  if (d.label.empty()) {
    throw ValidationError("record " + std::to_string(line_no) +
                          ": label is empty");
  }
}

inline void validate_corpus(const LabeledCorpus& corpus) {
  if (corpus.documents.empty()) {
    throw ValidationError("corpus '" + corpus.name + "' is empty");
  }
  if (corpus.categories.size() < 2) {
    throw ValidationError("corpus '" + corpus.name +
                          "' has fewer than 2 categories");
  }
}

// ---------------------------------------------------------------- loading

namespace detail {

inline void append_document(LabeledCorpus& corpus, Document doc,
                            std::optional<std::size_t> cap,
                            std::unordered_map<std::string, std::size_t>& per_cat) {
  std::size_t& count = per_cat[doc.label];
  if (cap && count >= *cap) return;
  if (count == 0) corpus.categories.push_back(doc.label);
  ++count;
  corpus.documents.push_back(std::move(doc));
}

// Minimal RFC-4180 reader: returns one record per call, empty optional at EOF.
inline std::optional<std::vector<std::string>> read_csv_record(
    std::istream& in, std::size_t& line_no) {
  if (in.peek() == EOF) return std::nullopt;
  std::vector<std::string> fields(1);
  bool quoted = false;
  bool any = false;
  char c;
  while (in.get(c)) {
    any = true;
    if (quoted) {
      if (c == '"') {
        if (in.peek() == '"') {
          in.get(c);
          fields.back().push_back('"');
        } else {
          quoted = false;
        }
      } else {
        if (c == '\n') ++line_no;
        fields.back().push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else if (c == '\r') {
      if (in.peek() == '\n') continue;
      fields.back().push_back(c);
    } else if (c == '\n') {
      ++line_no;
      return fields;
    } else {
      fields.back().push_back(c);
    }
  }
  if (quoted) {
    throw ParseError("line " + std::to_string(line_no) +
                     ": unterminated quoted CSV field");
  }
  if (!any) return std::nullopt;
  ++line_no;
  return fields;
}

}  // namespace detail

enum class CorpusFormat { kJsonl, kCsv };

inline CorpusFormat corpus_format_for_path(const std::string& path) {
  auto dot = path.rfind('.');
  std::string ext = dot == std::string::npos ? "" : ascii_lower(path.substr(dot + 1));
  if (ext == "csv") return CorpusFormat::kCsv;
  return CorpusFormat::kJsonl;
}

inline LabeledCorpus load_corpus(const std::string& path, CorpusFormat format,
                                 std::optional<std::size_t> cap = std::nullopt) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open corpus file: " + path);

  LabeledCorpus corpus;
  auto slash = path.find_last_of("/\\");
  corpus.name = slash == std::string::npos ? path : path.substr(slash + 1);
  auto dot = corpus.name.rfind('.');
  if (dot != std::string::npos) corpus.name = corpus.name.substr(0, dot);
  corpus.per_category_cap = cap;

  std::unordered_map<std::string, std::size_t> per_cat;

  if (format == CorpusFormat::kJsonl) {
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (trim(line).empty()) continue;
      nlohmann::json obj;
      try {
        obj = nlohmann::json::parse(line);
      } catch (const nlohmann::json::exception& e) {
        throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
      }
      if (!obj.is_object() || !obj.contains("text") || !obj.contains("label") ||
          !obj["text"].is_string() || !obj["label"].is_string()) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": record must be an object with string fields "
                         "'text' and 'label'");
      }
      Document doc{obj["text"].get<std::string>(),
                   obj["label"].get<std::string>()};
      validate_document(doc, line_no);
      detail::append_document(corpus, std::move(doc), cap, per_cat);
    }
  } else {
    std::size_t line_no = 1;
    auto header = detail::read_csv_record(in, line_no);
    if (!header || header->size() < 2 || (*header)[0] != "text" ||
        (*header)[1] != "label") {
      throw ParseError("line 1: CSV header must be 'text,label'");
    }
    while (auto rec = detail::read_csv_record(in, line_no)) {
      if (rec->size() == 1 && (*rec)[0].empty()) continue;
      if (rec->size() != 2) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": expected 2 fields, got " +
                         std::to_string(rec->size()));
      }
      Document doc{(*rec)[0], (*rec)[1]};
      validate_document(doc, line_no);
      detail::append_document(corpus, std::move(doc), cap, per_cat);
    }
  }

  validate_corpus(corpus);
  return corpus;
}

inline LabeledCorpus load_corpus(const std::string& path,
                                 std::optional<std::size_t> cap = std::nullopt) {
  return load_corpus(path, corpus_format_for_path(path), cap);
}

inline void save_corpus_jsonl(const LabeledCorpus& corpus,
                              const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write corpus file: " + path);
  for (const auto& d : corpus.documents) {
    nlohmann::json obj;
    obj["text"] = d.text;
    obj["label"] = d.label;
    out << obj.dump() << "\n";
  }
}

// ---------------------------------------------------------------- splits

struct SplitIndices {
  std::vector<std::size_t> train;
  std::vector<std::size_t> test;
};

namespace detail {

// Document indices per category, each list sorted by content so that the
// result does not depend on the order documents arrived in. Identical
// documents are interchangeable, so their relative order is immaterial.
inline std::vector<std::pair<std::string, std::vector<std::size_t>>>
content_sorted_category_indices(const LabeledCorpus& corpus) {
  std::map<std::string, std::vector<std::size_t>> by_cat;
  for (std::size_t i = 0; i < corpus.documents.size(); ++i) {
    by_cat[corpus.documents[i].label].push_back(i);
  }
  std::vector<std::pair<std::string, std::vector<std::size_t>>> out;
  for (auto& [label, indices] : by_cat) {
    std::vector<std::pair<std::uint64_t, std::size_t>> keyed;
    keyed.reserve(indices.size());
    for (std::size_t i : indices) {
      keyed.emplace_back(document_hash(corpus.documents[i]), i);
    }
    std::sort(keyed.begin(), keyed.end(),
              [&](const auto& a, const auto& b) {
                if (a.first != b.first) return a.first < b.first;
                return corpus.documents[a.second].text <
                       corpus.documents[b.second].text;
              });
    for (std::size_t k = 0; k < indices.size(); ++k) indices[k] = keyed[k].second;
    out.emplace_back(label, std::move(indices));
  }
  return out;
}

}  // namespace detail

// Deterministic stratified split; membership decided by document content, so
// permuting the input documents permutes only the returned index values, not
// which documents land where.
inline SplitIndices stratified_split(const LabeledCorpus& corpus,
                                     double train_fraction,
                                     std::uint64_t seed) {
  if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
    throw ValidationError("train_fraction must lie in (0,1)");
  }
  std::uint64_t content = corpus_content_hash(corpus);
  SplitIndices out;
  for (auto& [label, indices] :
       detail::content_sorted_category_indices(corpus)) {
    if (indices.size() < 2) {
      throw ValidationError("category '" + label +
                            "' has fewer than 2 documents");
    }
    Rng rng(mix_seed(seed, content, fnv1a(label)));
    rng.shuffle(indices);
    std::size_t n = indices.size();
    std::size_t n_train = static_cast<std::size_t>(
        std::ceil(train_fraction * static_cast<double>(n)));
    n_train = std::max<std::size_t>(1, std::min(n_train, n - 1));
    for (std::size_t k = 0; k < n; ++k) {
      (k < n_train ? out.train : out.test).push_back(indices[k]);
    }
  }
  std::sort(out.train.begin(), out.train.end());
  std::sort(out.test.begin(), out.test.end());
  return out;
}

// Stratified k folds; same order-invariance contract as stratified_split.
inline std::vector<SplitIndices> stratified_kfold(const LabeledCorpus& corpus,
                                                  std::size_t k,
                                                  std::uint64_t seed) {
  if (k < 2) throw ValidationError("k-fold requires k >= 2");
  std::uint64_t content = corpus_content_hash(corpus);
  auto per_cat = detail::content_sorted_category_indices(corpus);
  for (auto& [label, indices] : per_cat) {
    if (indices.size() < k) {
      throw ValidationError("category '" + label + "' has " +
                            std::to_string(indices.size()) +
                            " documents, fewer than k=" + std::to_string(k));
    }
  }
  std::vector<SplitIndices> folds(k);
  for (auto& [label, indices] : per_cat) {
    Rng rng(mix_seed(seed, content, fnv1a(label)));
    rng.shuffle(indices);
    for (std::size_t pos = 0; pos < indices.size(); ++pos) {
      std::size_t test_fold = pos % k;
      for (std::size_t f = 0; f < k; ++f) {
        (f == test_fold ? folds[f].test : folds[f].train)
            .push_back(indices[pos]);
      }
    }
  }
  for (auto& f : folds) {
    std::sort(f.train.begin(), f.train.end());
    std::sort(f.test.begin(), f.test.end());
  }
  return folds;
}

// Subset corpus preserving the parent's category order (so label ids stay
// aligned between train/test portions).
inline LabeledCorpus corpus_subset(const LabeledCorpus& corpus,
                                   const std::vector<std::size_t>& indices) {
  LabeledCorpus out;
  out.name = corpus.name;
  out.categories = corpus.categories;
  out.per_category_cap = corpus.per_category_cap;
  out.documents.reserve(indices.size());
  for (std::size_t i : indices) out.documents.push_back(corpus.documents[i]);
  return out;
}

}  // namespace autotext
