#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "autotext/common.hpp"
#include "autotext/corpus.hpp"
#include "autotext/data/easy_words_data.hpp"

namespace autotext {

inline const std::unordered_set<std::string>& easy_word_list() {
  static const std::unordered_set<std::string> set = [] {
    std::unordered_set<std::string> s;
    std::istringstream in(data::kEasyWords);
    std::string w;
    while (std::getline(in, w)) {
      if (!w.empty()) s.insert(w);
    }
    return s;
  }();
  return set;
}

inline std::uint64_t easy_words_hash() { return fnv1a(data::kEasyWords); }

// Vowel-group heuristic: maximal [aeiouy] runs, minus a silent trailing 'e',
// floored at one syllable per word.
inline std::size_t count_syllables(const std::string& word) {
  auto is_vowel = [](char c) {
    return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u' || c == 'y';
  };
  std::size_t runs = 0;
  bool in_run = false;
  for (char c : word) {
    if (is_vowel(c)) {
      if (!in_run) ++runs;
      in_run = true;
    } else {
      in_run = false;
    }
  }
  if (runs > 1 && !word.empty() && word.back() == 'e') --runs;
  return std::max<std::size_t>(runs, 1);
}

struct ReadabilityScores {
  double flesch_reading_ease = 0;
  double smog = 0;
  double flesch_kincaid = 0;
  double coleman_liau = 0;
  double ari = 0;
  double dale_chall = 0;
  double difficult_words = 0;
  double linsear_write = 0;
  double gunning_fog = 0;
  double consensus_grade = 0;

  std::vector<double> as_vector() const {
    return {flesch_reading_ease, smog,           flesch_kincaid,
            coleman_liau,        ari,            dale_chall,
            difficult_words,     linsear_write,  gunning_fog,
            consensus_grade};
  }
};

// The ten readability measures of one document. Words are the
// non-punctuation tokens; sentences come from split_sentences. A document
// with no words yields all-zero scores.
inline ReadabilityScores readability(const std::string& text) {
  if (trim(text).empty()) {
    throw ValidationError("readability: empty text");
  }
  ReadabilityScores r;
  std::vector<std::string> words;
  for (auto& t : tokenize_words(text).tokens) {
    if (!is_punct_token(t)) words.push_back(std::move(t));
  }
  const double s = static_cast<double>(std::max<std::size_t>(
      split_sentences(text).size(), 1));
  if (words.empty()) return r;
  const double w = static_cast<double>(words.size());

  double syllables = 0, letters = 0, poly = 0, easy_pts = 0, hard_pts = 0;
  double difficult = 0;
  for (const auto& word : words) {
    std::size_t sy = count_syllables(word);
    syllables += static_cast<double>(sy);
    for (char c : word) {
      if (std::isalnum(static_cast<unsigned char>(c))) letters += 1;
    }
    if (sy >= 3) {
      poly += 1;
      hard_pts += 3;
    } else {
      easy_pts += 1;
    }
    if (!easy_word_list().count(word)) difficult += 1;
  }

  r.flesch_reading_ease = 206.835 - 1.015 * (w / s) - 84.6 * (syllables / w);
  r.smog = 1.0430 * std::sqrt(poly * 30.0 / s) + 3.1291;
  r.flesch_kincaid = 0.39 * (w / s) + 11.8 * (syllables / w) - 15.59;
  r.coleman_liau =
      0.0588 * (letters / w * 100.0) - 0.296 * (s / w * 100.0) - 15.8;
  r.ari = 4.71 * (letters / w) + 0.5 * (w / s) - 21.43;
  double pct_difficult = difficult / w * 100.0;
  r.dale_chall = 0.1579 * pct_difficult + 0.0496 * (w / s);
  if (pct_difficult > 5.0) r.dale_chall += 3.6365;
  r.difficult_words = difficult;
  double linsear_raw = (easy_pts + hard_pts) / s;
  r.linsear_write = linsear_raw > 20.0 ? linsear_raw / 2.0
                                       : linsear_raw / 2.0 - 1.0;
  r.gunning_fog = 0.4 * ((w / s) + 100.0 * (poly / w));

  // Consensus: mode of the rounded grade-level measures, ties to the lower
  // grade.
  std::map<long, std::size_t> votes;
  for (double g : {r.smog, r.flesch_kincaid, r.coleman_liau, r.ari,
                   r.linsear_write, r.gunning_fog}) {
    votes[std::lround(g)]++;
  }
  long best_grade = 0;
  std::size_t best_votes = 0;
  for (const auto& [grade, count] : votes) {  // ascending grades
    if (count > best_votes) {
      best_votes = count;
      best_grade = grade;
    }
  }
  r.consensus_grade = static_cast<double>(best_grade);
  return r;
}

}  // namespace autotext
