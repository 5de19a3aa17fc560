#pragma once

// Meta-learning toolkit for selecting text representations: corpus handling,
// meta-feature extraction, the representation grid, offline knowledge-base
// construction and the online recommendation strategies.

#include "autotext/common.hpp"
#include "autotext/corpus.hpp"
#include "autotext/evaluate.hpp"
#include "autotext/knowledgebase.hpp"
#include "autotext/lda.hpp"
#include "autotext/learners.hpp"
#include "autotext/metafeatures.hpp"
#include "autotext/numerics.hpp"
#include "autotext/readability.hpp"
#include "autotext/recommend.hpp"
#include "autotext/represent.hpp"
#include "autotext/word2vec.hpp"
