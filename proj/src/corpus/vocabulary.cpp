//
// smigen - Copyright 2026 The smigen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "smigen/corpus/vocabulary.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "smigen/corpus/corpus.h"

namespace smigen::corpus {

Vocabulary::Vocabulary(std::string characters) : chars_(std::move(characters)) {
  if (chars_.size() < 3 || chars_[kPad] != kPadChar || chars_[kBos] != kBosChar
      || chars_[kEos] != kEosChar)
    throw CorpusError("vocabulary must start with the reserved markers");
  index_.fill(-1);
  for (std::size_t i = 0; i < chars_.size(); ++i) {
    auto &slot = index_[static_cast<unsigned char>(chars_[i])];
    if (slot >= 0) throw CorpusError("duplicate vocabulary character");
    slot = static_cast<int>(i);
  }
}

Vocabulary build_vocabulary(std::span<const std::string> corpus) {
  if (corpus.empty()) throw CorpusError("EmptyCorpus");
  std::array<bool, 256> seen {};
  for (const std::string &s : corpus)
    for (char c : s) seen[static_cast<unsigned char>(c)] = true;
  for (char marker : {Vocabulary::kPadChar, Vocabulary::kBosChar, Vocabulary::kEosChar})
    if (seen[static_cast<unsigned char>(marker)])
      throw CorpusError(std::string("corpus contains reserved marker '") + marker + "'");

  std::string chars {Vocabulary::kPadChar, Vocabulary::kBosChar, Vocabulary::kEosChar};
  for (int c = 0; c < 256; ++c)
    if (seen[c]) chars += static_cast<char>(c);
  if (chars.size() == 3) throw CorpusError("EmptyCorpus");
  return Vocabulary(std::move(chars));
}

int default_window(std::span<const std::string> corpus, int cap) {
  if (corpus.empty()) throw CorpusError("EmptyCorpus");
  std::vector<std::size_t> lengths;
  lengths.reserve(corpus.size());
  for (const std::string &s : corpus) lengths.push_back(s.size());
  std::sort(lengths.begin(), lengths.end());
  // Nearest-rank percentile.
  const std::size_t rank = static_cast<std::size_t>(
      std::ceil(0.95 * static_cast<double>(lengths.size())));
  const int p95 = static_cast<int>(lengths[std::max<std::size_t>(rank, 1) - 1]);
  return std::min(p95 + 2, cap);
}

EncodedDataset::EncodedDataset(std::vector<std::int16_t> tokens,
                               std::vector<std::int64_t> starts, int window,
                               int vocab_size)
    : tokens_(std::move(tokens)), starts_(std::move(starts)), window_(window),
      vocab_size_(vocab_size) {
  for (std::size_t s = 0; s + 1 < starts_.size(); ++s) {
    const std::int64_t begin = starts_[s], end = starts_[s + 1];
    // Labels are every token after BOS.
    for (std::int64_t pos = begin + 1; pos < end; ++pos) {
      label_pos_.push_back(pos);
      lengths_.push_back(static_cast<std::int32_t>(
          std::min<std::int64_t>(pos - begin, window_)));
    }
  }
}

void EncodedDataset::prefix_tokens(std::size_t pair, std::span<int> out) const {
  const int len = lengths_[pair];
  const int pad = window_ - len;
  const std::int64_t from = label_pos_[pair] - len;
  for (int t = 0; t < pad; ++t) out[t] = Vocabulary::kPad;
  for (int t = 0; t < len; ++t) out[pad + t] = tokens_[from + t];
}

Eigen::MatrixXd EncodedDataset::prefix_one_hot(std::size_t pair) const {
  std::vector<int> ids(window_);
  prefix_tokens(pair, ids);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(window_, vocab_size_);
  for (int t = 0; t < window_; ++t) m(t, ids[t]) = 1.0;
  return m;
}

Eigen::VectorXd EncodedDataset::label_one_hot(std::size_t pair) const {
  Eigen::VectorXd v = Eigen::VectorXd::Zero(vocab_size_);
  v(label(pair)) = 1.0;
  return v;
}

EncodedDataset encode(std::span<const std::string> corpus, const Vocabulary &vocab,
                      int window) {
  if (window < 1) throw CorpusError("window must be >= 1");
  std::vector<std::int16_t> tokens;
  std::vector<std::int64_t> starts;
  starts.reserve(corpus.size() + 1);
  for (const std::string &s : corpus) {
    starts.push_back(static_cast<std::int64_t>(tokens.size()));
    tokens.push_back(Vocabulary::kBos);
    for (char c : s) {
      const int id = vocab.index_of(c);
      if (id < 3)
        throw CorpusError(std::string("UnknownCharacter '") + c + "'");
      tokens.push_back(static_cast<std::int16_t>(id));
    }
    tokens.push_back(Vocabulary::kEos);
  }
  starts.push_back(static_cast<std::int64_t>(tokens.size()));
  return EncodedDataset(std::move(tokens), std::move(starts), window, vocab.size());
}

}  // namespace smigen::corpus
