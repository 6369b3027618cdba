//
// smigen - Copyright 2026 The smigen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SMIGEN_CORPUS_VOCABULARY_H_
#define SMIGEN_CORPUS_VOCABULARY_H_

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

namespace smigen::corpus {

/// Character inventory. Reserved markers take indices 0..2, chemistry
/// characters follow in byte order.
class Vocabulary {
public:
  static constexpr char kPadChar = '_';
  static constexpr char kBosChar = '<';
  static constexpr char kEosChar = '>';
  static constexpr int kPad = 0;
  static constexpr int kBos = 1;
  static constexpr int kEos = 2;

  Vocabulary() = default;
  /// `characters` must start with the three markers.
  explicit Vocabulary(std::string characters);

  int size() const { return static_cast<int>(chars_.size()); }
  const std::string &characters() const { return chars_; }
  char character(int index) const { return chars_[index]; }
  /// -1 when absent.
  int index_of(char c) const { return index_[static_cast<unsigned char>(c)]; }
  bool contains(char c) const { return index_of(c) >= 0; }

  bool operator==(const Vocabulary &other) const { return chars_ == other.chars_; }

private:
  std::string chars_;
  std::array<int, 256> index_ {};
};

/// Throws CorpusError on an empty corpus or when a string contains a
/// reserved marker.
Vocabulary build_vocabulary(std::span<const std::string> corpus);

/// 95th-percentile string length + 2, capped at `cap`.
int default_window(std::span<const std::string> corpus, int cap);

/// Prefix -> next character pairs. Every string is wrapped as
/// BOS s EOS and yields len(s) + 1 pairs. Prefixes are the last `window`
/// tokens before the label, left padded with PAD.
class EncodedDataset {
public:
  EncodedDataset() = default;
  EncodedDataset(std::vector<std::int16_t> tokens,
                 std::vector<std::int64_t> starts, int window, int vocab_size);

  std::size_t size() const { return label_pos_.size(); }
  int window() const { return window_; }
  int vocab_size() const { return vocab_size_; }
  std::size_t source_count() const { return starts_.size() - 1; }

  int label(std::size_t pair) const { return tokens_[label_pos_[pair]]; }
  /// Number of non-PAD tokens in the prefix of `pair`.
  int prefix_length(std::size_t pair) const { return lengths_[pair]; }
  /// Token ids of the prefix, PAD-filled on the left; `out` has `window`
  /// entries.
  void prefix_tokens(std::size_t pair, std::span<int> out) const;

  /// Dense one-hot prefix (window x |V|); meant for tests and inspection.
  Eigen::MatrixXd prefix_one_hot(std::size_t pair) const;
  Eigen::VectorXd label_one_hot(std::size_t pair) const;

private:
  std::vector<std::int16_t> tokens_;  // concatenated wrapped sequences
  std::vector<std::int64_t> starts_;  // sequence offsets into tokens_
  std::vector<std::int64_t> label_pos_;
  std::vector<std::int32_t> lengths_;
  int window_ = 0;
  int vocab_size_ = 0;
};

/// Throws CorpusError (unknown character, window < 1).
EncodedDataset encode(std::span<const std::string> corpus, const Vocabulary &vocab,
                      int window);

}  // namespace smigen::corpus

#endif  // SMIGEN_CORPUS_VOCABULARY_H_
