//
// smigen - Copyright 2026 The smigen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SMIGEN_MODEL_ARCHITECTURE_H_
#define SMIGEN_MODEL_ARCHITECTURE_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "smigen/nn/layers.h"
#include "smigen/nn/recurrent.h"

namespace smigen::model {

/// A: embedding -> encoding, unidirectional.
/// B: embedding -> encoding, bidirectional.
/// C: one embedding feeding k parallel encoders, merged.
/// D: k parallel embedding -> encoding chains, merged.
enum class Family { kA, kB, kC, kD };

class SpecError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct ArchitectureSpec {
  Family family = Family::kC;
  nn::CellKind unit = nn::CellKind::kLstm;
  bool bidirectional_embedding = true;
  bool bidirectional_encoding = true;
  int embedding_size = 128;
  int encoding_size = 64;
  int encoding_layer_count = 4;
  int embedding_layer_count = 1;
  nn::MergeKind merge = nn::MergeKind::kConcatenate;
  double dropout_rate = 0.3;

  /// Throws SpecError for combinations outside the four families.
  void validate() const;

  int embedding_width() const {
    return (bidirectional_embedding ? 2 : 1) * embedding_size;
  }
  int encoding_width() const { return (bidirectional_encoding ? 2 : 1) * encoding_size; }
  bool merged() const { return family == Family::kC || family == Family::kD; }
  /// Width entering the dropout/dense head.
  int head_width() const;
};

/// Trainable scalars for a spec and vocabulary size, from layer shapes:
///   LSTM direction: 4H(I + H) + 4H
///   GRU direction:  3H(I + H) + 6H
///   learnable merge: one logit per branch
///   dense: W*V + V
std::int64_t parameter_count(const ArchitectureSpec &spec, int vocab_size);

std::string_view to_string(Family family);
std::string_view to_string(nn::CellKind kind);
std::string_view to_string(nn::MergeKind kind);
Family parse_family(std::string_view s);
nn::CellKind parse_cell(std::string_view s);
nn::MergeKind parse_merge(std::string_view s);

nlohmann::json to_json(const ArchitectureSpec &spec);
/// Missing keys keep their defaults.
ArchitectureSpec spec_from_json(const nlohmann::json &j);

}  // namespace smigen::model

#endif  // SMIGEN_MODEL_ARCHITECTURE_H_
