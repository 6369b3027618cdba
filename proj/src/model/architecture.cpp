//
// smigen - Copyright 2026 The smigen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "smigen/model/architecture.h"

namespace smigen::model {

void ArchitectureSpec::validate() const {
  if (embedding_size < 1 || encoding_size < 1)
    throw SpecError("layer sizes must be positive");
  if (!(dropout_rate >= 0.0 && dropout_rate < 1.0))
    throw SpecError("dropout_rate must be in [0, 1)");
  switch (family) {
  case Family::kA:
  case Family::kB:
    if (embedding_layer_count != 1 || encoding_layer_count != 1)
      throw SpecError("families A and B use one embedding and one encoding layer");
    if (family == Family::kA && (bidirectional_embedding || bidirectional_encoding))
      throw SpecError("family A is unidirectional");
    if (family == Family::kB && !(bidirectional_embedding && bidirectional_encoding))
      throw SpecError("family B is bidirectional");
    break;
  case Family::kC:
    if (embedding_layer_count != 1)
      throw SpecError("family C uses a single embedding layer");
    if (encoding_layer_count < 2)
      throw SpecError("family C needs at least two parallel encoders");
    break;
  case Family::kD:
    if (encoding_layer_count < 2 || embedding_layer_count != encoding_layer_count)
      throw SpecError("family D needs k >= 2 embedding and encoding layers");
    break;
  }
}

int ArchitectureSpec::head_width() const {
  if (merged() && merge == nn::MergeKind::kConcatenate)
    return encoding_layer_count * encoding_width();
  return encoding_width();
}

namespace {

std::int64_t recurrent_count(nn::CellKind kind, std::int64_t in, std::int64_t h,
                             bool bidirectional) {
  const std::int64_t one =
      kind == nn::CellKind::kLstm ? 4 * h * (in + h) + 4 * h : 3 * h * (in + h) + 6 * h;
  return bidirectional ? 2 * one : one;
}

}  // namespace

std::int64_t parameter_count(const ArchitectureSpec &spec, int vocab_size) {
  spec.validate();
  const std::int64_t v = vocab_size;
  const std::int64_t emb =
      recurrent_count(spec.unit, v, spec.embedding_size, spec.bidirectional_embedding);
  const std::int64_t enc = recurrent_count(spec.unit, spec.embedding_width(),
                                           spec.encoding_size, spec.bidirectional_encoding);
  std::int64_t total = spec.embedding_layer_count * emb + spec.encoding_layer_count * enc;
  if (spec.merged() && spec.merge == nn::MergeKind::kLearnableAverage)
    total += spec.encoding_layer_count;
  total += static_cast<std::int64_t>(spec.head_width()) * v + v;
  return total;
}

std::string_view to_string(Family family) {
  switch (family) {
  case Family::kA: return "A";
  case Family::kB: return "B";
  case Family::kC: return "C";
  case Family::kD: return "D";
  }
  return "?";
}

std::string_view to_string(nn::CellKind kind) {
  return kind == nn::CellKind::kLstm ? "lstm" : "gru";
}

std::string_view to_string(nn::MergeKind kind) {
  switch (kind) {
  case nn::MergeKind::kConcatenate: return "concatenate";
  case nn::MergeKind::kAverage: return "average";
  case nn::MergeKind::kLearnableAverage: return "learnable_average";
  }
  return "?";
}

Family parse_family(std::string_view s) {
  if (s == "A") return Family::kA;
  if (s == "B") return Family::kB;
  if (s == "C") return Family::kC;
  if (s == "D") return Family::kD;
  throw SpecError("unknown family '" + std::string(s) + "'");
}

nn::CellKind parse_cell(std::string_view s) {
  if (s == "lstm") return nn::CellKind::kLstm;
  if (s == "gru") return nn::CellKind::kGru;
  throw SpecError("unknown unit kind '" + std::string(s) + "'");
}

nn::MergeKind parse_merge(std::string_view s) {
  if (s == "concatenate") return nn::MergeKind::kConcatenate;
  if (s == "average") return nn::MergeKind::kAverage;
  if (s == "learnable_average") return nn::MergeKind::kLearnableAverage;
  throw SpecError("unknown merge mode '" + std::string(s) + "'");
}

nlohmann::json to_json(const ArchitectureSpec &spec) {
  return {
      {"family", to_string(spec.family)},
      {"unit_kind", to_string(spec.unit)},
      {"bidirectional_embedding", spec.bidirectional_embedding},
      {"bidirectional_encoding", spec.bidirectional_encoding},
      {"embedding_size", spec.embedding_size},
      {"encoding_size", spec.encoding_size},
      {"encoding_layer_count", spec.encoding_layer_count},
      {"embedding_layer_count", spec.embedding_layer_count},
      {"merge", to_string(spec.merge)},
      {"dropout_rate", spec.dropout_rate},
  };
}

ArchitectureSpec spec_from_json(const nlohmann::json &j) {
  ArchitectureSpec s;
  if (j.contains("family")) s.family = parse_family(j.at("family").get<std::string>());
  if (j.contains("unit_kind")) s.unit = parse_cell(j.at("unit_kind").get<std::string>());
  s.bidirectional_embedding = j.value("bidirectional_embedding", s.bidirectional_embedding);
  s.bidirectional_encoding = j.value("bidirectional_encoding", s.bidirectional_encoding);
  s.embedding_size = j.value("embedding_size", s.embedding_size);
  s.encoding_size = j.value("encoding_size", s.encoding_size);
  s.encoding_layer_count = j.value("encoding_layer_count", s.encoding_layer_count);
  s.embedding_layer_count = j.value("embedding_layer_count", s.embedding_layer_count);
  if (j.contains("merge")) s.merge = parse_merge(j.at("merge").get<std::string>());
  s.dropout_rate = j.value("dropout_rate", s.dropout_rate);
  return s;
}

}  // namespace smigen::model
