//
// smigen - Copyright 2026 The smigen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SMIGEN_MODEL_CHECKPOINT_H_
#define SMIGEN_MODEL_CHECKPOINT_H_

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "smigen/corpus/vocabulary.h"
#include "smigen/model/architecture.h"
#include "smigen/model/generator.h"
#include "smigen/nn/param.h"
#include "smigen/sqc/exam_record.h"

namespace smigen::model {

class CheckpointError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// File layout (little endian):
///   8 bytes  magic "SMIGENCK"
///   u32      format version
///   u64      header length in bytes
///   header   JSON: spec, vocabulary, window, epoch, exam history,
///            metadata and a tensor index {name, shape, offset, count}
///   payload  float32 values of every tensor, in index order
struct ModelCheckpoint {
  static constexpr std::uint32_t kFormatVersion = 1;

  ArchitectureSpec spec;
  corpus::Vocabulary vocab;
  int window = 0;
  int epoch = 0;
  std::vector<sqc::ExamRecord> exam_history;
  std::vector<nn::Tensor> parameters;
  nlohmann::json metadata = nlohmann::json::object();
  std::uint32_t format_version = kFormatVersion;
};

void save_checkpoint(const ModelCheckpoint &ckpt, const std::string &path);
ModelCheckpoint load_checkpoint(const std::string &path);

std::vector<nn::Tensor> export_parameters(Generator<float> &model);
/// Throws CheckpointError when names or shapes differ.
void import_parameters(Generator<float> &model, const std::vector<nn::Tensor> &tensors);

/// Builds a generator from the checkpoint and loads its weights.
Generator<float> restore_generator(const ModelCheckpoint &ckpt);

}  // namespace smigen::model

#endif  // SMIGEN_MODEL_CHECKPOINT_H_
