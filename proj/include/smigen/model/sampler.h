//
// smigen - Copyright 2026 The smigen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SMIGEN_MODEL_SAMPLER_H_
#define SMIGEN_MODEL_SAMPLER_H_

#include <cstdint>
#include <string>
#include <vector>

#include "smigen/corpus/vocabulary.h"
#include "smigen/model/generator.h"

namespace smigen::model {

struct SampleOptions {
  // Generated characters before the string is cut off.
  int max_len = 0;
  double temperature = 1.0;
  // Context fed to the network: the last `window` tokens, as in training.
  int window = 0;
  // Samples advanced together in one batch.
  int chunk = 256;
};

/// max_len = window + 20%.
int default_max_len(int window);

/// Draws `n` strings. Sample i uses its own stream derived from (seed, i),
/// so results do not depend on `chunk`. At each step the whole context is
/// re-run through the network: bidirectional layers see the generated
/// prefix as the complete sequence. PAD and BOS are never drawn. Returned
/// strings have the character substitutions undone.
std::vector<std::string> generate_batch(Generator<float> &model,
                                        const corpus::Vocabulary &vocab, int n,
                                        const SampleOptions &options, std::uint64_t seed);

/// One sample driven by `rng`.
std::string sample(Generator<float> &model, const corpus::Vocabulary &vocab,
                   const SampleOptions &options, Rng &rng);

}  // namespace smigen::model

#endif  // SMIGEN_MODEL_SAMPLER_H_
