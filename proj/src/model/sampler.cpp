//
// smigen - Copyright 2026 The smigen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "smigen/model/sampler.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "smigen/corpus/corpus.h"

namespace smigen::model {

using corpus::Vocabulary;

int default_max_len(int window) {
  return static_cast<int>(std::ceil(1.2 * static_cast<double>(window)));
}

namespace {

int draw(const float *probs, int size, Rng &rng) {
  double total = 0.0;
  for (int v = Vocabulary::kEos; v < size; ++v) total += probs[v];
  if (!(total > 0.0)) return Vocabulary::kEos;
  const double u = rng.uniform() * total;
  double acc = 0.0;
  int last = Vocabulary::kEos;
  for (int v = Vocabulary::kEos; v < size; ++v) {
    if (probs[v] <= 0.0f) continue;
    acc += probs[v];
    last = v;
    if (u < acc) return v;
  }
  return last;
}

}  // namespace

std::vector<std::string> generate_batch(Generator<float> &model, const Vocabulary &vocab,
                                        int n, const SampleOptions &options,
                                        std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("sample count must be >= 0");
  if (options.max_len < 1 || options.window < 1 || options.chunk < 1)
    throw std::invalid_argument("invalid sampling options");
  if (vocab.size() != model.vocab_size())
    throw std::invalid_argument("vocabulary does not match the model");

  std::vector<std::string> out(static_cast<std::size_t>(n));
  std::vector<int> tokens;
  for (int first = 0; first < n; first += options.chunk) {
    const int count = std::min(options.chunk, n - first);
    std::vector<Rng> rngs;
    std::vector<std::vector<int>> seqs(count, std::vector<int> {Vocabulary::kBos});
    std::vector<int> active(count);
    for (int i = 0; i < count; ++i) {
      rngs.emplace_back(mix_seed(seed, static_cast<std::uint64_t>(first + i)));
      active[i] = i;
    }

    for (int step = 0; step < options.max_len && !active.empty(); ++step) {
      // All active sequences have the same length.
      const int len = static_cast<int>(seqs[active.front()].size());
      const int T = std::min(len, options.window);
      const std::size_t B = active.size();
      tokens.resize(static_cast<std::size_t>(T) * B);
      for (std::size_t b = 0; b < B; ++b) {
        const auto &seq = seqs[active[b]];
        for (int t = 0; t < T; ++t)
          tokens[static_cast<std::size_t>(t) * B + b] = seq[len - T + t];
      }
      const nn::Mat<float> probs = model.predict(tokens, T, options.temperature);

      std::vector<int> still;
      for (std::size_t b = 0; b < B; ++b) {
        const int i = active[b];
        const int next = draw(probs.row(static_cast<Eigen::Index>(b)).data(),
                              vocab.size(), rngs[i]);
        if (next == Vocabulary::kEos) continue;
        seqs[i].push_back(next);
        still.push_back(i);
      }
      active.swap(still);
    }

    for (int i = 0; i < count; ++i) {
      std::string s;
      for (std::size_t t = 1; t < seqs[i].size(); ++t) s += vocab.character(seqs[i][t]);
      out[static_cast<std::size_t>(first + i)] = corpus::restore_chars(s);
    }
  }
  return out;
}

std::string sample(Generator<float> &model, const Vocabulary &vocab,
                   const SampleOptions &options, Rng &rng) {
  return generate_batch(model, vocab, 1, options, rng.next()).front();
}

}  // namespace smigen::model
