//
// smigen - Copyright 2026 The smigen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "smigen/model/checkpoint.h"

#include <bit>
#include <cstring>
#include <fstream>
#include <iterator>

namespace smigen::model {

static_assert(std::endian::native == std::endian::little,
              "checkpoint I/O assumes a little-endian host");

namespace {

constexpr char kMagic[8] = {'S', 'M', 'I', 'G', 'E', 'N', 'C', 'K'};

template <class T>
void put(std::string &buf, T value) {
  char bytes[sizeof(T)];
  std::memcpy(bytes, &value, sizeof(T));
  buf.append(bytes, sizeof(T));
}

template <class T>
T take(const std::string &buf, std::size_t &pos) {
  if (pos + sizeof(T) > buf.size()) throw CheckpointError("truncated checkpoint");
  T value;
  std::memcpy(&value, buf.data() + pos, sizeof(T));
  pos += sizeof(T);
  return value;
}

}  // namespace

void save_checkpoint(const ModelCheckpoint &ckpt, const std::string &path) {
  nlohmann::json header;
  header["spec"] = to_json(ckpt.spec);
  header["vocabulary"] = ckpt.vocab.characters();
  header["window"] = ckpt.window;
  header["epoch"] = ckpt.epoch;
  header["metadata"] = ckpt.metadata;
  nlohmann::json history = nlohmann::json::array();
  for (const auto &r : ckpt.exam_history) history.push_back(sqc::to_json(r));
  header["exam_history"] = history;

  nlohmann::json index = nlohmann::json::array();
  std::uint64_t offset = 0;
  for (const nn::Tensor &t : ckpt.parameters) {
    index.push_back({{"name", t.name}, {"shape", t.shape}, {"offset", offset},
                     {"count", t.data.size()}});
    offset += t.data.size();
  }
  header["tensors"] = index;
  const std::string text = header.dump();

  std::string buf(kMagic, sizeof(kMagic));
  put<std::uint32_t>(buf, ckpt.format_version);
  put<std::uint64_t>(buf, text.size());
  buf += text;
  for (const nn::Tensor &t : ckpt.parameters)
    buf.append(reinterpret_cast<const char *>(t.data.data()), t.data.size() * sizeof(float));

  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw CheckpointError("cannot write " + path);
  out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
  if (!out) throw CheckpointError("write failed for " + path);
}

ModelCheckpoint load_checkpoint(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CheckpointError("cannot read " + path);
  const std::string buf((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (buf.size() < sizeof(kMagic) || std::memcmp(buf.data(), kMagic, sizeof(kMagic)) != 0)
    throw CheckpointError("not a checkpoint: " + path);
  std::size_t pos = sizeof(kMagic);

  ModelCheckpoint ckpt;
  ckpt.format_version = take<std::uint32_t>(buf, pos);
  if (ckpt.format_version != ModelCheckpoint::kFormatVersion)
    throw CheckpointError("unsupported checkpoint version "
                          + std::to_string(ckpt.format_version));
  const auto header_len = take<std::uint64_t>(buf, pos);
  if (pos + header_len > buf.size()) throw CheckpointError("truncated checkpoint header");
  nlohmann::json header;
  try {
    header = nlohmann::json::parse(buf.substr(pos, header_len));
  } catch (const nlohmann::json::exception &e) {
    throw CheckpointError(std::string("bad checkpoint header: ") + e.what());
  }
  pos += header_len;

  ckpt.spec = spec_from_json(header.at("spec"));
  ckpt.vocab = corpus::Vocabulary(header.at("vocabulary").get<std::string>());
  ckpt.window = header.at("window").get<int>();
  ckpt.epoch = header.at("epoch").get<int>();
  ckpt.metadata = header.value("metadata", nlohmann::json::object());
  for (const auto &r : header.at("exam_history"))
    ckpt.exam_history.push_back(sqc::exam_record_from_json(r));

  const std::size_t payload = pos;
  for (const auto &entry : header.at("tensors")) {
    nn::Tensor t;
    t.name = entry.at("name").get<std::string>();
    t.shape = entry.at("shape").get<std::vector<std::int64_t>>();
    const auto offset = entry.at("offset").get<std::uint64_t>();
    const auto count = entry.at("count").get<std::uint64_t>();
    const std::size_t begin = payload + offset * sizeof(float);
    if (begin + count * sizeof(float) > buf.size())
      throw CheckpointError("truncated tensor payload");
    t.data.resize(count);
    std::memcpy(t.data.data(), buf.data() + begin, count * sizeof(float));
    ckpt.parameters.push_back(std::move(t));
  }
  return ckpt;
}

std::vector<nn::Tensor> export_parameters(Generator<float> &model) {
  std::vector<nn::Tensor> out;
  for (auto *p : model.params()) out.push_back(nn::to_tensor(*p));
  return out;
}

void import_parameters(Generator<float> &model, const std::vector<nn::Tensor> &tensors) {
  const auto params = model.params();
  if (params.size() != tensors.size())
    throw CheckpointError("checkpoint tensor count does not match the model");
  for (std::size_t k = 0; k < params.size(); ++k) {
    auto &p = *params[k];
    const nn::Tensor &t = tensors[k];
    if (t.name != p.name || t.shape.size() != 2 || t.shape[0] != p.value.rows()
        || t.shape[1] != p.value.cols())
      throw CheckpointError("tensor '" + t.name + "' does not match '" + p.name + "'");
    std::memcpy(p.value.data(), t.data.data(), t.data.size() * sizeof(float));
  }
}

Generator<float> restore_generator(const ModelCheckpoint &ckpt) {
  Generator<float> model(ckpt.spec, ckpt.vocab.size());
  import_parameters(model, ckpt.parameters);
  return model;
}

}  // namespace smigen::model
