//
// smigen - Copyright 2026 The smigen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "smigen/corpus/corpus.h"

#include <algorithm>
#include <cctype>
#include <exception>
#include <fstream>

#include "smigen/chem/canonical.h"
#include "smigen/chem/element.h"
#include "smigen/chem/kekulize.h"
#include "smigen/chem/smiles_parser.h"
#include "smigen/util/random.h"

namespace smigen::corpus {

void CorpusConfig::validate() const {
  if (!use_canonical_only && augmentation_attempts < 1)
    throw CorpusError("augmentation_attempts must be >= 1");
  if (max_sequence_length < 1) throw CorpusError("max_sequence_length must be >= 1");
}

namespace {

std::string strip_stereo_bonds(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s)
    if (c != '/' && c != '\\') out += c;
  return out;
}

bool all_organic(const chem::MolGraph &mol) {
  for (const chem::Atom &a : mol.atoms())
    if (!chem::in_organic_subset(a.element)) return false;
  return true;
}

void replace_all(std::string &s, std::string_view from, std::string_view to) {
  std::size_t pos = 0;
  while ((pos = s.find(from, pos)) != std::string::npos) {
    s.replace(pos, from.size(), to);
    pos += to.size();
  }
}

}  // namespace

Standardized standardize(std::string_view raw_smiles) {
  Standardized out;
  const std::string cleaned = strip_stereo_bonds(raw_smiles);
  std::size_t begin = 0;
  while (begin <= cleaned.size()) {
    std::size_t end = cleaned.find('.', begin);
    if (end == std::string::npos) end = cleaned.size();
    const std::string_view part = std::string_view(cleaned).substr(begin, end - begin);
    begin = end + 1;
    if (part.empty()) {
      ++out.dropped;
      continue;
    }
    try {
      chem::MolGraph mol = chem::kekulize(chem::parse(part));
      // Elements without valence rules are left for filter_organic.
      if (all_organic(mol) && !chem::valence_ok(mol)) {
        ++out.dropped;
        continue;
      }
      out.components.push_back(chem::canonical_key(mol));
    } catch (const std::exception &) {
      ++out.dropped;
    }
  }
  return out;
}

bool filter_organic(const chem::MolGraph &mol) {
  bool carbon = false;
  for (const chem::Atom &a : mol.atoms()) {
    if (!chem::in_organic_subset(a.element)) return false;
    if (a.element == chem::kCarbon) carbon = true;
  }
  return carbon;
}

std::string substitute_chars(std::string_view smiles) {
  std::string s(smiles);
  replace_all(s, "[nH]", "A");
  replace_all(s, "Cl", "L");
  replace_all(s, "Br", "R");
  return s;
}

std::string restore_chars(std::string_view smiles) {
  std::string out;
  out.reserve(smiles.size() + 8);
  for (char c : smiles) {
    switch (c) {
    case 'L': out += "Cl"; break;
    case 'R': out += "Br"; break;
    case 'A': out += "[nH]"; break;
    default: out += c;
    }
  }
  return out;
}

Augmented augment(const std::vector<chem::MolGraph> &molecules, int attempts,
                  std::uint64_t seed) {
  if (attempts < 1) throw CorpusError("augmentation attempts must be >= 1");
  Augmented out;
  out.smiles.reserve(molecules.size() * static_cast<std::size_t>(attempts));
  for (std::size_t i = 0; i < molecules.size(); ++i) {
    Rng rng(mix_seed(seed, i));
    for (int k = 0; k < attempts; ++k)
      out.smiles.push_back(chem::randomize(molecules[i], rng));
  }
  std::sort(out.smiles.begin(), out.smiles.end());
  out.smiles.erase(std::unique(out.smiles.begin(), out.smiles.end()), out.smiles.end());
  out.realized_factor = molecules.empty()
                            ? 0.0
                            : static_cast<double>(out.smiles.size())
                                  / static_cast<double>(molecules.size());
  return out;
}

std::vector<std::string> read_smiles_lines(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw CorpusError("cannot read " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    const std::size_t tab = line.find('\t');
    if (tab != std::string::npos) line.resize(tab);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back())))
      line.pop_back();
    std::size_t lead = 0;
    while (lead < line.size() && std::isspace(static_cast<unsigned char>(line[lead])))
      ++lead;
    line.erase(0, lead);
    if (line.empty() || line[0] == '#') continue;
    lines.push_back(line);
  }
  return lines;
}

}  // namespace smigen::corpus
