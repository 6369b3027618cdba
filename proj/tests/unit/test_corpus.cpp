//
// smigen - Copyright 2026 The smigen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <gtest/gtest.h>

#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "smigen/chem/canonical.h"
#include "smigen/chem/kekulize.h"
#include "smigen/chem/smiles_parser.h"
#include "smigen/corpus/corpus.h"
#include "smigen/corpus/vocabulary.h"

namespace smigen::corpus {
namespace {

std::string key(const std::string &s) { return chem::canonical_key(chem::parse_valid(s)); }

TEST(Standardize, RemovesStereoBonds) {
  const Standardized st = standardize("C/C=C/C");
  ASSERT_EQ(st.components.size(), 1u);
  EXPECT_EQ(st.components[0], key("CC=CC"));
}

TEST(Standardize, SplitsComponents) {
  const Standardized st = standardize("CCO.Cl");
  ASSERT_EQ(st.components.size(), 2u);
  EXPECT_EQ(st.components[0], key("CCO"));
  EXPECT_EQ(st.components[1], "Cl");
}

TEST(Standardize, DropsChirality) {
  const Standardized st = standardize("[C@@H](C)(N)O");
  ASSERT_EQ(st.components.size(), 1u);
  EXPECT_EQ(st.components[0], key("C(C)(N)O"));
}

TEST(Standardize, CountsBrokenComponents) {
  const Standardized st = standardize("CCO.C1CC..C(C)(C)(C)(C)C");
  EXPECT_EQ(st.components.size(), 1u);
  EXPECT_EQ(st.dropped, 3);
}

TEST(Filter, OrganicSubset) {
  EXPECT_TRUE(filter_organic(chem::parse_valid("c1ccccc1")));
  EXPECT_FALSE(filter_organic(chem::parse_valid("OO")));
  EXPECT_FALSE(filter_organic(chem::kekulize(chem::parse("C[Si](C)(C)C"))));
  EXPECT_TRUE(filter_organic(chem::parse_valid("ClC(Br)I")));
}

TEST(Substitution, Examples) {
  EXPECT_EQ(substitute_chars("ClCCBr"), "LCCR");
  EXPECT_EQ(substitute_chars("c1cc[nH]c1"), "c1ccAc1");
  EXPECT_EQ(substitute_chars("CCO"), "CCO");
  EXPECT_EQ(restore_chars("LCCR"), "ClCCBr");
  EXPECT_EQ(restore_chars("c1ccAc1"), "c1cc[nH]c1");
}

TEST(Substitution, BijectiveOnCorpus) {
  const auto lines = read_smiles_lines(SMIGEN_TEST_DATA_DIR "/corpus_1k.smi");
  ASSERT_GT(lines.size(), 900u);
  for (const std::string &s : lines) EXPECT_EQ(restore_chars(substitute_chars(s)), s);
}

TEST(Augment, CanonicalCountIsIdentity) {
  std::vector<chem::MolGraph> mols = {chem::parse_valid("CCO"), chem::parse_valid("c1ccccc1")};
  const Augmented a = augment(mols, 1, 3);
  EXPECT_EQ(a.smiles.size(), 2u);
  EXPECT_DOUBLE_EQ(a.realized_factor, 1.0);
}

TEST(Augment, DeterministicAndIdempotent) {
  std::vector<chem::MolGraph> mols;
  for (const char *s : {"CC(=O)Nc1ccc(O)cc1", "c1ccc2[nH]ccc2c1", "OCC(O)CO", "CC"})
    mols.push_back(chem::parse_valid(s));
  const Augmented a = augment(mols, 5, 42), b = augment(mols, 5, 42);
  EXPECT_EQ(a.smiles, b.smiles);
  std::set<std::string> once(a.smiles.begin(), a.smiles.end());
  std::set<std::string> twice = once;
  twice.insert(b.smiles.begin(), b.smiles.end());
  EXPECT_EQ(once, twice);
  EXPECT_LT(a.realized_factor, 5.0);
  EXPECT_TRUE(std::is_sorted(a.smiles.begin(), a.smiles.end()));
}

TEST(Augment, EveryStringMapsToItsSource) {
  const auto lines = read_smiles_lines(SMIGEN_TEST_DATA_DIR "/corpus_1k.smi");
  std::vector<chem::MolGraph> mols;
  std::set<std::string> keys;
  for (std::size_t i = 0; i < 100; ++i) {
    mols.push_back(chem::parse_valid(lines[i]));
    keys.insert(chem::canonical_key(mols.back()));
  }
  const Augmented a = augment(mols, 4, 1);
  std::set<std::string> seen;
  for (const std::string &s : a.smiles) {
    const std::string k = key(s);
    EXPECT_TRUE(keys.count(k)) << s;
    seen.insert(k);
  }
  EXPECT_EQ(seen, keys);
}

TEST(Vocabulary, SmallCorpus) {
  const std::vector<std::string> corpus = {"CCO"};
  const Vocabulary v = build_vocabulary(corpus);
  EXPECT_EQ(v.size(), 5);
  EXPECT_EQ(v.index_of('_'), Vocabulary::kPad);
  EXPECT_EQ(v.index_of('<'), Vocabulary::kBos);
  EXPECT_EQ(v.index_of('>'), Vocabulary::kEos);
  EXPECT_TRUE(v.contains('C'));
  EXPECT_TRUE(v.contains('O'));
  EXPECT_EQ(v, build_vocabulary(corpus));
}

TEST(Vocabulary, SubstitutedCharactersAreTokens) {
  const std::vector<std::string> corpus = {"LCCR"};
  const Vocabulary v = build_vocabulary(corpus);
  EXPECT_TRUE(v.contains('L'));
  EXPECT_TRUE(v.contains('R'));
  EXPECT_FALSE(v.contains('l'));
}

TEST(Vocabulary, Errors) {
  EXPECT_THROW(build_vocabulary(std::vector<std::string>{}), CorpusError);
  EXPECT_THROW(build_vocabulary(std::vector<std::string>{"C<C"}), CorpusError);
}

TEST(Encode, TwoCharacterString) {
  const std::vector<std::string> corpus = {"CO"};
  const Vocabulary v = build_vocabulary(corpus);
  const EncodedDataset d = encode(corpus, v, 4);
  ASSERT_EQ(d.size(), 3u);
  const int pad = Vocabulary::kPad, bos = Vocabulary::kBos, eos = Vocabulary::kEos;
  const int c = v.index_of('C'), o = v.index_of('O');
  const std::vector<std::vector<int>> prefixes = {
      {pad, pad, pad, bos}, {pad, pad, bos, c}, {pad, bos, c, o}};
  const std::vector<int> labels = {c, o, eos};
  for (std::size_t p = 0; p < 3; ++p) {
    std::vector<int> got(4);
    d.prefix_tokens(p, got);
    EXPECT_EQ(got, prefixes[p]);
    EXPECT_EQ(d.label(p), labels[p]);
    EXPECT_EQ(d.prefix_length(p), static_cast<int>(p) + 1);
    const Eigen::MatrixXd oh = d.prefix_one_hot(p);
    EXPECT_EQ(oh.rows(), 4);
    EXPECT_EQ(oh.cols(), v.size());
    for (int r = 0; r < 4; ++r) EXPECT_DOUBLE_EQ(oh.row(r).sum(), 1.0);
    EXPECT_DOUBLE_EQ(d.label_one_hot(p).sum(), 1.0);
  }
}

TEST(Encode, PairCountClosedForm) {
  const auto lines = read_smiles_lines(SMIGEN_TEST_DATA_DIR "/corpus_1k.smi");
  std::vector<std::string> corpus;
  for (const auto &s : lines) corpus.push_back(substitute_chars(s));
  const Vocabulary v = build_vocabulary(corpus);
  for (int window : {5, 20, default_window(corpus, 200)}) {
    const EncodedDataset d = encode(corpus, v, window);
    std::size_t expected = 0;
    for (const auto &s : corpus) expected += s.size() + 1;
    EXPECT_EQ(d.size(), expected);
    EXPECT_EQ(d.source_count(), corpus.size());
  }
}

TEST(Encode, LongStringsSlide) {
  const std::vector<std::string> corpus = {"CCCCCCO"};
  const Vocabulary v = build_vocabulary(corpus);
  const EncodedDataset d = encode(corpus, v, 3);
  std::vector<int> got(3);
  d.prefix_tokens(7, got);
  const int c = v.index_of('C'), o = v.index_of('O');
  EXPECT_EQ(got, (std::vector<int>{c, c, o}));
  EXPECT_EQ(d.label(7), Vocabulary::kEos);
  EXPECT_EQ(d.prefix_length(7), 3);
}

TEST(Encode, UnknownCharacter) {
  const Vocabulary v = build_vocabulary(std::vector<std::string>{"CC"});
  EXPECT_THROW(encode(std::vector<std::string>{"CO"}, v, 4), CorpusError);
}

TEST(Window, Percentile) {
  std::vector<std::string> corpus;
  for (int len = 1; len <= 100; ++len) corpus.push_back(std::string(len, 'C'));
  EXPECT_EQ(default_window(corpus, 500), 95 + 2);
  EXPECT_EQ(default_window(corpus, 50), 50);
}

TEST(Config, Validation) {
  CorpusConfig c;
  EXPECT_NO_THROW(c.validate());
  c.use_canonical_only = false;
  c.augmentation_attempts = 0;
  EXPECT_THROW(c.validate(), CorpusError);
}

}  // namespace
}  // namespace smigen::corpus
