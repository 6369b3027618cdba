//
// smigen - Copyright 2026 The smigen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <gtest/gtest.h>

#include <cmath>
#include <set>
#include <string>

#include "oracles.h"
#include "smigen/chem/canonical.h"
#include "smigen/chem/element.h"
#include "smigen/chem/kekulize.h"
#include "smigen/chem/properties.h"
#include "smigen/chem/smiles_parser.h"
#include "smigen/corpus/corpus.h"
#include "smigen/util/random.h"

namespace smigen::chem {
namespace {

ParseErrorKind parse_error_of(const std::string &s) {
  try {
    parse(s);
  } catch (const ParseError &e) {
    return e.kind();
  }
  ADD_FAILURE() << s << " parsed";
  return ParseErrorKind::kSyntax;
}

std::string key(const std::string &s) { return canonical_key(parse_valid(s)); }

TEST(Parser, RingGraph) {
  const MolGraph m = parse("C1CCC1");
  EXPECT_EQ(m.num_atoms(), 4);
  EXPECT_EQ(m.num_bonds(), 4);
  for (int b = 0; b < m.num_bonds(); ++b) EXPECT_TRUE(m.bond_in_ring(b));
}

TEST(Parser, ErrorKinds) {
  EXPECT_EQ(parse_error_of("C1CC"), ParseErrorKind::kUnclosedRing);
  EXPECT_EQ(parse_error_of("C(C"), ParseErrorKind::kUnbalancedBranch);
  EXPECT_EQ(parse_error_of("CC)"), ParseErrorKind::kUnbalancedBranch);
  EXPECT_EQ(parse_error_of(""), ParseErrorKind::kEmptyInput);
  EXPECT_EQ(parse_error_of("CXC"), ParseErrorKind::kUnknownToken);
  EXPECT_EQ(parse_error_of("C11"), ParseErrorKind::kInvalidRingBond);
  EXPECT_EQ(parse_error_of("C="), ParseErrorKind::kSyntax);
  EXPECT_EQ(parse_error_of("CC.O"), ParseErrorKind::kUnknownToken);
}

TEST(Parser, SubstitutedHalogens) {
  const MolGraph m = parse_valid("LCCR");
  EXPECT_EQ(m.heavy_atom_count(), 4);
  EXPECT_EQ(m.atom(0).element, kChlorine);
  EXPECT_EQ(m.atom(3).element, kBromine);
  EXPECT_EQ(m.num_bonds(), 3);
}

TEST(Parser, SubstitutedPyrroleNitrogen) {
  EXPECT_EQ(key("c1ccAc1"), key("c1cc[nH]c1"));
}

TEST(Parser, BracketAtoms) {
  const MolGraph m = parse("[NH4+]");
  EXPECT_EQ(m.atom(0).formal_charge, 1);
  EXPECT_EQ(m.atom(0).total_h(), 4);
  EXPECT_EQ(parse("[O--]").atom(0).formal_charge, -2);
  EXPECT_EQ(parse("[C@@H](C)(N)O").atom(0).total_h(), 1);
}

TEST(Kekulize, Benzene) {
  const MolGraph m = kekulize(parse("c1ccccc1"));
  for (int i = 0; i < m.num_atoms(); ++i) {
    int doubles = 0;
    for (const Neighbor &nb : m.neighbors(i)) doubles += m.bond(nb.bond).kekule_order == 2;
    EXPECT_EQ(doubles, 1);
    EXPECT_EQ(m.atom(i).total_h(), 1);
  }
}

TEST(Kekulize, FiveRingWithoutDonorFails) {
  try {
    kekulize(parse("c1cccc1"));
    FAIL();
  } catch (const KekulizationError &e) {
    EXPECT_EQ(e.kind(), KekulizationErrorKind::kNoAssignment);
  }
  EXPECT_FALSE(testing::kekule_feasible_exhaustive(parse("c1cccc1")));
}

TEST(Kekulize, Pyrrole) {
  const MolGraph m = kekulize(parse("c1cc[nH]c1"));
  EXPECT_TRUE(valence_ok(m));
  EXPECT_TRUE(testing::kekule_feasible_exhaustive(parse("c1cc[nH]c1")));
}

TEST(Kekulize, AromaticOutsideRing) {
  EXPECT_THROW(kekulize(parse("cc")), KekulizationError);
}

TEST(Kekulize, FusedAndHetero) {
  for (const char *s : {"c1ccc2ccccc2c1", "c1ccncc1", "c1ccoc1", "c1ccsc1", "O=c1cc[nH]cc1",
                        "c1ccc2[nH]ccc2c1", "c1cnc2nc[nH]c2n1", "Cn1cnc2c1c(=O)n(C)c(=O)n2C"})
    EXPECT_TRUE(validate(s)) << s;
}

TEST(Validate, Examples) {
  EXPECT_TRUE(validate("CCO"));
  EXPECT_FALSE(validate("C(C)(C)(C)(C)C"));
  EXPECT_FALSE(validate("C1CC"));
  EXPECT_FALSE(validate("[Si](C)(C)C"));
  EXPECT_FALSE(validate("CC.CC"));
}

TEST(Validate, TotalOnPrintableBytes) {
  Rng rng(11);
  for (int trial = 0; trial < 20000; ++trial) {
    std::string s(1 + rng.below(20), ' ');
    for (char &c : s) c = static_cast<char>(32 + rng.below(95));
    (void)validate(s);
  }
  SUCCEED();
}

TEST(Canonical, SameMoleculeSameKey) {
  EXPECT_EQ(key("OCC"), key("CCO"));
  EXPECT_EQ(key("C(C)O"), key("CCO"));
  EXPECT_EQ(key("c1ccccc1O"), key("Oc1ccccc1"));
  EXPECT_NE(key("CCO"), key("COC"));
  EXPECT_EQ(key("C"), "C");
  EXPECT_EQ(key("C"), key("C"));
}

TEST(Canonical, RandomizeCco) {
  const MolGraph m = parse_valid("CCO");
  const std::set<std::string> allowed = {"CCO", "OCC", "C(C)O", "C(O)C"};
  Rng rng(3);
  std::set<std::string> seen;
  for (int i = 0; i < 200; ++i) {
    const std::string s = randomize(m, rng);
    EXPECT_TRUE(allowed.count(s)) << s;
    EXPECT_EQ(key(s), "CCO");
    seen.insert(s);
  }
  EXPECT_GE(seen.size(), 3u);
}

TEST(Canonical, RandomizeIsSeeded) {
  const MolGraph m = parse_valid("c1ccc(cc1)C(=O)NCCO");
  Rng a(5), b(5);
  for (int i = 0; i < 20; ++i) EXPECT_EQ(randomize(m, a), randomize(m, b));
}

TEST(Canonical, SymmetricMoleculeHasFewWritings) {
  const MolGraph m = parse_valid("CC");
  Rng rng(9);
  std::set<std::string> seen;
  for (int i = 0; i < 5; ++i) seen.insert(randomize(m, rng));
  EXPECT_LE(seen.size(), 2u);
}

TEST(Canonical, ChargedAtomsRoundTrip) {
  for (const char *s : {"C[N+](C)(C)C", "[O-]C(=O)CC", "c1cc[n+](C)cc1", "O=[N+]([O-])c1ccccc1",
                        "CS(=O)(=O)N", "c1ccc2c(c1)cccc2-c1ccccc1", "C#N", "C=C=C"}) {
    const std::string k = key(s);
    EXPECT_EQ(key(k), k) << s;
  }
}

TEST(Canonical, RequiresKekulizedGraph) {
  const MolGraph m = parse("c1ccccc1");
  const std::vector<int> prio = {0, 1, 2, 3, 4, 5};
  EXPECT_THROW(write_smiles(m, prio), std::invalid_argument);
}

TEST(Properties, Ethanol) {
  const PropertyVector p = properties(parse_valid("CCO"), "CCO");
  EXPECT_EQ(p.hac, 3);
  EXPECT_EQ(p.smiles_length, 3);
  EXPECT_NEAR(p.frac_o, 1.0 / 3.0, 1e-12);
  EXPECT_EQ(p.rotatable_bonds, 0);
  EXPECT_EQ(p.frac_cyclic, 0.0);
}

TEST(Properties, MethaneWeight) {
  EXPECT_NEAR(properties(parse_valid("C"), "C").mw, 12.011 + 4 * 1.008, 1e-9);
  EXPECT_NEAR(properties(parse_valid("C"), "C").mw, 16.043, 1e-9);
}

TEST(Properties, Benzene) {
  const PropertyVector p = properties(parse_valid("c1ccccc1"), "c1ccccc1");
  EXPECT_EQ(p.frac_aromatic, 1.0);
  EXPECT_EQ(p.frac_conjugated, 1.0);
  EXPECT_EQ(p.frac_cyclic, 1.0);
}

TEST(Properties, RotatableBonds) {
  EXPECT_EQ(properties(parse_valid("CCCC"), "CCCC").rotatable_bonds, 1);
  EXPECT_EQ(properties(parse_valid("CCCCC"), "CCCCC").rotatable_bonds, 2);
  EXPECT_EQ(properties(parse_valid("C1CCCCC1"), "C1CCCCC1").rotatable_bonds, 0);
  EXPECT_EQ(properties(parse_valid("c1ccccc1-c1ccccc1"), "").rotatable_bonds, 1);
}

TEST(Properties, LengthUsesRenderedString) {
  const std::string raw = "ClCCBr";
  const PropertyVector p = properties(parse_valid(raw), corpus::substitute_chars(raw));
  EXPECT_EQ(p.smiles_length, 4);
}

TEST(Properties, BoundsHold) {
  for (const char *s : {"CCO", "c1ccccc1C(=O)O", "C=CC=C", "OCC(N)C(=O)O", "FC(F)(F)c1ccncc1"}) {
    const PropertyVector p = properties(parse_valid(s), s);
    for (double f : {p.frac_cyclic, p.frac_conjugated, p.frac_aromatic, p.frac_c, p.frac_n,
                     p.frac_o}) {
      EXPECT_GE(f, 0.0);
      EXPECT_LE(f, 1.0);
    }
    EXPECT_LE(p.frac_aromatic, p.frac_conjugated);
    EXPECT_LE(p.frac_c + p.frac_n + p.frac_o, 1.0 + 1e-12);
    EXPECT_GT(p.mw, 0.0);
    EXPECT_EQ(p.hac, parse(s).num_atoms());
  }
}

}  // namespace
}  // namespace smigen::chem
