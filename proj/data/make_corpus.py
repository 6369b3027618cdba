"""Regenerates the bundled SMILES corpora from the MOSES training set.

Only needed to rebuild data/*.smi; the C++ project does not depend on RDKit.

    python make_corpus.py moses_train.csv.gz
"""
import gzip
import random
import sys

from rdkit import Chem, RDLogger
from rdkit.Chem import BRICS

RDLogger.DisableLog("rdApp.*")

ORGANIC = {"C", "N", "O", "S", "F", "Cl", "Br", "I", "B"}


def fragments(smiles):
    mol = Chem.MolFromSmiles(smiles)
    if mol is None:
        return
    for frag in BRICS.BRICSDecompose(mol):
        fm = Chem.MolFromSmiles(frag)
        if fm is None:
            continue
        fm = Chem.DeleteSubstructs(fm, Chem.MolFromSmarts("[#0]"))
        try:
            Chem.SanitizeMol(fm)
            out = Chem.MolToSmiles(Chem.MolFromSmiles(Chem.MolToSmiles(fm)))
        except Exception:
            continue
        if out:
            yield out


def clean(smiles):
    # keep bracket-free SMILES (besides [nH]) so every line passes the
    # organic-subset filter without charge handling
    stripped = smiles.replace("[nH]", "")
    return "[" not in stripped and "." not in smiles


def main(path):
    lines = [l.strip() for l in gzip.open(path, "rt")][1:]
    rng = random.Random(20191016)
    rng.shuffle(lines)
    frags = set()
    for smi in lines[:150000]:
        frags.update(fragments(smi))
    pool = []
    for f in sorted(frags):
        m = Chem.MolFromSmiles(f)
        if m is None or not clean(f):
            continue
        hac = m.GetNumHeavyAtoms()
        if 6 <= hac <= 18 and any(a.GetSymbol() == "C" for a in m.GetAtoms()):
            pool.append(f)
    rng.shuffle(pool)
    train = sorted(pool[:5000])
    test_frag = pool[5000:5700]
    test_full = [s for s in lines[200000:201000] if clean(s)][:300]
    with open("fragments_5k.smi", "w") as fh:
        fh.write("# BRICS fragments of MOSES training molecules, HAC 6-18\n")
        fh.write("\n".join(train) + "\n")
    with open("../tests/data/corpus_1k.smi", "w") as fh:
        fh.write("# 700 fragments + 300 drug-like molecules (MOSES)\n")
        fh.write("\n".join(sorted(test_frag) + test_full) + "\n")
    print(len(frags), len(pool))


if __name__ == "__main__":
    main(sys.argv[1])
