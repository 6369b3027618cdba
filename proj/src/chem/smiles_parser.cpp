//
// smigen - Copyright 2026 The smigen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "smigen/chem/smiles_parser.h"

#include <array>
#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "smigen/chem/element.h"

namespace smigen::chem {

std::string_view to_string(ParseErrorKind kind) {
  switch (kind) {
  case ParseErrorKind::kEmptyInput: return "EmptyInput";
  case ParseErrorKind::kUnknownToken: return "UnknownToken";
  case ParseErrorKind::kUnbalancedBranch: return "UnbalancedBranch";
  case ParseErrorKind::kUnclosedRing: return "UnclosedRing";
  case ParseErrorKind::kInvalidRingBond: return "InvalidRingBond";
  case ParseErrorKind::kSyntax: return "Syntax";
  }
  return "?";
}

ParseError::ParseError(ParseErrorKind kind, std::size_t position,
                       const std::string &msg)
    : std::runtime_error(std::string(to_string(kind)) + " at "
                         + std::to_string(position) + ": " + msg),
      kind_(kind), position_(position) { }

namespace {

struct RingOpening {
  int atom = -1;
  std::optional<BondOrder> order;
  std::size_t position = 0;
};

class Parser {
public:
  explicit Parser(std::string_view s) : s_(s) { }

  MolGraph run() {
    while (pos_ < s_.size()) step();

    if (pending_bond_)
      fail(ParseErrorKind::kSyntax, pos_, "bond at end of input");
    if (!branches_.empty())
      fail(ParseErrorKind::kUnbalancedBranch, branches_.back().position,
           "unmatched '('");
    for (const auto &ring : rings_)
      if (ring.atom >= 0)
        fail(ParseErrorKind::kUnclosedRing, ring.position,
             "ring closure never closed");
    if (mol_.num_atoms() == 0)
      fail(ParseErrorKind::kEmptyInput, 0, "no atoms");

    mol_.perceive_rings();
    // Implicit bonds between aromatic atoms that turn out not to be ring
    // bonds are single (biaryl links written without '-').
    for (int b = 0; b < mol_.num_bonds(); ++b) {
      Bond &bond = mol_.bond(b);
      if (bond.implicit && bond.order == BondOrder::kAromatic
          && !mol_.bond_in_ring(b))
        bond.order = BondOrder::kSingle;
    }
    return std::move(mol_);
  }

private:
  struct BranchFrame {
    int atom;
    std::size_t position;
    int atoms_at_open;
  };

  [[noreturn]] static void fail(ParseErrorKind kind, std::size_t pos,
                                const std::string &msg) {
    throw ParseError(kind, pos, msg);
  }

  void step() {
    const char c = s_[pos_];
    switch (c) {
    case '(': open_branch(); return;
    case ')': close_branch(); return;
    case '-': set_bond(BondOrder::kSingle); return;
    case '/':
    case '\\': set_bond(BondOrder::kSingle); return;
    case '=': set_bond(BondOrder::kDouble); return;
    case '#': set_bond(BondOrder::kTriple); return;
    case ':': set_bond(BondOrder::kAromatic); return;
    case '[': bracket_atom(); return;
    case '%': {
      if (pos_ + 2 >= s_.size() || !std::isdigit(s_[pos_ + 1])
          || !std::isdigit(s_[pos_ + 2]))
        fail(ParseErrorKind::kUnknownToken, pos_, "malformed %nn");
      const int digit = (s_[pos_ + 1] - '0') * 10 + (s_[pos_ + 2] - '0');
      ring_closure(digit, pos_);
      pos_ += 3;
      return;
    }
    default: break;
    }
    if (c >= '0' && c <= '9') {
      ring_closure(c - '0', pos_);
      ++pos_;
      return;
    }
    bare_atom();
  }

  void set_bond(BondOrder order) {
    if (prev_ < 0 || pending_bond_)
      fail(ParseErrorKind::kSyntax, pos_, "misplaced bond symbol");
    pending_bond_ = order;
    ++pos_;
  }

  void open_branch() {
    if (prev_ < 0 || pending_bond_)
      fail(ParseErrorKind::kSyntax, pos_, "branch without a preceding atom");
    branches_.push_back({prev_, pos_, mol_.num_atoms()});
    ++pos_;
  }

  void close_branch() {
    if (branches_.empty())
      fail(ParseErrorKind::kUnbalancedBranch, pos_, "unmatched ')'");
    if (pending_bond_)
      fail(ParseErrorKind::kSyntax, pos_, "bond before ')'");
    if (branches_.back().atoms_at_open == mol_.num_atoms())
      fail(ParseErrorKind::kSyntax, pos_, "empty branch");
    prev_ = branches_.back().atom;
    branches_.pop_back();
    ++pos_;
  }

  void ring_closure(int digit, std::size_t at) {
    if (prev_ < 0) fail(ParseErrorKind::kSyntax, at, "ring digit before atom");
    RingOpening &ring = rings_[digit];
    if (ring.atom < 0) {
      ring.atom = prev_;
      ring.order = pending_bond_;
      ring.position = at;
      pending_bond_.reset();
      return;
    }

    const int partner = ring.atom;
    std::optional<BondOrder> order = ring.order;
    if (pending_bond_) {
      if (order && *order != *pending_bond_)
        fail(ParseErrorKind::kInvalidRingBond, at, "conflicting ring bonds");
      order = pending_bond_;
    }
    if (partner == prev_)
      fail(ParseErrorKind::kInvalidRingBond, at, "ring closes on itself");
    if (mol_.find_bond(partner, prev_) >= 0)
      fail(ParseErrorKind::kInvalidRingBond, at, "duplicate ring bond");

    const bool implicit = !order.has_value();
    mol_.add_bond(partner, prev_, order.value_or(default_order(partner, prev_)),
                  implicit);
    ring = RingOpening {};
    pending_bond_.reset();
  }

  BondOrder default_order(int a, int b) const {
    return mol_.atom(a).aromatic && mol_.atom(b).aromatic ? BondOrder::kAromatic
                                                          : BondOrder::kSingle;
  }

  void attach(Atom atom) {
    const int idx = mol_.add_atom(atom);
    if (prev_ >= 0) {
      const bool implicit = !pending_bond_.has_value();
      mol_.add_bond(prev_, idx, pending_bond_.value_or(default_order(prev_, idx)),
                    implicit);
    }
    pending_bond_.reset();
    prev_ = idx;
  }

  void bare_atom() {
    const char c = s_[pos_];
    const char n = pos_ + 1 < s_.size() ? s_[pos_ + 1] : '\0';
    Atom atom;
    std::size_t len = 1;
    switch (c) {
    case 'B':
      if (n == 'r') {
        atom.element = kBromine;
        len = 2;
      } else {
        atom.element = kBoron;
      }
      break;
    case 'C':
      if (n == 'l') {
        atom.element = kChlorine;
        len = 2;
      } else {
        atom.element = kCarbon;
      }
      break;
    case 'N': atom.element = kNitrogen; break;
    case 'O': atom.element = kOxygen; break;
    case 'P': atom.element = kPhosphorus; break;
    case 'S': atom.element = kSulfur; break;
    case 'F': atom.element = kFluorine; break;
    case 'I': atom.element = kIodine; break;
    // Substituted single-character forms.
    case 'L': atom.element = kChlorine; break;
    case 'R': atom.element = kBromine; break;
    case 'A':
      atom.element = kNitrogen;
      atom.aromatic = true;
      atom.explicit_h = 1;
      break;
    case 'b': atom.element = kBoron; atom.aromatic = true; break;
    case 'c': atom.element = kCarbon; atom.aromatic = true; break;
    case 'n': atom.element = kNitrogen; atom.aromatic = true; break;
    case 'o': atom.element = kOxygen; atom.aromatic = true; break;
    case 'p': atom.element = kPhosphorus; atom.aromatic = true; break;
    case 's': atom.element = kSulfur; atom.aromatic = true; break;
    default:
      fail(ParseErrorKind::kUnknownToken, pos_,
           std::string("unexpected character '") + c + "'");
    }
    attach(atom);
    pos_ += len;
  }

  void bracket_atom() {
    const std::size_t start = pos_;
    const std::size_t close = s_.find(']', pos_);
    if (close == std::string_view::npos)
      fail(ParseErrorKind::kUnknownToken, start, "unterminated bracket atom");
    std::string_view body = s_.substr(pos_ + 1, close - pos_ - 1);
    std::size_t i = 0;
    auto bad = [&](const char *why) {
      fail(ParseErrorKind::kUnknownToken, start, why);
    };

    if (i < body.size() && std::isdigit(body[i]))
      bad("isotopes are not supported");

    Atom atom;
    atom.explicit_h = 0;
    if (i >= body.size()) bad("empty bracket atom");
    if (std::islower(body[i])) {
      // Aromatic symbols.
      const char a = body[i];
      switch (a) {
      case 'b': atom.element = kBoron; break;
      case 'c': atom.element = kCarbon; break;
      case 'n': atom.element = kNitrogen; break;
      case 'o': atom.element = kOxygen; break;
      case 'p': atom.element = kPhosphorus; break;
      case 's': atom.element = kSulfur; break;
      default: bad("unsupported aromatic symbol");
      }
      atom.aromatic = true;
      ++i;
    } else if (std::isupper(body[i])) {
      int z = 0;
      if (i + 1 < body.size() && std::islower(body[i + 1]))
        z = atomic_number(body.substr(i, 2));
      if (z != 0) {
        i += 2;
      } else {
        z = atomic_number(body.substr(i, 1));
        if (z == 0) bad("unknown element");
        ++i;
      }
      atom.element = z;
    } else {
      bad("unsupported bracket atom");
    }

    // Chirality is dropped.
    while (i < body.size() && body[i] == '@') ++i;
    if (i + 1 < body.size() && (body.substr(i, 2) == "TH" || body.substr(i, 2) == "AL"
                                || body.substr(i, 2) == "SP" || body.substr(i, 2) == "TB"
                                || body.substr(i, 2) == "OH")) {
      if (i == 0 || body[i - 1] != '@') bad("malformed chirality");
      i += 2;
      while (i < body.size() && std::isdigit(body[i])) ++i;
    }

    if (i < body.size() && body[i] == 'H') {
      ++i;
      int h = 1;
      if (i < body.size() && std::isdigit(body[i])) {
        h = body[i] - '0';
        ++i;
      }
      atom.explicit_h = h;
    }

    if (i < body.size() && (body[i] == '+' || body[i] == '-')) {
      const char sign = body[i];
      int charge = 1;
      ++i;
      if (i < body.size() && std::isdigit(body[i])) {
        charge = 0;
        while (i < body.size() && std::isdigit(body[i]))
          charge = charge * 10 + (body[i++] - '0');
      } else {
        while (i < body.size() && body[i] == sign) {
          ++charge;
          ++i;
        }
      }
      atom.formal_charge = sign == '+' ? charge : -charge;
    }

    if (i != body.size()) bad("unsupported bracket atom content");

    pos_ = close + 1;
    attach(atom);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  MolGraph mol_;
  int prev_ = -1;
  std::optional<BondOrder> pending_bond_;
  std::vector<BranchFrame> branches_;
  std::array<RingOpening, 100> rings_ {};
};

}  // namespace

MolGraph parse(std::string_view smiles) {
  if (smiles.empty()) throw ParseError(ParseErrorKind::kEmptyInput, 0, "empty");
  return Parser(smiles).run();
}

}  // namespace smigen::chem
