#pragma once

// Presentations of the picture group and of the unipotent group, words in
// the root generators, and the text export.

#include <string>
#include <string_view>
#include <vector>

#include "quiverpic/quiver.hpp"

namespace quiverpic {

struct Letter {
  Root root;
  int exp = 1;  // +1 or -1
  auto operator<=>(const Letter&) const = default;
};

struct GroupWord {
  std::vector<Letter> letters;

  static GroupWord gen(const Root& r, int exp = 1) { return GroupWord{{Letter{r, exp}}}; }

  GroupWord inverse() const;
  GroupWord reduced() const;  // free reduction
  GroupWord operator*(const GroupWord& other) const;
  std::string str() const;  // "x_0_1 x_1_2^-1", "1" when empty
  auto operator<=>(const GroupWord&) const = default;
};

/// [x, y] = y^-1 x y x^-1
GroupWord commutator(const GroupWord& x, const GroupWord& y);

/// Cyclically reduced, minimal over rotations of the word and its inverse.
/// Two relators define the same normal subgroup generator iff these agree.
GroupWord canonical_cyclic(const GroupWord& w);

struct Presentation {
  int n = 0;
  SignVector eps;
  std::string group;  // "g0" or "u"
  std::vector<Root> generators;
  std::vector<GroupWord> relators;

  bool operator==(const Presentation&) const = default;
};

Presentation g0_presentation(const SignVector& eps);
Presentation u_presentation(const SignVector& eps);

/// Deletes letters whose support (i, j] is not inside J, then reduces.
/// J is a set of vertices in (0, n].
GroupWord restrict_word(const GroupWord& word, const std::vector<int>& J);

/// Image of a word of the subquiver on (p, q] in the big quiver: indices
/// shift by p.
GroupWord include_word(const GroupWord& word, int p);

std::string export_gap(const Presentation& p);
Presentation parse_presentation(std::string_view text);

/// Free rank and torsion of the abelianization, via SNF of the exponent-sum
/// matrix.
struct Abelianization {
  std::size_t rank = 0;
  std::vector<std::string> torsion;
};
Abelianization abelianize(const Presentation& p);

}  // namespace quiverpic
