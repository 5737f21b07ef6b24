#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "legendrian/composite.hpp"
#include "legendrian/mountain_range.hpp"

namespace legendrian {

enum class Move { Stay, Plus, Minus };  // S_0, S_+, S_-

struct PathLetter {
  Move move = Move::Stay;
  int exponent = 1;  // +1 stabilizes, -1 destabilizes; ignored for Stay

  friend bool operator==(const PathLetter& a, const PathLetter& b) {
    if (a.move != b.move) return false;
    return a.move == Move::Stay || a.exponent == b.exponent;
  }
};

// A word S_{e_k}^{h_k} ... S_{e_1}^{h_1}. Letters are kept in written order,
// so the last letter is applied first.
class PathWord {
 public:
  PathWord() = default;
  explicit PathWord(std::vector<PathLetter> written) : letters_(std::move(written)) {}

  const std::vector<PathLetter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  // The letter applied at step `step` (0-based).
  const PathLetter& applied(std::size_t step) const {
    return letters_[letters_.size() - 1 - step];
  }

  friend bool operator==(const PathWord&, const PathWord&) = default;

 private:
  std::vector<PathLetter> letters_;
};

// Negates every exponent; not the group inverse.
PathWord reverse(const PathWord& word);

// Applies `first`, then `second`.
PathWord concat(const PathWord& second, const PathWord& first);

// Tokens separated by whitespace, rightmost applied first:
//   token ::= ['S'] ('0' | '+' | '-') ['^-1' | '^1']
std::string format_word(const PathWord& word);
PathWord parse_word(std::string_view text);

// Realization set of the word started at a class of a simple range.
std::set<Point> realize(const PathWord& word, const MountainRange& range, Point start);

// Realization set over quotient nodes. Throws Error{Truncated} when a
// stabilization would step below the window floor.
std::set<std::size_t> realize(const PathWord& word, const QuotientPoset& poset,
                              std::size_t start);

// Multi-path condition for equivalence of two tuples: words[i] is realized
// from start factor i, some knot-respecting permutation matches the end
// factors, and at every step the letters are one S_s, one S_s^-1 and S_0
// otherwise. Throws Error{LengthMismatch}.
bool check_multipath(std::span<const PathWord> words, const TupleClass& start,
                     const TupleClass& end, const SumSpec& spec);

// Breadth-first search for a word w with l1_end in w(l1) and l2_end in
// reverse(w)(l2), keeping every factor at tb >= tb_floor and |w| <= max_len.
// Returns a shortest such word. Absence only means none exists within the
// bounds. Throws Error{InvariantMismatch} when l1#l2 and l1_end#l2_end have
// different tb or r.
// Lowest factor tb of any tuple of K1 # K2 with sum tb >= tb_min. A connecting
// path keeps the sum's tb fixed, so window floors are applied to factors.
int factor_floor(const MountainRange& k1, const MountainRange& k2, int tb_min);

std::optional<PathWord> find_connecting_path(const MountainRange& k1, Point l1, Point l1_end,
                                             const MountainRange& k2, Point l2, Point l2_end,
                                             int tb_floor, int max_len);

}  // namespace legendrian
