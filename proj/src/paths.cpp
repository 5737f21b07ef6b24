#include "legendrian/paths.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <sstream>

#include "legendrian/error.hpp"

namespace legendrian {

namespace {

Sign sign_of(Move m) { return m == Move::Plus ? Sign::Plus : Sign::Minus; }

std::optional<Point> step(const MountainRange& range, Point x, const PathLetter& letter) {
  if (letter.move == Move::Stay) return x;
  const Sign s = sign_of(letter.move);
  if (letter.exponent > 0) return stabilize(x, s);
  return destabilize(range, x, s);
}

// Kuhn's augmenting paths; reach[i] lists the end positions start i can take.
bool perfect_matching(const std::vector<std::vector<std::size_t>>& reach, std::size_t n) {
  std::vector<std::size_t> owner(n, n);
  std::function<bool(std::size_t, std::vector<bool>&)> augment =
      [&](std::size_t i, std::vector<bool>& used) {
        for (const auto j : reach[i]) {
          if (used[j]) continue;
          used[j] = true;
          if (owner[j] == n || augment(owner[j], used)) {
            owner[j] = i;
            return true;
          }
        }
        return false;
      };
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<bool> used(n, false);
    if (!augment(i, used)) return false;
  }
  return true;
}

}  // namespace

PathWord reverse(const PathWord& word) {
  auto letters = word.letters();
  for (auto& l : letters) l.exponent = -l.exponent;
  return PathWord(std::move(letters));
}

PathWord concat(const PathWord& second, const PathWord& first) {
  auto letters = second.letters();
  letters.insert(letters.end(), first.letters().begin(), first.letters().end());
  return PathWord(std::move(letters));
}

std::string format_word(const PathWord& word) {
  std::string out;
  for (const auto& l : word.letters()) {
    if (!out.empty()) out += ' ';
    switch (l.move) {
      case Move::Stay: out += '0'; continue;
      case Move::Plus: out += '+'; break;
      case Move::Minus: out += '-'; break;
    }
    if (l.exponent < 0) out += "^-1";
  }
  return out;
}

PathWord parse_word(std::string_view text) {
  std::vector<PathLetter> letters;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    std::string_view t = token;
    if (!t.empty() && t.front() == 'S') t.remove_prefix(1);
    PathLetter letter;
    if (t.empty()) throw Error(ErrorCode::ParseError, "bad path token '" + token + "'");
    switch (t.front()) {
      case '0': letter.move = Move::Stay; break;
      case '+': letter.move = Move::Plus; break;
      case '-': letter.move = Move::Minus; break;
      default: throw Error(ErrorCode::ParseError, "bad path token '" + token + "'");
    }
    t.remove_prefix(1);
    if (t == "^-1") {
      letter.exponent = -1;
    } else if (t.empty() || t == "^1") {
      letter.exponent = 1;
    } else {
      throw Error(ErrorCode::ParseError, "bad exponent in path token '" + token + "'");
    }
    letters.push_back(letter);
  }
  return PathWord(std::move(letters));
}

std::set<Point> realize(const PathWord& word, const MountainRange& range, Point start) {
  std::set<Point> current{start};
  for (std::size_t k = 0; k < word.size() && !current.empty(); ++k) {
    std::set<Point> next;
    for (const Point x : current) {
      if (auto y = step(range, x, word.applied(k))) next.insert(*y);
    }
    current = std::move(next);
  }
  return current;
}

std::set<std::size_t> realize(const PathWord& word, const QuotientPoset& poset,
                              std::size_t start) {
  std::set<std::size_t> current{start};
  for (std::size_t k = 0; k < word.size() && !current.empty(); ++k) {
    const auto& letter = word.applied(k);
    if (letter.move == Move::Stay) continue;
    const Sign s = sign_of(letter.move);
    std::set<std::size_t> next;
    for (const auto id : current) {
      if (letter.exponent > 0) {
        if (poset.nodes()[id].point.tb <= poset.tb_min()) {
          throw Error(ErrorCode::Truncated, "path leaves the window below tb=" +
                                                std::to_string(poset.tb_min()));
        }
        for (const auto c : poset.children(id, s)) next.insert(c);
      } else {
        for (const auto p : poset.parents(id, s)) next.insert(p);
      }
    }
    current = std::move(next);
  }
  return current;
}

bool check_multipath(std::span<const PathWord> words, const TupleClass& start,
                     const TupleClass& end, const SumSpec& spec) {
  const auto n = static_cast<std::size_t>(spec.total());
  if (words.size() != n || start.factors.size() != n || end.factors.size() != n) {
    throw Error(ErrorCode::LengthMismatch, "need one word per factor (" + std::to_string(n) + ")");
  }
  const std::size_t k = n == 0 ? 0 : words.front().size();
  for (const auto& w : words) {
    if (w.size() != k) throw Error(ErrorCode::LengthMismatch, "words differ in length");
  }

  for (std::size_t step_index = 0; step_index < k; ++step_index) {
    int ups = 0;
    int downs = 0;
    std::optional<Move> move;
    bool ok = true;
    for (const auto& w : words) {
      const auto& l = w.applied(step_index);
      if (l.move == Move::Stay) continue;
      if (move && *move != l.move) ok = false;
      move = l.move;
      (l.exponent > 0 ? ups : downs) += 1;
    }
    if (!ok || ups != 1 || downs != 1) return false;
  }

  std::vector<std::vector<std::size_t>> reach(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto ends = realize(words[i], spec.range_at(i), start.factors[i]);
    for (std::size_t j = 0; j < n; ++j) {
      if (spec.summand_of(j) == spec.summand_of(i) && ends.count(end.factors[j]) > 0) {
        reach[i].push_back(j);
      }
    }
  }
  return perfect_matching(reach, n);
}

int factor_floor(const MountainRange& k1, const MountainRange& k2, int tb_min) {
  return tb_min - 1 - std::max(k1.top_tb(), k2.top_tb());
}

std::optional<PathWord> find_connecting_path(const MountainRange& k1, Point l1, Point l1_end,
                                             const MountainRange& k2, Point l2, Point l2_end,
                                             int tb_floor, int max_len) {
  if (l1.tb + l2.tb != l1_end.tb + l2_end.tb || l1.r + l2.r != l1_end.r + l2_end.r) {
    throw Error(ErrorCode::InvariantMismatch,
                "invariant mismatch: the two sums have different tb or r");
  }
  using State = std::pair<Point, Point>;
  struct Visit {
    State previous;
    PathLetter letter;
    int depth = 0;
  };
  const State source{l1, l2};
  const State target{l1_end, l2_end};
  std::map<State, Visit> visited{{source, {source, {}, 0}}};
  std::deque<State> queue{source};

  static constexpr PathLetter kMoves[] = {
      {Move::Plus, 1}, {Move::Plus, -1}, {Move::Minus, 1}, {Move::Minus, -1}};

  while (!queue.empty() && visited.count(target) == 0) {
    const State at = queue.front();
    queue.pop_front();
    const int depth = visited[at].depth;
    if (depth >= max_len) continue;
    for (const auto& letter : kMoves) {
      const auto x1 = step(k1, at.first, letter);
      const auto x2 = step(k2, at.second, PathLetter{letter.move, -letter.exponent});
      if (!x1 || !x2 || x1->tb < tb_floor || x2->tb < tb_floor) continue;
      const State next{*x1, *x2};
      if (visited.emplace(next, Visit{at, letter, depth + 1}).second) queue.push_back(next);
    }
  }
  if (visited.count(target) == 0) return std::nullopt;

  // Walking back from the target yields letters last-applied first, which is
  // the written order.
  std::vector<PathLetter> written;
  for (State s = target; s != source; s = visited[s].previous) written.push_back(visited[s].letter);
  return PathWord(std::move(written));
}

}  // namespace legendrian
