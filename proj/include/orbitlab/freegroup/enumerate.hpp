#pragma once

#include <cstdint>
#include <functional>
#include <future>
#include <span>
#include <vector>

#include "orbitlab/budget.hpp"
#include "orbitlab/freegroup/word.hpp"

namespace orbitlab::freegroup {

/// |S_n| = 2r(2r-1)^(n-1) for n >= 1, 1 for n = 0. Throws BudgetExceeded on
/// 64-bit overflow.
std::uint64_t sphere_size(int rank, int n);
/// |B_n| = sum_{k<=n} |S_k|.
std::uint64_t ball_size(int rank, int n);

/// Depth-first walk over the word ball B_n carrying a per-node state.
///
/// `step(letter, parent_state)` returns the state of the word extended on the
/// right by `letter`; `visit(depth, state)` is called once per reduced word,
/// the identity included (depth 0) unless `first_letter` restricts the walk
/// to the shard of words starting with that letter. Letters are tried in
/// increasing order, so words come out in depth-first lexicographic order.
template <class State, class Step, class Visit>
void walk_ball(int rank, int n, const State& root, Step&& step, Visit&& visit, int first_letter = -1) {
  const int alphabet = 2 * rank;
  if (n < 0) return;
  if (first_letter < 0) visit(0, root);
  if (n == 0) return;
  std::vector<State> states;
  states.reserve(static_cast<std::size_t>(n) + 1);
  states.push_back(root);
  std::vector<int> next(static_cast<std::size_t>(n) + 1, 0);
  std::vector<Letter> word(static_cast<std::size_t>(n) + 1, 0);
  int depth = 0;  // number of letters in the current prefix
  if (first_letter >= 0) {
    word[1] = static_cast<Letter>(first_letter);
    states.push_back(step(word[1], root));
    visit(1, states.back());
    if (n == 1) return;
    depth = 1;
    next[1] = 0;
  }
  const int floor_depth = depth;
  next[depth] = 0;
  while (true) {
    int& l = next[depth];
    if (depth > 0) {
      while (l < alphabet && static_cast<Letter>(l) == inverse_letter(word[depth])) ++l;
    }
    if (l >= alphabet) {
      if (depth == floor_depth) break;
      states.pop_back();
      --depth;
      continue;
    }
    const Letter chosen = static_cast<Letter>(l++);
    word[depth + 1] = chosen;
    states.push_back(step(chosen, states[depth]));
    ++depth;
    visit(depth, states.back());
    if (depth == n) {
      states.pop_back();
      --depth;
    } else {
      next[depth] = 0;
    }
  }
}

/// Streams every reduced word of length exactly n once, in depth-first
/// lexicographic order (g1 < g1^-1 < g2 < ...).
void for_each_in_sphere(int rank, int n, const EnumerationBudget& budget,
                        const std::function<void(std::span<const Letter>)>& visit);

/// Runs `shard(first_letter)` for every first letter, on up to `threads`
/// workers, and returns the results in letter order so the caller can merge
/// deterministically.
template <class Result, class Shard>
std::vector<Result> run_shards(int rank, int threads, Shard&& shard) {
  const int alphabet = 2 * rank;
  std::vector<Result> out(static_cast<std::size_t>(alphabet));
  if (threads <= 1) {
    for (int l = 0; l < alphabet; ++l) out[static_cast<std::size_t>(l)] = shard(l);
    return out;
  }
  for (int base = 0; base < alphabet; base += threads) {
    std::vector<std::future<Result>> futs;
    for (int l = base; l < std::min(alphabet, base + threads); ++l)
      futs.push_back(std::async(std::launch::async, [&shard, l] { return shard(l); }));
    for (int l = base; l < std::min(alphabet, base + threads); ++l)
      out[static_cast<std::size_t>(l)] = futs[static_cast<std::size_t>(l - base)].get();
  }
  return out;
}

}  // namespace orbitlab::freegroup
