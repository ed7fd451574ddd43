#pragma once

// Brute-force references for free-group enumeration. Every word is decoded
// from its index and evaluated from scratch; nothing is shared with the
// depth-first walk used by the library.

#include <cstdint>
#include <functional>
#include <vector>

#include "orbitlab/freegroup/hom.hpp"
#include "orbitlab/freegroup/word.hpp"

namespace orbitlab::oracle {

/// Decodes k in [0, |S_n|) as a mixed-radix numeral: first letter base 2r,
/// later letters base 2r-1 over the letters that keep the word reduced.
freegroup::ReducedWord word_from_index(int rank, int n, std::uint64_t k);

/// Counts reduced words of length n by filtering all (2r)^n letter strings.
std::uint64_t brute_force_sphere_count(int rank, int n);

/// Histogram over [0, bins) of evaluate(w) for every w in S_n.
std::vector<std::int64_t> word_list_histogram(int rank, int n, std::size_t bins,
                                              const std::function<std::uint32_t(const freegroup::ReducedWord&)>& evaluate);

/// counts[y] = #{w in S_n : w^-1 x = y}, each word applied letter by letter.
std::vector<std::int64_t> word_list_sphere_counts(const freegroup::PermutationHom& hom, std::uint32_t x, int n);

}  // namespace orbitlab::oracle
