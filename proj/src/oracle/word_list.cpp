#include "orbitlab/oracle/word_list.hpp"

#include <stdexcept>

#include "orbitlab/freegroup/enumerate.hpp"

namespace orbitlab::oracle {

using freegroup::Letter;
using freegroup::ReducedWord;

ReducedWord word_from_index(int rank, int n, std::uint64_t k) {
  const int alphabet = 2 * rank;
  std::vector<std::uint64_t> digits(static_cast<std::size_t>(n));
  for (int pos = n - 1; pos >= 1; --pos) {
    digits[static_cast<std::size_t>(pos)] = k % static_cast<std::uint64_t>(alphabet - 1);
    k /= static_cast<std::uint64_t>(alphabet - 1);
  }
  if (n > 0) {
    if (k >= static_cast<std::uint64_t>(alphabet)) throw std::out_of_range("word index out of range");
    digits[0] = k;
  } else if (k != 0) {
    throw std::out_of_range("word index out of range");
  }
  std::vector<Letter> letters;
  for (int pos = 0; pos < n; ++pos) {
    auto d = static_cast<Letter>(digits[static_cast<std::size_t>(pos)]);
    if (pos > 0 && d >= freegroup::inverse_letter(letters.back())) ++d;  // skip the cancelling letter
    letters.push_back(d);
  }
  if (!freegroup::is_reduced(letters)) throw std::logic_error("decoded word not reduced");
  return ReducedWord(rank, letters);
}

std::uint64_t brute_force_sphere_count(int rank, int n) {
  const int alphabet = 2 * rank;
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= static_cast<std::uint64_t>(alphabet);
  std::uint64_t count = 0;
  std::vector<Letter> letters(static_cast<std::size_t>(n));
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (int i = 0; i < n; ++i) {
      letters[static_cast<std::size_t>(i)] = static_cast<Letter>(c % static_cast<std::uint64_t>(alphabet));
      c /= static_cast<std::uint64_t>(alphabet);
    }
    if (freegroup::is_reduced(letters)) ++count;
  }
  return count;
}

std::vector<std::int64_t> word_list_histogram(int rank, int n, std::size_t bins,
                                              const std::function<std::uint32_t(const ReducedWord&)>& evaluate) {
  std::vector<std::int64_t> hist(bins, 0);
  const std::uint64_t total = freegroup::sphere_size(rank, n);
  for (std::uint64_t k = 0; k < total; ++k) ++hist.at(evaluate(word_from_index(rank, n, k)));
  return hist;
}

std::vector<std::int64_t> word_list_sphere_counts(const freegroup::PermutationHom& hom, std::uint32_t x, int n) {
  return word_list_histogram(hom.rank(), n, hom.degree(), [&](const ReducedWord& w) {
    std::uint32_t y = x;
    // w^-1 = l_k^-1 ... l_1^-1, so l_1^-1 is applied first.
    for (Letter l : w.letters()) y = hom.act(freegroup::inverse_letter(l), y);
    return y;
  });
}

}  // namespace orbitlab::oracle
