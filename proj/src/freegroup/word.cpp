#include "orbitlab/freegroup/word.hpp"

#include <cctype>
#include <stdexcept>

namespace orbitlab::freegroup {

namespace {
void check_rank(int rank) {
  if (rank < 2 || rank > 64) throw std::invalid_argument("free group rank must be in [2, 64]");
}
}  // namespace

ReducedWord::ReducedWord(int rank) : rank_(rank) { check_rank(rank); }

ReducedWord::ReducedWord(int rank, std::span<const Letter> letters) : rank_(rank) {
  check_rank(rank);
  letters_.reserve(letters.size());
  for (Letter l : letters) {
    if (l >= 2 * rank) throw std::invalid_argument("letter outside alphabet");
    if (!letters_.empty() && letters_.back() == inverse_letter(l))
      letters_.pop_back();
    else
      letters_.push_back(l);
  }
}

ReducedWord ReducedWord::generator(int rank, int i, bool inverse) {
  const Letter l = generator_letter(i, inverse);
  return ReducedWord(rank, std::span<const Letter>(&l, 1));
}

ReducedWord ReducedWord::parse(int rank, std::string_view text) {
  std::vector<Letter> letters;
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    const bool inv = std::isupper(static_cast<unsigned char>(ch));
    const int i = std::tolower(static_cast<unsigned char>(ch)) - 'a';
    if (i < 0 || i >= rank) throw std::invalid_argument("bad letter in word string");
    letters.push_back(generator_letter(i, inv));
  }
  return ReducedWord(rank, letters);
}

ReducedWord ReducedWord::inverse() const {
  ReducedWord out(rank_);
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.letters_.push_back(inverse_letter(*it));
  return out;
}

ReducedWord operator*(const ReducedWord& u, const ReducedWord& v) {
  if (u.rank_ != v.rank_) throw std::invalid_argument("rank mismatch in word product");
  std::vector<Letter> all(u.letters_);
  all.insert(all.end(), v.letters_.begin(), v.letters_.end());
  return ReducedWord(u.rank_, all);
}

std::string ReducedWord::to_string() const {
  if (letters_.empty()) return "e";
  std::string s;
  for (Letter l : letters_) {
    const char base = static_cast<char>('a' + l / 2);
    s.push_back((l & 1u) ? static_cast<char>(std::toupper(base)) : base);
  }
  return s;
}

int sign_character(const ReducedWord& w) { return (w.length() % 2 == 0) ? 1 : -1; }

bool is_reduced(std::span<const Letter> letters) {
  for (std::size_t i = 1; i < letters.size(); ++i)
    if (letters[i] == inverse_letter(letters[i - 1])) return false;
  return true;
}

}  // namespace orbitlab::freegroup
