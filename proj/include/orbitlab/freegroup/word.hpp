#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace orbitlab::freegroup {

/// Packed letter of the alphabet {g1, g1^-1, g2, g2^-1, ...}: letter 2i is
/// g_{i+1}, letter 2i+1 its inverse. This is also the enumeration order.
using Letter = std::uint8_t;

constexpr Letter inverse_letter(Letter l) { return static_cast<Letter>(l ^ 1u); }
constexpr Letter generator_letter(int i, bool inverse = false) {
  return static_cast<Letter>(2 * i + (inverse ? 1 : 0));
}

/// Element of the free group F_r in freely reduced form.
class ReducedWord {
 public:
  explicit ReducedWord(int rank);
  /// Freely reduces `letters`; throws std::invalid_argument on a letter
  /// outside the alphabet or rank < 2.
  ReducedWord(int rank, std::span<const Letter> letters);

  static ReducedWord generator(int rank, int i, bool inverse = false);
  /// Parses "aAbB" style strings: lowercase = generator, uppercase = inverse.
  static ReducedWord parse(int rank, std::string_view text);

  int rank() const { return rank_; }
  std::size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }
  std::span<const Letter> letters() const { return letters_; }

  ReducedWord inverse() const;
  friend ReducedWord operator*(const ReducedWord& u, const ReducedWord& v);
  friend bool operator==(const ReducedWord&, const ReducedWord&) = default;

  std::string to_string() const;

 private:
  int rank_;
  std::vector<Letter> letters_;
};

/// The sign character: (-1)^length.
int sign_character(const ReducedWord& w);

bool is_reduced(std::span<const Letter> letters);

}  // namespace orbitlab::freegroup
