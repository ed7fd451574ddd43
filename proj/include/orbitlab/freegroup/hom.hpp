#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "orbitlab/freegroup/word.hpp"

namespace orbitlab::freegroup {

using Permutation = std::vector<std::uint32_t>;

Permutation compose(const Permutation& outer, const Permutation& inner);  // outer after inner
Permutation invert(const Permutation& p);
Permutation identity_permutation(std::size_t n);

/// Homomorphism F_r -> Sym(n), given by the images of the free generators.
/// Images of inverse letters are precomputed so acting by any letter is one
/// table lookup.
class PermutationHom {
 public:
  PermutationHom(std::vector<Permutation> generator_images);

  int rank() const { return rank_; }
  std::size_t degree() const { return degree_; }
  std::uint32_t act(Letter l, std::uint32_t x) const { return table_[l][x]; }
  const Permutation& letter_image(Letter l) const { return table_[l]; }
  /// Image of w as a permutation; w acts on points by (w x) = l_1(l_2(...l_k(x))).
  Permutation apply(const ReducedWord& w) const;
  /// Action of w on a single point.
  std::uint32_t act(const ReducedWord& w, std::uint32_t x) const;
  /// True when the Schreier graph of the generators is connected.
  bool transitive() const;

 private:
  int rank_;
  std::size_t degree_;
  std::vector<Permutation> table_;  // indexed by letter
};

/// Homomorphism into a matrix group. `Element` needs operator*, an identity
/// value and a free function `group_inverse(const Element&)`.
template <class Element>
class MatrixHom {
 public:
  MatrixHom(std::vector<Element> generator_images, Element identity) : identity_(std::move(identity)) {
    if (generator_images.size() < 2) throw std::invalid_argument("need at least two generator images");
    rank_ = static_cast<int>(generator_images.size());
    for (auto& g : generator_images) {
      table_.push_back(g);
      table_.push_back(group_inverse(g));
    }
  }

  int rank() const { return rank_; }
  const Element& letter_image(Letter l) const { return table_[l]; }
  const Element& identity() const { return identity_; }

  Element apply(const ReducedWord& w) const {
    if (w.rank() != rank_) throw std::invalid_argument("rank mismatch");
    Element out = identity_;
    for (Letter l : w.letters()) out = out * table_[l];
    return out;
  }

 private:
  int rank_ = 0;
  Element identity_;
  std::vector<Element> table_;
};

}  // namespace orbitlab::freegroup
