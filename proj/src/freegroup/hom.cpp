#include "orbitlab/freegroup/hom.hpp"

#include <numeric>

namespace orbitlab::freegroup {

Permutation compose(const Permutation& outer, const Permutation& inner) {
  if (outer.size() != inner.size()) throw std::invalid_argument("permutation degree mismatch");
  Permutation out(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) out[i] = outer[inner[i]];
  return out;
}

Permutation invert(const Permutation& p) {
  Permutation out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[p[i]] = static_cast<std::uint32_t>(i);
  return out;
}

Permutation identity_permutation(std::size_t n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0u);
  return p;
}

PermutationHom::PermutationHom(std::vector<Permutation> generator_images) {
  if (generator_images.size() < 2) throw std::invalid_argument("need at least two generator images");
  rank_ = static_cast<int>(generator_images.size());
  degree_ = generator_images.front().size();
  if (degree_ == 0) throw std::invalid_argument("empty permutation domain");
  for (const auto& p : generator_images) {
    if (p.size() != degree_) throw std::invalid_argument("generator images differ in degree");
    std::vector<bool> seen(degree_, false);
    for (auto v : p) {
      if (v >= degree_ || seen[v]) throw std::invalid_argument("generator image is not a permutation");
      seen[v] = true;
    }
    table_.push_back(p);
    table_.push_back(invert(p));
  }
}

Permutation PermutationHom::apply(const ReducedWord& w) const {
  if (w.rank() != rank_) throw std::invalid_argument("rank mismatch");
  Permutation out = identity_permutation(degree_);
  for (Letter l : w.letters()) out = compose(out, table_[l]);
  return out;
}

std::uint32_t PermutationHom::act(const ReducedWord& w, std::uint32_t x) const {
  const auto letters = w.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) x = table_[*it][x];
  return x;
}

bool PermutationHom::transitive() const {
  std::vector<bool> seen(degree_, false);
  std::vector<std::uint32_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const auto x = stack.back();
    stack.pop_back();
    for (const auto& p : table_) {
      if (!seen[p[x]]) {
        seen[p[x]] = true;
        ++count;
        stack.push_back(p[x]);
      }
    }
  }
  return count == degree_;
}

}  // namespace orbitlab::freegroup
