#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "orbitlab/errors.hpp"
#include "orbitlab/freegroup/enumerate.hpp"
#include "orbitlab/freegroup/profinite.hpp"
#include "orbitlab/freegroup/word.hpp"
#include "orbitlab/oracle/word_list.hpp"

using namespace orbitlab;
using namespace orbitlab::freegroup;

namespace {

std::vector<std::string> sphere_words(int rank, int n) {
  std::vector<std::string> out;
  for_each_in_sphere(rank, n, EnumerationBudget{}, [&](std::span<const Letter> w) {
    out.push_back(ReducedWord(rank, w).to_string());
  });
  return out;
}

}  // namespace

TEST_CASE("reduced words reduce, invert and multiply") {
  const auto w = ReducedWord::parse(2, "abBA");
  CHECK(w.is_identity());
  const auto u = ReducedWord::parse(2, "abA");
  CHECK(u.length() == 3);
  CHECK((u * u.inverse()).is_identity());
  CHECK((u.inverse() * u).is_identity());
  CHECK((ReducedWord::parse(2, "ab") * ReducedWord::parse(2, "Ba")).to_string() == ReducedWord::parse(2, "aa").to_string());
  CHECK(ReducedWord::parse(3, "acC").to_string() == ReducedWord::parse(3, "a").to_string());
  const Letter bad[] = {7};
  CHECK_THROWS_AS(ReducedWord(2, bad), std::invalid_argument);
  CHECK_THROWS_AS(ReducedWord(1), std::invalid_argument);
}

TEST_CASE("sphere enumeration: counts, reducedness, uniqueness") {
  CHECK(sphere_words(2, 0).size() == 1);
  CHECK(sphere_words(2, 1).size() == 4);
  CHECK(sphere_words(2, 3).size() == 36);
  CHECK(oracle::brute_force_sphere_count(2, 3) == 36);
  for (int r : {2, 3})
    for (int n = 0; n <= 5; ++n) {
      const auto words = sphere_words(r, n);
      CHECK(words.size() == sphere_size(r, n));
      CHECK(words.size() == oracle::brute_force_sphere_count(r, n));
      CHECK(std::set<std::string>(words.begin(), words.end()).size() == words.size());
    }
  CHECK(ball_size(3, 12) == 1 + 6 * (244140625ULL - 1) / 4);
}

TEST_CASE("sphere enumeration order matches the index decoding of the oracle") {
  std::vector<std::string> ref;
  for (std::uint64_t k = 0; k < sphere_size(2, 4); ++k) ref.push_back(oracle::word_from_index(2, 4, k).to_string());
  CHECK(sphere_words(2, 4) == ref);
}

TEST_CASE("sphere enumeration respects the budget") {
  EnumerationBudget tiny{10};
  CHECK_THROWS_AS(for_each_in_sphere(2, 5, tiny, [](std::span<const Letter>) {}), BudgetExceeded);
  CHECK_THROWS_AS(sphere_size(2, 60), BudgetExceeded);
}

TEST_CASE("sign character is the parity of the length") {
  CHECK(sign_character(ReducedWord(2)) == 1);
  for (int i = 0; i < 3; ++i) {
    CHECK(sign_character(ReducedWord::generator(3, i)) == -1);
    CHECK(sign_character(ReducedWord::generator(3, i, true)) == -1);
  }
  CHECK(sign_character(ReducedWord::parse(2, "ab")) == 1);
  // Multiplicative, cancellation included.
  const auto u = ReducedWord::parse(2, "abA"), v = ReducedWord::parse(2, "aB");
  CHECK(sign_character(u * v) == sign_character(u) * sign_character(v));
}

TEST_CASE("walk_ball visits each reduced word once; shards partition the ball") {
  std::uint64_t all = 0;
  walk_ball(2, 6, 0, [](Letter, int s) { return s + 1; }, [&](int, int) { ++all; });
  CHECK(all == ball_size(2, 6));
  std::uint64_t sharded = 1;  // the identity
  for (int l = 0; l < 4; ++l) walk_ball(2, 6, 0, [](Letter, int s) { return s; }, [&](int, int) { ++sharded; }, l);
  CHECK(sharded == all);
  const auto parts = run_shards<int>(2, 2, [](int l) { return l * l; });
  CHECK(parts == std::vector<int>{0, 1, 4, 9});
}

TEST_CASE("permutation homomorphism acts letter by letter from the right end") {
  const auto hom = fixtures::s4_natural();
  CHECK(hom.transitive());
  const auto w = ReducedWord::parse(2, "ab");
  // (w x) = a(b(x)).
  for (std::uint32_t x = 0; x < 4; ++x) CHECK(hom.act(w, x) == hom.act(0, hom.act(2, x)));
  CHECK(hom.apply(w * w.inverse()) == identity_permutation(4));
  CHECK(compose(hom.letter_image(0), hom.letter_image(1)) == identity_permutation(4));
  CHECK_THROWS_AS(PermutationHom({{0, 0, 1}, {0, 1, 2}}), std::invalid_argument);
  CHECK_FALSE(PermutationHom({{1, 0, 2, 3}, {1, 0, 2, 3}}).transitive());
}

TEST_CASE("subgroup chains: nesting is enforced") {
  CHECK_NOTHROW(fixtures::mod2_chain());
  // Index 2 then index 3: 3 is not a multiple of 2, so no refinement.
  const PermutationHom two({{1, 0}, {0, 1}});
  CHECK_THROWS_AS(SubgroupChain({two, fixtures::sl2_mod2_on_vectors()}), ConfigError);
  CHECK_THROWS_AS(SubgroupChain({fixtures::sl2_regular(2), fixtures::sl2_mod2_on_vectors()}), ConfigError);
  CHECK_THROWS_AS(SubgroupChain({PermutationHom({{1, 0, 2}, {1, 0, 2}})}), ConfigError);
}

TEST_CASE("profinite metric on words") {
  const auto chain = fixtures::mod2_chain();
  REQUIRE(chain.index(0) == 3);
  REQUIRE(chain.index(1) == 6);
  const auto e = ReducedWord(2);
  const auto a = ReducedWord::generator(2, 0), b = ReducedWord::generator(2, 1);
  CHECK(profinite_metric(a, a, chain).distance == 0.0);
  // b moves (1,0): e^-1 b leaves the top level.
  CHECK(profinite_metric(e, b, chain).distance == doctest::Approx(1.0 / 3));
  CHECK(profinite_metric(e, b, chain).first_exit == 0);
  // a fixes (1,0) but is not the identity mod 2: same at level 1, apart at level 2.
  CHECK(chain.contains(0, a));
  CHECK_FALSE(chain.contains(1, a));
  CHECK(profinite_metric(e, a, chain).distance == doctest::Approx(1.0 / 6));
  CHECK(profinite_metric(e, a, chain).first_exit == 1);
  // a^2 is the identity mod 2.
  CHECK(profinite_metric(e, a * a, chain).distance == 0.0);
}

TEST_CASE("profinite metric is a left-invariant ultrametric") {
  const auto chain = fixtures::dyadic_chain();
  std::vector<ReducedWord> words;
  for (int n = 0; n <= 3; ++n)
    for_each_in_sphere(2, n, EnumerationBudget{}, [&](std::span<const Letter> w) { words.emplace_back(2, w); });
  const auto g = ReducedWord::parse(2, "aBb");
  for (std::size_t i = 0; i < words.size(); i += 3)
    for (std::size_t j = 0; j < words.size(); j += 5) {
      const double dij = profinite_metric(words[i], words[j], chain).distance;
      CHECK(dij == profinite_metric(words[j], words[i], chain).distance);
      CHECK(dij == profinite_metric(g * words[i], g * words[j], chain).distance);
      for (std::size_t k = 0; k < words.size(); k += 17)
        CHECK(dij <= std::max(profinite_metric(words[i], words[k], chain).distance,
                              profinite_metric(words[k], words[j], chain).distance));
    }
}

TEST_CASE("coset distance agrees with the word distance through the action") {
  const auto chain = fixtures::dyadic_chain();
  const auto& deep = chain.level(chain.depth() - 1);
  for (const char* s : {"a", "b", "ab", "aBA", "bbaB"}) {
    const auto w = ReducedWord::parse(2, s);
    CHECK(profinite_coset_distance(0, deep.act(w, 0), chain) == profinite_metric(ReducedWord(2), w, chain).distance);
  }
}
