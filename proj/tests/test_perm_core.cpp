#include <gtest/gtest.h>

#include <cstdlib>
#include <random>
#include <set>

#include "oracles.hpp"
#include "pyramidal/constructions.hpp"
#include "pyramidal/perm_group.hpp"

using namespace pyr;

namespace {

Permutation to_perm(const oracle::Perm& p) { return Permutation(p); }

oracle::Perm raw(const Permutation& p) { return {p.images().begin(), p.images().end()}; }

// Random subgroup of S_n from 1-3 random generators, small enough for the oracle.
PermGroup random_group(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> count(1, 3);
  std::vector<Permutation> gens;
  for (int i = count(rng); i > 0; --i) gens.push_back(to_perm(oracle::random_perm(rng, n)));
  return PermGroup::close(n, gens);
}

std::vector<PermGroup> corpus() {
  return {cyclic(6), cyclic(8), dihedral(5), dihedral(4), symmetric(4), alternating(4), quaternion8(), symmetric(5),
          direct_product(symmetric(3), cyclic(5)), regular_representation(cyclic(6))};
}

}  // namespace

TEST(Permutation, ComposesLeftToRight) {
  const auto a = Permutation::from_cycles(3, {{0, 1}});
  const auto b = Permutation::from_cycles(3, {{1, 2}});
  // 0 -a-> 1 -b-> 2
  EXPECT_EQ((a * b)[0], 2u);
  EXPECT_EQ(raw(a * b), oracle::compose(raw(a), raw(b)));
}

TEST(Permutation, RejectsNonBijection) {
  EXPECT_THROW(Permutation(std::vector<Point>{0, 0, 1}), Error);
  EXPECT_THROW(Permutation(std::vector<Point>{0, 3, 1}), Error);
}

TEST(Permutation, CycleString) {
  EXPECT_EQ(Permutation::from_cycles(5, {{0, 1, 2}, {3, 4}}).to_cycle_string(), "(0 1 2)(3 4)");
  EXPECT_EQ(Permutation::identity(4).to_cycle_string(), "()");
}

TEST(Permutation, RandomAlgebraMatchesOracle) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 9;
    const auto pa = oracle::random_perm(rng, n), pb = oracle::random_perm(rng, n), pc = oracle::random_perm(rng, n);
    const Permutation a(pa), b(pb), c(pc);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_TRUE((a * a.inverse()).is_identity());
    EXPECT_EQ(raw(a.inverse()), oracle::inverse(pa));
    EXPECT_EQ(a.order(), oracle::element_order(pa));
    EXPECT_TRUE(a.pow(static_cast<long long>(a.order())).is_identity());
    EXPECT_EQ(a.pow(-1), a.inverse());
    EXPECT_EQ(raw(a.conjugate_by(b)), oracle::compose(oracle::compose(oracle::inverse(pb), pa), pb));
    EXPECT_EQ(a.conjugate_by(b).order(), a.order());
    EXPECT_EQ(a.is_involution(), oracle::element_order(pa) == 2);
  }
}

TEST(PermGroup, SpecClosureExamples) {
  EXPECT_EQ(PermGroup::trivial(1).order(), 1u);
  EXPECT_EQ(PermGroup::close(3, {Permutation::from_cycles(3, {{0, 1, 2}}), Permutation::from_cycles(3, {{1, 2}})}).order(),
            6u);
  EXPECT_EQ(PermGroup::close(5, {Permutation::from_cycles(5, {{0, 1, 2, 3, 4}}),
                                 Permutation::from_cycles(5, {{1, 4}, {2, 3}})})
                .order(),
            10u);
}

TEST(PermGroup, ClosureMatchesOracleOnRandomGroups) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + trial % 5;
    std::vector<oracle::Perm> raws;
    std::vector<Permutation> gens;
    for (int i = 0; i < 2; ++i) {
      raws.push_back(oracle::random_perm(rng, n));
      gens.emplace_back(raws.back());
    }
    const PermGroup g = PermGroup::close(n, gens);
    const auto expected = oracle::closure(n, raws);
    ASSERT_EQ(g.order(), expected.size());
    std::set<oracle::Perm> got;
    for (const auto& x : g.elements()) got.insert(raw(x));
    EXPECT_EQ(got, expected);
    EXPECT_TRUE(std::is_sorted(g.elements().begin(), g.elements().end()));
    EXPECT_EQ(oracle::factorial(n) % g.order(), 0u);
    EXPECT_TRUE(g.element(g.identity_index()).is_identity());
  }
}

TEST(PermGroup, StandardOrders) {
  for (std::size_t n = 1; n <= 6; ++n) EXPECT_EQ(symmetric(n).order(), oracle::factorial(n));
  for (std::size_t n = 3; n <= 6; ++n) EXPECT_EQ(alternating(n).order(), oracle::factorial(n) / 2);
  EXPECT_EQ(quaternion8().order(), 8u);
  EXPECT_EQ(dihedral(7).order(), 14u);
}

TEST(PermGroup, DegreeMismatchAndCap) {
  EXPECT_THROW(PermGroup::close(4, {Permutation::identity(3)}), Error);
  try {
    const std::vector<Permutation> gens{Permutation::from_cycles(8, {{0, 1, 2, 3, 4, 5, 6, 7}}),
                                        Permutation::from_cycles(8, {{0, 1}})};
    (void)PermGroup::close(8, gens, 1000);
    FAIL() << "cap not enforced";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::too_large);
  }
}

TEST(PermGroup, EnvironmentCapOverride) {
  ::setenv("PYR_ELEMENT_CAP", "100", 1);
  EXPECT_EQ(element_cap(), 100u);
  EXPECT_THROW((void)symmetric(5), Error);
  ::unsetenv("PYR_ELEMENT_CAP");
  EXPECT_EQ(element_cap(), kDefaultElementCap);
  EXPECT_EQ(symmetric(5).order(), 120u);
}

TEST(PermGroup, Involutions) {
  EXPECT_TRUE(involutions(PermGroup::trivial(3)).empty());
  EXPECT_EQ(involutions(dihedral(5)).size(), 5u);
  EXPECT_EQ(involutions(symmetric(4)).size(), 9u);
  const auto inv = involutions(symmetric(4));
  EXPECT_TRUE(std::is_sorted(inv.begin(), inv.end()));
}

TEST(PermGroup, InvolutionParity) {
  for (const auto& g : corpus()) {
    const auto m = involutions(g).size();
    if (g.order() % 2 == 0)
      EXPECT_EQ(m % 2, 1u) << g.name();
    else
      EXPECT_EQ(m, 0u) << g.name();
  }
  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const PermGroup g = random_group(rng, 6);
    const auto m = involutions(g).size();
    EXPECT_EQ(g.order() % 2 == 0, m % 2 == 1);
  }
}

TEST(Conjugacy, SpecExamples) {
  const auto d10 = dihedral(5);
  EXPECT_EQ(conjugacy_class(d10, d10.identity()).size(), 1u);
  EXPECT_EQ(conjugacy_class(d10, involutions(d10).front()).size(), 5u);
  EXPECT_EQ(conjugacy_class(symmetric(4), Permutation::from_cycles(4, {{0, 1}})).size(), 6u);
  EXPECT_THROW(conjugacy_class(d10, Permutation::from_cycles(5, {{0, 1}})), Error);
}

TEST(Conjugacy, OrbitStabilizerAndOracle) {
  for (const auto& g : corpus()) {
    std::set<oracle::Perm> elems;
    for (const auto& x : g.elements()) elems.insert(raw(x));
    for (const auto& x : g.elements()) {
      const auto cls = conjugacy_class(g, x);
      EXPECT_EQ(cls.size() * centralizer(g, x).order(), g.order());
      std::set<oracle::Perm> got;
      for (const auto& y : cls) got.insert(raw(y));
      EXPECT_EQ(got, oracle::conjugates(elems, raw(x)));
    }
  }
}

TEST(Centralizer, SpecExamples) {
  const auto d10 = dihedral(5);
  EXPECT_EQ(centralizer(d10, d10.identity()).order(), 10u);
  EXPECT_EQ(centralizer(d10, involutions(d10).front()).order(), 2u);
  const auto a4 = alternating(4);
  EXPECT_EQ(centralizer(a4, Permutation::from_cycles(4, {{0, 1}, {2, 3}})).order(), 4u);
}

TEST(SubgroupGenerated, SpecExamples) {
  const auto d10 = dihedral(5);
  EXPECT_TRUE(subgroup_generated(d10, std::vector<Permutation>{}).is_trivial());
  EXPECT_TRUE(subgroup_generated(d10, involutions(d10)).is_whole());
  const auto q8 = quaternion8();
  const auto z = subgroup_generated(q8, involutions(q8));
  EXPECT_EQ(z.order(), 2u);
  EXPECT_EQ(z, center(q8));
  EXPECT_THROW(subgroup_generated(d10, std::vector<Permutation>{Permutation::from_cycles(5, {{0, 1}})}), Error);
}

TEST(CentralizerOfSubgroup, SpecExamples) {
  const auto d10 = dihedral(5);
  EXPECT_TRUE(centralizer_of_subgroup(d10, Subgroup::trivial(d10)).is_whole());
  EXPECT_TRUE(centralizer_of_subgroup(d10, subgroup_generated(d10, involutions(d10))).is_trivial());
  const auto c6 = regular_representation(cyclic(6));
  std::mt19937 rng(5);
  for (ElementIndex i = 0; i < c6.order(); ++i) {
    const std::vector<Permutation> gen{c6.element(i)};
    EXPECT_TRUE(centralizer_of_subgroup(c6, Subgroup::generated(c6, gen)).is_whole());
  }
}

TEST(Normality, SpecExamples) {
  const auto d10 = dihedral(5);
  EXPECT_TRUE(is_normal(d10, Subgroup::whole(d10)));
  const std::vector<Permutation> rot{Permutation::from_cycles(5, {{0, 1, 2, 3, 4}})};
  EXPECT_TRUE(is_normal(d10, Subgroup::generated(d10, rot)));
  const std::vector<Permutation> refl{involutions(d10).front()};
  EXPECT_FALSE(is_normal(d10, Subgroup::generated(d10, refl)));
  const auto s4 = symmetric(4);
  EXPECT_TRUE(normal_closure(s4, Permutation::from_cycles(4, {{0, 1}})).is_whole());
  EXPECT_EQ(normal_closure(s4, Permutation::from_cycles(4, {{0, 1, 2}})).order(), 12u);
}

TEST(Normality, NormalClosureMatchesOracle) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    const PermGroup g = random_group(rng, 5);
    std::uniform_int_distribution<ElementIndex> pick(0, static_cast<ElementIndex>(g.order() - 1));
    const Permutation x = g.element(pick(rng));
    std::set<oracle::Perm> elems;
    for (const auto& y : g.elements()) elems.insert(raw(y));
    const auto conj = oracle::conjugates(elems, raw(x));
    const auto expected = oracle::closure(5, std::vector<oracle::Perm>(conj.begin(), conj.end()));
    const auto nc = normal_closure(g, x);
    EXPECT_EQ(nc.order(), expected.size());
    EXPECT_TRUE(is_normal(g, nc));
  }
}

TEST(Quotient, SpecExamples) {
  const auto d10 = dihedral(5);
  EXPECT_EQ(quotient(d10, Subgroup::whole(d10)).order(), 1u);
  const std::vector<Permutation> rot{Permutation::from_cycles(5, {{0, 1, 2, 3, 4}})};
  EXPECT_EQ(quotient(d10, Subgroup::generated(d10, rot)).order(), 2u);
  const std::vector<Permutation> refl{involutions(d10).front()};
  try {
    (void)quotient(d10, Subgroup::generated(d10, refl));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_normal);
  }
}

TEST(Quotient, OrdersAndTrivialKernel) {
  for (const auto& g : corpus()) {
    const auto q = quotient(g, Subgroup::trivial(g));
    EXPECT_EQ(q.order(), g.order());
    EXPECT_EQ(involutions(q).size(), involutions(g).size());
    const auto d = derived_subgroup(g);
    const auto qd = quotient(g, d);
    EXPECT_EQ(qd.order() * d.order(), g.order());
    EXPECT_TRUE(is_abelian(qd));
  }
  const auto s4 = symmetric(4);
  const auto v4 = two_core(s4);
  ASSERT_EQ(v4.order(), 4u);
  const auto q = quotient(s4, v4);
  EXPECT_EQ(q.order(), 6u);
  EXPECT_FALSE(is_abelian(q));
}

TEST(Derived, SpecExamples) {
  EXPECT_TRUE(derived_subgroup(cyclic(12)).is_trivial());
  EXPECT_TRUE(is_solvable(cyclic(12)));
  const auto a5 = alternating(5);
  EXPECT_TRUE(derived_subgroup(a5).is_whole());
  EXPECT_FALSE(is_solvable(a5));
  for (std::size_t m = 3; m <= 25; m += 2) {
    const auto series = derived_series_orders(dihedral(m));
    EXPECT_LE(series.size(), 3u);
    EXPECT_EQ(series.back(), 1u);
  }
  EXPECT_EQ(derived_series_orders(symmetric(4)), (std::vector<std::size_t>{24, 12, 4, 1}));
}

TEST(Derived, CommutatorSubgroupMatchesOracle) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const PermGroup g = random_group(rng, 5);
    std::vector<oracle::Perm> comms;
    for (const auto& a : g.elements())
      for (const auto& b : g.elements())
        comms.push_back(oracle::compose(oracle::compose(oracle::inverse(raw(a)), oracle::inverse(raw(b))),
                                        oracle::compose(raw(a), raw(b))));
    EXPECT_EQ(derived_subgroup(g).order(), oracle::closure(5, comms).size());
  }
}

TEST(OddCore, SpecExamples) {
  const auto c15 = cyclic(15);
  EXPECT_TRUE(odd_core(c15).is_whole());
  EXPECT_EQ(odd_core(dihedral(5)).order(), 5u);
  EXPECT_EQ(odd_core(direct_product(symmetric(3), cyclic(5))).order(), 15u);
  EXPECT_TRUE(odd_core(symmetric(4)).is_trivial());
}

TEST(OddCore, ContainsEveryNormalOddSubgroup) {
  for (const auto& g : corpus()) {
    const auto o = odd_core(g);
    EXPECT_EQ(o.order() % 2, 1u);
    EXPECT_TRUE(is_normal(g, o));
    for (const auto& x : g.elements()) {
      const auto n = normal_closure(g, x);
      if (n.order() % 2 == 1) {
        for (ElementIndex i : n.member_indices()) EXPECT_TRUE(o.contains_index(i));
      }
    }
  }
}

TEST(Sylow2, SpecExamples) {
  EXPECT_TRUE(sylow2(cyclic(9)).is_trivial());
  EXPECT_EQ(sylow2(symmetric(4)).order(), 8u);
  const FiniteField f3 = make_field(3, 1);
  const auto sl23 = linear_to_perm(sl2(3), 2, f3);
  ASSERT_EQ(sl23.order(), 24u);
  const auto p = sylow2(sl23);
  EXPECT_EQ(p.order(), 8u);
  EXPECT_EQ(involutions(p.as_group()).size(), 1u);
  EXPECT_EQ(two_group_shape(p), Sylow2Shape::quaternion);
}

TEST(Sylow2, OrderIsTwoPart) {
  std::mt19937 rng(29);
  auto groups = corpus();
  for (int trial = 0; trial < 40; ++trial) groups.push_back(random_group(rng, 6));
  for (const auto& g : groups) {
    std::uint64_t n = g.order(), two = 1;
    while (n % 2 == 0) {
      n /= 2;
      two *= 2;
    }
    const auto p = sylow2(g);
    EXPECT_EQ(p.order(), two);
    EXPECT_EQ(g.order() / p.order() % 2, 1u);
  }
}

TEST(Sylow2, Shapes) {
  EXPECT_EQ(sylow2_shape(cyclic(9)), Sylow2Shape::trivial);
  EXPECT_EQ(sylow2_shape(regular_representation(cyclic(8))), Sylow2Shape::cyclic);
  EXPECT_EQ(sylow2_shape(dihedral(4)), Sylow2Shape::dihedral);
  EXPECT_EQ(sylow2_shape(quaternion8()), Sylow2Shape::quaternion);
  EXPECT_EQ(sylow2_shape(alternating(4)), Sylow2Shape::klein);
  EXPECT_EQ(sylow2_shape(symmetric(4)), Sylow2Shape::dihedral);
  EXPECT_EQ(sylow2_shape(direct_product(cyclic(2), cyclic(4))), Sylow2Shape::other);
}

TEST(Sylow2, UniqueInvolutionForcesConjugacy) {
  const FiniteField f3 = make_field(3, 1), f5 = make_field(5, 1);
  const std::vector<PermGroup> groups{dihedral(5), linear_to_perm(sl2(3), 2, f3), linear_to_perm(sl2(5), 2, f5),
                                      regular_representation(cyclic(6))};
  for (const auto& g : groups) {
    const auto shape = sylow2_shape(g);
    ASSERT_TRUE(shape == Sylow2Shape::cyclic || shape == Sylow2Shape::quaternion);
    const auto inv = involutions(g);
    EXPECT_EQ(conjugacy_class(g, inv.front()).size(), inv.size());
  }
}
