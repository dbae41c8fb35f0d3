#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "finop/circle.hpp"
#include "oracles.hpp"

using namespace finop;

namespace {

ColorSet one_color() { return ColorSet({"*"}); }

// one color, X concentrated in arity 2 with one fixed element
SymSeq binary_generator(const ColorSet& cs) {
  SymSeq x(cs);
  x.set_entry(0, {0, 0}, GSet::trivial(FinSet({"g"}), PermGroup::sequence_stabilizer({0, 0})));
  return x;
}

SymSeq point_arity0(const ColorSet& cs) {
  std::map<Color, FinSet> vals;
  vals[0] = FinSet({"a0"});
  return SymSeq::concentrated_arity0(cs, vals);
}

}  // namespace

TEST_CASE("substitution power: empty source profile") {
  ColorSet cs = one_color();
  SymSeq y = point_arity0(cs);
  // value is the unit at the empty orbit, empty elsewhere
  PowerEntry at_empty = substitution_power(y, {}, {});
  CHECK(at_empty.total.set().size() == 1);
  PowerEntry at_one = substitution_power(y, {}, {0});
  CHECK(at_one.total.set().empty());
}

TEST_CASE("substitution power: two arity-0 children give one element") {
  ColorSet cs = one_color();
  SymSeq y = point_arity0(cs);
  PowerEntry pe = substitution_power(y, {0, 0}, {});
  CHECK(pe.total.set().size() == 1);
}

TEST_CASE("substitution power: unary identity case") {
  ColorSet cs = one_color();
  SymSeq y(cs);
  y.set_entry(0, {0}, GSet::trivial(FinSet({"e"}), PermGroup::trivial(1)));
  PowerEntry pe = substitution_power(y, {0}, {0});
  CHECK(pe.total.set().size() == 1);
}

TEST_CASE("substitution power: left action laws") {
  ColorSet cs = ColorSet({"a", "b"});
  SymSeq y(cs);
  y.set_entry(0, {0}, GSet::trivial(FinSet({"p", "q"}), PermGroup::trivial(1)));
  y.set_entry(0, {0, 1}, GSet::trivial(FinSet({"r"}), PermGroup::sequence_stabilizer({0, 1})));
  y.set_entry(1, {}, GSet::trivial(FinSet({"z"}), PermGroup::trivial(0)));
  // c = (a, a, b): stabilizer has order 2
  Profile c = {0, 0, 1};
  Profile bhat = orbit_rep({0, 0, 1});
  PowerEntry pe = substitution_power(y, c, bhat);
  CHECK(!pe.total.set().empty());
  PermGroup sc = PermGroup::sequence_stabilizer(c);
  for (const Elem& e : pe.total.set().elements()) {
    CHECK(pe.apply_left(Perm::identity(3), e) == e);
    for (const Perm& s1 : sc.elements())
      for (const Perm& s2 : sc.elements())
        CHECK(pe.apply_left(s2, pe.apply_left(s1, e)) == pe.apply_left(mul(s2, s1), e));
    // left and right actions commute
    for (const Perm& s : sc.elements())
      for (const Perm& k : pe.stab_b.generators())
        CHECK(pe.apply_left(s, pe.total.act(e, k)) == pe.total.act(pe.apply_left(s, e), k));
  }
}

TEST_CASE("circle: binary over arity-0 point gives one element at the empty profile") {
  ColorSet cs = one_color();
  CircleResult r = circle(binary_generator(cs), point_arity0(cs));
  const GSet* e = r.seq.entry_rep(0, {});
  REQUIRE(e != nullptr);
  CHECK(e->set().size() == 1);
  CHECK(r.seq.keys().size() == 1);
  CHECK(r.seq.is_concentrated_in_arity(0));
}

TEST_CASE("circle: empty Y and no arity-0 entries in X gives empty") {
  ColorSet cs = one_color();
  SymSeq y(cs);
  CircleResult r = circle(binary_generator(cs), y);
  CHECK(r.seq.empty());
}

TEST_CASE("circle: concentration in arity 0 is preserved") {
  ColorSet cs = ColorSet({"a", "b"});
  std::mt19937 rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    SymSeq x = testing::random_symseq(rng, cs, 2, 2);
    std::map<Color, FinSet> vals;
    vals[0] = FinSet({"v1", "v2"});
    vals[1] = FinSet({"w1"});
    SymSeq y = SymSeq::concentrated_arity0(cs, vals);
    CircleResult r = circle(x, y);
    CHECK(r.seq.is_concentrated_in_arity(0));
  }
}

TEST_CASE("circle entries match the two-level enumeration oracle") {
  ColorSet cs2 = ColorSet({"a", "b"});
  std::mt19937 rng(11);
  for (int trial = 0; trial < 8; ++trial) {
    SymSeq x = testing::random_symseq(rng, cs2, 2, 2);
    SymSeq y = testing::random_symseq(rng, cs2, 2, 2);
    CircleResult r = circle(x, y);
    for (const EntryKey& k : r.seq.keys()) {
      long expect = testing::two_level_count(x, y, k.first, k.second);
      CHECK(r.seq.entry_rep(k.first, k.second)->set().size() == expect);
    }
    long empty_probe = testing::two_level_count(x, y, 0, {0, 0, 0});
    const GSet* probe = r.seq.entry_rep(0, {0, 0, 0});
    CHECK((probe ? probe->set().size() : 0) == empty_probe);
  }
}

TEST_CASE("unit sequence") {
  ColorSet cs = ColorSet({"a", "b"});
  SymSeq i = unit_sequence(cs);
  CHECK(i.keys().size() == 2);
  CHECK(i.entry(0, {0}).set().size() == 1);
  CircleResult ii = circle(i, i);
  CHECK(ii.seq.keys() == i.keys());
  for (const EntryKey& k : i.keys())
    CHECK(ii.seq.entry_rep(k.first, k.second)->set().size() == 1);
}

TEST_CASE("unit law witnesses on a random corpus") {
  ColorSet cs = ColorSet({"a", "b"});
  std::mt19937 rng(23);
  for (int trial = 0; trial < 6; ++trial) {
    SymSeq x = testing::random_symseq(rng, cs, 3, 2);
    WitnessReport l = unit_left_witness(x);
    CHECK_MESSAGE(l.ok, l.failure);
    WitnessReport r = unit_right_witness(x);
    CHECK_MESSAGE(r.ok, r.failure);
  }
}

TEST_CASE("associativity witness: unit triple") {
  ColorSet cs = one_color();
  SymSeq i = unit_sequence(cs);
  WitnessReport w = associativity_witness(i, i, i);
  CHECK_MESSAGE(w.ok, w.failure);
}

TEST_CASE("associativity witness: one color, random sequences") {
  ColorSet cs = one_color();
  std::mt19937 rng(41);
  for (int trial = 0; trial < 4; ++trial) {
    SymSeq x = testing::random_symseq(rng, cs, 2, 2, 0.4);
    SymSeq y = testing::random_symseq(rng, cs, 2, 2, 0.4);
    SymSeq z = testing::random_symseq(rng, cs, 2, 2, 0.4);
    WitnessReport w = associativity_witness(x, y, z);
    CHECK_MESSAGE(w.ok, w.failure);
  }
}

TEST_CASE("associativity witness: two colors") {
  ColorSet cs = ColorSet({"a", "b"});
  std::mt19937 rng(43);
  for (int trial = 0; trial < 3; ++trial) {
    SymSeq x = testing::random_symseq(rng, cs, 2, 2, 0.35);
    SymSeq y = testing::random_symseq(rng, cs, 2, 2, 0.35);
    SymSeq z = testing::random_symseq(rng, cs, 2, 2, 0.35);
    WitnessReport w = associativity_witness(x, y, z);
    CHECK_MESSAGE(w.ok, w.failure);
  }
}

TEST_CASE("associativity witness size cap") {
  ColorSet cs = one_color();
  SymSeq x = binary_generator(cs);
  SymSeq y(cs);
  y.set_entry(0, {0}, GSet::trivial(FinSet({"f1", "f2"}), PermGroup::trivial(1)));
  y.set_entry(0, {0, 0}, GSet::regular(PermGroup::sequence_stabilizer({0, 0})));
  CHECK_THROWS_AS(associativity_witness(x, y, y, 1), Error);
}
