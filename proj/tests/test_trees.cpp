#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "finop/trees.hpp"

#include <functional>
#include <random>
#include <set>

using namespace finop;

namespace {

// brute-force isomorphism oracle: try all vertex bijections preserving
// root, output colors, marks, and the child relation with colors
bool iso_oracle(const MarkedTree& a, const MarkedTree& b) {
  if (a.tree.is_edge() || b.tree.is_edge())
    return a.tree.is_edge() && b.tree.is_edge() && a.tree.out_color() == b.tree.out_color();
  int n = a.tree.num_vertices();
  if (n != b.tree.num_vertices()) return false;
  std::vector<int> perm(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
  std::sort(perm.begin(), perm.end());
  do {
    if (perm[static_cast<size_t>(a.tree.root())] != b.tree.root()) continue;
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) {
      const CTree::Vertex& va = a.tree.vertex(v);
      const CTree::Vertex& vb = b.tree.vertex(perm[static_cast<size_t>(v)]);
      if (va.out != vb.out || va.in.size() != vb.in.size()) ok = false;
      if (ok && (a.ds.count(v) > 0) != (b.ds.count(perm[static_cast<size_t>(v)]) > 0)) ok = false;
      if (!ok) break;
      std::multiset<std::pair<int, int>> sa, sb;
      for (const CTree::Slot& s : va.in)
        sa.insert(s.is_leaf ? std::make_pair(0, (int)s.color)
                            : std::make_pair(1, perm[static_cast<size_t>(s.child)]));
      for (const CTree::Slot& s : vb.in)
        sb.insert(s.is_leaf ? std::make_pair(0, (int)s.color) : std::make_pair(1, s.child));
      if (sa != sb) ok = false;
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

MarkedTree random_tree(std::mt19937& rng, int max_vertices, int ncolors, double mark_prob) {
  std::uniform_int_distribution<int> color(0, ncolors - 1);
  std::uniform_int_distribution<int> arity(0, 3);
  std::uniform_real_distribution<double> coin(0, 1);
  std::function<MarkedTree(int&, Color)> gen = [&](int& budget, Color out) -> MarkedTree {
    budget--;
    int a = arity(rng);
    std::vector<std::variant<Color, MarkedTree>> inputs;
    for (int i = 0; i < a; ++i) {
      Color c = color(rng);
      if (budget > 0 && coin(rng) < 0.5) {
        inputs.push_back(gen(budget, c));
      } else {
        inputs.push_back(c);
      }
    }
    return MarkedTree::build(out, coin(rng) < mark_prob, inputs);
  };
  int budget = max_vertices;
  return gen(budget, color(rng));
}

}  // namespace

TEST_CASE("corolla reorderings share a canonical form") {
  MarkedTree cap;
  cap.tree = CTree::corolla(0, {0});
  MarkedTree t1 = MarkedTree::build(0, false, {Color(1), cap, Color(0)});
  MarkedTree t2 = MarkedTree::build(0, false, {cap, Color(0), Color(1)});
  CHECK(canonical_form(t1) == canonical_form(t2));
  CHECK(iso_oracle(t1, t2));
}

TEST_CASE("marking distinguishes canonical forms") {
  MarkedTree plain;
  plain.tree = CTree::corolla(0, {0, 0});
  MarkedTree marked = plain;
  marked.ds.insert(0);
  CHECK(canonical_form(plain) != canonical_form(marked));
}

TEST_CASE("canonical form equality matches the brute-force isomorphism oracle") {
  std::mt19937 rng(99);
  std::vector<MarkedTree> corpus;
  for (int i = 0; i < 40; ++i) corpus.push_back(random_tree(rng, 5, 2, 0.3));
  for (size_t i = 0; i < corpus.size(); ++i)
    for (size_t j = i; j < corpus.size(); ++j) {
      if (corpus[i].tree.num_vertices() > 5 || corpus[j].tree.num_vertices() > 5) continue;
      bool enc_eq = canonical_form(corpus[i]) == canonical_form(corpus[j]);
      CHECK(enc_eq == iso_oracle(corpus[i], corpus[j]));
    }
}

TEST_CASE("automorphisms of a corolla with three identical caps") {
  MarkedTree cap;
  cap.tree = CTree::corolla(0, {0});
  MarkedTree t = MarkedTree::build(0, false, {cap, cap, cap});
  TreeAut aut = automorphism_group(t);
  CHECK(aut.group.size() == 6);
  CHECK(aut_order_by_decomposition(t) == 6);
}

TEST_CASE("chains with distinct levels have trivial automorphisms") {
  MarkedTree v1;
  v1.tree = CTree::corolla(0, {1});
  MarkedTree v2 = MarkedTree::build(0, false, {v1, Color(1)});
  MarkedTree v3 = MarkedTree::build(0, false, {v2, Color(0), Color(1)});
  CHECK(automorphism_group(v3).group.size() == 1);
  CHECK(aut_order_by_decomposition(v3) == 1);
}

TEST_CASE("automorphisms multiply over non-isomorphic subtrees") {
  MarkedTree cap;
  cap.tree = CTree::corolla(0, {0});
  MarkedTree sym = MarkedTree::build(0, false, {cap, cap});  // |Aut| = 2
  MarkedTree asym;
  asym.tree = CTree::corolla(0, {0, 0, 0});  // |Aut| = 6 alone
  MarkedTree t = MarkedTree::build(0, false, {sym, asym});
  TreeAut aut = automorphism_group(t);
  CHECK(aut.group.size() == 2 * 6);
  CHECK(aut_order_by_decomposition(t) == 12);
}

TEST_CASE("automorphism order equals the grafting decomposition, random corpus") {
  std::mt19937 rng(7);
  int checked = 0;
  for (int i = 0; i < 60; ++i) {
    MarkedTree t = random_tree(rng, 6, 2, 0.3);
    if (t.tree.num_vertices() > 6) continue;
    TreeAut aut = automorphism_group(t);
    CHECK(static_cast<long>(aut.group.size()) == aut_order_by_decomposition(t));
    ++checked;
  }
  CHECK(checked > 30);
}

TEST_CASE("leaf action preserves leaf colors") {
  MarkedTree cap;
  cap.tree = CTree::corolla(0, {0, 1});
  MarkedTree t = MarkedTree::build(0, false, {cap, cap, Color(0)});
  TreeAut aut = automorphism_group(t);
  CHECK(aut.group.size() == 4);  // swap the two caps, swap nothing else; each cap rigid
  Profile ls = t.tree.leaf_sequence();
  for (size_t i = 0; i < aut.elems.size(); ++i) {
    Perm lp = aut.elems[i].leaf_perm;
    for (int l = 0; l < lp.degree(); ++l)
      CHECK(ls[static_cast<size_t>(lp(l))] == ls[static_cast<size_t>(l)]);
  }
}

TEST_CASE("graft basics") {
  CTree unary = CTree::corolla(0, {0});
  CTree binary = CTree::corolla(0, {0, 0});
  CTree g1 = unary.graft(0, binary);
  CHECK(g1.num_vertices() == 2);
  CHECK(g1.num_leaves() == 2);
  CTree g2 = binary.graft(0, binary);
  CHECK(g2.num_vertices() == 2);
  CHECK(g2.num_leaves() == 3);
  CTree bleaf = CTree::corolla(0, {1});
  CTree acorolla = CTree::corolla(0, {0});
  CHECK_THROWS_AS(bleaf.graft(0, acorolla), Error);
  CHECK(CTree::edge(0).graft(0, binary).num_vertices() == 1);
  CHECK(binary.graft(1, CTree::edge(0)).num_vertices() == 1);
}

TEST_CASE("grafting at disjoint leaves commutes up to canonical form") {
  CTree base = CTree::corolla(0, {0, 0, 0});
  CTree u1 = CTree::corolla(0, {0});
  CTree u2 = CTree::corolla(0, {0, 0});
  CTree ab = base.graft(0, u1).graft(1, u2);
  CTree ba = base.graft(1, u2).graft(0, u1);
  MarkedTree mab{ab, {}};
  MarkedTree mba{ba, {}};
  CHECK(canonical_form(mab) == canonical_form(mba));
}

TEST_CASE("graft respects isomorphism") {
  CTree lower1 = CTree::build(0, {Color(0), CTree::corolla(0, {0})});
  CTree lower2 = CTree::build(0, {CTree::corolla(0, {0}), Color(0)});
  MarkedTree m1{lower1, {}}, m2{lower2, {}};
  REQUIRE(canonical_form(m1) == canonical_form(m2));
  CTree upper = CTree::corolla(0, {0, 0});
  CTree g1 = lower1.graft(0, upper);
  CTree g2 = lower2.graft(1, upper);
  MarkedTree gm1{g1, {}}, gm2{g2, {}};
  CHECK(canonical_form(gm1) == canonical_form(gm2));
}

TEST_CASE("reducedness") {
  MarkedTree bare;
  bare.tree = CTree::corolla(0, {0, 0});
  bare.ds.insert(0);
  CHECK_FALSE(is_reduced(bare));  // root flag of a distinguished vertex is not internal

  MarkedTree dcap;
  dcap.tree = CTree::corolla(0, {});
  dcap.ds.insert(0);
  MarkedTree good = MarkedTree::build(0, false, {dcap});
  CHECK(is_reduced(good));

  MarkedTree ncap;
  ncap.tree = CTree::corolla(0, {0});
  MarkedTree bad = MarkedTree::build(0, false, {ncap});
  CHECK_FALSE(is_reduced(bad));  // adjacent normal vertices

  MarkedTree dleaf;
  dleaf.tree = CTree::corolla(0, {0});
  dleaf.ds.insert(0);
  MarkedTree bad2 = MarkedTree::build(0, false, {dleaf});
  CHECK_FALSE(is_reduced(bad2));  // leaf flag on a distinguished vertex
}

TEST_CASE("enumerate_reduced: two arity-0 generators under a binary vertex") {
  ColorSet cs({"*"});
  IOPair s{0, {}};
  IOPair entry{0, {}};
  auto support = [](const IOPair&) { return true; };
  ReducedEnum r = enumerate_reduced(cs, s, 2, entry, support, 6);
  REQUIRE(r.classes.size() == 1);
  const MarkedTree& t = r.classes[0];
  CHECK(t.tree.num_vertices() == 3);
  CHECK(t.ds.size() == 2);
  CHECK(t.tree.vertex(t.tree.root()).in.size() == 2);
}

TEST_CASE("enumerate_reduced: k=0 gives corollas and the edge") {
  ColorSet cs({"*"});
  IOPair s{0, {0, 0}};
  auto support = [](const IOPair&) { return true; };
  ReducedEnum r2 = enumerate_reduced(cs, s, 0, IOPair{0, {0, 0}}, support, 6);
  CHECK(r2.classes.size() == 1);
  ReducedEnum r1 = enumerate_reduced(cs, s, 0, IOPair{0, {0}}, support, 6);
  CHECK(r1.classes.size() == 2);
}

TEST_CASE("enumerate_reduced: empty support forbids the padding") {
  ColorSet cs({"*"});
  IOPair s{0, {}};
  auto support = [](const IOPair&) { return false; };
  ReducedEnum r = enumerate_reduced(cs, s, 1, IOPair{0, {}}, support, 6);
  CHECK(r.classes.empty());
}

TEST_CASE("enumerate_reduced: unary generator over the trivial operad gives chains") {
  ColorSet cs({"*"});
  IOPair s{0, {0}};
  auto support = [](const IOPair& p) { return p.in.size() == 1; };
  for (int k = 1; k <= 3; ++k) {
    ReducedEnum r = enumerate_reduced(cs, s, k, IOPair{0, {0}}, support, 2 * k + 2);
    CHECK(r.classes.size() == 1);
    CHECK(r.classes[0].tree.num_vertices() == 2 * k + 1);
  }
}

TEST_CASE("enumerate_reduced: pinned ordering splits asymmetric children") {
  ColorSet cs({"*"});
  IOPair s{0, {0, 0}};
  auto support = [](const IOPair& p) { return p.in.size() <= 1; };
  ReducedEnum plain = enumerate_reduced(cs, s, 1, IOPair{0, {0}}, support, 6, false);
  ReducedEnum pinned = enumerate_reduced(cs, s, 1, IOPair{0, {0}}, support, 6, true);
  CHECK(plain.classes.size() == 1);
  CHECK(pinned.classes.size() == 2);
}

TEST_CASE("enumerate_reduced is append-only in the vertex bound") {
  ColorSet cs({"*"});
  IOPair s{0, {0}};
  auto support = [](const IOPair& p) { return p.in.size() == 1; };
  std::set<std::string> small, large;
  for (const MarkedTree& t : enumerate_reduced(cs, s, 2, IOPair{0, {0}}, support, 4).classes)
    small.insert(canonical_form(t));
  for (const MarkedTree& t : enumerate_reduced(cs, s, 2, IOPair{0, {0}}, support, 8).classes)
    large.insert(canonical_form(t));
  for (const std::string& e : small) CHECK(large.count(e) == 1);
}

TEST_CASE("enumerate_with_profiles") {
  ColorSet cs({"*"});
  std::vector<IOPair> profs = {{0, {0, 0}}, {0, {}}};
  auto classes = enumerate_with_profiles(cs, profs, IOPair{0, {0}});
  CHECK(classes.size() == 1);
  auto corollas = enumerate_with_profiles(cs, {{0, {0, 0}}}, IOPair{0, {0, 0}});
  CHECK(corollas.size() == 1);
  ColorSet cs2({"a", "b"});
  auto none = enumerate_with_profiles(cs2, {{1, {1}}}, IOPair{0, {0}});
  CHECK(none.empty());
}

TEST_CASE("pinned automorphisms exclude distinguished flag permutations") {
  MarkedTree cap;
  cap.tree = CTree::corolla(0, {0});
  MarkedTree dist = MarkedTree::build(0, true, {cap, cap});
  MarkedTree t = MarkedTree::build(0, false, {dist});
  CHECK(automorphism_group(t, false).group.size() == 2);
  CHECK(automorphism_group(t, true).group.size() == 1);
}
