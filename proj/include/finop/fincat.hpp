#ifndef FINOP_FINCAT_HPP
#define FINOP_FINCAT_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

// Elementary machinery for the category of finite sets: sets, functions,
// permutation groups, right group actions, quotients, pushouts, and
// induction along group homomorphisms.

namespace finop {

class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

using Elem = std::string;

// Structured element constructors.  All composite elements are built with
// these so that identifiers stay parseable and canonically ordered.
Elem tuple_elem(const std::vector<Elem>& parts);
std::vector<Elem> split_tuple(const Elem& e);

// ---------------------------------------------------------------------------
// FinSet: an ordered finite set of distinct element identifiers.
// Cheap to copy; the payload is shared and immutable.

class FinSet {
public:
  FinSet();
  explicit FinSet(std::vector<Elem> elems);  // sorts; throws on duplicates

  int size() const { return static_cast<int>(d_->elems.size()); }
  bool empty() const { return d_->elems.empty(); }
  const Elem& at(int i) const { return d_->elems.at(static_cast<size_t>(i)); }
  int index_of(const Elem& e) const;
  bool contains(const Elem& e) const { return d_->index.count(e) > 0; }
  const std::vector<Elem>& elements() const { return d_->elems; }

  bool operator==(const FinSet& o) const { return d_ == o.d_ || d_->elems == o.d_->elems; }

  static FinSet singleton(const Elem& e) { return FinSet({e}); }
  static FinSet unit() { return FinSet({"()"}); }

private:
  struct Data {
    std::vector<Elem> elems;
    std::unordered_map<Elem, int> index;
  };
  std::shared_ptr<const Data> d_;
};

FinSet product(const std::vector<const FinSet*>& factors);  // tuple elements
FinSet disjoint_union(const FinSet& a, const FinSet& b, const std::string& tag_a,
                      const std::string& tag_b);

// ---------------------------------------------------------------------------
// FinFunc: a total function between finite sets, stored by index table.

class FinFunc {
public:
  FinFunc() = default;
  FinFunc(FinSet dom, FinSet cod, std::vector<int> map);
  static FinFunc from_rule(const FinSet& dom, const FinSet& cod,
                           const std::function<Elem(const Elem&)>& rule);
  static FinFunc identity(const FinSet& s);

  const FinSet& dom() const { return dom_; }
  const FinSet& cod() const { return cod_; }
  Elem operator()(const Elem& e) const {
    return cod_.at(map_.at(static_cast<size_t>(dom_.index_of(e))));
  }
  int apply_index(int i) const { return map_.at(static_cast<size_t>(i)); }
  bool is_injective() const;
  bool is_surjective() const;
  FinFunc then(const FinFunc& g) const;  // g after *this

private:
  FinSet dom_, cod_;
  std::vector<int> map_;
};

// ---------------------------------------------------------------------------
// Perm: permutation of {0..n-1}, one-line notation p[i] = image of i.

class Perm {
public:
  Perm() = default;
  explicit Perm(std::vector<int> images);
  static Perm identity(int n);
  static Perm transposition(int n, int i, int j);

  int degree() const { return static_cast<int>(p_.size()); }
  int operator()(int i) const { return p_[static_cast<size_t>(i)]; }
  bool is_identity() const;
  Perm inverse() const;
  const std::vector<int>& images() const { return p_; }
  std::string str() const;

  bool operator==(const Perm& o) const { return p_ == o.p_; }
  bool operator!=(const Perm& o) const { return p_ != o.p_; }
  bool operator<(const Perm& o) const { return p_ < o.p_; }

private:
  std::vector<int> p_;
  friend Perm mul(const Perm&, const Perm&);
};

// Function composition: mul(a,b)(i) = a(b(i)).  Right-action convention
// everywhere: acting by g then by h is acting by mul(g,h).
Perm mul(const Perm& a, const Perm& b);

// Right action on sequences: result[i] = seq[s(i)].
template <typename T>
std::vector<T> act_right(const std::vector<T>& seq, const Perm& s) {
  std::vector<T> r(seq.size());
  for (size_t i = 0; i < seq.size(); ++i) r[i] = seq[static_cast<size_t>(s(static_cast<int>(i)))];
  return r;
}

// Block-diagonal permutation acting within consecutive blocks.
Perm block_diag(const std::vector<Perm>& blocks);

// Block rearrangement: the unique permutation with
//   concat(b_{sigma(1)},...,b_{sigma(m)}) = concat(b_1,...,b_m) . block_perm(sigma, sizes)
// where sizes[i] = |b_i| in the original order.
Perm block_perm(const Perm& sigma, const std::vector<int>& sizes);

// ---------------------------------------------------------------------------
// PermGroup: a finite permutation group stored by full element list.
// Payload is shared and immutable; copies are cheap.  Full symmetric groups
// are supported up to degree 8.

class PermGroup {
public:
  PermGroup();

  static PermGroup trivial(int degree);
  static PermGroup symmetric(int n);
  static PermGroup from_elements(int degree, std::vector<Perm> elems);  // validates
  static PermGroup generated(int degree, const std::vector<Perm>& gens);
  static PermGroup young(const std::vector<int>& block_sizes);
  // Stabilizer {s : seq . s = seq} of a sequence under the right action.
  static PermGroup sequence_stabilizer(const std::vector<int>& seq);

  int degree() const;
  int size() const;
  const Perm& elem(int i) const;
  const std::vector<Perm>& elements() const;
  int index_of(const Perm& p) const;
  bool contains(const Perm& p) const;
  const std::vector<Perm>& generators() const;  // small generating set
  // Generator word of element i as a chain: w(i) = w(parent(i)) * gen(i).
  int word_parent(int i) const;
  int word_gen(int i) const;  // ordinal into generators(); -1 for the identity
  bool operator==(const PermGroup& o) const;

private:
  struct Data;
  std::shared_ptr<const Data> d_;
  explicit PermGroup(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  static PermGroup from_sorted(int degree, std::vector<Perm> elems, std::vector<Perm> gens);
};

// ---------------------------------------------------------------------------
// GroupHom: homomorphism between permutation groups, stored as a full table.

class GroupHom {
public:
  GroupHom() = default;
  // Validates the homomorphism property; throws Error on a composition
  // table mismatch.
  static GroupHom make(PermGroup dom, PermGroup cod, const std::function<Perm(const Perm&)>& rule);
  static GroupHom inclusion(const PermGroup& sub, const PermGroup& big);
  // h -> g^-1 h g, an inclusion twisted by conjugation.
  static GroupHom conjugated(const PermGroup& dom, const PermGroup& cod, const Perm& g);

  const PermGroup& dom() const { return dom_; }
  const PermGroup& cod() const { return cod_; }
  Perm apply(const Perm& h) const;
  int apply_index(int i) const { return img_.at(static_cast<size_t>(i)); }
  bool is_injective() const;
  GroupHom then(const GroupHom& g) const;

private:
  PermGroup dom_, cod_;
  std::vector<int> img_;  // dom element index -> cod element index
};

// ---------------------------------------------------------------------------
// GSet: a finite set with a right action of a permutation group.  The
// action is stored on the group's generators; arbitrary elements act
// through their generator words.

class GSet {
public:
  GSet() = default;
  // Builds the generator action from the rule and checks the action axioms
  // (exhaustively for small groups, on deterministic samples otherwise).
  static GSet make(FinSet base, PermGroup group,
                   const std::function<Elem(const Elem&, const Perm&)>& rule);
  static GSet trivial(FinSet base, PermGroup group);
  static GSet regular(const PermGroup& group);

  const FinSet& set() const { return base_; }
  const PermGroup& group() const { return grp_; }
  Elem act(const Elem& x, const Perm& g) const;
  int act_index(int x, int group_elem_index) const;
  // True iff the action is free; on failure reports the first fixed pair.
  bool is_free(std::pair<Elem, std::string>* witness = nullptr) const;
  // Restriction to an action-stable subset.
  GSet restrict_to(const FinSet& subset) const;

private:
  FinSet base_;
  PermGroup grp_;
  std::vector<std::vector<int>> gen_act_;  // per generator ordinal
};

// ---------------------------------------------------------------------------
// Colimit constructions.

struct Quotient {
  FinSet classes;  // one canonical (minimal) representative per orbit
  FinFunc projection;
};

// Orbit set of a right action; representative is the minimum element of
// each orbit in canonical order.
Quotient orbit_quotient(const GSet& s);

struct Induced {
  GSet result;  // right G-set
  // Class of a raw pair (x, g); raw pairs with x in the original carrier.
  Elem class_of(const Elem& x, const Perm& g) const;
  int class_index_of(int x, int g) const;
  // Canonical raw representative (carrier element, G element) of a class.
  std::pair<Elem, Perm> raw_of(const Elem& cls) const;

  std::vector<std::vector<int>> class_index;  // [x][g] -> index in result.set()
  std::vector<std::pair<int, int>> raw_rep;   // class -> (x index, g index)
  FinSet carrier_copy;
  PermGroup domgrp_copy;
  PermGroup codgrp_copy;
};

// Induction of a right H-set along f : H -> G, the quotient of x * G by
// (a.h, g) ~ (a, f(h).g) with right G-action by translation.
Induced induce(const GSet& x, const GroupHom& f);

struct PushoutResult {
  FinSet object;
  FinFunc from_b;
  FinFunc from_c;
};

// Pushout of B <-f- A -g-> C in finite sets: (B ⊔ C)/(f(a) ~ g(a)).
PushoutResult pushout(const FinFunc& f, const FinFunc& g);

}  // namespace finop

#endif
