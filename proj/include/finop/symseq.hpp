#ifndef FINOP_SYMSEQ_HPP
#define FINOP_SYMSEQ_HPP

#include <map>
#include <optional>
#include <utility>

#include "finop/profiles.hpp"

// Colored symmetric sequences valued in finite sets.  Entries are stored
// once per profile orbit, as a right action of the orbit stabilizer on the
// value at the canonical representative; values at other profiles are
// obtained by transport along the minimal permutation.

namespace finop {

using EntryKey = std::pair<Color, Profile>;  // (output color, orbit representative)

// A value materialized at an arbitrary profile of an orbit.  Element
// labels are derived deterministically from the stored elements and the
// canonical transport permutation.
class MatEntry {
public:
  MatEntry() = default;
  MatEntry(GSet stored, Perm transport, Profile actual);

  const FinSet& set() const { return labeled_; }
  const Perm& transport() const { return transport_; }
  const Profile& profile() const { return actual_; }
  const GSet& stored_gset() const { return stored_; }

  Elem label(const Elem& stored) const;
  Elem stored(const Elem& label) const;
  // Action of s in Stab(actual): label(x) . s = label(x . (t s t^-1)).
  Elem act(const Elem& label, const Perm& s) const;

  static Elem label_of(const Elem& stored, const Perm& transport);

private:
  GSet stored_;
  Perm transport_;
  Profile actual_;
  FinSet labeled_;
};

class SymSeq {
public:
  SymSeq() = default;
  explicit SymSeq(ColorSet colors) : colors_(std::move(colors)) {}

  const ColorSet& colors() const { return colors_; }

  // Stores a value at the orbit of `profile`.  The group of `value` must be
  // the stabilizer of the orbit representative.
  void set_entry(Color d, const Profile& profile, GSet value);
  // nullptr when the entry is empty / absent.
  const GSet* entry_rep(Color d, const Profile& rep) const;
  // Value at an arbitrary profile, by canonical transport.  Empty entries
  // materialize as empty sets.
  MatEntry entry(Color d, const Profile& actual) const;

  std::vector<EntryKey> keys() const;
  bool empty() const { return table_.empty(); }
  int max_arity() const;
  bool nonempty_at(Color d, const Profile& rep) const;

  // A colored object placed in arity 0: entries only at the empty profile.
  static SymSeq concentrated_arity0(const ColorSet& colors, const std::map<Color, FinSet>& values);

  bool is_concentrated_in_arity(int n) const;

private:
  ColorSet colors_;
  std::map<EntryKey, GSet> table_;
};

// Per-orbit equivariant map between two symmetric sequences over the same
// colors.  Components are given on stored representatives.
class SymSeqMap {
public:
  SymSeqMap() = default;
  SymSeqMap(const SymSeq& src, const SymSeq& dst,
            std::map<EntryKey, FinFunc> components);  // validates equivariance

  const FinFunc* component(const EntryKey& k) const;
  const std::map<EntryKey, FinFunc>& components() const { return comps_; }

private:
  std::map<EntryKey, FinFunc> comps_;
};

struct FreenessReport {
  bool free = true;
  // set when not free: entry key, element, group element
  std::optional<std::tuple<EntryKey, Elem, std::string>> witness;
};

// True iff every stored stabilizer action is free.
FreenessReport is_levelwise_free(const SymSeq& x);

}  // namespace finop

#endif
