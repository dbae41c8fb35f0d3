#ifndef FINOP_CIRCLE_HPP
#define FINOP_CIRCLE_HPP

#include <map>
#include <utility>
#include <vector>

#include "finop/symseq.hpp"

// The colored circle product on symmetric sequences, computed by explicit
// finite colimits: substitution powers as coproducts of inductions along
// block embeddings, and the tensor over the orbit groupoid as a stabilizer
// quotient at the canonical representative.

namespace finop {

// One coproduct summand of the substitution power: an ordered tuple of
// orbit representatives whose concatenation lies in the target orbit,
// together with the induction of the tensor of entries along the
// (conjugated) block embedding.
struct PowerSummand {
  std::vector<Profile> parts;   // orbit representatives, one per slot of c
  std::vector<int> sizes;       // |parts[j]|
  PermGroup block_group;        // prod_j Stab(parts[j]) as block permutations
  Perm ghat;                    // minimal g with concat(parts) . g = bhat
  GroupHom embed;               // h -> ghat^-1 h ghat : block_group -> Stab(bhat)
  FinSet carrier;               // tuples of stored entry elements
  Induced induced;
  std::vector<std::vector<int>> carrier_comps;  // carrier idx -> component indices
  std::map<std::vector<int>, int> comps_index;
};

// The value of the substitution power of Y along the profile c at the
// orbit representative bhat, as a right Stab(bhat)-set with a left action
// of Stab(c) when c is itself an orbit representative.
class PowerEntry {
public:
  Profile c;
  Profile bhat;
  PermGroup stab_b;
  PermGroup stab_c;
  std::vector<PowerSummand> summands;
  GSet total;  // element ids "s<i>:<class>"

  std::pair<int, Elem> decode(const Elem& e) const;
  Elem encode(int summand, const Elem& cls) const;
  // Raw data of an element: summand index, tuple of stored entry elements,
  // and gamma in Stab(bhat) (raw assignment is ghat . gamma).
  struct Raw {
    int summand;
    std::vector<Elem> values;
    Perm gamma;
  };
  Raw raw(const Elem& e) const;
  Elem from_raw(const Raw& r) const;
  // Functorial left action of lambda in Stab(c) (as a left permutation).
  Elem apply_left(const Perm& lambda, const Elem& e) const;
  // Index-level left action: lambda given as an element index of stab_c.
  int apply_left_index(int lambda_idx, int elem_idx) const;

  // internal index structures
  struct ElemRaw {
    int summand;
    int carrier;
    int gamma;
  };
  std::vector<ElemRaw> elem_raw;                  // total index -> raw indices
  std::vector<std::vector<int>> class_to_total;   // [summand][class idx] -> total idx
  struct LeftMove {
    int target = -1;
    std::vector<int> carrier_map;
    Perm prefix;
  };
  std::vector<std::vector<LeftMove>> left_moves;  // [stab_c elem idx][summand]
};

PowerEntry substitution_power(const SymSeq& y, const Profile& c, const Profile& bhat);

// Decoded canonical representative of a circle-product element.
struct CircleElemInfo {
  Profile c;       // contributing orbit representative for the outer factor
  Elem x;          // stored outer element at (d; c)
  Elem w;          // element of the power entry for (c, bhat)
};

struct CircleResult {
  SymSeq seq;
  std::map<EntryKey, std::map<Elem, CircleElemInfo>> info;
  // keyed by (c, bhat)
  std::map<std::pair<Profile, Profile>, PowerEntry> powers;

  const PowerEntry& power(const Profile& c, const Profile& bhat) const;
};

CircleResult circle(const SymSeq& x, const SymSeq& y);

// The monoidal unit: one singleton entry at (c; (c)) per color.
SymSeq unit_sequence(const ColorSet& colors);

// An entrywise bijection witness between two symmetric sequences.
struct EntryBijection {
  EntryKey key;
  FinFunc fwd;  // bijective and equivariant
};

struct WitnessReport {
  bool ok = true;
  std::string failure;
  std::vector<EntryBijection> maps;
};

// Explicit equivariant bijections I o X ~ X and X o I ~ X.
WitnessReport unit_left_witness(const SymSeq& x);
WitnessReport unit_right_witness(const SymSeq& x);

// Explicit equivariant bijections (X o Y) o Z ~ X o (Y o Z), entry by
// entry.  Throws Error when an intermediate entry exceeds size_cap.
WitnessReport associativity_witness(const SymSeq& x, const SymSeq& y, const SymSeq& z,
                                    int size_cap = 200000);

}  // namespace finop

#endif
