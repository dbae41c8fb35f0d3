#ifndef FINOP_PROFILES_HPP
#define FINOP_PROFILES_HPP

#include <string>
#include <vector>

#include "finop/fincat.hpp"

// Colors, profiles (finite color sequences), their orbits under the
// symmetric-group action, stabilizers, and the concatenation embedding.

namespace finop {

using Color = int;
using Profile = std::vector<Color>;

class ColorSet {
public:
  ColorSet() = default;
  explicit ColorSet(std::vector<std::string> names);  // declared order is canonical

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(Color c) const;
  Color index_of(const std::string& name) const;  // throws on unknown color
  bool operator==(const ColorSet& o) const { return names_ == o.names_; }

  // Parses a list of color names; rejection messages carry the offending index.
  Profile parse_profile(const std::vector<std::string>& names) const;
  std::string profile_str(const Profile& p) const;

private:
  std::vector<std::string> names_;
};

// Canonical key of a profile orbit: the sorted representative.
Profile orbit_rep(const Profile& p);

struct ProfileOrbit {
  Profile rep;       // lexicographically minimal in declared color order
  PermGroup stab;    // { s : rep . s = rep }, right-action stabilizer

  int arity() const { return static_cast<int>(rep.size()); }
  long orbit_size() const;
};

ProfileOrbit orbit_of(const Profile& p);

struct IOPair {
  Color out = 0;
  Profile in;

  bool operator==(const IOPair& o) const { return out == o.out && in == o.in; }
  bool operator<(const IOPair& o) const {
    return out != o.out ? out < o.out : in < o.in;
  }
};

// Concatenation of profiles together with the block embedding
// prod_j Sym(|b_j|) -> Sym(|b|), realized on block-diagonal permutations.
struct ConcatEmbedding {
  Profile concatenated;
  PermGroup domain;     // block-diagonal subgroup, degree |b|
  GroupHom embedding;   // inclusion into Sym(|b|)
};

ConcatEmbedding concat_embedding(const std::vector<Profile>& parts);

// Minimal transport: the least permutation t with rep . t = p.
Perm minimal_transport(const Profile& rep, const Profile& p);

}  // namespace finop

#endif
