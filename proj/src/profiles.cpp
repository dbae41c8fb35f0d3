#include "finop/profiles.hpp"

#include <algorithm>
#include <numeric>

namespace finop {

ColorSet::ColorSet(std::vector<std::string> names) : names_(std::move(names)) {
  for (size_t i = 0; i < names_.size(); ++i)
    for (size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j]) throw Error("ColorSet: duplicate color " + names_[i]);
}

const std::string& ColorSet::name(Color c) const {
  if (c < 0 || c >= size()) throw Error("ColorSet: color index out of range");
  return names_[static_cast<size_t>(c)];
}

Color ColorSet::index_of(const std::string& name) const {
  for (size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<Color>(i);
  throw Error("ColorSet: unknown color '" + name + "'");
}

Profile ColorSet::parse_profile(const std::vector<std::string>& names) const {
  Profile p;
  p.reserve(names.size());
  for (size_t i = 0; i < names.size(); ++i) {
    bool found = false;
    for (size_t c = 0; c < names_.size(); ++c)
      if (names_[c] == names[i]) {
        p.push_back(static_cast<Color>(c));
        found = true;
        break;
      }
    if (!found)
      throw Error("undeclared color '" + names[i] + "' at index " + std::to_string(i));
  }
  return p;
}

std::string ColorSet::profile_str(const Profile& p) const {
  std::string s = "(";
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += name(p[i]);
  }
  return s + ")";
}

Profile orbit_rep(const Profile& p) {
  Profile r = p;
  std::sort(r.begin(), r.end());
  return r;
}

long ProfileOrbit::orbit_size() const {
  long f = 1;
  for (int i = 2; i <= arity(); ++i) f *= i;
  return f / stab.size();
}

ProfileOrbit orbit_of(const Profile& p) {
  ProfileOrbit o;
  o.rep = orbit_rep(p);
  o.stab = PermGroup::sequence_stabilizer(o.rep);
  return o;
}

ConcatEmbedding concat_embedding(const std::vector<Profile>& parts) {
  ConcatEmbedding r;
  std::vector<int> sizes;
  for (const Profile& b : parts) {
    r.concatenated.insert(r.concatenated.end(), b.begin(), b.end());
    sizes.push_back(static_cast<int>(b.size()));
  }
  int n = static_cast<int>(r.concatenated.size());
  r.domain = PermGroup::young(sizes);
  r.embedding = GroupHom::inclusion(r.domain, PermGroup::symmetric(n));
  return r;
}

Perm minimal_transport(const Profile& rep, const Profile& p) {
  if (rep.size() != p.size()) throw Error("minimal_transport: length mismatch");
  int n = static_cast<int>(rep.size());
  // least t in one-line order with rep[t(i)] = p[i]; greedy works since
  // choosing the smallest unused preimage position at each i is optimal
  std::vector<bool> used(static_cast<size_t>(n), false);
  std::vector<int> t(static_cast<size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!used[static_cast<size_t>(j)] && rep[static_cast<size_t>(j)] == p[static_cast<size_t>(i)]) {
        t[static_cast<size_t>(i)] = j;
        used[static_cast<size_t>(j)] = true;
        break;
      }
    }
    if (t[static_cast<size_t>(i)] < 0) throw Error("minimal_transport: profiles not in the same orbit");
  }
  return Perm(std::move(t));
}

}  // namespace finop
