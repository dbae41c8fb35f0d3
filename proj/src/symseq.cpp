#include "finop/symseq.hpp"

#include <algorithm>

namespace finop {

Elem MatEntry::label_of(const Elem& stored, const Perm& transport) {
  bool is_id = true;
  for (int i = 0; i < transport.degree(); ++i)
    if (transport(i) != i) { is_id = false; break; }
  if (is_id) return stored;
  return "mv(" + stored + ";" + transport.str() + ")";
}

MatEntry::MatEntry(GSet stored, Perm transport, Profile actual)
    : stored_(std::move(stored)), transport_(std::move(transport)), actual_(std::move(actual)) {
  std::vector<Elem> labels;
  for (const Elem& e : stored_.set().elements()) labels.push_back(label_of(e, transport_));
  labeled_ = FinSet(std::move(labels));
}

Elem MatEntry::label(const Elem& stored) const {
  (void)stored_.set().index_of(stored);
  return label_of(stored, transport_);
}

Elem MatEntry::stored(const Elem& label) const {
  for (const Elem& e : stored_.set().elements())
    if (label_of(e, transport_) == label) return e;
  throw Error("MatEntry: unknown label " + label);
}

Elem MatEntry::act(const Elem& lab, const Perm& s) const {
  Elem x = stored(lab);
  Perm conj = mul(mul(transport_, s), transport_.inverse());
  return label(stored_.act(x, conj));
}

void SymSeq::set_entry(Color d, const Profile& profile, GSet value) {
  if (d < 0 || d >= colors_.size()) throw Error("SymSeq: output color out of range");
  for (Color c : profile)
    if (c < 0 || c >= colors_.size()) throw Error("SymSeq: input color out of range");
  Profile rep = orbit_rep(profile);
  PermGroup stab = PermGroup::sequence_stabilizer(rep);
  if (!(value.group() == stab))
    throw Error("SymSeq: entry group is not the orbit stabilizer");
  if (value.set().empty()) {
    table_.erase({d, rep});
    return;
  }
  table_.insert_or_assign({d, rep}, std::move(value));
}

const GSet* SymSeq::entry_rep(Color d, const Profile& rep) const {
  auto it = table_.find({d, rep});
  return it == table_.end() ? nullptr : &it->second;
}

MatEntry SymSeq::entry(Color d, const Profile& actual) const {
  Profile rep = orbit_rep(actual);
  const GSet* stored = entry_rep(d, rep);
  Perm t = minimal_transport(rep, actual);
  if (!stored) {
    GSet empty = GSet::trivial(FinSet(), PermGroup::sequence_stabilizer(rep));
    return MatEntry(empty, t, actual);
  }
  return MatEntry(*stored, t, actual);
}

std::vector<EntryKey> SymSeq::keys() const {
  std::vector<EntryKey> ks;
  for (const auto& [k, v] : table_) ks.push_back(k);
  return ks;
}

int SymSeq::max_arity() const {
  int m = 0;
  for (const auto& [k, v] : table_) m = std::max(m, static_cast<int>(k.second.size()));
  return m;
}

bool SymSeq::nonempty_at(Color d, const Profile& rep) const {
  return entry_rep(d, orbit_rep(rep)) != nullptr;
}

SymSeq SymSeq::concentrated_arity0(const ColorSet& colors, const std::map<Color, FinSet>& values) {
  SymSeq s(colors);
  for (const auto& [c, v] : values) {
    if (v.empty()) continue;
    s.set_entry(c, Profile{}, GSet::trivial(v, PermGroup::trivial(0)));
  }
  return s;
}

bool SymSeq::is_concentrated_in_arity(int n) const {
  for (const auto& [k, v] : table_)
    if (static_cast<int>(k.second.size()) != n) return false;
  return true;
}

SymSeqMap::SymSeqMap(const SymSeq& src, const SymSeq& dst, std::map<EntryKey, FinFunc> components)
    : comps_(std::move(components)) {
  for (const auto& [k, f] : comps_) {
    const GSet* s = src.entry_rep(k.first, k.second);
    const GSet* t = dst.entry_rep(k.first, k.second);
    if (!s) throw Error("SymSeqMap: component at empty source entry");
    if (!t && !f.cod().empty()) throw Error("SymSeqMap: component into empty target entry");
    if (!(f.dom() == s->set())) throw Error("SymSeqMap: component domain mismatch");
    if (t) {
      if (!(f.cod() == t->set())) throw Error("SymSeqMap: component codomain mismatch");
      for (const Perm& g : s->group().generators())
        for (const Elem& x : s->set().elements())
          if (f(s->act(x, g)) != t->act(f(x), g))
            throw Error("SymSeqMap: component not equivariant at " + x);
    }
  }
  // every nonempty source entry needs a component
  for (const EntryKey& k : src.keys())
    if (!comps_.count(k)) throw Error("SymSeqMap: missing component");
}

const FinFunc* SymSeqMap::component(const EntryKey& k) const {
  auto it = comps_.find(k);
  return it == comps_.end() ? nullptr : &it->second;
}

FreenessReport is_levelwise_free(const SymSeq& x) {
  FreenessReport r;
  for (const EntryKey& k : x.keys()) {
    const GSet* v = x.entry_rep(k.first, k.second);
    std::pair<Elem, std::string> w;
    if (!v->is_free(&w)) {
      r.free = false;
      r.witness = {k, w.first, w.second};
      return r;
    }
  }
  return r;
}

}  // namespace finop
