#include "finop/circle.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <set>
#include <unordered_map>

namespace finop {

namespace {

std::string profile_key(const Profile& p) {
  std::string s = "[";
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + "]";
}

// All ordered splittings of the color multiset of bhat into m (possibly
// empty) parts, each part a sorted profile; lexicographic tuple order.
void splittings_rec(std::vector<int>& counts, int m, std::vector<Profile>& acc,
                    std::vector<std::vector<Profile>>& out) {
  if (m == 0) {
    for (int c : counts)
      if (c != 0) return;
    out.push_back(acc);
    return;
  }
  std::vector<int> take(counts.size(), 0);
  std::function<void(size_t)> go = [&](size_t i) {
    if (i == counts.size()) {
      Profile part;
      for (size_t c = 0; c < take.size(); ++c)
        for (int k = 0; k < take[c]; ++k) part.push_back(static_cast<Color>(c));
      std::vector<int> saved = counts;
      for (size_t c = 0; c < counts.size(); ++c) counts[c] -= take[c];
      acc.push_back(part);
      splittings_rec(counts, m - 1, acc, out);
      acc.pop_back();
      counts = saved;
      return;
    }
    for (int k = 0; k <= counts[i]; ++k) {
      take[i] = k;
      go(i + 1);
    }
    take[i] = 0;
  };
  go(0);
}

std::vector<std::vector<Profile>> splittings(const Profile& bhat, int m, int ncolors) {
  std::vector<int> counts(static_cast<size_t>(ncolors), 0);
  for (Color c : bhat) counts[static_cast<size_t>(c)]++;
  std::vector<std::vector<Profile>> out;
  std::vector<Profile> acc;
  splittings_rec(counts, m, acc, out);
  std::sort(out.begin(), out.end());
  return out;
}

Perm extract_block(const Perm& h, int offset, int size) {
  std::vector<int> p(static_cast<size_t>(size));
  for (int i = 0; i < size; ++i) p[static_cast<size_t>(i)] = h(offset + i) - offset;
  return Perm(std::move(p));
}

Perm embed_at(const Perm& s, int offset, int n) {
  std::vector<int> p(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<size_t>(i)] = i;
  for (int i = 0; i < s.degree(); ++i) p[static_cast<size_t>(offset + i)] = offset + s(i);
  return Perm(std::move(p));
}

}  // namespace

PowerEntry substitution_power(const SymSeq& y, const Profile& c, const Profile& bhat) {
  PowerEntry pe;
  pe.c = c;
  pe.bhat = bhat;
  pe.stab_b = PermGroup::sequence_stabilizer(bhat);
  pe.stab_c = PermGroup::sequence_stabilizer(c);
  int m = static_cast<int>(c.size());

  for (const std::vector<Profile>& parts : splittings(bhat, m, y.colors().size())) {
    bool ok = true;
    std::vector<const GSet*> stored;
    for (int j = 0; j < m && ok; ++j) {
      const GSet* e = y.entry_rep(c[static_cast<size_t>(j)], parts[static_cast<size_t>(j)]);
      if (!e) ok = false;
      stored.push_back(e);
    }
    if (!ok) continue;

    PowerSummand s;
    s.parts = parts;
    Profile concat;
    for (const Profile& p : parts) {
      s.sizes.push_back(static_cast<int>(p.size()));
      concat.insert(concat.end(), p.begin(), p.end());
    }
    s.ghat = minimal_transport(concat, bhat);

    int t = static_cast<int>(concat.size());
    std::vector<Perm> gens;
    int off = 0;
    for (int j = 0; j < m; ++j) {
      PermGroup stab = PermGroup::sequence_stabilizer(parts[static_cast<size_t>(j)]);
      for (const Perm& g : stab.generators()) gens.push_back(embed_at(g, off, t));
      off += s.sizes[static_cast<size_t>(j)];
    }
    s.block_group = PermGroup::generated(t, gens);
    s.embed = GroupHom::conjugated(s.block_group, pe.stab_b, s.ghat);

    std::vector<const FinSet*> fsets;
    for (int j = 0; j < m; ++j) fsets.push_back(&stored[static_cast<size_t>(j)]->set());
    s.carrier = product(fsets);
    for (int ci = 0; ci < s.carrier.size(); ++ci) {
      std::vector<Elem> vals = split_tuple(s.carrier.at(ci));
      std::vector<int> comps(vals.size());
      for (size_t j = 0; j < vals.size(); ++j) comps[j] = stored[j]->set().index_of(vals[j]);
      s.comps_index[comps] = ci;
      s.carrier_comps.push_back(std::move(comps));
    }

    std::vector<int> offsets(static_cast<size_t>(std::max(m, 1)), 0);
    for (int j = 1; j < m; ++j)
      offsets[static_cast<size_t>(j)] =
          offsets[static_cast<size_t>(j - 1)] + s.sizes[static_cast<size_t>(j - 1)];
    GSet carrier_gset = GSet::make(s.carrier, s.block_group, [&](const Elem& e, const Perm& h) {
      std::vector<Elem> vals = split_tuple(e);
      std::vector<Elem> moved(vals.size());
      for (int j = 0; j < m; ++j) {
        Perm blk = extract_block(h, offsets[static_cast<size_t>(j)], s.sizes[static_cast<size_t>(j)]);
        moved[static_cast<size_t>(j)] = stored[static_cast<size_t>(j)]->act(vals[static_cast<size_t>(j)], blk);
      }
      return tuple_elem(moved);
    });
    s.induced = induce(carrier_gset, s.embed);
    pe.summands.push_back(std::move(s));
  }

  std::vector<Elem> ids;
  for (size_t i = 0; i < pe.summands.size(); ++i)
    for (const Elem& e : pe.summands[i].induced.result.set().elements())
      ids.push_back("s" + std::to_string(i) + ":" + e);
  const std::vector<PowerSummand>& summands = pe.summands;
  pe.total = GSet::make(FinSet(ids), pe.stab_b, [&summands](const Elem& e, const Perm& k) {
    size_t colon = e.find(':');
    int i = std::stoi(e.substr(1, colon - 1));
    Elem cls = e.substr(colon + 1);
    return "s" + std::to_string(i) + ":" + summands[static_cast<size_t>(i)].induced.result.act(cls, k);
  });

  // index-level structures for the fast left action
  pe.elem_raw.resize(static_cast<size_t>(pe.total.set().size()));
  pe.class_to_total.resize(pe.summands.size());
  for (size_t i = 0; i < pe.summands.size(); ++i) {
    const FinSet& cl = pe.summands[i].induced.result.set();
    pe.class_to_total[i].resize(static_cast<size_t>(cl.size()));
    for (int ci = 0; ci < cl.size(); ++ci) {
      int ti = pe.total.set().index_of("s" + std::to_string(i) + ":" + cl.at(ci));
      pe.class_to_total[i][static_cast<size_t>(ci)] = ti;
      auto [xe, gp] = pe.summands[i].induced.raw_of(cl.at(ci));
      PowerEntry::ElemRaw er;
      er.summand = static_cast<int>(i);
      er.carrier = pe.summands[i].induced.carrier_copy.index_of(xe);
      er.gamma = pe.stab_b.index_of(gp);
      pe.elem_raw[static_cast<size_t>(ti)] = er;
    }
  }
  std::map<std::vector<Profile>, int> summand_of;
  for (size_t i = 0; i < pe.summands.size(); ++i) summand_of[pe.summands[i].parts] = static_cast<int>(i);
  pe.left_moves.assign(static_cast<size_t>(pe.stab_c.size()),
                       std::vector<PowerEntry::LeftMove>(pe.summands.size()));
  for (int si = 0; si < pe.stab_c.size(); ++si) {
    Perm li = pe.stab_c.elem(si).inverse();
    for (size_t d = 0; d < pe.summands.size(); ++d) {
      const PowerSummand& src = pe.summands[d];
      std::vector<Profile> parts2(static_cast<size_t>(m));
      for (int i = 0; i < m; ++i) parts2[static_cast<size_t>(i)] = src.parts[static_cast<size_t>(li(i))];
      auto it = summand_of.find(parts2);
      if (it == summand_of.end()) throw Error("substitution_power: summand orbit not closed");
      const PowerSummand& tgt = pe.summands[static_cast<size_t>(it->second)];
      PowerEntry::LeftMove mv;
      mv.target = it->second;
      Perm bmove = block_perm(li, src.sizes);
      mv.prefix = mul(tgt.ghat.inverse(), mul(bmove.inverse(), src.ghat));
      mv.carrier_map.resize(static_cast<size_t>(src.carrier.size()));
      for (int ci = 0; ci < src.carrier.size(); ++ci) {
        const std::vector<int>& comps = src.carrier_comps[static_cast<size_t>(ci)];
        std::vector<int> moved(comps.size());
        for (int i = 0; i < m; ++i) moved[static_cast<size_t>(i)] = comps[static_cast<size_t>(li(i))];
        mv.carrier_map[static_cast<size_t>(ci)] = tgt.comps_index.at(moved);
      }
      pe.left_moves[static_cast<size_t>(si)][d] = std::move(mv);
    }
  }
  return pe;
}

std::pair<int, Elem> PowerEntry::decode(const Elem& e) const {
  size_t colon = e.find(':');
  return {std::stoi(e.substr(1, colon - 1)), e.substr(colon + 1)};
}

Elem PowerEntry::encode(int summand, const Elem& cls) const {
  return "s" + std::to_string(summand) + ":" + cls;
}

PowerEntry::Raw PowerEntry::raw(const Elem& e) const {
  auto [i, cls] = decode(e);
  const PowerSummand& s = summands.at(static_cast<size_t>(i));
  auto [carrier_elem, gamma] = s.induced.raw_of(cls);
  Raw r;
  r.summand = i;
  r.values = split_tuple(carrier_elem);
  r.gamma = gamma;
  return r;
}

Elem PowerEntry::from_raw(const Raw& r) const {
  const PowerSummand& s = summands.at(static_cast<size_t>(r.summand));
  return encode(r.summand, s.induced.class_of(tuple_elem(r.values), r.gamma));
}

int PowerEntry::apply_left_index(int lambda_idx, int elem_idx) const {
  const ElemRaw& er = elem_raw.at(static_cast<size_t>(elem_idx));
  const LeftMove& mv = left_moves.at(static_cast<size_t>(lambda_idx)).at(static_cast<size_t>(er.summand));
  int c2 = mv.carrier_map.at(static_cast<size_t>(er.carrier));
  int g2 = stab_b.index_of(mul(mv.prefix, stab_b.elem(er.gamma)));
  int cls2 = summands.at(static_cast<size_t>(mv.target)).induced.class_index_of(c2, g2);
  return class_to_total.at(static_cast<size_t>(mv.target)).at(static_cast<size_t>(cls2));
}

Elem PowerEntry::apply_left(const Perm& lambda, const Elem& e) const {
  int li = stab_c.index_of(lambda);
  int ei = total.set().index_of(e);
  return total.set().at(apply_left_index(li, ei));
}

// ---------------------------------------------------------------------------

namespace {

Elem circle_id(const Profile& c, const Elem& x, const Elem& w) {
  return "o{c=" + profile_key(c) + ";x=" + x + ";w=" + w + "}";
}

// canonical representative indices under (x, w) ~ (x . s^-1, s * w)
std::pair<int, int> canonical_pair_idx(const GSet& xs, const PowerEntry& pw,
                                       const std::vector<int>& inv_idx, int x, int w) {
  std::pair<int, int> best = {x, w};
  for (int si = 0; si < pw.stab_c.size(); ++si) {
    std::pair<int, int> cand = {xs.act_index(x, inv_idx[static_cast<size_t>(si)]),
                                pw.apply_left_index(si, w)};
    if (cand < best) best = cand;
  }
  return best;
}

std::vector<int> stab_inverse_table(const PermGroup& g) {
  std::vector<int> inv(static_cast<size_t>(g.size()));
  for (int i = 0; i < g.size(); ++i) inv[static_cast<size_t>(i)] = g.index_of(g.elem(i).inverse());
  return inv;
}

}  // namespace

const PowerEntry& CircleResult::power(const Profile& c, const Profile& bhat) const {
  auto it = powers.find({c, bhat});
  if (it == powers.end()) throw Error("CircleResult: missing power entry");
  return it->second;
}

CircleResult circle(const SymSeq& x, const SymSeq& y) {
  if (!(x.colors() == y.colors())) throw Error("circle: color sets differ");
  CircleResult res;
  res.seq = SymSeq(x.colors());

  std::set<std::pair<Color, Profile>> targets;
  for (const EntryKey& xk : x.keys()) {
    int m = static_cast<int>(xk.second.size());
    if (m == 0) {
      targets.insert({xk.first, Profile{}});
      continue;
    }
    std::vector<std::vector<Profile>> slot_opts(static_cast<size_t>(m));
    bool any = true;
    for (int j = 0; j < m && any; ++j) {
      for (const EntryKey& yk : y.keys())
        if (yk.first == xk.second[static_cast<size_t>(j)])
          slot_opts[static_cast<size_t>(j)].push_back(yk.second);
      if (slot_opts[static_cast<size_t>(j)].empty()) any = false;
    }
    if (!any) continue;
    std::vector<int> idx(static_cast<size_t>(m), 0);
    while (true) {
      Profile concat;
      for (int j = 0; j < m; ++j) {
        const Profile& p = slot_opts[static_cast<size_t>(j)][static_cast<size_t>(idx[static_cast<size_t>(j)])];
        concat.insert(concat.end(), p.begin(), p.end());
      }
      targets.insert({xk.first, orbit_rep(concat)});
      int j = m - 1;
      while (j >= 0 && ++idx[static_cast<size_t>(j)] >= static_cast<int>(slot_opts[static_cast<size_t>(j)].size()))
        idx[static_cast<size_t>(j--)] = 0;
      if (j < 0) break;
    }
  }

  for (const auto& [d, bhat] : targets) {
    std::vector<Elem> ids;
    auto entry_info = std::make_shared<std::map<Elem, CircleElemInfo>>();
    for (const EntryKey& xk : x.keys()) {
      if (xk.first != d) continue;
      const Profile& c = xk.second;
      if (!res.powers.count({c, bhat}))
        res.powers.insert({{c, bhat}, substitution_power(y, c, bhat)});
      const PowerEntry& pw = res.powers.at({c, bhat});
      if (pw.total.set().empty()) continue;
      const GSet* xs = x.entry_rep(d, c);
      std::vector<int> inv_idx = stab_inverse_table(pw.stab_c);
      std::set<std::pair<int, int>> seen;
      for (int xi = 0; xi < xs->set().size(); ++xi)
        for (int wi = 0; wi < pw.total.set().size(); ++wi) {
          auto pr = canonical_pair_idx(*xs, pw, inv_idx, xi, wi);
          if (!seen.insert(pr).second) continue;
          Elem id = circle_id(c, xs->set().at(pr.first), pw.total.set().at(pr.second));
          CircleElemInfo inf;
          inf.c = c;
          inf.x = xs->set().at(pr.first);
          inf.w = pw.total.set().at(pr.second);
          (*entry_info)[id] = inf;
          ids.push_back(id);
        }
    }
    if (ids.empty()) continue;
    const SymSeq* xp = &x;
    CircleResult* rp = &res;
    Profile bh = bhat;
    GSet entry = GSet::make(FinSet(ids), PermGroup::sequence_stabilizer(bhat),
                            [xp, rp, entry_info, d, bh](const Elem& e, const Perm& k) {
                              const CircleElemInfo& inf = entry_info->at(e);
                              const PowerEntry& pw = rp->powers.at({inf.c, bh});
                              const GSet* xs = xp->entry_rep(d, inf.c);
                              std::vector<int> inv_idx = stab_inverse_table(pw.stab_c);
                              int wi = pw.total.set().index_of(inf.w);
                              int w2 = pw.total.act_index(wi, pw.stab_b.index_of(k));
                              auto pr = canonical_pair_idx(*xs, pw, inv_idx,
                                                           xs->set().index_of(inf.x), w2);
                              return circle_id(inf.c, xs->set().at(pr.first),
                                               pw.total.set().at(pr.second));
                            });
    res.seq.set_entry(d, bhat, entry);
    res.info[{d, bhat}] = std::move(*entry_info);
  }
  return res;
}

SymSeq unit_sequence(const ColorSet& colors) {
  SymSeq s(colors);
  for (Color c = 0; c < colors.size(); ++c) {
    Profile p = {c};
    s.set_entry(c, p, GSet::trivial(FinSet({"u(" + colors.name(c) + ")"}), PermGroup::trivial(1)));
  }
  return s;
}

// ---------------------------------------------------------------------------
// Unit law witnesses.

namespace {

WitnessReport unit_witness_impl(const SymSeq& x, bool left) {
  WitnessReport rep;
  SymSeq i = unit_sequence(x.colors());
  CircleResult cr = left ? circle(i, x) : circle(x, i);
  std::vector<EntryKey> xkeys = x.keys();
  std::vector<EntryKey> ckeys = cr.seq.keys();
  if (xkeys != ckeys) {
    rep.ok = false;
    rep.failure = "support differs from the original sequence";
    return rep;
  }
  for (const EntryKey& k : xkeys) {
    const GSet* src = cr.seq.entry_rep(k.first, k.second);
    const GSet* dst = x.entry_rep(k.first, k.second);
    FinFunc fwd = FinFunc::from_rule(src->set(), dst->set(), [&](const Elem& e) {
      const CircleElemInfo& inf = cr.info.at(k).at(e);
      const PowerEntry& pw = cr.power(inf.c, k.second);
      PowerEntry::Raw r = pw.raw(inf.w);
      Perm total = mul(pw.summands.at(static_cast<size_t>(r.summand)).ghat, r.gamma);
      if (left) return dst->act(r.values.at(0), total);
      return dst->act(inf.x, total);
    });
    if (!fwd.is_injective() || !fwd.is_surjective()) {
      rep.ok = false;
      rep.failure = "unit map not bijective";
      return rep;
    }
    for (const Perm& g : dst->group().generators())
      for (const Elem& e : src->set().elements())
        if (fwd(src->act(e, g)) != dst->act(fwd(e), g)) {
          rep.ok = false;
          rep.failure = "unit map not equivariant at " + e;
          return rep;
        }
    rep.maps.push_back({k, fwd});
  }
  return rep;
}

}  // namespace

WitnessReport unit_left_witness(const SymSeq& x) { return unit_witness_impl(x, true); }
WitnessReport unit_right_witness(const SymSeq& x) { return unit_witness_impl(x, false); }

// ---------------------------------------------------------------------------
// Associativity witness via flattening to three-level configurations.  A
// configuration is the outer element, per-branch middle elements, and
// per-sub bottom elements carrying their target-position assignments.

namespace {

struct FlatSub {
  Profile zrep;
  Elem z;
  std::vector<int> assign;  // local slot -> target position
};

struct FlatBranch {
  Color out = 0;
  Profile mid;
  Elem y;
  std::vector<FlatSub> subs;
};

struct FlatTriple {
  Color d = 0;
  Profile cx;
  Elem x;
  std::vector<FlatBranch> branches;
};

struct FlatContext {
  const SymSeq* X;
  const SymSeq* Y;
  const SymSeq* Z;
};

std::string encode_sub(const FlatSub& s) {
  std::string e = "z[" + profile_key(s.zrep) + "]=" + s.z + "@";
  for (int v : s.assign) e += std::to_string(v) + ",";
  return e + ";";
}

// canonical encoding: the three symmetry layers act independently, so
// minimize per sub, then per branch, then over the outer stabilizer
std::string canonical_flat(const FlatContext& ctx, const FlatTriple& t0) {
  auto min_sub = [&](Color zout, const FlatSub& s) {
    PermGroup stab = PermGroup::sequence_stabilizer(s.zrep);
    const GSet* zs = ctx.Z->entry_rep(zout, s.zrep);
    std::string best;
    bool first = true;
    for (const Perm& rho : stab.elements()) {
      FlatSub s2;
      s2.zrep = s.zrep;
      s2.z = zs->act(s.z, rho);
      s2.assign.resize(s.assign.size());
      for (size_t o = 0; o < s.assign.size(); ++o)
        s2.assign[o] = s.assign[static_cast<size_t>(rho(static_cast<int>(o)))];
      std::string enc = encode_sub(s2);
      if (first || enc < best) {
        best = enc;
        first = false;
      }
    }
    return best;
  };

  auto min_branch = [&](const FlatBranch& b) {
    PermGroup stab = PermGroup::sequence_stabilizer(b.mid);
    const GSet* ys = ctx.Y->entry_rep(b.out, b.mid);
    std::string best;
    bool first = true;
    for (const Perm& tau : stab.elements()) {
      Perm ti = tau.inverse();
      std::string enc =
          "y[" + std::to_string(b.out) + profile_key(b.mid) + "]=" + ys->act(b.y, ti) + ":";
      for (size_t i = 0; i < b.subs.size(); ++i) {
        size_t src = static_cast<size_t>(ti(static_cast<int>(i)));
        enc += min_sub(b.mid.at(src), b.subs[src]);
      }
      if (first || enc < best) {
        best = enc;
        first = false;
      }
    }
    return best;
  };

  const GSet* xs = ctx.X->entry_rep(t0.d, t0.cx);
  PermGroup sx = PermGroup::sequence_stabilizer(t0.cx);
  std::vector<std::string> bmin;
  for (const FlatBranch& b : t0.branches) bmin.push_back(min_branch(b));
  std::string best;
  bool first = true;
  for (const Perm& s : sx.elements()) {
    Perm si = s.inverse();
    std::string enc = "f{c=" + profile_key(t0.cx) + ";x=" + xs->act(t0.x, si);
    for (size_t i = 0; i < t0.branches.size(); ++i)
      enc += "|" + bmin[static_cast<size_t>(si(static_cast<int>(i)))];
    enc += "}";
    if (first || enc < best) {
      best = enc;
      first = false;
    }
  }
  return best;
}

// flatten an element of (X o Y) o Z
FlatTriple flatten_left(const CircleResult& inner, const CircleResult& outer, const EntryKey& key,
                        const Elem& e) {
  const CircleElemInfo& top = outer.info.at(key).at(e);
  const Profile& cw = top.c;
  const PowerEntry& pw_outer = outer.power(cw, key.second);
  PowerEntry::Raw zraw = pw_outer.raw(top.w);
  const PowerSummand& zsum = pw_outer.summands.at(static_cast<size_t>(zraw.summand));
  Perm g_outer_inv = mul(zsum.ghat, zraw.gamma).inverse();

  const CircleElemInfo& winfo = inner.info.at({key.first, cw}).at(top.x);
  const PowerEntry& pw_inner = inner.power(winfo.c, cw);
  PowerEntry::Raw yraw = pw_inner.raw(winfo.w);
  const PowerSummand& ysum = pw_inner.summands.at(static_cast<size_t>(yraw.summand));
  Perm g_w_inv = mul(ysum.ghat, yraw.gamma).inverse();

  int mblocks = static_cast<int>(zsum.parts.size());
  std::vector<int> zoff(static_cast<size_t>(mblocks + 1), 0);
  for (int p = 0; p < mblocks; ++p)
    zoff[static_cast<size_t>(p + 1)] = zoff[static_cast<size_t>(p)] + zsum.sizes[static_cast<size_t>(p)];
  std::vector<std::vector<int>> assigns(static_cast<size_t>(mblocks));
  for (int p = 0; p < mblocks; ++p) {
    std::vector<int> a(static_cast<size_t>(zsum.sizes[static_cast<size_t>(p)]));
    for (int o = 0; o < zsum.sizes[static_cast<size_t>(p)]; ++o)
      a[static_cast<size_t>(o)] = g_outer_inv(zoff[static_cast<size_t>(p)] + o);
    assigns[static_cast<size_t>(p)] = std::move(a);
  }

  FlatTriple t;
  t.d = key.first;
  t.cx = winfo.c;
  t.x = winfo.x;
  int m = static_cast<int>(ysum.parts.size());
  int q = 0;
  for (int j = 0; j < m; ++j) {
    FlatBranch b;
    b.out = t.cx.at(static_cast<size_t>(j));
    b.mid = ysum.parts[static_cast<size_t>(j)];
    b.y = yraw.values[static_cast<size_t>(j)];
    for (int i = 0; i < ysum.sizes[static_cast<size_t>(j)]; ++i, ++q) {
      int p = g_w_inv(q);
      FlatSub zs;
      zs.zrep = zsum.parts.at(static_cast<size_t>(p));
      zs.z = zraw.values.at(static_cast<size_t>(p));
      zs.assign = assigns.at(static_cast<size_t>(p));
      b.subs.push_back(std::move(zs));
    }
    t.branches.push_back(std::move(b));
  }
  return t;
}

// flatten an element of X o (Y o Z)
FlatTriple flatten_right(const CircleResult& inner, const CircleResult& outer, const EntryKey& key,
                         const Elem& e) {
  const CircleElemInfo& top = outer.info.at(key).at(e);
  const PowerEntry& pw_outer = outer.power(top.c, key.second);
  PowerEntry::Raw wraw = pw_outer.raw(top.w);
  const PowerSummand& wsum = pw_outer.summands.at(static_cast<size_t>(wraw.summand));
  Perm g_inv = mul(wsum.ghat, wraw.gamma).inverse();

  FlatTriple t;
  t.d = key.first;
  t.cx = top.c;
  t.x = top.x;
  int m = static_cast<int>(wsum.parts.size());
  std::vector<int> woff(static_cast<size_t>(m + 1), 0);
  for (int j = 0; j < m; ++j)
    woff[static_cast<size_t>(j + 1)] = woff[static_cast<size_t>(j)] + wsum.sizes[static_cast<size_t>(j)];
  for (int j = 0; j < m; ++j) {
    Color cj = t.cx.at(static_cast<size_t>(j));
    const Profile& wrep = wsum.parts[static_cast<size_t>(j)];
    const CircleElemInfo& winfo = inner.info.at({cj, wrep}).at(wraw.values[static_cast<size_t>(j)]);
    const PowerEntry& pw_inner = inner.power(winfo.c, wrep);
    PowerEntry::Raw zraw = pw_inner.raw(winfo.w);
    const PowerSummand& zsum = pw_inner.summands.at(static_cast<size_t>(zraw.summand));
    Perm gj_inv = mul(zsum.ghat, zraw.gamma).inverse();
    FlatBranch b;
    b.out = cj;
    b.mid = winfo.c;
    b.y = winfo.x;
    int zloc = 0;
    for (size_t i = 0; i < zsum.parts.size(); ++i) {
      FlatSub zs;
      zs.zrep = zsum.parts[i];
      zs.z = zraw.values[i];
      for (int o = 0; o < zsum.sizes[i]; ++o) {
        int q_local = gj_inv(zloc + o);
        zs.assign.push_back(g_inv(woff[static_cast<size_t>(j)] + q_local));
      }
      zloc += zsum.sizes[i];
      b.subs.push_back(std::move(zs));
    }
    t.branches.push_back(std::move(b));
  }
  return t;
}

}  // namespace

WitnessReport associativity_witness(const SymSeq& x, const SymSeq& y, const SymSeq& z,
                                    int size_cap) {
  WitnessReport rep;
  FlatContext ctx{&x, &y, &z};

  CircleResult xy = circle(x, y);
  CircleResult xy_z = circle(xy.seq, z);
  CircleResult yz = circle(y, z);
  CircleResult x_yz = circle(x, yz.seq);

  long total = 0;
  for (const EntryKey& k : xy_z.seq.keys())
    total += xy_z.seq.entry_rep(k.first, k.second)->set().size();
  if (total > size_cap) throw Error("associativity_witness: entry sizes exceed the cap");

  std::vector<EntryKey> lk = xy_z.seq.keys();
  std::vector<EntryKey> rk = x_yz.seq.keys();
  if (lk != rk) {
    rep.ok = false;
    rep.failure = "the two products have different support";
    return rep;
  }

  for (const EntryKey& k : lk) {
    const GSet* left = xy_z.seq.entry_rep(k.first, k.second);
    const GSet* right = x_yz.seq.entry_rep(k.first, k.second);
    std::unordered_map<std::string, Elem> lcanon, rcanon;
    for (const Elem& e : left->set().elements()) {
      std::string c = canonical_flat(ctx, flatten_left(xy, xy_z, k, e));
      if (lcanon.count(c)) {
        rep.ok = false;
        rep.failure = "flattening not injective on the left at " + e;
        return rep;
      }
      lcanon[c] = e;
    }
    for (const Elem& e : right->set().elements()) {
      std::string c = canonical_flat(ctx, flatten_right(yz, x_yz, k, e));
      if (rcanon.count(c)) {
        rep.ok = false;
        rep.failure = "flattening not injective on the right at " + e;
        return rep;
      }
      rcanon[c] = e;
    }
    if (lcanon.size() != rcanon.size()) {
      rep.ok = false;
      rep.failure = "entry cardinalities differ";
      return rep;
    }
    std::vector<int> fwd_map(static_cast<size_t>(left->set().size()));
    for (const auto& [c, e] : lcanon) {
      auto it = rcanon.find(c);
      if (it == rcanon.end()) {
        rep.ok = false;
        rep.failure = "no matching element for " + e;
        return rep;
      }
      fwd_map[static_cast<size_t>(left->set().index_of(e))] = right->set().index_of(it->second);
    }
    FinFunc fwd(left->set(), right->set(), fwd_map);
    if (!fwd.is_injective()) {
      rep.ok = false;
      rep.failure = "witness not bijective";
      return rep;
    }
    for (const Perm& gp : left->group().generators())
      for (const Elem& e : left->set().elements())
        if (fwd(left->act(e, gp)) != right->act(fwd(e), gp)) {
          rep.ok = false;
          rep.failure = "witness not equivariant at " + e;
          return rep;
        }
    rep.maps.push_back({k, fwd});
  }
  return rep;
}

}  // namespace finop
