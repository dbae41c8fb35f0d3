#include "finop/trees.hpp"

#include <algorithm>
#include <map>

namespace finop {

// ---------------------------------------------------------------------------
// CTree basics

CTree CTree::edge(Color c) {
  CTree t;
  t.edge_color_ = c;
  return t;
}

CTree CTree::corolla(Color out, const Profile& inputs) {
  CTree t;
  Vertex v;
  v.out = out;
  for (Color c : inputs) v.in.push_back(Slot{true, c, -1});
  t.verts_.push_back(std::move(v));
  t.root_ = 0;
  return t;
}

Color CTree::out_color() const {
  return is_edge() ? edge_color_ : verts_.at(static_cast<size_t>(root_)).out;
}

int CTree::num_leaves() const {
  if (is_edge()) return 1;
  int n = 0;
  for (const Vertex& v : verts_)
    for (const Slot& s : v.in)
      if (s.is_leaf) ++n;
  return n;
}

Profile CTree::vertex_profile(int v) const {
  Profile p;
  for (const Slot& s : vertex(v).in) p.push_back(s.color);
  return p;
}

namespace {

void dfs_leaves(const CTree& t, int v, std::vector<std::pair<int, int>>& out) {
  const CTree::Vertex& vx = t.vertex(v);
  for (size_t s = 0; s < vx.in.size(); ++s) {
    if (vx.in[s].is_leaf)
      out.push_back({v, static_cast<int>(s)});
    else
      dfs_leaves(t, vx.in[s].child, out);
  }
}

}  // namespace

Profile CTree::leaf_sequence() const {
  if (is_edge()) return {edge_color_};
  Profile p;
  for (auto [v, s] : leaf_slots()) p.push_back(vertex(v).in.at(static_cast<size_t>(s)).color);
  return p;
}

std::vector<std::pair<int, int>> CTree::leaf_slots() const {
  if (is_edge()) return {{-1, -1}};
  std::vector<std::pair<int, int>> out;
  dfs_leaves(*this, root_, out);
  return out;
}

int CTree::parent(int v) const {
  for (size_t u = 0; u < verts_.size(); ++u)
    for (const Slot& s : verts_[u].in)
      if (!s.is_leaf && s.child == v) return static_cast<int>(u);
  return -1;
}

CTree CTree::graft(int leaf_index, const CTree& upper) const {
  Profile ls = leaf_sequence();
  if (leaf_index < 0 || leaf_index >= static_cast<int>(ls.size()))
    throw Error("graft: leaf index out of range");
  if (ls.at(static_cast<size_t>(leaf_index)) != upper.out_color())
    throw Error("graft: color mismatch at the grafting leaf");
  if (is_edge()) return upper;
  if (upper.is_edge()) return *this;
  CTree r = *this;
  int offset = r.num_vertices();
  for (const Vertex& v : upper.verts_) {
    Vertex w = v;
    for (Slot& s : w.in)
      if (!s.is_leaf) s.child += offset;
    r.verts_.push_back(std::move(w));
  }
  auto [lv, lslot] = leaf_slots().at(static_cast<size_t>(leaf_index));
  Slot& slot = r.verts_.at(static_cast<size_t>(lv)).in.at(static_cast<size_t>(lslot));
  slot.is_leaf = false;
  slot.child = upper.root_ + offset;
  slot.color = upper.out_color();
  return r;
}

void CTree::validate() const {
  if (is_edge()) return;
  if (root_ < 0 || root_ >= num_vertices()) throw Error("CTree: bad root");
  std::vector<int> indeg(verts_.size(), 0);
  for (const Vertex& v : verts_)
    for (const Slot& s : v.in) {
      if (s.is_leaf) continue;
      if (s.child < 0 || s.child >= num_vertices()) throw Error("CTree: bad child id");
      if (verts_.at(static_cast<size_t>(s.child)).out != s.color)
        throw Error("CTree: edge colors do not match");
      indeg.at(static_cast<size_t>(s.child))++;
    }
  for (int v = 0; v < num_vertices(); ++v) {
    int expected = v == root_ ? 0 : 1;
    if (indeg.at(static_cast<size_t>(v)) != expected) throw Error("CTree: not a rooted tree");
  }
}

CTree CTree::build(Color out, const std::vector<Input>& inputs) {
  CTree t;
  Vertex root;
  root.out = out;
  t.verts_.push_back(root);
  t.root_ = 0;
  for (const Input& in : inputs) {
    if (std::holds_alternative<Color>(in)) {
      t.verts_[0].in.push_back(Slot{true, std::get<Color>(in), -1});
    } else {
      const CTree& sub = std::get<CTree>(in);
      if (sub.is_edge()) {
        t.verts_[0].in.push_back(Slot{true, sub.out_color(), -1});
        continue;
      }
      int offset = t.num_vertices();
      for (const Vertex& v : sub.verts_) {
        Vertex w = v;
        for (Slot& s : w.in)
          if (!s.is_leaf) s.child += offset;
        t.verts_.push_back(std::move(w));
      }
      t.verts_[0].in.push_back(Slot{false, sub.out_color(), sub.root_ + offset});
    }
  }
  return t;
}

MarkedTree MarkedTree::build(Color out, bool root_marked,
                             const std::vector<std::variant<Color, MarkedTree>>& inputs) {
  MarkedTree r;
  CTree::Vertex root;
  root.out = out;
  r.tree.mutable_vertices().push_back(root);
  r.tree.set_root(0);
  if (root_marked) r.ds.insert(0);
  for (const auto& in : inputs) {
    if (std::holds_alternative<Color>(in)) {
      r.tree.mutable_vertices()[0].in.push_back(CTree::Slot{true, std::get<Color>(in), -1});
      continue;
    }
    const MarkedTree& sub = std::get<MarkedTree>(in);
    if (sub.tree.is_edge()) {
      r.tree.mutable_vertices()[0].in.push_back(CTree::Slot{true, sub.tree.out_color(), -1});
      continue;
    }
    int offset = r.tree.num_vertices();
    for (int v = 0; v < sub.tree.num_vertices(); ++v) {
      CTree::Vertex w = sub.tree.vertex(v);
      for (CTree::Slot& s : w.in)
        if (!s.is_leaf) s.child += offset;
      r.tree.mutable_vertices().push_back(std::move(w));
    }
    for (int v : sub.ds) r.ds.insert(v + offset);
    r.tree.mutable_vertices()[0].in.push_back(
        CTree::Slot{false, sub.tree.out_color(), sub.tree.root() + offset});
  }
  return r;
}

// ---------------------------------------------------------------------------
// Canonical form

namespace {

struct CanonResult {
  std::string enc;
  MarkedTree sub;
};

CanonResult canon_rec(const MarkedTree& t, int v, bool pin) {
  const CTree::Vertex& vx = t.tree.vertex(v);
  bool marked = t.ds.count(v) > 0;
  std::vector<std::pair<std::string, std::variant<Color, MarkedTree>>> kids;
  for (const CTree::Slot& s : vx.in) {
    if (s.is_leaf) {
      kids.push_back({"L" + std::to_string(s.color) + ";", s.color});
    } else {
      CanonResult c = canon_rec(t, s.child, pin);
      kids.push_back({c.enc, std::move(c.sub)});
    }
  }
  if (!(pin && marked))
    std::stable_sort(kids.begin(), kids.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
  std::string enc = (marked ? "D" : "N") + std::to_string(vx.out) + "(";
  std::vector<std::variant<Color, MarkedTree>> inputs;
  for (auto& [ke, kv] : kids) {
    enc += ke;
    inputs.push_back(std::move(kv));
  }
  enc += ")";
  CanonResult r;
  r.enc = enc;
  r.sub = MarkedTree::build(vx.out, marked, inputs);
  return r;
}

}  // namespace

std::string canonical_form(const MarkedTree& t, bool pin) {
  if (t.tree.is_edge()) return "E" + std::to_string(t.tree.out_color());
  return canon_rec(t, t.tree.root(), pin).enc;
}

MarkedTree canonicalize(const MarkedTree& t, bool pin) {
  if (t.tree.is_edge()) return t;
  return canon_rec(t, t.tree.root(), pin).sub;
}

// ---------------------------------------------------------------------------
// Automorphisms

namespace {

struct PartialAuto {
  std::map<int, int> vmap;
  std::map<int, std::vector<int>> slotmap;
};

std::vector<PartialAuto> merge_products(const std::vector<std::vector<PartialAuto>>& parts) {
  std::vector<PartialAuto> acc = {PartialAuto{}};
  for (const auto& options : parts) {
    std::vector<PartialAuto> next;
    for (const PartialAuto& a : acc)
      for (const PartialAuto& b : options) {
        PartialAuto c = a;
        c.vmap.insert(b.vmap.begin(), b.vmap.end());
        c.slotmap.insert(b.slotmap.begin(), b.slotmap.end());
        next.push_back(std::move(c));
      }
    acc = std::move(next);
  }
  return acc;
}

std::vector<PartialAuto> match_subtrees(const MarkedTree& t, int v, int w, bool pin,
                                        const std::map<int, std::string>& enc_cache) {
  const CTree::Vertex& va = t.tree.vertex(v);
  const CTree::Vertex& vb = t.tree.vertex(w);
  bool ma = t.ds.count(v) > 0, mb = t.ds.count(w) > 0;
  if (ma != mb || va.out != vb.out || va.in.size() != vb.in.size()) return {};

  auto slot_key = [&](const CTree::Slot& s) -> std::string {
    if (s.is_leaf) return "L" + std::to_string(s.color);
    return enc_cache.at(s.child);
  };

  int arity = static_cast<int>(va.in.size());
  std::vector<std::string> ka(static_cast<size_t>(arity)), kb(static_cast<size_t>(arity));
  for (int i = 0; i < arity; ++i) {
    ka[static_cast<size_t>(i)] = slot_key(va.in[static_cast<size_t>(i)]);
    kb[static_cast<size_t>(i)] = slot_key(vb.in[static_cast<size_t>(i)]);
  }

  std::vector<std::vector<int>> assignments;
  if (pin && ma) {
    std::vector<int> ident(static_cast<size_t>(arity));
    for (int i = 0; i < arity; ++i) {
      if (ka[static_cast<size_t>(i)] != kb[static_cast<size_t>(i)]) return {};
      ident[static_cast<size_t>(i)] = i;
    }
    assignments.push_back(ident);
  } else {
    std::map<std::string, std::vector<int>> by_key_a, by_key_b;
    for (int i = 0; i < arity; ++i) {
      by_key_a[ka[static_cast<size_t>(i)]].push_back(i);
      by_key_b[kb[static_cast<size_t>(i)]].push_back(i);
    }
    if (by_key_a.size() != by_key_b.size()) return {};
    for (auto& [key, slots] : by_key_a) {
      auto it = by_key_b.find(key);
      if (it == by_key_b.end() || it->second.size() != slots.size()) return {};
    }
    std::vector<int> assign(static_cast<size_t>(arity), -1);
    std::function<void(std::map<std::string, std::vector<int>>::iterator)> rec =
        [&](std::map<std::string, std::vector<int>>::iterator kit) {
          if (kit == by_key_a.end()) {
            assignments.push_back(assign);
            return;
          }
          const std::vector<int>& sa = kit->second;
          std::vector<int> sb = by_key_b.at(kit->first);
          std::sort(sb.begin(), sb.end());
          do {
            for (size_t i = 0; i < sa.size(); ++i) assign[static_cast<size_t>(sa[i])] = sb[i];
            auto next = kit;
            ++next;
            rec(next);
          } while (std::next_permutation(sb.begin(), sb.end()));
        };
    rec(by_key_a.begin());
  }

  std::vector<PartialAuto> out;
  for (const std::vector<int>& assign : assignments) {
    std::vector<std::vector<PartialAuto>> child_opts;
    bool feasible = true;
    for (int i = 0; i < arity && feasible; ++i) {
      const CTree::Slot& sa = va.in[static_cast<size_t>(i)];
      const CTree::Slot& sb = vb.in[static_cast<size_t>(assign[static_cast<size_t>(i)])];
      if (sa.is_leaf != sb.is_leaf || sa.color != sb.color) {
        feasible = false;
        break;
      }
      if (!sa.is_leaf) {
        auto sub = match_subtrees(t, sa.child, sb.child, pin, enc_cache);
        if (sub.empty()) {
          feasible = false;
          break;
        }
        child_opts.push_back(std::move(sub));
      }
    }
    if (!feasible) continue;
    for (PartialAuto& combined : merge_products(child_opts)) {
      combined.vmap[v] = w;
      combined.slotmap[v] = assign;
      out.push_back(std::move(combined));
    }
  }
  return out;
}

}  // namespace

Perm TreeAut::ds_perm(const MarkedTree& t, int idx) const {
  std::vector<int> ds_list(t.ds.begin(), t.ds.end());
  std::sort(ds_list.begin(), ds_list.end());
  const TreeAutElem& a = elems.at(static_cast<size_t>(idx));
  std::vector<int> img(ds_list.size());
  for (size_t i = 0; i < ds_list.size(); ++i) {
    int target = a.vmap.at(static_cast<size_t>(ds_list[i]));
    auto it = std::lower_bound(ds_list.begin(), ds_list.end(), target);
    img[i] = static_cast<int>(it - ds_list.begin());
  }
  return Perm(std::move(img));
}

TreeAut automorphism_group(const MarkedTree& t, bool pin) {
  TreeAut out;
  if (t.tree.is_edge()) {
    out.group = PermGroup::trivial(0);
    TreeAutElem e;
    e.leaf_perm = Perm::identity(1);
    out.elems = {e};
    return out;
  }
  t.tree.validate();
  int nv = t.tree.num_vertices();
  std::map<int, std::string> enc_cache;
  std::function<std::string(int)> enc = [&](int v) -> std::string {
    const CTree::Vertex& vx = t.tree.vertex(v);
    bool marked = t.ds.count(v) > 0;
    std::vector<std::string> kids;
    for (const CTree::Slot& s : vx.in)
      kids.push_back(s.is_leaf ? "L" + std::to_string(s.color) + ";" : enc(s.child));
    if (!(pin && marked)) std::sort(kids.begin(), kids.end());
    std::string e = (marked ? "D" : "N") + std::to_string(vx.out) + "(";
    for (const std::string& k : kids) e += k;
    e += ")";
    enc_cache[v] = e;
    return e;
  };
  enc(t.tree.root());

  std::vector<PartialAuto> autos = match_subtrees(t, t.tree.root(), t.tree.root(), pin, enc_cache);

  std::vector<int> flag_offset(static_cast<size_t>(nv) + 1, 0);
  for (int v = 0; v < nv; ++v)
    flag_offset[static_cast<size_t>(v + 1)] =
        flag_offset[static_cast<size_t>(v)] + static_cast<int>(t.tree.vertex(v).in.size());
  int nflags = flag_offset[static_cast<size_t>(nv)];
  int degree = nv + nflags;

  std::vector<std::pair<int, int>> leaves = t.tree.leaf_slots();
  std::map<std::pair<int, int>, int> leaf_index;
  for (size_t i = 0; i < leaves.size(); ++i) leaf_index[leaves[i]] = static_cast<int>(i);

  std::vector<std::pair<Perm, TreeAutElem>> items;
  for (const PartialAuto& pa : autos) {
    TreeAutElem el;
    el.vmap.resize(static_cast<size_t>(nv));
    el.slotmap.resize(static_cast<size_t>(nv));
    std::vector<int> img(static_cast<size_t>(degree));
    for (int v = 0; v < nv; ++v) {
      int w = pa.vmap.at(v);
      el.vmap[static_cast<size_t>(v)] = w;
      el.slotmap[static_cast<size_t>(v)] = pa.slotmap.at(v);
      img[static_cast<size_t>(v)] = w;
      const std::vector<int>& sm = pa.slotmap.at(v);
      for (size_t s = 0; s < sm.size(); ++s)
        img[static_cast<size_t>(nv + flag_offset[static_cast<size_t>(v)] + static_cast<int>(s))] =
            nv + flag_offset[static_cast<size_t>(w)] + sm[s];
    }
    std::vector<int> lp(leaves.size());
    for (size_t i = 0; i < leaves.size(); ++i) {
      auto [v, s] = leaves[i];
      int w = el.vmap[static_cast<size_t>(v)];
      int s2 = el.slotmap[static_cast<size_t>(v)].at(static_cast<size_t>(s));
      lp[i] = leaf_index.at({w, s2});
    }
    el.leaf_perm = Perm(std::move(lp));
    items.push_back({Perm(std::move(img)), el});
  }
  std::sort(items.begin(), items.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Perm> perms;
  for (auto& [p, e] : items) {
    perms.push_back(p);
    out.elems.push_back(e);
  }
  out.group = PermGroup::from_elements(degree, perms);
  return out;
}

long aut_order_by_decomposition(const MarkedTree& t) {
  std::function<long(const MarkedTree&)> order = [&](const MarkedTree& mt) -> long {
    if (mt.tree.is_edge()) return 1;
    const CTree::Vertex& vx = mt.tree.vertex(mt.tree.root());
    std::map<std::string, std::pair<long, int>> classes;  // encoding -> (order, multiplicity)
    for (const CTree::Slot& s : vx.in) {
      if (s.is_leaf) {
        auto& c = classes["L" + std::to_string(s.color)];
        c.first = 1;
        c.second++;
        continue;
      }
      MarkedTree sub;
      std::function<int(int)> copy = [&](int u) {
        int id = sub.tree.num_vertices();
        sub.tree.mutable_vertices().push_back(mt.tree.vertex(u));
        if (mt.ds.count(u)) sub.ds.insert(id);
        size_t nslots = sub.tree.vertex(id).in.size();
        for (size_t si = 0; si < nslots; ++si) {
          CTree::Slot sl = sub.tree.vertex(id).in[si];
          if (!sl.is_leaf) {
            int cid = copy(sl.child);
            sub.tree.mutable_vertices()[static_cast<size_t>(id)].in[si].child = cid;
          }
        }
        return id;
      };
      sub.tree.set_root(copy(s.child));
      auto& c = classes[canonical_form(sub)];
      c.first = order(sub);
      c.second++;
    }
    long total = 1;
    for (auto& [k, v2] : classes) {
      for (int i = 0; i < v2.second; ++i) total *= v2.first;
      for (int i = 2; i <= v2.second; ++i) total *= i;
    }
    return total;
  };
  return order(t);
}

bool is_well_marked(const MarkedTree& t) {
  if (t.tree.is_edge()) return true;
  for (int v : t.ds) {
    if (v == t.tree.root()) return false;  // output flag not internal
    int p = t.tree.parent(v);
    if (p < 0 || t.ds.count(p)) return false;
    for (const CTree::Slot& s : t.tree.vertex(v).in) {
      if (s.is_leaf) return false;  // input flag not internal
      if (t.ds.count(s.child)) return false;
    }
  }
  return true;
}

bool is_reduced(const MarkedTree& t) {
  if (!is_well_marked(t)) return false;
  if (t.tree.is_edge()) return true;
  for (int v = 0; v < t.tree.num_vertices(); ++v) {
    if (t.ds.count(v)) continue;
    for (const CTree::Slot& s : t.tree.vertex(v).in)
      if (!s.is_leaf && !t.ds.count(s.child)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Enumeration of reduced trees

namespace {

using Multiset = std::map<Color, int>;

Multiset to_multiset(const Profile& p) {
  Multiset m;
  for (Color c : p) m[c]++;
  return m;
}

Profile to_profile(const Multiset& m) {
  Profile p;
  for (auto& [c, n] : m)
    for (int i = 0; i < n; ++i) p.push_back(c);
  return p;
}

int multiset_size(const Multiset& m) {
  int n = 0;
  for (auto& [c, k] : m) n += k;
  return n;
}

std::vector<Multiset> sub_multisets(const Multiset& m) {
  std::vector<Multiset> out = {Multiset{}};
  for (auto& [c, n] : m) {
    std::vector<Multiset> next;
    for (const Multiset& base : out)
      for (int k = 0; k <= n; ++k) {
        Multiset b = base;
        if (k > 0) b[c] = k;
        next.push_back(std::move(b));
      }
    out = std::move(next);
  }
  return out;
}

Multiset multiset_minus(const Multiset& a, const Multiset& b) {
  Multiset r = a;
  for (auto& [c, n] : b) {
    r[c] -= n;
    if (r[c] == 0) r.erase(c);
  }
  return r;
}

struct GenContext {
  IOPair s;  // distinguished profile, inputs sorted
  std::function<bool(const IOPair&)> support;
  bool pin = false;
  bool bound_hit = false;
};

std::vector<MarkedTree> gen_normal(GenContext& ctx, Color d, const Multiset& L, int k, int budget);

// distinguished-rooted subtrees: the root is one distinguished vertex with
// profile exactly s; its children are normal-rooted subtrees
std::vector<MarkedTree> gen_dist(GenContext& ctx, const Multiset& L, int k, int budget) {
  std::vector<MarkedTree> out;
  if (k < 1) return out;
  if (budget < 1) {
    ctx.bound_hit = true;
    return out;
  }
  const Profile& sin = ctx.s.in;
  int slots = static_cast<int>(sin.size());
  std::map<std::string, MarkedTree> dedup;
  std::vector<std::variant<Color, MarkedTree>> chosen(static_cast<size_t>(slots));
  std::function<void(int, Multiset, int, int)> rec = [&](int slot, Multiset restL, int restK,
                                                         int restBudget) {
    if (slot == slots) {
      if (multiset_size(restL) == 0 && restK == 0) {
        MarkedTree t = MarkedTree::build(ctx.s.out, true, chosen);
        dedup.emplace(canonical_form(t, ctx.pin), canonicalize(t, ctx.pin));
      }
      return;
    }
    for (const Multiset& li : sub_multisets(restL))
      for (int ki = 0; ki <= restK; ++ki)
        for (MarkedTree& child : gen_normal(ctx, sin[static_cast<size_t>(slot)], li, ki, restBudget)) {
          int used = child.tree.num_vertices();
          chosen[static_cast<size_t>(slot)] = std::move(child);
          rec(slot + 1, multiset_minus(restL, li), restK - ki, restBudget - used);
        }
  };
  rec(0, L, k - 1, budget - 1);
  for (auto& [key, t] : dedup) out.push_back(std::move(t));
  return out;
}

std::vector<MarkedTree> gen_normal(GenContext& ctx, Color d, const Multiset& L, int k, int budget) {
  std::vector<MarkedTree> out;
  if (budget < 1) {
    ctx.bound_hit = true;
    return out;
  }
  std::map<std::string, MarkedTree> dedup;
  if (k == 0) {
    Profile prof = to_profile(L);
    if (ctx.support(IOPair{d, prof})) {
      MarkedTree t;
      t.tree = CTree::corolla(d, prof);
      dedup.emplace(canonical_form(t, ctx.pin), t);
    }
  } else {
    for (int nd = 1; nd <= k; ++nd) {
      for (const Multiset& direct : sub_multisets(L)) {
        Multiset restL = multiset_minus(L, direct);
        Profile prof = to_profile(direct);
        for (int i = 0; i < nd; ++i) prof.push_back(ctx.s.out);
        std::sort(prof.begin(), prof.end());
        if (!ctx.support(IOPair{d, prof})) continue;
        std::vector<MarkedTree> acc;
        std::function<void(int, Multiset, int, int)> rec = [&](int child, Multiset rl, int rk,
                                                               int rb) {
          if (child == nd) {
            if (multiset_size(rl) == 0 && rk == 0) {
              std::vector<std::variant<Color, MarkedTree>> inputs;
              for (auto& [c, n] : direct)
                for (int i = 0; i < n; ++i) inputs.push_back(c);
              for (const MarkedTree& a : acc) inputs.push_back(a);
              MarkedTree t = MarkedTree::build(d, false, inputs);
              dedup.emplace(canonical_form(t, ctx.pin), canonicalize(t, ctx.pin));
            }
            return;
          }
          for (const Multiset& li : sub_multisets(rl))
            for (int ki = 1; ki <= rk; ++ki)
              for (MarkedTree& sub : gen_dist(ctx, li, ki, rb)) {
                int used = sub.tree.num_vertices();
                acc.push_back(std::move(sub));
                rec(child + 1, multiset_minus(rl, li), rk - ki, rb - used);
                acc.pop_back();
              }
        };
        rec(0, restL, k, budget - 1);
      }
    }
  }
  for (auto& [key, t] : dedup) out.push_back(std::move(t));
  return out;
}

}  // namespace

ReducedEnum enumerate_reduced(const ColorSet& colors, const IOPair& s, int k, const IOPair& entry,
                              const std::function<bool(const IOPair&)>& support, int vertex_bound,
                              bool pin_distinguished) {
  (void)colors;
  GenContext ctx;
  ctx.s = IOPair{s.out, orbit_rep(s.in)};
  ctx.support = support;
  ctx.pin = pin_distinguished;

  std::map<std::string, MarkedTree> dedup;
  if (k == 0 && entry.in == Profile{entry.out}) {
    MarkedTree e;
    e.tree = CTree::edge(entry.out);
    dedup.emplace(canonical_form(e, pin_distinguished), e);
  }
  for (MarkedTree& t : gen_normal(ctx, entry.out, to_multiset(entry.in), k, vertex_bound)) {
    if (!is_reduced(t)) continue;
    dedup.emplace(canonical_form(t, pin_distinguished), std::move(t));
  }
  ReducedEnum out;
  out.bound_hit = ctx.bound_hit;
  for (auto& [key, t] : dedup) out.classes.push_back(std::move(t));
  return out;
}

std::vector<MarkedTree> enumerate_with_profiles(const ColorSet& colors,
                                                const std::vector<IOPair>& vertex_profiles,
                                                const IOPair& entry) {
  (void)colors;
  std::map<std::pair<Color, Profile>, int> pool;
  for (const IOPair& p : vertex_profiles) pool[{p.out, orbit_rep(p.in)}]++;

  std::function<std::vector<MarkedTree>(Color, const Multiset&,
                                        std::map<std::pair<Color, Profile>, int>&)>
      gen = [&](Color d, const Multiset& L,
                std::map<std::pair<Color, Profile>, int>& avail) -> std::vector<MarkedTree> {
    std::vector<MarkedTree> out;
    std::map<std::string, MarkedTree> local;
    for (auto& [key, count] : avail) {
      if (count == 0 || key.first != d) continue;
      Profile prof = key.second;
      avail[key]--;
      int slots = static_cast<int>(prof.size());
      std::vector<std::variant<Color, MarkedTree>> chosen(static_cast<size_t>(slots));
      std::function<void(int, Multiset)> rec = [&](int slot, Multiset rl) {
        if (slot == slots) {
          if (multiset_size(rl) == 0) {
            MarkedTree t = MarkedTree::build(d, false, chosen);
            local.emplace(canonical_form(t), canonicalize(t));
          }
          return;
        }
        Color sc = prof[static_cast<size_t>(slot)];
        auto it = rl.find(sc);
        if (it != rl.end() && it->second > 0) {
          Multiset rl2 = rl;
          if (--rl2[sc] == 0) rl2.erase(sc);
          chosen[static_cast<size_t>(slot)] = sc;
          rec(slot + 1, rl2);
        }
        for (const Multiset& li : sub_multisets(rl))
          for (MarkedTree& sub : gen(sc, li, avail)) {
            chosen[static_cast<size_t>(slot)] = std::move(sub);
            rec(slot + 1, multiset_minus(rl, li));
          }
      };
      rec(0, L);
      avail[key]++;
    }
    for (auto& [k2, t] : local) out.push_back(std::move(t));
    return out;
  };

  std::map<std::pair<Color, Profile>, int> avail = pool;
  std::map<std::string, MarkedTree> dedup;
  for (MarkedTree& t : gen(entry.out, to_multiset(entry.in), avail)) {
    std::map<std::pair<Color, Profile>, int> used;
    for (int v = 0; v < t.tree.num_vertices(); ++v)
      used[{t.tree.vertex(v).out, orbit_rep(t.tree.vertex_profile(v))}]++;
    if (used == pool) dedup.emplace(canonical_form(t), std::move(t));
  }
  std::vector<MarkedTree> out;
  for (auto& [key, t] : dedup) out.push_back(std::move(t));
  return out;
}

}  // namespace finop
