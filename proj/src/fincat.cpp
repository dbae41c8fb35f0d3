#include "finop/fincat.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

namespace finop {

Elem tuple_elem(const std::vector<Elem>& parts) {
  std::string s = "(";
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += parts[i];
  }
  s += ")";
  return s;
}

std::vector<Elem> split_tuple(const Elem& e) {
  if (e.size() < 2 || e.front() != '(' || e.back() != ')')
    throw Error("split_tuple: not a tuple element: " + e);
  std::vector<Elem> out;
  std::string body = e.substr(1, e.size() - 2);
  if (body.empty()) return out;
  int depth = 0;
  std::string cur;
  for (char c : body) {
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
      continue;
    }
    if (c == '(' || c == '[' || c == '{') depth++;
    if (c == ')' || c == ']' || c == '}') depth--;
    cur += c;
  }
  out.push_back(cur);
  return out;
}

// ---------------------------------------------------------------------------

FinSet::FinSet() : d_(std::make_shared<Data>()) {}

FinSet::FinSet(std::vector<Elem> elems) {
  auto d = std::make_shared<Data>();
  d->elems = std::move(elems);
  std::sort(d->elems.begin(), d->elems.end());
  for (size_t i = 0; i + 1 < d->elems.size(); ++i)
    if (d->elems[i] == d->elems[i + 1]) throw Error("FinSet: duplicate element: " + d->elems[i]);
  for (size_t i = 0; i < d->elems.size(); ++i) d->index[d->elems[i]] = static_cast<int>(i);
  d_ = std::move(d);
}

int FinSet::index_of(const Elem& e) const {
  auto it = d_->index.find(e);
  if (it == d_->index.end()) throw Error("FinSet: element not found: " + e);
  return it->second;
}

FinSet product(const std::vector<const FinSet*>& factors) {
  for (const FinSet* f : factors)
    if (f->empty()) return FinSet();
  std::vector<Elem> out;
  std::vector<int> idx(factors.size(), 0);
  while (true) {
    std::vector<Elem> parts;
    parts.reserve(factors.size());
    for (size_t j = 0; j < factors.size(); ++j) parts.push_back(factors[j]->at(idx[j]));
    out.push_back(tuple_elem(parts));
    size_t j = factors.size();
    bool done = factors.empty();
    while (j > 0) {
      --j;
      if (++idx[j] < factors[j]->size()) break;
      idx[j] = 0;
      if (j == 0) done = true;
    }
    if (done) return FinSet(std::move(out));
  }
}

FinSet disjoint_union(const FinSet& a, const FinSet& b, const std::string& tag_a,
                      const std::string& tag_b) {
  std::vector<Elem> out;
  for (const Elem& e : a.elements()) out.push_back(tag_a + "(" + e + ")");
  for (const Elem& e : b.elements()) out.push_back(tag_b + "(" + e + ")");
  return FinSet(std::move(out));
}

// ---------------------------------------------------------------------------

FinFunc::FinFunc(FinSet dom, FinSet cod, std::vector<int> map)
    : dom_(std::move(dom)), cod_(std::move(cod)), map_(std::move(map)) {
  if (static_cast<int>(map_.size()) != dom_.size()) throw Error("FinFunc: table size mismatch");
  for (int v : map_)
    if (v < 0 || v >= cod_.size()) throw Error("FinFunc: image out of range");
}

FinFunc FinFunc::from_rule(const FinSet& dom, const FinSet& cod,
                           const std::function<Elem(const Elem&)>& rule) {
  std::vector<int> map(static_cast<size_t>(dom.size()));
  for (int i = 0; i < dom.size(); ++i) map[static_cast<size_t>(i)] = cod.index_of(rule(dom.at(i)));
  return FinFunc(dom, cod, std::move(map));
}

FinFunc FinFunc::identity(const FinSet& s) {
  std::vector<int> map(static_cast<size_t>(s.size()));
  std::iota(map.begin(), map.end(), 0);
  return FinFunc(s, s, std::move(map));
}

bool FinFunc::is_injective() const {
  std::set<int> seen(map_.begin(), map_.end());
  return static_cast<int>(seen.size()) == dom_.size();
}

bool FinFunc::is_surjective() const {
  std::set<int> seen(map_.begin(), map_.end());
  return static_cast<int>(seen.size()) == cod_.size();
}

FinFunc FinFunc::then(const FinFunc& g) const {
  if (!(cod_ == g.dom())) throw Error("FinFunc::then: domain mismatch");
  std::vector<int> map(map_.size());
  for (size_t i = 0; i < map_.size(); ++i) map[i] = g.map_.at(static_cast<size_t>(map_[i]));
  return FinFunc(dom_, g.cod_, std::move(map));
}

// ---------------------------------------------------------------------------

Perm::Perm(std::vector<int> images) : p_(std::move(images)) {
  std::vector<bool> seen(p_.size(), false);
  for (int v : p_) {
    if (v < 0 || v >= static_cast<int>(p_.size()) || seen[static_cast<size_t>(v)])
      throw Error("Perm: not a permutation");
    seen[static_cast<size_t>(v)] = true;
  }
}

Perm Perm::identity(int n) {
  Perm p;
  p.p_.resize(static_cast<size_t>(n));
  std::iota(p.p_.begin(), p.p_.end(), 0);
  return p;
}

Perm Perm::transposition(int n, int i, int j) {
  Perm p = identity(n);
  std::swap(p.p_[static_cast<size_t>(i)], p.p_[static_cast<size_t>(j)]);
  return p;
}

bool Perm::is_identity() const {
  for (size_t i = 0; i < p_.size(); ++i)
    if (p_[i] != static_cast<int>(i)) return false;
  return true;
}

Perm Perm::inverse() const {
  Perm q;
  q.p_.resize(p_.size());
  for (size_t i = 0; i < p_.size(); ++i) q.p_[static_cast<size_t>(p_[i])] = static_cast<int>(i);
  return q;
}

std::string Perm::str() const {
  std::string s = "[";
  for (size_t i = 0; i < p_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p_[i]);
  }
  return s + "]";
}

Perm mul(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) throw Error("Perm mul: degree mismatch");
  Perm r;
  r.p_.resize(a.p_.size());
  for (size_t i = 0; i < a.p_.size(); ++i) r.p_[i] = a.p_[static_cast<size_t>(b.p_[i])];
  return r;
}

Perm block_diag(const std::vector<Perm>& blocks) {
  std::vector<int> p;
  int off = 0;
  for (const Perm& b : blocks) {
    for (int i = 0; i < b.degree(); ++i) p.push_back(off + b(i));
    off += b.degree();
  }
  return Perm(std::move(p));
}

Perm block_perm(const Perm& sigma, const std::vector<int>& sizes) {
  if (sigma.degree() != static_cast<int>(sizes.size())) throw Error("block_perm: arity mismatch");
  std::vector<int> start(sizes.size() + 1, 0);
  for (size_t i = 0; i < sizes.size(); ++i) start[i + 1] = start[i] + sizes[i];
  std::vector<int> p(static_cast<size_t>(start.back()));
  int pos = 0;
  for (int i = 0; i < sigma.degree(); ++i) {
    int src = sigma(i);
    for (int o = 0; o < sizes[static_cast<size_t>(src)]; ++o)
      p[static_cast<size_t>(pos++)] = start[static_cast<size_t>(src)] + o;
  }
  return Perm(std::move(p));
}

// ---------------------------------------------------------------------------

namespace {

long factorial(int n) {
  long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Lehmer rank of a permutation, for O(n^2) index-free group lookup.
long lehmer_rank(const std::vector<int>& p) {
  int n = static_cast<int>(p.size());
  long rank = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j)
      if (p[static_cast<size_t>(j)] < p[static_cast<size_t>(i)]) ++smaller;
    rank = rank * (n - i) + smaller;
  }
  return rank;
}

constexpr int kMaxFullDegree = 8;

}  // namespace

struct PermGroup::Data {
  int degree = 0;
  std::vector<Perm> elems;  // sorted
  std::vector<Perm> gens;
  // index: rank table for degree <= kMaxFullDegree, map otherwise
  std::vector<int> rank_index;
  std::map<std::vector<int>, int> map_index;
  std::vector<int> word_parent;
  std::vector<int> word_gen;

  int find(const Perm& p) const {
    if (!rank_index.empty()) {
      long r = lehmer_rank(p.images());
      int i = rank_index[static_cast<size_t>(r)];
      return i;
    }
    auto it = map_index.find(p.images());
    return it == map_index.end() ? -1 : it->second;
  }
};

PermGroup::PermGroup() {
  static const PermGroup t = trivial(0);
  d_ = t.d_;
}

PermGroup PermGroup::from_sorted(int degree, std::vector<Perm> elems, std::vector<Perm> gens) {
  auto d = std::make_shared<Data>();
  d->degree = degree;
  std::sort(elems.begin(), elems.end());
  d->elems = std::move(elems);
  for (size_t i = 0; i + 1 < d->elems.size(); ++i)
    if (d->elems[i] == d->elems[i + 1]) throw Error("PermGroup: duplicate elements");
  if (degree <= kMaxFullDegree) {
    d->rank_index.assign(static_cast<size_t>(factorial(degree)), -1);
    for (size_t i = 0; i < d->elems.size(); ++i)
      d->rank_index[static_cast<size_t>(lehmer_rank(d->elems[i].images()))] = static_cast<int>(i);
  } else {
    for (size_t i = 0; i < d->elems.size(); ++i) d->map_index[d->elems[i].images()] = static_cast<int>(i);
  }
  // drop redundant generators, keep deterministic order
  d->gens.clear();
  for (const Perm& g : gens)
    if (!g.is_identity()) d->gens.push_back(g);
  // generator words by BFS from the identity, multiplying on the right
  int n = static_cast<int>(d->elems.size());
  d->word_parent.assign(static_cast<size_t>(n), -1);
  d->word_gen.assign(static_cast<size_t>(n), -1);
  int id_idx = d->find(Perm::identity(degree));
  if (id_idx < 0) throw Error("PermGroup: missing identity");
  std::vector<int> frontier = {id_idx};
  std::vector<bool> seen(static_cast<size_t>(n), false);
  seen[static_cast<size_t>(id_idx)] = true;
  int visited = 1;
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int ei : frontier)
      for (size_t gi = 0; gi < d->gens.size(); ++gi) {
        Perm q = mul(d->elems[static_cast<size_t>(ei)], d->gens[gi]);
        int qi = d->find(q);
        if (qi < 0) throw Error("PermGroup: not closed under composition");
        if (!seen[static_cast<size_t>(qi)]) {
          seen[static_cast<size_t>(qi)] = true;
          d->word_parent[static_cast<size_t>(qi)] = ei;
          d->word_gen[static_cast<size_t>(qi)] = static_cast<int>(gi);
          next.push_back(qi);
          ++visited;
        }
      }
    frontier = std::move(next);
  }
  if (visited != n) throw Error("PermGroup: generators do not generate the element list");
  return PermGroup(std::shared_ptr<const Data>(std::move(d)));
}

PermGroup PermGroup::trivial(int degree) {
  return from_sorted(degree, {Perm::identity(degree)}, {});
}

PermGroup PermGroup::symmetric(int n) {
  if (n > kMaxFullDegree) throw Error("PermGroup::symmetric: degree too large");
  static std::mutex mu;
  static std::map<int, PermGroup> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  std::vector<int> base(static_cast<size_t>(n));
  std::iota(base.begin(), base.end(), 0);
  std::vector<Perm> elems;
  do {
    elems.push_back(Perm(base));
  } while (std::next_permutation(base.begin(), base.end()));
  std::vector<Perm> gens;
  for (int i = 0; i + 1 < n; ++i) gens.push_back(Perm::transposition(n, i, i + 1));
  PermGroup g = from_sorted(n, std::move(elems), std::move(gens));
  {
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(n, g);
  }
  return g;
}

PermGroup PermGroup::from_elements(int degree, std::vector<Perm> elems) {
  // closure and inverse checks; quadratic, intended for small inputs
  if (elems.size() > 2000) throw Error("PermGroup::from_elements: list too large to validate");
  std::set<std::vector<int>> index;
  for (const Perm& p : elems) {
    if (p.degree() != degree) throw Error("PermGroup: degree mismatch");
    index.insert(p.images());
  }
  if (!index.count(Perm::identity(degree).images())) throw Error("PermGroup: missing identity");
  for (const Perm& a : elems) {
    if (!index.count(a.inverse().images())) throw Error("PermGroup: not closed under inverse");
    for (const Perm& b : elems)
      if (!index.count(mul(a, b).images())) throw Error("PermGroup: not closed under composition");
  }
  std::vector<Perm> gens(elems.begin(), elems.end());
  return from_sorted(degree, std::move(elems), std::move(gens));
}

PermGroup PermGroup::generated(int degree, const std::vector<Perm>& gens) {
  std::set<std::vector<int>> seen;
  std::vector<Perm> frontier = {Perm::identity(degree)};
  seen.insert(frontier[0].images());
  std::vector<Perm> all = frontier;
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& p : frontier)
      for (const Perm& g : gens) {
        Perm q = mul(p, g);
        if (seen.insert(q.images()).second) {
          next.push_back(q);
          all.push_back(q);
        }
      }
    frontier = std::move(next);
  }
  return from_sorted(degree, std::move(all), gens);
}

PermGroup PermGroup::young(const std::vector<int>& block_sizes) {
  int degree = std::accumulate(block_sizes.begin(), block_sizes.end(), 0);
  std::vector<int> seq(static_cast<size_t>(degree));
  int off = 0, tag = 0;
  for (int s : block_sizes) {
    for (int i = 0; i < s; ++i) seq[static_cast<size_t>(off + i)] = tag;
    off += s;
    ++tag;
  }
  return sequence_stabilizer(seq);
}

PermGroup PermGroup::sequence_stabilizer(const std::vector<int>& seq) {
  static std::mutex mu;
  static std::map<std::vector<int>, PermGroup> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(seq);
    if (it != cache.end()) return it->second;
  }
  int degree = static_cast<int>(seq.size());
  std::map<int, std::vector<int>> by_value;
  for (int i = 0; i < degree; ++i) by_value[seq[static_cast<size_t>(i)]].push_back(i);
  // enumerate the direct product of symmetric groups on the position classes
  std::vector<std::vector<int>> classes;
  for (auto& [v, positions] : by_value) classes.push_back(positions);
  std::vector<std::vector<std::vector<int>>> class_perms;
  for (const std::vector<int>& cls : classes) {
    std::vector<int> idx(cls.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<std::vector<int>> perms;
    do {
      std::vector<int> img(cls.size());
      for (size_t i = 0; i < cls.size(); ++i) img[i] = cls[static_cast<size_t>(idx[i])];
      perms.push_back(img);
    } while (std::next_permutation(idx.begin(), idx.end()));
    class_perms.push_back(std::move(perms));
  }
  std::vector<Perm> elems;
  std::vector<size_t> pick(classes.size(), 0);
  while (true) {
    std::vector<int> p(static_cast<size_t>(degree));
    std::iota(p.begin(), p.end(), 0);
    for (size_t c = 0; c < classes.size(); ++c)
      for (size_t i = 0; i < classes[c].size(); ++i)
        p[static_cast<size_t>(classes[c][i])] = class_perms[c][pick[c]][i];
    elems.push_back(Perm(std::move(p)));
    size_t c = classes.size();
    bool done = classes.empty();
    while (c > 0) {
      --c;
      if (++pick[c] < class_perms[c].size()) break;
      pick[c] = 0;
      if (c == 0) done = true;
    }
    if (done) break;
  }
  std::vector<Perm> gens;
  for (const std::vector<int>& cls : classes)
    for (size_t i = 0; i + 1 < cls.size(); ++i)
      gens.push_back(Perm::transposition(degree, cls[i], cls[i + 1]));
  PermGroup g = from_sorted(degree, std::move(elems), std::move(gens));
  {
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(seq, g);
  }
  return g;
}

int PermGroup::degree() const { return d_->degree; }
int PermGroup::size() const { return static_cast<int>(d_->elems.size()); }
const Perm& PermGroup::elem(int i) const { return d_->elems.at(static_cast<size_t>(i)); }
const std::vector<Perm>& PermGroup::elements() const { return d_->elems; }

int PermGroup::index_of(const Perm& p) const {
  if (p.degree() != d_->degree) throw Error("PermGroup: degree mismatch in lookup");
  int i = d_->find(p);
  if (i < 0) throw Error("PermGroup: element not in group: " + p.str());
  return i;
}

bool PermGroup::contains(const Perm& p) const {
  return p.degree() == d_->degree && d_->find(p) >= 0;
}

const std::vector<Perm>& PermGroup::generators() const { return d_->gens; }
int PermGroup::word_parent(int i) const { return d_->word_parent.at(static_cast<size_t>(i)); }
int PermGroup::word_gen(int i) const { return d_->word_gen.at(static_cast<size_t>(i)); }

bool PermGroup::operator==(const PermGroup& o) const {
  return d_ == o.d_ || (d_->degree == o.d_->degree && d_->elems == o.d_->elems);
}

// ---------------------------------------------------------------------------

GroupHom GroupHom::make(PermGroup dom, PermGroup cod, const std::function<Perm(const Perm&)>& rule) {
  GroupHom f;
  f.dom_ = std::move(dom);
  f.cod_ = std::move(cod);
  f.img_.resize(static_cast<size_t>(f.dom_.size()));
  for (int i = 0; i < f.dom_.size(); ++i)
    f.img_[static_cast<size_t>(i)] = f.cod_.index_of(rule(f.dom_.elem(i)));
  if (!(f.apply(Perm::identity(f.dom_.degree())) == Perm::identity(f.cod_.degree())))
    throw Error("GroupHom: identity not preserved");
  // homomorphism property on generators against all elements
  for (const Perm& g : f.dom_.generators())
    for (const Perm& h : f.dom_.elements()) {
      Perm lhs = f.apply(mul(g, h));
      Perm rhs = mul(f.apply(g), f.apply(h));
      if (!(lhs == rhs))
        throw Error("GroupHom: composition table mismatch at " + g.str() + " * " + h.str());
    }
  return f;
}

GroupHom GroupHom::inclusion(const PermGroup& sub, const PermGroup& big) {
  return make(sub, big, [](const Perm& p) { return p; });
}

GroupHom GroupHom::conjugated(const PermGroup& dom, const PermGroup& cod, const Perm& g) {
  Perm gi = g.inverse();
  return make(dom, cod, [&](const Perm& h) { return mul(mul(gi, h), g); });
}

Perm GroupHom::apply(const Perm& h) const {
  return cod_.elem(img_.at(static_cast<size_t>(dom_.index_of(h))));
}

bool GroupHom::is_injective() const {
  std::set<int> seen(img_.begin(), img_.end());
  return seen.size() == img_.size();
}

GroupHom GroupHom::then(const GroupHom& g) const {
  const GroupHom* self = this;
  return make(dom_, g.cod_, [self, &g](const Perm& h) { return g.apply(self->apply(h)); });
}

// ---------------------------------------------------------------------------

GSet GSet::make(FinSet base, PermGroup group,
                const std::function<Elem(const Elem&, const Perm&)>& rule) {
  GSet s;
  s.base_ = std::move(base);
  s.grp_ = std::move(group);
  const auto& gens = s.grp_.generators();
  s.gen_act_.assign(gens.size(), std::vector<int>(static_cast<size_t>(s.base_.size())));
  for (size_t gi = 0; gi < gens.size(); ++gi)
    for (int x = 0; x < s.base_.size(); ++x)
      s.gen_act_[gi][static_cast<size_t>(x)] = s.base_.index_of(rule(s.base_.at(x), gens[gi]));
  // identity must act trivially (checked through the rule directly)
  for (int x = 0; x < s.base_.size() && x < 64; ++x)
    if (rule(s.base_.at(x), Perm::identity(s.grp_.degree())) != s.base_.at(x))
      throw Error("GSet: identity does not act trivially on " + s.base_.at(x));
  // action axiom check: exhaustive for small instances, sampled otherwise
  long work = static_cast<long>(s.grp_.size()) * s.base_.size();
  if (work <= 20000) {
    for (int g = 0; g < s.grp_.size(); ++g) {
      const Perm& gp = s.grp_.elem(g);
      for (int x = 0; x < s.base_.size(); ++x)
        if (rule(s.base_.at(x), gp) != s.base_.at(s.act_index(x, g)))
          throw Error("GSet: generator words disagree with the rule at " + s.base_.at(x));
    }
  } else {
    for (int probe = 0; probe < 64; ++probe) {
      int g = static_cast<int>((probe * 2654435761u) % static_cast<unsigned>(s.grp_.size()));
      int x = static_cast<int>((probe * 40503u) % static_cast<unsigned>(s.base_.size()));
      if (rule(s.base_.at(x), s.grp_.elem(g)) != s.base_.at(s.act_index(x, g)))
        throw Error("GSet: generator words disagree with the rule (sampled)");
    }
  }
  return s;
}

GSet GSet::trivial(FinSet base, PermGroup group) {
  return make(std::move(base), std::move(group), [](const Elem& x, const Perm&) { return x; });
}

GSet GSet::regular(const PermGroup& group) {
  std::vector<Elem> elems;
  for (const Perm& p : group.elements()) elems.push_back(p.str());
  FinSet base(std::move(elems));
  return make(base, group, [&group](const Elem& x, const Perm& g) {
    std::vector<int> imgs;
    std::string body = x.substr(1, x.size() - 2);
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ','))
      if (!tok.empty()) imgs.push_back(std::stoi(tok));
    return mul(Perm(std::move(imgs)), g).str();
  });
}

int GSet::act_index(int x, int g) const {
  // follow the generator word g = parent * gen
  int steps[64];
  int depth = 0;
  int cur = g;
  while (grp_.word_gen(cur) >= 0) {
    steps[depth++] = grp_.word_gen(cur);
    if (depth >= 64) throw Error("GSet: generator word too long");
    cur = grp_.word_parent(cur);
  }
  int r = x;
  for (int i = depth - 1; i >= 0; --i) r = gen_act_[static_cast<size_t>(steps[i])][static_cast<size_t>(r)];
  return r;
}

Elem GSet::act(const Elem& x, const Perm& g) const {
  return base_.at(act_index(base_.index_of(x), grp_.index_of(g)));
}

bool GSet::is_free(std::pair<Elem, std::string>* witness) const {
  for (int x = 0; x < base_.size(); ++x)
    for (int g = 0; g < grp_.size(); ++g) {
      if (grp_.elem(g).is_identity()) continue;
      if (act_index(x, g) == x) {
        if (witness) *witness = {base_.at(x), grp_.elem(g).str()};
        return false;
      }
    }
  return true;
}

GSet GSet::restrict_to(const FinSet& subset) const {
  const GSet* self = this;
  return make(subset, grp_, [self](const Elem& x, const Perm& g) { return self->act(x, g); });
}

// ---------------------------------------------------------------------------

Quotient orbit_quotient(const GSet& s) {
  int n = s.set().size();
  std::vector<int> rep(static_cast<size_t>(n), -1);
  for (int x = 0; x < n; ++x) {
    if (rep[static_cast<size_t>(x)] >= 0) continue;
    std::set<int> orbit;
    std::vector<int> frontier = {x};
    orbit.insert(x);
    while (!frontier.empty()) {
      std::vector<int> next;
      for (int v : frontier)
        for (size_t gi = 0; gi < s.group().generators().size(); ++gi) {
          int w = s.act_index(v, s.group().index_of(s.group().generators()[gi]));
          if (orbit.insert(w).second) next.push_back(w);
        }
      frontier = std::move(next);
    }
    int mn = *orbit.begin();
    for (int y : orbit) rep[static_cast<size_t>(y)] = mn;
  }
  std::vector<Elem> classes;
  std::map<int, int> class_pos;
  for (int x = 0; x < n; ++x)
    if (rep[static_cast<size_t>(x)] == x) classes.push_back(s.set().at(x));
  FinSet cls(classes);
  std::vector<int> proj(static_cast<size_t>(n));
  for (int x = 0; x < n; ++x)
    proj[static_cast<size_t>(x)] = cls.index_of(s.set().at(rep[static_cast<size_t>(x)]));
  Quotient q;
  q.classes = cls;
  q.projection = FinFunc(s.set(), cls, std::move(proj));
  return q;
}

Induced induce(const GSet& x, const GroupHom& f) {
  if (!(x.group() == f.dom())) throw Error("induce: group mismatch");
  const PermGroup& H = f.dom();
  const PermGroup& G = f.cod();
  int nx = x.set().size(), ng = G.size(), nh = H.size();

  // precompute the H-action on the carrier and f(h)^{-1} as G-indices
  std::vector<std::vector<int>> hact(static_cast<size_t>(nh), std::vector<int>(static_cast<size_t>(nx)));
  std::vector<Perm> fhinv(static_cast<size_t>(nh));
  for (int h = 0; h < nh; ++h) {
    for (int a = 0; a < nx; ++a) hact[static_cast<size_t>(h)][static_cast<size_t>(a)] = x.act_index(a, h);
    fhinv[static_cast<size_t>(h)] = G.elem(f.apply_index(h)).inverse();
  }

  std::vector<std::vector<int>> cls(static_cast<size_t>(nx), std::vector<int>(static_cast<size_t>(ng), -1));
  std::vector<Elem> class_elems;
  std::vector<std::pair<int, int>> class_rep;
  for (int a = 0; a < nx; ++a)
    for (int g = 0; g < ng; ++g) {
      if (cls[static_cast<size_t>(a)][static_cast<size_t>(g)] >= 0) continue;
      const Perm& gp = G.elem(g);
      std::pair<int, int> best = {-1, -1};
      std::pair<Elem, std::string> best_key;
      std::vector<std::pair<int, int>> raw;
      raw.reserve(static_cast<size_t>(nh));
      for (int h = 0; h < nh; ++h) {
        int ah = hact[static_cast<size_t>(h)][static_cast<size_t>(a)];
        Perm q = mul(fhinv[static_cast<size_t>(h)], gp);
        int g2 = G.index_of(q);
        raw.push_back({ah, g2});
        std::pair<Elem, std::string> key = {x.set().at(ah), q.str()};
        if (best.first < 0 || key < best_key) {
          best_key = key;
          best = {ah, g2};
        }
      }
      Elem id = "i(" + best_key.first + ";" + best_key.second + ")";
      int ci = static_cast<int>(class_elems.size());
      class_elems.push_back(id);
      class_rep.push_back(best);
      for (auto& pr : raw) cls[static_cast<size_t>(pr.first)][static_cast<size_t>(pr.second)] = ci;
    }

  FinSet carrier(class_elems);
  // right G-action by translation on the canonical representatives
  std::vector<std::pair<int, int>> rep_by_idx(class_rep.size());
  for (size_t i = 0; i < class_elems.size(); ++i)
    rep_by_idx[static_cast<size_t>(carrier.index_of(class_elems[i]))] = class_rep[i];
  GSet res = GSet::make(carrier, G, [&](const Elem& c, const Perm& k) {
    auto pr = rep_by_idx[static_cast<size_t>(carrier.index_of(c))];
    int gk = G.index_of(mul(G.elem(pr.second), k));
    return carrier.at(cls[static_cast<size_t>(pr.first)][static_cast<size_t>(gk)]);
  });

  Induced out;
  out.result = res;
  out.class_index = cls;
  out.raw_rep = std::move(rep_by_idx);
  out.carrier_copy = x.set();
  out.domgrp_copy = H;
  out.codgrp_copy = G;
  return out;
}

Elem Induced::class_of(const Elem& x, const Perm& g) const {
  int a = carrier_copy.index_of(x);
  int gi = codgrp_copy.index_of(g);
  return result.set().at(class_index.at(static_cast<size_t>(a)).at(static_cast<size_t>(gi)));
}

int Induced::class_index_of(int x, int g) const {
  return class_index.at(static_cast<size_t>(x)).at(static_cast<size_t>(g));
}

std::pair<Elem, Perm> Induced::raw_of(const Elem& cls) const {
  int ci = result.set().index_of(cls);
  auto pr = raw_rep.at(static_cast<size_t>(ci));
  return {carrier_copy.at(pr.first), codgrp_copy.elem(pr.second)};
}

PushoutResult pushout(const FinFunc& f, const FinFunc& g) {
  if (!(f.dom() == g.dom())) throw Error("pushout: domain mismatch");
  const FinSet& B = f.cod();
  const FinSet& C = g.cod();
  int nb = B.size(), nc = C.size();
  std::vector<int> parent(static_cast<size_t>(nb + nc));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) {
    while (parent[static_cast<size_t>(v)] != v) {
      parent[static_cast<size_t>(v)] = parent[static_cast<size_t>(parent[static_cast<size_t>(v)])];
      v = parent[static_cast<size_t>(v)];
    }
    return v;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<size_t>(b)] = a;
  };
  for (int a = 0; a < f.dom().size(); ++a) unite(f.apply_index(a), nb + g.apply_index(a));
  std::map<int, std::vector<std::string>> members;
  auto tag = [&](int v) { return v < nb ? "inB(" + B.at(v) + ")" : "inC(" + C.at(v - nb) + ")"; };
  for (int v = 0; v < nb + nc; ++v) members[find(v)].push_back(tag(v));
  std::map<int, Elem> class_id;
  std::vector<Elem> elems;
  for (auto& [root, ms] : members) {
    class_id[root] = *std::min_element(ms.begin(), ms.end());
    elems.push_back(class_id[root]);
  }
  FinSet P(elems);
  std::vector<int> mb(static_cast<size_t>(nb)), mc(static_cast<size_t>(nc));
  for (int v = 0; v < nb; ++v) mb[static_cast<size_t>(v)] = P.index_of(class_id[find(v)]);
  for (int v = 0; v < nc; ++v) mc[static_cast<size_t>(v)] = P.index_of(class_id[find(nb + v)]);
  PushoutResult out;
  out.object = P;
  out.from_b = FinFunc(B, P, std::move(mb));
  out.from_c = FinFunc(C, P, std::move(mc));
  return out;
}

}  // namespace finop
