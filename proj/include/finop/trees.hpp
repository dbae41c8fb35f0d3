#ifndef FINOP_TREES_HPP
#define FINOP_TREES_HPP

#include <functional>
#include <optional>
#include <set>
#include <variant>

#include "finop/profiles.hpp"

// Colored rooted trees with planar input orderings, marked
// (distinguished-vertex) trees, canonical forms under non-planar
// isomorphism, automorphism groups, grafting, and the enumeration of
// reduced trees indexing the pushout filtration.

namespace finop {

class CTree {
public:
  struct Slot {
    bool is_leaf = true;
    Color color = 0;  // leaf color; for child slots the child's output color
    int child = -1;   // vertex id when !is_leaf
  };
  struct Vertex {
    Color out = 0;
    std::vector<Slot> in;
  };

  // the edge tree: no vertices, a single colored through-edge
  static CTree edge(Color c);
  // a single vertex with the given output color and leaf inputs
  static CTree corolla(Color out, const Profile& inputs);

  bool is_edge() const { return verts_.empty(); }
  Color out_color() const;
  int num_vertices() const { return static_cast<int>(verts_.size()); }
  int num_leaves() const;
  int root() const { return root_; }
  const Vertex& vertex(int v) const { return verts_.at(static_cast<size_t>(v)); }
  Profile vertex_profile(int v) const;
  // leaf colors in planar (depth-first) order
  Profile leaf_sequence() const;
  // planar leaf positions as (vertex, slot) pairs, depth-first
  std::vector<std::pair<int, int>> leaf_slots() const;
  // parent vertex of v, -1 for the root
  int parent(int v) const;

  // Grafts `upper` onto the leaf with planar index `leaf_index`; the leaf
  // color must equal the output color of `upper`.
  CTree graft(int leaf_index, const CTree& upper) const;

  void validate() const;

  // construction helper: root vertex with the given inputs, each either a
  // leaf color or a whole subtree
  using Input = std::variant<Color, CTree>;
  static CTree build(Color out, const std::vector<Input>& inputs);

  std::vector<Vertex>& mutable_vertices() { return verts_; }
  void set_root(int r) { root_ = r; }

private:
  std::vector<Vertex> verts_;
  int root_ = -1;
  Color edge_color_ = 0;
};

struct MarkedTree {
  CTree tree;
  std::set<int> ds;  // distinguished vertices

  // marked variant of CTree::build: the root mark plus subtree marks
  static MarkedTree build(Color out, bool root_marked,
                          const std::vector<std::variant<Color, MarkedTree>>& inputs);
};

// Encoding equal iff the marked trees are isomorphic preserving root,
// colors, and marks (non-planar).  With pin_distinguished, isomorphisms
// must additionally preserve the planar input order at every distinguished
// vertex.
std::string canonical_form(const MarkedTree& t, bool pin_distinguished = false);

// Rearranged copy whose planar layout realizes the canonical encoding;
// vertices are renumbered in depth-first order.
MarkedTree canonicalize(const MarkedTree& t, bool pin_distinguished = false);

struct TreeAutElem {
  std::vector<int> vmap;                  // vertex -> vertex
  std::vector<std::vector<int>> slotmap;  // per vertex: slot -> slot of image
  Perm leaf_perm;                         // on planar leaf indices
};

struct TreeAut {
  PermGroup group;                  // faithful action on vertices and flags
  std::vector<TreeAutElem> elems;   // aligned with group.elements()
  Perm leaf_perm(int idx) const { return elems.at(static_cast<size_t>(idx)).leaf_perm; }
  // permutation of the distinguished vertices, listed in increasing order
  Perm ds_perm(const MarkedTree& t, int idx) const;
};

TreeAut automorphism_group(const MarkedTree& t, bool pin_distinguished = false);

// |Aut| by the recursive grafting decomposition: the product over
// isomorphism classes of child subtrees of |Aut(child)|^mult * mult!.
long aut_order_by_decomposition(const MarkedTree& t);

bool is_well_marked(const MarkedTree& t);
bool is_reduced(const MarkedTree& t);

struct ReducedEnum {
  std::vector<MarkedTree> classes;  // canonical, deterministic order
  bool bound_hit = false;           // a candidate was pruned by vertex_bound
};

// All isomorphism classes of reduced trees with input/output profile in
// the orbit of `entry`, exactly k distinguished vertices with profile in
// the orbit of `s`, normal vertices only at profiles where `support`
// holds, and at most vertex_bound vertices.
ReducedEnum enumerate_reduced(const ColorSet& colors, const IOPair& s, int k, const IOPair& entry,
                              const std::function<bool(const IOPair&)>& support, int vertex_bound,
                              bool pin_distinguished = false);

// All isomorphism classes of colored trees whose vertex profiles match the
// given multiset exactly and whose input/output profile equals `entry` up
// to permutation of inputs.
std::vector<MarkedTree> enumerate_with_profiles(const ColorSet& colors,
                                                const std::vector<IOPair>& vertex_profiles,
                                                const IOPair& entry);

}  // namespace finop

#endif
