/* Dynkin diagram data for the finite Weyl groups A-G and affine type A:
   legal (type, rank) pairs, Cartan matrices, bond orders, adjacency, and
   identification of sub-diagrams against the canonical labelled diagrams.

   Labelling conventions:
     A_n   1-2-...-n
     B_n   1-2-...-(n-1)=>n          (alpha_n short)
     C_n   1-2-...-(n-1)<=n          (alpha_n long)
     D_n   1-3-4-...-n with 2 attached to 3
     E_n   1-2-4-5-...-n with 3 attached to 4
     F_4   1-2=>3-4                  (alpha_3, alpha_4 short)
     G_2   1=>2 (triple)             (alpha_2 short)
     affA_n  cycle 0-1-...-n-0 */
#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "schubert/genset.hpp"

namespace schubert {

enum class Type { A, B, C, D, E, F, G, AffineA };

constexpr int kBondInfinity = -1;  // m_ij = infinity (affine A_1 only)

inline char type_letter(Type t) {
  switch (t) {
    case Type::A: return 'A';
    case Type::B: return 'B';
    case Type::C: return 'C';
    case Type::D: return 'D';
    case Type::E: return 'E';
    case Type::F: return 'F';
    case Type::G: return 'G';
    case Type::AffineA: return 'A';
  }
  return '?';
}

inline std::string type_name(Type t, int rank) {
  std::string s;
  if (t == Type::AffineA) s = "aff";
  s += type_letter(t);
  s += std::to_string(rank);
  return s;
}

// "B3" or "affA2" -> (type, rank); throws on anything else.
inline std::pair<Type, int> parse_system_name(const std::string& name) {
  std::string s = name;
  bool affine = false;
  if (s.rfind("aff", 0) == 0) {
    affine = true;
    s = s.substr(3);
  }
  if (s.size() < 2) throw std::invalid_argument("bad system name: " + name);
  char c = s[0];
  int rank = 0;
  try {
    size_t pos = 0;
    rank = std::stoi(s.substr(1), &pos);
    if (pos + 1 != s.size()) throw std::invalid_argument("");
  } catch (...) {
    throw std::invalid_argument("bad system name: " + name);
  }
  if (affine) {
    if (c != 'A') throw std::invalid_argument("only affine type A is supported: " + name);
    return {Type::AffineA, rank};
  }
  switch (c) {
    case 'A': return {Type::A, rank};
    case 'B': return {Type::B, rank};
    case 'C': return {Type::C, rank};
    case 'D': return {Type::D, rank};
    case 'E': return {Type::E, rank};
    case 'F': return {Type::F, rank};
    case 'G': return {Type::G, rank};
    default: throw std::invalid_argument("bad system name: " + name);
  }
}

inline bool legal_pair(Type t, int rank) {
  switch (t) {
    case Type::A: return rank >= 0;  // rank 0 = trivial group
    case Type::B: return rank >= 2;
    case Type::C: return rank >= 2;  // C2 = B2 transposed, needed as a sub-diagram label
    case Type::D: return rank >= 4;
    case Type::E: return rank == 6 || rank == 7 || rank == 8;
    case Type::F: return rank == 4;
    case Type::G: return rank == 2;
    case Type::AffineA: return rank >= 1;
  }
  return false;
}

// The Coxeter diagram: generator labels, bond orders m_ij, Cartan entries.
// Finite types use labels 1..rank; affine A_n uses 0..rank.
struct Diagram {
  Type type = Type::A;
  int rank = 0;

  int first_gen() const { return type == Type::AffineA ? 0 : 1; }
  int last_gen() const { return rank; }
  int num_gens() const { return type == Type::AffineA ? rank + 1 : rank; }
  bool finite() const { return type != Type::AffineA; }

  GenSet all_gens() const {
    GenSet g;
    for (int s = first_gen(); s <= last_gen(); ++s) g.add(s);
    return g;
  }

  // Cartan entry a_ij = 2(alpha_i, alpha_j)/(alpha_i, alpha_i); finite types only.
  int cartan(int i, int j) const {
    if (i == j) return 2;
    if (!edge(i, j)) return 0;
    switch (type) {
      case Type::B:
        if (i == rank && j == rank - 1) return -2;
        return -1;
      case Type::C:
        if (i == rank - 1 && j == rank) return -2;
        return -1;
      case Type::F:
        if (i == 3 && j == 2) return -2;
        return -1;
      case Type::G:
        if (i == 2 && j == 1) return -3;
        return -1;
      default:
        return -1;
    }
  }

  // m_ij: 2 when not adjacent, 3/4/6 on edges, kBondInfinity for affine A_1.
  int bond(int i, int j) const {
    if (i == j) return 1;
    if (!edge(i, j)) return 2;
    if (type == Type::AffineA && rank == 1) return kBondInfinity;
    int p = cartan_product(i, j);
    return p == 1 ? 3 : (p == 2 ? 4 : 6);
  }

  bool edge(int i, int j) const {
    if (i == j) return false;
    switch (type) {
      case Type::A:
      case Type::B:
      case Type::C:
        return std::abs(i - j) == 1;
      case Type::D:
        if ((i == 1 && j == 3) || (i == 3 && j == 1)) return true;
        if ((i == 2 && j == 3) || (i == 3 && j == 2)) return true;
        return i >= 3 && j >= 3 && std::abs(i - j) == 1;
      case Type::E:
        if ((i == 3 && j == 4) || (i == 4 && j == 3)) return true;
        if ((i == 1 && j == 2) || (i == 2 && j == 1)) return true;
        if ((i == 2 && j == 4) || (i == 4 && j == 2)) return true;
        return i >= 4 && j >= 4 && std::abs(i - j) == 1;
      case Type::F:
      case Type::G:
        return std::abs(i - j) == 1;
      case Type::AffineA:
        if (rank == 1) return (i == 0 && j == 1) || (i == 1 && j == 0);
        if (std::abs(i - j) == 1) return true;
        return (i == 0 && j == rank) || (i == rank && j == 0);
    }
    return false;
  }

  bool adjacent(int s, GenSet T) const {
    for (int t : T.members())
      if (edge(s, t)) return true;
    return false;
  }

  GenSet neighbours(int s) const {
    GenSet g;
    for (int t = first_gen(); t <= last_gen(); ++t)
      if (edge(s, t)) g.add(t);
    return g;
  }

  std::vector<GenSet> connected_components(GenSet T) const {
    std::vector<GenSet> out;
    GenSet left = T;
    while (!left.empty()) {
      GenSet comp;
      std::vector<int> stack = {left.min()};
      comp.add(left.min());
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : left.members())
          if (!comp.contains(y) && edge(x, y)) {
            comp.add(y);
            stack.push_back(y);
          }
      }
      out.push_back(comp);
      left = left.minus(comp);
    }
    return out;
  }

  // leaf of the sub-diagram on T: at most one neighbour within T
  bool is_leaf_in(int s, GenSet T) const {
    return neighbours(s).intersect(T).size() <= 1;
  }

 private:
  int cartan_product(int i, int j) const {
    if (type == Type::AffineA) return 1;  // all cycle edges are simple bonds (rank >= 2)
    return cartan(i, j) * cartan(j, i);
  }
};

// A connected sub-diagram matched against a canonical labelled diagram.
// relabel maps original generator labels onto canonical ones s_1..s_k.
struct SubDiagram {
  Type type;
  int rank;
  std::vector<std::pair<int, int>> relabel;  // (original, canonical), sorted by original

  int to_canonical(int orig) const {
    for (auto& [o, c] : relabel)
      if (o == orig) return c;
    throw std::logic_error("relabel: generator not in component");
  }
  int from_canonical(int canon) const {
    for (auto& [o, c] : relabel)
      if (c == canon) return o;
    throw std::logic_error("relabel: canonical label not in component");
  }
};

namespace detail {

// Orders the nodes of a chain component from one end to the other.
inline std::vector<int> chain_order(const Diagram& d, GenSet comp, int end) {
  std::vector<int> order = {end};
  GenSet seen = GenSet::of({});
  seen.add(end);
  while (static_cast<int>(order.size()) < comp.size()) {
    int cur = order.back();
    int next = -1;
    for (int y : comp.members())
      if (!seen.contains(y) && d.edge(cur, y)) next = y;
    if (next < 0) throw std::logic_error("chain_order: component is not a chain");
    order.push_back(next);
    seen.add(next);
  }
  return order;
}

inline SubDiagram make_sub(Type t, int rank, const std::vector<int>& orig_by_canonical) {
  SubDiagram sd;
  sd.type = t;
  sd.rank = rank;
  for (size_t c = 0; c < orig_by_canonical.size(); ++c)
    sd.relabel.push_back({orig_by_canonical[c], static_cast<int>(c) + 1});
  std::sort(sd.relabel.begin(), sd.relabel.end());
  return sd;
}

}  // namespace detail

// Matches one connected component of the sub-diagram on K against the canonical
// finite diagrams. The full affine generator set (an honest cycle) matches
// nothing and throws. For rank-2 double-bond components the B/C distinction is
// not intrinsic to the sub-diagram; it is inherited from a type-C ambient and
// canonicalized as B2 otherwise (the two labellings give matching verdicts).
inline SubDiagram identify_component(const Diagram& d, GenSet comp) {
  int k = comp.size();
  if (k == 0) throw std::invalid_argument("identify_component: empty component");
  auto nodes = comp.members();
  if (k == 1) return detail::make_sub(Type::A, 1, {nodes[0]});

  // degree profile within the component
  int trivalent = -1;
  std::vector<int> leaves;
  for (int x : nodes) {
    int deg = d.neighbours(x).intersect(comp).size();
    if (deg > 3) throw std::invalid_argument("identify_component: node of degree > 3");
    if (deg == 3) {
      if (trivalent >= 0) throw std::invalid_argument("identify_component: two branch nodes");
      trivalent = x;
    }
    if (deg <= 1) leaves.push_back(x);
  }
  if (leaves.empty()) throw std::invalid_argument("identify_component: cycle sub-diagram");

  if (trivalent < 0) {
    // a chain; collect its non-simple bonds
    std::vector<int> order = detail::chain_order(d, comp, *std::min_element(leaves.begin(), leaves.end()));
    int double_at = -1, triple_at = -1;
    for (int i = 0; i + 1 < k; ++i) {
      int m = d.bond(order[i], order[i + 1]);
      if (m == kBondInfinity) throw std::invalid_argument("identify_component: infinite bond");
      if (m == 4) double_at = i;
      if (m == 6) triple_at = i;
    }
    if (triple_at >= 0) {
      if (k != 2) throw std::invalid_argument("identify_component: triple bond in a long chain");
      // G2: canonical alpha_2 short
      int a = order[0], b = order[1];
      int short_node = d.cartan(a, b) == -3 ? a : b;
      int long_node = short_node == a ? b : a;
      return detail::make_sub(Type::G, 2, {long_node, short_node});
    }
    if (double_at < 0) return detail::make_sub(Type::A, k, order);
    if (double_at != 0 && double_at != k - 2) {
      if (k != 4) throw std::invalid_argument("identify_component: interior double bond");
      // F4: long side maps to 1,2 and short side to 3,4
      int p = order[double_at], q = order[double_at + 1];
      bool p_short = d.cartan(p, q) == -2;
      if (p_short) std::reverse(order.begin(), order.end());
      return detail::make_sub(Type::F, 4, order);
    }
    if (k == 2) {
      // B2/C2 are the same labelled diagram up to a flip, so the split is not
      // intrinsic; inherit C2 from a C ambient and canonicalize as B2 otherwise.
      int a = order[0], b = order[1];
      int short_node = d.cartan(a, b) == -2 ? a : b;
      int long_node = short_node == a ? b : a;
      if (d.type == Type::C) return detail::make_sub(Type::C, 2, {short_node, long_node});
      return detail::make_sub(Type::B, 2, {long_node, short_node});
    }
    // longer chain with the double bond at an end: B_k or C_k by root lengths
    if (double_at == 0) std::reverse(order.begin(), order.end());
    int end = order[k - 1], inner = order[k - 2];
    bool end_short = d.cartan(end, inner) == -2;
    return detail::make_sub(end_short ? Type::B : Type::C, k, order);
  }

  // branch node present: D or E
  std::vector<std::vector<int>> arms;  // walked outward from the branch node
  for (int nb : d.neighbours(trivalent).intersect(comp).members()) {
    std::vector<int> arm = {nb};
    int prev = trivalent, cur = nb;
    while (true) {
      int next = -1;
      for (int y : d.neighbours(cur).intersect(comp).members())
        if (y != prev) next = y;
      if (next < 0) break;
      arm.push_back(next);
      prev = cur;
      cur = next;
    }
    arms.push_back(arm);
  }
  for (auto& arm : arms)
    for (size_t i = 0; i + 1 <= arm.size(); ++i) {
      int a = i == 0 ? trivalent : arm[i - 1];
      if (d.bond(a, arm[i]) != 3)
        throw std::invalid_argument("identify_component: multiple bond on a branched diagram");
    }
  std::sort(arms.begin(), arms.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a[0] < b[0];
  });
  size_t l0 = arms[0].size(), l1 = arms[1].size(), l2 = arms[2].size();
  if (l0 == 1 && l1 == 1) {
    // D_k: short arms -> 1,2; branch -> 3; long arm -> 4..k
    std::vector<int> canon = {std::min(arms[0][0], arms[1][0]), std::max(arms[0][0], arms[1][0]), trivalent};
    for (int x : arms[2]) canon.push_back(x);
    return detail::make_sub(Type::D, k, canon);
  }
  if (l0 == 1 && l1 == 2 && l2 >= 2 && k >= 6 && k <= 8) {
    // E_k: arms (1, 2, k-4); chain 1-2-4-...-k with 3 under 4
    std::vector<int> canon(k);
    canon[2] = arms[0][0];  // canonical 3
    canon[3] = trivalent;   // canonical 4
    canon[1] = arms[1][0];
    canon[0] = arms[1][1];
    for (size_t i = 0; i < arms[2].size(); ++i) canon[4 + i] = arms[2][i];
    return detail::make_sub(Type::E, k, canon);
  }
  throw std::invalid_argument("identify_component: branched diagram matches no finite type");
}

// Decomposes the sub-diagram on K into connected components, each identified.
inline std::vector<SubDiagram> identify_type(const Diagram& d, GenSet K) {
  if (!K.subset_of(d.all_gens())) throw std::invalid_argument("identify_type: K not a generator subset");
  if (!d.finite() && K == d.all_gens())
    throw std::invalid_argument("identify_type: full affine generator set is not of finite type");
  std::vector<SubDiagram> out;
  for (GenSet comp : d.connected_components(K)) out.push_back(identify_component(d, comp));
  return out;
}

}  // namespace schubert
