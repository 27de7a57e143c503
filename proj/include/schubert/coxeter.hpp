/* Finite Weyl groups in the reflection representation: exact integer matrices
   acting on the simple-root basis, with reduced words, descents, supports and
   the parabolic machinery. The word-level algorithms at the bottom are
   templates shared with the affine permutation model. */
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <queue>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "schubert/dynkin.hpp"
#include "schubert/genset.hpp"

namespace schubert {

constexpr int kMaxRank = 8;

struct CoxeterSystem {
  Diagram diagram;
  std::vector<std::vector<int>> positive_roots;  // coordinates in the simple-root basis

  Type type() const { return diagram.type; }
  int rank() const { return diagram.rank; }
  std::string name() const { return type_name(diagram.type, diagram.rank); }
  int first_gen() const { return diagram.first_gen(); }
  int last_gen() const { return diagram.last_gen(); }
  GenSet all_gens() const { return diagram.all_gens(); }
  bool finite() const { return diagram.finite(); }
  bool parabolic_finite(GenSet) const { return true; }
  int longest_length() const { return static_cast<int>(positive_roots.size()); }

  int cartan(int i, int j) const { return diagram.cartan(i, j); }
  int bond(int i, int j) const { return diagram.bond(i, j); }

  static CoxeterSystem build(Type t, int rank) {
    if (t == Type::AffineA)
      throw std::invalid_argument("affine systems use the affine permutation model");
    if (!legal_pair(t, rank))
      throw std::invalid_argument("illegal type/rank pair: " + type_name(t, rank));
    if (rank > kMaxRank) throw std::invalid_argument("rank exceeds supported maximum");
    CoxeterSystem sys;
    sys.diagram = Diagram{t, rank};
    sys.enumerate_roots();
    return sys;
  }

  static CoxeterSystem build(const std::string& name) {
    auto [t, r] = parse_system_name(name);
    return build(t, r);
  }

 private:
  // closes the simple roots under the simple reflections
  void enumerate_roots() {
    int n = rank();
    std::unordered_set<std::string> seen;
    auto key = [n](const std::vector<int>& v) {
      std::string k;
      for (int i = 0; i < n; ++i) k += std::to_string(v[i]) + ";";
      return k;
    };
    for (int i = 1; i <= n; ++i) {
      std::vector<int> a(n, 0);
      a[i - 1] = 1;
      positive_roots.push_back(a);
      seen.insert(key(a));
    }
    for (size_t head = 0; head < positive_roots.size(); ++head) {
      std::vector<int> beta = positive_roots[head];
      for (int s = 1; s <= n; ++s) {
        // s(beta) = beta - <beta, alpha_s^vee> alpha_s
        long long pairing = 0;
        for (int j = 1; j <= n; ++j) pairing += static_cast<long long>(cartan(s, j)) * beta[j - 1];
        std::vector<int> g = beta;
        g[s - 1] -= static_cast<int>(pairing);
        bool pos = true, nonzero = false;
        for (int c : g) {
          if (c < 0) pos = false;
          if (c != 0) nonzero = true;
        }
        if (pos && nonzero && seen.insert(key(g)).second) positive_roots.push_back(g);
      }
      if (positive_roots.size() > 1024) throw std::logic_error("root closure did not terminate");
    }
    std::sort(positive_roots.begin(), positive_roots.end());
  }
};

// A Weyl group element stored as its action on the simple-root basis
// (columns are images of simple roots), together with the inverse matrix.
class WeylElt {
 public:
  WeylElt() = default;

  static WeylElt identity(const CoxeterSystem& sys) {
    WeylElt w;
    w.sys_ = &sys;
    w.n_ = sys.rank();
    w.mat_.fill(0);
    w.inv_.fill(0);
    for (int i = 0; i < w.n_; ++i) {
      w.mat_[i * w.n_ + i] = 1;
      w.inv_[i * w.n_ + i] = 1;
    }
    w.len_ = 0;
    return w;
  }

  static WeylElt generator(const CoxeterSystem& sys, int s) {
    return identity(sys).right_mul(s);
  }

  static WeylElt from_word(const CoxeterSystem& sys, const std::vector<int>& word) {
    WeylElt w = identity(sys);
    for (int s : word) w = w.right_mul(s);
    return w;
  }

  const CoxeterSystem& sys() const { return *sys_; }
  int length() const { return len_; }
  bool is_identity() const { return len_ == 0; }
  WeylElt identity_like() const { return identity(*sys_); }

  // w(alpha_s) is a negative root
  bool right_descent(int s) const { return column_negative(mat_, s); }
  // w^{-1}(alpha_s) is a negative root
  bool left_descent(int s) const { return column_negative(inv_, s); }

  WeylElt right_mul(int s) const {
    check_gen(s);
    WeylElt r = *this;
    bool up = !right_descent(s);
    apply_gen_right(r.mat_, s);
    apply_gen_left(r.inv_, s);
    r.len_ += up ? 1 : -1;
    return r;
  }

  WeylElt left_mul(int s) const {
    check_gen(s);
    WeylElt r = *this;
    bool up = !left_descent(s);
    apply_gen_left(r.mat_, s);
    apply_gen_right(r.inv_, s);
    r.len_ += up ? 1 : -1;
    return r;
  }

  WeylElt mul(const WeylElt& o) const {
    if (sys_ != o.sys_)
      throw std::invalid_argument("product of elements of different systems");
    WeylElt r;
    r.sys_ = sys_;
    r.n_ = n_;
    mat_mul(r.mat_, mat_, o.mat_, n_);
    mat_mul(r.inv_, o.inv_, inv_, n_);
    r.len_ = r.length_from_matrix();
    return r;
  }

  WeylElt inverse() const {
    WeylElt r = *this;
    std::swap(r.mat_, r.inv_);
    return r;
  }

  friend bool operator==(const WeylElt& a, const WeylElt& b) {
    if (a.n_ != b.n_) return false;
    return std::equal(a.mat_.begin(), a.mat_.begin() + a.n_ * a.n_, b.mat_.begin());
  }
  friend bool operator!=(const WeylElt& a, const WeylElt& b) { return !(a == b); }

  size_t hash() const {
    uint64_t h = 1469598103934665603ull;
    for (int i = 0; i < n_ * n_; ++i) {
      h ^= static_cast<uint64_t>(static_cast<uint32_t>(mat_[i]));
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }

  int length_from_matrix() const {
    int cnt = 0;
    for (const auto& beta : sys_->positive_roots) {
      long long lead = 0;
      for (int r = 0; r < n_ && lead == 0; ++r) {
        long long v = 0;
        for (int c = 0; c < n_; ++c) v += static_cast<long long>(mat_[r * n_ + c]) * beta[c];
        lead = v;
      }
      if (lead < 0) ++cnt;
    }
    return cnt;
  }

 private:
  using Mat = std::array<int32_t, kMaxRank * kMaxRank>;

  void check_gen(int s) const {
    if (s < 1 || s > n_) throw std::invalid_argument("generator index out of range");
  }

  bool column_negative(const Mat& m, int s) const {
    int c = s - 1;
    for (int r = 0; r < n_; ++r) {
      int32_t v = m[r * n_ + c];
      if (v != 0) return v < 0;
    }
    return false;  // zero column cannot occur
  }

  // m := m * M(s)   (column update using the Cartan row of s)
  void apply_gen_right(Mat& m, int s) const {
    for (int r = 0; r < n_; ++r) {
      int32_t ms = m[r * n_ + (s - 1)];
      if (ms == 0) continue;
      for (int c = 0; c < n_; ++c) m[r * n_ + c] -= sys_->cartan(s, c + 1) * ms;
    }
  }

  // m := M(s) * m   (row s update)
  void apply_gen_left(Mat& m, int s) const {
    std::array<int32_t, kMaxRank> acc{};
    for (int k = 0; k < n_; ++k) {
      int a = sys_->cartan(s, k + 1);
      if (a == 0) continue;
      for (int c = 0; c < n_; ++c) acc[c] += a * m[k * n_ + c];
    }
    for (int c = 0; c < n_; ++c) m[(s - 1) * n_ + c] -= acc[c];
  }

  static void mat_mul(Mat& out, const Mat& a, const Mat& b, int n) {
    out.fill(0);
    for (int r = 0; r < n; ++r)
      for (int k = 0; k < n; ++k) {
        int32_t v = a[r * n + k];
        if (v == 0) continue;
        for (int c = 0; c < n; ++c) out[r * n + c] += v * b[k * n + c];
      }
  }

  const CoxeterSystem* sys_ = nullptr;
  int n_ = 0;
  Mat mat_{}, inv_{};
  int len_ = 0;
};

template <class E>
struct ElemHash {
  size_t operator()(const E& e) const { return e.hash(); }
};

/* ---- word-level algorithms, shared by WeylElt and AffinePerm ---- */

// lexicographically minimal reduced word, by greedy extraction of the
// smallest-index left descent
template <class E>
std::vector<int> canonical_word(const E& w) {
  std::vector<int> out;
  E x = w;
  const auto& sys = w.sys();
  while (!x.is_identity()) {
    int pick = -1;
    for (int s = sys.first_gen(); s <= sys.last_gen(); ++s)
      if (x.left_descent(s)) {
        pick = s;
        break;
      }
    if (pick < 0) throw std::logic_error("non-identity element with no left descent");
    out.push_back(pick);
    x = x.left_mul(pick);
  }
  return out;
}

template <class E>
GenSet support(const E& w) {
  GenSet g;
  for (int s : canonical_word(w)) g.add(s);
  return g;
}

template <class E>
GenSet right_descent_set(const E& w) {
  GenSet g;
  for (int s = w.sys().first_gen(); s <= w.sys().last_gen(); ++s)
    if (w.right_descent(s)) g.add(s);
  return g;
}

template <class E>
GenSet left_descent_set(const E& w) {
  GenSet g;
  for (int s = w.sys().first_gen(); s <= w.sys().last_gen(); ++s)
    if (w.left_descent(s)) g.add(s);
  return g;
}

template <class E>
E element_from_word(const E& proto, const std::vector<int>& word) {
  E x = proto.identity_like();
  for (int s : word) x = x.right_mul(s);
  return x;
}

template <class E>
bool in_quotient(const E& w, GenSet J) {  // w in W^J: no right descent in J
  for (int s : J.members())
    if (w.right_descent(s)) return false;
  return true;
}

template <class E>
bool in_left_quotient(const E& w, GenSet J) {  // w in ^J W
  for (int s : J.members())
    if (w.left_descent(s)) return false;
  return true;
}

// w = v * u with v in W^K, u in W_K, lengths additive
template <class E>
std::pair<E, E> parabolic_decompose_right(const E& w, GenSet K) {
  E v = w;
  E u = w.identity_like();
  bool moved = true;
  while (moved) {
    moved = false;
    for (int s : K.members())
      if (v.right_descent(s)) {
        v = v.right_mul(s);
        u = u.left_mul(s);
        moved = true;
        break;
      }
  }
  return {v, u};
}

// w = u * v with u in W_K, v in ^K W
template <class E>
std::pair<E, E> parabolic_decompose_left(const E& w, GenSet K) {
  E v = w;
  E u = w.identity_like();
  bool moved = true;
  while (moved) {
    moved = false;
    for (int s : K.members())
      if (v.left_descent(s)) {
        v = v.left_mul(s);
        u = u.right_mul(s);
        moved = true;
        break;
      }
  }
  return {u, v};
}

// the longest element of W_K; requires W_K finite
template <class E>
E longest_element(const E& proto, GenSet K) {
  if (!proto.sys().parabolic_finite(K))
    throw std::invalid_argument("longest element requested for an infinite parabolic");
  E x = proto.identity_like();
  int guard = 0;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int s : K.members())
      if (!x.right_descent(s)) {
        x = x.right_mul(s);
        moved = true;
        break;
      }
    if (++guard > 100000) throw std::logic_error("longest_element did not terminate");
  }
  return x;
}

// deterministic order: by length, then lexicographic canonical word
template <class E>
bool less_by_length_word(const E& a, const E& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  return canonical_word(a) < canonical_word(b);
}

// W^J_K = W^J n W_K, enumerated breadth-first by length with lexicographic
// tie-breaking; requires W_K finite
template <class E>
std::vector<E> minimal_coset_reps(const E& proto, GenSet K, GenSet J) {
  if (!J.subset_of(K)) throw std::invalid_argument("minimal_coset_reps: J must be contained in K");
  if (!proto.sys().parabolic_finite(K))
    throw std::invalid_argument("minimal_coset_reps: infinite parabolic");
  std::vector<E> out;
  std::unordered_set<E, ElemHash<E>> seen;
  E e = proto.identity_like();
  out.push_back(e);
  seen.insert(e);
  // W^J is closed under left descents, so building upward by left
  // multiplications within K reaches every representative
  for (size_t head = 0; head < out.size(); ++head) {
    E x = out[head];
    for (int s : K.members()) {
      if (x.left_descent(s)) continue;
      E y = x.left_mul(s);
      if (!in_quotient(y, J)) continue;
      if (seen.insert(y).second) out.push_back(y);
    }
  }
  std::sort(out.begin(), out.end(), less_by_length_word<E>);
  return out;
}

template <class E>
std::string element_str(const E& w) {
  auto cw = canonical_word(w);
  return cw.empty() ? std::string("e") : word_str(cw);
}

}  // namespace schubert
