/* Small sets of simple-generator indices, kept as bitmasks.
   Finite types use labels 1..n, affine type uses 0..n. */
#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace schubert {

struct GenSet {
  uint32_t bits = 0;

  GenSet() = default;
  explicit GenSet(uint32_t b) : bits(b) {}

  static GenSet of(std::initializer_list<int> xs) {
    GenSet g;
    for (int x : xs) g.add(x);
    return g;
  }

  bool contains(int s) const { return (bits >> s) & 1u; }
  void add(int s) { bits |= (1u << s); }
  void remove(int s) { bits &= ~(1u << s); }
  bool empty() const { return bits == 0; }
  int size() const { return __builtin_popcount(bits); }

  bool subset_of(GenSet o) const { return (bits & ~o.bits) == 0; }
  GenSet unite(GenSet o) const { return GenSet(bits | o.bits); }
  GenSet intersect(GenSet o) const { return GenSet(bits & o.bits); }
  GenSet minus(GenSet o) const { return GenSet(bits & ~o.bits); }
  GenSet without(int s) const {
    GenSet g = *this;
    g.remove(s);
    return g;
  }
  GenSet with(int s) const {
    GenSet g = *this;
    g.add(s);
    return g;
  }

  // smallest member, or -1 when empty
  int min() const { return bits ? __builtin_ctz(bits) : -1; }

  std::vector<int> members() const {
    std::vector<int> v;
    for (uint32_t b = bits; b; b &= b - 1) v.push_back(__builtin_ctz(b));
    return v;
  }

  friend bool operator==(GenSet a, GenSet b) { return a.bits == b.bits; }
  friend bool operator!=(GenSet a, GenSet b) { return a.bits != b.bits; }
  friend bool operator<(GenSet a, GenSet b) { return a.bits < b.bits; }

  // sorted comma-separated indices, e.g. "1,3"; empty set prints as ""
  std::string str() const {
    std::ostringstream os;
    bool first = true;
    for (int s : members()) {
      if (!first) os << ',';
      os << s;
      first = false;
    }
    return os.str();
  }
};

// Parses "1,3,2,3,1" into a word; "" is the empty word.
inline std::vector<int> parse_word(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::istringstream is(text);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    if (tok.empty()) throw std::invalid_argument("malformed word: '" + text + "'");
    size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size() || v < 0) throw std::invalid_argument("malformed word: '" + text + "'");
    out.push_back(v);
  }
  return out;
}

inline GenSet parse_genset(const std::string& text) {
  GenSet g;
  for (int s : parse_word(text)) {
    if (s > 31) throw std::invalid_argument("generator index out of range: " + std::to_string(s));
    g.add(s);
  }
  return g;
}

inline std::string word_str(const std::vector<int>& w) {
  std::ostringstream os;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) os << ',';
    os << w[i];
  }
  return os.str();
}

}  // namespace schubert
