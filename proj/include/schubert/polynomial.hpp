/* Dense integer polynomials in one variable t, indexed by degree. */
#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace schubert {

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<long long> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Polynomial zero() { return Polynomial(); }
  static Polynomial one() { return Polynomial({1}); }

  // coefficient of t^k
  long long operator[](size_t k) const { return k < c_.size() ? c_[k] : 0; }
  const std::vector<long long>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return c_.empty() ? -1 : static_cast<int>(c_.size()) - 1; }

  void add_term(size_t deg, long long v) {
    if (deg >= c_.size()) c_.resize(deg + 1, 0);
    c_[deg] += v;
    trim();
  }

  long long eval_at_one() const {
    long long s = 0;
    for (long long x : c_) s += x;
    return s;
  }

  bool palindromic() const {
    size_t n = c_.size();
    for (size_t i = 0; i < n / 2; ++i)
      if (c_[i] != c_[n - 1 - i]) return false;
    return true;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<long long> out(a.c_.size() + b.c_.size() - 1, 0);
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(out));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  // serialized as a coefficient array, low degree first: [1,3,5,6,4,1]
  std::string str() const {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < c_.size(); ++i) {
      if (i) os << ',';
      os << c_[i];
    }
    os << ']';
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<long long> c_;  // c_[k] = coefficient of t^k
};

}  // namespace schubert
