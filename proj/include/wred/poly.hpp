#ifndef WRED_POLY_HPP
#define WRED_POLY_HPP

#include <map>
#include <string>
#include <vector>

#include "wred/rational.hpp"

namespace wred {

/// Exponent vector, fixed number of variables.
using Expo = std::vector<int>;

/// Sparse multivariate polynomial over Q.  Monomial order is lexicographic
/// on the exponent vector, which keeps every serialization deterministic.
class Poly {
 public:
  explicit Poly(int nvars = 0) : nvars_(nvars) {}

  static Poly constant(int nvars, const Rat& c) {
    Poly p(nvars);
    if (c != 0) p.terms_[Expo(nvars, 0)] = c;
    return p;
  }
  static Poly variable(int nvars, int i, const Rat& c = Rat(1)) {
    Poly p(nvars);
    if (c != 0) {
      Expo e(nvars, 0);
      e[i] = 1;
      p.terms_[e] = c;
    }
    return p;
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Expo, Rat>& terms() const { return terms_; }

  void add_term(const Expo& e, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_[e] = c;
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Poly& operator+=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Poly operator+(const Poly& o) const {
    Poly r = *this;
    r += o;
    return r;
  }
  Poly operator-() const {
    Poly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
  }
  Poly operator-(const Poly& o) const { return *this + (-o); }
  Poly operator*(const Poly& o) const {
    Poly r(nvars_);
    for (const auto& [e1, c1] : terms_)
      for (const auto& [e2, c2] : o.terms_) {
        Expo e(nvars_);
        for (int i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
        r.add_term(e, c1 * c2);
      }
    return r;
  }
  Poly operator*(const Rat& c) const {
    Poly r(nvars_);
    if (c == 0) return r;
    for (const auto& [e, cc] : terms_) r.terms_[e] = cc * c;
    return r;
  }
  bool operator==(const Poly& o) const { return terms_ == o.terms_; }

  Poly derivative(int i) const {
    Poly r(nvars_);
    for (const auto& [e, c] : terms_) {
      if (e[i] == 0) continue;
      Expo d = e;
      d[i] -= 1;
      r.add_term(d, c * e[i]);
    }
    return r;
  }

  int total_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (int x : e) s += x;
      d = std::max(d, s);
    }
    return d;
  }

  Rat eval(const QVec& x) const {
    Rat r(0);
    for (const auto& [e, c] : terms_) {
      Rat t = c;
      for (int i = 0; i < nvars_; ++i)
        for (int k = 0; k < e[i]; ++k) t *= x[i];
      r += t;
    }
    return r;
  }

  /// Substitute variable i -> linear polynomial subs[i] (all at once).
  Poly substitute(const std::vector<Poly>& subs) const {
    Poly r(subs.empty() ? nvars_ : subs[0].nvars());
    for (const auto& [e, c] : terms_) {
      Poly t = Poly::constant(r.nvars(), c);
      for (int i = 0; i < nvars_; ++i)
        for (int k = 0; k < e[i]; ++k) t = t * subs[i];
      r += t;
    }
    return r;
  }

  std::string str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += rat_str(c);
      for (int i = 0; i < nvars_; ++i) {
        if (e[i] == 0) continue;
        s += "*" + names[i];
        if (e[i] > 1) s += "^" + std::to_string(e[i]);
      }
    }
    return s;
  }

 private:
  int nvars_;
  std::map<Expo, Rat> terms_;
};

}  // namespace wred

#endif
