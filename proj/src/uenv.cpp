#include "wred/uenv.hpp"

#include <algorithm>
#include <functional>

#include "wred/smat.hpp"

namespace wred {

namespace {

UMono mono_prepend(int g, const UMono& m) {
  UMono out;
  out.reserve(m.size() + 1);
  bool placed = false;
  for (const auto& [i, e] : m) {
    if (!placed && g == i) {
      out.emplace_back(i, e + 1);
      placed = true;
    } else {
      if (!placed && g < i) {
        out.emplace_back(g, 1);
        placed = true;
      }
      out.emplace_back(i, e);
    }
  }
  if (!placed) out.emplace_back(g, 1);
  return out;
}

}  // namespace

UPoly UEnv::mul_gen_mono(int g, const UMono& m) {
  if (m.empty()) return {{gen(g), Rat(1)}};
  int j = m.front().first;
  if (g <= j) return {{mono_prepend(g, m), Rat(1)}};
  auto key = std::make_pair(g, m);
  auto hit = lcache_.find(key);
  if (hit != lcache_.end()) return hit->second;

  // m = x_j * rest
  UMono rest = m;
  if (rest.front().second == 1)
    rest.erase(rest.begin());
  else
    rest.front().second -= 1;

  UPoly out;
  // x_g x_j rest = x_j (x_g rest) + [x_g, x_j] rest
  UPoly inner = mul_gen_mono(g, rest);
  for (const auto& [mm, c] : inner) add_to(out, mul_gen_mono(j, mm), c);
  for (const auto& [k, c] : cb_->bracket(g, j))
    add_to(out, mul_gen_mono(k, rest), c);

  lcache_.emplace(std::move(key), out);
  return out;
}

UPoly UEnv::mul_mono_gen(const UMono& m, int g) {
  if (m.empty()) return {{gen(g), Rat(1)}};
  int j = m.back().first;
  if (g >= j) {
    UMono out = m;
    if (out.back().first == g)
      out.back().second += 1;
    else
      out.emplace_back(g, 1);
    return {{out, Rat(1)}};
  }
  auto key = std::make_pair(g, m);
  auto hit = rcache_.find(key);
  if (hit != rcache_.end()) return hit->second;

  UMono rest = m;  // m = rest * x_j
  if (rest.back().second == 1)
    rest.pop_back();
  else
    rest.back().second -= 1;

  UPoly out;
  // rest x_j x_g = (rest x_g) x_j + rest [x_j, x_g]
  UPoly inner = mul_mono_gen(rest, g);
  for (const auto& [mm, c] : inner) add_to(out, mul_mono_gen(mm, j), c);
  for (const auto& [k, c] : cb_->bracket(j, g))
    add_to(out, mul_mono_gen(rest, k), c);

  rcache_.emplace(std::move(key), out);
  return out;
}

UPoly UEnv::mul(const UPoly& a, const UPoly& b) {
  UPoly out;
  for (const auto& [mb, coeff] : b) {
    UPoly acc = a;
    for (const auto& [i, e] : mb)
      for (int k = 0; k < e; ++k) acc = mul_poly_gen(acc, i);
    add_to(out, acc, coeff);
  }
  return out;
}

UPoly UEnv::mul_poly_gen(const UPoly& a, int g) {
  UPoly out;
  for (const auto& [m, c] : a) add_to(out, mul_mono_gen(m, g), c);
  return out;
}

UPoly UEnv::mul_gen_poly(int g, const UPoly& a) {
  UPoly out;
  for (const auto& [m, c] : a) add_to(out, mul_gen_mono(g, m), c);
  return out;
}

UPoly UEnv::commutator(const UPoly& a, const UPoly& b) {
  UPoly ab = mul(a, b);
  add_to(ab, mul(b, a), Rat(-1));
  return ab;
}

UPoly UEnv::transpose(const UPoly& a) {
  int m = cb_->rs->num_positive();
  int l = cb_->rs->rank;
  auto tau_idx = [&](int i) {
    if (cb_->is_cartan(i)) return i;
    return 2 * m + l - 1 - i;  // swaps x_{beta} and x_{-beta}
  };
  UPoly out;
  for (const auto& [mono, c] : a) {
    UPoly acc = {{one(), c}};
    for (auto it = mono.rbegin(); it != mono.rend(); ++it)
      for (int k = 0; k < it->second; ++k)
        acc = mul_poly_gen(acc, tau_idx(it->first));
    add_to(out, acc);
  }
  return out;
}

Poly UEnv::cartan_part(const UPoly& a) const {
  int l = cb_->rs->rank;
  int m = cb_->rs->num_positive();
  Poly p(l);
  for (const auto& [mono, c] : a) {
    bool cartan_only = true;
    Expo e(l, 0);
    for (const auto& [i, k] : mono) {
      if (!cb_->is_cartan(i)) {
        cartan_only = false;
        break;
      }
      e[i - m] = k;
    }
    if (cartan_only) p.add_term(e, c);
  }
  return p;
}

Rat UEnv::highest_weight_eval(const UPoly& a, const QVec& w) const {
  return cartan_part(a).eval(w);
}

UPoly symmetrize(UEnv& env, const Poly& p) {
  UPoly out;
  for (const auto& [e, c] : p.terms()) {
    std::vector<int> factors;
    for (size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) factors.push_back(static_cast<int>(i));
    std::sort(factors.begin(), factors.end());
    std::vector<std::vector<int>> perms;
    do {
      perms.push_back(factors);
    } while (std::next_permutation(factors.begin(), factors.end()));
    Rat scale = c / Rat(static_cast<long>(perms.size()));
    for (const auto& perm : perms) {
      UPoly acc = {{UEnv::one(), scale}};
      for (int g : perm) acc = env.mul_poly_gen(acc, g);
      UEnv::add_to(out, acc);
    }
  }
  return out;
}

std::vector<Poly> invariant_polynomials(const ChevalleyBasis& cb, int degree) {
  int n = cb.dim;
  std::vector<Expo> monos;
  Expo cur(n, 0);
  std::function<void(int, int)> rec = [&](int var, int left) {
    if (var == n - 1) {
      cur[var] = left;
      monos.push_back(cur);
      return;
    }
    for (int k = left; k >= 0; --k) {
      cur[var] = k;
      rec(var + 1, left - k);
    }
    cur[var] = 0;
  };
  rec(0, degree);
  std::map<Expo, int> mono_id;
  for (size_t i = 0; i < monos.size(); ++i)
    mono_id[monos[i]] = static_cast<int>(i);

  // stack ad(x_a) over all basis elements a; kernel = invariants
  SMat big(static_cast<int>(monos.size()) * n, static_cast<int>(monos.size()));
  for (int a = 0; a < n; ++a) {
    for (size_t mi = 0; mi < monos.size(); ++mi) {
      const Expo& e = monos[mi];
      for (int v = 0; v < n; ++v) {
        if (e[v] == 0) continue;
        for (const auto& [k, c] : cb.bracket(a, v)) {
          Expo t = e;
          t[v] -= 1;
          t[k] += 1;
          big.add(a * static_cast<int>(monos.size()) + mono_id[t],
                  static_cast<int>(mi), c * e[v]);
        }
      }
    }
  }
  big.compress();
  auto ker = big.kernel_basis();
  std::vector<Poly> out;
  for (const auto& v : ker) {
    Poly p(n);
    for (size_t i = 0; i < monos.size(); ++i)
      if (v[i] != 0) p.add_term(monos[i], v[i]);
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace wred
