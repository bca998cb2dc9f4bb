#include "gpm/codes.hpp"

#include <cmath>
#include <random>

#include "gpm/errors.hpp"

namespace gpm {

namespace {

void require_gamma_code(const Subgroup& h) {
  if (!h.parent().homogeneous())
    throw capability_error("weight enumerators need all factors equal (a Gamma-code)");
}

// polynomial helpers over Z, ascending coefficients
std::vector<Int> poly_mul(const std::vector<Int>& a, const std::vector<Int>& b) {
  std::vector<Int> out(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

std::vector<Int> poly_pow(std::vector<Int> base, int e, size_t cap_deg) {
  std::vector<Int> out{Int(1)};
  for (int i = 0; i < e; ++i) {
    out = poly_mul(out, base);
    if (out.size() > cap_deg + 1) out.resize(cap_deg + 1);
  }
  return out;
}

}  // namespace

Rat WeightEnumerator::eval(const Rat& t) const {
  Rat out = 0, p = 1;
  for (const auto& coeff : c) {
    out += Rat(coeff) * p;
    p *= t;
  }
  return out;
}

double WeightEnumerator::eval_real(double t) const {
  double out = 0, p = 1;
  for (const auto& coeff : c) {
    out += coeff.get_d() * p;
    p *= t;
  }
  return out;
}

Int WeightEnumerator::total() const {
  Int out = 0;
  for (const auto& coeff : c) out += coeff;
  return out;
}

WeightEnumerator weight_enumerator(const Subgroup& h) {
  require_gamma_code(h);
  int n = h.parent().arity();
  WeightEnumerator w;
  w.c.assign(n + 1, Int(0));
  for (const auto& t : h.elements()) {
    int weight = 0;
    for (int i = 0; i < n; ++i)
      if (t[i] != h.parent().factor(i).identity()) ++weight;
    w.c[weight] += 1;
  }
  return w;
}

WeightEnumerator dual_weight_enumerator(const Subgroup& h) {
  require_gamma_code(h);
  int n = h.parent().arity();
  auto d = exact_triv_distribution(h);
  WeightEnumerator w;
  w.c.assign(n + 1, Int(0));
  for (Mask s = 0; s < (Mask)d.size(); ++s) w.c[n - popcount(s)] += d[s];
  return w;
}

namespace {

GreeneReport greene_generic(const Subgroup& h, const std::vector<long>& a_values,
                            int float_samples, unsigned long seed, bool dual) {
  require_gamma_code(h);
  int n = h.parent().arity();
  long q = h.parent().factor(0).order();
  RankTable p = rank_table(h);
  TuttePoly tp = tutte(p);
  WeightEnumerator w = dual ? dual_weight_enumerator(h) : weight_enumerator(h);
  Int hsize((long)h.size());

  GreeneReport rep;
  rep.exact_ok = true;
  for (long a : a_values) {
    GreenePoint pt;
    pt.a = a;
    Rat qa = rat_pow(Rat(q), dual ? a : a - 1);
    pt.t = qa / (1 + qa);
    pt.lhs = w.eval(pt.t);
    if (!dual) {
      // (1-t)^r t^{n-r} = t^n |H|^{1-a};  u-1 = q^a, v-1 = q^{1-a}
      pt.rhs = rat_pow(pt.t, n) * rat_pow(Rat(hsize), 1 - a) *
               tutte_eval_exact(tp, a, 1 - a);
    } else {
      // t^r (1-t)^{n-r} = (1-t)^n |H|^a;  u-1 = q^{-a}, v-1 = q^{a+1}
      pt.rhs = rat_pow(1 - pt.t, n) * rat_pow(Rat(hsize), a) *
               tutte_eval_exact(tp, -a, a + 1);
    }
    pt.match = pt.lhs == pt.rhs;
    rep.exact_ok = rep.exact_ok && pt.match;
    rep.exact_points.push_back(pt);
  }

  rep.float_samples = float_samples;
  rep.float_ok = true;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(0.05, 0.95);
  double r = p.rank_real(p.full());
  for (int i = 0; i < float_samples; ++i) {
    double t = dist(rng);
    double lhs = w.eval_real(t);
    double u, v, pre;
    if (!dual) {
      u = (1 + (q - 1) * t) / (1 - t);
      v = 1 / t;
      pre = std::pow(1 - t, r) * std::pow(t, n - r);
    } else {
      u = 1 / t;
      v = (1 + (q - 1) * t) / (1 - t);
      pre = std::pow(t, r) * std::pow(1 - t, n - r);
    }
    double rhs = pre * tutte_eval_real(p, u, v);
    double rel = std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs));
    rep.max_rel_err = std::max(rep.max_rel_err, rel);
    if (rel > 1e-9) rep.float_ok = false;
  }
  return rep;
}

}  // namespace

GreeneReport greene_check(const Subgroup& h, const std::vector<long>& a_values,
                          int float_samples, unsigned long seed) {
  return greene_generic(h, a_values, float_samples, seed, false);
}

GreeneReport dual_greene_check(const Subgroup& h, const std::vector<long>& a_values,
                               int float_samples, unsigned long seed) {
  return greene_generic(h, a_values, float_samples, seed, true);
}

std::vector<Int> macwilliams_transform(const std::vector<Int>& w, long q) {
  int n = (int)w.size() - 1;
  std::vector<Int> out(n + 1, Int(0));
  std::vector<Int> one_minus{Int(1), Int(-1)};       // 1 - t
  std::vector<Int> one_plus{Int(1), Int(q - 1)};     // 1 + (q-1) t
  for (int j = 0; j <= n; ++j) {
    if (w[j] == 0) continue;
    auto term = poly_mul(poly_pow(one_minus, j, n), poly_pow(one_plus, n - j, n));
    for (int d = 0; d <= n && d < (int)term.size(); ++d) out[d] += w[j] * term[d];
  }
  return out;
}

MacWilliamsReport macwilliams_check(const Subgroup& h) {
  require_gamma_code(h);
  long q = h.parent().factor(0).order();
  Int hsize((long)h.size());

  WeightEnumerator wr = dual_weight_enumerator(h);
  MacWilliamsReport rep;
  for (const auto& coeff : wr.c) rep.lhs.push_back(hsize * coeff);
  // q^{r(E)} equals |H| exactly, so the cleared identity is
  // |H| W_R(t) = sum_h (1-t)^{w(h)} (1+(q-1)t)^{n-w(h)}
  rep.rhs = macwilliams_transform(weight_enumerator(h).c, q);
  rep.match = rep.lhs == rep.rhs;
  if (!rep.match) {
    for (size_t d = 0; d < std::max(rep.lhs.size(), rep.rhs.size()); ++d) {
      Int l = d < rep.lhs.size() ? rep.lhs[d] : Int(0);
      Int r = d < rep.rhs.size() ? rep.rhs[d] : Int(0);
      if (l != r) {
        rep.first_mismatch_degree = (int)d;
        break;
      }
    }
  }
  return rep;
}

}  // namespace gpm
