#include "gaussjacobi/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace gaussjacobi {

namespace {

using LD = long double;

struct LdMatrix {
  std::vector<LD> d;
  std::vector<LD> e;
};

LdMatrix build(const QuadParams& p) {
  const LD a = p.alpha, b = p.beta;
  const int n = p.n;
  LdMatrix m;
  m.d.resize(static_cast<std::size_t>(n));
  m.e.resize(static_cast<std::size_t>(n > 0 ? n - 1 : 0));
  m.d[0] = (b - a) / (a + b + 2);
  for (int k = 2; k <= n; ++k) {
    const LD s = 2 * LD(k) + a + b;
    m.d[k - 1] = (b - a) * (b + a) / ((s - 2) * s);
  }
  for (int k = 1; k < n; ++k) {
    const LD s = 2 * LD(k) + a + b;
    LD e2;
    if (k == 1) {
      // (k + a + b) cancels against (s - 1); both vanish when a + b = -1.
      e2 = 4 * (1 + a) * (1 + b) / ((s * s) * (s + 1));
    } else {
      e2 = 4 * LD(k) * (k + a) * (k + b) * (k + a + b) / ((s * s) * (s + 1) * (s - 1));
    }
    m.e[k - 1] = std::sqrt(e2);
  }
  return m;
}

struct Neumaier {
  LD sum = 0, c = 0;
  void add(LD v) {
    const LD t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      c += (sum - t) + v;
    } else {
      c += (v - t) + sum;
    }
    sum = t;
  }
  LD value() const { return sum + c; }
};

}  // namespace

TridiagonalJacobiMatrix jacobi_matrix(const QuadParams& p) {
  const LdMatrix m = build(p);
  TridiagonalJacobiMatrix out;
  out.diag.assign(m.d.begin(), m.d.end());
  out.offdiag.assign(m.e.begin(), m.e.end());
  out.mu0 = moment(p.alpha, p.beta, 0);
  return out;
}

QuadratureRule golub_welsch(const QuadParams& p) {
  if (p.n < 1 || p.n > kOracleMaxDegree) {
    throw Error(ErrorCode::DegreeOutOfRange, "golub_welsch: degree outside [1, 10000]");
  }
  LdMatrix m = build(p);
  const int n = p.n;
  std::vector<LD>& d = m.d;
  std::vector<LD> e(static_cast<std::size_t>(n), 0);
  std::copy(m.e.begin(), m.e.end(), e.begin());
  // First components of the eigenvectors.
  std::vector<LD> z(static_cast<std::size_t>(n), 0);
  z[0] = 1;

  const LD eps = std::numeric_limits<LD>::epsilon();
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    for (;;) {
      int mm = l;
      for (; mm < n - 1; ++mm) {
        const LD dd = std::abs(d[mm]) + std::abs(d[mm + 1]);
        if (std::abs(e[mm]) <= eps * dd) break;
      }
      if (mm == l) break;
      if (++iter > 60) throw Error(ErrorCode::EigenNoConvergence, "golub_welsch: QL iteration did not converge");
      // Wilkinson shift from the leading 2x2 block.
      LD g = (d[l + 1] - d[l]) / (2 * e[l]);
      LD r = std::hypot(g, LD(1));
      g = d[mm] - d[l] + e[l] / (g + std::copysign(r, g));
      LD s = 1, c = 1, pp = 0;
      int i = mm - 1;
      for (; i >= l; --i) {
        LD f = s * e[i];
        const LD b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0) {
          d[i + 1] -= pp;
          e[mm] = 0;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - pp;
        r = (d[i] - g) * s + 2 * c * b;
        pp = s * r;
        d[i + 1] = g + pp;
        g = c * r - b;
        f = z[i + 1];
        z[i + 1] = s * z[i] + c * f;
        z[i] = c * z[i] - s * f;
      }
      if (r == 0 && i >= l) continue;
      d[l] -= pp;
      e[l] = g;
      e[mm] = 0;
    }
  }

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return d[a] < d[b]; });
  if (p.alpha == p.beta) {
    // Zero diagonal: the spectrum is symmetric about 0 and so are the
    // weights. Enforce it so that a middle node is exactly 0.
    for (int i = 0, j = n - 1; i < j; ++i, --j) {
      const LD x = (d[order[j]] - d[order[i]]) / 2;
      const LD w = (z[order[j]] * z[order[j]] + z[order[i]] * z[order[i]]) / 2;
      d[order[i]] = -x;
      d[order[j]] = x;
      z[order[i]] = z[order[j]] = std::sqrt(w);
    }
    if (n % 2 == 1) d[order[n / 2]] = 0;
  }
  const LD mu0 = moment(p.alpha, p.beta, 0);
  QuadratureRule rule;
  rule.params = p;
  rule.scheme = NormalizationScheme::Mu0;
  for (int k : order) {
    rule.nodes.push_back(static_cast<Real>(d[k]));
    rule.weights.push_back(static_cast<Real>(mu0 * z[k] * z[k]));
    rule.log_weights.push_back(static_cast<Real>(std::log(mu0) + 2 * std::log(std::abs(z[k]))));
    NodeRecord r;
    r.x = rule.nodes.back();
    r.source = NodeSource::Seed;
    rule.records.push_back(r);
  }
  return rule;
}

std::vector<long double> monomial_moments(Real alpha, Real beta, int kmax) {
  // Integration by parts gives (k + a + b + 2) m_{k+1} = k m_{k-1} + (b - a) m_k
  // for the moments m_k = mu_k / mu_0; no cancellation for any k.
  std::vector<LD> m(static_cast<std::size_t>(std::max(kmax, 0) + 1), 0);
  const LD a = alpha, b = beta;
  m[0] = 1;
  if (kmax >= 1) m[1] = (b - a) / (a + b + 2);
  for (int k = 1; k < kmax; ++k) m[k + 1] = (k * m[k - 1] + (b - a) * m[k]) / (k + a + b + 2);
  const LD mu0 = std::exp(static_cast<LD>(log_moment0(alpha, beta)));
  for (LD& v : m) v *= mu0;
  return m;
}

Real exactness_check(const QuadratureRule& rule, const QuadParams& p, int kmax) {
  if (rule.nodes.size() != rule.weights.size()) throw Error(ErrorCode::LengthMismatch, "exactness_check: sizes differ");
  if (kmax < 0) return 0;
  const std::vector<LD> mu = monomial_moments(p.alpha, p.beta, kmax);
  std::vector<LD> pw(rule.nodes.size());
  for (std::size_t i = 0; i < pw.size(); ++i) pw[i] = rule.weights[i];
  LD worst = 0;
  for (int k = 0; k <= kmax; ++k) {
    Neumaier s;
    LD abs_sum = 0;
    for (std::size_t i = 0; i < pw.size(); ++i) {
      s.add(pw[i]);
      abs_sum += std::abs(pw[i]);
      pw[i] *= rule.nodes[i];
    }
    if (abs_sum == 0) continue;
    worst = std::max(worst, std::abs(s.value() - mu[k]) / abs_sum);
  }
  return static_cast<Real>(worst);
}

RuleComparison compare_rules(const QuadratureRule& a, const QuadratureRule& b) {
  if (a.nodes.size() != b.nodes.size() || a.weights.size() != b.weights.size() ||
      a.nodes.size() != a.weights.size()) {
    throw Error(ErrorCode::LengthMismatch, "compare_rules: rules differ in length");
  }
  RuleComparison c;
  Real wmax = 0, dw = 0;
  for (std::size_t i = 0; i < a.nodes.size(); ++i) {
    const Real xb = b.nodes[i];
    c.eps_mr_nodes = std::max(c.eps_mr_nodes, xb == 0 ? std::abs(a.nodes[i]) : std::abs(1 - a.nodes[i] / xb));
    const Real wb = b.weights[i];
    c.eps_mr_weights = std::max(c.eps_mr_weights, wb == 0 ? std::abs(a.weights[i]) : std::abs(1 - a.weights[i] / wb));
    dw = std::max(dw, std::abs(a.weights[i] - wb));
    wmax = std::max(wmax, wb);
  }
  c.eps_rm_weights = wmax > 0 ? dw / wmax : dw;
  return c;
}

}  // namespace gaussjacobi
