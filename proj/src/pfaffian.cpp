#include "atlab/pfaffian.hpp"

#include <algorithm>
#include <bit>

namespace atlab {

int crossing_number(const NodePairing& p) {
  int xg = 0;
  for (std::size_t i = 0; i < p.pairs.size(); ++i)
    for (std::size_t j = i + 1; j < p.pairs.size(); ++j) {
      auto [a, b] = std::minmax(p.pairs[i].first, p.pairs[i].second);
      auto [c, d] = std::minmax(p.pairs[j].first, p.pairs[j].second);
      bool c_inside = a < c && c < b, d_inside = a < d && d < b;
      if (c_inside != d_inside) ++xg;
    }
  return xg;
}

TwoPointTable TwoPointTable::from_function(
    const NodeSequence& seq, const std::function<Rational(const Node&, const Node&)>& f) {
  TwoPointTable tab;
  tab.n = seq.size();
  tab.t.assign(tab.n * tab.n, Rational(1));
  for (int i = 0; i < tab.n; ++i)
    for (int j = i + 1; j < tab.n; ++j) {
      const Node &a = seq.nodes[i], &b = seq.nodes[j];
      // copies of one doubled insertion project to the same vertex: entry 1
      Rational v = (a.vertex == b.vertex) ? Rational(1) : f(a, b);
      tab.t[i * tab.n + j] = v;
      tab.t[j * tab.n + i] = v;
    }
  return tab;
}

AntisymMatrix build_antisym(const TwoPointTable& t) {
  AntisymMatrix k;
  k.n = t.n;
  k.a.assign(k.n * k.n, Rational(0));
  for (int i = 0; i < k.n; ++i)
    for (int j = i + 1; j < k.n; ++j) {
      k.a[i * k.n + j] = t(i, j);
      k.a[j * k.n + i] = -t(i, j);
    }
  return k;
}

AntisymMatrix restrict_antisym(const AntisymMatrix& k, const std::vector<int>& idx) {
  AntisymMatrix out;
  out.n = static_cast<int>(idx.size());
  out.a.assign(out.n * out.n, Rational(0));
  for (int i = 0; i < out.n; ++i)
    for (int j = 0; j < out.n; ++j) out.a[i * out.n + j] = k(idx[i], idx[j]);
  return out;
}

RectMatrix build_source_sink(const NodeSequence& seq, const Coloring& c,
                             const TwoPointTable& t) {
  require(is_balanced(c), Errc::NotSquare, "source/sink matrix needs a balanced coloring");
  std::vector<char> is_source(seq.size(), 0);
  for (int i : c.sources) is_source[i] = 1;
  RectMatrix m;
  m.rows = static_cast<int>(c.sources.size());
  m.cols = static_cast<int>(c.sinks.size());
  m.a.assign(m.rows * m.cols, Rational(0));
  for (int r = 0; r < m.rows; ++r)
    for (int cc = 0; cc < m.cols; ++cc) {
      int u = c.sources[r], v = c.sinks[cc];
      auto [lo, hi] = std::minmax(u, v);
      int s = 0;
      for (int k = lo + 1; k < hi; ++k)
        if (is_source[k]) ++s;
      Rational val = t(u, v);
      m.at(r, cc) = (s % 2) ? -val : val;
    }
  return m;
}

void for_each_pairing_of(const std::vector<int>& elems,
                         const std::function<void(const NodePairing&)>& fn) {
  if (elems.size() % 2 != 0) return;
  NodePairing cur;
  std::vector<int> rest = elems;
  std::sort(rest.begin(), rest.end());
  std::function<void()> rec = [&]() {
    if (rest.empty()) {
      fn(cur);
      return;
    }
    int a = rest.front();
    for (std::size_t i = 1; i < rest.size(); ++i) {
      int b = rest[i];
      std::vector<int> next;
      for (std::size_t k = 1; k < rest.size(); ++k)
        if (k != i) next.push_back(rest[k]);
      cur.pairs.push_back({a, b});
      std::swap(rest, next);
      rec();
      std::swap(rest, next);
      cur.pairs.pop_back();
    }
  };
  rec();
}

void for_each_pairing(int n, const std::function<void(const NodePairing&)>& fn) {
  std::vector<int> elems(n);
  for (int i = 0; i < n; ++i) elems[i] = i;
  for_each_pairing_of(elems, fn);
}

void for_each_bipartite_pairing(const std::vector<int>& rows, const std::vector<int>& cols,
                                const std::function<void(const NodePairing&)>& fn) {
  if (rows.size() != cols.size()) return;
  int n = static_cast<int>(rows.size());
  NodePairing cur;
  std::uint32_t used = 0;
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      fn(cur);
      return;
    }
    for (int j = 0; j < n; ++j) {
      if (used >> j & 1u) continue;
      used |= 1u << j;
      cur.pairs.push_back({rows[i], cols[j]});
      rec(i + 1);
      cur.pairs.pop_back();
      used &= ~(1u << j);
    }
  };
  rec(0);
}

Rational pfaffian_combinatorial(const AntisymMatrix& k) {
  require(k.n % 2 == 0, Errc::OddDimension, "pfaffian needs even dimension");
  if (k.n == 0) return 1;
  Rational sum = 0;
  for_each_pairing(k.n, [&](const NodePairing& p) {
    Rational term = (crossing_number(p) % 2) ? -1 : 1;
    for (auto [a, b] : p.pairs) term *= k(std::min(a, b), std::max(a, b));
    sum += term;
  });
  return sum;
}

namespace {

// Fraction-free pfaffian on an integer antisymmetric matrix. Entries stay
// pfaffian minors of the input, so every division is exact.
BigInt pfaffian_int(std::vector<BigInt> p, int n) {
  if (n == 0) return 1;
  int sign = 1;
  auto at = [&](int i, int j) -> BigInt& { return p[i * n + j]; };
  BigInt q_prev = 1, q = 0;
  for (int t = 0; 2 * t + 2 <= n; ++t) {
    int r = 2 * t;
    int piv = -1;
    for (int j = r + 1; j < n; ++j)
      if (!at(r, j).is_zero()) {
        piv = j;
        break;
      }
    if (piv < 0) return 0;
    if (piv != r + 1) {
      for (int i = 0; i < n; ++i) std::swap(at(i, piv), at(i, r + 1));
      for (int j = 0; j < n; ++j) std::swap(at(piv, j), at(r + 1, j));
      sign = -sign;
    }
    q = at(r, r + 1);
    if (2 * t + 2 == n) break;
    for (int i = r + 2; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        BigInt v = q * at(i, j) - at(r, i) * at(r + 1, j) + at(r, j) * at(r + 1, i);
        BigInt quo, rem;
        boost::multiprecision::divide_qr(v, q_prev, quo, rem);
        require(rem.is_zero(), Errc::BadInput, "pfaffian elimination lost exactness");
        at(i, j) = quo;
        at(j, i) = -quo;
      }
    q_prev = q;
  }
  return sign < 0 ? BigInt(-q) : q;
}

}  // namespace

Rational pfaffian_elimination(const AntisymMatrix& k) {
  require(k.n % 2 == 0, Errc::OddDimension, "pfaffian needs even dimension");
  if (k.n == 0) return 1;
  // clear denominators symmetrically: K' = D K D with D = diag(d_i)
  std::vector<BigInt> d(k.n, BigInt(1));
  for (int i = 0; i < k.n; ++i)
    for (int j = 0; j < k.n; ++j) d[i] = lcm_big(d[i], denominator(k(i, j)));
  std::vector<BigInt> p(k.n * k.n);
  for (int i = 0; i < k.n; ++i)
    for (int j = 0; j < k.n; ++j) {
      Rational v = k(i, j) * Rational(d[i]) * Rational(d[j]);
      p[i * k.n + j] = numerator(v);
    }
  BigInt pf = pfaffian_int(std::move(p), k.n);
  BigInt scale = 1;
  for (const BigInt& di : d) scale *= di;
  return Rational(pf, scale);
}

Rational pfaffian(const AntisymMatrix& k) {
  require(k.n % 2 == 0, Errc::OddDimension, "pfaffian needs even dimension");
  if (k.n <= 8) return pfaffian_combinatorial(k);
  return pfaffian_elimination(k);
}

Rational determinant(const RectMatrix& m) {
  require(m.rows == m.cols, Errc::NotSquare, "determinant needs a square matrix");
  int n = m.rows;
  if (n == 0) return 1;
  // clear row denominators, then Bareiss with exact divisions
  std::vector<BigInt> d(n, BigInt(1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) d[i] = lcm_big(d[i], denominator(m.at(i, j)));
  std::vector<BigInt> a(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i * n + j] = numerator(m.at(i, j) * Rational(d[i]));
  int sign = 1;
  BigInt prev = 1;
  for (int t = 0; t < n - 1; ++t) {
    int piv = -1;
    for (int i = t; i < n; ++i)
      if (!a[i * n + t].is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) return 0;
    if (piv != t) {
      for (int j = 0; j < n; ++j) std::swap(a[piv * n + j], a[t * n + j]);
      sign = -sign;
    }
    for (int i = t + 1; i < n; ++i)
      for (int j = t + 1; j < n; ++j) {
        BigInt v = a[t * n + t] * a[i * n + j] - a[i * n + t] * a[t * n + j];
        BigInt quo, rem;
        boost::multiprecision::divide_qr(v, prev, quo, rem);
        require(rem.is_zero(), Errc::BadInput, "bareiss elimination lost exactness");
        a[i * n + j] = quo;
      }
    prev = a[t * n + t];
  }
  BigInt det = a[(n - 1) * n + (n - 1)];
  if (sign < 0) det = -det;
  BigInt scale = 1;
  for (const BigInt& di : d) scale *= di;
  return Rational(det, scale);
}

Rational determinant_combinatorial(const RectMatrix& m, const std::vector<int>& row_nodes,
                                   const std::vector<int>& col_nodes, const TwoPointTable& t) {
  require(m.rows == m.cols, Errc::NotSquare, "determinant needs a square matrix");
  Rational sum = 0;
  for_each_bipartite_pairing(row_nodes, col_nodes, [&](const NodePairing& p) {
    Rational term = (crossing_number(p) % 2) ? -1 : 1;
    for (auto [u, v] : p.pairs) term *= t(u, v);
    sum += term;
  });
  return sum;
}

std::pair<int, int> concat_sign_relation(const std::vector<int>& s_nodes, const NodePairing& p,
                                         const NodePairing& pc, int n_total) {
  NodePairing all;
  all.pairs = p.pairs;
  all.pairs.insert(all.pairs.end(), pc.pairs.begin(), pc.pairs.end());
  int lhs = (crossing_number(all) % 2) ? -1 : 1;
  int s_even = 0;
  for (int i : s_nodes)
    if (i % 2 == 1) ++s_even;  // 1-based even positions
  (void)n_total;
  int expo = crossing_number(p) + crossing_number(pc) -
             static_cast<int>(s_nodes.size()) / 2 - s_even;
  int rhs = (expo % 2 + 2) % 2 ? -1 : 1;
  return {lhs, rhs};
}

PfDetReport pf_det_identity(const TwoPointTable& t, const NodeSequence& seq,
                            const Coloring& c) {
  int n = seq.size();
  require(n % 2 == 0, Errc::OddDimension, "node count must be even");
  AntisymMatrix k = build_antisym(t);
  Rational lhs = 0;
  for (std::uint32_t sel = 0; sel < (1u << n); ++sel) {
    if (std::popcount(sel) % 2 != 0) continue;
    std::vector<int> s, comp;
    int s_cap_b = 0;
    for (int i = 0; i < n; ++i) {
      if (sel >> i & 1u) {
        s.push_back(i);
        if (c.blue[i]) ++s_cap_b;
      } else {
        comp.push_back(i);
      }
    }
    Rational term = pfaffian(restrict_antisym(k, s)) * pfaffian(restrict_antisym(k, comp));
    lhs += (s_cap_b % 2) ? -term : term;
  }
  PfDetReport rep;
  rep.lhs = lhs;
  rep.balanced = is_balanced(c);
  if (rep.balanced) {
    RectMatrix m = build_source_sink(seq, c, t);
    rep.rhs = determinant(m) * Rational(BigInt(1) << (n / 2));
  } else {
    rep.rhs = 0;
  }
  rep.holds = rep.lhs == rep.rhs;
  return rep;
}

}  // namespace atlab
