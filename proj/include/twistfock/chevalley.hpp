#pragma once

// The ambient simple Lie algebra built abstractly on a Chevalley basis:
// h'_1..h'_N plus one root vector per root, with structure constants from a
// bimultiplicative sign cocycle on the root lattice (eps(a,a) = -1 on roots,
// eps(a,b)/eps(b,a) = (-1)^{(a|b)}).  The invariant form is normalized by
// (h'_i | h'_i) = 2, i.e. (alpha|alpha) = 2 on all roots.
//
// The diagram automorphism acts on the Cartan by the index map and extends
// to root vectors by recursion over root height; the recursion is pinned by
// the parent decomposition gamma = alpha_i + mu used to build each root.

#include <map>
#include <stdexcept>
#include <vector>

#include "twistfock/algebra_kind.hpp"
#include "twistfock/scalar.hpp"

namespace twistfock {

class SimpleLieAlgebra {
public:
  // sparse element over the basis: indices 0..N-1 are h'_{i+1}, then roots
  struct Element {
    std::map<int, Scalar> comp;

    void add(int idx, const Scalar& c) {
      if (c.is_zero()) return;
      auto it = comp.find(idx);
      if (it == comp.end()) {
        comp.emplace(idx, c);
      } else {
        it->second += c;
        if (it->second.is_zero()) comp.erase(it);
      }
    }
    Element& operator+=(const Element& o) {
      for (const auto& [i, c] : o.comp) add(i, c);
      return *this;
    }
    Element operator+(const Element& o) const {
      Element r(*this);
      r += o;
      return r;
    }
    Element operator-() const {
      Element r;
      for (const auto& [i, c] : comp) r.comp.emplace(i, -c);
      return r;
    }
    Element operator-(const Element& o) const { return *this + (-o); }
    Element scaled(const Scalar& s) const {
      Element r;
      if (s.is_zero()) return r;
      for (const auto& [i, c] : comp) r.comp.emplace(i, c * s);
      return r;
    }
    bool is_zero() const { return comp.empty(); }
    friend bool operator==(const Element& a, const Element& b) { return a.comp == b.comp; }
  };

  explicit SimpleLieAlgebra(const AlgebraKind& kind) : kind_(kind) {
    build_roots();
    build_cocycle_data();
    build_sigma();
  }

  const AlgebraKind& kind() const { return kind_; }
  int rank() const { return N_; }
  int dim() const { return N_ + static_cast<int>(roots_.size()); }
  int root_count() const { return static_cast<int>(roots_.size()); }

  Element basis_element(int idx) const {
    Element e;
    e.add(idx, Scalar::one());
    return e;
  }
  Element h_simple(int i) const { return basis_element(i - 1); }          // h'_i, 1-based
  Element e_root(int t) const { return basis_element(N_ + t); }
  Element e_simple(int i) const { return e_root(index_of_simple_[i - 1]); }
  Element f_simple(int i) const { return e_root(neg_of_[index_of_simple_[i - 1]]); }

  // the sl_2 triple over theta^0 (per-family sum of consecutive simple roots)
  std::vector<int> theta0_simple_coords() const {
    const int n = kind_.n;
    std::vector<int> c(N_, 0);
    switch (kind_.family) {
      case Family::a_odd:
        for (int i = 1; i <= 2 * n - 2; ++i) c[i - 1] = 1;
        break;
      case Family::d:
        for (int i = 1; i <= n; ++i) c[i - 1] = 1;
        break;
      case Family::a_even:
        for (int i = 1; i <= 2 * n; ++i) c[i - 1] = 1;
        break;
      case Family::d4_triality:
        c[0] = c[1] = c[2] = 1;
        break;
    }
    return c;
  }
  int theta0_index() const {
    auto c = theta0_simple_coords();
    std::vector<int> eps(edim_, 0);
    for (int i = 0; i < N_; ++i)
      for (int d = 0; d < edim_; ++d) eps[d] += c[i] * simple_eps_[i][d];
    auto it = root_index_.find(eps);
    if (it == root_index_.end()) throw std::logic_error("theta0 is not a root");
    return it->second;
  }
  Element e_theta0() const { return e_root(theta0_index()); }
  Element f_theta0() const { return e_root(neg_of_[theta0_index()]); }
  Element h_theta0() const { return coroot_element(theta0_index()); }

  // nu^{-1}(gamma) expressed over the h'_i
  Element coroot_element(int t) const {
    Element h;
    for (int i = 0; i < N_; ++i)
      h.add(i, Scalar::integer(simple_of_root_[t][i]));
    return h;
  }

  Element bracket(const Element& x, const Element& y) const {
    Element out;
    for (const auto& [i, ci] : x.comp)
      for (const auto& [j, cj] : y.comp) bracket_basis(i, j, ci * cj, out);
    return out;
  }

  Scalar form(const Element& x, const Element& y) const {
    Scalar acc;
    for (const auto& [i, ci] : x.comp)
      for (const auto& [j, cj] : y.comp) {
        if (i < N_ && j < N_) {
          int g = eps_dot(simple_eps_[i], simple_eps_[j]);
          if (g != 0) acc += ci * cj * Scalar::integer(g);
        } else if (i >= N_ && j >= N_) {
          if (neg_of_[i - N_] == j - N_) acc += ci * cj;
        }
      }
    return acc;
  }

  // diagram automorphism
  Element sigma(const Element& x) const {
    Element out;
    for (const auto& [i, c] : x.comp) {
      if (i < N_) {
        out.add(sigma_index_[i + 1] - 1, c);
      } else {
        const int t = i - N_;
        out.add(N_ + sigma_root_[t], sigma_sign_[t] > 0 ? c : -c);
      }
    }
    return out;
  }
  Element sigma_pow(Element x, int p) const {
    for (int q = 0; q < p; ++q) x = sigma(x);
    return x;
  }
  int sigma_on_index(int i) const { return sigma_index_[i]; }  // 1-based

  // projection onto the omega^m eigenspace of sigma
  Element twist_component(const Element& x, int m) const {
    const int r = kind_.r();
    Element acc;
    Element cur = x;
    Scalar w = Scalar::omega();
    if (r == 2) w = Scalar::integer(-1);
    for (int p = 0; p < r; ++p) {
      // omega^{-m p} sigma^p(x)
      Scalar coef = Scalar::one();
      for (int q = 0; q < ((m * p) % r + r) % r; ++q) coef *= w;
      acc += cur.scaled(coef.inverse());
      cur = sigma(cur);
    }
    return acc.scaled(Scalar::rational(1, r));
  }

  // Chevalley generators of the fixed subalgebra g_0
  struct Triple { Element e, f, h; };
  std::vector<Triple> fixed_generators() const {
    std::vector<Triple> out;
    const int r = kind_.r();
    for (int i = 1; i <= kind_.n; ++i) {
      if (kind_.family == Family::a_even && i == kind_.n) {
        Scalar s2 = Scalar::sqrt2();
        Triple t;
        t.e = (e_simple(i) + e_simple(i + 1)).scaled(s2);
        t.f = (f_simple(i) + f_simple(i + 1)).scaled(s2);
        t.h = (h_simple(i) + h_simple(i + 1)).scaled(Scalar::integer(2));
        out.push_back(std::move(t));
        continue;
      }
      if (sigma_index_[i] == i) {
        out.push_back(Triple{e_simple(i), f_simple(i), h_simple(i)});
        continue;
      }
      Triple t;
      int j = i;
      for (int p = 0; p < r; ++p) {
        t.e += e_simple(j);
        t.f += f_simple(j);
        t.h += h_simple(j);
        j = sigma_index_[j];
      }
      out.push_back(std::move(t));
    }
    return out;
  }

  // g_0 Cartan matrix, for cross-checks against the fixed generators
  int g0_cartan(int i, int j) const {
    const int n = kind_.n;
    if (i == j) return 2;
    switch (kind_.family) {
      case Family::d4_triality:
        if (i == 1 && j == 2) return -3;
        if (i == 2 && j == 1) return -1;
        return 0;
      case Family::a_odd:  // C_n
        if (i == n - 1 && j == n) return -2;
        if (i == n && j == n - 1) return -1;
        break;
      case Family::d:
      case Family::a_even:  // B_n
        if (i == n - 1 && j == n) return -1;
        if (i == n && j == n - 1) return -2;
        break;
    }
    if (i + 1 == j || j + 1 == i) return -1;
    return 0;
  }

  std::string element_str(const Element& x) const {
    if (x.is_zero()) return "0";
    std::string s;
    for (const auto& [i, c] : x.comp) {
      if (!s.empty()) s += " + ";
      if (i < N_) {
        s += c.str() + "*h" + std::to_string(i + 1);
      } else {
        s += c.str() + "*E[";
        const auto& rc = roots_[i - N_];
        for (size_t d = 0; d < rc.size(); ++d) {
          if (d) s += ",";
          s += std::to_string(rc[d]);
        }
        s += "]";
      }
    }
    return s;
  }

private:
  static int eps_dot(const std::vector<int>& a, const std::vector<int>& b) {
    int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
  }

  void build_roots() {
    N_ = kind_.ambient_rank();
    const bool typeA = kind_.family == Family::a_odd || kind_.family == Family::a_even;
    edim_ = typeA ? N_ + 1 : N_;
    // simple roots in eps coordinates
    simple_eps_.assign(N_, std::vector<int>(edim_, 0));
    for (int i = 0; i < N_ - 1; ++i) {
      simple_eps_[i][i] = 1;
      simple_eps_[i][i + 1] = -1;
    }
    if (typeA) {
      simple_eps_[N_ - 1][N_ - 1] = 1;
      simple_eps_[N_ - 1][N_] = -1;
    } else {
      simple_eps_[N_ - 1][N_ - 2] = 1;
      simple_eps_[N_ - 1][N_ - 1] = 1;
    }
    // all roots
    if (typeA) {
      for (int a = 0; a < edim_; ++a)
        for (int b = 0; b < edim_; ++b) {
          if (a == b) continue;
          std::vector<int> v(edim_, 0);
          v[a] = 1;
          v[b] = -1;
          roots_.push_back(std::move(v));
        }
    } else {
      for (int a = 0; a < edim_; ++a)
        for (int b = a + 1; b < edim_; ++b)
          for (int sa : {+1, -1})
            for (int sb : {+1, -1}) {
              std::vector<int> v(edim_, 0);
              v[a] = sa;
              v[b] = sb;
              roots_.push_back(std::move(v));
            }
    }
    for (int t = 0; t < static_cast<int>(roots_.size()); ++t) root_index_[roots_[t]] = t;
    neg_of_.resize(roots_.size());
    for (int t = 0; t < static_cast<int>(roots_.size()); ++t) {
      auto neg = roots_[t];
      for (auto& v : neg) v = -v;
      neg_of_[t] = root_index_.at(neg);
    }
    index_of_simple_.resize(N_);
    for (int i = 0; i < N_; ++i) index_of_simple_[i] = root_index_.at(simple_eps_[i]);

    // simple-root coordinates and a parent decomposition, by height recursion
    simple_of_root_.assign(roots_.size(), {});
    parent_.assign(roots_.size(), {-1, -1});
    std::vector<int> frontier;
    for (int i = 0; i < N_; ++i) {
      std::vector<int> c(N_, 0);
      c[i] = 1;
      simple_of_root_[index_of_simple_[i]] = c;
      frontier.push_back(index_of_simple_[i]);
    }
    while (!frontier.empty()) {
      std::vector<int> next;
      for (int t : frontier) {
        for (int i = 0; i < N_; ++i) {
          auto sum = roots_[t];
          for (int d = 0; d < edim_; ++d) sum[d] += simple_eps_[i][d];
          auto it = root_index_.find(sum);
          if (it == root_index_.end()) continue;
          int u = it->second;
          if (!simple_of_root_[u].empty()) continue;
          auto c = simple_of_root_[t];
          c[i] += 1;
          simple_of_root_[u] = std::move(c);
          parent_[u] = {i, t};  // gamma = alpha_i + mu
          next.push_back(u);
        }
      }
      frontier = std::move(next);
    }
    for (int t = 0; t < static_cast<int>(roots_.size()); ++t) {
      if (!simple_of_root_[t].empty()) continue;
      // negative root: mirror the positive coordinates
      auto c = simple_of_root_[neg_of_[t]];
      for (auto& v : c) v = -v;
      simple_of_root_[t] = std::move(c);
    }
  }

  void build_cocycle_data() {
    // adjacency parity of the diagram, from the eps inner products
    adj_.assign(N_, std::vector<int>(N_, 0));
    for (int i = 0; i < N_; ++i)
      for (int j = 0; j < N_; ++j)
        adj_[i][j] = eps_dot(simple_eps_[i], simple_eps_[j]) & 1;
  }

  // eps(gamma, mu) = (-1)^{sum_i a_i b_i + sum_{i>j} a_i b_j (alpha_i|alpha_j)}
  int cocycle(int t, int u) const {
    const auto& a = simple_of_root_[t];
    const auto& b = simple_of_root_[u];
    int e = 0;
    for (int i = 0; i < N_; ++i) {
      if (a[i] == 0) continue;
      e += a[i] * b[i];
      for (int j = 0; j < i; ++j)
        if (adj_[i][j] && b[j] != 0) e += a[i] * b[j];
    }
    return (e & 1) ? -1 : +1;
  }

  int root_sign(int t) const {
    for (int v : simple_of_root_[t]) {
      if (v > 0) return +1;
      if (v < 0) return -1;
    }
    return 0;
  }

  // structure constant in [E_t, E_u] = N E_{t+u} (sum a root)
  int pair_constant(int t, int u, int sum) const {
    return root_sign(t) * root_sign(u) * root_sign(sum) * cocycle(t, u);
  }

  void bracket_basis(int i, int j, const Scalar& coeff, Element& out) const {
    if (coeff.is_zero()) return;
    if (i < N_ && j < N_) return;
    if (i < N_) {  // [h'_i, E_u]
      int g = eps_dot(simple_eps_[i], roots_[j - N_]);
      if (g != 0) out.add(j, coeff * Scalar::integer(g));
      return;
    }
    if (j < N_) {
      int g = eps_dot(simple_eps_[j], roots_[i - N_]);
      if (g != 0) out.add(i, -(coeff * Scalar::integer(g)));
      return;
    }
    const int t = i - N_, u = j - N_;
    if (neg_of_[t] == u) {  // [E_gamma, E_{-gamma}] = nu^{-1}(gamma)
      for (int d = 0; d < N_; ++d) {
        int c = simple_of_root_[t][d];
        if (c != 0) out.add(d, coeff * Scalar::integer(c));
      }
      return;
    }
    auto sum = roots_[t];
    for (int d = 0; d < edim_; ++d) sum[d] += roots_[u][d];
    auto it = root_index_.find(sum);
    if (it == root_index_.end()) return;
    out.add(N_ + it->second, coeff * Scalar::integer(pair_constant(t, u, it->second)));
  }

  void build_sigma() {
    const int N = N_;
    sigma_index_.assign(N + 1, 0);
    switch (kind_.family) {
      case Family::a_odd:
      case Family::a_even:
        for (int i = 1; i <= N; ++i) sigma_index_[i] = N - i + 1;
        break;
      case Family::d:
        for (int i = 1; i <= N - 2; ++i) sigma_index_[i] = i;
        sigma_index_[N - 1] = N;
        sigma_index_[N] = N - 1;
        break;
      case Family::d4_triality:
        sigma_index_[1] = 3;
        sigma_index_[2] = 2;
        sigma_index_[3] = 4;
        sigma_index_[4] = 1;
        break;
    }
    // image roots: permute the simple-root coordinates
    sigma_root_.resize(roots_.size());
    for (size_t t = 0; t < roots_.size(); ++t) {
      std::vector<int> eps(edim_, 0);
      for (int i = 0; i < N; ++i) {
        int c = simple_of_root_[t][i];
        if (c == 0) continue;
        const auto& se = simple_eps_[sigma_index_[i + 1] - 1];
        for (int d = 0; d < edim_; ++d) eps[d] += c * se[d];
      }
      sigma_root_[t] = root_index_.at(eps);
    }
    // signs by height recursion over the parent decomposition
    sigma_sign_.assign(roots_.size(), 0);
    for (int i = 0; i < N; ++i) {
      sigma_sign_[index_of_simple_[i]] = +1;
      sigma_sign_[neg_of_[index_of_simple_[i]]] = +1;
    }
    bool progress = true;
    while (progress) {
      progress = false;
      for (size_t t = 0; t < roots_.size(); ++t) {
        if (sigma_sign_[t] != 0 || parent_[t].first < 0) continue;
        const int i = parent_[t].first;
        const int mu = parent_[t].second;
        if (sigma_sign_[mu] == 0) continue;
        // positive root t: gamma = alpha_i + mu
        const int si = index_of_simple_[i];
        const int n_here = pair_constant(si, mu, static_cast<int>(t));
        const int s_si = index_of_simple_[sigma_index_[i + 1] - 1];
        const int s_mu = sigma_root_[mu];
        const int n_img = pair_constant(s_si, s_mu, sigma_root_[t]);
        sigma_sign_[t] = sigma_sign_[mu] * n_img / n_here;
        // negative root: recurse through -gamma = -alpha_i + (-mu)
        const int nt = neg_of_[t];
        const int nsi = neg_of_[si];
        const int nmu = neg_of_[mu];
        const int m_here = pair_constant(nsi, nmu, nt);
        const int m_img = pair_constant(neg_of_[s_si], neg_of_[s_mu], sigma_root_[nt]);
        sigma_sign_[nt] = sigma_sign_[nmu] * m_img / m_here;
        progress = true;
      }
    }
  }

  AlgebraKind kind_;
  int N_ = 0;     // ambient rank
  int edim_ = 0;  // epsilon coordinates
  std::vector<std::vector<int>> simple_eps_;
  std::vector<std::vector<int>> roots_;
  std::map<std::vector<int>, int> root_index_;
  std::vector<int> neg_of_;
  std::vector<int> index_of_simple_;
  std::vector<std::vector<int>> simple_of_root_;
  std::vector<std::pair<int, int>> parent_;  // positive roots: (i, mu)
  std::vector<std::vector<int>> adj_;
  std::vector<int> sigma_index_;  // 1-based index map
  std::vector<int> sigma_root_;
  std::vector<int> sigma_sign_;
};

}  // namespace twistfock
