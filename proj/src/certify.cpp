#include "whad/certify.hpp"

#include "bitset.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace whad {

using detail::Bitset;
using detail::SearchBudget;

void check_certificate(const WGraph& x, const WhdCertificate& cert) {
  const ExactMatrix& p = cert.p.matrix();
  if (p.rows() != x.order() || static_cast<Index>(cert.eigenvalues.size()) != p.cols())
    throw Error(ErrorCode::CertificateInvalid, "certificate size does not match the graph");
  const ExactMatrix lp = x.laplacian() * p;
  for (Index j = 0; j < p.cols(); ++j) {
    if (lp.col(j) != (cert.eigenvalues[static_cast<std::size_t>(j)] * p.col(j)).eval())
      throw Error(ErrorCode::CertificateInvalid, "column " + std::to_string(j + 1) + " is not an eigenvector for " +
                                                     cert.eigenvalues[static_cast<std::size_t>(j)].str());
  }
}

WhdCertificate certificate_from_matrix(const WGraph& x, const ExactMatrix& m) {
  WeakHadamard p = WeakHadamard::validate(m);
  if (p.order() != x.order()) throw Error(ErrorCode::CertificateInvalid, "matrix order differs from graph order");
  const ExactMatrix lp = x.laplacian() * p.matrix();
  std::vector<Integer> ev;
  for (Index j = 0; j < p.order(); ++j) {
    Index i = 0;
    while (i < p.order() && p.matrix()(i, j) == 0) ++i;
    if (i == p.order()) throw Error(ErrorCode::CertificateInvalid, "column " + std::to_string(j + 1) + " is zero");
    ev.push_back(lp(i, j) / p.matrix()(i, j));
  }
  WhdCertificate cert{std::move(p), std::move(ev), false};
  cert.orthogonal_columns = cert.p.has_pairwise_orthogonal_columns();
  check_certificate(x, cert);
  return cert;
}

std::optional<std::vector<Index>> path_layout(const ExactMatrix& g) {
  const Index n = g.rows();
  std::vector<std::vector<Index>> nb(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      if (i != j && g(i, j) != 0) nb[static_cast<std::size_t>(i)].push_back(j);
  for (const auto& a : nb)
    if (a.size() > 2) return std::nullopt;

  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<Index> order;
  for (Index s = 0; s < n; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    // Collect the component, then walk it from an endpoint.
    std::vector<Index> comp{s};
    seen[static_cast<std::size_t>(s)] = true;
    for (std::size_t h = 0; h < comp.size(); ++h)
      for (Index v : nb[static_cast<std::size_t>(comp[h])])
        if (!seen[static_cast<std::size_t>(v)]) {
          seen[static_cast<std::size_t>(v)] = true;
          comp.push_back(v);
        }
    Index edges = 0;
    for (Index v : comp) edges += static_cast<Index>(nb[static_cast<std::size_t>(v)].size());
    if (edges / 2 != static_cast<Index>(comp.size()) - 1) return std::nullopt;  // has a cycle
    Index start = -1;
    for (Index v : comp)
      if (nb[static_cast<std::size_t>(v)].size() <= 1 && (start < 0 || v < start)) start = v;
    if (s == 0 && nb[0].size() <= 1) start = 0;
    Index prev = -1, cur = start;
    while (cur >= 0) {
      order.push_back(cur);
      Index next = -1;
      for (Index v : nb[static_cast<std::size_t>(cur)])
        if (v != prev) next = v;
      prev = cur;
      cur = next;
    }
  }
  return order;
}

const char* to_string(CertifyStatus s) {
  switch (s) {
    case CertifyStatus::Certified: return "WHD";
    case CertifyStatus::NotWhd: return "NOT_WHD";
    case CertifyStatus::NotIntegral: return "NOT_INTEGRAL";
    case CertifyStatus::LimitReached: return "LIMIT_REACHED";
  }
  return "?";
}

namespace {

using Vector = std::vector<int>;

long long idot(const Vector& a, const Vector& b) {
  long long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/// Incremental row echelon form over Z with gcd normalisation; exact rank.
class Echelon {
 public:
  bool add(const Vector& x) {
    std::vector<long long> v(x.begin(), x.end());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const std::size_t p = pivots_[r];
      if (v[p] == 0) continue;
      const long long a = rows_[r][p], b = v[p];
      for (std::size_t i = 0; i < v.size(); ++i) v[i] = a * v[i] - b * rows_[r][i];
      long long g = 0;
      for (long long e : v) g = std::gcd(g, e);
      if (g > 1)
        for (long long& e : v) e /= g;
    }
    auto nz = std::find_if(v.begin(), v.end(), [](long long e) { return e != 0; });
    if (nz == v.end()) return false;
    pivots_.push_back(static_cast<std::size_t>(nz - v.begin()));
    rows_.push_back(std::move(v));
    return true;
  }
  void pop() {
    rows_.pop_back();
    pivots_.pop_back();
  }
  std::size_t rank() const { return rows_.size(); }

 private:
  std::vector<std::vector<long long>> rows_;
  std::vector<std::size_t> pivots_;
};

/// Selection of `need` eigenvectors from one eigenspace.
class SpaceSearch {
 public:
  SpaceSearch(const std::vector<Vector>& cands, std::size_t need, std::optional<std::size_t> forced,
              SearchBudget& budget)
      : c_(cands), need_(need), forced_(forced), budget_(budget) {
    const std::size_t m = c_.size();
    nonorth_.assign(m, std::vector<bool>(m, false));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j)
        if (idot(c_[i], c_[j]) != 0) nonorth_[i][j] = nonorth_[j][i] = true;
  }

  std::optional<std::vector<std::size_t>> orthogonal() {
    const std::size_t m = c_.size();
    std::vector<Bitset> adj(m, Bitset(m));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        if (i != j && !nonorth_[i][j]) adj[i].set(j);
    Bitset allowed(m);
    std::vector<std::size_t> chosen;
    std::size_t need = need_;
    if (forced_) {
      allowed = adj[*forced_];
      chosen.push_back(*forced_);
      --need;
    } else {
      for (std::size_t i = 0; i < m; ++i) allowed.set(i);
    }
    if (detail::extend_clique(adj, allowed, 0, need, chosen, &budget_)) return chosen;
    return std::nullopt;
  }

  std::optional<std::vector<std::size_t>> paths() {
    chosen_.clear();
    degree_.clear();
    comp_.clear();
    echelon_ = Echelon();
    if (forced_) {
      push(*forced_);
      echelon_.add(c_[*forced_]);
    }
    if (dfs(0)) return chosen_;
    return std::nullopt;
  }

 private:
  void push(std::size_t i) {
    chosen_.push_back(i);
    degree_.push_back(0);
    comp_.push_back(static_cast<int>(chosen_.size()) - 1);
  }

  bool dfs(std::size_t from) {
    if (chosen_.size() == need_) return true;
    if (c_.size() - from < need_ - chosen_.size()) return false;
    for (std::size_t i = from; i < c_.size(); ++i) {
      if (forced_ && i == *forced_) continue;
      if (!budget_.spend()) return false;
      // Neighbours among the chosen vectors: at most two, each with spare
      // degree, in distinct components (no cycle).
      std::vector<std::size_t> nbs;
      bool ok = true;
      for (std::size_t k = 0; k < chosen_.size() && ok; ++k) {
        if (!nonorth_[i][chosen_[k]]) continue;
        const int cap = (forced_ && chosen_[k] == *forced_) ? 1 : 2;
        if (degree_[k] >= cap || nbs.size() == 2) ok = false;
        for (std::size_t q : nbs)
          if (comp_[q] == comp_[k]) ok = false;
        nbs.push_back(k);
      }
      if (!ok) continue;
      if (!echelon_.add(c_[i])) continue;

      const auto saved_comp = comp_;
      push(i);
      const int self = comp_.back();
      for (std::size_t k : nbs) {
        ++degree_[k];
        ++degree_.back();
        const int old = comp_[k];
        for (int& c : comp_)
          if (c == old) c = self;
      }
      if (dfs(i + 1)) return true;
      for (std::size_t k : nbs) --degree_[k];
      chosen_.pop_back();
      degree_.pop_back();
      comp_ = saved_comp;
      echelon_.pop();
      if (budget_.exhausted) return false;
    }
    return false;
  }

  const std::vector<Vector>& c_;
  std::size_t need_;
  std::optional<std::size_t> forced_;
  SearchBudget& budget_;
  std::vector<std::vector<bool>> nonorth_;

  std::vector<std::size_t> chosen_;
  std::vector<int> degree_;
  std::vector<int> comp_;
  Echelon echelon_;
};

// Support size, then entries with -1 < 0 < 1.
bool candidate_less(const Vector& a, const Vector& b) {
  const auto sa = std::count_if(a.begin(), a.end(), [](int e) { return e != 0; });
  const auto sb = std::count_if(b.begin(), b.end(), [](int e) { return e != 0; });
  if (sa != sb) return sa < sb;
  return a < b;
}

}  // namespace

CertifyResult certify_whd(const WGraph& x, const CertifyOptions& opt) {
  const Index n = x.order();
  if (n > opt.max_vertices || n > 16)
    throw Error(ErrorCode::DimensionTooLarge,
                "certify bound is " + std::to_string(std::min<Index>(opt.max_vertices, 16)) + ", got " +
                    std::to_string(n));
  CertifyResult result;
  result.spectrum = spectrum(x);
  if (!result.spectrum.integral) {
    result.status = CertifyStatus::NotIntegral;
    return result;
  }

  // All {-1,0,1} eigenvectors with first nonzero entry +1, grouped by eigenvalue.
  const auto l = x.laplacian_int();
  std::map<long long, std::vector<Vector>> groups;
  Vector v(static_cast<std::size_t>(n), 0);
  std::vector<long long> lv(static_cast<std::size_t>(n));
  for (;;) {
    Index pos = n - 1;
    while (pos >= 0 && v[static_cast<std::size_t>(pos)] == -1) v[static_cast<std::size_t>(pos--)] = 0;
    if (pos < 0) break;
    int& d = v[static_cast<std::size_t>(pos)];
    d = d == 0 ? 1 : -1;
    auto first = std::find_if(v.begin(), v.end(), [](int e) { return e != 0; });
    if (*first != 1) continue;
    if (opt.zero_free && std::find(v.begin(), v.end(), 0) != v.end()) continue;
    const std::size_t f = static_cast<std::size_t>(first - v.begin());
    for (Index i = 0; i < n; ++i) {
      long long s = 0;
      for (Index j = 0; j < n; ++j) s += l(i, j) * v[static_cast<std::size_t>(j)];
      lv[static_cast<std::size_t>(i)] = s;
    }
    const long long lambda = lv[f];
    bool eigen = true;
    for (Index i = 0; i < n && eigen; ++i) eigen = lv[static_cast<std::size_t>(i)] == lambda * v[static_cast<std::size_t>(i)];
    if (eigen) groups[lambda].push_back(v);
  }
  for (auto& [lambda, g] : groups) std::sort(g.begin(), g.end(), candidate_less);

  SearchBudget budget;
  budget.limit = opt.node_limit;
  const Vector ones(static_cast<std::size_t>(n), 1);
  std::vector<Vector> columns;
  std::vector<Integer> eigenvalues;
  bool failed = false;

  for (const Eigenspace& space : result.spectrum.spaces) {
    const long long lambda = space.value.convert_to<long long>();
    const std::vector<Vector>& cands = groups[lambda];
    const std::size_t need = static_cast<std::size_t>(space.multiplicity);
    std::optional<std::size_t> forced;
    if (opt.normalized && lambda == 0) {
      auto it = std::find(cands.begin(), cands.end(), ones);
      if (it != cands.end()) forced = static_cast<std::size_t>(it - cands.begin());
    }
    auto obstruct = [&](const std::string& reason) {
      result.obstructions.push_back({space.value, space.multiplicity, static_cast<Index>(cands.size()), space.basis, reason});
      failed = true;
    };
    if (cands.empty()) {
      obstruct("no {-1,0,1} eigenvector");
      continue;
    }
    Echelon span;
    for (const auto& c : cands) span.add(c);
    if (span.rank() < need) {
      obstruct("{-1,0,1} eigenvectors span dimension " + std::to_string(span.rank()) + " of " + std::to_string(need));
      continue;
    }
    if (opt.normalized && lambda == 0 && !forced) {
      obstruct("all-ones vector excluded");
      continue;
    }
    SpaceSearch search(cands, need, forced, budget);
    auto chosen = search.orthogonal();
    if (!chosen && !opt.require_orthogonal && !budget.exhausted) chosen = search.paths();
    if (!chosen) {
      if (budget.exhausted) break;
      obstruct(opt.require_orthogonal ? "no mutually orthogonal basis" : "no basis whose overlaps form paths");
      continue;
    }
    // The forced all-ones vector leads its eigenspace.
    if (forced) {
      auto it = std::find(chosen->begin(), chosen->end(), *forced);
      std::rotate(chosen->begin(), it, it + 1);
    }
    for (std::size_t i : *chosen) {
      columns.push_back(cands[i]);
      eigenvalues.push_back(space.value);
    }
  }
  result.nodes = budget.nodes;
  if (failed) {
    result.status = CertifyStatus::NotWhd;
    return result;
  }
  if (budget.exhausted) {
    result.status = CertifyStatus::LimitReached;
    return result;
  }

  ExactMatrix p(n, n);
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < n; ++i) p(i, j) = columns[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
  const auto order = path_layout(gram(p));
  if (!order) throw Error(ErrorCode::InternalConsistency, "selected columns do not form paths");
  ExactMatrix laid(n, n);
  std::vector<Integer> laid_ev;
  for (Index j = 0; j < n; ++j) {
    laid.col(j) = p.col((*order)[static_cast<std::size_t>(j)]);
    laid_ev.push_back(eigenvalues[static_cast<std::size_t>((*order)[static_cast<std::size_t>(j)])]);
  }
  WhdCertificate cert{WeakHadamard::validate(std::move(laid)), std::move(laid_ev), false};
  cert.orthogonal_columns = cert.p.has_pairwise_orthogonal_columns();
  check_certificate(x, cert);
  result.certificate = std::move(cert);
  result.status = CertifyStatus::Certified;
  return result;
}

// ---------------------------------------------------------------------------
// Eigenvector structure
// ---------------------------------------------------------------------------

EigvecStructureReport verify_eigvec_structure(const WGraph& x, const WhdCertificate& cert) {
  check_certificate(x, cert);
  EigvecStructureReport report;
  const ExactMatrix& p = cert.p.matrix();
  const Index n = p.rows();
  for (Index j = 0; j < n; ++j) {
    ColumnStructure cs;
    cs.column = j;
    cs.eigenvalue = cert.eigenvalues[static_cast<std::size_t>(j)];
    std::vector<Index> u_set, w_set;
    std::vector<bool> inside(static_cast<std::size_t>(n), false);
    for (Index i = 0; i < n; ++i) {
      if (p(i, j) == 1) u_set.push_back(i);
      if (p(i, j) == -1) w_set.push_back(i);
      if (p(i, j) != 0) inside[static_cast<std::size_t>(i)] = true;
    }
    cs.k = static_cast<Index>(u_set.size());
    cs.zero_free = u_set.size() + w_set.size() == static_cast<std::size_t>(n);
    cs.even_eigenvalue = cs.eigenvalue % 2 == 0;
    if (u_set.size() != w_set.size() || u_set.empty() || 2 * cs.k > n) {
      cs.skipped = true;
      cs.note = cs.eigenvalue == 0 ? "eigenvalue 0" : "column not orthogonal to the all-ones vector";
      report.columns.push_back(std::move(cs));
      continue;
    }
    auto outside = [&](Index u) {
      WGraph::Weight s = 0;
      for (Index w = 0; w < n; ++w)
        if (!inside[static_cast<std::size_t>(w)]) s += x.weight(u, w);
      return s;
    };
    if (cs.k == 1) {
      const Index u = u_set[0], v = w_set[0];
      cs.twin_form = cs.eigenvalue == Integer(x.degree(u) + x.weight(u, v));
      cs.lambda_formula = cs.twin_form;
    } else {
      cs.lambda_formula = true;
      for (Index u : u_set) {
        WGraph::Weight across = 0;
        for (Index w : w_set) across += x.weight(u, w);
        if (cs.eigenvalue != Integer(2 * across + outside(u))) cs.lambda_formula = false;
      }
    }
    const WGraph::Weight ref = outside(u_set[0]);
    cs.outside_balance = true;
    for (Index u : u_set) cs.outside_balance = cs.outside_balance && outside(u) == ref;
    for (Index w : w_set) cs.outside_balance = cs.outside_balance && outside(w) == ref;
    cs.parity_consistent = cs.even_eigenvalue == (ref % 2 == 0);
    if (cs.zero_free && !cs.even_eigenvalue) cs.parity_consistent = false;
    if (!cs.lambda_formula)
      throw Error(ErrorCode::CertificateInvalid, "eigenvalue formula fails on column " + std::to_string(j + 1));
    report.all_formulas_hold = report.all_formulas_hold && cs.lambda_formula && cs.parity_consistent;
    report.all_balanced = report.all_balanced && cs.outside_balance;
    report.columns.push_back(std::move(cs));
  }
  return report;
}

}  // namespace whad
