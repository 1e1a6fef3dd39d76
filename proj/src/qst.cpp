#include "whad/qst.hpp"

#include <boost/multiprecision/integer.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

namespace whad {

namespace {

void check_vertex(const SpectralDecomposition& d, Index u) {
  if (u < 0 || u >= d.n)
    throw Error(ErrorCode::IndexOutOfRange, "vertex " + std::to_string(u + 1) + " outside 1.." + std::to_string(d.n));
}

bool column_zero(const RationalMatrix& e, Index u) {
  for (Index i = 0; i < e.rows(); ++i)
    if (e(i, u) != 0) return false;
  return true;
}

Integer gcd_nonzero(const std::vector<Integer>& values) {
  Integer g = 0;
  for (const auto& x : values)
    if (x != 0) g = boost::multiprecision::gcd(g, abs(x));
  return g;
}

// (r λ + shift) mod 2 as a rational in [0, 2).
Rational phase_mod2(const Rational& r, const Integer& lambda, int shift) {
  const Rational q = r * Rational(lambda) + shift;
  const Integer num = boost::multiprecision::numerator(q);
  const Integer den = boost::multiprecision::denominator(q);
  Integer m = num % (2 * den);
  if (m < 0) m += 2 * den;
  return Rational(m) / Rational(den);
}

}  // namespace

SpectralDecomposition decompose(const SpectralData& spec) {
  if (!spec.integral) throw Error(ErrorCode::NotIntegral, "Laplacian spectrum is not integral");
  SpectralDecomposition d;
  d.n = spec.n;
  for (const auto& s : spec.spaces) {
    const RationalMatrix& b = s.basis;
    const RationalMatrix g = b.transpose() * b;
    d.parts.push_back({s.value, (b * inverse(g) * b.transpose()).eval()});
  }
  return d;
}

SpectralDecomposition decompose(const WGraph& x) { return decompose(spectrum(x)); }

SupportData eigenvalue_support(const SpectralDecomposition& d, Index u) {
  check_vertex(d, u);
  SupportData s{u, {}};
  for (const auto& p : d.parts)
    if (!column_zero(p.e, u)) s.support.push_back(p.value);
  return s;
}

std::vector<std::pair<Integer, Rational>> certificate_diagonal(const WhdCertificate& cert, Index u) {
  const ExactMatrix& p = cert.p.matrix();
  if (u < 0 || u >= p.rows()) throw Error(ErrorCode::IndexOutOfRange, "vertex " + std::to_string(u + 1));
  std::vector<std::pair<Integer, Rational>> out;
  for (Index j = 0; j < p.cols(); ++j) {
    const Integer& lambda = cert.eigenvalues[static_cast<std::size_t>(j)];
    auto it = std::find_if(out.begin(), out.end(), [&](const auto& e) { return e.first == lambda; });
    if (it == out.end()) {
      out.emplace_back(lambda, Rational(0));
      it = out.end() - 1;
    }
    if (p(u, j) != 0) it->second += Rational(1) / Rational(cert.p.gram_matrix()(j, j));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

bool cospectral(const SpectralDecomposition& d, Index u, Index v, const WhdCertificate* cert) {
  check_vertex(d, u);
  check_vertex(d, v);
  bool equal = true;
  for (const auto& p : d.parts) equal = equal && p.e(u, u) == p.e(v, v);
  if (cert) {
    if (!cert->orthogonal_columns)
      throw Error(ErrorCode::HypothesisNotMet, "cospectral: certificate columns must be pairwise orthogonal");
    const auto du = certificate_diagonal(*cert, u);
    const auto dv = certificate_diagonal(*cert, v);
    for (const auto& [lambda, value] : du) {
      const Projector* proj = nullptr;
      for (const auto& p : d.parts)
        if (p.value == lambda) proj = &p;
      if (!proj || proj->e(u, u) != value)
        throw Error(ErrorCode::InternalConsistency, "certificate diagonal disagrees with projector at λ=" + lambda.str());
    }
    if ((du == dv) != equal) throw Error(ErrorCode::InternalConsistency, "certificate cospectrality disagrees");
  }
  return equal;
}

StrongCospectralResult strong_cospectral(const SpectralDecomposition& d, Index u, Index v) {
  check_vertex(d, u);
  check_vertex(d, v);
  StrongCospectralResult r{u, v};
  bool strong = true;
  for (const auto& p : d.parts) {
    const auto eu = p.e.col(u), ev = p.e.col(v);
    const bool zu = column_zero(p.e, u), zv = column_zero(p.e, v);
    if (zu && zv) continue;
    if (eu == ev) {
      r.sigma_plus.push_back(p.value);
    } else if (eu == (-ev).eval()) {
      r.sigma_minus.push_back(p.value);
    } else {
      strong = false;
    }
  }
  r.strongly_cospectral = strong && u != v;
  if (!r.strongly_cospectral) {
    r.sigma_plus.clear();
    r.sigma_minus.clear();
    r.cospectral_only = cospectral(d, u, v);
  }
  return r;
}

int nu2(const Integer& z) {
  if (z == 0) throw Error(ErrorCode::InternalConsistency, "2-adic valuation of zero");
  return static_cast<int>(boost::multiprecision::lsb(abs(z)));
}

bool pst_at_time(const SpectralDecomposition& d, Index u, Index v, const Rational& r) {
  const auto sc = strong_cospectral(d, u, v);
  if (!sc.strongly_cospectral) return false;
  std::optional<Rational> common;
  auto agree = [&](const Integer& lambda, int shift) {
    const Rational ph = phase_mod2(r, lambda, shift);
    if (!common) common = ph;
    return *common == ph;
  };
  for (const auto& l : sc.sigma_plus)
    if (!agree(l, 0)) return false;
  for (const auto& l : sc.sigma_minus)
    if (!agree(l, 1)) return false;
  return true;
}

double pst_fidelity(const SpectralDecomposition& d, Index u, Index v, const Rational& r) {
  check_vertex(d, u);
  check_vertex(d, v);
  long double re = 0, im = 0;
  for (const auto& p : d.parts) {
    const Rational& w = p.e(v, u);
    if (w == 0) continue;
    const long double weight = w.convert_to<long double>();
    const long double angle = std::numbers::pi_v<long double> * phase_mod2(r, p.value, 0).convert_to<long double>();
    re += weight * std::cos(angle);
    im += weight * std::sin(angle);
  }
  return static_cast<double>(re * re + im * im);
}

PstReport pst_certify(const SpectralDecomposition& d, Index u, Index v) {
  const auto sc = strong_cospectral(d, u, v);
  PstReport rep;
  rep.u = u;
  rep.v = v;
  rep.strongly_cospectral = sc.strongly_cospectral;
  rep.sigma_plus = sc.sigma_plus;
  rep.sigma_minus = sc.sigma_minus;

  std::vector<Integer> all, support = eigenvalue_support(d, u).support;
  for (const auto& p : d.parts) all.push_back(p.value);
  rep.g = gcd_nonzero(support);
  rep.g_global = gcd_nonzero(all);
  for (const auto& l : support) {
    if (l == 0) continue;
    const bool minus = std::find(sc.sigma_minus.begin(), sc.sigma_minus.end(), l) != sc.sigma_minus.end();
    rep.valuations.push_back({l, nu2(l), minus});
  }

  if (!sc.strongly_cospectral) {
    rep.reason = "not strongly cospectral";
  } else if (sc.sigma_minus.empty()) {
    rep.reason = "sigma_minus is empty";
  } else if (sc.sigma_minus.front() == 0) {
    rep.reason = "0 lies in sigma_minus";
  } else {
    const int nu = nu2(sc.sigma_minus.front());
    bool ok = true;
    for (const auto& l : sc.sigma_minus)
      if (nu2(l) != nu) {
        ok = false;
        rep.reason = "sigma_minus valuations differ";
      }
    for (const auto& l : sc.sigma_plus)
      if (ok && l > 0 && nu2(l) <= nu) {
        ok = false;
        rep.reason = "valuation of " + l.str() + " in sigma_plus is not above " + std::to_string(nu);
      }
    rep.pst = ok;
  }

  if (rep.g != 0) {
    const Rational t = Rational(1) / Rational(rep.g);
    if (pst_at_time(d, u, v, t) != rep.pst)
      throw Error(ErrorCode::InternalConsistency,
                  "valuation criterion and phase condition disagree for pair " + std::to_string(u + 1) + "," +
                      std::to_string(v + 1));
    if (rep.pst) rep.min_time = t;
  }
  return rep;
}

std::vector<std::pair<Index, Index>> pst_pairs(const SpectralDecomposition& d) {
  std::vector<std::pair<Index, Index>> out;
  for (Index u = 0; u < d.n; ++u)
    for (Index v = u + 1; v < d.n; ++v)
      if (pst_certify(d, u, v).pst) out.emplace_back(u, v);
  return out;
}

std::vector<std::pair<Index, Index>> strongly_cospectral_pairs(const SpectralDecomposition& d) {
  std::vector<std::pair<Index, Index>> out;
  for (Index u = 0; u < d.n; ++u)
    for (Index v = u + 1; v < d.n; ++v)
      if (strong_cospectral(d, u, v).strongly_cospectral) out.emplace_back(u, v);
  return out;
}

std::string format_pi_multiple(const Rational& r) {
  if (r == 0) return "0";
  const Integer num = boost::multiprecision::numerator(r);
  const Integer den = boost::multiprecision::denominator(r);
  std::string s;
  if (num == -1) s = "-";
  else if (num != 1) s = num.str();
  s += "pi";
  if (den != 1) s += "/" + den.str();
  return s;
}

ComplementRuleReport pst_complement_rule(const WGraph& x, Index u, Index v) {
  if (!x.is_unweighted()) throw Error(ErrorCode::HypothesisNotMet, "complement rule: X must be unweighted");
  const SpectralData spec = spectrum(x);
  if (!spec.integral) throw Error(ErrorCode::HypothesisNotMet, "complement rule: X must be Laplacian integral");
  const SpectralDecomposition d = decompose(spec);
  const PstReport in_x = pst_certify(d, u, v);
  if (!in_x.pst)
    throw Error(ErrorCode::HypothesisNotMet, "complement rule: no PST between " + std::to_string(u + 1) + " and " +
                                                 std::to_string(v + 1) + " in X");
  ComplementRuleReport rep;
  rep.u = u;
  rep.v = v;
  rep.n = x.order();
  rep.g = in_x.g;
  rep.time = in_x.min_time;
  const Integer n = rep.n;
  rep.predicted = n % rep.g == 0 && (n / rep.g) % 2 == 0;
  const SpectralDecomposition dc = decompose(complement(x));
  rep.observed = pst_at_time(dc, u, v, rep.time);
  rep.complement_report = pst_certify(dc, u, v);
  rep.agrees = rep.predicted == rep.observed;
  return rep;
}

WGraph iterated_join(const WGraph& x, int k) {
  if (k < 1) throw Error(ErrorCode::HypothesisNotMet, "join needs at least one copy");
  WGraph z = x;
  for (int j = 1; j < k; ++j) z = join(z, x);
  return z;
}

JoinRuleReport pst_join_rule(const WGraph& x, int k, Index u, Index v) {
  if (k < 2) throw Error(ErrorCode::HypothesisNotMet, "join rule: needs k >= 2 copies");
  const SpectralData spec = spectrum(x);
  if (!spec.integral) throw Error(ErrorCode::HypothesisNotMet, "join rule: X must be Laplacian integral");
  const SpectralDecomposition d = decompose(spec);
  const PstReport in_x = pst_certify(d, u, v);
  if (!in_x.pst)
    throw Error(ErrorCode::HypothesisNotMet, "join rule: no PST between " + std::to_string(u + 1) + " and " +
                                                 std::to_string(v + 1) + " in X");
  JoinRuleReport rep;
  rep.u = u;
  rep.v = v;
  rep.k = k;
  rep.n = x.order();
  rep.g = in_x.g;
  const Integer n = rep.n;
  const Integer shift = (k - 1) * n;

  std::set<Integer> plus{Integer(0), k * n}, minus;
  for (const auto& l : in_x.sigma_plus)
    if (l > 0) plus.insert(l + shift);
  for (const auto& l : in_x.sigma_minus) minus.insert(l + shift);
  // Null vectors of a disconnected X other than 1 move to (k-1)n.
  if (spec.spaces.front().value == 0 && spec.spaces.front().multiplicity > 1) plus.insert(shift);
  rep.predicted_sigma_plus.assign(plus.begin(), plus.end());
  rep.predicted_sigma_minus.assign(minus.begin(), minus.end());
  rep.predicted_pst = n % rep.g == 0 && (n / rep.g) % 2 == 0;

  const SpectralDecomposition dz = decompose(iterated_join(x, k));
  rep.observed = pst_certify(dz, u, v);
  rep.sigma_agrees = rep.observed.strongly_cospectral && rep.observed.sigma_plus == rep.predicted_sigma_plus &&
                     rep.observed.sigma_minus == rep.predicted_sigma_minus;
  rep.pst_agrees = rep.observed.pst == rep.predicted_pst;
  rep.pst_pairs_in_join = pst_pairs(dz).size();
  return rep;
}

}  // namespace whad
