#include "whad/json_out.hpp"

#include "whad/io.hpp"

#include <limits>
#include <sstream>

namespace whad::json {

json envelope(const std::string& command, json result) {
  return {{"schema_version", schema_version}, {"command", command}, {"result", std::move(result)}};
}

json error_document(const std::string& command, const std::string& code, const std::string& message) {
  return {{"schema_version", schema_version},
          {"command", command},
          {"error", {{"code", code}, {"message", message}}}};
}

json value(const Integer& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
    return x.convert_to<long long>();
  return x.str();
}

json value(const Rational& x) { return to_text(x); }

json matrix(const ExactMatrix& m) {
  json rows = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(value(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json matrix(const RationalMatrix& m) {
  json rows = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(value(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json integers(const std::vector<Integer>& xs) {
  json a = json::array();
  for (const auto& x : xs) a.push_back(value(x));
  return a;
}

json pairs(const std::vector<std::pair<Index, Index>>& ps) {
  json a = json::array();
  for (const auto& [u, v] : ps) a.push_back({u + 1, v + 1});
  return a;
}

json weak_hadamard(const WeakHadamard& p) {
  const auto& s = p.blocks();
  json blocks = json::array();
  for (const auto& b : s.blocks) blocks.push_back({b.first + 1, b.last + 1});
  return {{"weak_hadamard", true},
          {"order", p.order()},
          {"normalized", p.is_normalized()},
          {"orthogonal_columns", p.has_pairwise_orthogonal_columns()},
          {"blocks", blocks},
          {"a", s.a},
          {"b", s.b},
          {"c", s.c},
          {"zero_columns", s.zero_columns},
          {"equivalence_count", value(equivalence_count(p))}};
}

json certificate(const WhdCertificate& c) {
  return {{"matrix", matrix(c.p.matrix())}, {"eigenvalues", integers(c.eigenvalues)}, {"orthogonal", c.orthogonal_columns}};
}

json certify_result(const CertifyResult& r) {
  json obs = json::array();
  for (const auto& o : r.obstructions)
    obs.push_back({{"eigenvalue", value(o.eigenvalue)},
                   {"multiplicity", o.multiplicity},
                   {"candidates", o.candidates},
                   {"kernel_basis", matrix(o.kernel_basis)},
                   {"reason", o.reason}});
  json j = {{"status", to_string(r.status)}, {"obstructions", obs}, {"nodes", r.nodes}};
  j["certificate"] = r.certificate ? certificate(*r.certificate) : json(nullptr);
  return j;
}

json spectrum(const SpectralData& s) {
  json spaces = json::array();
  for (const auto& e : s.spaces)
    spaces.push_back({{"eigenvalue", value(e.value)}, {"multiplicity", e.multiplicity}, {"basis", matrix(e.basis)}});
  std::ostringstream poly;
  poly << s.char_poly;
  return {{"n", s.n}, {"integral", s.integral}, {"char_poly", poly.str()}, {"eigenspaces", spaces}};
}

json structure(const EigvecStructureReport& r) {
  json cols = json::array();
  for (const auto& c : r.columns)
    cols.push_back({{"column", c.column + 1},
                    {"eigenvalue", value(c.eigenvalue)},
                    {"k", c.k},
                    {"skipped", c.skipped},
                    {"note", c.note},
                    {"twin_form", c.twin_form},
                    {"lambda_formula", c.lambda_formula},
                    {"outside_balance", c.outside_balance},
                    {"parity_consistent", c.parity_consistent},
                    {"zero_free", c.zero_free},
                    {"even_eigenvalue", c.even_eigenvalue}});
  return {{"columns", cols}, {"all_formulas_hold", r.all_formulas_hold}, {"all_balanced", r.all_balanced}};
}

json strong(const StrongCospectralResult& r) {
  return {{"pair", {r.u + 1, r.v + 1}},
          {"strongly_cospectral", r.strongly_cospectral},
          {"cospectral_only", r.cospectral_only},
          {"sigma_plus", integers(r.sigma_plus)},
          {"sigma_minus", integers(r.sigma_minus)}};
}

json pst(const PstReport& r) {
  json vals = json::array();
  for (const auto& v : r.valuations)
    vals.push_back({{"eigenvalue", value(v.value)}, {"nu2", v.nu2}, {"sign", v.minus ? "-" : "+"}});
  json j = {{"pair", {r.u + 1, r.v + 1}},
            {"strongly_cospectral", r.strongly_cospectral},
            {"pst", r.pst},
            {"g", value(r.g)},
            {"g_global", value(r.g_global)},
            {"min_time", r.pst ? json(format_pi_multiple(r.min_time)) : json(nullptr)},
            {"min_time_numerator", r.pst ? value(r.min_time) : json(nullptr)},
            {"sigma_plus", integers(r.sigma_plus)},
            {"sigma_minus", integers(r.sigma_minus)},
            {"valuation_table", vals},
            {"reason", r.reason}};
  j["numeric_fidelity"] = r.numeric_fidelity ? json(*r.numeric_fidelity) : json(nullptr);
  return j;
}

json complement_rule(const ComplementRuleReport& r) {
  return {{"pair", {r.u + 1, r.v + 1}},
          {"n", r.n},
          {"g", value(r.g)},
          {"time", format_pi_multiple(r.time)},
          {"predicted", r.predicted},
          {"observed", r.observed},
          {"agrees", r.agrees},
          {"complement", pst(r.complement_report)}};
}

json join_rule(const JoinRuleReport& r) {
  return {{"pair", {r.u + 1, r.v + 1}},
          {"k", r.k},
          {"n", r.n},
          {"g", value(r.g)},
          {"predicted_sigma_plus", integers(r.predicted_sigma_plus)},
          {"predicted_sigma_minus", integers(r.predicted_sigma_minus)},
          {"predicted_pst", r.predicted_pst},
          {"observed", pst(r.observed)},
          {"sigma_agrees", r.sigma_agrees},
          {"pst_agrees", r.pst_agrees},
          {"pst_pairs_in_join", r.pst_pairs_in_join}};
}

json table1_row(const Table1Row& r) {
  return {{"row", r.expected.row},
          {"graph", r.expected.graph},
          {"expression", r.expected.expression},
          {"diagonalizer", std::string(1, r.expected.diagonalizer)},
          {"spectrum", integers(r.spectrum)},
          {"expected_spectrum", integers(r.expected.spectrum)},
          {"whd_orthogonal", r.whd_orthogonal},
          {"hd", r.hd},
          {"expected_hd", r.expected.hd},
          {"pst_pairs", pairs(r.pst)},
          {"pst_count", r.pst.size()},
          {"expected_pst_count", r.expected.pst_pairs},
          {"pst_equals_strong_cospectral", r.pst_equals_strong_cospectral},
          {"mismatches", r.mismatches},
          {"ok", r.ok()}};
}

}  // namespace whad::json
