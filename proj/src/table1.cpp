#include "whad/table1.hpp"

#include "whad/constructions.hpp"
#include "whad/qst.hpp"

#include <algorithm>
#include <sstream>

namespace whad {

namespace {

std::vector<std::string> split(std::string_view line, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= line.size(); ++i) {
    if (i == line.size() || line[i] == sep) {
      out.emplace_back(line.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

int to_int(const std::string& s, int line) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::ParseError, "table line " + std::to_string(line) + ": bad integer '" + s + "'");
}

}  // namespace

std::vector<Table1Expected> parse_table1(std::string_view csv) {
  std::vector<Table1Expected> rows;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos < csv.size()) {
    std::size_t end = csv.find('\n', pos);
    if (end == std::string_view::npos) end = csv.size();
    std::string_view line = csv.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line_no == 1) continue;
    const auto f = split(line, ',');
    if (f.size() != 7) throw Error(ErrorCode::ParseError, "table line " + std::to_string(line_no) + ": expected 7 fields");
    Table1Expected e;
    e.row = to_int(f[0], line_no);
    e.graph = f[1];
    e.expression = f[2];
    std::replace(e.expression.begin(), e.expression.end(), ';', ',');
    if (f[3] != "R" && f[3] != "T")
      throw Error(ErrorCode::ParseError, "table line " + std::to_string(line_no) + ": diagonalizer must be R or T");
    e.diagonalizer = f[3][0];
    if (f[4] != "yes" && f[4] != "no")
      throw Error(ErrorCode::ParseError, "table line " + std::to_string(line_no) + ": hd must be yes or no");
    e.hd = f[4] == "yes";
    std::istringstream spec(f[5]);
    for (std::string tok; spec >> tok;) e.spectrum.emplace_back(to_int(tok, line_no));
    e.pst_pairs = to_int(f[6], line_no);
    rows.push_back(std::move(e));
  }
  return rows;
}

ExactMatrix table1_diagonalizer(char tag) {
  const ExactMatrix p1 = sylvester_weak(1).matrix();
  if (tag == 'T') return doubled(p1);
  if (tag != 'R') throw Error(ErrorCode::ParseError, std::string("unknown diagonalizer '") + tag + "'");
  ExactMatrix r = ExactMatrix::Zero(8, 8);
  r.col(0).setConstant(Integer(1));
  r.col(1).head(4).setConstant(Integer(1));
  r.col(1).tail(4).setConstant(Integer(-1));
  r.block(0, 2, 4, 3) = p1.rightCols(3);
  r.block(4, 5, 4, 3) = p1.rightCols(3);
  return r;
}

std::vector<Table1Row> table1(const Table1Options& options) {
  std::vector<Table1Row> out;
  for (auto& expected : parse_table1(table1_fixture())) {
    Table1Row row;
    row.expected = std::move(expected);
    const Table1Expected& e = row.expected;
    const WGraph g = graph_from_expression(e.expression);

    try {
      row.spectrum = certificate_from_matrix(g, table1_diagonalizer(e.diagonalizer)).eigenvalues;
    } catch (const Error&) {
      row.mismatches.push_back("diagonalizer");
    }
    row.spectrum_matches = row.spectrum == e.spectrum;
    if (!row.spectrum_matches) row.mismatches.push_back("spectrum");

    const SpectralData spec = spectrum(g);
    auto sorted = e.spectrum;
    std::sort(sorted.begin(), sorted.end());
    row.multiset_matches = spec.integral && spec.eigenvalues() == sorted;
    if (!row.multiset_matches) row.mismatches.push_back("multiset");

    if (options.search) {
      CertifyOptions orth;
      orth.require_orthogonal = true;
      row.whd_orthogonal = certify_whd(g, orth).status == CertifyStatus::Certified;
      if (!row.whd_orthogonal) row.mismatches.push_back("whd");
      CertifyOptions had = orth;
      had.zero_free = true;
      row.hd = certify_whd(g, had).status == CertifyStatus::Certified;
      if (row.hd != e.hd) row.mismatches.push_back("hd");
    }

    if (spec.integral) {
      const SpectralDecomposition d = decompose(spec);
      row.pst = pst_pairs(d);
      row.pst_equals_strong_cospectral = row.pst == strongly_cospectral_pairs(d);
    }
    if (static_cast<int>(row.pst.size()) != e.pst_pairs) row.mismatches.push_back("pst_pairs");
    if (!row.pst_equals_strong_cospectral) row.mismatches.push_back("pst_vs_strong_cospectral");

    if (options.strict && !row.ok())
      throw Error(ErrorCode::MismatchAgainstPaper, "row " + std::to_string(e.row) + ": " + row.mismatches.front());
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace whad
