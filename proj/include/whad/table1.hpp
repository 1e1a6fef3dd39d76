#pragma once

#include "whad/certify.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace whad {

// Reproduction of the 23 eight-vertex WHD graphs built from joins and merges
// of the 4-vertex family, against an embedded fixture.

struct Table1Expected {
  int row = 0;
  std::string graph;
  std::string expression;  // graph_from_expression syntax
  char diagonalizer = 'R';
  bool hd = false;
  std::vector<Integer> spectrum;  // λ_j belongs to column j of the diagonalizer
  int pst_pairs = 0;
};

/// Checked-in CSV, compiled into the library.
std::string_view table1_fixture();
/// Throws ParseError. Inside an expression, ';' stands for ','.
std::vector<Table1Expected> parse_table1(std::string_view csv);

/// [[1, 1, P1[1], 0], [1, -1, 0, P1[1]]] for 'R', [[P1, P1], [P1, -P1]] for 'T'.
ExactMatrix table1_diagonalizer(char tag);

struct Table1Row {
  Table1Expected expected;
  std::vector<Integer> spectrum;          // read off the diagonalizer columns
  bool spectrum_matches = false;          // ordered, against the fixture
  bool multiset_matches = false;          // against the exact spectrum
  bool whd_orthogonal = false;            // certify_whd with orthogonal columns
  bool hd = false;                        // certify_whd with {-1,1} columns
  std::vector<std::pair<Index, Index>> pst;
  bool pst_equals_strong_cospectral = false;
  std::vector<std::string> mismatches;    // field names

  bool ok() const { return mismatches.empty(); }
};

struct Table1Options {
  bool strict = false;       // throw MismatchAgainstPaper at the first bad row
  bool search = true;        // run certify_whd for the WHD and HD columns
};

std::vector<Table1Row> table1(const Table1Options& options = {});

}  // namespace whad
