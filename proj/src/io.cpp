#include "whad/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace whad {

namespace {

std::vector<std::string> content_tokens(std::istream& in) {
  std::vector<std::string> tokens;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
  }
  return tokens;
}

Integer parse_integer(const std::string& tok) {
  std::size_t start = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
  if (start == tok.size()) throw Error(ErrorCode::ParseError, "not an integer: '" + tok + "'");
  for (std::size_t i = start; i < tok.size(); ++i) {
    if (tok[i] < '0' || tok[i] > '9') throw Error(ErrorCode::ParseError, "not an integer: '" + tok + "'");
  }
  return Integer(tok[0] == '+' ? tok.substr(1) : tok);
}

long parse_dimension(const std::string& tok) {
  Integer v = parse_integer(tok);
  if (v < 1 || v > 100000) throw Error(ErrorCode::ParseError, "bad dimension '" + tok + "'");
  return v.convert_to<long>();
}

}  // namespace

ExactMatrix parse_matrix(std::istream& in) {
  const std::vector<std::string> tok = content_tokens(in);
  if (tok.size() < 2) throw Error(ErrorCode::ParseError, "missing `R C` header");
  const long r = parse_dimension(tok[0]);
  const long c = parse_dimension(tok[1]);
  if (tok.size() != static_cast<std::size_t>(2 + r * c)) {
    throw Error(ErrorCode::ParseError, "expected " + std::to_string(r * c) + " entries, found " +
                                           std::to_string(tok.size() - 2));
  }
  ExactMatrix m(r, c);
  std::size_t k = 2;
  for (long i = 0; i < r; ++i)
    for (long j = 0; j < c; ++j) m(i, j) = parse_integer(tok[k++]);
  return m;
}

ExactMatrix parse_matrix(const std::string& text) {
  std::istringstream in(text);
  return parse_matrix(in);
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

ExactMatrix read_matrix_file(const std::string& path) { return parse_matrix(read_file(path)); }

std::string to_text(const Integer& x) { return x.str(); }

std::string to_text(const Rational& x) {
  const Integer num = boost::multiprecision::numerator(x);
  const Integer den = boost::multiprecision::denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

void write_matrix(std::ostream& out, const ExactMatrix& m) {
  out << m.rows() << ' ' << m.cols() << '\n';
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m(i, j);
    out << '\n';
  }
}

void write_matrix(std::ostream& out, const RationalMatrix& m) {
  out << m.rows() << ' ' << m.cols() << '\n';
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) out << (j ? " " : "") << to_text(m(i, j));
    out << '\n';
  }
}

std::string format_matrix(const ExactMatrix& m) {
  std::ostringstream ss;
  write_matrix(ss, m);
  return ss.str();
}

}  // namespace whad
