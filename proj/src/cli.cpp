#include "whad/cli.hpp"

#include "whad/constructions.hpp"
#include "whad/io.hpp"
#include "whad/json_out.hpp"
#include "whad/transport.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

namespace whad {

namespace {

using Json = nlohmann::json;
namespace jo = whad::json;

struct Context {
  std::ostream& out;
  bool as_json = false;
  std::string command;
  mutable bool emitted = false;

  void emit(const Json& result, const std::string& text) const {
    emitted = true;
    if (as_json)
      out << jo::envelope(command, result).dump(2) << '\n';
    else
      out << text;
  }
};

// A path when such a file exists, otherwise a graph expression.
WGraph load_graph(const std::string& spec) {
  if (std::filesystem::is_regular_file(spec)) return read_graph_file(spec);
  return graph_from_expression(spec);
}

Index vertex(const WGraph& g, long long one_based) {
  if (one_based < 1 || one_based > g.order())
    throw Error(ErrorCode::IndexOutOfRange,
                "vertex " + std::to_string(one_based) + " outside 1.." + std::to_string(g.order()));
  return static_cast<Index>(one_based - 1);
}

std::string join_values(const std::vector<Integer>& xs, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + xs[i].str();
  return s;
}

std::string set_text(const std::vector<Integer>& xs) { return "{" + join_values(xs) + "}"; }

std::string bool_text(bool b) { return b ? "true" : "false"; }

std::string pairs_text(const std::vector<std::pair<Index, Index>>& ps) {
  std::string s;
  for (const auto& [u, v] : ps) s += (s.empty() ? "" : " ") + std::string("(") + std::to_string(u + 1) + "," +
                                     std::to_string(v + 1) + ")";
  return s.empty() ? "none" : s;
}

Rational parse_rational(const std::string& s) {
  try {
    return Rational(s);
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "bad rational '" + s + "'");
  }
}

// Certificate argument: a matrix file, or "auto" to search.
WhdCertificate load_certificate(const WGraph& g, const std::string& spec, bool orthogonal) {
  if (spec != "auto") return certificate_from_matrix(g, read_matrix_file(spec));
  CertifyOptions o;
  o.require_orthogonal = orthogonal;
  o.max_vertices = 16;
  auto r = certify_whd(g, o);
  if (!r.certificate) throw Error(ErrorCode::HypothesisNotMet, "no certificate found for an operand");
  return *r.certificate;
}

std::string matrix_text(const ExactMatrix& m) {
  std::ostringstream s;
  write_matrix(s, m);
  return s.str();
}

std::string pst_text(const PstReport& r) {
  std::ostringstream s;
  s << "pair: " << r.u + 1 << ' ' << r.v + 1 << '\n'
    << "strongly_cospectral: " << bool_text(r.strongly_cospectral) << '\n'
    << "pst: " << bool_text(r.pst) << '\n';
  if (r.strongly_cospectral)
    s << "sigma_plus: " << set_text(r.sigma_plus) << "\nsigma_minus: " << set_text(r.sigma_minus) << '\n';
  s << "g: " << r.g << '\n';
  if (r.pst) s << "min_time: " << format_pi_multiple(r.min_time) << '\n';
  s << "valuations:";
  for (const auto& v : r.valuations) s << ' ' << v.value << (v.minus ? "-" : "+") << ":" << v.nu2;
  s << '\n';
  if (!r.reason.empty()) s << "reason: " << r.reason << '\n';
  if (r.numeric_fidelity) s << "numeric_fidelity: " << *r.numeric_fidelity << '\n';
  return s.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"weak Hadamard matrices, WHD graphs and perfect state transfer", "whad"};
  app.require_subcommand(1);
  app.fallthrough();
  Context ctx{out, false, {}, false};
  long long seed = 1;
  app.add_flag("--json", ctx.as_json, "Emit a JSON document");
  app.add_option("--seed", seed, "Seed for randomized constructions");

  std::function<void()> action;
  auto bind = [&](CLI::App* sub, const std::string& name, std::function<void()> f) {
    sub->callback([&, name, f] {
      ctx.command = name;
      action = f;
    });
  };

  // ---- wh ---------------------------------------------------------------
  auto* wh = app.add_subcommand("wh", "Weak Hadamard matrices");
  wh->require_subcommand(1);
  std::string mat_path, mat_path2;
  Index bound = 8;

  auto* check = wh->add_subcommand("check", "Validate a matrix file");
  check->add_option("matrix", mat_path)->required();
  bind(check, "wh check", [&] {
    const ExactMatrix m = read_matrix_file(mat_path);
    try {
      const WeakHadamard p = WeakHadamard::validate(m);
      const auto& s = p.blocks();
      std::ostringstream t;
      t << "weak_hadamard: true, normalized: " << bool_text(p.is_normalized())
        << ", orthogonal_columns: " << bool_text(p.has_pairwise_orthogonal_columns()) << '\n'
        << "blocks: a=" << s.a << " b=" << s.b << " c=" << s.c << " zero_columns=" << s.zero_columns << '\n';
      ctx.emit(jo::weak_hadamard(p), t.str());
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotSquare && e.code() != ErrorCode::EntryOutOfRange &&
          e.code() != ErrorCode::GramNotTridiagonal)
        throw;
      ctx.emit({{"weak_hadamard", false}, {"reason", e.what()}}, std::string("weak_hadamard: false (") + e.what() + ")\n");
    }
  });

  auto* count = wh->add_subcommand("equiv-count", "Number of column-equivalent matrices");
  count->add_option("matrix", mat_path)->required();
  bind(count, "wh equiv-count", [&] {
    const Integer d = equivalence_count(WeakHadamard::validate(read_matrix_file(mat_path)));
    ctx.emit({{"count", jo::value(d)}}, d.str() + "\n");
  });

  auto* oracle = wh->add_subcommand("equiv-oracle", "Count by enumerating column permutations");
  oracle->add_option("matrix", mat_path)->required();
  oracle->add_option("--limit", bound, "Largest order enumerated");
  bind(oracle, "wh equiv-oracle", [&] {
    const Integer d = equivalence_enumerate_oracle(WeakHadamard::validate(read_matrix_file(mat_path)), bound);
    ctx.emit({{"count", jo::value(d)}}, d.str() + "\n");
  });

  Index search_n = 0;
  auto* search = wh->add_subcommand("search-orthogonal", "Normalized matrix with orthogonal columns");
  search->add_option("n", search_n)->required();
  search->add_option("--limit", bound, "Largest order searched");
  bind(search, "wh search-orthogonal", [&] {
    const auto p = search_normalized_orthogonal(search_n, bound);
    if (p)
      ctx.emit({{"found", true}, {"matrix", jo::matrix(p->matrix())}}, matrix_text(p->matrix()));
    else
      ctx.emit({{"found", false}, {"matrix", nullptr}}, "none\n");
  });

  auto* comb = wh->add_subcommand("combinatorics", "Zero/sign counts of columns orthogonal to 1");
  comb->add_option("matrix", mat_path)->required();
  bind(comb, "wh combinatorics", [&] {
    const auto r = check_combinatorics(WeakHadamard::validate(read_matrix_file(mat_path)));
    Json cols = Json::array();
    std::ostringstream t;
    for (const auto& c : r.columns) {
      cols.push_back({{"column", c.column + 1},
                      {"ones", c.profile.ones},
                      {"minus_ones", c.profile.minus_ones},
                      {"zeros", c.profile.zeros},
                      {"zero_free", c.zero_free}});
      t << "column " << c.column + 1 << ": ones=" << c.profile.ones << " minus_ones=" << c.profile.minus_ones
        << " zeros=" << c.profile.zeros << '\n';
    }
    t << "zero_free_orthogonal_pair: " << bool_text(r.zero_free_orthogonal_pair) << '\n';
    ctx.emit({{"n", r.n}, {"columns", cols}, {"zero_free_orthogonal_pair", r.zero_free_orthogonal_pair}}, t.str());
  });

  auto* inv = wh->add_subcommand("inverse", "Exact inverse of a matrix with orthogonal columns");
  inv->add_option("matrix", mat_path)->required();
  bind(inv, "wh inverse", [&] {
    const RationalMatrix m = inverse_orthogonal(WeakHadamard::validate(read_matrix_file(mat_path)));
    std::ostringstream t;
    write_matrix(t, m);
    ctx.emit({{"inverse", jo::matrix(m)}}, t.str());
  });

  std::string kind;
  std::vector<std::string> cargs;
  auto* construct = wh->add_subcommand("construct", "Build a matrix");
  construct->add_option("kind", kind,
                        "hadamard K | weak L | paley Q | nested N | tensor A B | corner H G | anti H G | "
                        "williamson A B C D | random N")
      ->required();
  construct->add_option("args", cargs);
  bind(construct, "wh construct", [&] {
    auto need = [&](std::size_t k) {
      if (cargs.size() != k)
        throw CLI::ValidationError("construct " + kind, "expects " + std::to_string(k) + " argument(s)");
    };
    auto num = [&](std::size_t i) {
      try {
        return std::stoi(cargs[i]);
      } catch (const std::exception&) {
        throw CLI::ValidationError("construct " + kind, "'" + cargs[i] + "' is not an integer");
      }
    };
    auto wh_file = [&](std::size_t i) { return WeakHadamard::validate(read_matrix_file(cargs[i])); };
    ExactMatrix m;
    if (kind == "hadamard") need(1), m = sylvester_hadamard(num(0)).matrix();
    else if (kind == "weak") need(1), m = sylvester_weak(num(0)).matrix();
    else if (kind == "paley") need(1), m = paley(num(0)).matrix();
    else if (kind == "nested") need(1), m = nested_split_family(num(0)).matrix();
    else if (kind == "tensor") need(2), m = tensor(wh_file(0), wh_file(1)).matrix();
    else if (kind == "corner") need(2), m = corner_block(wh_file(0), wh_file(1)).matrix();
    else if (kind == "anti") need(2), m = anti_block(read_matrix_file(cargs[0]), read_matrix_file(cargs[1])).matrix();
    else if (kind == "williamson") {
      need(4);
      m = williamson(read_matrix_file(cargs[0]), read_matrix_file(cargs[1]), read_matrix_file(cargs[2]),
                     read_matrix_file(cargs[3]))
              .matrix();
    } else if (kind == "random") {
      // Row permutation and column negation of the nested family.
      need(1);
      const ExactMatrix base = nested_split_family(num(0)).matrix();
      std::mt19937_64 rng(static_cast<std::uint64_t>(seed));
      std::vector<Index> perm(static_cast<std::size_t>(base.rows()));
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      m.resize(base.rows(), base.cols());
      for (Index i = 0; i < base.rows(); ++i) m.row(i) = base.row(perm[static_cast<std::size_t>(i)]);
      for (Index j = 0; j < m.cols(); ++j)
        if (rng() & 1) m.col(j) = (-m.col(j)).eval();
      m = WeakHadamard::validate(m).matrix();
    } else {
      throw CLI::ValidationError("construct", "unknown kind '" + kind + "'");
    }
    ctx.emit({{"matrix", jo::matrix(m)}}, matrix_text(m));
  });

  // ---- graph ------------------------------------------------------------
  auto* graph = app.add_subcommand("graph", "Graphs and WHD certificates (GRAPH is a file or an expression)");
  graph->require_subcommand(1);
  std::string g1, g2;

  std::vector<std::string> oargs;
  WGraph::Weight ow1 = 1, ow2 = 1;
  auto* op = graph->add_subcommand("op", "Apply a graph operation, or evaluate one expression");
  op->add_option("args", oargs,
                 "EXPR | union G... | complement G | join G H | merge G H | cartesian G H | strong G H | "
                 "direct G H | bipartite-double G")
      ->required();
  op->add_option("--w1", ow1, "merge weight on L(X)");
  op->add_option("--w2", ow2, "merge weight on Y");
  bind(op, "graph op", [&] {
    const WGraph g = [&] {
      if (oargs.size() == 1) return load_graph(oargs[0]);
      const std::string& name = oargs[0];
      std::vector<WGraph> xs;
      for (std::size_t i = 1; i < oargs.size(); ++i) xs.push_back(load_graph(oargs[i]));
      auto arity = [&](std::size_t k) {
        if (xs.size() != k) throw CLI::ValidationError("graph op " + name, "expects " + std::to_string(k) + " graph(s)");
      };
      if (name == "union") return disjoint_union(xs);
      if (name == "complement") return arity(1), complement(xs[0]);
      if (name == "bipartite-double" || name == "double") return arity(1), bipartite_double(xs[0]);
      arity(2);
      if (name == "join") return join(xs[0], xs[1]);
      if (name == "merge") return merge(xs[0], xs[1], ow1, ow2);
      if (name == "cartesian") return product(xs[0], xs[1], ProductFormula::Cartesian);
      if (name == "strong" || name == "tensor") return product(xs[0], xs[1], ProductFormula::Tensor);
      if (name == "direct" || name == "full") return product(xs[0], xs[1], ProductFormula::Full);
      throw CLI::ValidationError("graph op", "unknown operation '" + name + "'");
    }();
    std::ostringstream t;
    write_graph(t, g);
    ctx.emit({{"n", g.order()}, {"laplacian", jo::matrix(g.laplacian())}, {"text", t.str()}}, t.str());
  });

  auto* iso = graph->add_subcommand("iso", "Isomorphism test");
  iso->add_option("first", g1)->required();
  iso->add_option("second", g2)->required();
  bind(iso, "graph iso", [&] {
    const bool r = is_isomorphic(load_graph(g1), load_graph(g2));
    ctx.emit({{"isomorphic", r}}, "isomorphic: " + bool_text(r) + "\n");
  });

  CertifyOptions copt;
  auto* whd = graph->add_subcommand("whd", "Search for a weak Hadamard diagonalizer");
  whd->add_option("graph", g1)->required();
  whd->add_flag("--orthogonal", copt.require_orthogonal, "Require pairwise orthogonal columns");
  whd->add_flag("--zero-free", copt.zero_free, "Only {-1,1} columns");
  whd->add_option("--limit", copt.max_vertices, "Largest order searched");
  bind(whd, "graph whd", [&] {
    const WGraph g = load_graph(g1);
    const auto r = certify_whd(g, copt);
    std::ostringstream t;
    t << to_string(r.status) << '\n';
    if (r.certificate)
      t << matrix_text(r.certificate->p.matrix()) << "eigenvalues: " << join_values(r.certificate->eigenvalues, " ")
        << '\n';
    for (const auto& o : r.obstructions) {
      t << "obstruction: eigenvalue " << o.eigenvalue << " (multiplicity " << o.multiplicity << ", "
        << o.candidates << " candidates): " << o.reason << "\nkernel basis:\n";
      write_matrix(t, o.kernel_basis);
    }
    ctx.emit(jo::certify_result(r), t.str());
  });

  auto* spec = graph->add_subcommand("spectrum", "Exact Laplacian spectrum");
  spec->add_option("graph", g1)->required();
  bind(spec, "graph spectrum", [&] {
    const SpectralData s = spectrum(load_graph(g1));
    std::ostringstream t;
    t << "char_poly: " << s.char_poly << "\nintegral: " << bool_text(s.integral) << '\n';
    for (const auto& e : s.spaces) t << e.value << ": " << e.multiplicity << '\n';
    ctx.emit(jo::spectrum(s), t.str());
  });

  auto* eig = graph->add_subcommand("eigvec", "Structure of the columns of a certificate");
  std::string cert_spec = "auto";
  eig->add_option("graph", g1)->required();
  eig->add_option("certificate", cert_spec, "Matrix file or 'auto'");
  bind(eig, "graph eigvec", [&] {
    const WGraph g = load_graph(g1);
    const auto r = verify_eigvec_structure(g, load_certificate(g, cert_spec, false));
    std::ostringstream t;
    for (const auto& c : r.columns) {
      t << "column " << c.column + 1 << ": eigenvalue " << c.eigenvalue << ", k=" << c.k;
      if (c.skipped) t << " skipped (" << c.note << ")";
      else if (c.k == 1) t << " twin_form=" << bool_text(c.twin_form);
      else t << " lambda_formula=" << bool_text(c.lambda_formula) << " outside_balance=" << bool_text(c.outside_balance);
      t << '\n';
    }
    ctx.emit(jo::structure(r), t.str());
  });

  std::string top;
  std::vector<std::string> targs;
  WGraph::Weight w1 = 1, w2 = 1;
  auto* tr = graph->add_subcommand("transport", "Certificate of a composite graph from operand certificates");
  tr->add_option("op", top, "union | complement | join | merge | cartesian | tensor | full")->required();
  tr->add_option("operands", targs, "GRAPH CERT pairs; CERT is a matrix file or 'auto'")->required();
  tr->add_option("--w1", w1);
  tr->add_option("--w2", w2);
  bind(tr, "graph transport", [&] {
    if (targs.size() % 2) throw CLI::ValidationError("transport", "operands come as GRAPH CERT pairs");
    const bool product_op = top == "cartesian" || top == "tensor" || top == "full";
    std::vector<WGraph> gs;
    std::vector<WhdCertificate> cs;
    for (std::size_t i = 0; i < targs.size(); i += 2) {
      gs.push_back(load_graph(targs[i]));
      cs.push_back(load_certificate(gs.back(), targs[i + 1], product_op && i == 0));
    }
    auto two = [&] {
      if (gs.size() != 2) throw CLI::ValidationError("transport " + top, "expects two operands");
    };
    WhdCertificate c = [&] {
      if (top == "union") return transport_union(gs, cs);
      if (top == "complement") {
        if (gs.size() != 1) throw CLI::ValidationError("transport complement", "expects one operand");
        return transport_complement(gs[0], cs[0]);
      }
      two();
      if (top == "join") return transport_join(gs[0], cs[0], gs[1], cs[1]);
      if (top == "merge") return transport_merge(gs[0], cs[0], gs[1], cs[1], w1, w2);
      if (top == "cartesian") return transport_product(gs[0], cs[0], gs[1], cs[1], ProductFormula::Cartesian);
      if (top == "tensor") return transport_product(gs[0], cs[0], gs[1], cs[1], ProductFormula::Tensor);
      if (top == "full") return transport_product(gs[0], cs[0], gs[1], cs[1], ProductFormula::Full);
      throw CLI::ValidationError("transport", "unknown operation '" + top + "'");
    }();
    ctx.emit(jo::certificate(c),
             matrix_text(c.p.matrix()) + "eigenvalues: " + join_values(c.eigenvalues, " ") + "\n");
  });

  // ---- qst --------------------------------------------------------------
  auto* qst = app.add_subcommand("qst", "Quantum state transfer on Laplacian-integral graphs");
  qst->require_subcommand(1);
  long long u = 0, v = 0, copies = 2;

  auto* support = qst->add_subcommand("support", "Eigenvalue support of a vertex");
  support->add_option("graph", g1)->required();
  support->add_option("--vertex", u)->required();
  bind(support, "qst support", [&] {
    const WGraph g = load_graph(g1);
    const auto s = eigenvalue_support(decompose(g), vertex(g, u));
    ctx.emit({{"vertex", u}, {"support", jo::integers(s.support)}}, set_text(s.support) + "\n");
  });

  auto* cosp = qst->add_subcommand("cospectral", "Cospectrality of two vertices");
  cosp->add_option("graph", g1)->required();
  cosp->add_option("u", u)->required();
  cosp->add_option("v", v)->required();
  bind(cosp, "qst cospectral", [&] {
    const WGraph g = load_graph(g1);
    const bool r = cospectral(decompose(g), vertex(g, u), vertex(g, v));
    ctx.emit({{"pair", {u, v}}, {"cospectral", r}}, "cospectral: " + bool_text(r) + "\n");
  });

  auto* strong = qst->add_subcommand("strong", "Strong cospectrality of two vertices");
  strong->add_option("graph", g1)->required();
  strong->add_option("u", u)->required();
  strong->add_option("v", v)->required();
  bind(strong, "qst strong", [&] {
    const WGraph g = load_graph(g1);
    const auto r = strong_cospectral(decompose(g), vertex(g, u), vertex(g, v));
    std::string t = "strongly_cospectral: " + bool_text(r.strongly_cospectral) + "\n";
    if (r.strongly_cospectral)
      t += "sigma_plus: " + set_text(r.sigma_plus) + "\nsigma_minus: " + set_text(r.sigma_minus) + "\n";
    else
      t += "cospectral: " + bool_text(r.cospectral_only) + "\n";
    ctx.emit(jo::strong(r), t);
  });

  bool numeric = false;
  std::vector<long long> pair;
  auto* pst = qst->add_subcommand("pst", "Perfect state transfer (all pairs when none given)");
  pst->add_option("graph", g1)->required();
  pst->add_option("pair", pair, "u v")->expected(0, 2);
  pst->add_flag("--numeric", numeric, "Also evaluate |e_v^T U(t) e_u|^2 at the minimum time");
  bind(pst, "qst pst", [&] {
    const WGraph g = load_graph(g1);
    const SpectralDecomposition d = decompose(g);
    auto report = [&](Index a, Index b) {
      PstReport r = pst_certify(d, a, b);
      if (numeric && r.g != 0) r.numeric_fidelity = pst_fidelity(d, a, b, Rational(1) / Rational(r.g));
      return r;
    };
    if (pair.size() == 2) {
      const auto r = report(vertex(g, pair[0]), vertex(g, pair[1]));
      ctx.emit(jo::pst(r), pst_text(r));
    } else if (pair.empty()) {
      const auto ps = pst_pairs(d);
      Json reports = Json::array();
      for (const auto& [a, b] : ps) reports.push_back(jo::pst(report(a, b)));
      ctx.emit({{"pst_pairs", jo::pairs(ps)}, {"count", ps.size()}, {"reports", reports}},
               "pst_pairs: " + pairs_text(ps) + "\ncount: " + std::to_string(ps.size()) + "\n");
    } else {
      throw CLI::ValidationError("pst", "give both vertices or none");
    }
  });

  std::string time_text = "1/2";
  auto* fid = qst->add_subcommand("fidelity", "|e_v^T U(pi r) e_u|^2 for rational r");
  fid->add_option("graph", g1)->required();
  fid->add_option("u", u)->required();
  fid->add_option("v", v)->required();
  fid->add_option("--time", time_text, "r in t = pi r, e.g. 1/2");
  bind(fid, "qst fidelity", [&] {
    const WGraph g = load_graph(g1);
    const Rational r = parse_rational(time_text);
    const SpectralDecomposition d = decompose(g);
    const double f = pst_fidelity(d, vertex(g, u), vertex(g, v), r);
    const bool exact = pst_at_time(d, vertex(g, u), vertex(g, v), r);
    std::ostringstream t;
    t.precision(17);
    t << "fidelity: " << f << "\nexact_pst: " << bool_text(exact) << '\n';
    ctx.emit({{"pair", {u, v}}, {"time", format_pi_multiple(r)}, {"fidelity", f}, {"exact_pst", exact}}, t.str());
  });

  auto* crule = qst->add_subcommand("complement-rule", "PST transfer to the complement");
  crule->add_option("graph", g1)->required();
  crule->add_option("u", u)->required();
  crule->add_option("v", v)->required();
  bind(crule, "qst complement-rule", [&] {
    const WGraph g = load_graph(g1);
    const auto r = pst_complement_rule(g, vertex(g, u), vertex(g, v));
    std::ostringstream t;
    t << "n: " << r.n << "\ng: " << r.g << "\ntime: " << format_pi_multiple(r.time)
      << "\npredicted: " << bool_text(r.predicted) << "\nobserved: " << bool_text(r.observed)
      << "\nagrees: " << bool_text(r.agrees) << '\n';
    ctx.emit(jo::complement_rule(r), t.str());
  });

  auto* jrule = qst->add_subcommand("join-rule", "PST in the k-fold join");
  jrule->add_option("graph", g1)->required();
  jrule->add_option("k", copies)->required();
  jrule->add_option("u", u)->required();
  jrule->add_option("v", v)->required();
  bind(jrule, "qst join-rule", [&] {
    const WGraph g = load_graph(g1);
    const auto r = pst_join_rule(g, static_cast<int>(copies), vertex(g, u), vertex(g, v));
    std::ostringstream t;
    t << "predicted_sigma_plus: " << set_text(r.predicted_sigma_plus)
      << "\npredicted_sigma_minus: " << set_text(r.predicted_sigma_minus)
      << "\npredicted_pst: " << bool_text(r.predicted_pst) << "\nobserved_pst: " << bool_text(r.observed.pst)
      << "\nsigma_agrees: " << bool_text(r.sigma_agrees) << "\npst_agrees: " << bool_text(r.pst_agrees)
      << "\npst_pairs_in_join: " << r.pst_pairs_in_join << '\n';
    ctx.emit(jo::join_rule(r), t.str());
  });

  bool no_search = false;
  auto* t1 = qst->add_subcommand("table1", "Reproduce the 23-graph table");
  t1->add_flag("--no-search", no_search, "Skip the WHD and HD searches");
  bind(t1, "qst table1", [&] {
    Table1Options o;
    o.search = !no_search;
    const auto rows = table1(o);
    Json jr = Json::array();
    std::ostringstream t;
    bool all = true;
    for (const auto& r : rows) {
      jr.push_back(jo::table1_row(r));
      all = all && r.ok();
      t << r.expected.row << '\t' << r.expected.graph << '\t' << r.expected.diagonalizer << '\t'
        << (o.search ? (r.hd ? "yes" : "no") : "-") << '\t' << join_values(r.spectrum) << '\t' << r.pst.size()
        << '\t' << (r.ok() ? "ok" : "MISMATCH") << '\n';
    }
    t << (all ? "all rows match\n" : "mismatches found\n");
    ctx.emit({{"rows", jr}, {"all_match", all}}, t.str());
    if (!all) throw Error(ErrorCode::MismatchAgainstPaper, "table reproduction has mismatching rows");
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (action) action();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    if (ctx.as_json && !ctx.emitted)
      out << jo::error_document(ctx.command, to_string(e.code()), e.what()).dump(2) << '\n';
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    if (ctx.as_json && !ctx.emitted) out << jo::error_document(ctx.command, "Internal", e.what()).dump(2) << '\n';
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace whad
