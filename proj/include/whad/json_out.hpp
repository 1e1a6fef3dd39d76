#pragma once

#include "whad/certify.hpp"
#include "whad/qst.hpp"
#include "whad/table1.hpp"
#include "whad/weak_hadamard.hpp"

#include <json.hpp>

namespace whad::json {

using nlohmann::json;

// Every document is {"schema_version", "command", "result"} or
// {"schema_version", "command", "error"}. Vertices and columns are 1-based.
inline constexpr int schema_version = 1;

json envelope(const std::string& command, json result);
json error_document(const std::string& command, const std::string& code, const std::string& message);

json value(const Integer& x);  // number when it fits in 64 bits, string otherwise
json value(const Rational& x);  // "p/q"
json matrix(const ExactMatrix& m);
json matrix(const RationalMatrix& m);
json integers(const std::vector<Integer>& xs);
json pairs(const std::vector<std::pair<Index, Index>>& ps);

json weak_hadamard(const WeakHadamard& p);
json certificate(const WhdCertificate& c);
json certify_result(const CertifyResult& r);
json spectrum(const SpectralData& s);
json structure(const EigvecStructureReport& r);
json strong(const StrongCospectralResult& r);
json pst(const PstReport& r);
json complement_rule(const ComplementRuleReport& r);
json join_rule(const JoinRuleReport& r);
json table1_row(const Table1Row& r);

}  // namespace whad::json
