#pragma once

#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "fglie/fgl.hpp"
#include "fglie/liealg.hpp"
#include "fglie/verify.hpp"

namespace fglie {

/// Insertion-ordered so that serialized reports are byte-stable.
using Json = nlohmann::ordered_json;

/// Malformed input; field() names the offending JSON path, e.g.
/// "components[1].terms[0].coefficient".
class InputError : public std::invalid_argument {
public:
  InputError(std::string field, const std::string &message)
      : std::invalid_argument(field + ": " + message), field_(std::move(field)) {}
  const std::string &field() const { return field_; }

private:
  std::string field_;
};

/// Parses text, raising InputError("<source>") on syntax errors.
Json parse_json(const std::string &text, const std::string &source);
Json read_json_file(const std::string &path);

/// {"kind": "rational"|"padic"|"padic_t", "prime", "precision", "t_precision"}
Json to_json(const RingDescriptor &ring);
Ring ring_from_json(const Json &j, const std::string &field = "ring");

Json to_json(const TruncSeries &f);
TruncSeries series_from_json(Ring ring, const Json &j, const std::string &field);

Json to_json(const Point &x);
Point point_from_json(Ring ring, const Json &j, const std::string &field);

/// {"name", "dimension", "ring", "degree_bound", "components"}
Json to_json(const FormalGroupLaw &F);
FormalGroupLaw law_from_json(const Json &j, const std::string &default_name = "custom");

Json to_json(const LieSeries &s);
/// BchTable: per-term bracketing, degree, coefficient and per-prime
/// valuation against the bound, plus a pass/fail audit per prime.
Json bch_table_json(int N);

/// Structure constants with 1-based indices; only i < j is listed.
Json to_json(const StructureConstants &L);
StructureConstants structure_from_json(const Json &j);
/// Rational lift of a ring-valued Lie algebra.
Json to_json(const RingLieAlgebra &L);

Json to_json(const Subspace &S);
Json to_json(const AxiomReport &r);
Json to_json(const JacobiReport &r);
Json to_json(const RadicalReport &r);
Json to_json(const CheckOutcome &c);
Json to_json(const SuiteReport &r);

/// {"tool_version", "basis_convention": "lyndon", "ring"}
Json report_metadata(const RingDescriptor &ring);

} // namespace fglie
