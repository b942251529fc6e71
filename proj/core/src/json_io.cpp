#include "fglie/json_io.hpp"

#include <fstream>
#include <sstream>

#include "fglie/version.hpp"

namespace fglie {

namespace {

std::string kind_name(RingKind kind) {
  switch (kind) {
  case RingKind::Rational:
    return "rational";
  case RingKind::PAdic:
    return "padic";
  case RingKind::PAdicT:
    return "padic_t";
  }
  return "?";
}

const Json &require(const Json &j, const char *key, const std::string &field) {
  if (!j.is_object())
    throw InputError(field, "expected an object");
  auto it = j.find(key);
  if (it == j.end())
    throw InputError(field + "." + key, "missing");
  return *it;
}

int require_int(const Json &j, const char *key, const std::string &field) {
  const Json &v = require(j, key, field);
  if (!v.is_number_integer())
    throw InputError(field + "." + key, "expected an integer");
  return v.get<int>();
}

const Json &require_array(const Json &j, const char *key, const std::string &field) {
  const Json &v = require(j, key, field);
  if (!v.is_array())
    throw InputError(field + "." + key, "expected an array");
  return v;
}

std::string at(const std::string &field, size_t i) { return field + "[" + std::to_string(i) + "]"; }

Coeff coeff_from_json(Ring ring, const Json &j, const std::string &field) {
  try {
    if (j.is_string())
      return Coeff::parse(ring, j.get<std::string>());
    if (j.is_number_integer())
      return Coeff::from_int(ring, j.get<long>());
  } catch (const std::exception &e) {
    throw InputError(field, e.what());
  }
  throw InputError(field, "expected a coefficient string");
}

Json int_list(const std::vector<int> &v) {
  Json a = Json::array();
  for (int x : v)
    a.push_back(x);
  return a;
}

Json vector_json(const QVector &v) {
  Json a = Json::array();
  for (const auto &x : v)
    a.push_back(x.get_str());
  return a;
}

} // namespace

Json parse_json(const std::string &text, const std::string &source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error &e) {
    throw InputError(source, std::string("malformed JSON: ") + e.what());
  }
}

Json read_json_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw InputError(path, "cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str(), path);
}

Json to_json(const RingDescriptor &ring) {
  Json j;
  j["kind"] = kind_name(ring.kind);
  if (ring.kind != RingKind::Rational) {
    j["prime"] = ring.prime;
    j["precision"] = ring.precision;
  }
  if (ring.kind == RingKind::PAdicT)
    j["t_precision"] = ring.t_precision;
  return j;
}

Ring ring_from_json(const Json &j, const std::string &field) {
  const Json &kind = require(j, "kind", field);
  if (!kind.is_string())
    throw InputError(field + ".kind", "expected a string");
  RingDescriptor d;
  const std::string k = kind.get<std::string>();
  if (k == "rational")
    d.kind = RingKind::Rational;
  else if (k == "padic")
    d.kind = RingKind::PAdic;
  else if (k == "padic_t")
    d.kind = RingKind::PAdicT;
  else
    throw InputError(field + ".kind", "unknown ring kind '" + k + "'");
  if (d.kind != RingKind::Rational) {
    d.prime = require_int(j, "prime", field);
    d.precision = require_int(j, "precision", field);
  }
  if (d.kind == RingKind::PAdicT)
    d.t_precision = require_int(j, "t_precision", field);
  try {
    return Ring::from_descriptor(d);
  } catch (const std::invalid_argument &e) {
    throw InputError(field, e.what());
  }
}

Json to_json(const TruncSeries &f) {
  Json j;
  j["nvars"] = f.nvars();
  j["degree_bound"] = f.degree_bound();
  Json terms = Json::array();
  for (const auto &[m, c] : f.terms()) {
    Json t;
    t["exponents"] = int_list(m.exponents());
    t["coefficient"] = c.to_string();
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

TruncSeries series_from_json(Ring ring, const Json &j, const std::string &field) {
  const int n = require_int(j, "nvars", field);
  const int D = require_int(j, "degree_bound", field);
  if (n < 0)
    throw InputError(field + ".nvars", "must be non-negative");
  if (D < 0)
    throw InputError(field + ".degree_bound", "must be non-negative");
  TruncSeries f(ring, n, D);
  const Json &terms = require_array(j, "terms", field);
  for (size_t i = 0; i < terms.size(); ++i) {
    const std::string tf = at(field + ".terms", i);
    const Json &e = require_array(terms[i], "exponents", tf);
    if (static_cast<int>(e.size()) != n)
      throw InputError(tf + ".exponents", "expected " + std::to_string(n) + " exponents");
    std::vector<int> exps;
    for (size_t k = 0; k < e.size(); ++k) {
      if (!e[k].is_number_integer() || e[k].get<int>() < 0)
        throw InputError(at(tf + ".exponents", k), "expected a non-negative integer");
      exps.push_back(e[k].get<int>());
    }
    f.add_term(Monomial(exps), coeff_from_json(ring, require(terms[i], "coefficient", tf), tf + ".coefficient"));
  }
  return f;
}

Json to_json(const Point &x) {
  Json a = Json::array();
  for (const auto &c : x)
    a.push_back(c.to_string());
  return a;
}

Point point_from_json(Ring ring, const Json &j, const std::string &field) {
  if (!j.is_array())
    throw InputError(field, "expected an array of coefficients");
  Point x;
  for (size_t i = 0; i < j.size(); ++i)
    x.push_back(coeff_from_json(ring, j[i], at(field, i)));
  return x;
}

Json to_json(const FormalGroupLaw &F) {
  Json j;
  j["name"] = F.name();
  j["dimension"] = F.dimension();
  j["ring"] = to_json(F.ring().descriptor());
  j["degree_bound"] = F.degree_bound();
  Json comps = Json::array();
  for (const auto &c : F.components())
    comps.push_back(to_json(c));
  j["components"] = std::move(comps);
  return j;
}

FormalGroupLaw law_from_json(const Json &j, const std::string &default_name) {
  const int d = require_int(j, "dimension", "law");
  const int D = require_int(j, "degree_bound", "law");
  if (d < 1)
    throw InputError("dimension", "must be positive");
  Ring ring = ring_from_json(require(j, "ring", "law"), "ring");
  const Json &comps = require_array(j, "components", "law");
  if (static_cast<int>(comps.size()) != d)
    throw InputError("components", "expected " + std::to_string(d) + " components");
  std::vector<TruncSeries> components;
  for (size_t k = 0; k < comps.size(); ++k) {
    const std::string field = at("components", k);
    TruncSeries f = series_from_json(ring, comps[k], field);
    if (f.nvars() != 2 * d)
      throw InputError(field + ".nvars", "expected " + std::to_string(2 * d));
    if (f.degree_bound() != D)
      throw InputError(field + ".degree_bound", "expected " + std::to_string(D));
    components.push_back(std::move(f));
  }
  std::string name = default_name;
  if (auto it = j.find("name"); it != j.end() && it->is_string())
    name = it->get<std::string>();
  try {
    return FormalGroupLaw(name, std::move(components));
  } catch (const std::invalid_argument &e) {
    throw InputError("components", e.what());
  }
}

Json to_json(const LieSeries &s) {
  Json j;
  j["generators"] = s.generators();
  j["degree_bound"] = s.degree_bound();
  Json terms = Json::array();
  for (const auto &[w, c] : s.terms()) {
    Json t;
    t["lyndon_word"] = w;
    t["coefficient"] = c.get_str();
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

Json bch_table_json(int N) {
  const LieSeries &H = bch_series(N);
  std::vector<BchAudit> audits;
  for (int p : kAuditPrimes)
    audits.push_back(audit_valuations(H, p));
  Json j;
  j["degree_bound"] = N;
  j["basis"] = "lyndon";
  j["generators"] = 2;
  Json terms = Json::array();
  size_t idx = 0;
  for (const auto &[w, c] : H.terms()) {
    Json t;
    t["lyndon_word"] = w;
    t["bracketing"] = bracketing(w);
    t["degree"] = static_cast<int>(w.size());
    t["coefficient"] = c.get_str();
    Json vals;
    for (const auto &a : audits) {
      const BchAuditEntry &e = a.entries[idx];
      Json v;
      v["valuation"] = e.valuation;
      v["bound"] = e.bound.get_str();
      v["ok"] = e.ok;
      vals[std::to_string(a.prime)] = std::move(v);
    }
    t["valuations"] = std::move(vals);
    terms.push_back(std::move(t));
    ++idx;
  }
  j["terms"] = std::move(terms);
  Json audit;
  for (const auto &a : audits)
    audit[std::to_string(a.prime)] = a.pass ? "pass" : "fail";
  j["valuation_audit"] = std::move(audit);
  return j;
}

Json to_json(const StructureConstants &L) {
  const int d = L.dimension();
  Json j;
  j["dimension"] = d;
  Json brackets = Json::array();
  for (int i = 0; i < d; ++i) {
    for (int k = i + 1; k < d; ++k) {
      QVector v = L.bracket_of_basis(i, k);
      if (is_zero(v))
        continue;
      Json b;
      b["i"] = i + 1;
      b["j"] = k + 1;
      Json result = Json::array();
      for (int m = 0; m < d; ++m) {
        if (v[static_cast<size_t>(m)] == 0)
          continue;
        Json r;
        r["k"] = m + 1;
        r["coeff"] = v[static_cast<size_t>(m)].get_str();
        result.push_back(std::move(r));
      }
      b["result"] = std::move(result);
      brackets.push_back(std::move(b));
    }
  }
  j["brackets"] = std::move(brackets);
  return j;
}

StructureConstants structure_from_json(const Json &j) {
  const int d = require_int(j, "dimension", "structure");
  if (d < 1)
    throw InputError("dimension", "must be positive");
  StructureConstants L(d);
  std::vector<bool> seen(static_cast<size_t>(d * d), false);
  const Json &brackets = require_array(j, "brackets", "structure");
  for (size_t n = 0; n < brackets.size(); ++n) {
    const std::string field = at("brackets", n);
    const int i = require_int(brackets[n], "i", field);
    const int k = require_int(brackets[n], "j", field);
    if (i < 1 || i > d)
      throw InputError(field + ".i", "index out of range 1.." + std::to_string(d));
    if (k < 1 || k > d)
      throw InputError(field + ".j", "index out of range 1.." + std::to_string(d));
    if (i == k)
      throw InputError(field, "[e_i, e_i] is zero by antisymmetry");
    const size_t key = static_cast<size_t>(std::min(i, k) - 1) * static_cast<size_t>(d) + static_cast<size_t>(std::max(i, k) - 1);
    if (seen[key])
      throw InputError(field, "bracket given twice");
    seen[key] = true;
    QVector v(static_cast<size_t>(d), 0);
    const Json &result = require_array(brackets[n], "result", field);
    for (size_t r = 0; r < result.size(); ++r) {
      const std::string rf = at(field + ".result", r);
      const int m = require_int(result[r], "k", rf);
      if (m < 1 || m > d)
        throw InputError(rf + ".k", "index out of range 1.." + std::to_string(d));
      const Json &c = require(result[r], "coeff", rf);
      try {
        mpq_class q;
        if (c.is_number_integer())
          q = c.get<long>();
        else if (c.is_string())
          q = mpq_class(c.get<std::string>());
        else
          throw std::invalid_argument("expected a rational string");
        q.canonicalize();
        v[static_cast<size_t>(m - 1)] += q;
      } catch (const std::invalid_argument &e) {
        throw InputError(rf + ".coeff", e.what());
      }
    }
    L.set_bracket(i - 1, k - 1, v);
  }
  return L;
}

Json to_json(const RingLieAlgebra &L) { return to_json(L.rational_lift()); }

Json to_json(const Subspace &S) {
  Json j;
  j["dimension"] = S.dim();
  Json basis = Json::array();
  for (const auto &v : S.basis())
    basis.push_back(vector_json(v));
  j["basis"] = std::move(basis);
  return j;
}

Json to_json(const AxiomReport &r) {
  Json j;
  j["right_identity"] = r.right_identity;
  j["left_identity"] = r.left_identity;
  j["associativity"] = r.associativity;
  j["status"] = r.pass() ? "PASS" : "FAIL";
  if (!r.failure.empty())
    j["failure"] = r.failure;
  return j;
}

Json to_json(const JacobiReport &r) {
  Json j;
  j["status"] = r.pass ? "PASS" : "FAIL";
  if (r.witness) {
    Json w = Json::array();
    for (int i : *r.witness)
      w.push_back(i + 1);
    j["witness"] = std::move(w);
    j["residual"] = vector_json(r.residual);
  }
  return j;
}

Json to_json(const RadicalReport &r) {
  Json j;
  j["radical"] = to_json(r.radical);
  j["derived_series"] = int_list(r.radical_derived_series);
  j["lower_central_series"] = int_list(r.radical_lower_central_series);
  j["radical_nilpotent"] = r.radical_nilpotent;
  j["status"] = r.verdict == RadicalVerdict::Pass ? "PASS" : "FLAG";
  return j;
}

Json to_json(const CheckOutcome &c) {
  Json j;
  j["name"] = c.name;
  j["checked"] = c.checked;
  j["failed"] = c.failed;
  j["status"] = c.pass() ? "PASS" : "FAIL";
  if (!c.first_failure.empty())
    j["first_failure"] = c.first_failure;
  return j;
}

Json to_json(const SuiteReport &r) {
  Json j;
  j["suite"] = r.suite;
  j["law"] = r.law;
  if (r.prime)
    j["prime"] = r.prime;
  j["trials"] = r.trials;
  j["seed"] = r.seed;
  j["comparison"] = r.comparison();
  Json checks = Json::array();
  for (const auto &c : r.checks)
    checks.push_back(to_json(c));
  j["checks"] = std::move(checks);
  j["status"] = r.pass() ? "PASS" : "FAIL";
  return j;
}

Json report_metadata(const RingDescriptor &ring) {
  Json j;
  j["tool_version"] = kVersion;
  j["basis_convention"] = "lyndon";
  j["ring"] = to_json(ring);
  return j;
}

} // namespace fglie
