#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "fglie/json_io.hpp"
#include "fglie/version.hpp"
#include "fglie/verify.hpp"

namespace fglie::cli {

namespace {

struct Config {
  std::string format = "text";
  std::string output;
  int degree = 0;
  int prime = 0;
  int precision = 0;
  int t_precision = 0;
  std::string law = "heisenberg";
  std::string structure;
  int trials = 20;
  std::uint64_t seed = 42;
  int leibniz_degree = 2;
  int k = 3;
  std::string x;
  std::string y;
};

/// A report ready to be emitted in either format.
struct Outcome {
  Json json;
  std::string text;
  int code = kOk;
};

std::string status_word(bool ok) { return ok ? "PASS" : "FAIL"; }

bool is_prime(int p) {
  if (p < 2)
    return false;
  for (int q = 2; q * q <= p; ++q)
    if (p % q == 0)
      return false;
  return true;
}

bool looks_like_path(const std::string &s) {
  return s.find('/') != std::string::npos || s.ends_with(".json") || std::filesystem::is_regular_file(s);
}

bool ring_flags_given(const Config &cfg) { return cfg.precision > 0 || cfg.t_precision > 0; }

Ring make_ring(const Config &cfg) {
  if (cfg.t_precision > 0 && cfg.precision == 0)
    throw InputError("--t-precision", "requires --precision");
  if (cfg.precision == 0)
    return Ring::rational();
  if (cfg.prime == 0)
    throw InputError("--precision", "a p-adic ring needs --prime");
  if (!is_prime(cfg.prime))
    throw InputError("--prime", std::to_string(cfg.prime) + " is not prime");
  return cfg.t_precision > 0 ? Ring::padic_t(cfg.prime, cfg.precision, cfg.t_precision)
                             : Ring::padic(cfg.prime, cfg.precision);
}

int sampling_prime(const Config &cfg, int fallback) {
  const int p = cfg.prime ? cfg.prime : fallback;
  if (!is_prime(p))
    throw InputError("--prime", std::to_string(p) + " is not prime");
  return p;
}

FormalGroupLaw load_law(const Config &cfg, int default_degree) {
  if (looks_like_path(cfg.law)) {
    if (ring_flags_given(cfg))
      throw InputError("--precision", "the ring of a law file is fixed by its \"ring\" field");
    FormalGroupLaw F = law_from_json(read_json_file(cfg.law), std::filesystem::path(cfg.law).stem().string());
    if (cfg.degree && cfg.degree != F.degree_bound())
      throw InputError("--degree", "the law file is truncated at degree " + std::to_string(F.degree_bound()));
    return F;
  }
  const int D = cfg.degree ? cfg.degree : default_degree;
  try {
    return laws::by_name(cfg.law, make_ring(cfg), D);
  } catch (const InputError &) {
    throw;
  } catch (const std::invalid_argument &e) {
    throw InputError("--law", e.what());
  }
}

StructureConstants load_structure(const Config &cfg) {
  if (cfg.structure.empty())
    throw InputError("--structure", "required");
  if (looks_like_path(cfg.structure))
    return structure_from_json(read_json_file(cfg.structure));
  try {
    return algebras::by_name(cfg.structure);
  } catch (const std::invalid_argument &e) {
    throw InputError("--structure", e.what());
  }
}

/// "a,b,c" or a JSON array of coefficient strings.
Point parse_point(const FormalGroupLaw &F, const std::string &text, const std::string &field) {
  if (text.empty())
    throw InputError(field, "required");
  Point x;
  if (text.front() == '[') {
    x = point_from_json(F.ring(), parse_json(text, field), field);
  } else {
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
      try {
        x.push_back(Coeff::parse(F.ring(), part));
      } catch (const std::exception &e) {
        throw InputError(field + "[" + std::to_string(x.size()) + "]", e.what());
      }
    }
  }
  if (static_cast<int>(x.size()) != F.dimension())
    throw InputError(field, "expected " + std::to_string(F.dimension()) + " coordinates, got " + std::to_string(x.size()));
  try {
    F.require_point(x);
  } catch (const std::invalid_argument &e) {
    throw InputError(field, e.what());
  }
  return x;
}

Json envelope(const std::string &command, const RingDescriptor &ring) {
  Json j = report_metadata(ring);
  j["command"] = command;
  return j;
}

std::string law_heading(const FormalGroupLaw &F) {
  return F.name() + " over " + F.ring().descriptor().to_string() + ", D = " + std::to_string(F.degree_bound());
}

std::string suite_text(const SuiteReport &r, const std::string &heading) {
  std::ostringstream os;
  os << heading;
  if (r.prime)
    os << ", prime " << r.prime;
  if (r.trials)
    os << ", " << r.trials << " trials, seed " << r.seed;
  os << " (" << r.comparison() << ")\n";
  for (const auto &c : r.checks) {
    os << "  " << status_word(c.pass()) << "  " << c.name << "  " << (c.checked - c.failed) << "/" << c.checked;
    if (!c.pass())
      os << "  first failure: " << c.first_failure;
    os << "\n";
  }
  os << status_word(r.pass()) << "\n";
  return os.str();
}

Outcome suite_outcome(const std::string &command, const FormalGroupLaw &F, const SuiteReport &r) {
  Outcome o;
  o.json = envelope(command, F.ring().descriptor());
  o.json["degree_bound"] = F.degree_bound();
  o.json["report"] = to_json(r);
  o.json["status"] = status_word(r.pass());
  o.text = suite_text(r, command + ": " + law_heading(F));
  o.code = r.pass() ? kOk : kVerificationFailed;
  return o;
}

// bch ----------------------------------------------------------------------

Outcome bch_table(const Config &cfg) {
  const int N = cfg.degree ? cfg.degree : 4;
  Outcome o;
  o.json = envelope("bch table", Ring::rational().descriptor());
  const Json table = bch_table_json(N);
  for (const auto &[key, value] : table.items())
    o.json[key] = value;
  std::ostringstream os;
  os << "H(x1, x2) up to degree " << N << " (Lyndon basis)\n";
  for (const auto &[w, c] : bch_series(N).terms())
    os << "  " << c.get_str() << "  " << bracketing(w) << "\n";
  o.text = os.str();
  return o;
}

Outcome bch_audit(const Config &cfg) {
  const int N = cfg.degree ? cfg.degree : 10;
  std::vector<int> primes = kAuditPrimes;
  if (cfg.prime)
    primes = {sampling_prime(cfg, 0)};
  const LieSeries &H = bch_series(N);
  Outcome o;
  o.json = envelope("bch audit", Ring::rational().descriptor());
  o.json["degree_bound"] = N;
  o.json["terms"] = H.terms().size();
  Json audits = Json::array();
  std::ostringstream os;
  os << "valuation audit v_p(c) >= -(n-1)/(p-1), " << H.terms().size() << " coefficients up to degree " << N << "\n";
  bool all = true;
  for (int p : primes) {
    BchAudit a = audit_valuations(H, p);
    all = all && a.pass;
    Json j;
    j["prime"] = p;
    j["violations"] = a.violations;
    Json bad = Json::array();
    for (const auto &e : a.entries) {
      if (e.ok)
        continue;
      Json b;
      b["lyndon_word"] = e.word;
      b["coefficient"] = e.coefficient.get_str();
      b["valuation"] = e.valuation;
      b["bound"] = e.bound.get_str();
      bad.push_back(std::move(b));
    }
    j["failures"] = std::move(bad);
    j["status"] = status_word(a.pass);
    audits.push_back(std::move(j));
    os << "  p = " << p << ": " << status_word(a.pass) << " (" << a.violations << " violations)\n";
  }
  o.json["audits"] = std::move(audits);
  o.json["status"] = status_word(all);
  os << status_word(all) << "\n";
  o.text = os.str();
  o.code = all ? kOk : kVerificationFailed;
  return o;
}

// law ----------------------------------------------------------------------

Outcome law_check(const Config &cfg) {
  FormalGroupLaw F = load_law(cfg, 8);
  AxiomReport r = check_axioms(F);
  Outcome o;
  o.json = envelope("law check", F.ring().descriptor());
  o.json["law"] = F.name();
  o.json["dimension"] = F.dimension();
  o.json["degree_bound"] = F.degree_bound();
  o.json["axioms"] = to_json(r);
  o.json["status"] = status_word(r.pass());
  std::ostringstream os;
  os << "law check: " << law_heading(F) << "\n"
     << "  " << status_word(r.right_identity) << "  F(x, 0) = x\n"
     << "  " << status_word(r.left_identity) << "  F(0, y) = y\n"
     << "  " << status_word(r.associativity) << "  F(F(x, y), z) = F(x, F(y, z))\n";
  if (!r.failure.empty())
    os << "  first failure: " << r.failure << "\n";
  os << status_word(r.pass()) << "\n";
  o.text = os.str();
  o.code = r.pass() ? kOk : kVerificationFailed;
  return o;
}

Outcome law_lie(const Config &cfg) {
  FormalGroupLaw F = load_law(cfg, 6);
  RingLieAlgebra L;
  try {
    L = lie_from_law(F);
  } catch (const std::invalid_argument &e) {
    throw InputError("components", e.what());
  }
  const int op = std::min(3, default_operator_degree(F));
  SuiteReport r = correspondence_suite(F, op);
  StructureConstants S = L.rational_lift();
  Outcome o;
  o.json = envelope("law lie", F.ring().descriptor());
  o.json["law"] = F.name();
  o.json["degree_bound"] = F.degree_bound();
  o.json["structure"] = to_json(S);
  o.json["correspondence"] = to_json(r);
  o.json["status"] = status_word(r.pass());
  std::ostringstream os;
  os << "law lie: " << law_heading(F) << "\n";
  auto names = laws::coordinate_names(F.name(), F.dimension());
  bool any = false;
  for (int i = 0; i < F.dimension(); ++i)
    for (int j = i + 1; j < F.dimension(); ++j) {
      Point e = zero_point(F.ring(), F.dimension()), f = e;
      e[static_cast<size_t>(i)] = Coeff::one(F.ring());
      f[static_cast<size_t>(j)] = Coeff::one(F.ring());
      Point b = L.bracket(e, f);
      if (is_zero_point(b))
        continue;
      any = true;
      os << "  [e" << i + 1 << ", e" << j + 1 << "] =";
      bool first = true;
      for (int k = 0; k < F.dimension(); ++k) {
        const Coeff &c = b[static_cast<size_t>(k)];
        if (c.is_zero())
          continue;
        os << (first ? " " : " + ") << "(" << c.to_string() << ") e" << k + 1;
        first = false;
      }
      os << "\n";
    }
  if (!any)
    os << "  abelian\n";
  os << suite_text(r, "psi correspondence on A_{<=" + std::to_string(op) + "}");
  o.text = os.str();
  o.code = r.pass() ? kOk : kVerificationFailed;
  return o;
}

Outcome law_explog(const Config &cfg) {
  FormalGroupLaw F = load_law(cfg, 6);
  ExplogOptions opts;
  opts.trials = cfg.trials;
  opts.seed = cfg.seed;
  opts.leibniz_degree = cfg.leibniz_degree;
  return suite_outcome("law explog-verify", F, explog_suite(F, sampling_prime(cfg, 3), opts));
}

Outcome law_adjoint(const Config &cfg) {
  FormalGroupLaw F = load_law(cfg, 6);
  return suite_outcome("law adjoint-verify", F, adjoint_suite(F, sampling_prime(cfg, 3), cfg.trials, cfg.seed));
}

Outcome law_unipotent(const Config &cfg) {
  FormalGroupLaw F = load_law(cfg, 6);
  if (cfg.k < 2)
    throw InputError("--k", "must be >= 2");
  if (cfg.k > F.degree_bound())
    throw InputError("--k", "must not exceed the law degree " + std::to_string(F.degree_bound()));
  return suite_outcome("law unipotent", F, unipotent_suite(F, sampling_prime(cfg, 3), cfg.trials, cfg.seed, cfg.k));
}

// lie ----------------------------------------------------------------------

Outcome lie_jacobi(const Config &cfg) {
  StructureConstants L = load_structure(cfg);
  JacobiReport r = check_jacobi(L);
  Outcome o;
  o.json = envelope("lie jacobi", Ring::rational().descriptor());
  o.json["dimension"] = L.dimension();
  o.json["jacobi"] = to_json(r);
  o.json["status"] = status_word(r.pass);
  std::ostringstream os;
  os << "lie jacobi: dimension " << L.dimension() << "\n";
  if (r.witness)
    os << "  fails at (e" << (*r.witness)[0] + 1 << ", e" << (*r.witness)[1] + 1 << ", e" << (*r.witness)[2] + 1 << ")\n";
  os << status_word(r.pass) << "\n";
  o.text = os.str();
  o.code = r.pass ? kOk : kVerificationFailed;
  return o;
}

/// Analyses needing a Lie algebra stop with the Jacobi report otherwise.
bool require_jacobi(const StructureConstants &L, const std::string &command, Outcome &o) {
  JacobiReport r = check_jacobi(L);
  if (r.pass)
    return true;
  o.json = envelope(command, Ring::rational().descriptor());
  o.json["jacobi"] = to_json(r);
  o.json["status"] = "FAIL";
  o.text = command + ": not a Lie algebra (Jacobi identity fails)\nFAIL\n";
  o.code = kVerificationFailed;
  return false;
}

std::string series_text(const std::vector<int> &v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i)
    s += (i ? " > " : "") + std::to_string(v[i]);
  return s;
}

std::string subspace_text(const Subspace &S) {
  std::ostringstream os;
  os << "dimension " << S.dim();
  for (const auto &v : S.basis()) {
    os << "\n    (";
    for (size_t i = 0; i < v.size(); ++i)
      os << (i ? ", " : "") << v[i].get_str();
    os << ")";
  }
  return os.str();
}

Outcome lie_radical(const Config &cfg, const std::string &command) {
  StructureConstants L = load_structure(cfg);
  Outcome o;
  if (!require_jacobi(L, command, o))
    return o;
  RadicalReport r = radical_nilpotency_report(L);
  const std::string verdict = r.verdict == RadicalVerdict::Pass ? "PASS" : "FLAG";
  o.json = envelope(command, Ring::rational().descriptor());
  o.json["dimension"] = L.dimension();
  if (command == "lie report") {
    o.json["jacobi"] = to_json(check_jacobi(L));
    QMatrix K = killing_form(L);
    o.json["killing_form_rank"] = rank(K);
    o.json["lower_central_series"] = lower_central_series(L);
    o.json["derived_series"] = derived_series(L, Subspace::whole(L.dimension()));
  }
  o.json["radical_report"] = to_json(r);
  o.json["status"] = verdict;
  std::ostringstream os;
  os << command << ": dimension " << L.dimension() << "\n";
  if (command == "lie report") {
    os << "  Jacobi identity holds\n"
       << "  Killing form rank " << rank(killing_form(L)) << "\n"
       << "  lower central series " << series_text(lower_central_series(L)) << "\n";
  }
  os << "  solvable radical: " << subspace_text(r.radical) << "\n"
     << "  radical derived series " << series_text(r.radical_derived_series) << "\n"
     << "  radical lower central series " << series_text(r.radical_lower_central_series) << "\n"
     << "  radical nilpotent: " << (r.radical_nilpotent ? "yes" : "no") << "\n"
     << verdict << "\n";
  o.text = os.str();
  return o;
}

Outcome lie_nilpotent(const Config &cfg) {
  StructureConstants L = load_structure(cfg);
  Outcome o;
  if (!require_jacobi(L, "lie nilpotent", o))
    return o;
  auto lcs = lower_central_series(L);
  auto cls = nilpotency_class(L);
  auto derived = derived_series(L, Subspace::whole(L.dimension()));
  const bool solvable = is_solvable(L, Subspace::whole(L.dimension()));
  o.json = envelope("lie nilpotent", Ring::rational().descriptor());
  o.json["dimension"] = L.dimension();
  o.json["lower_central_series"] = lcs;
  o.json["derived_series"] = derived;
  o.json["nilpotent"] = cls.has_value();
  if (cls)
    o.json["nilpotency_class"] = *cls;
  o.json["solvable"] = solvable;
  std::ostringstream os;
  os << "lie nilpotent: dimension " << L.dimension() << "\n"
     << "  lower central series " << series_text(lcs) << "\n"
     << "  derived series " << series_text(derived) << "\n"
     << "  nilpotent: " << (cls ? "yes, class " + std::to_string(*cls) : std::string("no")) << "\n"
     << "  solvable: " << (solvable ? "yes" : "no") << "\n";
  o.text = os.str();
  return o;
}

// group --------------------------------------------------------------------

Outcome group_op(const Config &cfg, const std::string &op) {
  FormalGroupLaw F = load_law(cfg, 8);
  const std::string command = "group " + op;
  Point x = parse_point(F, cfg.x, "--x");
  Outcome o;
  o.json = envelope(command, F.ring().descriptor());
  o.json["law"] = F.name();
  o.json["degree_bound"] = F.degree_bound();
  o.json["x"] = to_json(x);
  std::ostringstream os;
  os << command << ": " << law_heading(F) << "\n";
  Point result;
  if (op == "mul") {
    Point y = parse_point(F, cfg.y, "--y");
    o.json["y"] = to_json(y);
    result = F.multiply(x, y);
  } else if (op == "inv") {
    result = F.inverse(x);
  } else {
    if (!in_bold_p_group(F.ring(), x))
      throw InputError("--x", "coordinates must lie in bold_p R (valuation >= " +
                                  std::to_string(F.ring().descriptor().bold_p_valuation()) + ")");
    CorrespondenceResult r = op == "log" ? group_log(F, x) : group_exp(F, x);
    result = r.coordinates;
    o.json["exact"] = r.exact;
    o.json["terms"] = r.terms;
    if (!r.exact)
      os << "  (rational series truncated after " << r.terms << " terms)\n";
  }
  o.json["result"] = to_json(result);
  os << "  " << point_to_string(result) << "\n";
  o.text = os.str();
  return o;
}

void emit(const Config &cfg, const Outcome &o, std::ostream &out) {
  const std::string body = cfg.format == "json" ? o.json.dump(2) + "\n" : o.text;
  if (cfg.output.empty()) {
    out << body;
    return;
  }
  std::ofstream file(cfg.output, std::ios::binary);
  if (!file)
    throw InputError("--output", "cannot write " + cfg.output);
  file << body;
}

} // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  Config cfg;
  CLI::App app{"Formal group laws, BCH series and Lie algebra verification", "fglie"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  auto add_output = [&](CLI::App *sub) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--output", cfg.output, "Write the report to this file");
  };
  auto add_law = [&](CLI::App *sub) {
    sub->add_option("--law", cfg.law, "Built-in law name or law JSON file");
    sub->add_option("--degree", cfg.degree, "Truncation degree D of the law")->check(CLI::Range(1, 32));
    sub->add_option("--prime", cfg.prime, "Residue characteristic p")->check(CLI::Range(2, 1000003));
    sub->add_option("--precision", cfg.precision, "p-adic precision N (selects Z_p mod p^N)")->check(CLI::Range(1, 4096));
    sub->add_option("--t-precision", cfg.t_precision, "t-adic precision M (selects Z_p[[t]])")->check(CLI::Range(1, 64));
  };
  auto add_sampling = [&](CLI::App *sub) {
    sub->add_option("--trials", cfg.trials, "Number of sampled points")->check(CLI::Range(1, 100000));
    sub->add_option("--seed", cfg.seed, "Random seed");
  };
  auto leaf = [&](CLI::App *group, const std::string &name, const std::string &help) {
    CLI::App *sub = group->add_subcommand(name, help);
    add_output(sub);
    return sub;
  };

  CLI::App *bch = app.add_subcommand("bch", "Baker-Campbell-Hausdorff series")->require_subcommand(1);
  CLI::App *bch_table_cmd = leaf(bch, "table", "Coefficients in the Lyndon basis");
  bch_table_cmd->add_option("--degree", cfg.degree, "Truncation degree N")->check(CLI::Range(1, 16));
  CLI::App *bch_audit_cmd = leaf(bch, "audit", "Check v_p(c) >= -(n-1)/(p-1) for every coefficient");
  bch_audit_cmd->add_option("--degree", cfg.degree, "Truncation degree N")->check(CLI::Range(1, 16));
  bch_audit_cmd->add_option("--prime", cfg.prime, "Audit only this prime")->check(CLI::Range(2, 1000003));

  CLI::App *law = app.add_subcommand("law", "Formal group laws")->require_subcommand(1);
  CLI::App *law_check_cmd = leaf(law, "check", "Identity and associativity axioms");
  CLI::App *law_lie_cmd = leaf(law, "lie", "Lie algebra of the law and the psi correspondence");
  CLI::App *law_explog_cmd = leaf(law, "explog-verify", "exp/log correspondence on sampled points");
  CLI::App *law_adjoint_cmd = leaf(law, "adjoint-verify", "Adjoint action versus e^{ad a}");
  CLI::App *law_unipotent_cmd = leaf(law, "unipotent", "Conjugation acts unipotently on I/I^k");
  for (CLI::App *sub : {law_check_cmd, law_lie_cmd, law_explog_cmd, law_adjoint_cmd, law_unipotent_cmd})
    add_law(sub);
  for (CLI::App *sub : {law_explog_cmd, law_adjoint_cmd, law_unipotent_cmd})
    add_sampling(sub);
  law_explog_cmd->add_option("--leibniz-degree", cfg.leibniz_degree, "Factor degree for Leibniz checks")
      ->check(CLI::Range(1, 6));
  law_unipotent_cmd->add_option("--k", cfg.k, "Act on I/I^k");

  CLI::App *lie = app.add_subcommand("lie", "Structure-constant Lie algebras")->require_subcommand(1);
  CLI::App *lie_jacobi_cmd = leaf(lie, "jacobi", "Check the Jacobi identity");
  CLI::App *lie_radical_cmd = leaf(lie, "radical", "Solvable radical and its nilpotency");
  CLI::App *lie_nilpotent_cmd = leaf(lie, "nilpotent", "Lower central and derived series");
  CLI::App *lie_report_cmd = leaf(lie, "report", "Full structure report");
  for (CLI::App *sub : {lie_jacobi_cmd, lie_radical_cmd, lie_nilpotent_cmd, lie_report_cmd})
    sub->add_option("--structure", cfg.structure, "Built-in algebra name or structure-constants JSON file")->required();

  CLI::App *group = app.add_subcommand("group", "Group operations of a law")->require_subcommand(1);
  std::vector<std::pair<CLI::App *, std::string>> group_cmds;
  const std::pair<const char *, const char *> group_ops[] = {{"mul", "F(x, y)"},
                                                             {"inv", "The inverse of x"},
                                                             {"log", "phi(log rho_x)"},
                                                             {"exp", "The point exp(psi(x)) of the group"}};
  for (const auto &[op, help] : group_ops) {
    CLI::App *sub = leaf(group, op, help);
    add_law(sub);
    sub->add_option("--x", cfg.x, "Point: comma-separated coefficients or a JSON array")->required();
    if (std::string(op) == "mul")
      sub->add_option("--y", cfg.y, "Second point")->required();
    group_cmds.emplace_back(sub, op);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp &e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion &e) {
    out << kVersion << "\n";
    return kOk;
  } catch (const CLI::ParseError &e) {
    err << "fglie: error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    Outcome o;
    if (bch_table_cmd->parsed())
      o = bch_table(cfg);
    else if (bch_audit_cmd->parsed())
      o = bch_audit(cfg);
    else if (law_check_cmd->parsed())
      o = law_check(cfg);
    else if (law_lie_cmd->parsed())
      o = law_lie(cfg);
    else if (law_explog_cmd->parsed())
      o = law_explog(cfg);
    else if (law_adjoint_cmd->parsed())
      o = law_adjoint(cfg);
    else if (law_unipotent_cmd->parsed())
      o = law_unipotent(cfg);
    else if (lie_jacobi_cmd->parsed())
      o = lie_jacobi(cfg);
    else if (lie_radical_cmd->parsed())
      o = lie_radical(cfg, "lie radical");
    else if (lie_nilpotent_cmd->parsed())
      o = lie_nilpotent(cfg);
    else if (lie_report_cmd->parsed())
      o = lie_radical(cfg, "lie report");
    else
      for (auto &[sub, op] : group_cmds)
        if (sub->parsed())
          o = group_op(cfg, op);
    emit(cfg, o, out);
    return o.code;
  } catch (const InputError &e) {
    err << "fglie: error: " << e.what() << "\n";
  } catch (const NonTerminating &e) {
    err << "fglie: error: ring: " << e.what() << " (use --precision for a p-adic ring)\n";
  } catch (const std::exception &e) {
    err << "fglie: error: " << e.what() << "\n";
  }
  return kUsageError;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  std::vector<const char *> argv{"fglie"};
  for (const auto &a : args)
    argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace fglie::cli
