#include "report.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>

#include "families.hpp"
#include "interlace.hpp"
#include "logconcavity.hpp"
#include "parallel.hpp"
#include "recurrence.hpp"
#include "sturm.hpp"
#include "suite.hpp"
#include "version.hpp"

namespace narayana {

namespace {

ordered_json opt_json(const std::optional<std::string>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}
ordered_json opt_json(const std::optional<long>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

std::optional<std::string> opt_str(const ordered_json& j, const char* key) {
  if (!j.contains(key) || j[key].is_null()) return std::nullopt;
  return j[key].get<std::string>();
}
std::optional<long> opt_long(const ordered_json& j, const char* key) {
  if (!j.contains(key) || j[key].is_null()) return std::nullopt;
  return j[key].get<long>();
}

long need(const std::optional<long>& v, const char* flag) {
  if (!v) throw std::invalid_argument(std::string("missing required flag ") + flag);
  return *v;
}

Rational parse_or(const std::optional<std::string>& s, long dflt) {
  return s ? Rational::parse(*s) : Rational(dflt);
}

FamilySpec build_spec(const std::string& name, const std::optional<long>& n,
                      const std::optional<long>& m, const std::optional<long>& t,
                      const std::optional<std::string>& alpha,
                      const std::optional<std::string>& beta) {
  const auto id = parse_family(name);
  if (!id) throw std::invalid_argument("unknown family: " + name);
  FamilySpec fs;
  fs.id = *id;
  switch (fs.id) {
    case FamilyId::A:
    case FamilyId::B:
    case FamilyId::D:
    case FamilyId::BM:
    case FamilyId::Q:
      fs.n = need(n, "--n");
      break;
    case FamilyId::Rect:
      fs.n = need(n, "--n");
      fs.m = need(m, "--m");
      break;
    case FamilyId::Overline:
    case FamilyId::Underline:
      fs.t = need(t, "--t");
      fs.n = need(n, "--n");
      break;
    case FamilyId::F:
      fs.n = need(n, "--n");
      fs.alpha = parse_or(alpha, 1);
      fs.beta = parse_or(beta, 0);
      break;
  }
  return fs;
}

FamilySpec first_spec(const RunConfig& cfg) {
  if (!cfg.family) throw std::invalid_argument("missing required flag --family");
  return build_spec(*cfg.family, cfg.n, cfg.m, cfg.t, cfg.alpha, cfg.beta);
}

FamilySpec second_spec(const RunConfig& cfg) {
  const std::string name = cfg.family2 ? *cfg.family2
                           : cfg.family ? *cfg.family
                                        : throw std::invalid_argument(
                                              "missing required flag --family");
  return build_spec(name, cfg.n2, cfg.m2, cfg.t2, cfg.alpha2, cfg.beta2);
}

// Smallest index at which the family is defined (n axis).
long family_min_n(FamilyId id) {
  switch (id) {
    case FamilyId::D:
    case FamilyId::F:
      return 2;
    case FamilyId::Q:
      return 1;
    default:
      return 0;
  }
}

ordered_json family_params_json(const FamilySpec& fs) {
  ordered_json j;
  j["family"] = family_name(fs.id);
  j["n"] = fs.n;
  if (fs.id == FamilyId::Rect) j["m"] = fs.m;
  if (fs.id == FamilyId::Overline || fs.id == FamilyId::Underline) j["t"] = fs.t;
  if (fs.id == FamilyId::F) {
    j["alpha"] = fs.alpha.str();
    j["beta"] = fs.beta.str();
  }
  return j;
}

ordered_json root_entry_json(const RootEntry& e) {
  ordered_json j;
  if (e.is_point) {
    j["type"] = "point";
    j["value"] = e.point.str();
  } else {
    j["type"] = "interval";
    j["lo"] = e.lo.str();
    j["hi"] = e.hi.str();
  }
  j["multiplicity"] = e.multiplicity;
  return j;
}

ordered_json roots_record(const FamilySpec& fs) {
  const Poly p = make_family(fs);
  ordered_json rec = family_params_json(fs);
  rec["degree"] = p.degree();
  rec["real_rooted"] = is_real_rooted(p);
  rec["sign_changes"] = count_sign_changes(p);
  const RootIsolation iso = isolate_real_roots(p);
  rec["distinct_real_roots"] = iso.distinct_count();
  rec["real_roots_with_multiplicity"] = iso.count_with_multiplicity();
  int pos = 0, neg = 0, zero_mult = 0;
  ordered_json arr = ordered_json::array();
  for (const auto& e : iso.roots) {
    // Isolation never produces an interval straddling 0.
    if (e.is_point && e.point.is_zero())
      zero_mult = e.multiplicity;
    else if (e.position_key().sign() < 0 && (e.is_point || e.hi.sign() <= 0))
      ++neg;
    else
      ++pos;
    arr.push_back(root_entry_json(e));
  }
  rec["positive_roots"] = pos;
  rec["negative_roots"] = neg;
  rec["zero_root_multiplicity"] = zero_mult;
  rec["roots"] = arr;
  rec["ok"] = true;
  return rec;
}

std::string residual_leading(const RecurrenceCheckResult& r) {
  if (std::holds_alternative<Poly>(r.residual)) {
    const Poly& p = std::get<Poly>(r.residual);
    if (p.is_zero()) return "0";
    return "(" + p.leading().str() + ")*x^" + std::to_string(p.degree());
  }
  const ParamPoly& p = std::get<ParamPoly>(r.residual);
  if (p.is_zero()) return "0";
  return "(" + to_string(p.coeff(p.degree())) + ")*x^" + std::to_string(p.degree());
}

ordered_json recur_record(const RecurrenceCheckResult& r, bool has_t) {
  ordered_json rec;
  rec["identity"] = r.identity;
  if (has_t) rec["t"] = r.t;
  rec["n"] = r.n;
  rec["verified"] = r.verified;
  if (!r.verified) rec["residual_leading"] = residual_leading(r);
  rec["ok"] = r.verified;
  return rec;
}

void finish_summary(ReportDocument& doc) {
  int failures = 0;
  for (const auto& rec : doc.records)
    if (rec.contains("ok") && rec["ok"].is_boolean() && !rec["ok"].get<bool>())
      ++failures;
  doc.summary["records"] = doc.records.size();
  doc.summary["failures"] = failures;
}

void cmd_gen(const RunConfig& cfg, ReportDocument& doc) {
  const FamilySpec fs = first_spec(cfg);
  const Poly p = make_family(fs);
  ordered_json rec = family_params_json(fs);
  rec["degree"] = p.degree();
  rec["coefficients"] = coeff_strings(p);
  rec["ok"] = true;
  doc.records.push_back(std::move(rec));
}

void cmd_roots(const RunConfig& cfg, ReportDocument& doc) {
  FamilySpec base = first_spec(cfg);
  std::vector<FamilySpec> specs;
  if (cfg.max_n) {
    for (long n = family_min_n(base.id); n <= *cfg.max_n; ++n) {
      FamilySpec fs = base;
      fs.n = n;
      specs.push_back(fs);
    }
  } else {
    specs.push_back(base);
  }
  doc.records.resize(specs.size());
  parallel_for(specs.size(), cfg.jobs,
               [&](size_t i) { doc.records[i] = roots_record(specs[i]); });
}

void cmd_interlace(const RunConfig& cfg, ReportDocument& doc) {
  const long cap = cfg.refine_cap;
  if (cfg.chain) {
    FamilySpec base = first_spec(cfg);
    const long lo = std::max(family_min_n(base.id), base.n);
    const long hi = cfg.max_n ? *cfg.max_n : lo + 10;
    std::vector<long> ns;
    for (long n = lo; n + 1 <= hi; ++n) ns.push_back(n);
    doc.records.resize(ns.size());
    parallel_for(ns.size(), cfg.jobs, [&](size_t i) {
      FamilySpec g = base, f = base;
      g.n = ns[i];
      f.n = ns[i] + 1;
      const InterlaceReport rel = interlaces(make_family(g), make_family(f), cap);
      ordered_json rec = family_params_json(g);
      rec.erase("n");
      rec["g_n"] = g.n;
      rec["f_n"] = f.n;
      rec["relation"] = to_string(rel.relation);
      if (!rel.witness.empty()) rec["witness"] = rel.witness;
      rec["ok"] = rel.relation == InterlaceRelation::Interlaces ||
                  rel.relation == InterlaceRelation::StrictlyInterlaces;
      doc.records[i] = std::move(rec);
    });
    return;
  }
  const FamilySpec gs = first_spec(cfg);
  const FamilySpec fspec = second_spec(cfg);
  const InterlaceReport rel = interlaces(make_family(gs), make_family(fspec), cap);
  ordered_json rec;
  rec["g"] = family_params_json(gs);
  rec["f"] = family_params_json(fspec);
  rec["relation"] = to_string(rel.relation);
  if (!rel.witness.empty()) rec["witness"] = rel.witness;
  rec["ok"] = rel.relation == InterlaceRelation::Interlaces ||
              rel.relation == InterlaceRelation::StrictlyInterlaces;
  doc.records.push_back(std::move(rec));
}

void cmd_recur(const RunConfig& cfg, ReportDocument& doc) {
  if (!cfg.identity) throw std::invalid_argument("missing required flag --identity");
  const std::string id = *cfg.identity;
  if (id == "f") {
    const long max_n = cfg.max_n.value_or(30);
    if (max_n < 2) throw std::domain_error("recur --identity f: --max-n must be >= 2");
    std::vector<long> ns;
    for (long n = 2; n <= max_n; ++n) ns.push_back(n);
    doc.records.resize(ns.size());
    parallel_for(ns.size(), cfg.jobs, [&](size_t i) {
      doc.records[i] = recur_record(check_f_recurrence(ns[i]), false);
    });
    return;
  }
  if (id != "overline" && id != "underline")
    throw std::invalid_argument("--identity must be one of f, overline, underline");
  const long max_t = cfg.max_t.value_or(10);
  const long max_n = cfg.max_n.value_or(30);
  if (max_t < 0 || max_n < 1)
    throw std::domain_error("recur: need --max-t >= 0 and --max-n >= 1");
  std::vector<std::pair<long, long>> grid;
  for (long t = 0; t <= max_t; ++t)
    for (long n = 1; n <= max_n; ++n) grid.emplace_back(t, n);
  doc.records.resize(grid.size());
  const bool ov = (id == "overline");
  parallel_for(grid.size(), cfg.jobs, [&](size_t i) {
    const auto [t, n] = grid[i];
    doc.records[i] = recur_record(
        ov ? check_overline_recurrence(t, n) : check_underline_recurrence(t, n), true);
  });
}

void cmd_logconcave(const RunConfig& cfg, ReportDocument& doc) {
  if (cfg.q_probe) {
    const long max_n = cfg.max_n.value_or(10);
    std::vector<long> ns;
    for (long n = 1; n <= max_n; ++n) ns.push_back(n);
    doc.records.resize(ns.size());
    parallel_for(ns.size(), cfg.jobs, [&](size_t i) {
      ordered_json rec;
      rec["probe"] = "q_real_rooted";
      rec["n"] = ns[i];
      const bool rr = is_real_rooted(q_poly(ns[i]));
      rec["real_rooted"] = rr;
      rec["severity"] = "conjecture-probe";
      rec["ok"] = rr;
      doc.records[i] = std::move(rec);
    });
    return;
  }
  if (cfg.q_decompose) {
    const long max_n = cfg.max_n.value_or(8);
    std::vector<long> ns;
    for (long n = 1; n <= max_n; ++n) ns.push_back(n);
    doc.records.resize(ns.size());
    parallel_for(ns.size(), cfg.jobs, [&](size_t i) {
      const QDecompositionReport q = q_decomposition_check(ns[i]);
      ordered_json rec;
      rec["probe"] = "q_decomposition";
      rec["n"] = q.n;
      rec["proportional"] = q.proportional;
      rec["ratio"] = q.ratio.str();
      rec["ratio_is_2_pow_4n"] = q.ratio_is_pow_16n;
      rec["severity"] = "conjecture-probe";
      rec["ok"] = q.proportional && q.ratio_is_pow_16n;
      doc.records[i] = std::move(rec);
    });
    return;
  }
  FamilySpec base = first_spec(cfg);
  std::vector<FamilySpec> specs;
  if (cfg.max_n) {
    for (long n = family_min_n(base.id); n <= *cfg.max_n; ++n) {
      FamilySpec fs = base;
      fs.n = n;
      specs.push_back(fs);
    }
  } else {
    specs.push_back(base);
  }
  doc.records.resize(specs.size());
  const int folds = cfg.folds;
  const bool certify = cfg.certify;
  parallel_for(specs.size(), cfg.jobs, [&](size_t i) {
    const Poly p = make_family(specs[i]);
    ordered_json rec = family_params_json(specs[i]);
    if (certify) {
      const LogConcavityReport r = certify_infinite_logconcavity(p, folds);
      rec["certificate"] = r.certificate == LogConcavityCertificate::RealRootedNonneg
                               ? "RealRootedNonneg"
                               : "BoundedCheckOnly";
      rec["max_verified_fold"] = r.max_verified_fold;
      if (r.first_failure) {
        rec["first_failure"] = {{"fold", r.first_failure->first},
                                {"index", r.first_failure->second}};
      }
      rec["ok"] = r.certificate == LogConcavityCertificate::RealRootedNonneg ||
                  r.all_folds_passed();
    } else {
      const LogConcavityReport r = k_fold_log_concave(p, folds);
      rec["folds"] = folds;
      rec["max_verified_fold"] = r.max_verified_fold;
      if (r.first_failure) {
        rec["first_failure"] = {{"fold", r.first_failure->first},
                                {"index", r.first_failure->second}};
      }
      rec["ok"] = r.all_folds_passed();
    }
    doc.records[i] = std::move(rec);
  });
}

void cmd_suite(const RunConfig& cfg, ReportDocument& doc) {
  SuiteBounds b = cfg.max_n ? SuiteBounds::quick(*cfg.max_n) : SuiteBounds{};
  if (cfg.max_t) {
    b.rect_rec_max_t = *cfg.max_t;
    b.ov_max_t = std::min(b.ov_max_t, *cfg.max_t);
    b.un_max_t = std::min(b.un_max_t, *cfg.max_t);
  }
  b.jobs = cfg.jobs;
  const auto results = run_acceptance_suite(b);
  int required_failures = 0;
  int probe_failures = 0;
  for (const auto& r : results) {
    ordered_json rec;
    rec["criterion"] = r.id;
    rec["name"] = r.name;
    rec["severity"] = r.conjecture_probe ? "conjecture-probe" : "required";
    rec["passed"] = r.passed;
    rec["detail"] = r.detail;
    rec["ok"] = r.passed;
    if (!r.passed) (r.conjecture_probe ? probe_failures : required_failures)++;
    doc.records.push_back(std::move(rec));
  }
  doc.summary["required_failures"] = required_failures;
  doc.summary["conjecture_probe_failures"] = probe_failures;
}

}  // namespace

std::vector<std::string> coeff_strings(const Poly& p) {
  if (p.is_zero()) return {"0"};
  std::vector<std::string> out;
  out.reserve(static_cast<size_t>(p.degree()) + 1);
  for (int k = 0; k <= p.degree(); ++k) out.push_back(p.coeff(k).str());
  return out;
}

ordered_json RunConfig::to_json() const {
  ordered_json j;
  j["command"] = command;
  j["family"] = opt_json(family);
  j["n"] = opt_json(n);
  j["m"] = opt_json(m);
  j["t"] = opt_json(t);
  j["alpha"] = opt_json(alpha);
  j["beta"] = opt_json(beta);
  j["family2"] = opt_json(family2);
  j["n2"] = opt_json(n2);
  j["m2"] = opt_json(m2);
  j["t2"] = opt_json(t2);
  j["alpha2"] = opt_json(alpha2);
  j["beta2"] = opt_json(beta2);
  j["chain"] = chain;
  j["max_n"] = opt_json(max_n);
  j["max_t"] = opt_json(max_t);
  j["folds"] = folds;
  j["identity"] = opt_json(identity);
  j["q_probe"] = q_probe;
  j["q_decompose"] = q_decompose;
  j["certify"] = certify;
  j["format"] = format;
  j["out"] = opt_json(out);
  j["jobs"] = jobs;
  j["refine_cap"] = refine_cap;
  return j;
}

RunConfig RunConfig::from_json(const ordered_json& j) {
  RunConfig c;
  c.command = j.value("command", "");
  c.family = opt_str(j, "family");
  c.n = opt_long(j, "n");
  c.m = opt_long(j, "m");
  c.t = opt_long(j, "t");
  c.alpha = opt_str(j, "alpha");
  c.beta = opt_str(j, "beta");
  c.family2 = opt_str(j, "family2");
  c.n2 = opt_long(j, "n2");
  c.m2 = opt_long(j, "m2");
  c.t2 = opt_long(j, "t2");
  c.alpha2 = opt_str(j, "alpha2");
  c.beta2 = opt_str(j, "beta2");
  c.chain = j.value("chain", false);
  c.max_n = opt_long(j, "max_n");
  c.max_t = opt_long(j, "max_t");
  c.folds = j.value("folds", 5);
  c.identity = opt_str(j, "identity");
  c.q_probe = j.value("q_probe", false);
  c.q_decompose = j.value("q_decompose", false);
  c.certify = j.value("certify", false);
  c.format = j.value("format", "json");
  c.out = opt_str(j, "out");
  c.jobs = j.value("jobs", 0L);
  c.refine_cap = j.value("refine_cap", -1L);
  return c;
}

ordered_json ReportDocument::to_json() const {
  ordered_json j;
  j["schema_version"] = schema_version;
  j["tool_version"] = tool_version;
  j["config"] = config;
  j["records"] = records;
  j["summary"] = summary;
  j["duration_seconds"] = duration_seconds;
  return j;
}

ReportDocument ReportDocument::from_json(const ordered_json& j) {
  ReportDocument d;
  d.schema_version = j.at("schema_version").get<int>();
  d.tool_version = j.at("tool_version").get<std::string>();
  d.config = j.at("config");
  for (const auto& rec : j.at("records")) d.records.push_back(rec);
  d.summary = j.at("summary");
  d.duration_seconds = j.at("duration_seconds").get<double>();
  return d;
}

std::string ReportDocument::to_csv() const {
  if (!config.contains("command") || config["command"] != "gen")
    throw std::invalid_argument("csv format is only available for the gen command");
  std::ostringstream os;
  os << "k,coefficient\n";
  const auto& coeffs = records.at(0).at("coefficients");
  for (size_t k = 0; k < coeffs.size(); ++k)
    os << k << "," << coeffs[k].get<std::string>() << "\n";
  return os.str();
}

std::string ReportDocument::to_text() const {
  std::ostringstream os;
  os << "narayana " << tool_version << " (report schema " << schema_version << ")\n";
  os << "command: " << config.value("command", "?") << "\n";
  for (const auto& rec : records) os << "  " << rec.dump() << "\n";
  os << "summary: " << summary.dump() << "\n";
  return os.str();
}

ReportDocument run_command(const RunConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  ReportDocument doc;
  doc.schema_version = kReportSchemaVersion;
  doc.tool_version = kVersion;
  doc.config = cfg.to_json();
  doc.summary = ordered_json::object();

  if (cfg.command == "gen")
    cmd_gen(cfg, doc);
  else if (cfg.command == "roots")
    cmd_roots(cfg, doc);
  else if (cfg.command == "interlace")
    cmd_interlace(cfg, doc);
  else if (cfg.command == "recur")
    cmd_recur(cfg, doc);
  else if (cfg.command == "logconcave")
    cmd_logconcave(cfg, doc);
  else if (cfg.command == "suite")
    cmd_suite(cfg, doc);
  else
    throw std::invalid_argument("unknown command: " + cfg.command);

  finish_summary(doc);
  const auto stop = std::chrono::steady_clock::now();
  doc.duration_seconds = std::chrono::duration<double>(stop - start).count();
  return doc;
}

int exit_code_for(const ReportDocument& doc) {
  for (const auto& rec : doc.records) {
    const bool ok = rec.value("ok", true);
    const std::string severity = rec.value("severity", "required");
    if (!ok && severity != "conjecture-probe") return 1;
  }
  return 0;
}

}  // namespace narayana
