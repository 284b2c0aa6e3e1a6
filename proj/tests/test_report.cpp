#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <string>
#include <vector>

#include "doctest.h"
#include "report.hpp"
#include "version.hpp"

using namespace narayana;

namespace {
RunConfig gen_a3() {
  RunConfig c;
  c.command = "gen";
  c.family = "A";
  c.n = 3;
  return c;
}
}  // namespace

TEST_CASE("config round trips through json") {
  RunConfig c;
  c.command = "interlace";
  c.family = "F";
  c.n = 4;
  c.m = 1;
  c.t = 2;
  c.alpha = "1";
  c.beta = "-19/10";
  c.family2 = "A";
  c.n2 = 5;
  c.m2 = 2;
  c.t2 = 3;
  c.alpha2 = "2";
  c.beta2 = "0";
  c.chain = true;
  c.max_n = 9;
  c.max_t = 4;
  c.folds = 7;
  c.identity = "overline";
  c.q_probe = true;
  c.q_decompose = true;
  c.certify = true;
  c.format = "text";
  c.out = "report.json";
  c.jobs = 3;
  c.refine_cap = 77;
  CHECK(RunConfig::from_json(c.to_json()).to_json() == c.to_json());

  const RunConfig d = RunConfig::from_json(ordered_json::object());
  CHECK(d.command.empty());
  CHECK(!d.family);
  CHECK(!d.chain);
  CHECK(d.folds == 5);
  CHECK(d.format == "json");
  CHECK(d.jobs == 0);
  CHECK(d.refine_cap == -1);
}

TEST_CASE("coefficient generation document") {
  const ReportDocument doc = run_command(gen_a3());
  CHECK(doc.schema_version == kReportSchemaVersion);
  CHECK(doc.tool_version == kVersion);
  CHECK(doc.config["command"] == "gen");
  REQUIRE(doc.records.size() == 1);
  const auto& rec = doc.records[0];
  CHECK(rec["family"] == "A");
  CHECK(rec["n"] == 3);
  CHECK(rec["degree"] == 3);
  CHECK(rec["coefficients"].get<std::vector<std::string>>() ==
        std::vector<std::string>{"1", "6", "6", "1"});
  CHECK(rec["ok"] == true);
  CHECK(doc.summary["records"] == 1);
  CHECK(doc.summary["failures"] == 0);
  CHECK(doc.duration_seconds >= 0.0);
  CHECK(exit_code_for(doc) == 0);

  CHECK(doc.to_csv() == "k,coefficient\n0,1\n1,6\n2,6\n3,1\n");
  CHECK(doc.to_text().find("narayana " + std::string(kVersion)) !=
        std::string::npos);

  const ReportDocument copy = ReportDocument::from_json(doc.to_json());
  CHECK(copy.to_json() == doc.to_json());
}

TEST_CASE("documents are deterministic across runs") {
  RunConfig c;
  c.command = "gen";
  c.family = "F";
  c.n = 4;
  c.alpha = "1";
  c.beta = "-19/10";
  ReportDocument a = run_command(c);
  ReportDocument b = run_command(c);
  a.duration_seconds = 0.0;
  b.duration_seconds = 0.0;
  CHECK(a.to_json().dump() == b.to_json().dump());
  CHECK(a.records[0]["coefficients"].get<std::vector<std::string>>() ==
        std::vector<std::string>{"1", "42/5", "66/5", "42/5", "1"});
}

TEST_CASE("root survey records") {
  RunConfig c;
  c.command = "roots";
  c.family = "A";
  c.n = 0;
  c.max_n = 4;
  const ReportDocument doc = run_command(c);
  REQUIRE(doc.records.size() == 5);
  for (const auto& rec : doc.records) {
    CHECK(rec["real_rooted"] == true);
    CHECK(rec["ok"] == true);
    CHECK(rec["degree"] == rec["n"]);
    CHECK(rec["zero_root_multiplicity"] == 0);
    CHECK(rec["positive_roots"] == 0);
  }
  CHECK(doc.records[4]["negative_roots"] == 4);
  CHECK(doc.records[4]["distinct_real_roots"] == 4);
  CHECK(doc.records[4]["sign_changes"] == 0);

  RunConfig single;
  single.command = "roots";
  single.family = "F";
  single.n = 4;
  single.alpha = "1";
  single.beta = "-19/10";
  const ReportDocument s = run_command(single);
  REQUIRE(s.records.size() == 1);
  CHECK(s.records[0]["real_rooted"] == false);
  CHECK(s.records[0]["degree"] == 4);
  CHECK(s.records[0]["distinct_real_roots"] == 2);
  CHECK(s.records[0]["negative_roots"] == 2);
  CHECK(s.records[0]["roots"].size() == 2);
  CHECK_THROWS_AS(s.to_csv(), std::invalid_argument);
}

TEST_CASE("interlacing documents") {
  RunConfig chain;
  chain.command = "interlace";
  chain.family = "A";
  chain.n = 0;
  chain.chain = true;
  chain.max_n = 4;
  const ReportDocument doc = run_command(chain);
  REQUIRE(doc.records.size() == 4);
  CHECK(doc.records[0]["g_n"] == 0);
  CHECK(doc.records[0]["f_n"] == 1);
  CHECK(doc.records[0]["relation"] == "Interlaces");  // constant g, nothing to order
  for (size_t i = 1; i < doc.records.size(); ++i)
    CHECK(doc.records[i]["relation"] == "StrictlyInterlaces");
  CHECK(exit_code_for(doc) == 0);

  RunConfig pair;
  pair.command = "interlace";
  pair.family = "A";
  pair.n = 4;
  pair.family2 = "A";
  pair.n2 = 5;
  const ReportDocument p = run_command(pair);
  REQUIRE(p.records.size() == 1);
  CHECK(p.records[0]["g"]["n"] == 4);
  CHECK(p.records[0]["f"]["n"] == 5);
  CHECK(p.records[0]["relation"] == "StrictlyInterlaces");
  CHECK(p.records[0]["ok"] == true);
}

TEST_CASE("recurrence documents") {
  RunConfig c;
  c.command = "recur";
  c.identity = "f";
  c.max_n = 4;
  const ReportDocument doc = run_command(c);
  REQUIRE(doc.records.size() == 3);  // n = 2, 3, 4
  for (const auto& rec : doc.records) {
    CHECK(rec["identity"] == "f");
    CHECK(rec["verified"] == true);
    CHECK(!rec.contains("residual_leading"));
  }
  CHECK(doc.summary["failures"] == 0);

  RunConfig ov;
  ov.command = "recur";
  ov.identity = "overline";
  ov.max_t = 2;
  ov.max_n = 3;
  const ReportDocument od = run_command(ov);
  REQUIRE(od.records.size() == 9);  // t in 0..2, n in 1..3
  CHECK(od.records[0]["t"] == 0);
  CHECK(od.records[0]["n"] == 1);
  CHECK(od.records[8]["t"] == 2);
  CHECK(od.records[8]["n"] == 3);

  RunConfig bad = c;
  bad.identity = "bogus";
  CHECK_THROWS_AS(run_command(bad), std::invalid_argument);
  RunConfig missing;
  missing.command = "recur";
  CHECK_THROWS_AS(run_command(missing), std::invalid_argument);
  RunConfig low = c;
  low.max_n = 1;
  CHECK_THROWS_AS(run_command(low), std::domain_error);
}

TEST_CASE("log-concavity documents") {
  RunConfig probe;
  probe.command = "logconcave";
  probe.q_probe = true;
  probe.max_n = 3;
  const ReportDocument pd = run_command(probe);
  REQUIRE(pd.records.size() == 3);
  for (const auto& rec : pd.records) {
    CHECK(rec["probe"] == "q_real_rooted");
    CHECK(rec["severity"] == "conjecture-probe");
    CHECK(rec["ok"] == true);
  }

  RunConfig dec;
  dec.command = "logconcave";
  dec.q_decompose = true;
  dec.max_n = 2;
  const ReportDocument dd = run_command(dec);
  REQUIRE(dd.records.size() == 2);
  CHECK(dd.records[1]["ratio"] == "256");
  CHECK(dd.records[1]["ratio_is_2_pow_4n"] == true);

  RunConfig cert;
  cert.command = "logconcave";
  cert.family = "A";
  cert.n = 5;
  cert.certify = true;
  const ReportDocument cd = run_command(cert);
  REQUIRE(cd.records.size() == 1);
  CHECK(cd.records[0]["certificate"] == "RealRootedNonneg");
  CHECK(cd.records[0]["ok"] == true);

  RunConfig folds;
  folds.command = "logconcave";
  folds.family = "bm";
  folds.n = 3;
  folds.folds = 2;
  const ReportDocument fd = run_command(folds);
  REQUIRE(fd.records.size() == 1);
  CHECK(fd.records[0]["folds"] == 2);
  CHECK(fd.records[0]["max_verified_fold"] == 2);
  CHECK(fd.records[0]["ok"] == true);
}

TEST_CASE("verification battery document") {
  RunConfig c;
  c.command = "suite";
  c.max_n = 2;
  const ReportDocument doc = run_command(c);
  REQUIRE(doc.records.size() == 12);
  for (size_t i = 0; i < doc.records.size(); ++i) {
    CHECK(doc.records[i]["criterion"] == static_cast<int>(i) + 1);
    CHECK(doc.records[i]["passed"] == true);
    CHECK(!doc.records[i]["name"].get<std::string>().empty());
  }
  CHECK(doc.records[10]["severity"] == "conjecture-probe");
  CHECK(doc.summary["required_failures"] == 0);
  CHECK(doc.summary["conjecture_probe_failures"] == 0);
  CHECK(exit_code_for(doc) == 0);
}

TEST_CASE("exit codes ignore conjecture-probe failures") {
  ReportDocument doc;
  doc.schema_version = kReportSchemaVersion;
  doc.tool_version = kVersion;
  doc.config = ordered_json::object();
  doc.summary = ordered_json::object();

  ordered_json probe_fail;
  probe_fail["ok"] = false;
  probe_fail["severity"] = "conjecture-probe";
  doc.records.push_back(probe_fail);
  CHECK(exit_code_for(doc) == 0);

  ordered_json required_fail;
  required_fail["ok"] = false;
  doc.records.push_back(required_fail);
  CHECK(exit_code_for(doc) == 1);
}

TEST_CASE("usage errors are rejected") {
  RunConfig c;
  c.command = "frobnicate";
  CHECK_THROWS_AS(run_command(c), std::invalid_argument);

  RunConfig nofam;
  nofam.command = "gen";
  CHECK_THROWS_WITH_AS(run_command(nofam), "missing required flag --family",
                       std::invalid_argument);

  RunConfig rect;
  rect.command = "gen";
  rect.family = "rect";
  rect.n = 3;
  CHECK_THROWS_WITH_AS(run_command(rect), "missing required flag --m",
                       std::invalid_argument);

  RunConfig unknown;
  unknown.command = "gen";
  unknown.family = "Z";
  CHECK_THROWS_WITH_AS(run_command(unknown), "unknown family: Z",
                       std::invalid_argument);

  RunConfig dom;
  dom.command = "gen";
  dom.family = "D";
  dom.n = 1;
  CHECK_THROWS_AS(run_command(dom), std::domain_error);
}
