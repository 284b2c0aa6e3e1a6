#include "narayana/narayana.h"

#include <cstring>
#include <new>
#include <string>

#include "families.hpp"
#include "interlace.hpp"
#include "logconcavity.hpp"
#include "recurrence.hpp"
#include "report.hpp"
#include "sturm.hpp"
#include "version.hpp"

struct nara_poly {
  narayana::Poly p;
};

namespace {

thread_local std::string g_last_error = "no error";

nara_status fail(nara_status s, const char* msg) {
  g_last_error = msg;
  return s;
}

// Funnels every entry point through one exception boundary so C callers
// never see a C++ exception.
template <typename Fn>
nara_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const narayana::refinement_cap_error& e) {
    return fail(NARA_ECAP, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(NARA_EINVAL, e.what());
  } catch (const std::domain_error& e) {
    return fail(NARA_EDOMAIN, e.what());
  } catch (const std::bad_alloc&) {
    return fail(NARA_ENOMEM, "out of memory");
  } catch (const std::exception& e) {
    return fail(NARA_EINTERNAL, e.what());
  } catch (...) {
    return fail(NARA_EINTERNAL, "unknown error");
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

nara_status require(bool cond, const char* msg) {
  return cond ? NARA_OK : fail(NARA_EINVAL, msg);
}

}  // namespace

extern "C" {

const char* nara_version(void) { return narayana::kVersion; }

const char* nara_last_error(void) { return g_last_error.c_str(); }

void nara_string_free(char* s) { delete[] s; }

nara_status nara_poly_from_coeffs(const char* const* coeffs, size_t count,
                                  nara_poly** out) {
  if (require(out && (coeffs || count == 0), "null argument") != NARA_OK)
    return NARA_EINVAL;
  return guarded([&] {
    std::vector<narayana::Rational> c;
    c.reserve(count);
    for (size_t i = 0; i < count; ++i) {
      if (!coeffs[i]) return fail(NARA_EINVAL, "null coefficient string");
      c.push_back(narayana::Rational::parse(coeffs[i]));
    }
    *out = new nara_poly{narayana::Poly::from_coeffs(std::move(c))};
    return NARA_OK;
  });
}

nara_status nara_family(const char* family, long n, long m, long t,
                        const char* alpha, const char* beta, nara_poly** out) {
  if (require(family && out, "null argument") != NARA_OK) return NARA_EINVAL;
  return guarded([&] {
    const auto id = narayana::parse_family(family);
    if (!id) return fail(NARA_EINVAL, "unknown family name");
    narayana::FamilySpec spec;
    spec.id = *id;
    spec.n = n;
    spec.m = m;
    spec.t = t;
    if (alpha) spec.alpha = narayana::Rational::parse(alpha);
    if (beta) spec.beta = narayana::Rational::parse(beta);
    *out = new nara_poly{narayana::make_family(spec)};
    return NARA_OK;
  });
}

void nara_poly_free(nara_poly* p) { delete p; }

long nara_poly_degree(const nara_poly* p) { return p ? p->p.degree() : -1; }

nara_status nara_poly_coeff(const nara_poly* p, long k, char** out) {
  if (require(p && out && k >= 0, "null argument or negative index") != NARA_OK)
    return NARA_EINVAL;
  return guarded([&] {
    *out = dup_string(p->p.coeff(static_cast<int>(k)).str());
    return NARA_OK;
  });
}

nara_status nara_poly_to_string(const nara_poly* p, char** out) {
  if (require(p && out, "null argument") != NARA_OK) return NARA_EINVAL;
  return guarded([&] {
    *out = dup_string(narayana::to_string(p->p));
    return NARA_OK;
  });
}

nara_status nara_poly_eval(const nara_poly* p, const char* x, char** out) {
  if (require(p && x && out, "null argument") != NARA_OK) return NARA_EINVAL;
  return guarded([&] {
    *out = dup_string(p->p.eval(narayana::Rational::parse(x)).str());
    return NARA_OK;
  });
}

nara_status nara_poly_add(const nara_poly* a, const nara_poly* b,
                          nara_poly** out) {
  if (require(a && b && out, "null argument") != NARA_OK) return NARA_EINVAL;
  return guarded([&] {
    *out = new nara_poly{a->p + b->p};
    return NARA_OK;
  });
}

nara_status nara_poly_sub(const nara_poly* a, const nara_poly* b,
                          nara_poly** out) {
  if (require(a && b && out, "null argument") != NARA_OK) return NARA_EINVAL;
  return guarded([&] {
    *out = new nara_poly{a->p - b->p};
    return NARA_OK;
  });
}

nara_status nara_poly_mul(const nara_poly* a, const nara_poly* b,
                          nara_poly** out) {
  if (require(a && b && out, "null argument") != NARA_OK) return NARA_EINVAL;
  return guarded([&] {
    *out = new nara_poly{a->p * b->p};
    return NARA_OK;
  });
}

nara_status nara_poly_derivative(const nara_poly* p, nara_poly** out) {
  if (require(p && out, "null argument") != NARA_OK) return NARA_EINVAL;
  return guarded([&] {
    *out = new nara_poly{p->p.derivative()};
    return NARA_OK;
  });
}

nara_status nara_is_real_rooted(const nara_poly* p, int* out) {
  if (require(p && out, "null argument") != NARA_OK) return NARA_EINVAL;
  return guarded([&] {
    *out = narayana::is_real_rooted(p->p) ? 1 : 0;
    return NARA_OK;
  });
}

nara_status nara_count_real_roots(const nara_poly* p, int* out) {
  if (require(p && out, "null argument") != NARA_OK) return NARA_EINVAL;
  return guarded([&] {
    *out = narayana::count_real_roots(p->p, std::nullopt, std::nullopt);
    return NARA_OK;
  });
}

nara_status nara_sign_changes(const nara_poly* p, int* out) {
  if (require(p && out, "null argument") != NARA_OK) return NARA_EINVAL;
  return guarded([&] {
    *out = narayana::count_sign_changes(p->p);
    return NARA_OK;
  });
}

nara_status nara_isolate_roots(const nara_poly* p, char** json_out) {
  if (require(p && json_out, "null argument") != NARA_OK) return NARA_EINVAL;
  return guarded([&] {
    const narayana::RootIsolation iso = narayana::isolate_real_roots(p->p);
    narayana::ordered_json arr = narayana::ordered_json::array();
    for (const auto& e : iso.roots) {
      narayana::ordered_json j;
      if (e.is_point) {
        j["type"] = "point";
        j["value"] = e.point.str();
      } else {
        j["type"] = "interval";
        j["lo"] = e.lo.str();
        j["hi"] = e.hi.str();
      }
      j["multiplicity"] = e.multiplicity;
      arr.push_back(std::move(j));
    }
    *json_out = dup_string(arr.dump());
    return NARA_OK;
  });
}

nara_status nara_interlaces(const nara_poly* g, const nara_poly* f,
                            char** relation_out, char** witness_out) {
  if (require(g && f && relation_out, "null argument") != NARA_OK)
    return NARA_EINVAL;
  return guarded([&] {
    const narayana::InterlaceReport r = narayana::interlaces(g->p, f->p);
    *relation_out = dup_string(narayana::to_string(r.relation));
    if (witness_out) *witness_out = dup_string(r.witness);
    return NARA_OK;
  });
}

nara_status nara_log_concave_folds(const nara_poly* p, int folds,
                                   int* max_ok_fold, int* fail_fold,
                                   int* fail_index) {
  if (require(p && max_ok_fold && fail_fold && fail_index && folds >= 0,
              "null argument or negative fold count") != NARA_OK)
    return NARA_EINVAL;
  return guarded([&] {
    const narayana::LogConcavityReport r = narayana::k_fold_log_concave(p->p, folds);
    *max_ok_fold = r.max_verified_fold;
    *fail_fold = r.first_failure ? r.first_failure->first : -1;
    *fail_index = r.first_failure ? r.first_failure->second : -1;
    return NARA_OK;
  });
}

nara_status nara_check_recurrence(const char* identity, long t, long n,
                                  int* verified) {
  if (require(identity && verified, "null argument") != NARA_OK)
    return NARA_EINVAL;
  return guarded([&] {
    const std::string id = identity;
    narayana::RecurrenceCheckResult r;
    if (id == "f")
      r = narayana::check_f_recurrence(n);
    else if (id == "overline")
      r = narayana::check_overline_recurrence(t, n);
    else if (id == "underline")
      r = narayana::check_underline_recurrence(t, n);
    else
      return fail(NARA_EINVAL, "identity must be f, overline or underline");
    *verified = r.verified ? 1 : 0;
    return NARA_OK;
  });
}

nara_status nara_run_command(const char* config_json, char** output,
                             int* exit_code) {
  if (require(config_json && output && exit_code, "null argument") != NARA_OK)
    return NARA_EINVAL;
  return guarded([&] {
    const auto parsed =
        narayana::ordered_json::parse(config_json, nullptr, false);
    if (parsed.is_discarded())
      return fail(NARA_EINVAL, "config is not valid JSON");
    const narayana::RunConfig cfg = narayana::RunConfig::from_json(parsed);
    const narayana::ReportDocument doc = narayana::run_command(cfg);
    std::string text;
    if (cfg.format == "json")
      text = doc.to_json().dump(2) + "\n";
    else if (cfg.format == "csv")
      text = doc.to_csv();
    else if (cfg.format == "text")
      text = doc.to_text();
    else
      return fail(NARA_EINVAL, "format must be json, csv or text");
    *output = dup_string(text);
    *exit_code = narayana::exit_code_for(doc);
    return NARA_OK;
  });
}

}  // extern "C"
