#include "families.hpp"
#include "logconcavity.hpp"

namespace narayana {

Poly make_family(const FamilySpec& spec) {
  switch (spec.id) {
    case FamilyId::A: return narayana_a(spec.n);
    case FamilyId::B: return narayana_b(spec.n);
    case FamilyId::D: return narayana_d(spec.n);
    case FamilyId::Rect: return narayana_rect(spec.n, spec.m);
    case FamilyId::Overline: return overline_n(spec.t, spec.n);
    case FamilyId::Underline: return underline_n(spec.t, spec.n);
    case FamilyId::F: return f_family(spec.n, spec.alpha, spec.beta);
    case FamilyId::BM: return boros_moll_poly(spec.n);
    case FamilyId::Q: return q_poly(spec.n);
  }
  throw std::domain_error("make_family: unknown family");
}

}  // namespace narayana
