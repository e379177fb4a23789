#pragma once

#include "gcb/algebroid.hpp"
#include "gcb/poisson.hpp"

namespace gcb {

/// Bracket induced on degree-(k-1) functions by a degree-(k+1) hamiltonian:
/// {{e1, theta_H}, e2}.
inline GradedPoly derived_bracket(const GradedPoly& e1, const GradedPoly& e2,
                                  const GradedPoly& theta_h, const CotangentChart& chart) {
    decompose_section(e1, chart); // validates the inputs are sections
    decompose_section(e2, chart);
    return poisson(poisson(e1, theta_h, chart), e2, chart);
}

/// The same bracket evaluated through Cartan calculus on the classical side:
///   [u, v] + L_u eta - i_v d_A omega - i_v i_u H
/// for e1 = u + omega, e2 = v + eta.
inline GradedPoly cartan_bracket(const GradedPoly& e1, const GradedPoly& e2,
                                 const LieAlgebroidData& alg, const TwistH* h,
                                 const CotangentChart& chart) {
    const SectionSplit s1 = decompose_section(e1, chart);
    const SectionSplit s2 = decompose_section(e2, chart);

    SectionSplit out;
    out.a_part = bracket_sections(alg, s1.a_part, s2.a_part);
    out.form = lie_derivative_form(alg, s1.a_part, s2.form) -
               interior_product(alg, s2.a_part, d_A(alg, s1.form));
    if (h) {
        GradedPoly hin = h->poly().imported_into(chart.table());
        out.form -= interior_product(alg, s2.a_part, interior_product(alg, s1.a_part, hin));
    }
    return section_poly(out, chart);
}

} // namespace gcb
