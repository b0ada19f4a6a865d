#pragma once

#include <string>
#include <utility>
#include <vector>

#include "permstab/gamma_graph.hpp"

namespace permstab {

// One asserted inequality lhs <= rhs, kept with its exact values so the
// report can show how much room each guarantee had.
struct BoundCheck {
    std::string name;
    Rational lhs;
    Rational rhs;
    Rational slack() const { return rhs - lhs; }
};

struct CorrectionReport {
    int n = 0;
    int big_n = 0;
    Rational defect_inf;
    Rational defect_mean;
    Rational d_inf;  // distance from h to the input map
    Rational d_mean;
    bool used_trivial_fallback = false;
    std::vector<BoundCheck> bounds;
    std::vector<std::pair<std::string, Rational>> values;
};

struct CorrectionResult {
    GroupMap h;                  // exact homomorphism on [N]
    std::vector<int> z_vertices; // vertices of the repaired core, sorted; empty on fallback
    std::vector<int> embedding;  // embedding[i] = image of z_vertices[i] in [N]
    CorrectionReport report;
};

// A violated correction bound signals a bug, never bad input; the report
// built so far rides along for diagnosis.
class correction_invariant_error : public invariant_error {
public:
    correction_invariant_error(const std::string& what, CorrectionReport rep)
        : invariant_error(what), report(std::move(rep)) {}
    CorrectionReport report;
};

// Repairs a symmetric map into an exact homomorphism on N points. When the
// mean defect exceeds 1/78 the trivial homomorphism on the same n points is
// returned; otherwise the Z = Z_{1/6} core is rebuilt from coset actions of
// the component stabilizers. Asserted exactly on every run:
//   is_homomorphism(h), n <= N <= (1+174 d1) n, d_inf(h,f) <= 291 dinf,
//   d_1(h,f) <= 291 d1, n <= |V1| <= (1+78 d1) n, |V(Z)| >= (1-96 d1) n,
//   |D_Z(g)| >= (1-117 dinf) n for every g plus the mean form, the
//   per-element chain d(h(g),f(g)) <= 1 - |D_Z(g)|/N, and the embedding
//   morphism property.
CorrectionResult correct_symmetric(const GroupMap& f);

// Full pipeline: symmetrize then repair. Asserted on every run:
//   d_inf(h,f) <= 2039 defect_inf(f),  N <= (1+1218 defect_inf(f)) n,
//   d_1(h,f)  <= 2913 defect_1(f),    N <= (1+1740 defect_1(f)) n.
CorrectionResult correct(const GroupMap& f);

// Quotient route for a normal subgroup on which f is almost trivial:
// push f to G/D through the minimal-representative transversal, repair
// there, pull back. With dD = max over D of d(f(.), id), asserts
//   defect_inf(fbar) <= 2 dinf + dD,
//   d_inf(h,f) <= 4079 dinf + 2040 dD,  N <= (1+2436 dinf+1218 dD) n.
CorrectionResult correct_via_quotient(const GroupMap& f, const Subgroup& normal);

} // namespace permstab
