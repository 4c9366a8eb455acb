#pragma once

#include <jetchern/jet_sheaf.hpp>

#include <optional>
#include <vector>

namespace jetchern {

// Where Chern data of a jet bundle comes from: the exact recomputation, or
// the published table totals taken at face value.
enum class Source { oracle, paper };

// Numerical invariants of a polarized surface used to evaluate degree-2
// classes: c1^2(T*X) and c2(T*X) as integers (e.g. intersection numbers
// against the ample class), plus the hypotheses the certificates lean on.
struct SurfaceGeometry {
  Rat c1sq;
  Rat c2;
  bool pg_positive = false;   // h^0(K_X) > 0, controls the h^2 term
  bool picard_rank_one = false;
  bool operator==(const SurfaceGeometry&) const = default;
};

// Smooth hypersurface of degree d in P^3 (canonical polarization):
// c1^2 = d(d-4)^2, c2 = d(d^2-4d+6).  Valid for 5 <= d <= 1000.
SurfaceGeometry hypersurface_geometry(long d);

// True when the geometry violates both guard lines
// 5c1^2 - c2 + 36 >= 0 and 5c1^2 - c2 + 30 >= 0.  A warning, never an error.
bool noether_warning(const SurfaceGeometry& g);

// Delta classes of a bundle E: Delta_0 = 1, Delta_1 = c1(E),
// Delta_2 = c1^2(E) - c2(E), expressed on the cotangent basis.
struct DeltaSequence {
  unsigned upto = 0;  // largest j filled in (j <= 2 on a surface)
  Rat d0;
  Rat d1;            // Delta_1 = d1 * c1(T*X)
  Rat d2_a, d2_b;    // Delta_2 = d2_a * c1^2 + d2_b * c2
};
DeltaSequence delta_sequence(const SurfaceChern& e, unsigned n);

// Delta_2 coefficients of J_k^m: recomputed, or the published Delta totals.
// The paper source exists only for the (k, m) with a published table.
std::pair<Rat, Rat> jet_delta(unsigned k, unsigned m, Source source);

// c1 and c2 totals of J_k^m from either source (the published tables do not
// print a rank total, so none is reported here).
struct JetTotals {
  Rat a1;
  Rat c2a, c2b;
};
JetTotals jet_totals(unsigned k, unsigned m, Source source);

// Inputs for the degree-2 intersection numbers; only what a given j needs
// must be present.
struct DivisorData {
  std::optional<Rat> d1_dot_d2;    // D_1 . D_2                    (j = 0)
  std::optional<Rat> c1e_dot_d;    // c1(E) . D, already evaluated (j = 1)
  std::optional<SurfaceGeometry> geometry;  // evaluates Delta_2   (j = 2)
};

// (k!)^n * Delta_j(E) . (divisor factors), n = 2 on a surface.  Throws
// std::invalid_argument when the needed divisor datum is missing.
Rat intersection_number(unsigned n, unsigned k, unsigned j, const SurfaceChern& e,
                        const DivisorData& div);

struct Certificate {
  enum class Status { big, inconclusive } status;
  unsigned k = 0, m = 0;        // m = k!, the critical weight
  Rat delta_a, delta_b;         // Delta_2 coefficients used
  Rat value;                    // Delta_2 evaluated on the geometry
  Rat rr_leading;               // value / (3k-1)!, the Riemann-Roch growth rate
  bool hypotheses_ok = false;   // pg_positive (h^2 control)
  bool noether_flag = false;    // noether_warning on the geometry
};

// Bigness certificate for J_k^{k!} on the given surface: big iff the
// evaluated Delta_2 is positive and the h^2 hypothesis holds.
Certificate bigness_certificate(unsigned k, const SurfaceGeometry& g,
                                Source source = Source::oracle);

struct SlopeResult {
  Rat mu;        // (a1(S_I) / rank) * c1sq, the slope against the canonical class
  Rat bound;     // (m/2) * c1sq
  bool within;   // mu <= bound
  bool equality; // attained only by I = (m, 0, ..., 0)
};
SlopeResult slope_and_bound(const WeightedPartition& I, const SurfaceGeometry& g);

// Every factor of Gr J_k^m obeys the slope bound with equality exactly at
// (m, 0, ..., 0), and the total slope mu(J_k^m) is strictly below the bound
// for k >= 2.
bool jet_slope_bound_check(unsigned k, unsigned m, const SurfaceGeometry& g);

// Cotangent Chern classes of a smooth complete intersection of the given
// degrees in P^n, on powers of the hyperplane class theta:
// dim X = n - #degrees, c1(T*X) = c1 * theta, c2(T*X) = c2 * theta^2, and
// theta^dim evaluates to prod(degrees).
struct CIChern {
  unsigned dim = 0;
  Rat c1;
  Rat c2;
  Int theta_top;
};
CIChern complete_intersection_chern(unsigned n, const std::vector<unsigned>& degrees);

struct ThresholdResult {
  long d_star = 0;      // least degree in [5, 1000] with positive evaluation
  Rat value_at_d_star;
  Rat value_before;     // evaluation at d_star - 1 (0 when d_star == 5)
  bool stable = false;  // evaluation stays positive up to degree 1000
};

// Scan hypersurface degrees for positivity of Delta_2(J_k^m).  Throws
// std::domain_error if no degree up to 1000 works (does not happen for the
// published cases).
ThresholdResult hypersurface_threshold(unsigned k, unsigned m, Source source);

// Coefficients of the i-th descent bracket for J_k^{k!}:
//   ( a1*(a1 - k! * i/2) - c2a , -c2b )
// on the (c1^2, c2) basis; strictly decreasing in i for fixed k.  The chain
// has steps i = 1..2k; i = 0 is the Delta_2 convention (no subtraction).
std::pair<Rat, Rat> descent_bracket(unsigned k, unsigned i, Source source);

// The bracket evaluated on a geometry.
Rat descent_value(unsigned k, unsigned i, Source source, const SurfaceGeometry& g);

}  // namespace jetchern
