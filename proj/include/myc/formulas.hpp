#pragma once

#include <optional>
#include <string>

#include "myc/homotopy.hpp"
#include "myc/sphere_wedge.hpp"

/// Homotopy-type formulas for independence complexes of generalized
/// Mycielskians. Expressions use two atoms:
///   A = I(G)         (independence complex of the base graph)
///   B = I(G x P_2)   (independence complex of its Kronecker double cover)
///
/// Several published formulas contain arithmetic slips that brute-force
/// homology refutes on small instances. Wherever that happens the module
/// carries both forms behind an explicit variant switch: the *printed* form
/// reproduces the published text verbatim, the *derived* form is the corrected
/// version obtained by composing the two structure theorems (and is the one
/// numerical verification confirms). Defaults are noted per function.
namespace myc::formulas {

inline constexpr const char* kAtomBase = "A";
inline constexpr const char* kAtomCover = "B";

// --- counting helpers -----------------------------------------------------

/// f(k,r) = sum_{i=0}^{r-1} (2k+1)^i, by direct summation.
long long f_sum(long long k, long long r);
/// g(k,r) = sum_{i=0}^{r-1} (2k+2)^i, by direct summation.
long long g_sum(long long k, long long r);
/// Closed forms: f = r when k = 0, else ((2k+1)^r - 1) / 2k;
/// g = ((2k+2)^r - 1) / (2k+1).
long long f_closed(long long k, long long r);
long long g_closed(long long k, long long r);

/// The four identities tying the sums to their closed forms:
///   f_sum == f_closed, g_sum == g_closed,
///   k * sum_{i=1}^{r-1} f(k,i) == (f(k,r) - r) / 2   (exactly, 2 | f-r),
///   (k+1) * g(k,r) == (g(k,r+1) - 1) / 2             (exactly, 2 | g-1).
bool identity_f_closed(long long k, long long r);
bool identity_g_closed(long long k, long long r);
bool identity_f_partial_sum(long long k, long long r);
bool identity_g_shift(long long k, long long r);

// --- variant switches -----------------------------------------------------

/// Kronecker-cover theorem, case l = 3k+2: Printed = double suspension of
/// B^{*2k+2} as published; Derived = single suspension (the fold chain
/// leaves 2k+2 disjoint copies of G x P_2 with no extra suspension, and
/// brute force agrees). Cases 3k and 3k+1 are identical in both variants.
enum class CoverVariant { Printed, Derived };

/// Closed iterated theorem readings. PrintedTimesFPlusOne reads the join
/// exponent "kf(k,r)+1" as k*f + 1; PrintedTimesFPlusOneInside reads it as
/// k*(f + 1); both keep the printed suspension counts. Derived is the
/// corrected form: Sigma^{r + (f-r)/2} A * B^{*kf} for l = 3k+1 and
/// Sigma^{(g(k,r)-1)/2} B^{*(k+1)(2k+2)^{r-1}} for l = 3k+2.
enum class ClosedReading { PrintedTimesFPlusOne, PrintedTimesFPlusOneInside, Derived };

/// Path-family formula: the printed form gives the second l = 3k
/// sphere as S^{kr+1} and claims contractibility for all l when
/// n = 3r+1; the derived form has S^{2kr} and a single S^0 at l = 0.
enum class PnVariant { Printed, Derived };

/// Cycle-family formula: Printed encodes the published table cell-by-cell;
/// Derived corrects the single refuted cell (row 6r+1, column 3k+2:
/// dimension 4r(k+1)+k instead of (4r+1)(k+1)+k).
enum class CnVariant { Printed, Derived };

// --- structure theorems (symbolic, in atoms A and B) -----------------------

/// Main theorem:  l = 3k   -> (A * B^{*k}) v Susp(B^{*k})
///                l = 3k+1 -> Susp(A * B^{*k})
///                l = 3k+2 -> B^{*(k+1)}
ExprPtr mycielskian_expr(long long l);

/// Cover theorem for I(mu_l(G) x P_2), in atom B only.
ExprPtr cover_mycielskian_expr(long long l,
                               CoverVariant v = CoverVariant::Derived);

/// Recursive reference semantics for I(mu_l^r(G)): repeated substitution of
/// the two theorems. r = 0 yields the atom A.
ExprPtr iterated_expr(long long l, long long r,
                      CoverVariant v = CoverVariant::Derived);

/// Recursive I(mu_l^r(G) x P_2); r = 0 yields the atom B.
ExprPtr iterated_cover_expr(long long l, long long r,
                            CoverVariant v = CoverVariant::Derived);

/// Closed form for I(mu_l^r(G) x P_2); defined for l % 3 in {1, 2}.
/// The 3k+2 branch suspends g(k,r) times (Derived) or 2g(k,r) (Printed).
ExprPtr iterated_cover_closed_expr(long long l, long long r,
                                   CoverVariant v = CoverVariant::Derived);

/// Closed form for I(mu_l^r(G)); defined for l % 3 in {1, 2}, r >= 1.
ExprPtr iterated_closed_expr(long long l, long long r,
                             ClosedReading reading = ClosedReading::Derived);

/// Specializations for l = 0 and l = 1: A v (r copies of S^0), Susp^r A.
ExprPtr mu0_iterated_expr(long long r);
ExprPtr mu1_iterated_expr(long long r);

/// Bipartite proposition: mycielskian_expr(l) with B replaced by A * A.
ExprPtr bipartite_expr(long long l);

/// The worked two-step expansion of I(mu_{3k}^2(G)) as published: four
/// leading wedge summands plus a binomial batch
/// wedge_{i=0..k} C(k,i) Susp^{2i+1} B^{*q_i} with q_i = k^2+k-i as
/// printed; derived = true corrects q_i to 2k^2+k-i (which is what the
/// recursion yields).
ExprPtr two_step_display_expr(long long k, bool derived);

// --- concrete families ------------------------------------------------------

/// I(mu_l(K_n)), n >= 2: n(n-1)^k spheres S^{2k} for l = 3k, else
/// (n-1)^{k+1} spheres S^{2k+1}.
SphereWedge kn_formula(long long n, long long l);

/// I(mu_l(K_n x K_m)), n, m >= 2, via W = (n-1)(m-1)(nm-2)/2.
SphereWedge knkm_formula(long long n, long long m, long long l);

/// I(mu_l(C_n)), n >= 3, l >= 1: Table of 5 rows (n mod 6, with 6r+2 and
/// 6r+4 sharing a row) by 3 columns (l mod 3), each cell one or two
/// (dimension, count) pairs; multiset-merged when dimensions collide.
SphereWedge cn_formula(long long n, long long l,
                       CnVariant v = CnVariant::Printed);

/// I(mu_l(P_n)), n >= 1.
SphereWedge pn_formula(long long n, long long l,
                       PnVariant v = PnVariant::Derived);

// --- stable CLI identifiers -------------------------------------------------

enum class FormulaId {
  MainMu,      // "main-mu"
  CoverMu,     // "cover-mu"
  Iter,        // "iter"
  IterClosed,  // "iter-closed"
  IterCover,   // "iter-cover"
  Mu01,        // "mu01"
  Bipartite,   // "bipartite"
  Kn,          // "kn"
  Knkm,        // "knkm"
  Cn,          // "cn"
  Pn,          // "pn"
};

const char* formula_name(FormulaId id);
std::optional<FormulaId> formula_from_name(const std::string& name);

}  // namespace myc::formulas
