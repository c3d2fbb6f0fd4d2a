#include "myc/formulas.hpp"

#include <map>
#include <vector>

#include "myc/checked.hpp"
#include "myc/errors.hpp"

namespace myc::formulas {

namespace {

ExprPtr atom_a() { return make_atom(kAtomBase); }
ExprPtr atom_b() { return make_atom(kAtomCover); }

void require(bool cond, const char* msg) {
  if (!cond) throw error(msg);
}

long long binomial(long long n, long long k) {
  require(n >= 0 && k >= 0 && k <= n, "binomial out of range");
  long long acc = 1;
  for (long long i = 1; i <= k; ++i)
    acc = checked_mul(acc, n - k + i) / i;  // exact: i! divides i consecutive
  return acc;
}

}  // namespace

long long f_sum(long long k, long long r) {
  require(k >= 0 && r >= 0, "f(k,r) needs k >= 0, r >= 0");
  long long acc = 0, term = 1;
  for (long long i = 0; i < r; ++i) {
    acc = checked_add(acc, term);
    term = checked_mul(term, 2 * k + 1);
  }
  return acc;
}

long long g_sum(long long k, long long r) {
  require(k >= 0 && r >= 0, "g(k,r) needs k >= 0, r >= 0");
  long long acc = 0, term = 1;
  for (long long i = 0; i < r; ++i) {
    acc = checked_add(acc, term);
    term = checked_mul(term, 2 * k + 2);
  }
  return acc;
}

long long f_closed(long long k, long long r) {
  require(k >= 0 && r >= 0, "f(k,r) needs k >= 0, r >= 0");
  if (k == 0) return r;
  return (checked_pow(2 * k + 1, r) - 1) / (2 * k);
}

long long g_closed(long long k, long long r) {
  require(k >= 0 && r >= 0, "g(k,r) needs k >= 0, r >= 0");
  return (checked_pow(2 * k + 2, r) - 1) / (2 * k + 1);
}

bool identity_f_closed(long long k, long long r) {
  if (k > 0 && (checked_pow(2 * k + 1, r) - 1) % (2 * k) != 0) return false;
  return f_sum(k, r) == f_closed(k, r);
}

bool identity_g_closed(long long k, long long r) {
  if ((checked_pow(2 * k + 2, r) - 1) % (2 * k + 1) != 0) return false;
  return g_sum(k, r) == g_closed(k, r);
}

bool identity_f_partial_sum(long long k, long long r) {
  long long lhs = 0;
  for (long long i = 1; i < r; ++i) lhs = checked_add(lhs, f_sum(k, i));
  lhs = checked_mul(k, lhs);
  long long diff = f_sum(k, r) - r;
  return diff % 2 == 0 && lhs == diff / 2;
}

bool identity_g_shift(long long k, long long r) {
  long long lhs = checked_mul(k + 1, g_sum(k, r));
  long long diff = g_sum(k, r + 1) - 1;
  return diff % 2 == 0 && lhs == diff / 2;
}

ExprPtr mycielskian_expr(long long l) {
  require(l >= 0, "mycielskian level must be nonnegative");
  long long k = l / 3;
  switch (l % 3) {
    case 0:
      return make_wedge({make_join({atom_a(), join_power(atom_b(), k)}),
                         make_susp(join_power(atom_b(), k), 1)});
    case 1:
      return make_susp(make_join({atom_a(), join_power(atom_b(), k)}), 1);
    default:
      return join_power(atom_b(), k + 1);
  }
}

ExprPtr cover_mycielskian_expr(long long l, CoverVariant v) {
  require(l >= 0, "mycielskian level must be nonnegative");
  long long k = l / 3;
  switch (l % 3) {
    case 0:
      return make_wedge({join_power(atom_b(), 2 * k + 1),
                         make_susp(join_power(atom_b(), 2 * k), 2)});
    case 1:
      return make_susp(join_power(atom_b(), 2 * k + 1), 1);
    default:
      return make_susp(join_power(atom_b(), 2 * k + 2),
                       v == CoverVariant::Printed ? 2 : 1);
  }
}

ExprPtr iterated_cover_expr(long long l, long long r, CoverVariant v) {
  require(r >= 0, "iteration count must be nonnegative");
  if (r == 0) return atom_b();
  std::map<std::string, ExprPtr> subst{
      {kAtomCover, iterated_cover_expr(l, r - 1, v)}};
  return substitute(cover_mycielskian_expr(l, v), subst);
}

ExprPtr iterated_expr(long long l, long long r, CoverVariant v) {
  require(r >= 0, "iteration count must be nonnegative");
  if (r == 0) return atom_a();
  std::map<std::string, ExprPtr> subst{
      {kAtomBase, iterated_expr(l, r - 1, v)},
      {kAtomCover, iterated_cover_expr(l, r - 1, v)}};
  return substitute(mycielskian_expr(l), subst);
}

ExprPtr iterated_cover_closed_expr(long long l, long long r, CoverVariant v) {
  require(r >= 0, "iteration count must be nonnegative");
  long long k = l / 3;
  switch (l % 3) {
    case 1:
      return make_susp(join_power(atom_b(), checked_pow(2 * k + 1, r)),
                       f_sum(k, r));
    case 2: {
      long long susp = g_sum(k, r);
      if (v == CoverVariant::Printed) susp = checked_mul(2, susp);
      return make_susp(join_power(atom_b(), checked_pow(2 * k + 2, r)), susp);
    }
    default:
      throw error("no closed cover form for l = 0 (mod 3)");
  }
}

ExprPtr iterated_closed_expr(long long l, long long r, ClosedReading reading) {
  require(r >= 1, "closed iterated form needs r >= 1");
  long long k = l / 3;
  switch (l % 3) {
    case 1: {
      long long f = f_sum(k, r);
      require((f - r) % 2 == 0, "f(k,r) - r must be even");
      long long half = (f - r) / 2;
      long long susp, power;
      switch (reading) {
        case ClosedReading::PrintedTimesFPlusOne:
          susp = checked_add(2 * (r - 1), half);
          power = checked_add(checked_mul(k, f), 1);
          break;
        case ClosedReading::PrintedTimesFPlusOneInside:
          susp = checked_add(2 * (r - 1), half);
          power = checked_mul(k, checked_add(f, 1));
          break;
        default:
          susp = checked_add(r, half);
          power = checked_mul(k, f);
          break;
      }
      return make_susp(make_join({atom_a(), join_power(atom_b(), power)}),
                       susp);
    }
    case 2: {
      long long g_here = g_sum(k, r);
      long long g_next = g_sum(k, r + 1);
      require((g_here - 1) % 2 == 0 && (g_next - 1) % 2 == 0,
              "g(k,r) - 1 must be even");
      long long susp = reading == ClosedReading::Derived ? (g_here - 1) / 2
                                                         : (g_next - 1) / 2;
      long long power =
          checked_mul(k + 1, checked_pow(2 * k + 2, r - 1));
      return make_susp(join_power(atom_b(), power), susp);
    }
    default:
      throw error("no closed iterated form for l = 0 (mod 3)");
  }
}

ExprPtr mu0_iterated_expr(long long r) {
  require(r >= 0, "iteration count must be nonnegative");
  std::vector<ExprPtr> parts{atom_a()};
  for (long long i = 0; i < r; ++i) parts.push_back(make_sphere(0));
  return make_wedge(std::move(parts));
}

ExprPtr mu1_iterated_expr(long long r) {
  require(r >= 0, "iteration count must be nonnegative");
  return make_susp(atom_a(), r);
}

ExprPtr bipartite_expr(long long l) {
  std::map<std::string, ExprPtr> subst{
      {kAtomCover, make_join({atom_a(), atom_a()})}};
  return substitute(mycielskian_expr(l), subst);
}

ExprPtr two_step_display_expr(long long k, bool derived) {
  require(k >= 0, "k must be nonnegative");
  std::vector<ExprPtr> parts;
  parts.push_back(
      make_join({atom_a(), join_power(atom_b(), 3 * k + 1)}));
  parts.push_back(
      make_susp(make_join({atom_a(), join_power(atom_b(), 3 * k)}), 2));
  parts.push_back(make_susp(join_power(atom_b(), 3 * k + 1), 1));
  parts.push_back(make_susp(join_power(atom_b(), 3 * k), 3));
  for (long long i = 0; i <= k; ++i) {
    long long q = derived ? 2 * k * k + k - i : k * k + k - i;
    long long copies = binomial(k, i);
    for (long long c = 0; c < copies; ++c)
      parts.push_back(make_susp(join_power(atom_b(), q), 2 * i + 1));
  }
  return make_wedge(std::move(parts));
}

SphereWedge kn_formula(long long n, long long l) {
  require(n >= 2, "kn formula needs n >= 2");
  require(l >= 0, "mycielskian level must be nonnegative");
  long long k = l / 3;
  if (l % 3 == 0)
    return SphereWedge::sphere(static_cast<int>(2 * k),
                               checked_mul(n, checked_pow(n - 1, k)));
  return SphereWedge::sphere(static_cast<int>(2 * k + 1),
                             checked_pow(n - 1, k + 1));
}

SphereWedge knkm_formula(long long n, long long m, long long l) {
  require(n >= 2 && m >= 2, "knkm formula needs n, m >= 2");
  require(l >= 0, "mycielskian level must be nonnegative");
  long long prod = checked_mul(checked_mul(n - 1, m - 1),
                               checked_mul(n, m) - 2);
  require(prod % 2 == 0, "sphere count (n-1)(m-1)(nm-2) must be even");
  long long w = prod / 2;
  long long k = l / 3;
  switch (l % 3) {
    case 0: {
      SphereWedge first = SphereWedge::sphere(
          static_cast<int>(4 * k + 1),
          checked_mul(checked_mul(n - 1, m - 1), checked_pow(w, k)));
      SphereWedge second =
          SphereWedge::sphere(static_cast<int>(4 * k), checked_pow(w, k));
      return SphereWedge::wedge(first, second);
    }
    case 1:
      return SphereWedge::sphere(
          static_cast<int>(4 * k + 2),
          checked_mul(checked_mul(n - 1, m - 1), checked_pow(w, k)));
    default:
      return SphereWedge::sphere(static_cast<int>(4 * k + 3),
                                 checked_pow(w, k + 1));
  }
}

SphereWedge cn_formula(long long n, long long l, CnVariant v) {
  require(n >= 3, "cn formula needs n >= 3");
  require(l >= 1, "cn formula needs l >= 1");
  long long r = n / 6;
  long long s = n % 6;
  long long k = l / 3;
  long long rem = l % 3;

  // Each cell is one or two (dimension, count) pairs in (r, k).
  std::vector<std::pair<long long, long long>> cell;
  auto two = [&](long long d1, long long c1, long long d2, long long c2) {
    cell = {{d1, c1}, {d2, c2}};
  };
  auto one = [&](long long d, long long c) { cell = {{d, c}}; };
  long long p2 = 2;  // base for the power-of-two counts

  switch (s) {
    case 0:  // n = 6r
      if (rem == 0)
        two(2 * r * (2 * k + 1) - 1, checked_pow(p2, 2 * k + 1),
            4 * r * k, checked_pow(p2, 2 * k));
      else if (rem == 1)
        one(2 * r * (2 * k + 1), checked_pow(p2, 2 * k + 1));
      else
        one(4 * r * (k + 1) - 1, checked_pow(p2, 2 * k + 2));
      break;
    case 1:  // n = 6r+1
      if (rem == 0)
        two(2 * r * (2 * k + 1) + k - 1, 1, k * (4 * r + 1), 1);
      else if (rem == 1)
        one(2 * r * (2 * k + 1) + k, 1);
      else
        one(v == CnVariant::Printed ? (4 * r + 1) * (k + 1) + k
                                    : 4 * r * (k + 1) + k,
            1);
      break;
    case 2:
    case 4:  // n = 6r+2 and 6r+4 share one formula pair
      if (rem == 0)
        two((2 * r + 1) * (2 * k + 1) - 1, 1, k * (4 * r + 2), 1);
      else if (rem == 1)
        one((2 * r + 1) * (2 * k + 1), 1);
      else
        one((k + 1) * (4 * r + 1) + k, 1);
      break;
    case 3:  // n = 6r+3
      if (rem == 0)
        two((2 * r + 1) * (2 * k + 1) - 1, checked_pow(p2, k + 1),
            (4 * r + 1) * k + k, checked_pow(p2, k));
      else if (rem == 1)
        one((2 * r + 1) * (2 * k + 1), checked_pow(p2, k + 1));
      else
        one((4 * r + 1) * (k + 1) + k, checked_pow(p2, k + 1));
      break;
    default:  // n = 6r+5
      if (rem == 0)
        two((2 * r + 1) * (2 * k + 1) + k, 1, k * (4 * r + 3), 1);
      else if (rem == 1)
        one((2 * r + 1) * (2 * k + 1) + k + 1, 1);
      else
        one((4 * r + 2) * (k + 1) + k, 1);
      break;
  }

  SphereWedge out = SphereWedge::contractible();
  for (const auto& [d, c] : cell)
    out = SphereWedge::wedge(out, SphereWedge::sphere(static_cast<int>(d), c));
  return out;
}

SphereWedge pn_formula(long long n, long long l, PnVariant v) {
  require(n >= 1, "pn formula needs n >= 1");
  require(l >= 0, "mycielskian level must be nonnegative");
  long long k = l / 3;
  long long rem = l % 3;
  if (n % 3 == 1) {
    // Printed: contractible for every l. Derived: the l = 0 cone adds a
    // disjoint point to a contractible complex, giving S^0.
    if (v == PnVariant::Derived && l == 0) return SphereWedge::sphere(0);
    return SphereWedge::contractible();
  }
  long long r = (n + 1) / 3;  // n = 3r or 3r - 1
  if (rem == 0) {
    long long first = (2 * k + 1) * r - 1;
    long long second = v == PnVariant::Printed ? k * r + 1 : 2 * k * r;
    return SphereWedge::wedge(
        SphereWedge::sphere(static_cast<int>(first)),
        SphereWedge::sphere(static_cast<int>(second)));
  }
  if (rem == 1)
    return SphereWedge::sphere(static_cast<int>((2 * k + 1) * r));
  return SphereWedge::sphere(static_cast<int>(2 * (k + 1) * r - 1));
}

const char* formula_name(FormulaId id) {
  switch (id) {
    case FormulaId::MainMu: return "main-mu";
    case FormulaId::CoverMu: return "cover-mu";
    case FormulaId::Iter: return "iter";
    case FormulaId::IterClosed: return "iter-closed";
    case FormulaId::IterCover: return "iter-cover";
    case FormulaId::Mu01: return "mu01";
    case FormulaId::Bipartite: return "bipartite";
    case FormulaId::Kn: return "kn";
    case FormulaId::Knkm: return "knkm";
    case FormulaId::Cn: return "cn";
    case FormulaId::Pn: return "pn";
  }
  return "unknown";
}

std::optional<FormulaId> formula_from_name(const std::string& name) {
  static const std::map<std::string, FormulaId> table{
      {"main-mu", FormulaId::MainMu},   {"cover-mu", FormulaId::CoverMu},
      {"iter", FormulaId::Iter},        {"iter-closed", FormulaId::IterClosed},
      {"iter-cover", FormulaId::IterCover}, {"mu01", FormulaId::Mu01},
      {"bipartite", FormulaId::Bipartite},  {"kn", FormulaId::Kn},
      {"knkm", FormulaId::Knkm},        {"cn", FormulaId::Cn},
      {"pn", FormulaId::Pn},
  };
  auto it = table.find(name);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

}  // namespace myc::formulas
