#include "myc/homotopy.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "myc/checked.hpp"
#include "myc/errors.hpp"

namespace myc {

namespace {

ExprPtr node(HomotopyExpr e) {
  return std::make_shared<const HomotopyExpr>(std::move(e));
}

/// Canonical expression form of a concrete wedge of spheres.
ExprPtr expr_of_wedge(const SphereWedge& w) {
  w.check_valid();
  if (w.is_contractible) return make_contractible();
  std::vector<ExprPtr> parts;
  for (const auto& [d, m] : w.spheres)
    for (long long i = 0; i < m; ++i) parts.push_back(make_sphere(d));
  if (parts.size() == 1) return parts.front();
  return make_wedge(std::move(parts));
}

void collect_atoms(const ExprPtr& e, std::set<std::string>& out) {
  if (e->kind == ExprKind::Atom) {
    out.insert(e->atom);
    return;
  }
  for (const auto& c : e->children) collect_atoms(c, out);
}

}  // namespace

ExprPtr make_atom(std::string name) {
  if (name.empty()) throw error("atom name must be nonempty");
  HomotopyExpr e;
  e.kind = ExprKind::Atom;
  e.atom = std::move(name);
  return node(std::move(e));
}

ExprPtr make_sphere(int dim) {
  if (dim < -1) throw error("sphere dimension below -1");
  HomotopyExpr e;
  e.kind = ExprKind::Sphere;
  e.dim = dim;
  return node(std::move(e));
}

ExprPtr make_contractible() {
  HomotopyExpr e;
  e.kind = ExprKind::Contractible;
  return node(std::move(e));
}

ExprPtr make_wedge(std::vector<ExprPtr> children) {
  if (children.empty()) throw error("wedge needs at least one operand");
  if (children.size() == 1) return children.front();
  HomotopyExpr e;
  e.kind = ExprKind::Wedge;
  e.children = std::move(children);
  return node(std::move(e));
}

ExprPtr make_join(std::vector<ExprPtr> children) {
  if (children.empty()) throw error("join needs at least one operand");
  if (children.size() == 1) return children.front();
  HomotopyExpr e;
  e.kind = ExprKind::Join;
  e.children = std::move(children);
  return node(std::move(e));
}

ExprPtr make_susp(ExprPtr inner, long long count) {
  if (count < 0) throw error("negative suspension count");
  if (count == 0) return inner;
  HomotopyExpr e;
  e.kind = ExprKind::Susp;
  e.susp_count = count;
  e.children = {std::move(inner)};
  return node(std::move(e));
}

ExprPtr join_power(ExprPtr inner, long long k) {
  if (k < 0) throw error("negative join power");
  if (k == 0) return make_sphere(-1);
  if (k == 1) return inner;
  std::vector<ExprPtr> factors(static_cast<std::size_t>(k), inner);
  return make_join(std::move(factors));
}

bool is_closed(const ExprPtr& e) {
  if (e->kind == ExprKind::Atom) return false;
  for (const auto& c : e->children)
    if (!is_closed(c)) return false;
  return true;
}

std::vector<std::string> atoms_of(const ExprPtr& e) {
  std::set<std::string> s;
  collect_atoms(e, s);
  return {s.begin(), s.end()};
}

ExprPtr substitute(const ExprPtr& e,
                   const std::map<std::string, ExprPtr>& subst) {
  switch (e->kind) {
    case ExprKind::Atom: {
      auto it = subst.find(e->atom);
      return it == subst.end() ? e : it->second;
    }
    case ExprKind::Sphere:
    case ExprKind::Contractible:
      return e;
    case ExprKind::Susp:
      return make_susp(substitute(e->children[0], subst), e->susp_count);
    case ExprKind::Wedge:
    case ExprKind::Join: {
      std::vector<ExprPtr> kids;
      kids.reserve(e->children.size());
      for (const auto& c : e->children) kids.push_back(substitute(c, subst));
      return e->kind == ExprKind::Wedge ? make_wedge(std::move(kids))
                                        : make_join(std::move(kids));
    }
  }
  throw error("unreachable expression kind");
}

SphereWedge evaluate(const ExprPtr& e,
                     const std::map<std::string, SphereWedge>& bindings) {
  switch (e->kind) {
    case ExprKind::Atom: {
      auto it = bindings.find(e->atom);
      if (it == bindings.end()) throw unbound_atom_error(e->atom);
      return it->second;
    }
    case ExprKind::Sphere:
      return SphereWedge::sphere(e->dim);
    case ExprKind::Contractible:
      return SphereWedge::contractible();
    case ExprKind::Susp:
      return SphereWedge::suspend(evaluate(e->children[0], bindings),
                                  e->susp_count);
    case ExprKind::Wedge: {
      SphereWedge acc = SphereWedge::contractible();
      for (const auto& c : e->children)
        acc = SphereWedge::wedge(acc, evaluate(c, bindings));
      return acc;
    }
    case ExprKind::Join: {
      SphereWedge acc = SphereWedge::sphere(-1);  // join identity
      for (const auto& c : e->children)
        acc = SphereWedge::join(acc, evaluate(c, bindings));
      return acc;
    }
  }
  throw error("unreachable expression kind");
}

ExprPtr simplify(const ExprPtr& e) {
  if (is_closed(e)) return expr_of_wedge(evaluate(e));
  switch (e->kind) {
    case ExprKind::Atom:
      return e;
    case ExprKind::Sphere:
    case ExprKind::Contractible:
      return e;  // closed, handled above; kept for exhaustiveness
    case ExprKind::Susp: {
      ExprPtr inner = simplify(e->children[0]);
      long long count = e->susp_count;
      while (inner->kind == ExprKind::Susp) {
        count = checked_add(count, inner->susp_count);
        inner = inner->children[0];
      }
      // A contractible interior stays contractible under suspension.
      if (inner->kind == ExprKind::Contractible) return inner;
      // The interior may have lost its atoms (e.g. absorbed by a
      // contractible join factor); collapse if it is closed now.
      if (is_closed(inner))
        return expr_of_wedge(SphereWedge::suspend(evaluate(inner), count));
      return make_susp(inner, count);
    }
    case ExprKind::Wedge: {
      std::vector<ExprPtr> kids;
      SphereWedge closed_acc = SphereWedge::contractible();
      bool have_closed = false;
      auto add = [&](auto&& self, const ExprPtr& raw) -> void {
        ExprPtr c = simplify(raw);
        if (c->kind == ExprKind::Wedge) {
          for (const auto& g : c->children) self(self, g);
          return;
        }
        if (is_closed(c)) {
          closed_acc = SphereWedge::wedge(closed_acc, evaluate(c));
          have_closed = true;
          return;
        }
        kids.push_back(c);
      };
      for (const auto& c : e->children) add(add, c);
      if (have_closed && !closed_acc.is_contractible)
        kids.push_back(expr_of_wedge(closed_acc));
      if (kids.empty()) return make_contractible();
      if (kids.size() == 1) return kids.front();
      std::stable_sort(kids.begin(), kids.end(),
                       [](const ExprPtr& a, const ExprPtr& b) {
                         return expr_to_string(a) < expr_to_string(b);
                       });
      return make_wedge(std::move(kids));
    }
    case ExprKind::Join: {
      std::vector<ExprPtr> kids;
      SphereWedge closed_acc = SphereWedge::sphere(-1);
      auto add = [&](auto&& self, const ExprPtr& raw) -> void {
        ExprPtr c = simplify(raw);
        if (c->kind == ExprKind::Join) {
          for (const auto& g : c->children) self(self, g);
          return;
        }
        if (is_closed(c)) {
          closed_acc = SphereWedge::join(closed_acc, evaluate(c));
          return;
        }
        kids.push_back(c);
      };
      for (const auto& c : e->children) add(add, c);
      if (closed_acc.is_contractible) return make_contractible();
      if (kids.empty()) return expr_of_wedge(closed_acc);
      // S^-1 is the join identity; only a nontrivial closed factor matters.
      bool identity = !closed_acc.is_contractible &&
                      closed_acc.spheres.size() == 1 &&
                      closed_acc.spheres.count(-1) == 1;
      if (!identity) kids.push_back(expr_of_wedge(closed_acc));
      std::stable_sort(kids.begin(), kids.end(),
                       [](const ExprPtr& a, const ExprPtr& b) {
                         return expr_to_string(a) < expr_to_string(b);
                       });
      if (kids.size() == 1) return kids.front();
      return make_join(std::move(kids));
    }
  }
  throw error("unreachable expression kind");
}

std::string expr_to_string(const ExprPtr& e) {
  std::ostringstream os;
  auto emit = [&](auto&& self, const ExprPtr& x) -> void {
    switch (x->kind) {
      case ExprKind::Atom:
        os << x->atom;
        return;
      case ExprKind::Sphere:
        if (x->dim == -1)
          os << "empty";
        else
          os << "S(" << x->dim << ")";
        return;
      case ExprKind::Contractible:
        os << "pt";
        return;
      case ExprKind::Susp:
        os << "susp(";
        self(self, x->children[0]);
        os << ", " << x->susp_count << ")";
        return;
      case ExprKind::Wedge:
      case ExprKind::Join: {
        os << (x->kind == ExprKind::Wedge ? "wedge(" : "join(");
        bool first = true;
        for (const auto& c : x->children) {
          if (!first) os << ", ";
          first = false;
          self(self, c);
        }
        os << ")";
        return;
      }
    }
    throw error("unreachable expression kind");
  };
  emit(emit, e);
  return os.str();
}

}  // namespace myc
