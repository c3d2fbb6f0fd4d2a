#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "myc/sphere_wedge.hpp"

namespace myc {

enum class ExprKind { Atom, Sphere, Contractible, Wedge, Join, Susp };

struct HomotopyExpr;
using ExprPtr = std::shared_ptr<const HomotopyExpr>;

/// Immutable homotopy-type expression. Atoms stand for the (unknown) type of
/// a named space and are bound to concrete wedges of spheres at evaluation
/// time; everything else is the closure of spheres under wedge, join and
/// iterated suspension.
struct HomotopyExpr {
  ExprKind kind;
  std::string atom;               // Atom
  int dim = 0;                    // Sphere
  long long susp_count = 0;       // Susp
  std::vector<ExprPtr> children;  // Wedge/Join: >= 1; Susp: exactly 1
};

ExprPtr make_atom(std::string name);
ExprPtr make_sphere(int dim);
ExprPtr make_contractible();
ExprPtr make_wedge(std::vector<ExprPtr> children);
ExprPtr make_join(std::vector<ExprPtr> children);
ExprPtr make_susp(ExprPtr inner, long long count);

/// inner * inner * ... (k factors). k = 0 yields the join identity, the
/// empty complex S^-1; k = 1 yields inner unchanged.
ExprPtr join_power(ExprPtr inner, long long k);

/// True when the expression contains no atoms.
bool is_closed(const ExprPtr& e);

/// Collects the distinct atom names, sorted.
std::vector<std::string> atoms_of(const ExprPtr& e);

/// Replaces atoms by expressions; atoms absent from the map are kept.
ExprPtr substitute(const ExprPtr& e,
                   const std::map<std::string, ExprPtr>& subst);

/// Full evaluation to a wedge of spheres. Unbound atoms raise
/// unbound_atom_error; an evaluation step that would wedge the empty
/// complex with anything raises invalid_wedge_error.
SphereWedge evaluate(const ExprPtr& e,
                     const std::map<std::string, SphereWedge>& bindings = {});

/// Structural simplification: flattens nested wedges/joins, removes
/// identity elements, absorbs contractible join factors, merges suspension
/// towers, and collapses every closed subtree to its sphere-wedge normal
/// form. evaluate(simplify(e), b) == evaluate(e, b) for all bindings b.
ExprPtr simplify(const ExprPtr& e);

/// Grammar-exact rendering: pt | empty | S(d) | X | wedge(...) | join(...)
/// | susp(e, r). Output parses back to a structurally equal expression.
std::string expr_to_string(const ExprPtr& e);

/// Parses the grammar above. Errors carry a character position.
ExprPtr parse_expr(const std::string& text);

}  // namespace myc
