#pragma once

#include <memory>
#include <string>
#include <vector>

#include "depcalc/expression.hpp"

namespace depcalc {

class NotInclusion : public Error {
 public:
  using Error::Error;
};

class NotExpressible : public Error {
 public:
  NotExpressible(const std::string& what, Obstruction z) : Error(what), obstruction_(z) {}
  const Obstruction& obstruction() const { return obstruction_; }

 private:
  Obstruction obstruction_;
};

/// Derivation tree of a duoidal structure map between two expressions.
///
/// Leaves are Equiv coercions between equivalent expressions. Compound nodes
/// derive their endpoints from their children:
///   Compose(first, second)   first.source -> second.target
///   OtimesPar(ps)            ox(sources)  -> ox(targets)
///   TriPar(ps)               tri(sources) -> tri(targets)
///   InterchangerSubst(a,b,c,d)
///       (a.s tri b.s) ox (c.s tri d.s) -> (a.t ox c.t) tri (b.t ox d.t)
class StructureMapProof {
 public:
  enum class Kind { Equiv, Compose, OtimesPar, TriPar, InterchangerSubst };

  static StructureMapProof equiv(Expression source, Expression target);
  static StructureMapProof identity(const Expression& e) { return equiv(e, e); }
  static StructureMapProof compose(StructureMapProof first, StructureMapProof second);
  static StructureMapProof otimes_par(std::vector<StructureMapProof> parts);
  static StructureMapProof tri_par(std::vector<StructureMapProof> parts);
  static StructureMapProof interchanger(StructureMapProof a, StructureMapProof b,
                                        StructureMapProof c, StructureMapProof d);

  Kind kind() const { return kind_; }
  const std::vector<StructureMapProof>& children() const { return children_; }

  /// Source and target in normal form.
  Expression source() const;
  Expression target() const;

  /// Equiv leaves keep the expressions exactly as given.
  const Expression& raw_source() const { return source_; }
  const Expression& raw_target() const { return target_; }

  /// Number of nodes in the tree.
  std::size_t node_count() const;

 private:
  StructureMapProof(Kind kind, std::vector<StructureMapProof> children, Expression source,
                    Expression target)
      : kind_(kind), children_(std::move(children)), source_(std::move(source)),
        target_(std::move(target)) {}

  Kind kind_;
  std::vector<StructureMapProof> children_;
  Expression source_;
  Expression target_;
};

const char* kind_name(StructureMapProof::Kind kind);

/// Builds the structure map witnessing P ⊆ Q. Both must be expressible
/// (NotExpressible otherwise) and P ⊆ Q must hold (NotInclusion otherwise).
StructureMapProof derive_structure_map(const FinitePoset& p, const FinitePoset& q);

/// Checks every node: Equiv endpoints share a normal form, Compose matches
/// at the middle, parallel children have disjoint variables, and each node's
/// source poset includes into its target poset on the same variables.
bool verify_proof(const StructureMapProof& proof);

/// Indented tree, one node per line: `<Kind>: <source> => <target>`.
std::string to_string(const StructureMapProof& proof);

}  // namespace depcalc
