#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "mvtop/fuzzy.hpp"

namespace mvtop {

/// A term over {oplus, odot, meet} with variable leaves v0, v1, ...
///
/// Stored as a flat node array in post-order, so the root is the last
/// node and every node's children precede it.
class Term {
 public:
  enum class Op { var, oplus, odot, meet };

  struct Node {
    Op op;
    std::size_t var;    // leaf index (Op::var only)
    std::size_t left;   // child node indices (binary ops only)
    std::size_t right;

    bool operator==(const Node&) const = default;
  };

  static Term var(std::size_t index);
  static Term combine(Op op, const Term& left, const Term& right);

  const std::vector<Node>& nodes() const noexcept { return nodes_; }
  std::size_t root() const noexcept { return nodes_.size() - 1; }
  /// Node count.
  std::size_t length() const noexcept { return nodes_.size(); }
  std::size_t depth() const;
  /// One more than the largest variable index.
  std::size_t arity() const;

  std::string to_string() const;

  bool operator==(const Term&) const = default;

 private:
  Term() = default;
  std::vector<Node> nodes_;
};

inline Term operator+(const Term& a, const Term& b) {
  return Term::combine(Term::Op::oplus, a, b);
}
inline Term operator*(const Term& a, const Term& b) {
  return Term::combine(Term::Op::odot, a, b);
}
inline Term operator&(const Term& a, const Term& b) {
  return Term::combine(Term::Op::meet, a, b);
}

/// Pointwise evaluation. Throws InputError if a leaf index is not below
/// args.size().
FuzzySet eval_term(const MvAlgebra& algebra, const Term& t,
                   std::span<const FuzzySet> args);

/// Value of every node, indexed like Term::nodes().
std::vector<FuzzySet> eval_nodes(const MvAlgebra& algebra, const Term& t,
                                 std::span<const FuzzySet> args);

/// Given an ideal `m`, t(args) in m and t(args)(a) > 0, returns j with
/// args[j] in m and args[j](a) > 0.
///
/// Walks down from the root keeping "value in m and positive at a". At a
/// join-like node (oplus) both children are below the node, hence in m,
/// and one is positive at a. At meet and odot nodes both children are
/// positive at a and the walk needs one of them in m. A maximal family
/// without additive subcovers guarantees this; for an arbitrary ideal it
/// is an extra hypothesis and its failure is a PreconditionError. Ties go
/// to the child whose value is first in canonical order (left on equal
/// values). The postcondition is re-checked before returning.
std::size_t term_witness(const MvAlgebra& algebra, const Term& t,
                         std::span<const FuzzySet> args, std::size_t a,
                         const Family& m);

}  // namespace mvtop
