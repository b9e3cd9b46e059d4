#include "mvtop/term.hpp"

#include <algorithm>

namespace mvtop {

Term Term::var(std::size_t index) {
  Term t;
  t.nodes_.push_back(Node{Op::var, index, 0, 0});
  return t;
}

Term Term::combine(Op op, const Term& left, const Term& right) {
  if (op == Op::var) throw InputError("combine needs a binary operation");
  Term t;
  t.nodes_ = left.nodes_;
  const std::size_t offset = t.nodes_.size();
  for (Node n : right.nodes_) {
    if (n.op != Op::var) {
      n.left += offset;
      n.right += offset;
    }
    t.nodes_.push_back(n);
  }
  t.nodes_.push_back(Node{op, 0, left.root(), offset + right.root()});
  return t;
}

std::size_t Term::depth() const {
  std::vector<std::size_t> d(nodes_.size(), 0);
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i].op != Op::var) {
      d[i] = 1 + std::max(d[nodes_[i].left], d[nodes_[i].right]);
    }
  }
  return d[root()];
}

std::size_t Term::arity() const {
  std::size_t a = 0;
  for (const auto& n : nodes_) {
    if (n.op == Op::var) a = std::max(a, n.var + 1);
  }
  return a;
}

std::string Term::to_string() const {
  std::vector<std::string> text(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const Node& n = nodes_[i];
    switch (n.op) {
      case Op::var:
        text[i] = "v" + std::to_string(n.var);
        break;
      case Op::oplus:
        text[i] = "(" + text[n.left] + " + " + text[n.right] + ")";
        break;
      case Op::odot:
        text[i] = "(" + text[n.left] + " * " + text[n.right] + ")";
        break;
      case Op::meet:
        text[i] = "(" + text[n.left] + " & " + text[n.right] + ")";
        break;
    }
  }
  return text[root()];
}

std::vector<FuzzySet> eval_nodes(const MvAlgebra& algebra, const Term& t,
                                 std::span<const FuzzySet> args) {
  if (t.arity() > args.size()) {
    throw InputError("term " + t.to_string() + " needs " + std::to_string(t.arity()) +
                     " arguments, got " + std::to_string(args.size()));
  }
  for (const auto& a : args) algebra.check(a);
  const auto& nodes = t.nodes();
  std::vector<FuzzySet> value(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto& n = nodes[i];
    switch (n.op) {
      case Term::Op::var:
        value[i] = args[n.var];
        break;
      case Term::Op::oplus:
        value[i] = algebra.oplus(value[n.left], value[n.right]);
        break;
      case Term::Op::odot:
        value[i] = algebra.odot(value[n.left], value[n.right]);
        break;
      case Term::Op::meet:
        value[i] = algebra.meet(value[n.left], value[n.right]);
        break;
    }
  }
  return value;
}

FuzzySet eval_term(const MvAlgebra& algebra, const Term& t,
                   std::span<const FuzzySet> args) {
  return eval_nodes(algebra, t, args)[t.root()];
}

std::size_t term_witness(const MvAlgebra& algebra, const Term& t,
                         std::span<const FuzzySet> args, std::size_t a,
                         const Family& m) {
  if (a >= algebra.points()) throw InputError("witness point outside the carrier");
  if (!is_ideal(algebra, m)) throw PreconditionError("M is not an ideal");
  const auto value = eval_nodes(algebra, t, args);
  std::size_t node = t.root();
  if (!m.contains(value[node])) throw PreconditionError("term value is not in M");
  if (value[node][a] == 0) throw PreconditionError("term value vanishes at the point");

  const auto& nodes = t.nodes();
  while (nodes[node].op != Term::Op::var) {
    const std::size_t l = nodes[node].left;
    const std::size_t r = nodes[node].right;
    bool take_l, take_r;
    if (nodes[node].op == Term::Op::oplus) {
      take_l = value[l][a] > 0;
      take_r = value[r][a] > 0;
    } else {
      take_l = m.contains(value[l]);
      take_r = m.contains(value[r]);
      if (!take_l && !take_r) {
        throw PreconditionError("neither operand of " + t.to_string() +
                                " at node " + std::to_string(node) + " lies in M");
      }
    }
    if (take_l && take_r) {
      node = value[r] < value[l] ? r : l;
    } else {
      node = take_l ? l : r;
    }
  }
  const std::size_t j = nodes[node].var;
  if (!m.contains(args[j]) || args[j][a] == 0) {
    throw std::logic_error("term witness violates its postcondition");
  }
  return j;
}

}  // namespace mvtop
