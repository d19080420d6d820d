#pragma once

// Hardy's two-interferometer setup written with spin-half kets, and the
// report evaluating its propositions under each semantics.
//
// Two-particle basis order: O^A O^B, O^A N^B, N^A O^B, N^A N^B.

#include <array>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qsem/linalg.hpp"
#include "qsem/projector.hpp"
#include "qsem/semantics.hpp"

namespace qsem::hardy {

struct HardyScenario {
  // Single-particle kets (same form for A and B).
  ExactVector ket_o;   // overlapping arm
  ExactVector ket_n;   // non-overlapping arm
  ExactVector ket_d1;  // dark detector, |O> - |N>
  ExactVector ket_d2;  // bright detector, |O> + |N>

  Projector p_oa, p_na, p_ob, p_nb;
  Projector p_d1a, p_d2a, p_d1b, p_d2b;
  Projector p_o;   // both particles in the overlapping arms
  Projector p_d1;  // both dark detectors click
  Projector p_d2;

  State psi_not_o;  // initial state, (0,1,1,1) up to scale
  State psi_d1;     // final state after simultaneous D1 clicks
};

inline constexpr std::array<const char*, 4> kBasisLabels = {"OA(x)OB", "OA(x)NB", "NA(x)OB",
                                                             "NA(x)NB"};

namespace detail {
inline void require(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("Hardy scenario invariant violated: ") + what);
}
}  // namespace detail

inline HardyScenario build_scenario() {
  ExactVector o{1, 0};
  ExactVector n{0, 1};
  ExactVector d1 = o - n;
  ExactVector d2 = o + n;

  Projector p_oa = from_ket(o, "O^A");
  Projector p_na = from_ket(n, "N^A");
  Projector p_ob = from_ket(o, "O^B");
  Projector p_nb = from_ket(n, "N^B");
  Projector p_d1a = from_ket(d1, "D1^A");
  Projector p_d2a = from_ket(d2, "D2^A");
  Projector p_d1b = from_ket(d1, "D1^B");
  Projector p_d2b = from_ket(d2, "D2^B");

  // b = c = d = 1
  ExactVector not_o = kronecker(o, n) + kronecker(n, o) + kronecker(n, n);

  HardyScenario s{
      o,
      n,
      d1,
      d2,
      p_oa,
      p_na,
      p_ob,
      p_nb,
      p_d1a,
      p_d2a,
      p_d1b,
      p_d2b,
      tensor(p_oa, p_ob).relabeled("O"),
      tensor(p_d1a, p_d1b).relabeled("D1"),
      tensor(p_d2a, p_d2b).relabeled("D2"),
      State(not_o, "Psi_notO"),
      State(kronecker(d1, d1), "Psi_D1"),
  };

  detail::require(in_kernel(s.p_o, s.psi_not_o), "Psi_notO must lie in ker(P_O)");
  detail::require(in_range(s.p_d1, s.psi_d1), "Psi_D1 must lie in ran(P_D1)");
  detail::require(s.p_d1a.matrix() + s.p_d2a.matrix() == ExactMatrix::identity(2),
                  "P_D1A + P_D2A must resolve the identity");
  return s;
}

struct IncomparabilityWitness {
  SubspaceRelation ker_o_vs_ran_d1;
  SubspaceRelation ker_o_vs_ker_d1;
};

/// Relation of ker(P_O) to ran(P_D1) and to ker(P_D1).
inline IncomparabilityWitness incomparability_witness(const HardyScenario& s) {
  SubspaceBasis ker_o = kernel_basis(s.p_o);
  return {compare(ker_o, range_basis(s.p_d1)), compare(ker_o, kernel_basis(s.p_d1))};
}

struct WhichWayEntry {
  std::string arms;  // "OO", "ON", "NO", "NN" for (A arm, B arm)
  Scalar weak_value;
};

/// Weak values of the four arm-pair projectors, pre-selected in Psi_notO
/// and post-selected in Psi_D1. They sum to 1.
inline std::vector<WhichWayEntry> which_way_table(const HardyScenario& s) {
  const std::array<std::pair<const Projector*, char>, 2> a_arms{{{&s.p_oa, 'O'}, {&s.p_na, 'N'}}};
  const std::array<std::pair<const Projector*, char>, 2> b_arms{{{&s.p_ob, 'O'}, {&s.p_nb, 'N'}}};
  std::vector<WhichWayEntry> out;
  for (const auto& [pa, xa] : a_arms)
    for (const auto& [pb, xb] : b_arms)
      out.push_back({std::string{xa, xb}, weak_value(tensor(*pa, *pb), s.psi_not_o, s.psi_d1)});
  return out;
}

struct ClassicalChain {
  /// Valuation equalities assumed classically, in derivation order.
  std::vector<std::string> premises;
  TruthValue o_initial;  // [[O]] in Psi_notO
  bool o_is_false;
  Rational classical_conclusion;  // P[[[D1]] = 1] forced by [[D1]] = [[O]] = 0
  Rational quantum_value;         // Born degree of D1 in Psi_notO
  bool contradiction;             // classical conclusion != quantum value
};

struct SupervaluationistSection {
  TruthValue o_initial;   // O in Psi_notO
  TruthValue d1_final;    // D1 in Psi_D1
  TruthValue d1_initial;  // D1 in Psi_notO
  TruthValue o_final;     // O in Psi_D1
  IncomparabilityWitness incomparability;
  /// O false and D1 gappy in Psi_notO, with a nonzero Born degree for D1.
  bool gap_allows_nonzero_probability;
};

struct ManyValuedSection {
  TruthValue d1_initial;
  TruthValue o_final;
};

struct WeakSection {
  TruthValue d1;  // pre Psi_notO, post Psi_D1
  TruthValue o;   // pre Psi_D1, post Psi_notO
  /// [[O]] = 0 in Psi_notO, yet the weak value of D1 is nonzero.
  bool o_false_does_not_force_d1_zero;
  /// [[D1]] = 1 in Psi_D1, yet the weak value of O is zero.
  bool d1_nonzero_does_not_force_o_nonzero;
};

struct ParadoxReport {
  ClassicalChain classical_chain;
  SupervaluationistSection supervaluationist;
  ManyValuedSection many_valued;
  WeakSection weak;
  std::vector<WhichWayEntry> which_way;
  Scalar which_way_total;
};

inline ParadoxReport paradox_report(const HardyScenario& s) {
  ParadoxReport r{};

  auto& chain = r.classical_chain;
  chain.premises = {"[[D1^B]] = [[O^A]]", "[[D1^A]] = [[O^B]]", "[[D1]] = [[O]]"};
  chain.o_initial = supervaluate(s.p_o, s.psi_not_o);
  chain.o_is_false = chain.o_initial.kind() == TruthKind::ClassicalFalse;
  // [[O]] = 0 and [[D1]] = [[O]] give [[D1]] = 0, hence P = 0 by the bridge.
  chain.classical_conclusion = Rational(0);
  chain.quantum_value = born_degree(s.p_d1, s.psi_not_o);
  chain.contradiction = chain.o_is_false && chain.classical_conclusion != chain.quantum_value;

  auto& sv = r.supervaluationist;
  sv.o_initial = chain.o_initial;
  sv.d1_final = supervaluate(s.p_d1, s.psi_d1);
  sv.d1_initial = supervaluate(s.p_d1, s.psi_not_o);
  sv.o_final = supervaluate(s.p_o, s.psi_d1);
  sv.incomparability = incomparability_witness(s);
  sv.gap_allows_nonzero_probability = chain.o_is_false &&
                                      sv.d1_initial.kind() == TruthKind::Gap &&
                                      probability_bridge_check(s.p_d1, s.psi_not_o) &&
                                      chain.quantum_value != 0;

  r.many_valued.d1_initial = many_valued(s.p_d1, s.psi_not_o);
  r.many_valued.o_final = many_valued(s.p_o, s.psi_d1);

  auto& weak = r.weak;
  weak.d1 = weak_valued(s.p_d1, s.psi_not_o, s.psi_d1);
  weak.o = weak_valued(s.p_o, s.psi_d1, s.psi_not_o);
  weak.o_false_does_not_force_d1_zero =
      chain.o_is_false && weak.d1.value().has_value() && !weak.d1.value()->is_zero();
  weak.d1_nonzero_does_not_force_o_nonzero =
      sv.d1_final.kind() == TruthKind::ClassicalTrue && weak.o.value().has_value() &&
      weak.o.value()->is_zero();

  r.which_way = which_way_table(s);
  for (const auto& e : r.which_way) r.which_way_total += e.weak_value;
  return r;
}

}  // namespace qsem::hardy
