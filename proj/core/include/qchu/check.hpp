#pragma once

#include <string>
#include <vector>

namespace qchu {

enum class AxiomId {
  // order_core
  BoundedComplete,
  StrongAtomicity,
  RelativeComplement,
  LowerSemimodular,
  CondUpperSemimodular,
  CondModular,
  Atomistic,
  NoType2,
  JoinContinuity,  // REPORT mode (conjecture)
  ChainComplete,   // trivial on finite posets
  DirectedComplete,
  MeetContinuous,
  Algebraic,
  // chu_core
  BiExtensional,
  // measurement
  ScottIdeal,
  MinimalEqQuasiClassical,
  Specker,  // REPORT mode
  CoherenceDownward,
  CoherenceSingleton,
  CoherenceUnion,  // REPORT mode (rests on the Specker equivalence)
  FilterMeetPreservation,  // REPORT mode
  PerfectDiscriminating,   // REPORT mode (conjecture)
  // ortho_hilbert
  SchemeComplete,
  SchemeIrredundant,
  SchemeClosed,
  SchemeDiscriminating,
  StarInvolution,
  StarOrderReversing,
  StarDeMorgan,
  PerpClosure,
  UniquePair,
  CompleteOrtholattice,
  Atomic,
  LatticeAtomistic,
  Orthomodular,
  Covering,
  Exchange,
  Irreducible,
  KripkeSeparation,
  KripkeRepresentation,
  KripkeSuperposition,
  // symmetry
  ChuMorphism,
  CenterDot,
  SuccessionPreserved,
  Injective,
  Surjective,
  SchemePreserved,
  MinimalityPreserved,
  BarStarPreserved,
  OrthogonalityPreserved,
  InducedOrthoMorphism
};

std::string axiom_name(AxiomId id);

enum class Verdict { Pass, Fail, TrivialFinite };

/// Outcome of one executable check. `witness` names the elements exhibiting a
/// violation; it is non-empty exactly when verdict == Fail. Checks flagged
/// `report_mode` never gate a run: a Fail there is a recorded discrepancy.
struct CheckResult {
  AxiomId id;
  Verdict verdict = Verdict::Pass;
  std::vector<std::string> witness;
  std::string detail;
  bool report_mode = false;

  bool ok() const { return verdict != Verdict::Fail; }

  static CheckResult pass(AxiomId id, std::string detail = "") {
    return CheckResult{id, Verdict::Pass, {}, std::move(detail), false};
  }
  static CheckResult fail(AxiomId id, std::vector<std::string> witness,
                          std::string detail = "") {
    return CheckResult{id, Verdict::Fail, std::move(witness), std::move(detail), false};
  }
  static CheckResult trivial(AxiomId id, std::string detail = "trivially satisfied (finite)") {
    return CheckResult{id, Verdict::TrivialFinite, {}, std::move(detail), false};
  }
  CheckResult as_report() const {
    CheckResult r = *this;
    r.report_mode = true;
    return r;
  }
};

}  // namespace qchu
