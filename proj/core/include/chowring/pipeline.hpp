#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "chowring/graded_ideal.hpp"
#include "chowring/localize.hpp"
#include "chowring/symchern.hpp"

namespace chowring {

/// One replayable pipeline step.
struct ProvenanceStep {
  std::string operation;
  /// The mathematical fact the step relies on.
  std::string justification;
  nlohmann::json arguments;
};

/// Outcome of one equal_up_to certification attached to a presentation.
struct VerificationRecord {
  std::string name;
  int degree_bound = 0;
  bool passed = false;
  /// Informational checks are recorded but never fail a run.
  bool informational = false;
  GradedIdeal expected;
  IdealComparison comparison;
};

/// Z[variables] / relations.
struct RingPresentation {
  GradedIdeal relations;
  std::vector<Polynomial> simplified;
  std::vector<ProvenanceStep> provenance;
  std::vector<VerificationRecord> verification;

  const std::vector<Variable>& variables() const { return relations.ambient(); }
  /// True when every non-informational verification passed.
  bool verified() const;
};

/// Raised by require_verified; carries the failing presentation.
class VerificationFailure : public ChowError {
 public:
  explicit VerificationFailure(RingPresentation presentation);
  const RingPresentation& presentation() const { return presentation_; }

 private:
  RingPresentation presentation_;
};

void require_verified(const RingPresentation& presentation);

enum class PushforwardRoute { kLocalization, kClosedForm };

std::vector<Variable> chern_variables(int n);

/// A*(P(V)) = A*[var] / (c_top(V (x) O(1))) written in c_1..c_n.
RingPresentation projective_bundle(const RepRoots& module, Variable var = Variable::hyperplane());

/// Appends i_* K^r, r = 0..n-1, for the Veronese embedding.
RingPresentation excise_veronese(RingPresentation presentation, int n,
                                 PushforwardRoute route = PushforwardRoute::kLocalization);

/// Substitutes H -> k c_1, drops H from the ring and zero relations.
RingPresentation torsor_quotient(RingPresentation presentation, int k);

/// Replaces the relations by simplify_generators(relations, bound).
RingPresentation simplify_relations(RingPresentation presentation, int bound);

/// Fills `simplified` without changing the relations.
RingPresentation record_simplified(RingPresentation presentation, int bound);

/// Runs a recorded provenance log from scratch.
RingPresentation replay(const std::vector<ProvenanceStep>& steps);

struct PipelineOptions {
  /// Overrides the verification degree bound of the pipeline.
  std::optional<int> max_degree;
};

/// Literal target of the rational-curve pipeline: (4c3, 2c1c3, c1^2 c3).
GradedIdeal m01_expected_ideal();
int m01_default_bound();
RingPresentation m01(const PipelineOptions& options = {});

/// {2^{n-1-r} (k c_1)^r e_{k,n}}_{r=0..n-1}
std::vector<Polynomial> reduced_quadrics_family(int n, int k);
int reduced_quadrics_default_bound(int n);
RingPresentation reduced_quadrics(int n, int k, const PipelineOptions& options = {});

struct AlphaFamily {
  int n = 0;
  /// alpha_1(H), ..., alpha_n(H)
  std::vector<Polynomial> alphas;
};

AlphaFamily alpha_family(int n);

/// Graded components beta'_1..beta'_n of
/// (sum_j (-1)^j c_j (1+H)^{n-j}) / (1 + c_1 + ... + c_n).
std::vector<Polynomial> chern_series_divide(int n);

/// Graded components P_0..P_n of sum_j (-1)^j c_j (1+H)^{n-j}.
std::vector<Polynomial> twisted_dual_chern_series(int n);

int orthogonal_default_bound(int n);
RingPresentation orthogonal(int n, int k, const PipelineOptions& options = {});

}  // namespace chowring
