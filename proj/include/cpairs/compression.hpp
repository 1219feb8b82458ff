#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cpairs/family.hpp"
#include "cpairs/graded_poset.hpp"

namespace cpairs {

/// One state-to-state transform step.
struct CompressStep {
  explicit CompressStep(Family f) : family(std::move(f)) {}

  Family family;
  int a = 0;  // rank of the removed elements
  int b = 0;  // rank of the added elements
  std::string case_label;
  std::vector<std::pair<ElementId, ElementId>> swapped;  // (removed, added)
  Count comp_before = 0;
  Count comp_after = 0;
  long long potential_before = 0;  // twice_potential
  long long potential_after = 0;
  int shrink_iterations = 0;
};

/// {A^c : A in F} on a chain product.
Family complement_family(const Family& f);

/// Violations of (T): A in F, |A| > n, B <= A with n <= |B| < |A|, B not in F.
bool is_top_compressed(const Family& f);
/// Violations of (B), the dual condition.
bool is_bottom_compressed(const Family& f);

/// nullopt when (T) already holds. k = 2 only.
std::optional<CompressStep> top_compress_step(const Family& f);
std::optional<CompressStep> bottom_compress_step(const Family& f);

struct ThreeCompressViolation {
  int condition = 1;  // 1 for (C1), 2 for (C2)
  ElementId a = 0;
  ElementId b = 0;
};

/// All (C1)/(C2) violations of a top- and bottom-compressed family.
std::vector<ThreeCompressViolation> three_compress_check(const Family& f);

/// One exchange repairing (C1), or (C2) through complementation. Only pairs
/// with b_0 != a_0 (resp. b_2 != a_2) are matched. When the exchange would
/// increase comp, candidate targets with members above rank n+2 are dropped
/// and the plan is rebuilt (case label gets a "/restricted" suffix).
std::optional<CompressStep> three_compress_step(const Family& f);

/// Checks that pi is an involution of {0..n-1}.
void validate_involution(const std::vector<int>& pi, int n);

/// pi applied to coordinates: result[pi[i]] = coords[i].
ElementId permute(const ChainProductPoset& p, ElementId e, const std::vector<int>& pi);

/// G plus {pi(A^c) : A in G_l} minus {A in G_l : pi(A^c) not in G_h}, h = 2n - l.
/// Requires k = 2, l < n, G inside ranks [l, h] and every rank strictly
/// between l and h full.
Family pi_compress(const Family& g, const std::vector<int>& pi, int low_rank);

/// Members A and non-members B, comparable, with B strictly nearer the middle.
bool is_mid_compressed(const Family& f);

/// One improving step of the generic centering argument. Throws
/// UnsupportedError unless the caller asserts Property (Q).
std::optional<CompressStep> mid_compress_step(const Family& f, bool property_q_asserted);

enum class CompressKind { Top, Bottom, Three, Mid };

/// Iterates a step until it reports a fixpoint. The step count is bounded by
/// the initial potential; exceeding it throws std::logic_error.
Family compress_to_fixpoint(const Family& f, CompressKind kind, std::vector<CompressStep>* trace = nullptr,
                            bool property_q_asserted = false);

}  // namespace cpairs
