#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "tqdh/kappa.hpp"

namespace tqdh {

/// Everything a twisted quantum Drinfeld Hecke algebra depends on besides kappa.
struct PbwData {
  const GroupAction& action;
  const QMatrix& q;
  const Cocycle& alpha;
};

struct PbwViolation {
  int condition;  // 1 or 2
  int g;
  int h;          // condition 1 only, else -1
  int i, j, k;    // k is -1 for condition 1
  std::string defect;
};

struct PbwReport {
  bool condition1 = true;
  bool condition2 = true;
  std::size_t violation_count = 0;
  std::vector<PbwViolation> violations;  // at most max_violations
  [[nodiscard]] bool holds() const { return condition1 && condition2; }
};

/// Evaluates both PBW conditions exhaustively. Throws
/// ValidationError when the action does not extend to S_q(V).
PbwReport check_pbw_conditions(const KappaMap& kappa, const PbwData& data, std::size_t max_violations = 10);

/// Both conditions as rows over the unknowns kappa_g(v_i, v_j), i < j. Columns
/// follow KappaMap::coordinate.
SparseMatrix pbw_linear_system(const PbwData& data);

/// Basis of all kappa satisfying both conditions.
std::vector<KappaMap> solve_parameter_space(const PbwData& data);

/// Free-algebra word. Letters >= 0 are variables v_{letter}; letters < 0 are
/// group elements t_{-letter-1}. The identity t_1 is the empty word and is
/// dropped on construction.
struct ReductionWord {
  std::vector<int> letters;
  Cyclotomic coefficient{1};

  static int variable(int i) { return i; }
  static int group(int g) { return -g - 1; }
};

enum class Strategy { leftmost, rightmost };

using WordSum = std::map<std::vector<int>, Cyclotomic>;

/// One application of the reduction at position pos (letters pos, pos+1).
/// Returns an empty optional-like flag through `applied` when no rule matches.
WordSum reduce_at(const std::vector<int>& word, std::size_t pos, const KappaMap& kappa, const PbwData& data,
                  bool& applied);

/// Irreducible form as a sum of v_1^{m_1}...v_n^{m_n} t_g.
SkewSum normal_form_reduce(const ReductionWord& w, const KappaMap& kappa, const PbwData& data,
                           Strategy strategy = Strategy::leftmost);
SkewSum normal_form_reduce(const WordSum& sum, const KappaMap& kappa, const PbwData& data,
                           Strategy strategy = Strategy::leftmost);

struct AmbiguityOptions {
  bool group_families = true;  // t_g t_h t_k and t_g t_h v_i
  std::size_t max_witnesses = 5;
  Strategy strategy = Strategy::leftmost;
};

struct AmbiguityWitness {
  std::string family;  // "ttt", "ttv", "tvv", "vvv"
  std::vector<int> word;
  std::string difference;
};

struct AmbiguityReport {
  bool resolvable = true;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::map<std::string, std::size_t> failures_by_family;
  std::vector<AmbiguityWitness> witnesses;
};

/// Resolves every overlap ambiguity t_g t_h t_k, t_g t_h v_i, t_h v_j v_i,
/// v_k v_j v_i (i < j < k, g, h, k nontrivial) both ways and compares.
AmbiguityReport verify_ambiguities(const KappaMap& kappa, const PbwData& data, const AmbiguityOptions& options = {});

std::string word_to_string(const std::vector<int>& word, const FiniteGroup& group);

}  // namespace tqdh
