#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tqdh/pbw.hpp"

namespace tqdh {

/// A fixed (G, V, q, alpha) used by the cross-checks.
struct NamedInstance {
  std::string name;
  GroupPtr group;
  GroupAction action;
  QMatrix q;
  Cocycle alpha;
  [[nodiscard]] PbwData data() const { return PbwData{action, q, alpha}; }
};

NamedInstance weyl_instance(int n);
/// Z/2 acting by -1 on C^2, q = 1.
NamedInstance z2_negation_instance();
/// Z/2 x Z/2 with x = diag(-1,1), y = diag(1,-1) on C^2, q = 1; the twisted
/// version uses alpha(a,b) = (-1)^{a_2 b_1}.
NamedInstance klein_diagonal_instance(bool twisted);
/// Z/2 x Z/2 with x = diag(-1,-1,1), y = diag(1,-1,-1) on C^3, q = 1.
NamedInstance klein_diagonal3_instance(bool twisted);
NamedInstance symmetric_instance(int n, bool twisted, int q_sign = -1);

struct CriterionResult {
  int id;
  std::string title;
  bool passed;
  std::string detail;
  double seconds;
};

struct AcceptanceOptions {
  long samples = 500;       // random tuples per family in the n = 5 cover check
  std::uint64_t seed = 1;
  int random_kappas = 120;  // criterion 5
};

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {});

/// Random kappa of the kind used for the dual-oracle run: a combination of the
/// given basis, optionally perturbed by a few random coordinates.
/// mode 0: combination only; 1: random sparse map; 2: combination plus noise.
KappaMap random_kappa(const std::vector<KappaMap>& basis, int n, int group_size, std::mt19937_64& rng, int mode);

}  // namespace tqdh
