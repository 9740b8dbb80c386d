#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "tqdh/koszul.hpp"

namespace tqdh {

/// gamma in C_g: for each i, prod_s q_is^{gamma_s} = lambda_{g,i} or gamma_i = -1.
/// Entries of gamma are >= -1. Throws ValidationError for a non-diagonal action.
bool cg_membership(const std::vector<int>& gamma, int g, const GroupAction& action, const QMatrix& q);

struct DiagonalTriple {
  int g, r, s;
  auto operator<=>(const DiagonalTriple&) const = default;
};

/// All (g, r, s), r < s, with q_rr' q_sr' = lambda_{g,r'} for every r' outside {r, s}.
std::vector<DiagonalTriple> diagonal_constant_basis(const GroupAction& action, const QMatrix& q);

struct DiagonalKappa {
  int a;  // conjugacy class representative
  int r, s;
  KappaMap kappa;
};

/// The maps f_{r,s,a}. With a seed, coset representatives are drawn at random
/// instead of taking the least element of each coset.
std::vector<DiagonalKappa> diagonal_kappa_basis(const GroupAction& action, const QMatrix& q, const Cocycle& alpha,
                                                std::optional<std::uint64_t> seed = std::nullopt);

struct EtaFamilyElement {
  int family;                // 1..5
  std::vector<int> indices;  // (r,s), (r,s,r') or (r,s,r',s'), 0-based
  int group_element;
  CochainVector cochain;
};

/// Index of the permutation with the given cycles (0-based points) in sn.
int symmetric_element(const FiniteGroup& sn, const std::vector<std::vector<int>>& cycles);

/// The five families of constant 2-cocycles for S_n acting naturally with q = -1.
std::vector<EtaFamilyElement> eta_family_basis(const GroupPtr& sn);
std::size_t eta_family_count(int n);

/// kappa_1(v_i, v_j) = t_1 and kappa_2(v_i, v_j) = sum_{k != i,j} (t_(ijk) + t_(ikj)).
KappaMap symmetric_kappa1(const GroupPtr& sn);
KappaMap symmetric_kappa2(const GroupPtr& sn);

struct FamilyImage {
  int family;
  EtaFamilyElement representative;
  TgaElement value12;                  // image at (v_1, v_2)
  std::optional<bool> matches;         // against the closed form on all i != j, when one applies
  std::vector<std::string> mismatches;
};

struct SymmetricReport {
  int n = 0;
  bool twisted = false;
  std::size_t constant_cocycles = 0;
  std::size_t invariant_cocycles = 0;
  std::vector<KappaMap> basis;
  std::optional<bool> spans_reference;  // twisted and n >= 5 only
  std::vector<FamilyImage> images;
};

/// Expected image of eta_a at (v_i, v_j) in the twisted case, when known.
std::optional<TgaElement> expected_family_image(const GroupPtr& sn, int family, int i, int j);

/// Cohomological pipeline for S_n on C^n with q = -1 and the spin cocycle
/// (twisted) or the trivial one.
SymmetricReport symmetric_natural_classify(int n, bool twisted);

}  // namespace tqdh
