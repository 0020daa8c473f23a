#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "estrada/invariants.hpp"
#include "estrada/spectral.hpp"

namespace estrada {

/// Classical lower bounds on the spectral radius that the Estrada bounds
/// are built on, plus the Randić upper bound R <= n/2.
enum class LemmaId {
  average_degree,  // lambda_1 >= 2m/n, connected
  randic_upper,    // R <= (n - #isolated)/2; checked as slack of the inequality
  randic_ratio,    // lambda_1 >= m/R, connected
  sqrt_max_degree, // lambda_1 >= sqrt(Delta), m >= 1
  randic_half,     // lambda_1 >= R_1/2 / m, m >= 1
  diameter_root,   // lambda_1 >= (n-1)^(1/D), connected, n >= 2
  min_degree,      // lambda_1 >= 2(m - delta)/(n-1), n >= 2
  unicyclic_two,   // lambda_1 >= 2, connected unicyclic; equality iff cycle
  path_radius,     // lambda_1 >= 2cos(pi/(n+1)), connected; equality iff path
};

inline constexpr std::array<LemmaId, 9> kAllLemmas = {
    LemmaId::average_degree, LemmaId::randic_upper,  LemmaId::randic_ratio,
    LemmaId::sqrt_max_degree, LemmaId::randic_half,  LemmaId::diameter_root,
    LemmaId::min_degree,      LemmaId::unicyclic_two, LemmaId::path_radius};

std::string_view to_string(LemmaId id) noexcept;

struct LemmaCheck {
  LemmaId id = LemmaId::average_degree;
  bool applicable = false;
  /// The larger side minus the smaller side; negative means violated.
  double slack = 0.0;
  bool equality = false;  // |slack| < tol
};

std::vector<LemmaCheck> lemma_checks(const InvariantSet& inv, const Spectrum& s, double tol);

}  // namespace estrada
