#include "estrada/lemmas.hpp"

#include <cmath>
#include <numbers>
#include <optional>

namespace estrada {

std::string_view to_string(LemmaId id) noexcept {
  switch (id) {
    case LemmaId::average_degree: return "average_degree";
    case LemmaId::randic_upper: return "randic_upper";
    case LemmaId::randic_ratio: return "randic_ratio";
    case LemmaId::sqrt_max_degree: return "sqrt_max_degree";
    case LemmaId::randic_half: return "randic_half";
    case LemmaId::diameter_root: return "diameter_root";
    case LemmaId::min_degree: return "min_degree";
    case LemmaId::unicyclic_two: return "unicyclic_two";
    case LemmaId::path_radius: return "path_radius";
  }
  return "?";
}

namespace {

/// Lower bound on lambda_1 implied by `id`, or nullopt when it does not apply.
std::optional<double> radius_lower_bound(LemmaId id, const InvariantSet& inv) {
  const auto& c = inv.classification;
  const double n = static_cast<double>(inv.n);
  const double m = static_cast<double>(inv.m);
  switch (id) {
    case LemmaId::average_degree:
      if (c.connected) return 2.0 * m / n;
      break;
    case LemmaId::randic_ratio:
      if (c.connected && inv.m >= 1) return m / inv.randic;
      break;
    case LemmaId::sqrt_max_degree:
      if (inv.m >= 1) return std::sqrt(static_cast<double>(inv.max_degree));
      break;
    case LemmaId::randic_half:
      if (inv.m >= 1) return inv.randic_half / m;
      break;
    case LemmaId::diameter_root:
      if (c.connected && inv.n >= 2) {
        return std::pow(n - 1.0, 1.0 / static_cast<double>(inv.diam.value()));
      }
      break;
    case LemmaId::min_degree:
      if (inv.n >= 2) return 2.0 * (m - static_cast<double>(inv.min_degree)) / (n - 1.0);
      break;
    case LemmaId::unicyclic_two:
      if (c.unicyclic) return 2.0;
      break;
    case LemmaId::path_radius:
      if (c.connected) return 2.0 * std::cos(std::numbers::pi / (n + 1.0));
      break;
    case LemmaId::randic_upper:
      break;
  }
  return std::nullopt;
}

}  // namespace

std::vector<LemmaCheck> lemma_checks(const InvariantSet& inv, const Spectrum& s, double tol) {
  std::vector<LemmaCheck> out;
  out.reserve(kAllLemmas.size());
  const double radius = s.largest();
  for (LemmaId id : kAllLemmas) {
    LemmaCheck check;
    check.id = id;
    if (id == LemmaId::randic_upper) {
      check.applicable = true;
      const double limit =
          static_cast<double>(inv.n - inv.classification.isolated_vertices) / 2.0;
      check.slack = limit - inv.randic;
    } else if (const auto lower = radius_lower_bound(id, inv)) {
      check.applicable = true;
      check.slack = radius - *lower;
    }
    check.equality = check.applicable && std::abs(check.slack) < tol;
    out.push_back(check);
  }
  return out;
}

}  // namespace estrada
