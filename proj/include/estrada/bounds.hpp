#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>

#include "estrada/graph.hpp"
#include "estrada/invariants.hpp"

namespace estrada {

/// Stable identifiers of the fourteen Estrada-index lower bounds.
/// G-bounds hold for general graphs, B-bounds for bipartite graphs.
enum class BoundId { G1, G2, G3, G4, G5, G6, G7, B1, B2, B3, B4, B5, B6, B7 };

inline constexpr std::array<BoundId, 14> kAllBounds = {
    BoundId::G1, BoundId::G2, BoundId::G3, BoundId::G4, BoundId::G5, BoundId::G6, BoundId::G7,
    BoundId::B1, BoundId::B2, BoundId::B3, BoundId::B4, BoundId::B5, BoundId::B6, BoundId::B7};

inline constexpr std::size_t index_of(BoundId id) noexcept { return static_cast<std::size_t>(id); }

std::string_view to_string(BoundId id) noexcept;
std::optional<BoundId> parse_bound_id(std::string_view text) noexcept;
bool is_bipartite_bound(BoundId id) noexcept;

/// How the bound argument x is turned into a bound on EE.
enum class Framework {
  general,    // e^x + (n - 1) - x
  bipartite,  // 2 cosh x + (n - 2)
  affine,     // general framework at a fixed argument; affine in n
};

/// e^x + (n - 1) - x. Throws DomainError for x < 0 or n < 1.
double phi(double x, std::size_t n);
/// 2 cosh x + (n - 2). Throws DomainError for x < 0 or n < 2.
double phi_bipartite(double x, std::size_t n);

struct BoundSpec {
  BoundId id;
  std::string_view name;
  /// Human-readable closed form of the bound.
  std::string_view formula;
  Framework framework;
  /// The inequality is strict wherever the bound applies.
  bool strict;
  /// Structural preconditions other than bipartiteness.
  bool (*structural_gate)(const InvariantSet&);
  /// Lower bound on the spectral radius fed to the framework.
  double (*argument)(const InvariantSet&);
};

std::span<const BoundSpec> bound_catalog() noexcept;
const BoundSpec& bound_spec(BoundId id) noexcept;

/// Structural gate, plus bipartiteness for B-bounds.
bool is_applicable(BoundId id, const InvariantSet& inv);

/// Bound value; precondition: is_applicable(id, inv).
double bound_value(BoundId id, const InvariantSet& inv);

struct BoundResult {
  BoundId id = BoundId::G1;
  bool applicable = false;
  /// Empty when the bound does not apply.
  std::optional<double> bound_value;
  double ee_value = 0.0;
  /// ee - bound; empty when the bound does not apply.
  std::optional<double> gap;
  bool equality_detected = false;
  bool equality_class_match = false;
  /// Gap of a B-bound formula evaluated on a non-bipartite graph that meets
  /// every other hypothesis. Exploration data, never a verdict.
  std::optional<double> exploratory_gap;

  bool violated(double tol) const noexcept { return applicable && *gap < -tol; }
};

BoundResult evaluate_bound(BoundId id, const InvariantSet& inv, double ee, double tol);

/// Structural membership in the bound's equality family (never spectral).
/// Always false for the strict bounds G1-G4, G6 and G7.
bool equality_class_member(BoundId id, const Classification& c, std::size_t n);
bool equality_class_check(BoundId id, const Graph& g);

struct RemarkVerdict {
  std::size_t r = 0;
  std::size_t n = 0;
  /// lambda_1 of G u K_1.
  double spectral_radius = 0.0;
  /// 2(m - delta) / (n' - 1) for G u K_1, with n' = n + 1 and delta = 0.
  double predicted = 0.0;
  bool holds = false;
};

/// Builds an r-regular circulant G on n vertices, forms G u K_1 and compares
/// its spectral radius with the minimum-degree lower bound.
/// Throws ParameterError when no r-regular graph on n vertices exists.
RemarkVerdict remark_family_check(std::size_t r, std::size_t n, double tol);

}  // namespace estrada
