#include "estrada/bounds.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "estrada/errors.hpp"
#include "estrada/generators.hpp"
#include "estrada/spectral.hpp"

namespace estrada {

namespace {

double as_real(std::size_t x) { return static_cast<double>(x); }

bool has_edges(const InvariantSet& inv) { return inv.m >= 1; }
bool connected_with_edges(const InvariantSet& inv) {
  return inv.classification.connected && inv.m >= 1;
}
bool connected_nontrivial(const InvariantSet& inv) {
  return inv.classification.connected && inv.n >= 2;
}
bool at_least_two_vertices(const InvariantSet& inv) { return inv.n >= 2; }
bool nonempty_two_vertices(const InvariantSet& inv) { return inv.n >= 2 && inv.m >= 1; }
bool unicyclic(const InvariantSet& inv) { return inv.classification.unicyclic; }

double randic_ratio(const InvariantSet& inv) { return as_real(inv.m) / inv.randic; }
double sqrt_max_degree(const InvariantSet& inv) { return std::sqrt(as_real(inv.max_degree)); }
double randic_half_ratio(const InvariantSet& inv) { return inv.randic_half / as_real(inv.m); }
double diameter_root(const InvariantSet& inv) {
  return std::pow(as_real(inv.n - 1), 1.0 / as_real(inv.diam.value()));
}
double min_degree_ratio(const InvariantSet& inv) {
  return 2.0 * (as_real(inv.m) - as_real(inv.min_degree)) / as_real(inv.n - 1);
}
double two(const InvariantSet&) { return 2.0; }
double path_radius(const InvariantSet& inv) {
  return 2.0 * std::cos(std::numbers::pi / as_real(inv.n + 1));
}

using F = Framework;

constexpr std::array<BoundSpec, 14> kCatalog = {{
    {BoundId::G1, "randic-general", "e^(m/R) + (n-1) - m/R", F::general, true,
     connected_with_edges, randic_ratio},
    {BoundId::G2, "max-degree-general", "e^sqrt(D) + (n-1) - sqrt(D)", F::general, true, has_edges,
     sqrt_max_degree},
    {BoundId::G3, "randic-half-general", "e^(R_1/2/m) + (n-1) - R_1/2/m", F::general, true,
     has_edges, randic_half_ratio},
    {BoundId::G4, "diameter-general", "e^((n-1)^(1/D)) + (n-1) - (n-1)^(1/D)", F::general, true,
     connected_nontrivial, diameter_root},
    {BoundId::G5, "min-degree-general", "e^(2(m-d)/(n-1)) + (n-1) - 2(m-d)/(n-1)", F::general,
     false, at_least_two_vertices, min_degree_ratio},
    {BoundId::G6, "unicyclic-general", "e^2 + (n-3)", F::affine, true, unicyclic, two},
    {BoundId::G7, "path-radius-general", "e^(2cos(pi/(n+1))) + (n-1) - 2cos(pi/(n+1))",
     F::general, true, connected_nontrivial, path_radius},
    {BoundId::B1, "randic-bipartite", "2cosh(m/R) + (n-2)", F::bipartite, false,
     connected_with_edges, randic_ratio},
    {BoundId::B2, "max-degree-bipartite", "2cosh(sqrt(D)) + (n-2)", F::bipartite, false,
     has_edges, sqrt_max_degree},
    {BoundId::B3, "randic-half-bipartite", "2cosh(R_1/2/m) + (n-2)", F::bipartite, false,
     has_edges, randic_half_ratio},
    {BoundId::B4, "diameter-bipartite", "2cosh((n-1)^(1/D)) + (n-2)", F::bipartite, false,
     connected_nontrivial, diameter_root},
    {BoundId::B5, "min-degree-bipartite", "2cosh(2(m-d)/(n-1)) + (n-2)", F::bipartite, false,
     nonempty_two_vertices, min_degree_ratio},
    {BoundId::B6, "unicyclic-bipartite", "2cosh(2) + (n-2)", F::bipartite, false, unicyclic, two},
    {BoundId::B7, "path-radius-bipartite", "2cosh(2cos(pi/(n+1))) + (n-2)", F::bipartite, false,
     connected_nontrivial, path_radius},
}};

double frame(Framework f, double x, std::size_t n) {
  return f == Framework::bipartite ? phi_bipartite(x, n) : phi(x, n);
}

}  // namespace

std::string_view to_string(BoundId id) noexcept {
  static constexpr std::array<std::string_view, 14> names = {
      "G1", "G2", "G3", "G4", "G5", "G6", "G7", "B1", "B2", "B3", "B4", "B5", "B6", "B7"};
  return names[index_of(id)];
}

std::optional<BoundId> parse_bound_id(std::string_view text) noexcept {
  for (BoundId id : kAllBounds) {
    if (to_string(id) == text) return id;
  }
  return std::nullopt;
}

bool is_bipartite_bound(BoundId id) noexcept { return index_of(id) >= index_of(BoundId::B1); }

double phi(double x, std::size_t n) {
  if (!(x >= 0.0)) throw DomainError("phi needs x >= 0, got " + std::to_string(x));
  if (n < 1) throw DomainError("phi needs n >= 1");
  return std::exp(x) + (as_real(n) - 1.0) - x;
}

double phi_bipartite(double x, std::size_t n) {
  if (!(x >= 0.0)) throw DomainError("bipartite phi needs x >= 0, got " + std::to_string(x));
  if (n < 2) throw DomainError("bipartite phi needs n >= 2");
  return 2.0 * std::cosh(x) + (as_real(n) - 2.0);
}

std::span<const BoundSpec> bound_catalog() noexcept { return kCatalog; }

const BoundSpec& bound_spec(BoundId id) noexcept { return kCatalog[index_of(id)]; }

bool is_applicable(BoundId id, const InvariantSet& inv) {
  if (!bound_spec(id).structural_gate(inv)) return false;
  return !is_bipartite_bound(id) || inv.classification.bipartite;
}

double bound_value(BoundId id, const InvariantSet& inv) {
  const auto& spec = bound_spec(id);
  return frame(spec.framework, spec.argument(inv), inv.n);
}

BoundResult evaluate_bound(BoundId id, const InvariantSet& inv, double ee, double tol) {
  BoundResult r;
  r.id = id;
  r.ee_value = ee;
  r.applicable = is_applicable(id, inv);
  if (r.applicable) {
    r.bound_value = bound_value(id, inv);
    r.gap = ee - *r.bound_value;
    r.equality_detected = std::abs(*r.gap) < tol;
    r.equality_class_match = equality_class_member(id, inv.classification, inv.n);
  } else if (is_bipartite_bound(id) && bound_spec(id).structural_gate(inv)) {
    r.exploratory_gap = ee - bound_value(id, inv);
  }
  return r;
}

bool equality_class_member(BoundId id, const Classification& c, std::size_t n) {
  const auto& core = c.complete_bipartite_core;
  switch (id) {
    case BoundId::G5:
      return c.empty;
    case BoundId::B1:
      return c.complete_bipartite.has_value();
    case BoundId::B2:
      return core && core->p == 1;
    case BoundId::B3:
      return core.has_value();
    case BoundId::B4:
      return c.star;
    case BoundId::B5:
      return core && core->p == core->q && c.isolated_vertices == 1;
    case BoundId::B6:
      return c.cycle && n == 4;
    case BoundId::B7:
      // Paths attaining the bound; P_4 does not, see the B7 sweep tests.
      return c.path && (n == 2 || n == 3);
    default:
      return false;
  }
}

bool equality_class_check(BoundId id, const Graph& g) {
  return equality_class_member(id, classify(g), g.order());
}

RemarkVerdict remark_family_check(std::size_t r, std::size_t n, double tol) {
  const Graph g = disjoint_union(circulant_regular_graph(n, r), empty_graph(1));
  const auto inv = invariant_set(g);
  RemarkVerdict v;
  v.r = r;
  v.n = n;
  v.spectral_radius = spectrum(g).largest();
  v.predicted = min_degree_ratio(inv);
  v.holds = std::abs(v.spectral_radius - v.predicted) < tol;
  return v;
}

}  // namespace estrada
