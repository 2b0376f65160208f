#pragma once

#include <cstdint>
#include <optional>

#include <sgroth/report.hpp>
#include <sgroth/shapes.hpp>

namespace sgroth
{

// Restricts a suite to the cases matching every field that is set. Fields a
// suite does not index by are ignored. Witness rerun commands are built from
// these fields.
struct CaseFilter {
    std::optional<Partition> mu;
    std::optional<Partition> nu;
    std::optional<Partition> lambda;
    std::optional<int> k;
};

// g_{rho_n/mu} = g_{rho_n/mu^T} for every mu inside rho_n, at profile (|rho_n|, |rho_n|).
Report verify_stembridge_g(int n, const CaseFilter &filter = {});

// G_{rho_n/mu} = G_{rho_n/mu^T} for every mu inside rho_n, modulo degrees
// above |rho_n/mu| + extra_degrees.
Report verify_stembridge_G(int n, int extra_degrees, const CaseFilter &filter = {});

// For every k <= n:
//  * c^{rho_n}_{(k) nu} = c^{rho_n}_{(1^k) nu} for nu inside rho_n;
//  * on every lattice filling of nu * (k) and nu * (1^k) with content rho_n,
//    row i of the nu block holds exactly {i} and the other block repeats no value;
//  * alpha_{rho_n/(k), nu} = alpha_{rho_n/(1^k), nu} for
//    |rho_n/(k)| <= |nu| <= |rho_n/(k)| + 2;
//  * G_{rho_m/(k)} = G_{rho_m/(1^k)} modulo degrees above |rho_m/(k)| + 3,
//    for m <= polynomial_n (defaults to min(n, 3)).
Report verify_lattice_rules(int n, int polynomial_n = -1, const CaseFilter &filter = {});

// The recurrence expressing alpha_{rho_n/(k), nu} (and its (1^k) twin)
// through rho_{n-1} and nu with its first part removed. The literal form
// alpha' + 2 alpha'' is always recorded as findings. With `refined`, the form
// stratified by nu_1 (the (k-1) term counted once when nu_1 = n and once when
// nu_1 = n - 1, the (k) term only when nu_1 = n) is also checked as gated
// cases. Requires 1 <= k < n.
Report verify_alpha_recurrence(int n, int k, bool refined, const CaseFilter &filter = {});

// verify_alpha_recurrence(m, k, true) over 2 <= m <= n_max and 1 <= k < m,
// merged into one report.
Report verify_alpha_recurrences(int n_max, const CaseFilter &filter = {});

struct BasisBounds {
    int k_max = 4;
    int max_degree = 7;
    int h_max = 6;
    Partition pieri_box{4, 4, 4, 4};
    int pieri_k = 4;
};

// G_{(1^k)} against the alternating binomial e-sum and the G expansion of e_k
// against binomial coefficients (k <= k_max, at max_degree); g_{(k)} = h_k
// for k <= h_max; Pieri rules for s_{lam/(k)} and s_{lam/(1^k)} with lam
// inside pieri_box and k <= pieri_k.
Report verify_basis_identities(const BasisBounds &bounds);
Report verify_basis_identities(int k_max, int max_degree);

struct HopfBounds {
    // Delta(g_lam) for |lam| <= coproduct_max_size.
    int coproduct_max_size = 5;
    // G_mu-perp g_lam = g_{lam/mu} for lam inside rho_{skew_g_n}.
    int skew_g_n = 4;
    // g_mu-perp G_rho, the rook-strip sum, G_{rho//mu} = G_{rho//mu^T} and
    // Delta(G_rho) for rho_m, m <= skew_G_n, modulo degrees above |rho_m| + extra_degrees.
    int skew_G_n = 3;
    int extra_degrees = 2;
    // e_k-perp g_rho = tau(e_k)-perp g_rho for rho_m, m <= ek_n, k <= ek_k.
    int ek_n = 4;
    int ek_k = 4;
    // <g, f-perp(a)> = <f g, a> for Schur f, g of degree <= adjunction_factor
    // and Schur a of degree <= adjunction_target.
    int adjunction_factor = 3;
    int adjunction_target = 5;
    // <G_lam, g_mu> = delta for |lam|, |mu| <= duality_max.
    int duality_max = 5;

    // Every staircase bound set to n, with the G identities checked modulo
    // degrees above max_degree (at least |rho_n|).
    static HopfBounds staircase(int n, int max_degree);
};

Report verify_hopf(const HopfBounds &bounds, const CaseFilter &filter = {});
Report verify_hopf(int n, int max_degree);

// For every lam with |lam| <= max_size, decides whether s_{lam/(k)} =
// s_{lam/(1^k)} for all 1 <= k <= max(l(lam), lam_1), and checks that the
// passing partitions are exactly the staircases (including the empty one).
Report converse_scan(int max_size, const CaseFilter &filter = {});

// Products of `pairs` seeded random pairs of m/e/h basis elements (total
// degree <= max_degree) against explicit polynomial multiplication in
// max_degree variables.
inline constexpr std::uint64_t default_seed = 20240917;
Report verify_multiply(int pairs, int max_degree, std::uint64_t seed = default_seed);

// Parallelism cap for suites: STAIRCASE_GROTH_THREADS when set to a positive
// integer, the hardware concurrency otherwise.
unsigned worker_count();

} // namespace sgroth
