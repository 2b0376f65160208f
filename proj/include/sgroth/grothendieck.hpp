#pragma once

#include <sgroth/integer.hpp>
#include <sgroth/shapes.hpp>
#include <sgroth/symfunc.hpp>

namespace sgroth
{

// An unsigned tableau count together with the exponent of the sign it carries
// in the expansion it belongs to. The count itself is never signed.
struct SignedCount {
    Integer value;
    int sign_exponent = 0;

    Integer signed_value() const
    {
        return sign_exponent % 2 == 0 ? value : Integer(-value);
    }
    friend bool operator==(const SignedCount &, const SignedCount &) = default;
};

// Skew Schur function, by SSYT counts. Throws DegreeError when |shape| > D.
SymFunc schur(const SkewShape &shape, TruncationProfile trunc);

// Skew dual stable Grothendieck polynomial, by reverse plane partition counts
// (weights count columns). Throws DegreeError when |shape| > D.
SymFunc dual_g(const SkewShape &shape, TruncationProfile trunc);

// Skew stable Grothendieck polynomial, by signed set-valued tableau counts,
// truncated to degree <= D.
SymFunc big_G(const SkewShape &shape, TruncationProfile trunc);

// Alternating sum of G_{outer/sigma} over the sigma for which mu/sigma is a
// rook strip, with sign (-1)^{|mu/sigma|}.
SymFunc big_G_double(const Partition &outer, const Partition &mu, TruncationProfile trunc);

// Number of set-valued tableaux of shape star_join(nu, mu) whose reverse
// reading word is lattice with content `target`; the sign exponent is
// |target| - |nu| - |mu|. The product G_nu G_mu expands with these signed
// counts in the G basis.
SignedCount lr_coeff(const Partition &nu, const Partition &mu, const Partition &target);

// Number of set-valued tableaux of `shape` with lattice reverse reading word
// of content `content`; the sign exponent is |content| - |shape|.
SignedCount alpha(const SkewShape &shape, const Partition &content);

// Peels off the top homogeneous component (whose Schur coefficients are the
// g coefficients) until nothing is left.
BasisExpansion expand_in_g(const SymFunc &f);

// Peels off the bottom homogeneous component (whose Schur coefficients are
// the G coefficients) degree by degree up to the truncation degree.
BasisExpansion expand_in_G(const SymFunc &f);

// G_lam -> G_{lam^T} on a G expansion.
BasisExpansion tau(const BasisExpansion &f);
// g_lam -> g_{lam^T} on a g expansion.
BasisExpansion tau_bar(const BasisExpansion &f);

// Monomial coordinates of an expansion in any basis, at the given profile.
SymFunc to_symfunc(const BasisExpansion &f, TruncationProfile trunc);
SymFunc to_symfunc(const BasisExpansion &f);

// Schur coefficients of an expansion in any basis, up to degree trunc.max_degree.
CoeffMap schur_coefficients(const BasisExpansion &f, TruncationProfile trunc);

// The skewing operator: f-perp(a) = sum <f, b_i> c_i where Delta(a) = sum b_i (x) c_i,
// evaluated through split_alphabets(a) and Schur pairings.
//
// The result carries a's profile. When `a` is the truncation of an infinite
// series, the degree-d part of the result is exact as long as d plus the
// degree of the highest pairing term of f stays within a's truncation degree.
// For G and m expansions, f must be known at least to a's truncation degree
// (DegreeError otherwise).
SymFunc skew_by(const BasisExpansion &f, const SymFunc &a);

} // namespace sgroth
