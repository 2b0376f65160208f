#include <sgroth/grothendieck.hpp>

#include <algorithm>
#include <string>

#include <sgroth/errors.hpp>
#include <sgroth/tableaux.hpp>

namespace sgroth
{

namespace
{

void require_degree(const SkewShape &shape, TruncationProfile trunc)
{
    if (shape.size() > trunc.max_degree) {
        throw DegreeError("shape " + to_string(shape) + " has " + std::to_string(shape.size())
                          + " cells, above truncation degree " + std::to_string(trunc.max_degree));
    }
}

void fill_by_counts(SymFunc &out, const SkewShape &shape, FillingKind kind, int lo, int hi, bool alternate)
{
    for (int d = lo; d <= hi; ++d) {
        const bool negative = alternate && (d - shape.size()) % 2 != 0;
        for (const auto &lam : partitions_of(d)) {
            if (lam.length() > out.trunc().num_vars) {
                continue;
            }
            auto c = count_with_content(shape, kind, lam.parts());
            out.add_term(lam, negative ? Integer(-c) : c);
        }
    }
}

} // namespace

SymFunc schur(const SkewShape &shape, TruncationProfile trunc)
{
    require_degree(shape, trunc);
    SymFunc out(trunc);
    fill_by_counts(out, shape, FillingKind::ssyt, shape.size(), shape.size(), false);
    return out;
}

SymFunc dual_g(const SkewShape &shape, TruncationProfile trunc)
{
    require_degree(shape, trunc);
    SymFunc out(trunc);
    fill_by_counts(out, shape, FillingKind::rpp, 0, shape.size(), false);
    return out;
}

SymFunc big_G(const SkewShape &shape, TruncationProfile trunc)
{
    SymFunc out(trunc);
    fill_by_counts(out, shape, FillingKind::svt, shape.size(), trunc.max_degree, true);
    return out;
}

SymFunc big_G_double(const Partition &outer, const Partition &mu, TruncationProfile trunc)
{
    if (!contains(outer, mu)) {
        throw ContainmentError(to_string(mu) + " is not contained in " + to_string(outer));
    }
    SymFunc out(trunc);
    for (const auto &sigma : subpartitions(mu)) {
        if (!classify_strip(SkewShape(mu, sigma)).rook) {
            continue;
        }
        auto term = big_G(SkewShape(outer, sigma), trunc);
        if ((mu.size() - sigma.size()) % 2 != 0) {
            out -= term;
        } else {
            out += term;
        }
    }
    return out;
}

SignedCount lr_coeff(const Partition &nu, const Partition &mu, const Partition &target)
{
    return {count_lattice_fillings(star_join(nu, mu), target), target.size() - nu.size() - mu.size()};
}

SignedCount alpha(const SkewShape &shape, const Partition &content)
{
    return {count_lattice_fillings(shape, content), content.size() - shape.size()};
}

BasisExpansion expand_in_g(const SymFunc &f)
{
    BasisExpansion out{Basis::g, {}, f.trunc()};
    SymFunc residual = f;
    while (auto top = residual.max_degree()) {
        const auto s = m_to_schur(residual.homogeneous_part(*top));
        for (const auto &[lam, c] : s.coeffs) {
            out.coeffs[lam] += c;
            residual -= dual_g(SkewShape(lam), f.trunc()) * c;
        }
    }
    std::erase_if(out.coeffs, [](const auto &kv) { return kv.second == 0; });
    return out;
}

BasisExpansion expand_in_G(const SymFunc &f)
{
    BasisExpansion out{Basis::G, {}, f.trunc()};
    SymFunc residual = f;
    while (auto bottom = residual.min_degree()) {
        const auto s = m_to_schur(residual.homogeneous_part(*bottom));
        for (const auto &[lam, c] : s.coeffs) {
            out.coeffs[lam] += c;
            residual -= big_G(SkewShape(lam), f.trunc()) * c;
        }
    }
    std::erase_if(out.coeffs, [](const auto &kv) { return kv.second == 0; });
    return out;
}

namespace
{

BasisExpansion conjugate_keys(const BasisExpansion &f, Basis expected, const char *name)
{
    if (f.basis != expected) {
        throw DomainError(std::string(name) + " acts on " + std::string(to_string(expected)) + " expansions");
    }
    BasisExpansion out{f.basis, {}, f.trunc};
    for (const auto &[lam, c] : f.coeffs) {
        out.coeffs.emplace(conjugate(lam), c);
    }
    return out;
}

} // namespace

BasisExpansion tau(const BasisExpansion &f)
{
    return conjugate_keys(f, Basis::G, "tau");
}

BasisExpansion tau_bar(const BasisExpansion &f)
{
    return conjugate_keys(f, Basis::g, "tau_bar");
}

SymFunc to_symfunc(const BasisExpansion &f, TruncationProfile trunc)
{
    switch (f.basis) {
        case Basis::g: {
            SymFunc out(trunc);
            for (const auto &[lam, c] : f.coeffs) {
                if (lam.size() <= trunc.max_degree) {
                    out += dual_g(SkewShape(lam), trunc) * c;
                } else {
                    // Only the degrees within reach survive truncation.
                    const auto wide = TruncationProfile::faithful(lam.size());
                    out += dual_g(SkewShape(lam), wide).with_trunc(trunc) * c;
                }
            }
            return out;
        }
        case Basis::G: {
            SymFunc out(trunc);
            for (const auto &[lam, c] : f.coeffs) {
                out += big_G(SkewShape(lam), trunc) * c;
            }
            return out;
        }
        default: {
            BasisExpansion kept{f.basis, {}, trunc};
            for (const auto &[lam, c] : f.coeffs) {
                if (lam.size() <= trunc.max_degree) {
                    kept.coeffs.emplace(lam, c);
                }
            }
            return classical_to_m(kept);
        }
    }
}

SymFunc to_symfunc(const BasisExpansion &f)
{
    return to_symfunc(f, f.trunc);
}

CoeffMap schur_coefficients(const BasisExpansion &f, TruncationProfile trunc)
{
    if (f.basis == Basis::s) {
        CoeffMap out;
        for (const auto &[lam, c] : f.coeffs) {
            if (lam.size() <= trunc.max_degree) {
                out.emplace(lam, c);
            }
        }
        return out;
    }
    if ((f.basis == Basis::G || f.basis == Basis::m) && f.trunc.max_degree < trunc.max_degree) {
        throw DegreeError("expansion is known only to degree " + std::to_string(f.trunc.max_degree)
                          + ", pairing needs degree " + std::to_string(trunc.max_degree));
    }
    return m_to_schur(to_symfunc(f, trunc)).coeffs;
}

SymFunc skew_by(const BasisExpansion &f, const SymFunc &a)
{
    const auto trunc = a.trunc();
    const auto fs = schur_coefficients(f, trunc);
    SymFunc out(trunc);
    if (fs.empty()) {
        return out;
    }
    const int top = fs.rbegin()->first.size();
    std::map<Partition, Integer> pairing;
    auto pair_with_monomial = [&](const Partition &alpha_part) -> const Integer & {
        auto it = pairing.find(alpha_part);
        if (it != pairing.end()) {
            return it->second;
        }
        Integer total = 0;
        for (const auto &[lam, c] : monomial_in_schur(alpha_part)) {
            if (auto jt = fs.find(lam); jt != fs.end()) {
                total += c * jt->second;
            }
        }
        return pairing.emplace(alpha_part, std::move(total)).first->second;
    };
    for (const auto &[key, c] : split_alphabets(a, trunc.num_vars, trunc.num_vars)) {
        const auto &[x_part, y_part] = key;
        if (x_part.size() > top) {
            continue;
        }
        const auto &p = pair_with_monomial(x_part);
        if (p != 0) {
            out.add_term(y_part, c * p);
        }
    }
    return out;
}

} // namespace sgroth
