#include <sgroth/verify.hpp>

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <sgroth/errors.hpp>
#include <sgroth/grothendieck.hpp>
#include <sgroth/tableaux.hpp>

namespace sgroth
{

unsigned worker_count()
{
    if (const char *env = std::getenv("STAIRCASE_GROTH_THREADS")) {
        char *end = nullptr;
        const long value = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && value > 0) {
            return static_cast<unsigned>(value);
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

namespace
{

using Job = std::function<std::vector<Case>()>;

// Runs the jobs on up to worker_count() threads; the cases come back in job
// order whatever the completion order.
std::vector<Case> run_jobs(const std::vector<Job> &jobs)
{
    std::vector<std::vector<Case>> results(jobs.size());
    std::vector<std::exception_ptr> errors(jobs.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < jobs.size(); i = next++) {
            try {
                results[i] = jobs[i]();
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const auto threads = std::min<std::size_t>(worker_count(), jobs.size());
    if (threads <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < threads; ++t) {
            pool.emplace_back(work);
        }
        for (auto &th : pool) {
            th.join();
        }
    }
    for (const auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    std::vector<Case> out;
    for (auto &r : results) {
        std::move(r.begin(), r.end(), std::back_inserter(out));
    }
    return out;
}

template <class T>
bool admits(const std::optional<T> &wanted, const T &value)
{
    return !wanted || *wanted == value;
}

Partition column(int k)
{
    return Partition(std::vector<int>(static_cast<std::size_t>(std::max(k, 0)), 1));
}

Partition row(int k)
{
    return k > 0 ? Partition{k} : Partition{};
}

Partition drop_first(const Partition &p)
{
    if (p.empty()) {
        return p;
    }
    return Partition(std::vector<int>(p.parts().begin() + 1, p.parts().end()));
}

Integer binomial(int n, int k)
{
    if (k < 0 || k > n) {
        return 0;
    }
    Integer out = 1;
    for (int i = 1; i <= k; ++i) {
        out = out * (n - k + i) / i;
    }
    return out;
}

std::string quoted(const std::string &value)
{
    return value.empty() ? "''" : value;
}

// Command line that reruns one case of a suite.
class Rerun
{
public:
    explicit Rerun(const std::string &suite) : m_text("staircase-groth verify --suite " + suite) {}

    Rerun &opt(const std::string &name, int value)
    {
        m_text += " --" + name + " " + std::to_string(value);
        return *this;
    }
    Rerun &opt(const std::string &name, const std::string &value)
    {
        m_text += " --" + name + " " + quoted(value);
        return *this;
    }
    Rerun &opt(const std::string &name, const Partition &value)
    {
        m_text += " --" + name + " " + quoted(to_string(value));
        return *this;
    }
    const std::string &str() const noexcept
    {
        return m_text;
    }

private:
    std::string m_text;
};

Case compare(Json inputs, std::string relation, const SymFunc &lhs, const SymFunc &rhs, const Rerun &rerun)
{
    Case c{std::move(inputs), std::move(relation), lhs == rhs, std::nullopt};
    if (!c.holds) {
        Json w = Json::object();
        w["differences"] = coefficient_diff(lhs, rhs);
        w["rerun"] = rerun.str();
        c.witness = std::move(w);
    }
    return c;
}

Case compare(Json inputs, std::string relation, const Integer &lhs, const Integer &rhs, const Rerun &rerun)
{
    Case c{std::move(inputs), std::move(relation), lhs == rhs, std::nullopt};
    if (!c.holds) {
        Json w = Json::object();
        w["lhs"] = lhs.str();
        w["rhs"] = rhs.str();
        w["rerun"] = rerun.str();
        c.witness = std::move(w);
    }
    return c;
}

Json split_diff(const SplitCoeffs &lhs, const SplitCoeffs &rhs, std::size_t limit = 8)
{
    Json diff = Json::array();
    auto note = [&](const std::pair<Partition, Partition> &key) {
        if (diff.size() >= limit) {
            return;
        }
        auto value = [&](const SplitCoeffs &m) {
            auto it = m.find(key);
            return it == m.end() ? Integer{0} : it->second;
        };
        Json entry = Json::object();
        entry["x"] = to_json(key.first);
        entry["y"] = to_json(key.second);
        entry["lhs"] = value(lhs).str();
        entry["rhs"] = value(rhs).str();
        diff.push_back(std::move(entry));
    };
    for (const auto &[key, c] : lhs) {
        auto it = rhs.find(key);
        if (it == rhs.end() || it->second != c) {
            note(key);
        }
    }
    for (const auto &[key, c] : rhs) {
        if (!lhs.contains(key)) {
            note(key);
        }
    }
    return diff;
}

Case compare(Json inputs, std::string relation, const SplitCoeffs &lhs, const SplitCoeffs &rhs, const Rerun &rerun)
{
    Case c{std::move(inputs), std::move(relation), lhs == rhs, std::nullopt};
    if (!c.holds) {
        Json w = Json::object();
        w["differences"] = split_diff(lhs, rhs);
        w["rerun"] = rerun.str();
        c.witness = std::move(w);
    }
    return c;
}

Json filling_json(const SetFilling &t)
{
    Json cells = Json::array();
    for (std::size_t i = 0; i < t.cells().size(); ++i) {
        Json entry = Json::object();
        entry["cell"] = Json::array({t.cells()[i].row, t.cells()[i].col});
        entry["set"] = t.entries()[i];
        cells.push_back(std::move(entry));
    }
    return cells;
}

// Sum over (alpha, beta) of f_alpha g_beta m_alpha(x) m_beta(y), keeping
// total degree <= max_degree.
void add_tensor(SplitCoeffs &out, const SymFunc &f, const SymFunc &g, int max_degree)
{
    for (const auto &[alpha_part, a] : f.coeffs()) {
        for (const auto &[beta_part, b] : g.coeffs()) {
            if (alpha_part.size() + beta_part.size() <= max_degree) {
                out[{alpha_part, beta_part}] += a * b;
            }
        }
    }
    std::erase_if(out, [](const auto &kv) { return kv.second == 0; });
}

BasisExpansion single(Basis basis, const Partition &lam, TruncationProfile trunc)
{
    return BasisExpansion{basis, CoeffMap{{lam, Integer{1}}}, trunc};
}

} // namespace

Report verify_stembridge_g(int n, const CaseFilter &filter)
{
    if (n < 1) {
        throw DomainError("stembridge-g needs n >= 1");
    }
    Report report;
    report.suite = "stembridge-g";
    report.parameters["n"] = n;
    const auto rho = staircase(n);
    const auto trunc = TruncationProfile::faithful(rho.size());
    report.modulus = trunc;
    std::vector<Job> jobs;
    for (const auto &mu : subpartitions(rho)) {
        if (!admits(filter.mu, mu)) {
            continue;
        }
        jobs.push_back([=]() -> std::vector<Case> {
            const auto mu_t = conjugate(mu);
            Json inputs = Json::object();
            inputs["n"] = n;
            inputs["mu"] = to_json(mu);
            inputs["mu_conjugate"] = to_json(mu_t);
            inputs["trunc"] = to_json(trunc);
            return {compare(std::move(inputs), "g[rho/mu] = g[rho/mu^T]", dual_g(SkewShape(rho, mu), trunc),
                            dual_g(SkewShape(rho, mu_t), trunc), Rerun("stembridge-g").opt("n", n).opt("mu", mu))};
        });
    }
    report.cases = run_jobs(jobs);
    return report;
}

Report verify_stembridge_G(int n, int extra_degrees, const CaseFilter &filter)
{
    if (n < 1 || extra_degrees < 0) {
        throw DomainError("stembridge-G needs n >= 1 and extra degrees >= 0");
    }
    Report report;
    report.suite = "stembridge-G";
    report.parameters["n"] = n;
    report.parameters["extra_degrees"] = extra_degrees;
    const auto rho = staircase(n);
    std::vector<Job> jobs;
    for (const auto &mu : subpartitions(rho)) {
        if (!admits(filter.mu, mu)) {
            continue;
        }
        jobs.push_back([=]() -> std::vector<Case> {
            const auto mu_t = conjugate(mu);
            const auto trunc = TruncationProfile::faithful(rho.size() - mu.size() + extra_degrees);
            Json inputs = Json::object();
            inputs["n"] = n;
            inputs["mu"] = to_json(mu);
            inputs["mu_conjugate"] = to_json(mu_t);
            inputs["trunc"] = to_json(trunc);
            return {compare(std::move(inputs), "G[rho/mu] = G[rho/mu^T]", big_G(SkewShape(rho, mu), trunc),
                            big_G(SkewShape(rho, mu_t), trunc),
                            Rerun("stembridge-G").opt("n", n).opt("extra", extra_degrees).opt("mu", mu))};
        });
    }
    report.cases = run_jobs(jobs);
    return report;
}

namespace
{

// Checks the block structure of every lattice filling of star_join(nu, block)
// with content rho_n and returns the filling count alongside the case.
std::pair<Case, Integer> lattice_structure_case(int n, int k, const Partition &nu, const Partition &block)
{
    const auto rho = staircase(n);
    const auto shape = star_join(nu, block);
    const int nu_rows = nu.length();
    Integer fillings = 0;
    std::optional<Json> offending;
    for_each_lattice_filling(shape, rho, [&](const SetFilling &t) {
        ++fillings;
        if (offending) {
            return;
        }
        std::vector<int> seen(static_cast<std::size_t>(n) + 2, 0);
        bool ok = true;
        for (std::size_t i = 0; i < t.cells().size() && ok; ++i) {
            const auto &cell = t.cells()[i];
            const auto &set = t.entries()[i];
            if (cell.row <= nu_rows) {
                ok = set == Entry{cell.row};
            } else {
                for (int v : set) {
                    ok = ok && v <= n && seen[static_cast<std::size_t>(v)]++ == 0;
                }
            }
        }
        if (!ok) {
            offending = filling_json(t);
        }
    });
    Json inputs = Json::object();
    inputs["n"] = n;
    inputs["k"] = k;
    inputs["nu"] = to_json(nu);
    inputs["block"] = to_json(block);
    Case c{std::move(inputs), "lattice fillings of nu*block: row i of nu holds {i}, block repeats no value",
           !offending.has_value(), std::nullopt};
    if (offending) {
        Json w = Json::object();
        w["filling"] = *offending;
        w["rerun"] = Rerun("lattice-rules").opt("n", n).opt("k", k).opt("nu", nu).str();
        c.witness = std::move(w);
    }
    return {std::move(c), fillings};
}

} // namespace

Report verify_lattice_rules(int n, int polynomial_n, const CaseFilter &filter)
{
    if (n < 1) {
        throw DomainError("lattice-rules needs n >= 1");
    }
    if (polynomial_n < 0) {
        polynomial_n = std::min(n, 3);
    }
    Report report;
    report.suite = "lattice-rules";
    report.parameters["n"] = n;
    report.parameters["polynomial_n"] = polynomial_n;
    const auto rho = staircase(n);
    std::vector<Job> jobs;

    for (int k = 1; k <= n; ++k) {
        if (!admits(filter.k, k)) {
            continue;
        }
        for (const auto &nu : subpartitions(rho)) {
            if (!admits(filter.nu, nu)) {
                continue;
            }
            jobs.push_back([=]() -> std::vector<Case> {
                const auto rerun = Rerun("lattice-rules").opt("n", n).opt("k", k).opt("nu", nu);
                Json inputs = Json::object();
                inputs["n"] = n;
                inputs["k"] = k;
                inputs["nu"] = to_json(nu);
                std::vector<Case> out;
                out.push_back(compare(inputs, "c^rho_{(k),nu} = c^rho_{(1^k),nu}",
                                      lr_coeff(row(k), nu, rho).value, lr_coeff(column(k), nu, rho).value, rerun));
                auto [row_case, row_count] = lattice_structure_case(n, k, nu, row(k));
                auto [col_case, col_count] = lattice_structure_case(n, k, nu, column(k));
                out.push_back(std::move(row_case));
                out.push_back(std::move(col_case));
                out.push_back(compare(inputs, "#lattice fillings of nu*(k) = #lattice fillings of nu*(1^k)", row_count,
                                      col_count, rerun));
                return out;
            });
        }
    }

    for (int k = 1; k <= n; ++k) {
        if (!admits(filter.k, k)) {
            continue;
        }
        const SkewShape by_row(rho, row(k));
        const SkewShape by_column(rho, column(k));
        for (int d = by_row.size(); d <= by_row.size() + 2; ++d) {
            for (const auto &nu : partitions_of(d)) {
                if (!admits(filter.nu, nu)) {
                    continue;
                }
                jobs.push_back([=]() -> std::vector<Case> {
                    Json inputs = Json::object();
                    inputs["n"] = n;
                    inputs["k"] = k;
                    inputs["nu"] = to_json(nu);
                    return {compare(std::move(inputs), "alpha_{rho/(k),nu} = alpha_{rho/(1^k),nu}",
                                    alpha(by_row, nu).value, alpha(by_column, nu).value,
                                    Rerun("lattice-rules").opt("n", n).opt("k", k).opt("nu", nu))};
                });
            }
        }
    }

    if (!filter.nu) {
        for (int m = 1; m <= polynomial_n; ++m) {
            for (int k = 1; k <= m; ++k) {
                if (!admits(filter.k, k)) {
                    continue;
                }
                jobs.push_back([=]() -> std::vector<Case> {
                    const auto rho_m = staircase(m);
                    const SkewShape by_row(rho_m, row(k));
                    const auto trunc = TruncationProfile::faithful(by_row.size() + 3);
                    Json inputs = Json::object();
                    inputs["n"] = m;
                    inputs["k"] = k;
                    inputs["trunc"] = to_json(trunc);
                    return {compare(std::move(inputs), "G[rho/(k)] = G[rho/(1^k)]", big_G(by_row, trunc),
                                    big_G(SkewShape(rho_m, column(k)), trunc),
                                    Rerun("lattice-rules").opt("n", n).opt("polynomial-n", m).opt("k", k))};
                });
            }
        }
    }

    report.cases = run_jobs(jobs);
    return report;
}

Report verify_alpha_recurrence(int n, int k, bool refined, const CaseFilter &filter)
{
    if (k < 1 || k >= n) {
        throw DomainError("alpha recurrence needs 1 <= k < n");
    }
    Report report;
    report.suite = "alpha-recurrence";
    report.parameters["n"] = n;
    report.parameters["k"] = k;
    report.parameters["refined"] = refined;
    const auto rho = staircase(n);
    const auto rho_lower = staircase(n - 1);

    struct Twin {
        const char *name;
        Partition mu;
        Partition mu_smaller;
    };
    const Twin twins[] = {{"row", row(k), row(k - 1)}, {"column", column(k), column(k - 1)}};

    std::vector<Job> literal_jobs;
    std::vector<Job> refined_jobs;
    for (const auto &twin : twins) {
        const SkewShape shape(rho, twin.mu);
        for (int d = shape.size(); d <= shape.size() + 2; ++d) {
            for (const auto &nu : partitions_of(d)) {
                if (!admits(filter.nu, nu)) {
                    continue;
                }
                const auto nu_minus = drop_first(nu);
                Json inputs = Json::object();
                inputs["n"] = n;
                inputs["k"] = k;
                inputs["block"] = twin.name;
                inputs["nu"] = to_json(nu);
                inputs["nu_minus"] = to_json(nu_minus);
                const auto rerun = Rerun("alpha-recurrence").opt("n", n).opt("k", k).opt("nu", nu);
                // Both readings share the three counts through the count cache.
                auto counts = [=] {
                    return std::array<Integer, 3>{alpha(shape, nu).value,
                                                  alpha(SkewShape(rho_lower, twin.mu), nu_minus).value,
                                                  alpha(SkewShape(rho_lower, twin.mu_smaller), nu_minus).value};
                };
                literal_jobs.push_back([=]() -> std::vector<Case> {
                    const auto [lhs, same, smaller] = counts();
                    const Integer rhs = same + 2 * smaller;
                    Case c = compare(inputs, "alpha_{rho_n/mu,nu} = alpha_{rho_{n-1}/mu,nu^-} + 2 alpha_{rho_{n-1}/mu',nu^-}",
                                     lhs, rhs, rerun);
                    if (c.witness) {
                        (*c.witness)["terms"] = Json::array({same.str(), smaller.str()});
                    }
                    return {std::move(c)};
                });
                if (refined) {
                    refined_jobs.push_back([=]() -> std::vector<Case> {
                        const auto [lhs, same, smaller] = counts();
                        const int first = nu[0];
                        Integer rhs = 0;
                        if (first == n) {
                            rhs += same + smaller;
                        }
                        if (first == n - 1) {
                            rhs += smaller;
                        }
                        return {compare(inputs,
                                        "alpha_{rho_n/mu,nu} = [nu_1=n](alpha_{rho_{n-1}/mu,nu^-} + alpha_{rho_{n-1}/mu',nu^-})"
                                        " + [nu_1=n-1] alpha_{rho_{n-1}/mu',nu^-}",
                                        lhs, rhs, rerun)};
                    });
                }
            }
        }
    }
    report.findings = run_jobs(literal_jobs);
    report.cases = run_jobs(refined_jobs);
    return report;
}

Report verify_alpha_recurrences(int n_max, const CaseFilter &filter)
{
    Report report;
    report.suite = "alpha-recurrence";
    report.parameters["n_max"] = n_max;
    report.parameters["refined"] = true;
    for (int n = 2; n <= n_max; ++n) {
        for (int k = 1; k < n; ++k) {
            if (!admits(filter.k, k)) {
                continue;
            }
            auto part = verify_alpha_recurrence(n, k, true, filter);
            std::move(part.cases.begin(), part.cases.end(), std::back_inserter(report.cases));
            std::move(part.findings.begin(), part.findings.end(), std::back_inserter(report.findings));
        }
    }
    return report;
}

Report verify_basis_identities(const BasisBounds &bounds)
{
    if (bounds.max_degree < bounds.k_max || bounds.k_max < 1) {
        throw DomainError("basis identities need 1 <= k_max <= max degree");
    }
    Report report;
    report.suite = "basis-identities";
    report.parameters["k_max"] = bounds.k_max;
    report.parameters["max_deg"] = bounds.max_degree;
    report.parameters["h_max"] = bounds.h_max;
    report.parameters["pieri_box"] = to_json(bounds.pieri_box);
    report.parameters["pieri_k"] = bounds.pieri_k;
    const auto trunc = TruncationProfile::faithful(bounds.max_degree);
    const auto rerun = Rerun("basis-identities").opt("k-max", bounds.k_max).opt("deg", bounds.max_degree);
    std::vector<Job> jobs;

    for (int k = 1; k <= bounds.k_max; ++k) {
        jobs.push_back([=]() -> std::vector<Case> {
            SymFunc e_sum(trunc);
            CoeffMap binomials;
            for (int m = k; m <= trunc.max_degree; ++m) {
                const auto c = binomial(m - 1, k - 1);
                e_sum += basis_element(Basis::e, row(m), trunc) * ((m - k) % 2 == 0 ? c : Integer(-c));
                binomials.emplace(column(m), c);
            }
            Json inputs = Json::object();
            inputs["k"] = k;
            inputs["trunc"] = to_json(trunc);
            std::vector<Case> out;
            out.push_back(compare(inputs, "G[1^k] = sum_{m>=k} (-1)^{m-k} C(m-1,k-1) e_m",
                                  big_G(SkewShape(column(k)), trunc), e_sum, rerun));
            const auto expansion = expand_in_G(basis_element(Basis::e, row(k), trunc));
            out.push_back(compare(inputs, "e_k = sum_{m>=k} C(m-1,k-1) G[1^m]", SymFunc(trunc, expansion.coeffs),
                                  SymFunc(trunc, binomials), rerun));
            return out;
        });
    }

    for (int k = 1; k <= bounds.h_max; ++k) {
        jobs.push_back([=]() -> std::vector<Case> {
            const auto exact = TruncationProfile::faithful(k);
            Json inputs = Json::object();
            inputs["k"] = k;
            return {compare(std::move(inputs), "g[(k)] = h_k", dual_g(SkewShape(row(k)), exact),
                            basis_element(Basis::h, row(k), exact), Rerun("basis-identities").opt("h-max", k))};
        });
    }

    for (const auto &lam : subpartitions(bounds.pieri_box)) {
        for (int k = 1; k <= bounds.pieri_k; ++k) {
            for (const bool horizontal : {true, false}) {
                const auto removed = horizontal ? row(k) : column(k);
                if (!contains(lam, removed)) {
                    continue;
                }
                jobs.push_back([=]() -> std::vector<Case> {
                    const auto exact = TruncationProfile::faithful(lam.size() - k);
                    SymFunc strips(exact);
                    for (const auto &nu : subpartitions(lam)) {
                        if (nu.size() != lam.size() - k) {
                            continue;
                        }
                        const auto cls = classify_strip(SkewShape(lam, nu));
                        if (horizontal ? cls.horizontal : cls.vertical) {
                            strips += schur_to_m(nu, exact);
                        }
                    }
                    Json inputs = Json::object();
                    inputs["lambda"] = to_json(lam);
                    inputs["removed"] = to_json(removed);
                    return {compare(std::move(inputs),
                                    horizontal ? "s[lam/(k)] = sum over horizontal k-strips lam/nu of s[nu]"
                                               : "s[lam/(1^k)] = sum over vertical k-strips lam/nu of s[nu]",
                                    schur(SkewShape(lam, removed), exact), strips,
                                    Rerun("basis-identities").opt("pieri-box", lam).opt("pieri-k", k))};
                });
            }
        }
    }

    report.cases = run_jobs(jobs);
    return report;
}

Report verify_basis_identities(int k_max, int max_degree)
{
    BasisBounds bounds;
    bounds.k_max = k_max;
    bounds.max_degree = max_degree;
    return verify_basis_identities(bounds);
}

HopfBounds HopfBounds::staircase(int n, int max_degree)
{
    HopfBounds b;
    b.skew_g_n = n;
    b.skew_G_n = n;
    b.ek_n = n;
    b.extra_degrees = std::max(0, max_degree - n * (n + 1) / 2);
    return b;
}

Report verify_hopf(int n, int max_degree)
{
    return verify_hopf(HopfBounds::staircase(n, max_degree));
}

Report verify_hopf(const HopfBounds &bounds, const CaseFilter &filter)
{
    Report report;
    report.suite = "hopf";
    report.parameters["coproduct_max_size"] = bounds.coproduct_max_size;
    report.parameters["skew_g_n"] = bounds.skew_g_n;
    report.parameters["skew_G_n"] = bounds.skew_G_n;
    report.parameters["extra_degrees"] = bounds.extra_degrees;
    report.parameters["ek_n"] = bounds.ek_n;
    report.parameters["ek_k"] = bounds.ek_k;
    report.parameters["adjunction_factor"] = bounds.adjunction_factor;
    report.parameters["adjunction_target"] = bounds.adjunction_target;
    report.parameters["duality_max"] = bounds.duality_max;
    const Rerun rerun_base = Rerun("hopf")
                                 .opt("coproduct-max", bounds.coproduct_max_size)
                                 .opt("skew-g-n", bounds.skew_g_n)
                                 .opt("skew-G-n", bounds.skew_G_n)
                                 .opt("extra", bounds.extra_degrees)
                                 .opt("ek-n", bounds.ek_n)
                                 .opt("ek-k", bounds.ek_k)
                                 .opt("adjunction-factor", bounds.adjunction_factor)
                                 .opt("adjunction-target", bounds.adjunction_target)
                                 .opt("duality-max", bounds.duality_max);
    std::vector<Job> jobs;

    // Delta(g_lam) = sum_{mu in lam} g_mu (x) g_{lam/mu}.
    for (const auto &lam : partitions_up_to(bounds.coproduct_max_size)) {
        if (!admits(filter.lambda, lam)) {
            continue;
        }
        jobs.push_back([=]() -> std::vector<Case> {
            const auto trunc = TruncationProfile::faithful(lam.size());
            const int vars = trunc.num_vars;
            SplitCoeffs rhs;
            for (const auto &mu : subpartitions(lam)) {
                add_tensor(rhs, dual_g(SkewShape(mu), trunc), dual_g(SkewShape(lam, mu), trunc), trunc.max_degree);
            }
            Json inputs = Json::object();
            inputs["lambda"] = to_json(lam);
            return {compare(std::move(inputs), "Delta(g[lam]) = sum_{mu in lam} g[mu] (x) g[lam/mu]",
                            split_alphabets(dual_g(SkewShape(lam), trunc), vars, vars), rhs,
                            Rerun(rerun_base).opt("lambda", lam))};
        });
    }

    // G_mu-perp g_lam = g_{lam/mu}.
    for (const auto &lam : subpartitions(staircase(bounds.skew_g_n))) {
        if (!admits(filter.lambda, lam)) {
            continue;
        }
        jobs.push_back([=]() -> std::vector<Case> {
            const auto trunc = TruncationProfile::faithful(lam.size());
            const auto g_lam = dual_g(SkewShape(lam), trunc);
            std::vector<Case> out;
            for (const auto &mu : subpartitions(lam)) {
                if (!admits(filter.mu, mu)) {
                    continue;
                }
                Json inputs = Json::object();
                inputs["lambda"] = to_json(lam);
                inputs["mu"] = to_json(mu);
                out.push_back(compare(std::move(inputs), "G[mu]-perp g[lam] = g[lam/mu]",
                                      skew_by(single(Basis::G, mu, trunc), g_lam), dual_g(SkewShape(lam, mu), trunc),
                                      Rerun(rerun_base).opt("lambda", lam).opt("mu", mu)));
            }
            return out;
        });
    }

    // Identities around G_rho and the rook-strip sums G_{rho//mu}.
    for (int m = 1; m <= bounds.skew_G_n; ++m) {
        const auto rho = staircase(m);
        const auto trunc = TruncationProfile::faithful(rho.size() + bounds.extra_degrees);
        for (const auto &mu : subpartitions(rho)) {
            if (!admits(filter.mu, mu)) {
                continue;
            }
            jobs.push_back([=]() -> std::vector<Case> {
                const auto rerun = Rerun(rerun_base).opt("mu", mu);
                // The pairing with g_mu reaches |mu| degrees up, so G_rho is
                // taken that much deeper before truncating the result.
                const auto deep = TruncationProfile::faithful(trunc.max_degree + mu.size());
                const auto skewed =
                    skew_by(single(Basis::g, mu, deep), big_G(SkewShape(rho), deep)).with_trunc(trunc);
                const auto double_mu = big_G_double(rho, mu, trunc);
                SymFunc rook_sum(trunc);
                for (const auto &sigma : subpartitions(mu)) {
                    rook_sum += big_G_double(rho, sigma, trunc);
                }
                Json inputs = Json::object();
                inputs["n"] = m;
                inputs["mu"] = to_json(mu);
                inputs["trunc"] = to_json(trunc);
                std::vector<Case> out;
                out.push_back(compare(inputs, "g[mu]-perp G[rho] = G[rho//mu]", skewed, double_mu, rerun));
                out.push_back(compare(inputs, "sum_{sigma in mu} G[rho//sigma] = G[rho/mu]", rook_sum,
                                      big_G(SkewShape(rho, mu), trunc), rerun));
                out.push_back(compare(inputs, "G[rho//mu] = G[rho//mu^T]", double_mu,
                                      big_G_double(rho, conjugate(mu), trunc), rerun));
                return out;
            });
        }
        if (!filter.mu && !filter.lambda) {
            jobs.push_back([=]() -> std::vector<Case> {
                const int vars = trunc.num_vars;
                SplitCoeffs rhs;
                for (const auto &nu : subpartitions(rho)) {
                    add_tensor(rhs, big_G(SkewShape(nu), trunc), big_G_double(rho, nu, trunc), trunc.max_degree);
                }
                Json inputs = Json::object();
                inputs["n"] = m;
                inputs["trunc"] = to_json(trunc);
                return {compare(std::move(inputs), "Delta(G[rho]) = sum_{nu in rho} G[nu] (x) G[rho//nu]",
                                split_alphabets(big_G(SkewShape(rho), trunc), vars, vars), rhs, rerun_base)};
            });
        }
    }

    // e_k-perp g_rho = tau(e_k)-perp g_rho.
    for (int m = 1; m <= bounds.ek_n; ++m) {
        for (int k = 1; k <= bounds.ek_k; ++k) {
            if (!admits(filter.k, k)) {
                continue;
            }
            jobs.push_back([=]() -> std::vector<Case> {
                const auto rho = staircase(m);
                const auto trunc = TruncationProfile::faithful(std::max(rho.size(), k));
                const auto g_rho = dual_g(SkewShape(rho), trunc);
                const auto e_k = basis_element(Basis::e, row(k), trunc);
                Json inputs = Json::object();
                inputs["n"] = m;
                inputs["k"] = k;
                return {compare(std::move(inputs), "e_k-perp g[rho] = tau(e_k)-perp g[rho]",
                                skew_by(single(Basis::e, row(k), trunc), g_rho), skew_by(tau(expand_in_G(e_k)), g_rho),
                                Rerun(rerun_base).opt("k", k))};
            });
        }
    }

    // <g, f-perp(a)> = <f g, a> over Schur functions.
    if (!filter.mu && !filter.k) {
        const int adj_degree = std::max(2 * bounds.adjunction_factor, bounds.adjunction_target);
        const auto trunc = TruncationProfile::faithful(adj_degree);
        const auto factors = partitions_up_to(bounds.adjunction_factor);
        for (const auto &f : factors) {
            for (const auto &a : partitions_up_to(bounds.adjunction_target)) {
                if (!admits(filter.lambda, a)) {
                    continue;
                }
                jobs.push_back([=]() -> std::vector<Case> {
                    const auto skewed = m_to_schur(skew_by(single(Basis::s, f, trunc), schur_to_m(a, trunc)));
                    const auto f_m = schur_to_m(f, trunc);
                    const auto a_s = single(Basis::s, a, trunc);
                    Json mismatches = Json::array();
                    for (const auto &g : factors) {
                        const auto lhs = hall_inner(single(Basis::s, g, trunc), skewed);
                        const auto rhs = hall_inner(m_to_schur(multiply(f_m, schur_to_m(g, trunc))), a_s);
                        if (lhs != rhs) {
                            Json entry = Json::object();
                            entry["g"] = to_json(g);
                            entry["lhs"] = lhs.str();
                            entry["rhs"] = rhs.str();
                            mismatches.push_back(std::move(entry));
                        }
                    }
                    Json inputs = Json::object();
                    inputs["f"] = to_json(f);
                    inputs["a"] = to_json(a);
                    Case c{std::move(inputs), "<s[g], s[f]-perp s[a]> = <s[f] s[g], s[a]> for every g", mismatches.empty(),
                           std::nullopt};
                    if (!c.holds) {
                        Json w = Json::object();
                        w["mismatches"] = std::move(mismatches);
                        w["rerun"] = Rerun(rerun_base).opt("lambda", a).str();
                        c.witness = std::move(w);
                    }
                    return {std::move(c)};
                });
            }
        }
    }

    // <G_lam, g_mu> = delta.
    if (!filter.mu && !filter.k) {
        const auto trunc = TruncationProfile::faithful(bounds.duality_max);
        for (const auto &lam : partitions_up_to(bounds.duality_max)) {
            if (!admits(filter.lambda, lam)) {
                continue;
            }
            jobs.push_back([=]() -> std::vector<Case> {
                const auto big = m_to_schur(big_G(SkewShape(lam), trunc));
                Json mismatches = Json::array();
                for (const auto &mu : partitions_up_to(bounds.duality_max)) {
                    const auto value = hall_inner(big, m_to_schur(dual_g(SkewShape(mu), trunc)));
                    if (value != (lam == mu ? 1 : 0)) {
                        Json entry = Json::object();
                        entry["mu"] = to_json(mu);
                        entry["pairing"] = value.str();
                        mismatches.push_back(std::move(entry));
                    }
                }
                Json inputs = Json::object();
                inputs["lambda"] = to_json(lam);
                inputs["trunc"] = to_json(trunc);
                Case c{std::move(inputs), "<G[lam], g[mu]> = delta_{lam,mu} for every mu", mismatches.empty(),
                       std::nullopt};
                if (!c.holds) {
                    Json w = Json::object();
                    w["mismatches"] = std::move(mismatches);
                    w["rerun"] = Rerun(rerun_base).opt("lambda", lam).str();
                    c.witness = std::move(w);
                }
                return {std::move(c)};
            });
        }
    }

    report.cases = run_jobs(jobs);
    return report;
}

namespace
{

// s_{lam/(k)} = s_{lam/(1^k)}, comparing monomial coefficients in graded
// order and stopping at the first difference. A shape that does not fit
// contributes 0.
bool skew_by_row_equals_column(const Partition &lam, int k)
{
    const bool row_fits = contains(lam, row(k));
    const bool column_fits = contains(lam, column(k));
    if (!row_fits || !column_fits) {
        return row_fits == column_fits;
    }
    const SkewShape by_row(lam, row(k));
    const SkewShape by_column(lam, column(k));
    for (const auto &nu : partitions_of(lam.size() - k)) {
        if (count_with_content(by_row, FillingKind::ssyt, nu.parts())
            != count_with_content(by_column, FillingKind::ssyt, nu.parts())) {
            return false;
        }
    }
    return true;
}

bool is_staircase(const Partition &lam)
{
    return lam == staircase(lam.length());
}

} // namespace

Report converse_scan(int max_size, const CaseFilter &filter)
{
    if (max_size < 0) {
        throw DomainError("converse scan needs a nonnegative size bound");
    }
    Report report;
    report.suite = "converse";
    report.parameters["max_size"] = max_size;
    std::vector<Job> jobs;
    std::vector<Partition> scanned;
    for (const auto &lam : partitions_up_to(max_size)) {
        if (!admits(filter.lambda, lam)) {
            continue;
        }
        scanned.push_back(lam);
        jobs.push_back([=]() -> std::vector<Case> {
            const int top = std::max(lam.length(), lam[0]);
            std::optional<int> first_failure;
            for (int k = 1; k <= top && !first_failure; ++k) {
                if (!skew_by_row_equals_column(lam, k)) {
                    first_failure = k;
                }
            }
            Json inputs = Json::object();
            inputs["lambda"] = to_json(lam);
            inputs["passes"] = !first_failure.has_value();
            inputs["first_failing_k"] = first_failure ? Json(*first_failure) : Json(nullptr);
            Case c{std::move(inputs), "s[lam/(k)] = s[lam/(1^k)] for all k iff lam is a staircase",
                   first_failure.has_value() != is_staircase(lam), std::nullopt};
            if (!c.holds) {
                Json w = Json::object();
                w["rerun"] = "staircase-groth scan --max-size " + std::to_string(lam.size()) + " --lambda "
                             + quoted(to_string(lam));
                c.witness = std::move(w);
            }
            return {std::move(c)};
        });
    }
    report.cases = run_jobs(jobs);
    Json passing = Json::array();
    for (std::size_t i = 0; i < scanned.size(); ++i) {
        if (report.cases[i].inputs["passes"].get<bool>()) {
            passing.push_back(to_json(scanned[i]));
        }
    }
    report.summary["passing"] = std::move(passing);
    return report;
}

} // namespace sgroth

namespace sgroth
{

namespace
{

using Exponents = std::vector<int>;
using Polynomial = std::map<Exponents, Integer>;

Polynomial expand_polynomial(const SymFunc &f, int vars)
{
    Polynomial out;
    for (const auto &[lam, c] : f.coeffs()) {
        Exponents e(static_cast<std::size_t>(vars), 0);
        std::copy(lam.parts().rbegin(), lam.parts().rend(), e.end() - lam.length());
        do {
            out[e] += c;
        } while (std::next_permutation(e.begin(), e.end()));
    }
    return out;
}

SymFunc collect_polynomial(const Polynomial &p, TruncationProfile trunc)
{
    SymFunc out(trunc);
    for (const auto &[e, c] : p) {
        if (std::is_sorted(e.begin(), e.end(), std::greater<>())) {
            out.add_term(Partition(e), c);
        }
    }
    return out;
}

SymFunc multiply_explicitly(const SymFunc &f, const SymFunc &g)
{
    const auto trunc = f.trunc();
    const auto pf = expand_polynomial(f, trunc.num_vars);
    const auto pg = expand_polynomial(g, trunc.num_vars);
    Polynomial product;
    for (const auto &[a, ca] : pf) {
        const int da = std::accumulate(a.begin(), a.end(), 0);
        for (const auto &[b, cb] : pg) {
            if (da + std::accumulate(b.begin(), b.end(), 0) > trunc.max_degree) {
                continue;
            }
            Exponents e(a.size());
            std::transform(a.begin(), a.end(), b.begin(), e.begin(), std::plus<>());
            product[e] += ca * cb;
        }
    }
    return collect_polynomial(product, trunc);
}

} // namespace

Report verify_multiply(int pairs, int max_degree, std::uint64_t seed)
{
    if (pairs < 0 || max_degree < 1) {
        throw DomainError("multiply check needs pairs >= 0 and max degree >= 1");
    }
    Report report;
    report.suite = "multiply";
    report.parameters["pairs"] = pairs;
    report.parameters["max_deg"] = max_degree;
    report.parameters["seed"] = seed;
    const auto trunc = TruncationProfile::faithful(max_degree);
    report.modulus = trunc;

    // Draws happen up front, in order, so the cases do not depend on scheduling.
    std::mt19937_64 rng(seed);
    const Basis tags[] = {Basis::m, Basis::e, Basis::h};
    auto draw_partition = [&](int degree) {
        const auto all = partitions_of(degree);
        return all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
    };
    std::vector<Job> jobs;
    for (int i = 0; i < pairs; ++i) {
        const int d1 = std::uniform_int_distribution<int>(0, max_degree)(rng);
        const int d2 = std::uniform_int_distribution<int>(0, max_degree - d1)(rng);
        const Basis t1 = tags[std::uniform_int_distribution<int>(0, 2)(rng)];
        const Basis t2 = tags[std::uniform_int_distribution<int>(0, 2)(rng)];
        const auto lam = draw_partition(d1);
        const auto mu = draw_partition(d2);
        jobs.push_back([=]() -> std::vector<Case> {
            const auto f = basis_element(t1, lam, trunc);
            const auto g = basis_element(t2, mu, trunc);
            Json inputs = Json::object();
            inputs["index"] = i;
            inputs["left"] = std::string(to_string(t1)) + "[" + to_string(lam) + "]";
            inputs["right"] = std::string(to_string(t2)) + "[" + to_string(mu) + "]";
            return {compare(std::move(inputs), "multiply(f, g) = explicit polynomial product", multiply(f, g),
                            multiply_explicitly(f, g),
                            Rerun("multiply").opt("pairs", pairs).opt("deg", max_degree).opt("seed", std::to_string(seed)))};
        });
    }
    report.cases = run_jobs(jobs);
    return report;
}

} // namespace sgroth
