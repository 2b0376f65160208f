#include <sgroth/cli.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include <sgroth/errors.hpp>
#include <sgroth/grothendieck.hpp>
#include <sgroth/report.hpp>
#include <sgroth/verify.hpp>

namespace sgroth::cli
{

namespace
{

// A command-line problem attributable to one option; the message starts with
// the option name.
class UsageError : public std::runtime_error
{
public:
    UsageError(const std::string &option, const std::string &what) : std::runtime_error(option + ": " + what) {}
};

Partition partition_option(const std::string &option, const std::string &text)
{
    try {
        return parse_partition(text);
    } catch (const Error &e) {
        throw UsageError(option, e.what());
    }
}

std::optional<Partition> partition_option(const std::string &option, const std::optional<std::string> &text)
{
    if (!text) {
        return std::nullopt;
    }
    return partition_option(option, *text);
}

SkewShape shape_option(const std::string &option, const std::string &text)
{
    try {
        return parse_skew_shape(text);
    } catch (const Error &e) {
        throw UsageError(option, e.what());
    }
}

void add_format(CLI::App *cmd, std::string &format)
{
    cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
}

// What to compute, as given on the command line.
struct Source {
    std::string kind;
    std::string shape;
    std::optional<std::string> mu;
    std::optional<int> vars;
    std::optional<int> deg;
};

void add_source(CLI::App *cmd, Source &src)
{
    cmd->add_option("--kind", src.kind, "s, g, G, G-double (or m, e, h for expand)")->required();
    cmd->add_option("--shape", src.shape, "Skew shape outer/inner, or the outer partition for G-double")->required();
    cmd->add_option("--mu", src.mu, "Inner partition of G-double");
    cmd->add_option("--vars", src.vars, "Number of variables (at least the degree; default: the degree)");
    cmd->add_option("--deg", src.deg, "Truncation degree");
}

struct Computed {
    SymFunc value;
    std::string label;
};

TruncationProfile source_profile(const Source &src, int natural_degree)
{
    const int deg = src.deg.value_or(natural_degree);
    if (deg < 0) {
        throw UsageError("--deg", "must be nonnegative");
    }
    const int vars = src.vars.value_or(std::max(deg, 1));
    if (vars < 1) {
        throw UsageError("--vars", "must be positive");
    }
    if (vars < deg) {
        throw UsageError("--vars", std::to_string(vars) + " variables cannot decide equality up to degree "
                                       + std::to_string(deg) + "; use at least " + std::to_string(deg));
    }
    return TruncationProfile(deg, vars);
}

Computed compute_source(const Source &src, bool allow_classical)
{
    const auto &kind = src.kind;
    try {
        if (kind == "s" || kind == "g" || kind == "G") {
            if (src.mu) {
                throw UsageError("--mu", "only G-double takes --mu");
            }
            const auto shape = shape_option("--shape", src.shape);
            const auto trunc = source_profile(src, shape.size());
            const auto value = kind == "s" ? schur(shape, trunc) : kind == "g" ? dual_g(shape, trunc) : big_G(shape, trunc);
            return {value, kind + "[" + to_string(shape) + "]"};
        }
        if (kind == "G-double") {
            const auto outer = partition_option("--shape", src.shape);
            const auto mu = partition_option("--mu", src.mu.value_or(""));
            if (!contains(outer, mu)) {
                throw UsageError("--mu", to_string(mu) + " is not contained in " + to_string(outer));
            }
            const auto trunc = source_profile(src, outer.size() - mu.size());
            return {big_G_double(outer, mu, trunc), "G[" + to_string(outer) + "//" + to_string(mu) + "]"};
        }
        if (allow_classical && (kind == "m" || kind == "e" || kind == "h")) {
            const auto lam = partition_option("--shape", src.shape);
            const auto trunc = source_profile(src, lam.size());
            return {basis_element(parse_basis(kind), lam, trunc), kind + "[" + to_string(lam) + "]"};
        }
    } catch (const DegreeError &e) {
        throw UsageError("--deg", e.what());
    }
    throw UsageError("--kind", "unknown kind '" + kind + "'");
}

std::string coeff_list_text(char prefix, const CoeffMap &coeffs)
{
    if (coeffs.empty()) {
        return "0";
    }
    std::string text;
    for (const auto &[lam, c] : coeffs) {
        if (!text.empty()) {
            text += ' ';
        }
        text += prefix;
        text += "[" + to_string(lam) + "]=" + c.str();
    }
    return text;
}

void emit_expansion(std::ostream &out, const std::string &format, const std::string &kind, Basis basis,
                    const TruncationProfile &trunc, const CoeffMap &coeffs)
{
    const auto basis_name = std::string(to_string(basis));
    if (format == "json") {
        Json j = Json::object();
        j["kind"] = kind;
        j["basis"] = basis_name;
        j["trunc"] = to_json(trunc);
        j["coeffs"] = to_json(SymFunc(trunc, coeffs));
        out << j.dump(2) << "\n";
        return;
    }
    out << kind << " in basis " << basis_name << ", vars " << trunc.num_vars << ", max_deg " << trunc.max_degree
        << "\n"
        << coeff_list_text(basis_name[0], coeffs) << "\n";
}

int emit_reports(std::ostream &out, const std::string &format, const std::vector<Report> &reports)
{
    bool passed = true;
    for (const auto &r : reports) {
        passed = passed && r.passed();
    }
    if (format == "json") {
        if (reports.size() == 1) {
            out << to_json(reports.front()).dump(2) << "\n";
        } else {
            Json all = Json::array();
            for (const auto &r : reports) {
                all.push_back(to_json(r));
            }
            out << all.dump(2) << "\n";
        }
    } else {
        for (const auto &r : reports) {
            out << to_text(r);
        }
    }
    return passed ? exit_ok : exit_verification_failed;
}

// Concatenates reports of one suite taken over several parameter values.
Report merge(std::string suite, Json parameters, std::vector<Report> parts)
{
    Report out;
    out.suite = std::move(suite);
    out.parameters = std::move(parameters);
    for (auto &p : parts) {
        std::move(p.cases.begin(), p.cases.end(), std::back_inserter(out.cases));
        std::move(p.findings.begin(), p.findings.end(), std::back_inserter(out.findings));
    }
    if (parts.size() == 1) {
        out.modulus = parts.front().modulus;
    }
    return out;
}

struct VerifyOptions {
    std::string suite;
    std::optional<int> n;
    std::optional<int> extra;
    std::optional<int> k;
    std::optional<std::string> nu;
    std::optional<std::string> mu;
    std::optional<std::string> lambda;
    std::optional<int> polynomial_n;
    bool literal = false;
    std::optional<int> k_max;
    std::optional<int> deg;
    std::optional<int> h_max;
    std::optional<std::string> pieri_box;
    std::optional<int> pieri_k;
    std::optional<int> coproduct_max;
    std::optional<int> skew_g_n;
    std::optional<int> skew_G_n;
    std::optional<int> ek_n;
    std::optional<int> ek_k;
    std::optional<int> adjunction_factor;
    std::optional<int> adjunction_target;
    std::optional<int> duality_max;
    int pairs = 100;
    std::uint64_t seed = default_seed;
};

void require_positive(const std::string &option, const std::optional<int> &value)
{
    if (value && *value < 1) {
        throw UsageError(option, "must be positive");
    }
}

void require_nonnegative(const std::string &option, const std::optional<int> &value)
{
    if (value && *value < 0) {
        throw UsageError(option, "must be nonnegative");
    }
}

std::vector<Report> run_suite(const std::string &suite, const VerifyOptions &o, const CaseFilter &filter)
{
    if (suite == "stembridge-g") {
        if (o.n) {
            return {verify_stembridge_g(*o.n, filter)};
        }
        std::vector<Report> parts;
        for (int n = 1; n <= 4; ++n) {
            parts.push_back(verify_stembridge_g(n, filter));
        }
        return {merge(suite, Json{{"n_max", 4}}, std::move(parts))};
    }
    if (suite == "stembridge-G") {
        const int extra = o.extra.value_or(3);
        if (o.n) {
            return {verify_stembridge_G(*o.n, extra, filter)};
        }
        std::vector<Report> parts;
        for (int n = 1; n <= 3; ++n) {
            parts.push_back(verify_stembridge_G(n, extra, filter));
        }
        return {merge(suite, Json{{"n_max", 3}, {"extra_degrees", extra}}, std::move(parts))};
    }
    if (suite == "lattice-rules") {
        const int polynomial_n = o.polynomial_n.value_or(-1);
        if (o.n) {
            return {verify_lattice_rules(*o.n, polynomial_n, filter)};
        }
        // The G identity covers every staircase up to polynomial_n, so it is
        // requested once, with the largest n.
        std::vector<Report> parts;
        for (int n = 1; n <= 4; ++n) {
            parts.push_back(verify_lattice_rules(n, n == 4 ? (polynomial_n < 0 ? 3 : polynomial_n) : 0, filter));
        }
        return {merge(suite, Json{{"n_max", 4}}, std::move(parts))};
    }
    if (suite == "alpha-recurrence") {
        const int n = o.n.value_or(4);
        if (o.k) {
            if (*o.k >= n) {
                throw UsageError("--k", "the recurrence needs k < n");
            }
            return {verify_alpha_recurrence(n, *o.k, !o.literal, filter)};
        }
        if (o.literal) {
            throw UsageError("--literal", "needs --k");
        }
        return {verify_alpha_recurrences(n, filter)};
    }
    if (suite == "basis-identities") {
        BasisBounds b;
        b.k_max = o.k_max.value_or(b.k_max);
        b.max_degree = o.deg.value_or(std::max(b.max_degree, b.k_max));
        b.h_max = o.h_max.value_or(b.h_max);
        if (o.pieri_box) {
            b.pieri_box = partition_option("--pieri-box", *o.pieri_box);
        }
        b.pieri_k = o.pieri_k.value_or(b.pieri_k);
        if (b.max_degree < b.k_max) {
            throw UsageError("--deg", "must be at least --k-max");
        }
        return {verify_basis_identities(b)};
    }
    if (suite == "hopf") {
        HopfBounds b;
        if (o.n) {
            const int rho_size = *o.n * (*o.n + 1) / 2;
            b = HopfBounds::staircase(*o.n, o.deg.value_or(rho_size + 2));
        } else if (o.deg) {
            throw UsageError("--deg", "hopf takes --deg together with --n");
        }
        b.extra_degrees = o.extra.value_or(b.extra_degrees);
        b.coproduct_max_size = o.coproduct_max.value_or(b.coproduct_max_size);
        b.skew_g_n = o.skew_g_n.value_or(b.skew_g_n);
        b.skew_G_n = o.skew_G_n.value_or(b.skew_G_n);
        b.ek_n = o.ek_n.value_or(b.ek_n);
        b.ek_k = o.ek_k.value_or(b.ek_k);
        b.adjunction_factor = o.adjunction_factor.value_or(b.adjunction_factor);
        b.adjunction_target = o.adjunction_target.value_or(b.adjunction_target);
        b.duality_max = o.duality_max.value_or(b.duality_max);
        return {verify_hopf(b, filter)};
    }
    if (suite == "multiply") {
        return {verify_multiply(o.pairs, o.deg.value_or(6), o.seed)};
    }
    if (suite == "converse") {
        return {converse_scan(o.n.value_or(12), filter)};
    }
    throw UsageError("--suite", "unknown suite '" + suite + "'");
}

const std::vector<std::string> &suite_names()
{
    static const std::vector<std::string> names{"stembridge-g",     "stembridge-G", "lattice-rules", "alpha-recurrence",
                                                "basis-identities", "hopf",         "multiply",      "converse"};
    return names;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Skew Schur, stable and dual stable Grothendieck polynomials on staircase shapes", "staircase-groth"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for every command");

    std::string format = "text";

    auto *compute = app.add_subcommand("compute", "Monomial expansion of s, g, G or G-double");
    Source compute_src;
    add_source(compute, compute_src);
    add_format(compute, format);

    auto *expand = app.add_subcommand("expand", "Expansion of a function in another basis");
    Source expand_src;
    std::string target_basis;
    add_source(expand, expand_src);
    expand->add_option("--basis", target_basis, "Target basis")
        ->required()
        ->check(CLI::IsMember({"m", "s", "g", "G", "e", "h"}));
    add_format(expand, format);

    auto *coeff = app.add_subcommand("coeff", "Lattice coefficient c or alpha");
    std::string coeff_kind;
    std::optional<std::string> coeff_nu, coeff_mu, coeff_lambda, coeff_shape;
    coeff->add_option("which", coeff_kind, "c or alpha")->required()->check(CLI::IsMember({"c", "alpha"}));
    coeff->add_option("--nu", coeff_nu, "c: first factor; alpha: content");
    coeff->add_option("--mu", coeff_mu, "c: second factor");
    coeff->add_option("--lambda", coeff_lambda, "c: target partition");
    coeff->add_option("--shape", coeff_shape, "alpha: skew shape");
    add_format(coeff, format);

    auto *verify = app.add_subcommand("verify", "Run an identity suite");
    VerifyOptions vo;
    std::vector<std::string> suites = suite_names();
    suites.emplace_back("all");
    verify->add_option("--suite", vo.suite, "Suite name")->required()->check(CLI::IsMember(suites));
    verify->add_option("--n", vo.n, "Staircase size (converse: size bound)");
    verify->add_option("--extra", vo.extra, "Degrees kept beyond the lowest one in G comparisons");
    verify->add_option("--k", vo.k, "Restrict to one k");
    verify->add_option("--nu", vo.nu, "Restrict to one nu");
    verify->add_option("--mu", vo.mu, "Restrict to one mu");
    verify->add_option("--lambda", vo.lambda, "Restrict to one lambda");
    verify->add_option("--polynomial-n", vo.polynomial_n, "lattice-rules: largest staircase for the G identity");
    verify->add_flag("--literal", vo.literal, "alpha-recurrence: record the literal form only");
    verify->add_option("--k-max", vo.k_max, "basis-identities: largest k");
    verify->add_option("--deg", vo.deg, "Truncation degree");
    verify->add_option("--h-max", vo.h_max, "basis-identities: largest k for g[(k)] = h_k");
    verify->add_option("--pieri-box", vo.pieri_box, "basis-identities: partitions checked lie inside this one");
    verify->add_option("--pieri-k", vo.pieri_k, "basis-identities: largest strip size");
    verify->add_option("--coproduct-max", vo.coproduct_max, "hopf: largest |lambda| for Delta(g)");
    verify->add_option("--skew-g-n", vo.skew_g_n, "hopf: staircase for G-perp g");
    verify->add_option("--skew-G-n", vo.skew_G_n, "hopf: staircase for g-perp G");
    verify->add_option("--ek-n", vo.ek_n, "hopf: staircase for e_k-perp");
    verify->add_option("--ek-k", vo.ek_k, "hopf: largest k for e_k-perp");
    verify->add_option("--adjunction-factor", vo.adjunction_factor, "hopf: largest degree of f and g");
    verify->add_option("--adjunction-target", vo.adjunction_target, "hopf: largest degree of a");
    verify->add_option("--duality-max", vo.duality_max, "hopf: largest size in the duality check");
    verify->add_option("--pairs", vo.pairs, "multiply: number of random pairs");
    verify->add_option("--seed", vo.seed, "Seed for randomized suites");
    add_format(verify, format);

    auto *scan = app.add_subcommand("scan", "Which partitions satisfy s[lam/(k)] = s[lam/(1^k)] for all k");
    int max_size = 12;
    std::optional<std::string> scan_lambda;
    scan->add_option("--max-size", max_size, "Largest partition size scanned");
    scan->add_option("--lambda", scan_lambda, "Restrict to one partition");
    add_format(scan, format);

    std::vector<const char *> argv{"staircase-groth"};
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &e) {
        app.exit(e, out, err);
        return exit_ok;
    } catch (const CLI::CallForAllHelp &e) {
        app.exit(e, out, err);
        return exit_ok;
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return exit_usage;
    }

    try {
        if (compute->parsed()) {
            const auto result = compute_source(compute_src, false);
            emit_expansion(out, format, compute_src.kind, Basis::m, result.value.trunc(), result.value.coeffs());
            return exit_ok;
        }
        if (expand->parsed()) {
            const auto result = compute_source(expand_src, true);
            const auto basis = parse_basis(target_basis);
            BasisExpansion expansion{Basis::m, result.value.coeffs(), result.value.trunc()};
            switch (basis) {
                case Basis::m:
                    break;
                case Basis::s:
                    expansion = m_to_schur(result.value);
                    break;
                case Basis::g:
                    expansion = expand_in_g(result.value);
                    break;
                case Basis::G:
                    expansion = expand_in_G(result.value);
                    break;
                case Basis::e:
                    expansion = expand_in_e(result.value);
                    break;
                case Basis::h:
                    expansion = expand_in_h(result.value);
                    break;
            }
            emit_expansion(out, format, expand_src.kind, basis, expansion.trunc, expansion.coeffs);
            return exit_ok;
        }
        if (coeff->parsed()) {
            SignedCount count;
            Json inputs = Json::object();
            std::string label;
            if (coeff_kind == "c") {
                if (!coeff_nu || !coeff_mu || !coeff_lambda) {
                    throw UsageError(!coeff_nu ? "--nu" : !coeff_mu ? "--mu" : "--lambda", "required for c");
                }
                const auto nu = partition_option("--nu", *coeff_nu);
                const auto mu = partition_option("--mu", *coeff_mu);
                const auto lam = partition_option("--lambda", *coeff_lambda);
                count = lr_coeff(nu, mu, lam);
                inputs["nu"] = to_json(nu);
                inputs["mu"] = to_json(mu);
                inputs["lambda"] = to_json(lam);
                label = "c[" + to_string(lam) + "; " + to_string(nu) + ", " + to_string(mu) + "]";
            } else {
                if (!coeff_shape || !coeff_nu) {
                    throw UsageError(!coeff_shape ? "--shape" : "--nu", "required for alpha");
                }
                const auto shape = shape_option("--shape", *coeff_shape);
                const auto nu = partition_option("--nu", *coeff_nu);
                count = alpha(shape, nu);
                inputs["shape"] = to_string(shape);
                inputs["nu"] = to_json(nu);
                label = "alpha[" + to_string(shape) + "; " + to_string(nu) + "]";
            }
            if (format == "json") {
                Json j = Json::object();
                j["kind"] = coeff_kind;
                j["inputs"] = std::move(inputs);
                j["value"] = count.value.str();
                j["sign_exponent"] = count.sign_exponent;
                j["signed"] = count.signed_value().str();
                out << j.dump(2) << "\n";
            } else {
                out << label << " = " << count.value << " (sign exponent " << count.sign_exponent << ", signed "
                    << count.signed_value() << ")\n";
            }
            return exit_ok;
        }
        if (verify->parsed()) {
            for (const auto &[name, value] :
                 {std::pair{"--n", vo.n}, {"--k", vo.k}, {"--k-max", vo.k_max}, {"--h-max", vo.h_max},
                  {"--pieri-k", vo.pieri_k}, {"--skew-g-n", vo.skew_g_n}, {"--skew-G-n", vo.skew_G_n},
                  {"--ek-n", vo.ek_n}, {"--ek-k", vo.ek_k}}) {
                require_positive(name, value);
            }
            for (const auto &[name, value] :
                 {std::pair{"--extra", vo.extra}, {"--deg", vo.deg}, {"--polynomial-n", vo.polynomial_n},
                  {"--coproduct-max", vo.coproduct_max}, {"--adjunction-factor", vo.adjunction_factor},
                  {"--adjunction-target", vo.adjunction_target}, {"--duality-max", vo.duality_max}}) {
                require_nonnegative(name, value);
            }
            if (vo.pairs < 0) {
                throw UsageError("--pairs", "must be nonnegative");
            }
            CaseFilter filter;
            filter.k = vo.k;
            filter.nu = partition_option("--nu", vo.nu);
            filter.mu = partition_option("--mu", vo.mu);
            filter.lambda = partition_option("--lambda", vo.lambda);
            std::vector<Report> reports;
            if (vo.suite == "all") {
                for (const auto &name : suite_names()) {
                    auto part = run_suite(name, vo, filter);
                    std::move(part.begin(), part.end(), std::back_inserter(reports));
                }
            } else {
                reports = run_suite(vo.suite, vo, filter);
            }
            return emit_reports(out, format, reports);
        }
        if (scan->parsed()) {
            if (max_size < 0) {
                throw UsageError("--max-size", "must be nonnegative");
            }
            CaseFilter filter;
            filter.lambda = partition_option("--lambda", scan_lambda);
            return emit_reports(out, format, {converse_scan(max_size, filter)});
        }
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}

} // namespace sgroth::cli
