#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lenstc/bounds.hpp"
#include "lenstc/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInconsistent = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

constexpr const char* kLimitEnvVar = "LENSTC_MONOMIAL_LIMIT";

std::int64_t parse_int(const std::string& text, const char* what) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw lenstc::domain_error(std::string(what) + ": not an integer: " + text);
    return value;
}

lenstc::Range parse_range(const std::string& text, const char* what) {
    auto pos = text.find(':');
    if (pos == std::string::npos) {
        auto v = parse_int(text, what);
        return {v, v};
    }
    return {parse_int(text.substr(0, pos), what),
            parse_int(text.substr(pos + 1), what)};
}

std::uint64_t resolve_limit(std::uint64_t flag_value, bool flag_given) {
    if (flag_given) return flag_value;
    if (const char* env = std::getenv(kLimitEnvVar)) {
        std::string text(env);
        std::uint64_t value = 0;
        auto [ptr, ec] =
            std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0)
            throw lenstc::domain_error(std::string(kLimitEnvVar) +
                                       ": not a positive integer: " + text);
        return value;
    }
    return lenstc::kDefaultMonomialLimit;
}

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output_path, std::ios::binary);
    if (!out) throw lenstc::domain_error("cannot open output file " + output_path);
    out << text;
}

std::string join(const std::vector<std::string>& parts) {
    std::string s;
    for (const auto& p : parts) {
        if (!s.empty()) s += ", ";
        s += p;
    }
    return s;
}

std::string human_kind(lenstc::BoundKind kind) {
    switch (kind) {
        case lenstc::BoundKind::Dimensional: return "dimensional";
        case lenstc::BoundKind::Fibration: return "fibration over the base";
        case lenstc::BoundKind::SubspaceFibration: return "subspace fibration";
        case lenstc::BoundKind::Covering: return "covering space";
        case lenstc::BoundKind::GroupAction: return "group action";
        case lenstc::BoundKind::LensFreeCircle: break;
    }
    return "free circle action";
}

std::string human_report(const lenstc::BoundReport& rep) {
    std::ostringstream out;
    out << "L^" << 2 * rep.n + 1 << "_" << rep.m << ", k = " << rep.k << "\n";
    const auto& cert = rep.certificate;
    out << "  lower bound  " << rep.lower << "   (l, l') = (" << cert.l << ", "
        << cert.l_prime << "), " << (cert.even_branch ? "even" : "odd")
        << " branch, weight " << cert.weight_total << "\n";
    out << "  divisibility m " << (cert.divisibility_ok ? "∤" : "|") << " C("
        << cert.l + cert.l_prime << ", " << cert.l_prime << ")^" << rep.k / 2;
    for (const auto& ev : cert.divisibility)
        out << "  [p=" << ev.p << ": e=" << ev.e << ", v_p=" << ev.vp
            << ", scaled=" << ev.vp_scaled << (ev.blocks ? ", blocks" : "") << "]";
    out << "\n";
    out << "  symbolic     " << to_string(cert.symbolic_nonzero);
    if (cert.witness_monomial) out << ", witness " << cert.witness_rendered;
    out << "\n";
    out << "  upper bound  " << rep.upper << "   (" << human_kind(rep.upper_kind)
        << ")\n";
    if (rep.exact)
        out << "  exact        " << *rep.exact << "\n";
    else
        out << "  exact        open (gap " << rep.upper - rep.lower << ")\n";
    if (!rep.theorems_fired.empty())
        out << "  rules        " << join(rep.theorems_fired) << "\n";
    if (!rep.notes.empty()) out << "  notes        " << join(rep.notes) << "\n";
    return out.str();
}

std::string json_text(const nlohmann::json& j) { return j.dump(2) + "\n"; }

int run_lens(std::int64_t n, std::int64_t m, std::int64_t k, bool as_json,
             lenstc::VerifyMode mode, std::uint64_t limit,
             const std::string& output_path) {
    auto rep = lenstc::report(n, m, k, mode, limit);
    emit(as_json ? json_text(lenstc::to_json(rep)) : human_report(rep),
         output_path);
    return rep.consistent ? kExitOk : kExitInconsistent;
}

int run_table(const std::string& n_text, const std::string& m_text,
              const std::string& k_text, bool as_json, bool as_csv,
              lenstc::VerifyMode mode, std::uint64_t limit,
              const std::string& output_path) {
    auto rows = lenstc::table(parse_range(n_text, "--n"), parse_range(m_text, "--m"),
                              parse_range(k_text, "--k"), mode, limit);
    std::string text;
    if (as_json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& rep : rows) arr.push_back(lenstc::to_json(rep));
        text = json_text(arr);
    } else if (as_csv) {
        text = lenstc::csv_header() + "\n";
        for (const auto& rep : rows) text += lenstc::csv_row(rep) + "\n";
    } else {
        std::ostringstream out;
        out << lenstc::csv_header() << "\n";
        for (const auto& rep : rows) out << lenstc::csv_row(rep) << "\n";
        text = out.str();
    }
    emit(text, output_path);
    for (const auto& rep : rows)
        if (!rep.consistent) return kExitInconsistent;
    return kExitOk;
}

int run_ring(std::int64_t n, std::int64_t m, std::int64_t k,
             const std::string& expr, bool as_json, std::uint64_t limit,
             const std::string& output_path) {
    std::istringstream in(expr);
    std::string name;
    std::vector<std::string> args;
    in >> name;
    for (std::string tok; in >> tok;) args.push_back(tok);

    auto spec = lenstc::ring_new(n, m, k, limit);
    lenstc::TensorElement element = lenstc::zero(spec);
    if (name == "xbar" || name == "ybar") {
        if (args.size() != 1)
            throw lenstc::domain_error("expression " + name +
                                       " takes one factor index");
        auto i = parse_int(args[0], "--expr index");
        element = name == "xbar" ? lenstc::xbar(spec, i) : lenstc::ybar(spec, i);
    } else if (name == "zbar") {
        if (!args.empty())
            throw lenstc::domain_error("expression zbar takes no arguments");
        element = lenstc::zbar(spec);
    } else if (name == "certificate") {
        if (args.size() != 2)
            throw lenstc::domain_error("expression certificate takes l and l'");
        element = lenstc::certificate_product(spec, parse_int(args[0], "--expr l"),
                                              parse_int(args[1], "--expr l'"));
    } else {
        throw lenstc::domain_error("unknown expression name: " + name);
    }

    if (as_json) {
        nlohmann::json j = {
            {"n", n},
            {"m", m},
            {"k", k},
            {"expr", expr},
            {"element", lenstc::render(element)},
            {"zero", element.is_zero()},
        };
        if (auto deg = element.degree())
            j["degree"] = *deg;
        else
            j["degree"] = nullptr;
        emit(json_text(j), output_path);
    } else {
        emit(lenstc::render(element) + "\n", output_path);
    }
    return kExitOk;
}

int run_bounds(const std::string& kind,
               const std::map<std::string, std::int64_t>& given, bool as_json,
               const std::string& output_path) {
    auto need = [&](const char* name) {
        auto it = given.find(name);
        if (it == given.end())
            throw lenstc::domain_error("bounds --kind " + kind +
                                       " needs --" + std::string(name));
        return it->second;
    };
    lenstc::BoundFact fact;
    if (kind == "dimensional")
        fact = lenstc::dimensional_fact(need("k"), need("dim"));
    else if (kind == "fibration")
        fact = lenstc::fibration_fact(need("tc-fiber"), need("cat-base-power"));
    else if (kind == "subspace_fibration")
        fact = lenstc::subspace_fibration_fact(need("cat-y"), need("tc-sub"));
    else if (kind == "covering")
        fact = lenstc::covering_fact(need("cat-base-power"));
    else if (kind == "group_action")
        fact = lenstc::group_action_fact(need("k"), need("dim-x"), need("dim-p"));
    else if (kind == "lens_free_circle")
        fact = lenstc::lens_free_circle_fact(need("n"), need("k"));
    else
        throw lenstc::domain_error("unknown bound kind: " + kind);

    if (as_json) {
        emit(json_text(lenstc::to_json(fact)), output_path);
    } else {
        std::ostringstream out;
        out << to_string(fact.kind) << " upper bound: " << fact.value << "\n";
        for (const auto& [name, value] : fact.inputs)
            out << "  " << name << " = " << value << "\n";
        for (const auto& a : fact.assumptions) out << "  assumes " << a << "\n";
        emit(out.str(), output_path);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"certified lower bounds, formulaic upper bounds and exact values "
                 "of the higher topological complexity of lens spaces"};
    app.require_subcommand(1);

    std::int64_t n = 0, m = 0, k = 0;
    std::string n_text, m_text, k_text;
    std::string expr, bound_kind, output_path;
    bool as_json = false, as_csv = false;
    bool verify = false, no_verify = false;
    std::uint64_t limit = lenstc::kDefaultMonomialLimit;

    auto* lens = app.add_subcommand("lens", "bounds for one lens space");
    lens->add_option("--n", n, "truncation index (dimension 2n+1)")->required();
    lens->add_option("--m", m, "coefficient modulus")->required();
    lens->add_option("--k", k, "sequential motion planning arity")->required();
    lens->add_flag("--json", as_json, "emit JSON");
    auto* lens_verify = lens->add_flag("--verify", verify, "force the symbolic check");
    lens->add_flag("--no-verify", no_verify, "skip the symbolic check")
        ->excludes(lens_verify);
    auto* lens_limit = lens->add_option("--limit", limit, "monomial count limit");
    lens->add_option("--output", output_path, "write to file instead of stdout");

    auto* tbl = app.add_subcommand("table", "bounds over ranges n, m, k");
    tbl->add_option("--n", n_text, "range lo:hi or single value")->required();
    tbl->add_option("--m", m_text, "range lo:hi or single value")->required();
    tbl->add_option("--k", k_text, "range lo:hi or single value")->required();
    auto* tbl_json = tbl->add_flag("--json", as_json, "emit a JSON array");
    tbl->add_flag("--csv", as_csv, "emit CSV")->excludes(tbl_json);
    auto* tbl_verify = tbl->add_flag("--verify", verify, "force the symbolic check");
    tbl->add_flag("--no-verify", no_verify, "skip the symbolic check")
        ->excludes(tbl_verify);
    auto* tbl_limit = tbl->add_option("--limit", limit, "monomial count limit");
    tbl->add_option("--output", output_path, "write to file instead of stdout");

    auto* ring = app.add_subcommand("ring", "evaluate a named ring expression");
    ring->add_option("--n", n, "truncation index")->required();
    ring->add_option("--m", m, "coefficient modulus")->required();
    ring->add_option("--k", k, "tensor arity")->required();
    ring->add_option("--expr", expr,
                     "one of: 'xbar i', 'ybar i', 'zbar', \"certificate l l'\"")
        ->required();
    ring->add_flag("--json", as_json, "emit JSON");
    auto* ring_limit = ring->add_option("--limit", limit, "monomial count limit");
    ring->add_option("--output", output_path, "write to file instead of stdout");

    auto* bnd = app.add_subcommand("bounds", "evaluate one closed-form bound");
    bnd->add_option("--kind", bound_kind,
                    "dimensional | fibration | subspace_fibration | covering | "
                    "group_action | lens_free_circle")
        ->required();
    std::map<std::string, std::int64_t> bound_inputs;
    for (const char* name : {"k", "dim", "tc-fiber", "cat-base-power", "cat-y",
                             "tc-sub", "dim-x", "dim-p", "n"})
        bnd->add_option("--" + std::string(name), bound_inputs[name], name);
    bnd->add_flag("--json", as_json, "emit JSON");
    bnd->add_option("--output", output_path, "write to file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    auto mode = verify ? lenstc::VerifyMode::Force
                       : (no_verify ? lenstc::VerifyMode::Off
                                    : lenstc::VerifyMode::Auto);

    try {
        if (lens->parsed())
            return run_lens(n, m, k, as_json, mode,
                            resolve_limit(limit, lens_limit->count() > 0),
                            output_path);
        if (tbl->parsed())
            return run_table(n_text, m_text, k_text, as_json, as_csv, mode,
                             resolve_limit(limit, tbl_limit->count() > 0),
                             output_path);
        if (ring->parsed())
            return run_ring(n, m, k, expr, as_json,
                            resolve_limit(limit, ring_limit->count() > 0),
                            output_path);
        if (bnd->parsed()) {
            // keep only flags the user actually set
            std::map<std::string, std::int64_t> given;
            for (const auto& [name, value] : bound_inputs)
                if (bnd->count("--" + name) > 0) given[name] = value;
            return run_bounds(bound_kind, given, as_json, output_path);
        }
    } catch (const lenstc::sizing_error& e) {
        std::cerr << "resource guard: " << e.what() << "\n";
        return kExitResource;
    } catch (const lenstc::domain_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
