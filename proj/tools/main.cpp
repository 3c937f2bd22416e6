#include <cstdlib>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "thetakit/invariants.hpp"
#include "thetakit/parse_error.hpp"
#include "thetakit/products.hpp"
#include "thetakit/suite.hpp"

using namespace thetakit;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

std::vector<std::string> split_probes(const std::string& text)
{
    std::vector<std::string> out;
    std::stringstream in(text);
    for (std::string item; std::getline(in, item, ',');) {
        if (item.empty()) continue;
        if (item != "natural") {
            char* end = nullptr;
            const double q = std::strtod(item.c_str(), &end);
            if (end != item.c_str() + item.size() || !(q > 0 && q < 1)) throw CLI::ValidationError("--probes", "probe '" + item + "' is not in (0, 1)");
        }
        out.push_back(item);
    }
    if (out.empty()) throw CLI::ValidationError("--probes", "no probes given");
    return out;
}

void print_value(bool json, const std::string& command, nlohmann::ordered_json args, const RealValue& v, int digits,
                 const std::vector<std::string>& forms = {})
{
    if (json) {
        nlohmann::ordered_json j;
        j["command"] = command;
        j["inputs"] = std::move(args);
        j["digits"] = digits;
        j["value"] = v.value().to_string(digits);
        j["error_bound"] = v.error().to_string(3);
        if (!forms.empty()) j["forms_agree"] = forms;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << v.value().to_string(digits) << "\n";
        if (!forms.empty()) {
            std::cout << "forms in agreement:";
            for (const auto& f : forms) std::cout << " " << f;
            std::cout << "\n";
        }
    }
}

int emit(const RunReport& report, bool json)
{
    std::cout << (json ? to_json_lines(report) : to_text(report));
    return report.success() ? exit_ok : exit_failed;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Theta-function identities, class invariants and product evaluations at high precision"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", std::string(toolkit_version()));

    int digits = 100;
    long series_order = 720;
    std::string probes = "0.01,0.05,0.1,0.2,natural";
    bool json = false;
    std::string catalogue_path;
    std::string registry_path;
    unsigned threads = 0;
    app.add_option("--digits", digits, "Target decimal digits")->check(CLI::Range(10, 100000))->capture_default_str();
    app.add_option("--series-order", series_order, "Lattice steps checked by series verification")
        ->check(CLI::Range(1L, 1000000L))
        ->capture_default_str();
    app.add_option("--probes", probes, "Comma-separated nomes in (0,1); 'natural' is the record's own nome")
        ->capture_default_str();
    app.add_flag("--json", json, "Emit JSON Lines");
    app.add_option("--catalogue", catalogue_path, "Identity catalogue file")->check(CLI::ExistingFile);
    app.add_option("--registry", registry_path, "Closed-form registry file")->check(CLI::ExistingFile);
    app.add_option("--threads", threads, "Worker threads, 0 for all cores")->capture_default_str();

    std::string m_text, n_text, kind_text, id = "all";
    bool series = false, numeric = false, both = false;

    auto* eval_a = app.add_subcommand("eval-a", "Evaluate a_{m,n}");
    auto* eval_b = app.add_subcommand("eval-b", "Evaluate b_{m,n}");
    for (auto* sub : {eval_a, eval_b}) {
        sub->add_option("m", m_text)->required();
        sub->add_option("n", n_text)->required();
    }
    auto* eval_inv = app.add_subcommand("eval-invariant", "Evaluate g_n or G_n from its definition");
    eval_inv->add_option("kind", kind_text, "g or G")->required()->check(CLI::IsMember({"g", "G"}));
    eval_inv->add_option("n", n_text)->required();
    auto* eval_nome = app.add_subcommand("eval-nome", "Evaluate q = exp(-pi sqrt(m/n))");
    eval_nome->add_option("m", m_text)->required();
    eval_nome->add_option("n", n_text)->required();

    auto* verify_id = app.add_subcommand("verify-identity", "Verify catalogue identities");
    verify_id->add_option("id", id, "Identity id or 'all'")->required();
    auto* mode = verify_id->add_option_group("mode");
    mode->add_flag("--series", series, "Exact series only");
    mode->add_flag("--numeric", numeric, "Numeric probes only");
    mode->add_flag("--both", both, "Series and numeric (default)");
    mode->require_option(0, 1);

    auto* verify_cor = app.add_subcommand("verify-corollary", "Check registry closed forms against definitions");
    verify_cor->add_option("id", id, "Record id or 'all'")->required();
    auto* repro = app.add_subcommand("reproduce", "Derive closed-form values through the theorem pipeline");
    repro->add_option("id", id, "Record id or 'all'")->required();
    auto* suite = app.add_subcommand("run-suite", "Run every check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        SuiteOptions opts;
        opts.digits = digits;
        opts.series_order = series_order;
        opts.probes = split_probes(probes);
        opts.threads = threads;
        if (!catalogue_path.empty()) opts.catalogue = load_catalogue(catalogue_path);
        if (!registry_path.empty()) opts.registry = Registry::load(registry_path);
        opts.mode = series ? IdentityMode::series : numeric ? IdentityMode::numeric : IdentityMode::both;
        const PrecisionSpec prec = PrecisionSpec::for_digits(digits);

        if (eval_a->parsed() || eval_b->parsed()) {
            const Rational m = parse_rational(m_text), n = parse_rational(n_text);
            const ProductValue v = eval_a->parsed() ? a_numeric(m, n, prec) : b_numeric(m, n, prec);
            print_value(json, eval_a->parsed() ? "eval-a" : "eval-b", {{"m", to_string(m)}, {"n", to_string(n)}},
                        v.value, digits, v.forms_checked);
            return exit_ok;
        }
        if (eval_inv->parsed()) {
            const Rational n = parse_rational(n_text);
            const InvariantKind kind = kind_text == "g" ? InvariantKind::g : InvariantKind::G;
            print_value(json, "eval-invariant", {{"kind", kind_text}, {"n", to_string(n)}},
                        invariant_numeric(kind, n, prec), digits);
            return exit_ok;
        }
        if (eval_nome->parsed()) {
            const Rational m = parse_rational(m_text), n = parse_rational(n_text);
            WorkingPrecision wp(prec.working_digits());
            print_value(json, "eval-nome", {{"m", to_string(m)}, {"n", to_string(n)}}, nome(m, n, prec).q, digits);
            return exit_ok;
        }
        if (verify_id->parsed()) return emit(verify_identities(opts, id), json);
        if (verify_cor->parsed()) return emit(verify_corollaries(opts, id), json);
        if (repro->parsed()) return emit(reproduce(opts, id), json);
        if (suite->parsed()) return emit(run_suite(opts), json);
    } catch (const thetakit::ParseError& e) {
        std::cerr << "thetakit: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::out_of_range& e) {
        std::cerr << "thetakit: " << e.what() << "\n";
        return exit_usage;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "thetakit: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "thetakit: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "thetakit: " << e.what() << "\n";
        return exit_failed;
    }
    return exit_usage;
}
