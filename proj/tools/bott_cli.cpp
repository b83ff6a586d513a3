// Command-line front end for Bott tower Seshadri-constant computations.
//
// Subcommands: info, nef, seshadri, strata, inf, sup, verify.
// Exit codes: 0 success, 1 domain error (structured object with --json),
// 2 usage error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "bott/bott.hpp"
#include "bott/io.hpp"

namespace {

using bott::Int;
using bott::json;

struct TowerArgs {
    std::string tower_file;
    std::string inline_rows;  // rows separated by ';', entries by ','
    int n = 0;
};

struct OutputArgs {
    bool as_json = false;
    bool formal = false;
};

Int parse_int_token(const std::string& token, const std::string& where) {
    std::string t(bott::detail::trim(token));
    std::string digits = t;
    if (!digits.empty() && (digits.front() == '+' || digits.front() == '-'))
        digits.erase(digits.begin());
    if (!bott::detail::all_digits(digits))
        throw bott::ParseError(where + ": not an integer: '" + token + "'");
    return Int(t);
}

std::vector<Int> parse_int_list(const std::string& text, char sep, const std::string& where) {
    std::vector<Int> out;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, sep)) out.push_back(parse_int_token(token, where));
    if (out.empty()) throw bott::ParseError(where + ": empty list");
    return out;
}

bott::BottNumbers numbers_from_inline(const std::string& text) {
    std::vector<bott::IntVec> rows;
    std::stringstream ss(text);
    std::string row;
    while (std::getline(ss, row, ';')) rows.push_back(parse_int_list(row, ',', "--c"));
    return bott::BottNumbers::from_rows(rows);
}

bott::BottNumbers numbers_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw bott::ParseError("cannot read tower file '" + path + "'");
    json doc;
    try {
        in >> doc;
    } catch (const std::exception& e) {
        throw bott::ParseError("tower file '" + path + "': " + e.what());
    }
    return bott::bott_numbers_from_json(doc);
}

// Tower resolution order: explicit file, inline rows, bare height (all Bott
// numbers 1), then a height inferred from the bundle (again all 1; the
// Seshadri values do not depend on the choice as long as it is positive).
bott::BottTower resolve_tower(const TowerArgs& args, int inferred_n) {
    std::optional<bott::BottNumbers> numbers;
    if (!args.tower_file.empty())
        numbers = numbers_from_file(args.tower_file);
    else if (!args.inline_rows.empty())
        numbers = numbers_from_inline(args.inline_rows);
    else if (args.n > 0)
        numbers = bott::BottNumbers::constant(args.n, 1);
    else if (inferred_n > 0)
        numbers = bott::BottNumbers::constant(inferred_n, 1);
    if (!numbers)
        throw bott::ParseError("no tower given: use --tower, --c, or --n");
    if (args.n > 0 && numbers->height() != args.n)
        throw bott::ParseError("--n " + std::to_string(args.n) + " contradicts a tower of height " +
                               std::to_string(numbers->height()));
    return bott::build_tower(std::move(*numbers));
}

bott::DivisorClass parse_bundle(const std::string& text) {
    return bott::DivisorClass(parse_int_list(text, ',', "--bundle"));
}

std::string format_class(const bott::IntVec& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += v[i].str();
    }
    out += ")";
    return out;
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

void add_tower_options(CLI::App* cmd, TowerArgs& args) {
    cmd->add_option("--tower", args.tower_file, "tower JSON file {\"n\":..., \"bott_numbers\":[[...],...]}");
    cmd->add_option("--c", args.inline_rows, "inline Bott numbers, rows ';'-separated: \"1,2,3;4,5;6\"");
    cmd->add_option("--n", args.n, "tower height (Bott numbers default to all 1)");
}

int run_info(const TowerArgs& targs, const OutputArgs& out) {
    const bott::BottTower t = resolve_tower(targs, 0);
    if (out.as_json) {
        json rays = json::array();
        for (const bott::Ray& r : t.rays()) rays.push_back(bott::int_vec_to_json(r.v));
        emit(json{{"command", "info"},
                  {"tower", bott::tower_to_json(t)},
                  {"rays", rays},
                  {"maximal_cones", t.maximal_cone_count()},
                  {"walls", t.wall_count()},
                  {"smooth", true}});
        return 0;
    }
    std::cout << "Bott tower of height " << t.dimension() << "\n";
    if (t.dimension() == 1) {
        std::cout << "  Bott numbers: none\n";
    } else {
        std::cout << "  Bott numbers:";
        for (int i = 1; i < t.dimension(); ++i)
            for (int j = i + 1; j <= t.dimension(); ++j)
                std::cout << " c(" << i << "," << j << ")=" << t.numbers().c(i, j);
        std::cout << "\n";
    }
    std::cout << "  rays:\n";
    for (const bott::Ray& r : t.rays())
        std::cout << "    v" << r.index << " = " << format_class(r.v) << "\n";
    std::cout << "  maximal cones: " << t.maximal_cone_count() << " (all smooth, |det| = 1)\n";
    std::cout << "  walls: " << t.wall_count() << "\n";
    return 0;
}

int run_nef(const TowerArgs& targs, const std::string& bundle, const OutputArgs& out) {
    const bott::DivisorClass L = parse_bundle(bundle);
    const bott::BottTower t = resolve_tower(targs, L.length());
    const bool nef = bott::is_nef(t, L);
    const bool ample = bott::is_ample(t, L);
    if (out.as_json) {
        emit(json{{"command", "nef"},
                  {"tower", bott::tower_to_json(t)},
                  {"bundle", bott::int_vec_to_json(L.a)},
                  {"nef", nef},
                  {"ample", ample}});
        return 0;
    }
    std::cout << "L = " << format_class(L.a) << " on a height-" << t.dimension() << " tower: ";
    if (ample)
        std::cout << "ample (hence nef)\n";
    else if (nef)
        std::cout << "nef, not ample\n";
    else
        std::cout << "not nef\n";
    return 0;
}

int run_seshadri(const TowerArgs& targs, const std::string& bundle, const std::string& point,
                 const OutputArgs& out) {
    const bott::DivisorClass L = parse_bundle(bundle);
    const bott::BottTower t = resolve_tower(targs, L.length());
    const bott::CoxPoint x = bott::parse_point(point);
    const auto hyp = out.formal ? bott::Hypotheses::Formal : bott::Hypotheses::Enforce;
    const bott::SeshadriResult r = bott::seshadri_at(t, L, x, hyp);
    if (out.as_json) {
        json doc{{"command", "seshadri"},
                 {"tower", bott::tower_to_json(t)},
                 {"bundle", bott::int_vec_to_json(L.a)},
                 {"point", bott::format_point(x)},
                 {"formal", out.formal}};
        doc.update(bott::seshadri_result_to_json(r));
        emit(doc);
        return 0;
    }
    std::cout << "L = " << format_class(L.a) << ", x = " << bott::format_point(x) << "\n";
    std::cout << "gamma index: " << r.gamma_index << " (x lies on Gamma^(" << r.gamma_index << ")";
    if (r.gamma_index > 1) std::cout << ", not on Gamma^(" << r.gamma_index - 1 << ")";
    std::cout << ")\n";
    std::cout << "epsilon(L, x) = " << r.value << ", attained by the curve Gamma^("
              << r.witness_index << ")\n";
    if (out.formal) std::cout << "formal evaluation: validity hypotheses (positive Bott numbers, nef class) not enforced\n";
    return 0;
}

int run_strata(const TowerArgs& targs, const std::string& bundle, const OutputArgs& out) {
    const bott::DivisorClass L = parse_bundle(bundle);
    const bott::BottTower t = resolve_tower(targs, L.length());
    const auto hyp = out.formal ? bott::Hypotheses::Formal : bott::Hypotheses::Enforce;
    const std::vector<bott::StratumValue> strata = bott::strata_report(t, L, hyp);
    if (out.as_json) {
        emit(json{{"command", "strata"},
                  {"tower", bott::tower_to_json(t)},
                  {"bundle", bott::int_vec_to_json(L.a)},
                  {"formal", out.formal},
                  {"strata", bott::strata_to_json(strata)}});
        return 0;
    }
    std::cout << "L = " << format_class(L.a) << "\n";
    for (const bott::StratumValue& s : strata) {
        std::cout << "stratum " << s.stratum << " (x on Gamma^(" << s.stratum << ")";
        if (s.stratum > 1) std::cout << " \\ Gamma^(" << s.stratum - 1 << ")";
        std::cout << "): epsilon = " << s.value << "\n";
    }
    if (out.formal) std::cout << "formal evaluation: validity hypotheses (positive Bott numbers, nef class) not enforced\n";
    return 0;
}

int run_extreme(const TowerArgs& targs, const std::string& bundle, const OutputArgs& out,
                bool infimum) {
    const bott::DivisorClass L = parse_bundle(bundle);
    const bott::BottTower t = resolve_tower(targs, L.length());
    const auto hyp = out.formal ? bott::Hypotheses::Formal : bott::Hypotheses::Enforce;
    const bott::GlobalExtreme g =
        infimum ? bott::seshadri_inf(t, L, hyp) : bott::seshadri_sup(t, L, hyp);
    if (out.as_json) {
        json doc{{"command", infimum ? "inf" : "sup"},
                 {"tower", bott::tower_to_json(t)},
                 {"bundle", bott::int_vec_to_json(L.a)},
                 {"formal", out.formal}};
        doc.update(bott::global_extreme_to_json(g));
        emit(doc);
        return 0;
    }
    if (infimum) {
        std::cout << "inf over x of epsilon(L, x) = " << g.value << " on stratum " << g.stratum
                  << ", e.g. at x = " << bott::format_point(g.witness) << "\n";
    } else {
        std::cout << "sup over x of epsilon(L, x) = " << g.value
                  << ", attained at general points, e.g. x = " << bott::format_point(g.witness)
                  << "\n";
    }
    if (out.formal) std::cout << "formal evaluation: validity hypotheses (positive Bott numbers, nef class) not enforced\n";
    return 0;
}

int run_verify(const bott::CampaignOptions& opts, const OutputArgs& out) {
    const bott::CampaignReport report = bott::run_verification_campaign(opts);
    if (out.as_json) {
        json doc{{"command", "verify"}};
        doc.update(bott::campaign_report_to_json(report));
        emit(doc);
    } else {
        std::cout << "campaign: " << report.options.trials << " trials, dimension <= "
                  << report.options.max_dimension << ", Bott numbers <= " << report.options.max_bott
                  << ", coefficients <= " << report.options.max_coeff << ", seed "
                  << report.options.seed << "\n";
        std::cout << "instances: " << report.instances
                  << ", fixed points checked: " << report.fixed_points_checked
                  << ", walls checked: " << report.walls_checked << "\n";
        std::cout << report.failures.size() << " discrepancies\n";
        for (const bott::CampaignFailure& f : report.failures)
            std::cout << "  trial " << f.trial << ": [" << f.code << "] " << f.message << "\n";
    }
    return report.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Seshadri constants of nef line bundles on Bott towers"};
    app.require_subcommand(1);

    TowerArgs targs;
    OutputArgs out;
    std::string bundle;
    std::string point;

    app.add_flag("--json", out.as_json, "emit machine-readable JSON on stdout");

    CLI::App* info = app.add_subcommand("info", "fan summary: rays, cone and wall counts");
    add_tower_options(info, targs);

    CLI::App* nef = app.add_subcommand("nef", "classify a divisor class (nef / ample)");
    add_tower_options(nef, targs);
    nef->add_option("--bundle", bundle, "class (a_1,...,a_n), comma-separated")->required();

    CLI::App* ses = app.add_subcommand("seshadri", "Seshadri constant at a point");
    add_tower_options(ses, targs);
    ses->add_option("--bundle", bundle, "class (a_1,...,a_n), comma-separated")->required();
    ses->add_option("--point", point,
                    "point [z1:w1:...:zn:wn]; entries are rationals or '*' (nonzero)")
        ->required();
    ses->add_flag("--formal", out.formal, "evaluate the formula without the positivity and nef checks");

    CLI::App* strata = app.add_subcommand("strata", "epsilon on every stratum");
    add_tower_options(strata, targs);
    strata->add_option("--bundle", bundle, "class (a_1,...,a_n), comma-separated")->required();
    strata->add_flag("--formal", out.formal, "evaluate the formula without the positivity and nef checks");

    CLI::App* inf = app.add_subcommand("inf", "global infimum with a witness point");
    add_tower_options(inf, targs);
    inf->add_option("--bundle", bundle, "class (a_1,...,a_n), comma-separated")->required();
    inf->add_flag("--formal", out.formal, "evaluate the formula without the positivity and nef checks");

    CLI::App* sup = app.add_subcommand("sup", "global supremum with a witness point");
    add_tower_options(sup, targs);
    sup->add_option("--bundle", bundle, "class (a_1,...,a_n), comma-separated")->required();
    sup->add_flag("--formal", out.formal, "evaluate the formula without the positivity and nef checks");

    bott::CampaignOptions copts;
    CLI::App* verify = app.add_subcommand("verify", "randomized oracle cross-check campaign");
    for (CLI::App* sub : app.get_subcommands([](CLI::App*) { return true; }))
        sub->fallthrough();
    verify->add_option("--n", copts.max_dimension, "maximum tower height (default 4)");
    verify->add_option("--trials", copts.trials, "number of random instances (default 100)");
    verify->add_option("--seed", copts.seed, "RNG seed (default 1729)");
    verify->add_option("--max-c", copts.max_bott, "Bott numbers drawn from 1..max-c (default 9)");
    verify->add_option("--max-a", copts.max_coeff,
                       "class coefficients drawn from 0..max-a (default 99)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (info->parsed()) return run_info(targs, out);
        if (nef->parsed()) return run_nef(targs, bundle, out);
        if (ses->parsed()) return run_seshadri(targs, bundle, point, out);
        if (strata->parsed()) return run_strata(targs, bundle, out);
        if (inf->parsed()) return run_extreme(targs, bundle, out, /*infimum=*/true);
        if (sup->parsed()) return run_extreme(targs, bundle, out, /*infimum=*/false);
        if (verify->parsed()) return run_verify(copts, out);
    } catch (const bott::DiscrepancyFound& e) {
        if (out.as_json) {
            json doc = bott::error_to_json(e);
            doc["error"]["report"] = bott::cross_check_report_to_json(e.report());
            emit(doc);
        } else {
            std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
        }
        return 1;
    } catch (const bott::Error& e) {
        if (out.as_json)
            emit(bott::error_to_json(e));
        else
            std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        if (out.as_json)
            emit(json{{"error", json{{"code", "InternalError"}, {"message", e.what()}}}});
        else
            std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;  // unreachable with require_subcommand(1)
}
