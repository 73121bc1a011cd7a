#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "logfrob/artin.hpp"
#include "logfrob/fields.hpp"
#include "logfrob/kronecker.hpp"
#include "logfrob/logvals.hpp"
#include "logfrob/symbols.hpp"

using json = nlohmann::ordered_json;
using namespace logfrob;

namespace {

struct CliConfig {
    int digits = 32;
    int guard = -1;
    std::string format = "json";
};

void add_precision_options(CLI::App* cmd, CliConfig& cfg) {
    cmd->add_option("--prec,-k", cfg.digits, "working digits (modulus ell^k)")
        ->envname("LOGFROB_PREC")
        ->check(CLI::Range(4, 4096))
        ->capture_default_str();
    cmd->add_option("--guard", cfg.guard, "certification guard digits")
        ->check(CLI::Range(0, 4096));
}

void add_format_option(CLI::App* cmd, CliConfig& cfg, const std::string& dflt = "json") {
    cfg.format = dflt;
    cmd->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"json", "text", "csv"}))
        ->capture_default_str();
}

struct FieldOptions {
    long long d = 0;
    long tower_ell = 0;
    int layer = 0;
};

void add_field_options(CLI::App* cmd, FieldOptions& fo) {
    auto* dopt = cmd->add_option("--d", fo.d, "quadratic radicand (field Q(sqrt d), ell = 2)");
    auto* topt = cmd->add_option("--tower-ell", fo.tower_ell, "odd prime of the cyclotomic tower");
    auto* lopt = cmd->add_option("--layer", fo.layer, "tower layer n (degree ell^n)");
    topt->needs(lopt);
    lopt->needs(topt);
    dopt->excludes(topt);
}

FieldDescriptor make_field(CLI::App* cmd, const FieldOptions& fo) {
    if (cmd->count("--d") > 0) return FieldDescriptor::quadratic(fo.d);
    if (cmd->count("--tower-ell") > 0) return FieldDescriptor::tower(fo.tower_ell, fo.layer);
    throw CLI::RequiredError("--d or --tower-ell/--layer");
}

Precision make_precision(long ell, const CliConfig& cfg) {
    return Precision(ell, cfg.digits, cfg.guard);
}

void emit(const json& j, const CliConfig& cfg) {
    if (cfg.format == "text") {
        for (const auto& [k, v] : j.items()) {
            if (v.is_string())
                std::cout << k << " = " << v.get<std::string>() << "\n";
            else
                std::cout << k << " = " << v.dump() << "\n";
        }
        return;
    }
    std::cout << j.dump() << "\n";
}

json field_json(const FieldDescriptor& f) {
    json j;
    if (f.kind == FieldDescriptor::Kind::quadratic) {
        j["d"] = f.d;
    } else {
        j["ell"] = f.ell;
        j["layer"] = f.layer;
    }
    return j;
}

json galois_json(const GaloisElement& g) {
    json j;
    if (g.kind == GaloisElement::Kind::quad_sign)
        j["sign"] = g.sign;
    else
        j["exponent"] = g.exponent.get_str() + " mod " + std::to_string(g.ell) + "^" +
                        std::to_string(g.layer);
    return j;
}

json classification_json(const FieldDescriptor& field, const PrimeClassification& c) {
    json j = field_json(field);
    j["p"] = c.p;
    j["e"] = c.idx.e;
    j["f"] = c.idx.f;
    j["e_log"] = c.idx.e_log;
    j["f_log"] = c.idx.f_log;
    j["classical"] = split_status_name(c.classical);
    j["logarithmic"] = split_status_name(c.logarithmic);
    return j;
}

std::string frobenius_cell(const FieldDescriptor& field, long long p) {
    try {
        GaloisElement g = log_frobenius(field, p);
        if (g.kind == GaloisElement::Kind::quad_sign) return g.sign == 1 ? "+1" : "-1";
        return g.exponent.get_str();
    } catch (const Error& e) {
        if (e.code() == errc::frobenius_undefined) return "";
        throw;
    }
}

std::vector<long long> primes_up_to(long long bound) {
    std::vector<long long> out;
    for (long long p = 2; p <= bound; ++p) {
        if (is_prime_u64(static_cast<std::uint64_t>(p))) out.push_back(p);
    }
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"logarithmic ramification calculator"};
    app.require_subcommand(1);

    // iwlog
    auto* iwlog_cmd = app.add_subcommand("iwlog", "Iwasawa logarithm of a rational");
    CliConfig iwlog_cfg;
    long iwlog_ell = 2;
    std::string iwlog_x;
    iwlog_cmd->add_option("--ell,-l", iwlog_ell, "prime ell")->required();
    iwlog_cmd->add_option("--x", iwlog_x, "nonzero rational A or A/B")->required();
    add_precision_options(iwlog_cmd, iwlog_cfg);
    add_format_option(iwlog_cmd, iwlog_cfg);
    iwlog_cmd->callback([&]() {
        Precision prec = make_precision(iwlog_ell, iwlog_cfg);
        auto a = RationalNonzero::parse(iwlog_x);
        Precision wide(prec.ell, prec.digits + internal_pad(prec.ell, prec.digits), prec.guard);
        LAdicInt value = iwasawa_log(from_rational(a, prec.ell, wide), prec);
        json j{{"ell", iwlog_ell}, {"x", a.str()}, {"digits", prec.digits}, {"value", value.str()}};
        emit(j, iwlog_cfg);
    });

    // valuation
    auto* val_cmd = app.add_subcommand("valuation", "logarithmic valuation v~_p(a)");
    CliConfig val_cfg;
    long val_ell = 2;
    long long val_p = 2;
    std::string val_a;
    val_cmd->add_option("--ell,-l", val_ell, "prime ell")->required();
    val_cmd->add_option("--p", val_p, "finite place")->required();
    val_cmd->add_option("--a", val_a, "nonzero rational")->required();
    add_precision_options(val_cmd, val_cfg);
    add_format_option(val_cmd, val_cfg);
    val_cmd->callback([&]() {
        Precision prec = make_precision(val_ell, val_cfg);
        auto a = RationalNonzero::parse(val_a);
        LogValuation v = log_valuation_q(a, val_p, prec);
        json j{{"ell", val_ell}, {"p", val_p}, {"a", a.str()}};
        if (v.integral)
            j["valuation"] = *v.integral;
        else
            j["valuation"] = v.value.str();
        emit(j, val_cfg);
    });

    // symbol
    auto* sym_cmd = app.add_subcommand("symbol", "local logarithmic symbol");
    CliConfig sym_cfg;
    long sym_ell = 2;
    int sym_m = 4;
    std::string sym_p, sym_a;
    sym_cmd->add_option("--ell,-l", sym_ell, "prime ell")->required();
    sym_cmd->add_option("--p", sym_p, "finite place or 'inf'")->required();
    sym_cmd->add_option("--a", sym_a, "nonzero rational")->required();
    sym_cmd->add_option("--m", sym_m, "level (symbol taken mod ell^m)")
        ->check(CLI::Range(1, 4096))
        ->capture_default_str();
    add_format_option(sym_cmd, sym_cfg);
    sym_cmd->callback([&]() {
        auto a = RationalNonzero::parse(sym_a);
        Place place = (sym_p == "inf" || sym_p == "oo")
                          ? Place::real()
                          : Place::finite(std::stoll(sym_p));
        SylowExponent s = local_symbol(a, place, sym_ell, sym_m);
        json j{{"ell", sym_ell},
               {"place", place.str()},
               {"a", a.str()},
               {"raw", s.raw.get_str()},
               {"projected", s.projected.get_str()},
               {"modulus", s.modulus_str()}};
        emit(j, sym_cfg);
    });

    // product-check
    auto* prod_cmd = app.add_subcommand("product-check", "product formula over all places");
    CliConfig prod_cfg;
    long prod_ell = 2;
    int prod_m = 4;
    std::string prod_a;
    prod_cmd->add_option("--ell,-l", prod_ell, "prime ell")->required();
    prod_cmd->add_option("--a", prod_a, "nonzero rational")->required();
    prod_cmd->add_option("--m", prod_m, "level")->check(CLI::Range(1, 4096))->capture_default_str();
    add_format_option(prod_cmd, prod_cfg);
    prod_cmd->callback([&]() {
        auto a = RationalNonzero::parse(prod_a);
        ProductCheck pc = product_formula_check(a, prod_ell, prod_m);
        json terms = json::array();
        for (const auto& [place, t] : pc.terms) {
            terms.push_back(json{{"place", place.str()},
                                 {"raw", t.raw.get_str()},
                                 {"projected", t.projected.get_str()}});
        }
        json j{{"ell", prod_ell},
               {"a", a.str()},
               {"m", prod_m},
               {"residue", pc.residue.get_str() + " mod " + std::to_string(prod_ell) + "^" +
                               std::to_string(prod_m)},
               {"ok", pc.ok},
               {"terms", terms}};
        emit(j, prod_cfg);
    });

    // classify
    auto* cls_cmd = app.add_subcommand("classify", "classical vs logarithmic splitting of p");
    CliConfig cls_cfg;
    FieldOptions cls_fo;
    long long cls_p = 2;
    add_field_options(cls_cmd, cls_fo);
    cls_cmd->add_option("--p", cls_p, "prime to classify")->required();
    add_format_option(cls_cmd, cls_cfg);
    cls_cmd->callback([&]() {
        FieldDescriptor field = make_field(cls_cmd, cls_fo);
        PrimeClassification c = classify_prime(field, cls_p);
        emit(classification_json(field, c), cls_cfg);
    });

    // frobenius
    auto* frob_cmd = app.add_subcommand("frobenius", "logarithmic Frobenius at p");
    CliConfig frob_cfg;
    FieldOptions frob_fo;
    long long frob_p = 2;
    add_field_options(frob_cmd, frob_fo);
    frob_cmd->add_option("--p", frob_p, "prime")->required();
    add_format_option(frob_cmd, frob_cfg);
    frob_cmd->callback([&]() {
        FieldDescriptor field = make_field(frob_cmd, frob_fo);
        GaloisElement g = log_frobenius(field, frob_p);
        json j = galois_json(g);
        if (field.kind == FieldDescriptor::Kind::quadratic && frob_p == 2 &&
            classify_prime(field, 2).logarithmic == SplitStatus::inert)
            j["zeta8_action"] = kZeta8FrobeniusExponent;
        emit(j, frob_cfg);
    });

    // conductor
    auto* cond_cmd = app.add_subcommand("conductor", "global logarithmic conductor");
    CliConfig cond_cfg;
    FieldOptions cond_fo;
    add_field_options(cond_cmd, cond_fo);
    add_format_option(cond_cmd, cond_cfg);
    cond_cmd->callback([&]() {
        FieldDescriptor field = make_field(cond_cmd, cond_fo);
        LogConductor c = global_conductor(field);
        json ex = json::object();
        for (const auto& [p, e] : c.exponents) ex[std::to_string(p)] = e;
        json j = field_json(field);
        j["conductor"] = ex;
        j["trivial"] = c.trivial();
        emit(j, cond_cfg);
    });

    // artin
    auto* art_cmd = app.add_subcommand("artin", "Artin image of a logarithmic divisor");
    CliConfig art_cfg;
    FieldOptions art_fo;
    std::string art_div;
    add_field_options(art_cmd, art_fo);
    art_cmd->add_option("--div", art_div, "divisor literal, e.g. 7^1*13^2")->required();
    add_precision_options(art_cmd, art_cfg);
    add_format_option(art_cmd, art_cfg);
    art_cmd->callback([&]() {
        FieldDescriptor field = make_field(art_cmd, art_fo);
        long ell = field.kind == FieldDescriptor::Kind::quadratic ? 2 : field.ell;
        Precision prec = make_precision(ell, art_cfg);
        LogDivisor d = LogDivisor::parse(art_div, prec);
        GaloisElement g = artin_image(field, d);
        json j = field_json(field);
        j["divisor"] = d.str();
        j.update(galois_json(g));
        emit(j, art_cfg);
    });

    // reciprocity
    auto* rec_cmd = app.add_subcommand("reciprocity", "principal divisors map to the identity");
    CliConfig rec_cfg;
    FieldOptions rec_fo;
    std::string rec_a;
    add_field_options(rec_cmd, rec_fo);
    rec_cmd->add_option("--a", rec_a, "nonzero rational")->required();
    add_precision_options(rec_cmd, rec_cfg);
    add_format_option(rec_cmd, rec_cfg);
    rec_cmd->callback([&]() {
        FieldDescriptor field = make_field(rec_cmd, rec_fo);
        long ell = field.kind == FieldDescriptor::Kind::quadratic ? 2 : field.ell;
        Precision prec = make_precision(ell, rec_cfg);
        auto a = RationalNonzero::parse(rec_a);
        ReciprocityResult r = reciprocity_check(field, a, prec);
        json j = field_json(field);
        j["a"] = a.str();
        j["divisor"] = r.divisor.str();
        j["image"] = galois_json(r.image);
        j["ray_ok"] = r.ray_ok;
        j["ok"] = r.ok;
        emit(j, rec_cfg);
    });

    // table
    auto* tab_cmd = app.add_subcommand("table", "classification table over a range");
    CliConfig tab_cfg;
    long long tab_dmin = 0, tab_dmax = 0, tab_pmax = 50;
    long tab_tower_ell = 0;
    int tab_layer = 0;
    auto* dmin_opt = tab_cmd->add_option("--d-min", tab_dmin, "first radicand");
    auto* dmax_opt = tab_cmd->add_option("--d-max", tab_dmax, "last radicand");
    auto* tl_opt = tab_cmd->add_option("--tower-ell", tab_tower_ell, "odd tower prime");
    auto* ly_opt = tab_cmd->add_option("--layer", tab_layer, "tower layer");
    tab_cmd->add_option("--p-max", tab_pmax, "largest prime row")->capture_default_str();
    dmin_opt->needs(dmax_opt);
    tl_opt->needs(ly_opt);
    ly_opt->needs(tl_opt);
    dmin_opt->excludes(tl_opt);
    add_format_option(tab_cmd, tab_cfg, "csv");
    tab_cmd->callback([&]() {
        bool quad = tab_cmd->count("--d-min") > 0;
        if (!quad && tab_cmd->count("--tower-ell") == 0)
            throw CLI::RequiredError("--d-min/--d-max or --tower-ell/--layer");
        std::vector<long long> primes = primes_up_to(tab_pmax);

        std::vector<std::pair<FieldDescriptor, bool>> fields;
        if (quad) {
            for (long long d = tab_dmin; d <= tab_dmax; ++d) {
                if (d == 0 || d == 1) continue;
                if (!is_squarefree(d) || squarefree_part(d) == 1) continue;
                fields.emplace_back(FieldDescriptor::quadratic(d), true);
            }
        } else {
            fields.emplace_back(FieldDescriptor::tower(tab_tower_ell, tab_layer), false);
        }

        if (tab_cfg.format == "json") {
            json rows = json::array();
            for (const auto& [field, is_quad] : fields) {
                for (long long p : primes) {
                    PrimeClassification c = classify_prime(field, p);
                    json row = classification_json(field, c);
                    row["frobenius"] = frobenius_cell(field, p);
                    rows.push_back(row);
                }
            }
            std::cout << rows.dump() << "\n";
            return;
        }

        const char* head = quad ? "d,p,e,f,e_log,f_log,classical,logarithmic,frobenius"
                                : "ell,n,p,e,f,e_log,f_log,classical,logarithmic,frobenius";
        std::string sep = tab_cfg.format == "csv" ? "," : "\t";
        std::cout << head << "\n";
        for (const auto& [field, is_quad] : fields) {
            for (long long p : primes) {
                PrimeClassification c = classify_prime(field, p);
                std::string lead = is_quad ? std::to_string(field.d)
                                           : std::to_string(field.ell) + sep +
                                                 std::to_string(field.layer);
                std::cout << lead << sep << p << sep << c.idx.e << sep << c.idx.f << sep
                          << c.idx.e_log << sep << c.idx.f_log << sep
                          << split_status_name(c.classical) << sep
                          << split_status_name(c.logarithmic) << sep << frobenius_cell(field, p)
                          << "\n";
            }
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const Error& e) {
        json j{{"error", e.code_name()}, {"message", e.what()}};
        std::cout << j.dump() << "\n";
        std::cerr << "error: " << e.what() << "\n";
        return (e.code() == errc::parse_error || e.code() == errc::bad_precision) ? 2 : 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
