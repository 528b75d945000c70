#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "wreathcoh/verify.hpp"

using namespace wreathcoh;

namespace {

std::pair<int, int> parse_window(const std::string& s) {
    auto c = s.find(':');
    require(c != std::string::npos && c > 0 && c + 1 < s.size(),
            "window format is lo:hi (inclusive total degrees)");
    int lo = std::stoi(s.substr(0, c));
    int hi = std::stoi(s.substr(c + 1));
    require(lo <= hi, "window is empty: lo > hi");
    return {lo, hi};
}

Graded graded_from_file(const std::string& path) {
    std::ifstream in(path);
    require(static_cast<bool>(in), "cannot open " + path);
    return graded_from_json(json::parse(in));
}

std::string group_str(std::vector<Int> factors) {
    if (factors.empty())
        return "0";
    std::sort(factors.begin(), factors.end());
    std::string out;
    for (const auto& f : factors) {
        if (!out.empty())
            out += " + ";
        out += (f == 0) ? "Z" : "Z/" + f.str();
    }
    return out;
}

std::map<int, std::vector<Int>> orders_by_degree(const Graded& h, int lo, int hi) {
    std::map<int, std::vector<Int>> out;
    for (const auto& f : h.restrict(lo, hi).families)
        for (long long k = 0; k < f.multiplicity; ++k)
            out[f.first_degree].push_back(f.order);
    return out;
}

void print_graded(const Graded& h, int lo, int hi) {
    auto rows = orders_by_degree(h, lo, hi);
    for (int m = lo; m <= hi; ++m) {
        auto it = rows.find(m);
        std::cout << "H^" << m << " = " << group_str(it == rows.end() ? std::vector<Int>{} : it->second)
                  << "\n";
    }
}

void print_page(const Page& pg, bool infinity) {
    if (infinity)
        std::cout << "E_inf";
    else
        std::cout << "E_" << pg.r;
    std::cout << " [kind " << kind_name(pg.kind) << "], total degrees " << pg.m_lo << ".." << pg.m_hi
              << ", certified through " << pg.cert_total_hi << "\n";
    for (const auto& e : pg.entries) {
        std::cout << "  (" << e.i << "," << e.j << "): " << group_str(e.factors);
        if (e.has_d) {
            std::cout << "   d_" << pg.r << " -> (" << e.ti << "," << e.tj << ")";
            if (!e.d.is_zero())
                std::cout << " nonzero";
        }
        std::cout << "\n";
    }
}

std::vector<DegreeMismatch> diff_graded(const Graded& want, const Graded& got, int lo, int hi) {
    auto w = want.primary_by_degree(lo, hi);
    auto g = got.primary_by_degree(lo, hi);
    std::vector<DegreeMismatch> out;
    for (int m = lo; m <= hi; ++m) {
        std::vector<Int> a, b;
        if (auto it = w.find(m); it != w.end())
            a = it->second;
        if (auto it = g.find(m); it != g.end())
            b = it->second;
        if (a != b)
            out.push_back({m, a, b});
    }
    return out;
}

struct BaseSpec {
    int p = 2;
    std::string n_str = "2";
    int d = 1;
    std::string base_file;
    std::string window;

    Int n() const { return Int(n_str); }

    std::pair<int, int> window_or(int def_lo, int def_hi) const {
        if (!window.empty())
            return parse_window(window);
        require(base_file.empty(), "--window is required together with --base");
        return {def_lo, def_hi};
    }

    Graded base_graded() const {
        if (!base_file.empty())
            return graded_from_file(base_file);
        Graded h;
        h.add(d, n());
        return h;
    }

    CochainComplex base_complex(int hi) const {
        if (!base_file.empty())
            return complex_from_graded(graded_from_file(base_file), hi + 1);
        return build_cyclic_complex(n(), d);
    }

    void attach(CLI::App* cmd, bool with_window = true) {
        cmd->add_option("-p,--p", p, "the prime: order of the cyclic group acting")->check(CLI::Range(2, 97));
        cmd->add_option("-n,--n", n_str, "base has one summand Z/n (0 means Z)");
        cmd->add_option("-d,--d", d, "degree of the base summand");
        auto* b = cmd->add_option("--base", base_file,
                                  "JSON file with the base cohomology instead of -n/-d");
        if (with_window)
            cmd->add_option("-w,--window", window, "total degree window lo:hi (inclusive)");
        b->excludes("--n");
        b->excludes("--d");
    }
};

int emit_graded(const Graded& h, int lo, int hi, const std::string& format) {
    if (format == "json")
        std::cout << json_of(h).dump(2) << "\n";
    else
        print_graded(h, lo, hi);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact integral cohomology of cyclic wreath constructions"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));

    BaseSpec bf_spec, pr_spec, sp_spec, ke_spec;

    auto* bf = app.add_subcommand("bruteforce",
                                  "cohomology of the wreath construction from the full complex");
    bf_spec.attach(bf);

    auto* pr = app.add_subcommand("predict", "cohomology of the wreath construction in closed form");
    pr_spec.attach(pr);
    bool pr_check = false;
    pr->add_flag("--check", pr_check, "also run the full computation and compare");

    auto* sp = app.add_subcommand("spectral", "filtration pages of the wreath construction");
    sp_spec.attach(sp);
    std::string sp_kind = "II", sp_pages;
    bool sp_einf = false;
    int sp_scaled = 0;
    sp->add_option("--kind", sp_kind, "filtration: I (resolution first) or II (complex first)")
        ->check(CLI::IsMember({"I", "II"}));
    sp->add_option("--pages", sp_pages, "page range r_lo:r_hi or a single r (default 2:stable)");
    sp->add_flag("--einf", sp_einf, "append the stable page");
    sp->add_option("--scaled-check", sp_scaled,
                   "instead: compare d_r against the unit model through rescaled zig-zags");

    auto* ke = app.add_subcommand("kernel", "summands killed by restriction to the diagonal subgroup");
    ke_spec.attach(ke);
    bool ke_sym = false;
    ke->add_flag("--symmetric", ke_sym, "full symmetric construction instead of the cyclic one");

    auto* ex = app.add_subcommand("exponents", "exponent and eventual exponent arithmetic");
    std::string ex_tower, ex_base;
    int ex_wreath = 0;
    ex->add_option("--tower", ex_tower, "tower like \"C:8 wr C_2 wr C_2\" or \"E:3^2 wr C_3\"");
    ex->add_option("--base", ex_base, "JSON file with a graded group")->excludes("--tower");
    ex->add_option("--wreath", ex_wreath, "with --base: apply one wreath step with this prime");

    auto* va = app.add_subcommand("varieties", "dimensions of the exponent support varieties");
    std::string va_tower, va_sym;
    int va_p = 2;
    va->add_option("--tower", va_tower, "tower like \"C:8 wr C_2 wr C_2\"");
    va->add_option("--symmetric", va_sym, "dimensions for the symmetric group on this many points")
        ->excludes("--tower");
    va->add_option("-p,--p", va_p, "the prime, for --symmetric")->check(CLI::Range(2, 97));

    auto* ve = app.add_subcommand("verify", "sweep: full computation against the closed forms");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*bf) {
            auto [lo, hi] = bf_spec.window_or(bf_spec.p * (bf_spec.d - 1) - 1, bf_spec.p * bf_spec.d + 6);
            WreathModel wm = build_wreath_model(bf_spec.base_complex(hi), bf_spec.p, lo, hi);
            return emit_graded(cohomology(wm.tot.c, lo, hi), lo, hi, format);
        }
        if (*pr) {
            auto [lo, hi] = pr_spec.window_or(pr_spec.p * (pr_spec.d - 1) - 1, pr_spec.p * pr_spec.d + 6);
            Graded predicted = predict_wreath_cohomology(pr_spec.base_graded(), pr_spec.p, lo, hi);
            if (!pr_check)
                return emit_graded(predicted, lo, hi, format);
            WreathModel wm = build_wreath_model(pr_spec.base_complex(hi), pr_spec.p, lo, hi);
            Graded computed = cohomology(wm.tot.c, lo, hi);
            auto bad = diff_graded(predicted, computed, lo, hi);
            if (format == "json") {
                json out{{"ok", bad.empty()}, {"predicted", json_of(predicted)},
                         {"computed", json_of(computed)}, {"mismatches", json::array()}};
                for (const auto& m : bad)
                    out["mismatches"].push_back(json{{"degree", m.degree},
                                                     {"predicted", json_factors(m.predicted)},
                                                     {"computed", json_factors(m.computed)}});
                std::cout << out.dump(2) << "\n";
            } else if (bad.empty()) {
                std::cout << "ok: closed form matches the full computation on [" << lo << "," << hi
                          << "]\n";
            } else {
                for (const auto& m : bad)
                    std::cout << "mismatch at degree " << m.degree << ": predicted "
                              << group_str(m.predicted) << ", computed " << group_str(m.computed)
                              << "\n";
            }
            return bad.empty() ? 0 : 1;
        }
        if (*sp) {
            auto [lo, hi] = sp_spec.window_or(sp_spec.p * (sp_spec.d - 1) - 1, sp_spec.p * sp_spec.d + 6);
            if (sp_scaled > 0) {
                require(sp_spec.base_file.empty(), "--scaled-check works on the -n/-d base");
                ScaledCheckReport rep =
                    check_scaled_differential(sp_spec.p, sp_spec.d, sp_spec.n(), sp_scaled, lo, hi);
                if (format == "json") {
                    std::cout << json_of(rep).dump(2) << "\n";
                } else {
                    for (const auto& e : rep.entries)
                        std::cout << "(" << e.i << "," << e.j << "): " << e.classes << " classes, zigzag "
                                  << (e.zigzag_ok ? "ok" : "FAIL") << ", scaling "
                                  << (e.vector_scaled_ok ? "ok" : "FAIL") << "\n";
                    std::cout << (rep.all_ok ? "ok" : "FAILED") << ": d_" << rep.r
                              << " scales by n^r against the unit model\n";
                }
                return rep.all_ok ? 0 : 1;
            }
            WreathModel wm = build_wreath_model(sp_spec.base_complex(hi), sp_spec.p, lo, hi);
            PageComputer pc(wm.e0, sp_kind == "I" ? Kind::I : Kind::II);
            int r_lo = 2, r_hi = pc.stable_r();
            if (!sp_pages.empty()) {
                if (sp_pages.find(':') == std::string::npos)
                    r_lo = r_hi = std::stoi(sp_pages);
                else
                    std::tie(r_lo, r_hi) = parse_window(sp_pages);
                require(r_lo >= 0, "pages start at r = 0");
            }
            std::vector<Page> pages = pc.pages(r_lo, r_hi, lo, hi);
            json jpages = json::array();
            for (const auto& pg : pages) {
                if (format == "json")
                    jpages.push_back(json_of(pg));
                else
                    print_page(pg, false);
            }
            if (sp_einf) {
                Page einf = pc.e_infinity(lo, hi);
                if (format == "json") {
                    json je = json_of(einf);
                    je["infinity"] = true;
                    jpages.push_back(std::move(je));
                } else {
                    print_page(einf, true);
                }
            }
            if (format == "json")
                std::cout << json{{"pages", std::move(jpages)}}.dump(2) << "\n";
            return 0;
        }
        if (*ke) {
            auto [lo, hi] = ke_spec.window_or(0, ke_spec.p * ke_spec.d + 6);
            Graded base = ke_spec.base_graded();
            Graded k = ke_sym ? detection_kernel_sigma_p(base, ke_spec.p, lo, hi)
                              : detection_kernel(base, ke_spec.p, lo, hi);
            return emit_graded(k, lo, hi, format);
        }
        if (*ex) {
            if (!ex_tower.empty()) {
                TowerReport rep = run_tower(ex_tower);
                if (format == "json") {
                    std::cout << json_of(rep).dump(2) << "\n";
                } else {
                    std::cout << "p = " << rep.p << ", wreath steps = " << rep.steps << "\n"
                              << "e  = " << rep.exps.e.str() << "\n"
                              << "ee = " << rep.exps.ee.str() << "\n"
                              << "nu_p(order) = " << rep.nu_order.str() << "\n";
                }
                return 0;
            }
            require(!ex_base.empty(), "exponents needs --tower or --base");
            Graded h = graded_from_file(ex_base);
            ExponentPair base_ex = exponents_of_graded(h);
            json out{{"base", json_of(base_ex)}};
            if (format == "text")
                std::cout << "base: e = " << base_ex.e.str() << ", ee = " << base_ex.ee.str() << "\n";
            if (ex_wreath >= 2) {
                bool caveat = p2_exponent_caveat(h);
                ExponentPair w = wreath_exponents(base_ex, ex_wreath, caveat);
                out["wreath"] = json_of(w);
                if (format == "text") {
                    std::cout << "after wreath by C_" << ex_wreath << ": ";
                    if (w.ambiguous)
                        std::cout << "e = " << w.e.str() << " or " << w.e_upper.str()
                                  << " (undetermined)";
                    else
                        std::cout << "e = " << w.e.str();
                    std::cout << ", ee = " << w.ee.str() << "\n";
                }
            }
            if (format == "json")
                std::cout << out.dump(2) << "\n";
            return 0;
        }
        if (*va) {
            if (!va_tower.empty()) {
                TowerReport rep = run_tower(va_tower);
                if (format == "json") {
                    std::cout << json_of(rep).dump(2) << "\n";
                } else {
                    for (std::size_t i = 0; i < rep.dims.size(); ++i)
                        std::cout << "dim W_" << i << " = " << rep.dims[i].str() << "\n";
                    std::cout << "nu_p(che) = " << rep.nu_che.str() << "\n";
                }
                return 0;
            }
            require(!va_sym.empty(), "varieties needs --tower or --symmetric");
            Int m(va_sym);
            std::vector<Int> dims;
            for (int i = 0;; ++i) {
                Int w = dim_w_symmetric(m, va_p, i);
                if (w == 0)
                    break;
                dims.push_back(w);
            }
            if (format == "json") {
                json jd = json::array();
                for (const auto& v : dims)
                    jd.push_back(json_int(v));
                std::cout << json{{"p", va_p},
                                  {"points", json_int(m)},
                                  {"variety_dims", std::move(jd)},
                                  {"nu_p_che", json_int(nu_p_che(dims))}}
                                 .dump(2)
                          << "\n";
            } else {
                for (std::size_t i = 0; i < dims.size(); ++i)
                    std::cout << "dim W_" << i << " = " << dims[i].str() << "\n";
                std::cout << "nu_p(che) = " << nu_p_che(dims).str() << "\n";
            }
            return 0;
        }
        if (*ve) {
            VerifyReport rep = verify_corpus();
            if (format == "json") {
                std::cout << json_of(rep).dump(2) << "\n";
            } else {
                int k = 0, good = 0;
                for (const auto& e : rep.entries) {
                    ++k;
                    good += e.ok ? 1 : 0;
                    std::cout << "[" << k << "/" << rep.entries.size() << "] p=" << e.p
                              << " n=" << e.n.str() << " d=" << e.d << " window [" << e.lo << ","
                              << e.hi << "] " << (e.ok ? "ok" : "MISMATCH") << " (" << e.millis
                              << " ms)\n";
                    for (const auto& m : e.mismatches)
                        std::cout << "    degree " << m.degree << ": predicted "
                                  << group_str(m.predicted) << ", computed " << group_str(m.computed)
                                  << "\n";
                }
                std::cout << good << "/" << k << " agree\n";
            }
            return rep.all_ok ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
