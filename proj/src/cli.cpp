#include "ringauto/cli.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ringauto/basic.hpp"
#include "ringauto/endo.hpp"
#include "ringauto/fixedring.hpp"
#include "ringauto/gz4.hpp"
#include "ringauto/verify.hpp"

namespace ringauto::cli {

namespace {

using nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) out.push_back(cur);
    return out;
}

std::int64_t parse_int(const std::string& tok) {
    const std::string t = trim(tok);
    try {
        std::size_t used = 0;
        const std::int64_t v = std::stoll(t, &used);
        if (used != t.size()) throw UsageError("malformed integer: " + tok);
        return v;
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception&) {
        throw UsageError("malformed integer: " + tok);
    }
}

Poly parse_poly(const std::string& lit, Modulus m) {
    const std::string s = trim(lit);
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw UsageError("polynomial literal must look like [c0,c1,...]: " + lit);
    const std::string inner = trim(s.substr(1, s.size() - 2));
    std::vector<std::int64_t> coeffs;
    if (!inner.empty())
        for (const std::string& tok : split(inner, ','))
            coeffs.push_back(parse_int(tok));
    return Poly(coeffs, m);
}

std::vector<Poly> parse_poly_list(const std::string& lit, Modulus m) {
    std::vector<Poly> out;
    for (const std::string& part : split(lit, ';'))
        if (!trim(part).empty()) out.push_back(parse_poly(part, m));
    return out;
}

BasicAut parse_elem(const std::string& lit, Modulus m) {
    const auto parts = split(lit, ',');
    if (parts.size() != 2)
        throw UsageError("element literal must look like u,a: " + lit);
    return BasicAut(parse_int(parts[0]), parse_int(parts[1]), m);
}

GAut4 parse_gaut(const std::string& lit) {
    const auto colon = lit.find(':');
    if (colon == std::string::npos)
        throw UsageError("element literal must look like alpha:[coeffs]: " + lit);
    const std::string kind = trim(lit.substr(0, colon));
    const Poly f = parse_poly(lit.substr(colon + 1), Modulus(4));
    if (kind == "alpha") return GAut4(GKind::Alpha, f);
    if (kind == "beta") return GAut4(GKind::Beta, f);
    throw UsageError("element kind must be alpha or beta: " + lit);
}

ordered_json poly_json(const Poly& p) {
    ordered_json arr = ordered_json::array();
    for (std::uint64_t c : p.coeffs()) arr.push_back(c);
    return arr;
}

ordered_json gaut_json(const GAut4& s) {
    return ordered_json{{"kind", s.is_alpha() ? "alpha" : "beta"},
                        {"f", poly_json(s.f())}};
}

void print_classes(std::ostream& out, Modulus m,
                   const std::vector<ConjClass>& classes,
                   const std::string& format) {
    const std::uint64_t group_order = m.n() * euler_phi(m);
    if (format == "json") {
        ordered_json j{{"modulus", m.n()},
                       {"group_order", group_order},
                       {"count", classes.size()},
                       {"classes", ordered_json::array()}};
        for (const ConjClass& c : classes)
            j["classes"].push_back(ordered_json{
                {"u", c.rep.u()}, {"a", c.rep.a()}, {"size", c.size}});
        out << j.dump() << '\n';
    } else if (format == "csv") {
        out << "u,a,size\n";
        for (const ConjClass& c : classes)
            out << c.rep.u() << ',' << c.rep.a() << ',' << c.size << '\n';
    } else {
        out << "conjugacy classes of B(Z_" << m.n() << "), group order "
            << group_order << ":\n";
        for (const ConjClass& c : classes)
            out << "  " << to_string(c.rep) << "  (size " << c.size << ")\n";
        out << "total: " << classes.size() << " classes\n";
    }
}

// --check-bruteforce: every element must be search-conjugate to its
// canonical representative and the class count must match the orbit count.
void crosscheck_classes(Modulus m, const std::vector<ConjClass>& classes) {
    if (psi_bruteforce(m) != classes.size())
        throw InternalCheckFailed("class count disagrees with orbit count");
    for (const BasicAut& e : all_elements(m)) {
        const BasicAut rep = canonical_rep(e);
        const BasicAut reduced(static_cast<std::int64_t>(rep.u()),
                               static_cast<std::int64_t>(rep.a() % m.n()), m);
        if (!are_conjugate_bruteforce(e, reduced))
            throw InternalCheckFailed(
                "element is not search-conjugate to its canonical rep");
    }
}

} // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact computations with the automorphisms of Z_n[x]"};
    app.name("ringauto");
    app.require_subcommand(1);
    int exit_code = 0;

    // ---- classes ----
    auto* classes_cmd =
        app.add_subcommand("classes", "conjugacy class table of B(Z_n)");
    std::uint64_t classes_n = 0;
    std::string classes_format = "table";
    bool classes_check = false;
    classes_cmd->add_option("--modulus", classes_n, "modulus n >= 2")->required();
    classes_cmd->add_option("--format", classes_format, "json|csv|table")
        ->check(CLI::IsMember({"json", "csv", "table"}));
    classes_cmd->add_flag("--check-bruteforce", classes_check,
                          "cross-check against brute-force orbits");
    classes_cmd->callback([&] {
        const Modulus m(classes_n);
        const auto classes = enumerate_classes(m);
        if (classes_check) crosscheck_classes(m, classes);
        print_classes(out, m, classes, classes_format);
    });

    // ---- count ----
    auto* count_cmd =
        app.add_subcommand("count", "number of conjugacy classes of B(Z_n)");
    std::uint64_t count_n = 0;
    bool count_check = false;
    count_cmd->add_option("--modulus", count_n, "modulus n >= 2")->required();
    count_cmd->add_flag("--check-bruteforce", count_check,
                        "cross-check against brute-force orbit counting");
    count_cmd->callback([&] {
        const Modulus m(count_n);
        const std::uint64_t value = psi(m);
        if (count_check && psi_bruteforce(m) != value)
            throw InternalCheckFailed("formula disagrees with orbit count");
        out << value << '\n';
    });

    // ---- conjugate ----
    auto* conj_cmd =
        app.add_subcommand("conjugate", "decide conjugacy in B(Z_n)");
    std::uint64_t conj_n = 0;
    std::string conj_first, conj_second;
    conj_cmd->add_option("--modulus", conj_n, "modulus n >= 2")->required();
    conj_cmd->add_option("--first", conj_first, "element u,a")->required();
    conj_cmd->add_option("--second", conj_second, "element u,a")->required();
    conj_cmd->callback([&] {
        const Modulus m(conj_n);
        const BasicAut s = parse_elem(conj_first, m);
        const BasicAut t = parse_elem(conj_second, m);
        const auto g = conjugacy_witness(s, t);
        if (g) {
            out << "CONJUGATE\n";
            out << "witness: " << g->u() << ',' << g->a() << '\n';
        } else {
            out << "NOT_CONJUGATE\n";
        }
    });

    // ---- canon ----
    auto* canon_cmd =
        app.add_subcommand("canon", "canonical class representative");
    std::uint64_t canon_n = 0;
    std::string canon_elem;
    canon_cmd->add_option("--modulus", canon_n, "modulus n >= 2")->required();
    canon_cmd->add_option("--elem", canon_elem, "element u,a")->required();
    canon_cmd->callback([&] {
        const Modulus m(canon_n);
        out << to_string(canonical_rep(parse_elem(canon_elem, m))) << '\n';
    });

    // ---- auto-check ----
    auto* auto_cmd = app.add_subcommand(
        "auto-check", "is x -> image an automorphism of Z_n[x]?");
    std::uint64_t auto_n = 0;
    std::string auto_image;
    auto_cmd->add_option("--modulus", auto_n, "modulus n >= 2")->required();
    auto_cmd->add_option("--image", auto_image, "image polynomial [c0,c1,...]")
        ->required();
    auto_cmd->callback([&] {
        const Modulus m(auto_n);
        const Endo s{parse_poly(auto_image, m)};
        const auto form = classify(s);
        if (form) {
            out << "AUTOMORPHISM\n";
            out << "a=" << form->a.value() << " u=" << form->u.value()
                << " f=" << to_coeff_array(form->f) << '\n';
        } else {
            out << "NOT_AUTOMORPHISM\n";
        }
    });

    // ---- invert ----
    auto* invert_cmd =
        app.add_subcommand("invert", "inverse automorphism image");
    std::uint64_t invert_n = 0;
    std::string invert_image;
    invert_cmd->add_option("--modulus", invert_n, "modulus n >= 2")->required();
    invert_cmd->add_option("--image", invert_image, "image polynomial")->required();
    invert_cmd->callback([&] {
        const Modulus m(invert_n);
        out << to_coeff_array(invert(Endo{parse_poly(invert_image, m)}).image())
            << '\n';
    });

    // ---- order ----
    auto* order_cmd = app.add_subcommand("order", "order of an automorphism");
    std::uint64_t order_n = 0, order_cap = 0;
    std::string order_image;
    order_cmd->add_option("--modulus", order_n, "modulus n >= 2")->required();
    order_cmd->add_option("--image", order_image, "image polynomial")->required();
    order_cmd->add_option("--cap", order_cap, "iteration cap (default 4n^2)");
    order_cmd->callback([&] {
        const Modulus m(order_n);
        out << order(Endo{parse_poly(order_image, m)}, order_cap) << '\n';
    });

    // ---- expand ----
    auto* expand_cmd =
        app.add_subcommand("expand", "base-f expansion g = sum g_k f^k");
    std::uint64_t expand_n = 0;
    std::string expand_f, expand_g;
    expand_cmd->add_option("--modulus", expand_n, "modulus n >= 2")->required();
    expand_cmd->add_option("--f", expand_f, "base polynomial")->required();
    expand_cmd->add_option("--g", expand_g, "polynomial to expand")->required();
    expand_cmd->callback([&] {
        const Modulus m(expand_n);
        const auto digits =
            f_adic_expand(parse_poly(expand_g, m), parse_poly(expand_f, m));
        ordered_json arr = ordered_json::array();
        for (const Poly& d : digits) arr.push_back(poly_json(d));
        out << arr.dump() << '\n';
    });

    // ---- fixed ----
    auto* fixed_cmd =
        app.add_subcommand("fixed", "invariant-subring slice of Z_n[x]");
    std::uint64_t fixed_n = 0, fixed_degree = 0, fixed_work = 0;
    std::string fixed_gens, fixed_format = "table";
    fixed_cmd->add_option("--modulus", fixed_n, "modulus n >= 2")->required();
    fixed_cmd->add_option("--gens", fixed_gens,
                          "generator images \"[..];[..]\"")->required();
    fixed_cmd->add_option("--degree", fixed_degree, "degree bound D")->required();
    auto* work_opt = fixed_cmd->add_option(
        "--work-bound", fixed_work,
        "also certify the slice multiplicatively closed at this level");
    fixed_cmd->add_option("--format", fixed_format, "json|table")
        ->check(CLI::IsMember({"json", "table"}));
    fixed_cmd->callback([&] {
        const Modulus m(fixed_n);
        std::vector<Endo> gens;
        for (const Poly& p : parse_poly_list(fixed_gens, m)) gens.emplace_back(p);
        const CoeffModule mod = fixed_module(SubgroupSpec(m, gens), fixed_degree);
        bool certified = false;
        if (work_opt->count()) {
            if (!modules_equal(span_module(mod.basis_polys(), m, fixed_degree,
                                           fixed_work),
                               mod))
                throw InconsistentWithCatalog(
                    "slice is not multiplicatively closed at the work bound");
            certified = true;
        }
        if (fixed_format == "json") {
            ordered_json j{{"modulus", m.n()},
                           {"degree_bound", fixed_degree},
                           {"basis", ordered_json::array()}};
            for (const Poly& b : mod.basis_polys())
                j["basis"].push_back(poly_json(b));
            out << j.dump() << '\n';
        } else {
            out << "fixed module over Z_" << m.n() << " at degree <= "
                << fixed_degree << ":\n";
            for (const Poly& b : mod.basis_polys())
                out << "  " << to_string(b) << '\n';
            if (certified)
                out << "span-closure: certified at W=" << fixed_work << '\n';
        }
    });

    // ---- z4 ----
    auto* z4_cmd = app.add_subcommand("z4", "structure tools for G(Z_4)");
    z4_cmd->require_subcommand(1);

    auto* z4_identify = z4_cmd->add_subcommand(
        "identify", "classify a subgroup's fixed ring against the catalog");
    std::string z4_gens;
    std::uint64_t z4_degree = 8;
    z4_identify->add_option("--gens", z4_gens,
                            "generators \"alpha:[..];beta:[..]\"")->required();
    z4_identify->add_option("--degree", z4_degree, "degree bound D")->required();
    z4_identify->callback([&] {
        std::vector<Endo> gens;
        for (const std::string& part : split(z4_gens, ';'))
            if (!trim(part).empty())
                gens.push_back(to_endo(parse_gaut(part)));
        const Z4Verdict v =
            identify_z4(SubgroupSpec(Modulus(4), gens), z4_degree);
        switch (v.kind) {
            case Z4Case::FullRing: out << "FULL_RING\n"; break;
            case Z4Case::X2_2X: out << "X2_2X\n"; break;
            case Z4Case::Y2_2Y: out << "Y2_2Y\n"; break;
            case Z4Case::YPlusXF:
                out << "Y_PLUS_XF f=" << to_coeff_array(*v.f) << '\n';
                break;
        }
    });

    auto* z4_stab = z4_cmd->add_subcommand(
        "stabilizer", "pool elements fixing the given ring generators");
    std::string z4_ring_gens;
    std::uint64_t z4_pool = 3;
    z4_stab->add_option("--ring-gens", z4_ring_gens,
                        "polynomials \"[..];[..]\"")->required();
    z4_stab->add_option("--pool-degree", z4_pool, "pool degree d")->required();
    z4_stab->callback([&] {
        const auto sub = stabilizer(
            parse_poly_list(z4_ring_gens, Modulus(4)),
            static_cast<unsigned>(z4_pool));
        ordered_json arr = ordered_json::array();
        for (const GAut4& s : sub.elements()) arr.push_back(gaut_json(s));
        out << arr.dump() << '\n';
    });

    auto* z4_classes = z4_cmd->add_subcommand(
        "classes", "conjugacy classes of the degree-d pool");
    std::uint64_t z4_classes_pool = 3;
    z4_classes->add_option("--pool-degree", z4_classes_pool, "pool degree d")
        ->required();
    z4_classes->callback([&] {
        const auto P = pool(static_cast<unsigned>(z4_classes_pool));
        std::vector<std::pair<GAut4, std::uint64_t>> reps;
        for (const GAut4& s : P) {
            bool placed = false;
            for (auto& [rep, size] : reps)
                if (are_conjugate(rep, s)) {
                    ++size;
                    placed = true;
                    break;
                }
            if (!placed) reps.emplace_back(s, 1);
        }
        ordered_json j{{"pool_degree", z4_classes_pool},
                       {"count", reps.size()},
                       {"classes", ordered_json::array()}};
        for (const auto& [rep, size] : reps)
            j["classes"].push_back(
                ordered_json{{"rep", gaut_json(rep)}, {"size", size}});
        out << j.dump() << '\n';
    });

    // ---- verify ----
    auto* verify_cmd =
        app.add_subcommand("verify", "oracle-backed verification suites");
    std::string verify_suite;
    std::uint64_t verify_max_n = 24;
    verify_cmd
        ->add_option("--suite", verify_suite,
                     "all|residues|gilmer|conjugacy|fixedrings|gz4")
        ->required()
        ->check(CLI::IsMember(
            {"all", "residues", "gilmer", "conjugacy", "fixedrings", "gz4"}));
    verify_cmd->add_option("--max-n", verify_max_n,
                           "modulus bound for the conjugacy suite");
    verify_cmd->callback([&] {
        bool ok = true;
        if (verify_suite == "all" || verify_suite == "residues")
            ok &= suites::residues(out);
        if (verify_suite == "all" || verify_suite == "gilmer")
            ok &= suites::gilmer(out, {4, 6, 8, 9});
        if (verify_suite == "all" || verify_suite == "conjugacy")
            ok &= suites::conjugacy(out, verify_max_n);
        if (verify_suite == "all" || verify_suite == "fixedrings")
            ok &= suites::fixedrings(out);
        if (verify_suite == "all" || verify_suite == "gz4")
            ok &= suites::gz4(out);
        out << (ok ? "verification passed\n" : "verification FAILED\n");
        if (!ok) exit_code = 1;
    });

    std::reverse(args.begin(), args.end()); // CLI11 consumes from the back
    try {
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const RingError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return exit_code;
}

} // namespace ringauto::cli
