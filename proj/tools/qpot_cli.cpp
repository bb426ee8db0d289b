// Command-line driver: every subcommand writes a JSON report
// {schema_version, config, results, ok} and exits 0 iff all checks pass,
// 1 on a failed check, 2 on bad input, 3 on an internal invariant violation.

#include <cstdint>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qpot/json_io.hpp"
#include "qpot/qpot.hpp"

using namespace qpot;

namespace {

struct Globals {
    std::uint64_t seed = 1;
    std::size_t trials = 100;
    std::string out;
    bool json_stdout = false;
};

struct Report {
    json config = json::object();
    json results = json::object();
    bool ok = true;

    void check(const std::string& name, bool passed) {
        results["checks"][name] = passed;
        ok = ok && passed;
    }
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) parts.push_back(item);
    return parts;
}

Point3 parse_point(const std::string& s) {
    const auto parts = split(s, ',');
    if (parts.size() != 3) throw InputError("point must be \"a,b,c\", got \"" + s + "\"");
    return {Scalar(Scalar::parse_rational(parts[0])), Scalar(Scalar::parse_rational(parts[1])),
            Scalar(Scalar::parse_rational(parts[2]))};
}

std::vector<std::size_t> parse_mults(const std::string& s) {
    std::vector<std::size_t> out;
    for (const auto& p : split(s, ',')) {
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(p, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != p.size() || p.empty() || v < 1) throw InputError("multiplicities must be positive integers: \"" + s + "\"");
        out.push_back(static_cast<std::size_t>(v));
    }
    if (out.empty()) throw InputError("no multiplicities given");
    return out;
}

json to_json(const std::array<std::size_t, 4>& a) { return json::array({a[0], a[1], a[2], a[3]}); }

// f(rho + v) - f(rho - v) = 2 df(v) + 2 f(v) and f(rho + v) + f(rho - v) - 2 f(rho) = v^T H v,
// since f is cubic with cubic part f itself.
bool derivatives_consistent(const FramedRep& rho, std::size_t trials, std::uint64_t seed) {
    Rng rng(seed);
    const Scalar f0 = eval_potential(rho);
    const GradientTriple g = gradient(rho);
    const QuadraticForm h = hessian(rho);
    for (std::size_t t = 0; t < trials; ++t) {
        FramedRep v = FramedRep::zero(rho.n, rho.r);
        for (auto* m : {&v.A, &v.B, &v.C, &v.V}) *m = rng.gaussian_matrix(m->rows(), m->cols(), 4);
        const FramedRep plus{rho.n, rho.r, rho.A + v.A, rho.B + v.B, rho.C + v.C, rho.V + v.V};
        const FramedRep minus{rho.n, rho.r, rho.A - v.A, rho.B - v.B, rho.C - v.C, rho.V - v.V};
        const Scalar fp = eval_potential(plus), fm = eval_potential(minus);
        const Scalar df = trace(v.A * g.ga) + trace(v.B * g.gb) + trace(v.C * g.gc);
        if (fp - fm != Scalar(2) * (df + eval_potential(v))) return false;
        if (fp + fm - Scalar(2) * f0 != h(v.flatten())) return false;
    }
    return true;
}

json relation_json(const ProductTableReport& t) {
    json a = json::array();
    for (const auto& r : t.relations) a.push_back(json{{"relation", r.relation}, {"holds", r.holds}, {"computed", r.computed}});
    return a;
}

json massey_json(const MasseyReport& m) {
    return json{{"closed_under_product", m.closed_under_product},
                {"closure_failures", m.closure_failures},
                {"all_cocycles", m.all_cocycles},
                {"non_cocycles", m.non_cocycles},
                {"identity_on_homology", m.identity_on_homology},
                {"class_ranks", to_json(m.class_ranks)},
                {"ext_dims", to_json(m.ext_dims)},
                {"trace_normalization", qpot::to_json(m.trace_normalization)},
                {"higher_products_vanish", m.higher_products_vanish()}};
}

json tangent_json(const TangentReport& r) {
    json a = json::array();
    for (const auto& c : r.ideals)
        a.push_back(json{{"staircase", c.staircase},
                         {"generators", c.generators},
                         {"hom_dim", c.hom_dim},
                         {"hess_dim", c.hess_dim},
                         {"obstruction_dim", c.obstruction_dim},
                         {"equal", c.equal()}});
    return a;
}

int emit(const Globals& g, Report& rep) {
    json doc{{"schema_version", kSchemaVersion}, {"config", rep.config}, {"results", rep.results}, {"ok", rep.ok}};
    doc["config"]["seed"] = g.seed;
    doc["config"]["trials"] = g.trials;
    if (!g.out.empty()) {
        write_json_file(g.out, doc);
        if (g.json_stdout) std::cout << doc.dump(2) << '\n';
        else std::cout << (rep.ok ? "ok" : "FAILED") << " -> " << g.out << '\n';
    } else {
        std::cout << doc.dump(2) << '\n';
    }
    return rep.ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations for the potential Tr A[B,C] on framed 3-loop quiver representations"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand
    Globals g;
    app.add_option("--seed", g.seed, "seed for every random draw")->capture_default_str();
    app.add_option("--trials", g.trials, "number of randomized trials")->capture_default_str();
    app.add_option("--out", g.out, "write the JSON report here");
    app.add_flag("--json", g.json_stdout, "also print the report to stdout when --out is given");

    Report rep;
    std::function<void()> action;

    // potential
    std::string rep_path, random_spec;
    auto* pot = app.add_subcommand("potential", "evaluate f, its gradient or Hessian");
    pot->require_subcommand(1);
    auto load_rep = [&]() -> FramedRep {
        if (!random_spec.empty()) {
            const auto nr = parse_mults(random_spec);
            if (nr.size() != 2) throw InputError("--random expects \"n,r\"");
            rep.config["random"] = random_spec;
            return random_rep(nr[0], nr[1], g.seed, 3);
        }
        if (rep_path.empty()) throw InputError("need --rep FILE or --random n,r");
        rep.config["rep"] = rep_path;
        return framed_rep_from_json(read_json_file(rep_path));
    };
    for (const char* name : {"eval", "grad", "hess"}) {
        auto* sub = pot->add_subcommand(name);
        sub->add_option("--rep", rep_path, "framed representation JSON");
        sub->add_option("--random", random_spec, "use random_rep with \"n,r\" and --seed");
        sub->callback([&, name = std::string(name)] {
            action = [&, name] {
                rep.config["subcommand"] = "potential " + name;
                const FramedRep rho = load_rep();
                if (!random_spec.empty()) rep.results["rep"] = qpot::to_json(rho);
                if (name == "eval") {
                    rep.results["value"] = qpot::to_json(eval_potential(rho));
                    rep.check("framing_independent", verify_framing_independence(rho, g.trials, g.seed));
                } else if (name == "grad") {
                    const GradientTriple gr = gradient(rho);
                    rep.results["gradient"] = json{{"A", qpot::to_json(gr.ga)}, {"B", qpot::to_json(gr.gb)}, {"C", qpot::to_json(gr.gc)}};
                    rep.results["critical"] = is_critical(rho);
                    rep.check("derivatives_consistent", derivatives_consistent(rho, g.trials, g.seed));
                } else {
                    const QuadraticForm h = hessian(rho);
                    rep.results["dimension"] = h.dim();
                    rep.results["rank"] = rank(h.gram());
                    rep.results["gram"] = qpot::to_json(h.gram());
                    rep.check("derivatives_consistent", derivatives_consistent(rho, g.trials, g.seed));
                }
            };
        });
    }

    // stability
    auto* stab = app.add_subcommand("stability", "Krylov stability and criticality");
    auto* stab_check = stab->add_subcommand("check");
    stab->require_subcommand(1);
    stab_check->add_option("--rep", rep_path, "framed representation JSON")->required();
    stab_check->callback([&] {
        action = [&] {
            rep.config["subcommand"] = "stability check";
            const FramedRep rho = load_rep();
            const QuotPointReport q = quot_point_check(rho);
            rep.results["krylov_dim"] = q.krylov_dim;
            rep.results["n"] = q.n;
            rep.results["gradient_norm"] = qpot::to_json(q.gradient_norm);
            rep.check("critical", q.critical);
            rep.check("stable", q.stable);
        };
    });

    // luna
    std::string data_path;
    auto* luna = app.add_subcommand("luna", "slice decomposition at a polystable point");
    luna->require_subcommand(1);
    auto* luna_dec = luna->add_subcommand("decompose");
    luna_dec->add_option("--data", data_path, "polystable data JSON")->required();
    luna_dec->callback([&] {
        action = [&] {
            rep.config["subcommand"] = "luna decompose";
            rep.config["data"] = data_path;
            const LunaReport l = luna_report(polystable_from_json(read_json_file(data_path)));
            rep.results["dims"] = json{{"Y_a", l.dim_Ya}, {"im_sigma", l.dim_imSigma}, {"Y_sigma", l.dim_Yslice}};
            rep.results["sigma_kernel_dim"] = l.sigma_kernel_dim;
            rep.results["slice_determinant"] = qpot::to_json(l.slice_determinant);
            rep.check("direct_sum", l.direct_sum);
            rep.check("im_sigma_off_diagonal", l.im_sigma_off_diagonal);
            rep.check("sigma_kernel_dim", l.sigma_kernel_dim == l.expected_sigma_kernel_dim);
            rep.check("sigma_in_hessian_radical", l.sigma_in_hessian_radical);
            rep.check("complement_contains_Y_a", l.complement_contains_Ya);
            rep.check("slice_hessian_nondegenerate", l.nondegenerate);
        };
    });

    // koszul
    std::string point_spec = "0,0,0";
    auto* kos = app.add_subcommand("koszul", "hat elements, Ext algebra, Massey vanishing");
    kos->require_subcommand(1);
    auto* kos_table = kos->add_subcommand("table");
    kos_table->add_option("--point", point_spec, "point \"a,b,c\"")->capture_default_str();
    kos_table->callback([&] {
        action = [&] {
            rep.config["subcommand"] = "koszul table";
            rep.config["point"] = point_spec;
            const KoszulComplex k = koszul(parse_point(point_spec));
            const ProductTableReport t = verify_product_table(k);
            const MasseyReport m = massey_vanishing_report(k);
            rep.results["relations"] = relation_json(t);
            rep.results["failing"] = t.failing();
            rep.results["massey"] = massey_json(m);
            rep.check("product_table", t.all_hold());
            rep.check("ext_dims", m.ext_dims == std::array<std::size_t, 4>{1, 3, 3, 1});
            rep.check("higher_products_vanish", m.higher_products_vanish());
        };
    });

    // dgalg
    std::size_t dg_n = 2;
    std::string mults_spec;
    auto* dga = app.add_subcommand("dgalg", "matrix dg-algebra checks");
    dga->require_subcommand(1);
    auto* dga_verify = dga->add_subcommand("verify");
    dga_verify->add_option("--n", dg_n, "matrix size (1..4)")->required();
    dga_verify->callback([&] {
        action = [&] {
            rep.config["subcommand"] = "dgalg verify";
            rep.config["n"] = dg_n;
            rep.results["generators"] = build_q3n(dg_n).generator_count();
            rep.check("delta_squared_zero", verify_delta_squared(dg_n));
            rep.check("h0_ideal_match", h0_ideal_match(dg_n));
        };
    });
    auto* dga_ce = dga->add_subcommand("ce");
    dga_ce->add_option("--mults", mults_spec, "multiplicities \"a1,a2,...\"")->required();
    dga_ce->callback([&] {
        action = [&] {
            rep.config["subcommand"] = "dgalg ce";
            rep.config["mults"] = mults_spec;
            const CEPiece p = ce_piece(parse_mults(mults_spec));
            rep.results["wedge_dim"] = p.wedge_dim;
            rep.results["image_generators"] = p.images.size();
            rep.results["gradient_generators"] = p.gradient.size();
            rep.check("ce_ideal_match", p.match);
        };
    });

    // hilb
    std::size_t hilb_n = 3, hilb_index = 0;
    auto* hilb = app.add_subcommand("hilb", "monomial ideals and tangent comparison");
    hilb->require_subcommand(1);
    auto* hilb_cmp = hilb->add_subcommand("compare");
    hilb_cmp->add_option("--n", hilb_n, "colength (1..6)")->required();
    hilb_cmp->callback([&] {
        action = [&] {
            rep.config["subcommand"] = "hilb compare";
            rep.config["n"] = hilb_n;
            const TangentReport t = compare_tangents(hilb_n);
            rep.results["count"] = t.ideals.size();
            rep.results["ideals"] = tangent_json(t);
            rep.check("all_equal", t.all_equal());
        };
    });
    auto* hilb_rep = hilb->add_subcommand("rep", "print the framed representation of one monomial ideal");
    hilb_rep->add_option("--n", hilb_n, "colength (1..8)")->required();
    hilb_rep->add_option("--index", hilb_index, "position in enumeration order")->capture_default_str();
    hilb_rep->callback([&] {
        action = [&] {
            rep.config["subcommand"] = "hilb rep";
            rep.config["n"] = hilb_n;
            rep.config["index"] = hilb_index;
            const auto ideals = enumerate_monomial_ideals(hilb_n);
            if (hilb_index >= ideals.size()) throw InputError("index out of range");
            const FramedRep rho = ideal_to_rep(ideals[hilb_index]);
            rep.results["staircase"] = ideals[hilb_index].staircase_string();
            rep.results["rep"] = qpot::to_json(rho);
            rep.check("quot_point", quot_point_check(rho).is_quot_point());
        };
    });

    // superpot
    bool verify = false;
    auto* sp = app.add_subcommand("superpot", "Ext-quiver superpotential");
    sp->require_subcommand(1);
    auto* sp_extract = sp->add_subcommand("extract");
    sp_extract->add_option("--data", data_path, "polystable data JSON")->required();
    sp_extract->add_flag("--verify", verify, "check the trace identity on random matrices");
    sp_extract->callback([&] {
        action = [&] {
            rep.config["subcommand"] = "superpot extract";
            rep.config["data"] = data_path;
            rep.config["verify"] = verify;
            const PolystableData d = polystable_from_json(read_json_file(data_path));
            const Superpotential w = extract_superpotential(d);
            json terms = json::object();
            for (const auto& [word, c] : w.terms) terms[word.to_string()] = qpot::to_json(c);
            rep.results["terms"] = terms;
            rep.results["j"] = qpot::to_json(w.j.at(0));
            rep.results["l"] = qpot::to_json(w.l.at(0));
            rep.check("six_terms_per_vertex", w.terms.size() == 6 * d.k());
            rep.check("j_plus_l_zero", sanity_j_plus_l(d));
            if (verify) {
                const TraceIdentityReport t = verify_trace_identity(d, w, g.trials, g.seed);
                rep.results["mismatches"] = t.mismatches;
                rep.results["identity_ok"] = t.identity_ok();
                rep.check("identity_ok", t.identity_ok());
            }
        };
    });

    // quiver
    std::size_t framing = 1;
    auto* quiv = app.add_subcommand("quiver", "quiver constructions and stability scan");
    quiv->require_subcommand(1);
    auto* q_framed = quiv->add_subcommand("framed");
    q_framed->add_option("--r", framing, "number of framing arrows")->capture_default_str();
    q_framed->callback([&] {
        action = [&] {
            rep.config["subcommand"] = "quiver framed";
            rep.config["r"] = framing;
            rep.results["quiver"] = qpot::to_json(framed_3loop(framing));
        };
    });
    auto* q_ext = quiv->add_subcommand("ext");
    q_ext->add_option("--data", data_path, "polystable data JSON")->required();
    q_ext->callback([&] {
        action = [&] {
            rep.config["subcommand"] = "quiver ext";
            rep.config["data"] = data_path;
            rep.results["quiver"] = qpot::to_json(ext_quiver(polystable_from_json(read_json_file(data_path))));
        };
    });
    auto* q_scan = quiv->add_subcommand("scan");
    q_scan->add_option("--mults", mults_spec, "multiplicities \"a1,a2,...\"")->required();
    q_scan->callback([&] {
        action = [&] {
            rep.config["subcommand"] = "quiver scan";
            rep.config["mults"] = mults_spec;
            std::vector<long> a;
            for (auto m : parse_mults(mults_spec)) a.push_back(static_cast<long>(m));
            const SubvectorScanReport s = destabilizing_subvector_scan(a);
            rep.results["subvectors_scanned"] = s.subvectors_scanned;
            rep.results["counterexamples"] = s.counterexamples;
            rep.check("confirmed", s.confirmed());
        };
    });

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
        action();
        return emit(g, rep);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const InvariantError& e) {
        std::cerr << "invariant violation: " << e.what() << '\n';
        return 3;
    }
}
