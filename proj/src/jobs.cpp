#include "jobs.hpp"

#include "cobar.hpp"
#include "kraines.hpp"
#include "simplicial.hpp"

#include <fstream>
#include <functional>
#include <sstream>

namespace dgc {

namespace {

std::string render(const JobSpec& spec, const Json& report) {
    if (spec.format == "json") return report.dump(2) + "\n";
    if (spec.format == "csv") {
        // tables render as CSV; everything else falls back to JSON
        if (report.contains("table")) {
            std::ostringstream os;
            os << "degree,dimension\n";
            const auto& dims = report["table"]["dims"];
            for (std::size_t d = 0; d < dims.size(); ++d)
                os << d << "," << dims[d].get<int>() << "\n";
            return os.str();
        }
        return report.dump(2) + "\n";
    }
    // text
    std::ostringstream os;
    os << "# dgcalc " << report.value("target", "") << " report\n";
    for (const auto& [k, v] : report.items()) {
        if (k == "table") {
            os << "degree dimension\n";
            const auto& dims = v["dims"];
            for (std::size_t d = 0; d < dims.size(); ++d)
                os << d << " " << dims[d].get<int>() << "\n";
        } else if (v.is_primitive()) {
            os << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
        } else {
            os << k << ": " << v.dump() << "\n";
        }
    }
    return os.str();
}

Json running_max(const std::vector<int>& dims) {
    Json out = Json::array();
    int best = 0;
    for (int d : dims) {
        best = std::max(best, d);
        out.push_back(best);
    }
    return out;
}

RingTag job_ring(const JobSpec& spec) {
    if (spec.ring_mode == "fp") return RingTag::prime_field(spec.prime);
    if (spec.ring_mode == "z") return RingTag::integers();
    if (spec.ring_mode == "zpe") return RingTag::cyclic(spec.prime, spec.eps);
    throw error(errc::input, "unknown ring mode '" + spec.ring_mode + "' (fp | z | zpe)");
}

DGAlgebra reduced_for_job(const JobSpec& spec, const DGAlgebra& raw) {
    RingTag target = job_ring(spec);
    if (raw.ring == target) return raw;
    require(raw.ring.is_integers(), errc::input,
            "source is over " + raw.ring.to_string() + "; cannot base-change to " +
                target.to_string());
    if (target.is_integers()) return raw;
    return raw.base_change(target);
}

Json check_target(const JobSpec& spec, const DGAlgebra& algebra) {
    Json verdicts = Json::object();
    auto record = [&](const std::string& name, const std::function<void()>& run) {
        try {
            run();
            verdicts[name] = "pass";
        } catch (const error& e) {
            verdicts[name] = std::string("FAIL: ") + e.what();
        }
    };
    record("algebra_invariants", [&] { algebra.check_invariants(); });
    int n = std::min(spec.max_degree, 8);
    bool barable = algebra.is_connected() && algebra.is_one_reduced();
    if (barable) {
        record("bar_delta_squared", [&] { BarComplex(algebra, n).complex().check_d_squared(); });
        record("bar_coalgebra_laws", [&] { BarComplex(algebra, n).as_coalgebra().check_invariants(); });
        record("hochschild_D_squared",
               [&] { HochschildComplex(algebra, n).complex().check_d_squared(); });
        record("cobar_d_squared", [&] {
            BarComplex bar(algebra, n);
            CobarComplex(bar.as_coalgebra(), std::max(1, n - 1), CobarVariance::cochain)
                .check_d_squared();
        });
        record("counit_chain_map", [&] {
            BarComplex bar(algebra, n);
            CobarComplex cobar(bar.as_coalgebra(), std::max(1, n - 1), CobarVariance::cochain);
            auto alpha = counit_alpha(cobar, bar);
            require(alpha.is_chain_map, errc::invariant, "counit fails to commute with d");
        });
        if (algebra.graded_commutative()) {
            record("shuffle_leibniz", [&] {
                BarComplex bar(algebra, std::min(n, 6));
                for (int d1 = 1; d1 <= 3; ++d1)
                    for (int d2 = 1; d1 + d2 + 1 <= bar.truncation(); ++d2)
                        for (int i1 = 0; i1 < bar.dim(d1); ++i1)
                            for (int i2 = 0; i2 < bar.dim(d2); ++i2) {
                                Elem a = bar.zero_elem(d1), b = bar.zero_elem(d2);
                                a.coeffs[i1] = 1;
                                b.coeffs[i2] = 1;
                                Elem lhs = bar.apply_delta(bar.shuffle(a, b));
                                Elem rhs = bar.shuffle(bar.apply_delta(a), b);
                                Elem r2 = bar.shuffle(a, bar.apply_delta(b));
                                Int s = d1 % 2 == 0 ? 1 : -1;
                                for (std::size_t t = 0; t < rhs.coeffs.size(); ++t)
                                    rhs.coeffs[t] = algebra.ring.add(
                                        rhs.coeffs[t], algebra.ring.mul(s, r2.coeffs[t]));
                                require(lhs == rhs, errc::invariant, "shuffle Leibniz residual");
                            }
            });
        }
    } else {
        verdicts["bar_pipeline"] = "skipped: source is not connected/1-reduced";
    }
    if (!algebra.ring.is_integers() && algebra.integral_parent) {
        record("uct_consistency", [&] {
            uct_split(algebra.integral_parent->complex(), spec.prime, 0,
                      algebra.top_degree());
        });
    }
    return verdicts;
}

Json elem_json(const DGAlgebra& a, const Elem& e) {
    Json terms = Json::array();
    for (int i = 0; i < static_cast<int>(e.coeffs.size()); ++i)
        if (e.coeffs[i] != 0)
            terms.push_back(Json::array({a.basis.names[e.degree][i], e.coeffs[i].get_str()}));
    Json j;
    j["degree"] = e.degree;
    j["terms"] = std::move(terms);
    return j;
}

Json bar_elem_json(const BarComplex& bar, const Elem& e) {
    Json terms = Json::array();
    if (e.degree >= 0 && e.degree <= bar.truncation())
        for (int i = 0; i < static_cast<int>(e.coeffs.size()); ++i)
            if (e.coeffs[i] != 0)
                terms.push_back(Json::array(
                    {bar.word_name(bar.words(e.degree)[i]), e.coeffs[i].get_str()}));
    Json j;
    j["degree"] = e.degree;
    j["terms"] = std::move(terms);
    return j;
}

Json kraines_session(const JobSpec& spec, const DGAlgebra& algebra) {
    require(algebra.ring.is_field(), errc::input, "kraines sessions run over F_p");
    Json rep;
    const int top = algebra.top_degree();
    int deg1 = -1;
    Elem a1;
    CochainComplex cx = algebra.complex();
    for (int d = 3; d <= top; d += 2) {
        auto h = cx.cohomology_at(d);
        if (h.dimension() > 0) {
            deg1 = d;
            a1 = Elem{d, h.representatives[0]};
            break;
        }
    }
    require(deg1 > 0, errc::input,
            "no odd-degree cohomology class to start a Kraines sequence on '" + algebra.label +
                "'");
    rep["start_degree"] = deg1;

    bool has_integral = algebra.integral_parent != nullptr;
    std::vector<Elem> terms{a1};
    int max_terms = std::max(1, (top - 1) / std::max(1, deg1 - 1));
    int restarts = 0;
    std::string status = "extendable";
    while (static_cast<int>(terms.size()) < max_terms) {
        if (infinite_by_pattern(algebra, terms)) break;
        auto ext = extend_kraines(algebra, terms);
        if (ext.extended) {
            if (spec.coset_search > 0 && !ext.new_term.zero()) {
                // bounded coset enumeration: alternative particular solutions
                int tried = 0;
                int tdeg = ext.new_term.degree;
                auto rki = rank_kernel_image(algebra.diffs[tdeg]);
                Json alts = Json::array();
                for (const auto& k : rki.kernel) {
                    if (tried >= spec.coset_search) break;
                    Elem alt = ext.new_term;
                    for (std::size_t i = 0; i < alt.coeffs.size(); ++i)
                        alt.coeffs[i] = algebra.ring.add(alt.coeffs[i], k[i]);
                    std::vector<Elem> probe = terms;
                    probe.push_back(alt);
                    alts.push_back(check_kraines(algebra, probe).pass);
                    ++tried;
                }
                rep["coset_search"] = alts;
            }
            terms.push_back(ext.new_term);
            continue;
        }
        // obstructed: restart through the integral lift
        if (!has_integral) {
            status = "obstructed";
            break;
        }
        if (++restarts > top) {
            status = "restart cap exceeded";
            break;
        }
        auto lift = lift_kraines(algebra, terms);
        auto rs = restart_from_obstruction(algebra, terms, lift);
        terms = {rs.a_next};
        deg1 = rs.a_next.degree;
        rep["restarted_at_degree"] = deg1;
    }
    if (status == "extendable" && infinite_by_pattern(algebra, terms))
        status = "infinite-by-pattern";
    rep["status"] = status;
    rep["restarts"] = restarts;
    rep["terms"] = static_cast<int>(terms.size());
    {
        auto chk = check_kraines(algebra, terms);
        rep["recursion_verified"] = chk.pass;
    }
    {
        Json ts = Json::array();
        for (const auto& t : terms) ts.push_back(elem_json(algebra, t));
        rep["sequence"] = std::move(ts);
    }

    // families in the bar complex
    int n = spec.max_degree;
    int fam_max = std::min(5, std::max(1, n / std::max(1, deg1 - 1)));
    BarComplex bar(algebra, n);
    auto fam = build_a_family(bar, terms, fam_max);
    Json af;
    af["variant"] = fam.variant == AFamilyVariant::composition_sum ? "composition_sum"
                                                                   : "literal_iteration";
    af["surviving_variants"] = fam.surviving_variants;
    af["nonzero"] = fam.nonzero;
    af["coproduct_identity"] = fam.coproduct_ok;
    rep["a_family"] = std::move(af);

    if (has_integral) {
        const DGAlgebra& az = *algebra.integral_parent;
        auto lift = lift_kraines(algebra, terms);
        Json lj;
        lj["defect_valuations"] = lift.valuations;
        Json defects = Json::array();
        for (const auto& d : lift.defects) defects.push_back(elem_json(az, d));
        lj["defects"] = std::move(defects);
        rep["integral_lift"] = std::move(lj);

        // a UCT witness supplies (bhat, ahat', eps)
        auto split = uct_split(az.complex(), spec.prime, 0, az.top_degree());
        const UCTWitness* wit = nullptr;
        int wit_deg = -1;
        for (const auto& d : split.degrees)
            if (!d.witnesses.empty()) {
                wit = &d.witnesses[0];
                wit_deg = d.degree;
                break;
            }
        if (wit != nullptr && az.has_cup1) {
            Elem bhat1{wit_deg, wit->bhat};
            Elem ahatp{wit_deg + 1, wit->ahat};
            auto bseq = cup_one_b_sequence(az, lift, bhat1, wit->eps, ahatp, fam_max);
            BarComplex barz(az, n);
            auto yfam = build_y_family(barz, bar, lift, bseq, fam_max, spec.variant);
            Json yj;
            yj["variant"] = yfam.variant;
            yj["surviving_variants"] = yfam.surviving_variants;
            yj["eps"] = yfam.eps;
            yj["y_nonzero"] = yfam.y_nonzero;
            yj["x_nonzero"] = yfam.x_nonzero;
            yj["coproduct_identity"] = yfam.coproduct_ok;
            Json bj = Json::array(), yhj = Json::array(), xhj = Json::array();
            for (const auto& t : bseq.terms) bj.push_back(elem_json(az, t));
            for (const auto& t : yfam.yhat) yhj.push_back(bar_elem_json(barz, t));
            for (const auto& t : yfam.xhat) xhj.push_back(bar_elem_json(barz, t));
            yj["b_sequence"] = std::move(bj);
            yj["yhat"] = std::move(yhj);
            yj["xhat"] = std::move(xhj);
            rep["y_family"] = std::move(yj);

            auto corr = correction_sequence(az, lift, fam_max);
            Json cj;
            cj["eps_N"] = corr.eps_n;
            cj["identity"] = corr.identity_ok;
            cj["bockstein_zero"] = corr.bockstein_zero;
            if (!corr.failure.empty()) cj["failure"] = corr.failure;
            rep["correction_sequence"] = std::move(cj);

            if (algebra.graded_commutative()) {
                HochschildComplex hh(algebra, n);
                auto zrep = verify_z_cycles(hh, yfam.x_modp, yfam.y_modp);
                Json zj;
                zj["all_pass"] = zrep.all_pass;
                if (!zrep.first_failure.empty()) zj["first_failure"] = zrep.first_failure;
                rep["z_cycles"] = std::move(zj);
            }
        } else {
            rep["y_family"] = wit == nullptr ? "skipped: no p-torsion witness"
                                             : "skipped: no cup-one table over Z";
        }
    } else {
        rep["integral_lift"] = "unavailable: source carries no integral parent";
    }
    return rep;
}

}  // namespace

Json JobSpec::to_json() const {
    Json j;
    j["source"] = source;
    j["prime"] = prime;
    j["ring_mode"] = ring_mode;
    j["eps"] = eps;
    j["max_degree"] = max_degree;
    j["target"] = target;
    j["variant"] = variant;
    j["coset_search"] = coset_search;
    return j;
}

JobSpec JobSpec::from_json(const Json& j) {
    require(j.is_object(), errc::input, "job spec must be a JSON object");
    JobSpec s;
    s.source = j.value("source", "");
    s.prime = j.value("prime", 2L);
    s.ring_mode = j.value("ring_mode", "fp");
    s.eps = j.value("eps", 1);
    s.max_degree = j.value("max_degree", 10);
    s.target = j.value("target", "space");
    s.format = j.value("format", "text");
    s.cache_dir = j.value("cache_dir", "");
    s.variant = j.value("variant", "");
    s.coset_search = j.value("coset_search", 0);
    require(!s.source.empty(), errc::input, "job spec needs a source");
    return s;
}

DGAlgebra load_source(const std::string& source) {
    auto colon = source.find(':');
    require(colon != std::string::npos, errc::input,
            "source must be preset:NAME, simplicial:PATH, simplicial:builtin:NAME or dga:PATH");
    std::string kind = source.substr(0, colon);
    std::string rest = source.substr(colon + 1);
    if (kind == "preset") return preset(rest);
    if (kind == "simplicial") {
        if (rest.rfind("builtin:", 0) == 0)
            return cochain_algebra(builtin_complex(rest.substr(8)), RingTag::integers());
        std::ifstream in(rest);
        require(static_cast<bool>(in), errc::input, "cannot open simplicial file '" + rest + "'");
        return cochain_algebra(SimplicialComplex::parse(in, rest), RingTag::integers());
    }
    if (kind == "dga") {
        std::ifstream in(rest);
        require(static_cast<bool>(in), errc::input, "cannot open DGA file '" + rest + "'");
        Json j = Json::parse(in, nullptr, false);
        require(!j.is_discarded(), errc::input, "DGA file '" + rest + "' is not valid JSON");
        return dga_from_json(j);
    }
    throw error(errc::input, "unknown source kind '" + kind + "'");
}

JobResult run_job(const JobSpec& spec) {
    JobResult res;
    Json rep;
    rep["target"] = spec.target;
    rep["spec"] = spec.to_json();
    try {
        require(spec.max_degree >= 1, errc::input, "max-degree must be >= 1");
        DGAlgebra raw = load_source(spec.source);
        DGAlgebra algebra = reduced_for_job(spec, raw);
        rep["algebra"] = algebra.label;
        rep["ring"] = algebra.ring.to_string();

        Cache cache(spec.cache_dir);
        std::string cache_key;

        if (spec.target == "space") {
            if (algebra.ring.is_field()) {
                int hi = std::min(spec.max_degree, algebra.top_degree());
                BettiTable t = algebra.complex().betti(0, hi, "space");
                t.safe_window = hi;
                rep["table"] = betti_to_json(t);
            } else if (algebra.ring.is_integers()) {
                Json groups = Json::array();
                CochainComplex cx = algebra.complex();
                for (int d = 0; d <= std::min(spec.max_degree, algebra.top_degree()); ++d) {
                    auto ic = cx.integral_at(d);
                    Json g;
                    g["degree"] = d;
                    g["free_rank"] = ic.free_rank;
                    Json tor = Json::array();
                    for (const auto& o : ic.torsion_orders) tor.push_back(o.get_str());
                    g["torsion"] = std::move(tor);
                    groups.push_back(std::move(g));
                }
                rep["integral_cohomology"] = std::move(groups);
            } else {
                throw error(errc::input, "space tables need F_p or Z coefficients");
            }
        } else if (spec.target == "loop" || spec.target == "freeloop") {
            require(algebra.ring.is_field(), errc::input,
                    spec.target + " tables need F_p coefficients");
            cache_key = dga_to_json(algebra).dump() + "|" + std::to_string(spec.max_degree) +
                        "|" + spec.target;
            bool hit = false;
            if (auto cached = cache.lookup(cache_key)) {
                rep["table"] = *cached;
                hit = true;
            }
            if (!hit) {
                BettiTable t = spec.target == "loop" ? loop_betti(algebra, spec.max_degree)
                                                     : free_loop_betti(algebra, spec.max_degree);
                rep["table"] = betti_to_json(t);
                cache.store(cache_key, rep["table"]);
            }
            rep["cache"] = hit ? "hit" : (cache.enabled() ? "miss" : "off");
            std::vector<int> dims = rep["table"]["dims"].get<std::vector<int>>();
            rep["running_max"] = running_max(dims);
        } else if (spec.target == "kraines") {
            rep["session"] = kraines_session(spec, algebra);
        } else if (spec.target == "check") {
            Json verdicts = check_target(spec, algebra);
            rep["verdicts"] = verdicts;
            for (const auto& [k, v] : verdicts.items())
                if (v.is_string() && v.get<std::string>().rfind("FAIL", 0) == 0)
                    res.exit_code = 3;
        } else {
            throw error(errc::input, "unknown target '" + spec.target + "'");
        }
    } catch (const error& e) {
        res.exit_code = static_cast<int>(e.code);
        rep["error"] = e.what();
        res.report = rep;
        res.text = render(spec, rep);
        return res;
    }
    res.report = rep;
    res.text = render(spec, rep);
    return res;
}

}  // namespace dgc
