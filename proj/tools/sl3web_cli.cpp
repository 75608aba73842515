// sl3web command line front end.
// Exit codes: 0 ok, 1 domain error (invalid web, budget), 2 usage error.

#include "CLI11.hpp"
#include "sl3web/json_io.hpp"
#include "sl3web/sl3web.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace sl3web;

namespace {

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    std::string format = "auto";
    bool pretty = false;
    unsigned threads = 0;
};

Web load_web(const std::string& path, const std::string& format) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    MapFile mf;
    if (format == "simple")
        mf = parse_simple(text);
    else if (format == "dart")
        mf = parse_dart(text);
    else
        mf = parse_map(text);
    return Web::validate(std::move(mf.map), mf.circles);
}

MapFormat out_format(const std::string& f) { return f == "simple" ? MapFormat::Simple : MapFormat::Dart; }

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

HalfLaurent parse_expr_arg(const std::string& s) {
    try {
        return parse_qexpr(s);
    } catch (const QExprParseError& e) {
        throw UsageError(std::string("bad expression '") + s + "': " + e.what());
    }
}

RootMethod parse_method(const std::string& m) {
    if (m == "factor") return RootMethod::Factor;
    if (m == "exhaustive") return RootMethod::Exhaustive;
    return RootMethod::Auto;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum sl(3) invariants of cubic bipartite planar graphs"};
    app.require_subcommand(1);
    Common c;
    auto add_common = [&](CLI::App* s) {
        s->add_option("--format", c.format, "input/output map format")->check(CLI::IsMember({"auto", "simple", "dart"}));
        s->add_flag("--pretty", c.pretty, "human readable output");
        s->add_option("--threads", c.threads, "worker threads (0 = all cores)");
    };

    std::string file, file2;
    std::uint64_t seed = 0;
    bool seeded = false, trace = false;
    auto* inv = app.add_subcommand("invariant", "evaluate a web");
    add_common(inv);
    inv->add_option("file", file, "web file")->required();
    inv->add_option("--seed", seed, "random reduction order")->each([&](const std::string&) { seeded = true; });
    inv->add_flag("--trace", trace, "emit the reduction tree");

    auto* dec = app.add_subcommand("decompose", "split a 2-connected web into primes");
    add_common(dec);
    dec->add_option("file", file, "web file")->required();
    dec->add_option("--seed", seed, "random cut order")->each([&](const std::string&) { seeded = true; });

    int vertices = 0, slack = -1, max_vertices = 20, enum_limit = 30;
    bool circular_only = false, count_only = false;
    auto* en = app.add_subcommand("enumerate", "list prime webs with a given number of vertices");
    add_common(en);
    en->add_option("--vertices", vertices, "vertex count (even)")->required();
    en->add_option("--slack", slack, "extra sizes used for the pushing closure (even)");
    en->add_flag("--circular-only", circular_only, "only circular primes");
    en->add_flag("--count", count_only, "print the count only");
    en->add_option("--max-vertices", enum_limit, "refuse larger enumerations");

    auto* cat = app.add_subcommand("catalog", "all primes up to a size, one JSON object per line");
    add_common(cat);
    cat->add_option("--max-vertices", max_vertices, "largest size (even)");
    cat->add_option("--slack", slack, "pushing closure slack");

    bool oriented = false;
    auto* can = app.add_subcommand("canon", "canonical key of a web");
    add_common(can);
    can->add_option("file", file, "web file")->required();
    can->add_flag("--oriented", oriented, "do not identify mirror images");

    auto* iso = app.add_subcommand("iso", "test two webs for isomorphism");
    add_common(iso);
    iso->add_option("file", file, "first web")->required();
    iso->add_option("other", file2, "second web")->required();
    iso->add_flag("--oriented", oriented, "do not identify mirror images");

    int d = 0;
    std::vector<std::string> quotient_files;
    std::string quotient_expr;
    auto* sc = app.add_subcommand("symmetry-check", "compare P_G with P_Q^d modulo (d, [3]^d-[3])");
    add_common(sc);
    sc->add_option("file", file, "web file")->required();
    sc->add_option("--d", d, "symmetry order")->required()->check(CLI::PositiveNumber);
    sc->add_option("--quotient", quotient_files, "quotient web file");
    sc->add_option("--quotient-invariant", quotient_expr, "quotient invariant as an expression");

    std::string expr, method = "auto";
    std::uint64_t budget = std::uint64_t(1) << 26;
    auto* sr = app.add_subcommand("symmetry-root", "search alpha with alpha^d = P modulo (d, [3]^d-[3])");
    add_common(sr);
    sr->add_option("file", file, "web file");
    sr->add_option("--invariant", expr, "use this invariant instead of a file");
    sr->add_option("--d", d, "symmetry order")->required()->check(CLI::Range(2, 64));
    sr->add_option("--budget", budget, "candidate budget");
    sr->add_option("--method", method, "root search route")->check(CLI::IsMember({"auto", "factor", "exhaustive"}));

    auto* vt = app.add_subcommand("verify-tables", "regenerate the reference prime table and compare");
    vt->alias("verify-paper");
    add_common(vt);
    vt->add_option("--max-vertices", max_vertices, "largest size (even, at most 22)");
    vt->add_option("--slack", slack, "pushing closure slack");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        EnumOptions eo{resolve_threads(c.threads)};
        if (*inv) {
            Web w = load_web(file, c.format);
            if (trace) {
                TraceNode t = invariant_trace(w);
                if (c.pretty)
                    std::cout << to_pretty(t.value) << "\n";
                else
                    emit(json{{"invariant", poly_json(t.value)}, {"trace", trace_json(t)}});
                return 0;
            }
            HalfLaurent p;
            if (seeded) {
                EngineOptions opt;
                opt.random_seed = seed;
                p = Engine(opt).invariant(w);
            } else {
                p = invariant(w);
            }
            if (c.pretty)
                std::cout << to_pretty(p) << "\n";
            else
                emit(json{{"invariant", poly_json(p)}});
        } else if (*dec) {
            Web w = load_web(file, c.format);
            DecomposeOptions opt;
            if (seeded) opt.random_seed = seed;
            Decomposition r = decompose(w, opt);
            HalfLaurent pg = invariant(w);
            std::vector<HalfLaurent> vals;
            for (const auto& p : r.primes) vals.push_back(invariant(p));
            auto [lhs, rhs] = r.identity_sides(pg, vals);
            if (c.pretty) {
                std::cout << "primes " << r.k << ", bigons " << r.l << ", collapsed " << r.collapsed << "\n";
                for (std::size_t i = 0; i < r.primes.size(); ++i)
                    std::cout << "  " << r.primes[i].num_vertices() << " vertices: " << to_pretty(vals[i]) << "\n";
                std::cout << "identity " << (lhs == rhs ? "holds" : "FAILS") << "\n";
            } else {
                json primes = json::array();
                for (std::size_t i = 0; i < r.primes.size(); ++i) {
                    json pj = web_summary_json(r.primes[i]);
                    pj["invariant"] = poly_json(vals[i]);
                    primes.push_back(std::move(pj));
                }
                emit(json{{"k", r.k}, {"l", r.l}, {"collapsed", r.collapsed}, {"invariant", poly_json(pg)},
                          {"primes", primes}, {"identity_holds", lhs == rhs}});
            }
        } else if (*en) {
            if (vertices < 0 || vertices % 2) throw UsageError("--vertices must be even and non-negative");
            if (slack >= 0 && slack % 2) throw UsageError("--slack must be even");
            if (vertices > enum_limit) throw DomainError("enumeration budget exceeded: raise --max-vertices");
            std::vector<Web> webs = circular_only ? circular_primes(vertices, eo)
                                                  : all_primes(vertices, slack >= 0 ? slack : default_slack(vertices), eo);
            if (count_only) {
                std::cout << webs.size() << "\n";
            } else if (c.pretty) {
                MapFormat f = out_format(c.format);
                for (std::size_t i = 0; i < webs.size(); ++i)
                    std::cout << "# " << vertices / 2 << "_" << i + 1 << "\n" << serialize_web(webs[i], f) << "\n";
            } else {
                json arr = json::array();
                for (const auto& w : webs) arr.push_back(web_summary_json(w));
                emit(json{{"vertices", vertices}, {"circular_only", circular_only}, {"count", webs.size()}, {"webs", arr}});
            }
        } else if (*cat) {
            if (max_vertices % 2) throw UsageError("--max-vertices must be even");
            if (max_vertices > 22) throw DomainError("enumeration budget exceeded: catalog is limited to 22 vertices");
            for (const auto& e : build_catalog(max_vertices, slack >= 0 ? slack : 2, eo)) {
                if (c.pretty)
                    std::cout << e.name << "  " << to_pretty(e.invariant) << (e.circular ? "  circular" : "") << "\n";
                else
                    std::cout << entry_json(e).dump() << "\n";
            }
        } else if (*can) {
            Web w = load_web(file, c.format);
            std::string key = to_hex(canonical_key(w, !oriented));
            if (c.pretty)
                std::cout << key << "\n";
            else
                emit(json{{"key", key}, {"reflections", !oriented}});
        } else if (*iso) {
            Web a = load_web(file, c.format), b = load_web(file2, c.format);
            bool same = is_isomorphic(a, b, !oriented);
            if (c.pretty)
                std::cout << (same ? "isomorphic" : "not isomorphic") << "\n";
            else
                emit(json{{"isomorphic", same}, {"reflections", !oriented}});
        } else if (*sc) {
            if (quotient_files.empty() && quotient_expr.empty())
                throw UsageError("give --quotient or --quotient-invariant");
            Web w = load_web(file, c.format);
            std::vector<std::pair<Web, int>> cands;
            for (const auto& q : quotient_files) cands.emplace_back(load_web(q, c.format), d);
            SymmetryReport rep = symmetry_report(w, cands);
            if (!quotient_expr.empty()) {
                HalfLaurent pq = parse_expr_arg(quotient_expr);
                QuotientCheck qc;
                qc.d = d;
                qc.quotient_invariant = pq;
                if (d == 1) {
                    qc.skipped = true;
                } else {
                    qc.lhs = mod_reduce(rep.invariant, d);
                    qc.rhs = mod_reduce(pow(pq, static_cast<unsigned>(d)), d);
                    qc.congruent = *qc.lhs == *qc.rhs;
                }
                rep.checks.push_back(qc);
            }
            if (c.pretty) {
                for (const auto& q : rep.checks)
                    std::cout << "d=" << q.d << " quotient " << to_pretty(q.quotient_invariant) << ": "
                              << (q.skipped ? "skipped" : q.congruent ? "congruent" : "not congruent") << "\n";
            } else {
                emit(symmetry_json(rep));
            }
        } else if (*sr) {
            if (file.empty() == expr.empty()) throw UsageError("give exactly one of a web file or --invariant");
            HalfLaurent p = expr.empty() ? invariant(load_web(file, c.format)) : parse_expr_arg(expr);
            RootSearchOptions opt;
            opt.budget = budget;
            opt.threads = resolve_threads(c.threads);
            opt.method = parse_method(method);
            RootSearchResult r = dth_root_search(p, d, opt);
            if (c.pretty) {
                std::cout << to_string(r.outcome) << " (" << r.method << ", " << r.searched << " candidates)\n";
                if (r.witness) std::cout << "witness " << r.witness->to_string() << "\n";
                if (!r.note.empty()) std::cout << r.note << "\n";
            } else {
                emit(root_json(r));
            }
        } else if (*vt) {
            if (max_vertices % 2) throw UsageError("--max-vertices must be even");
            if (max_vertices > 22) throw DomainError("enumeration budget exceeded: at most 22 vertices");
            auto catalog = build_catalog(max_vertices, slack >= 0 ? slack : 2, eo);
            VerifyReport rep = verify_reference(catalog, max_vertices);
            if (c.pretty) {
                std::cout << "histogram";
                for (const auto& [n, k] : rep.histogram) std::cout << " " << n << ":" << k;
                std::cout << (rep.histogram_ok() ? " (ok)" : " (MISMATCH)") << "\n";
                for (const auto& r : rep.rows) {
                    std::cout << r.row << "  ";
                    if (!r.structural_match)
                        std::cout << "NO STRUCTURAL MATCH";
                    else if (r.invariant_match)
                        std::cout << "exact";
                    else
                        std::cout << (r.suspect ? "suspect" : "MISMATCH") << "  table " << r.expression << "  computed "
                                  << to_pretty(*r.computed);
                    if (!r.likely_reading.empty())
                        std::cout << "\n      equals " << r.likely_reading << ": " << (r.matches_likely_reading ? "yes" : "no");
                    std::cout << "\n";
                }
                std::cout << rep.exact_rows() << "/" << rep.rows.size() << " rows exact, " << rep.suspect_rows()
                          << " suspect rows (" << rep.suspect_structural() << " structurally matched)\n";
            } else {
                emit(verify_json(rep));
            }
        }
        return 0;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const QExprParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
