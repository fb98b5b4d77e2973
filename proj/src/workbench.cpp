#include "qb2/workbench.hpp"

#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <optional>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "qb2/iso.hpp"
#include "qb2/pidegree.hpp"
#include "qb2/serialize.hpp"
#include "qb2/verify.hpp"

namespace qb2 {

namespace {

std::string power_name(const char* base, long e) {
    if (e == 1) return base;
    return std::string(base) + "^" + std::to_string(e);
}

// Searches exponents by increasing magnitude, positive first, so the
// shortest name wins (s^-2 rather than s^3 at order 5).
std::optional<std::string> pure_power_name(const Cyc& c, const RootConfig& cfg, const char* name,
                                           long base_exponent) {
    const long order = order_of_exponent(cfg.ell, base_exponent);
    for (long t = 1; t < order; ++t) {
        for (long sign : {1L, -1L}) {
            const long j = sign * t;
            if (cfg.q_pow(base_exponent * j) == c) return power_name(name, j);
        }
    }
    return std::nullopt;
}

std::optional<std::string> mixed_power_name(const Cyc& c, const RootConfig& cfg) {
    const long ord_r = order_of_exponent(cfg.ell, cfg.er);
    const long ord_s = order_of_exponent(cfg.ell, cfg.es);
    for (long total = 2; total <= 8; ++total) {
        for (long ia = 1; ia < total; ++ia) {
            const long ja = total - ia;
            if (ia >= ord_r || ja >= ord_s) continue;
            for (long si : {1L, -1L}) {
                for (long sj : {1L, -1L}) {
                    const long i = si * ia, j = sj * ja;
                    if (cfg.r_pow(i) * cfg.s_pow(j) == c)
                        return power_name("r", i) + " " + power_name("s", j);
                }
            }
        }
    }
    return std::nullopt;
}

std::string coefficient_string(const Cyc& c, const RootConfig& cfg) {
    if (c.is_rational()) return c.rational_value().get_str();
    for (long sign : {1L, -1L}) {
        const Cyc t = sign > 0 ? c : -c;
        std::optional<std::string> name = pure_power_name(t, cfg, "s", cfg.es);
        if (!name) name = pure_power_name(t, cfg, "r", cfg.er);
        if (!name) name = mixed_power_name(t, cfg);
        if (!name) name = pure_power_name(t, cfg, "q", 1);
        if (name) return sign > 0 ? *name : "-" + *name;
    }
    return "(" + c.to_string() + ")";
}

std::string monomial_string(const PBWMonomial& m) {
    std::string out;
    auto append = [&](const char* gen, long e) {
        if (e == 0) return;
        if (!out.empty()) out += ' ';
        out += gen;
        if (e > 1) out += "^" + std::to_string(e);
    };
    append("X1", m.a);
    append("X2", m.b);
    append("X3", m.c);
    append("X4", m.d);
    return out;
}

} // namespace

std::string pretty_normal_form(const NCPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [mono, coeff] : p.terms()) {
        const std::string cs = coefficient_string(coeff, p.config());
        const std::string ms = monomial_string(mono);
        std::string term;
        if (ms.empty())
            term = cs;
        else if (cs == "1")
            term = ms;
        else if (cs == "-1")
            term = "-" + ms;
        else
            term = cs + " * " + ms;
        if (out.empty())
            out = term;
        else if (!term.empty() && term[0] == '-')
            out += " - " + term.substr(1);
        else
            out += " + " + term;
    }
    return out;
}

namespace {

// ---------------------------------------------------------------- sweep ---

Cyc sweep_unit(const RootConfig& cfg, std::mt19937_64& rng) {
    const long e = static_cast<long>(rng() % static_cast<unsigned long>(cfg.level));
    const long mag = 1 + static_cast<long>(rng() % 3);
    return Cyc::zeta_pow(cfg.level, e) * Rat(mag);
}

Cyc sweep_maybe_zero(const RootConfig& cfg, std::mt19937_64& rng) {
    if (rng() % 4 == 0) return cfg.zero();
    return sweep_unit(cfg, rng);
}

bool off_lambda_hyperplane(const RootConfig& cfg, const ParamTuple& p) {
    const Cyc lhs = (cfg.one() - cfg.rsinv_pow(1)) * p[3];
    const Cyc rhs = cfg.s_pow(2) * (cfg.r_pow(2) - cfg.s_pow(2)) * p[2];
    return lhs != rhs;
}

ParamTuple sweep_params(FamilyTag family, const RootConfig& cfg, std::mt19937_64& rng) {
    const FamilyTag shape = is_borel_family(family) ? lift_target(family) : family;
    switch (shape) {
    case FamilyTag::U_M_LAMBDA: {
        ParamTuple p = {sweep_unit(cfg, rng), sweep_unit(cfg, rng), sweep_unit(cfg, rng),
                        sweep_maybe_zero(cfg, rng)};
        while (!off_lambda_hyperplane(cfg, p)) p[3] = sweep_maybe_zero(cfg, rng);
        return p;
    }
    case FamilyTag::U_M_MU:
    case FamilyTag::U_M_NU:
        return {sweep_unit(cfg, rng), sweep_unit(cfg, rng), sweep_maybe_zero(cfg, rng)};
    case FamilyTag::U_M_EPSILON:
        return {sweep_unit(cfg, rng), sweep_unit(cfg, rng), sweep_unit(cfg, rng)};
    default:
        return {sweep_unit(cfg, rng), sweep_maybe_zero(cfg, rng)};
    }
}

std::string config_name(long m, long n, long k1, long k2) {
    return "config_" + std::to_string(m) + "_" + std::to_string(n) + "_" + std::to_string(k1) +
           "_" + std::to_string(k2);
}

std::vector<std::pair<long, long>> k_pairs(const SweepSpec& spec, long m, long n) {
    if (!spec.all_coprime) return {{spec.k1, spec.k2}};
    std::vector<long> ks1, ks2;
    for (long k = 1; k <= std::max(1L, m - 1); ++k)
        if (std::gcd(k, m) == 1) ks1.push_back(k);
    for (long k = 1; k <= std::max(1L, n - 1); ++k)
        if (std::gcd(k, n) == 1) ks2.push_back(k);
    std::vector<std::pair<long, long>> out;
    for (long a : ks1)
        for (long b : ks2) out.push_back({a, b});
    return out;
}

Json spec_to_json(const SweepSpec& spec) {
    Json families = Json::array();
    for (FamilyTag t : spec.families) families.push_back(to_string(t));
    Json j{{"m_min", spec.m_min},
           {"m_max", spec.m_max},
           {"n_min", spec.n_min},
           {"n_max", spec.n_max},
           {"all_coprime", spec.all_coprime},
           {"families", std::move(families)},
           {"build_ceiling", spec.build_ceiling},
           {"simplicity_ceiling", spec.simplicity_ceiling},
           {"seed", spec.seed}};
    if (!spec.all_coprime) {
        j["k1"] = spec.k1;
        j["k2"] = spec.k2;
    }
    return j;
}

Json summary_to_json(const SweepSpec& spec, const SweepSummary& s) {
    Json rows = Json::array();
    for (const SweepRow& r : s.rows) {
        rows.push_back(Json{{"m", r.m},
                            {"n", r.n},
                            {"k1", r.k1},
                            {"k2", r.k2},
                            {"ell", r.ell},
                            {"pi_deg", r.pi_deg},
                            {"quotient_bound", r.quotient_bound},
                            {"identities", r.identities},
                            {"built", r.built},
                            {"failures", r.failures}});
    }
    return Json{{"seed", spec.seed},
                {"spec", spec_to_json(spec)},
                {"configs", s.configs},
                {"skipped", s.skipped},
                {"modules_built", s.modules_built},
                {"failures", s.failures},
                {"rows", std::move(rows)},
                {"failure_details", s.failure_details},
                {"notes", s.notes},
                {"artifacts", s.artifact_files}};
}

} // namespace

SweepSummary run_sweep(const SweepSpec& spec) {
    if (spec.m_min < 1 || spec.m_max < spec.m_min || spec.n_min < 1 || spec.n_max < spec.n_min)
        throw Error("sweep ranges must be non-empty");
    if (spec.outdir.empty()) throw Error("sweep requires an output directory");
    if (spec.build_ceiling < 1 || spec.simplicity_ceiling < 1)
        throw Error("sweep ceilings must be positive");
    std::filesystem::create_directories(spec.outdir);

    std::mt19937_64 rng(spec.seed);
    SweepSummary sum;

    for (long m = spec.m_min; m <= spec.m_max; ++m) {
        for (long n = spec.n_min; n <= spec.n_max; ++n) {
            for (auto [k1, k2] : k_pairs(spec, m, n)) {
                const std::string name = config_name(m, n, k1, k2);
                RootConfig cfg;
                try {
                    cfg = make_root_config(m, n, k1, k2);
                } catch (const Error& e) {
                    ++sum.skipped;
                    sum.notes.push_back(name + " skipped: " + std::string(e.what()));
                    continue;
                }

                SweepRow row;
                row.m = m, row.n = n, row.k1 = k1, row.k2 = k2, row.ell = cfg.ell;
                Json art{{"seed", spec.seed}, {"config", to_json(cfg)}};
                std::vector<std::string> local_failures;

                try {
                    const PiDegreeReport pi = pi_degree(cfg);
                    const QuotientBoundReport qb = quotient_pi_bound(cfg);
                    row.pi_deg = pi.pi_deg_snf;
                    row.quotient_bound = qb.bound_snf;
                    art["pi_degree"] = to_json(pi);
                    art["quotient_bound"] = to_json(qb);

                    const std::pair<const char*, bool> idents[] = {
                        {"serre", serre_check(cfg)},
                        {"power_rules", lemma22_check(cfg, 4)},
                        {"central_powers", centrality_check(cfg)},
                        {"subalgebra", b_relations_check(cfg)},
                    };
                    Json idj = Json::object();
                    row.identities = true;
                    for (const auto& [id_name, ok] : idents) {
                        idj[id_name] = ok;
                        if (!ok) {
                            row.identities = false;
                            local_failures.push_back(name + ": identity suite \"" +
                                                     id_name + "\" failed");
                        }
                    }
                    art["identities"] = std::move(idj);

                    Json fams = Json::array();
                    for (FamilyTag tag : spec.families) {
                        const ParamTuple params = sweep_params(tag, cfg, rng);
                        const FamilyDims dims = dims_for(tag, cfg, params);
                        Json pj = Json::array();
                        for (const Cyc& v : params) pj.push_back(to_json(v));
                        Json fj{{"family", to_string(tag)},
                                {"params", std::move(pj)},
                                {"dim", dims.dim()},
                                {"grid", Json{{"rows", dims.rows}, {"cols", dims.cols}}}};

                        if (dims.dim() > spec.build_ceiling) {
                            fj["built"] = false;
                            const std::string note = name + " " + to_string(tag) +
                                                     ": build skipped, dim " +
                                                     std::to_string(dims.dim()) +
                                                     " exceeds ceiling " +
                                                     std::to_string(spec.build_ceiling);
                            fj["note"] = note;
                            sum.notes.push_back(note);
                            fams.push_back(std::move(fj));
                            continue;
                        }

                        const Representation rep = build_module(tag, cfg, params);
                        ++row.built;
                        fj["built"] = true;
                        const RelationReport rel = is_borel_family(tag) ? check_b_relations(rep)
                                                                        : check_relations(rep);
                        fj["relations_pass"] = rel.all_hold();
                        if (!rel.all_hold()) {
                            local_failures.push_back(name + " " + to_string(tag) +
                                                     ": relation check failed (" +
                                                     rel.first_failure->relation + ")");
                        }
                        const bool bound_ok = rep.dim() <= pi.pi_deg_snf;
                        fj["bound_ok"] = bound_ok;
                        if (!bound_ok) {
                            local_failures.push_back(name + " " + to_string(tag) +
                                                     ": dimension exceeds the invariant bound");
                        }
                        if (rep.dim() <= spec.simplicity_ceiling) {
                            const long generated = generated_algebra_dimension(rep.action);
                            const bool simple = generated == rep.dim() * rep.dim();
                            fj["simple"] = simple;
                            if (!simple) {
                                local_failures.push_back(
                                    name + " " + to_string(tag) + ": not simple (span " +
                                    std::to_string(generated) + " of " +
                                    std::to_string(rep.dim() * rep.dim()) + ")");
                            }
                        } else {
                            fj["simple"] = nullptr;
                            sum.notes.push_back(name + " " + to_string(tag) +
                                                ": simplicity skipped, dim " +
                                                std::to_string(rep.dim()) + " exceeds ceiling " +
                                                std::to_string(spec.simplicity_ceiling));
                        }
                        fams.push_back(std::move(fj));
                    }
                    art["families"] = std::move(fams);
                } catch (const Error& e) {
                    local_failures.push_back(name + ": " + std::string(e.what()));
                    art["error"] = std::string(e.what());
                }

                row.failures = static_cast<long>(local_failures.size());
                art["failures"] = local_failures;
                const std::string file = name + ".json";
                save_json_file(spec.outdir + "/" + file, art);
                sum.artifact_files.push_back(file);
                sum.rows.push_back(row);
                ++sum.configs;
                sum.modules_built += row.built;
                sum.failures += row.failures;
                for (std::string& f : local_failures) sum.failure_details.push_back(std::move(f));
            }
        }
    }

    save_json_file(spec.outdir + "/summary.json", summary_to_json(spec, sum));
    sum.artifact_files.push_back("summary.json");
    return sum;
}

namespace {

// ------------------------------------------------------------------ CLI ---

struct UsageError : Error {
    using Error::Error;
};

struct ParsedArgs {
    std::map<std::string, std::string> values;
    std::set<std::string> switches;
    std::vector<std::string> positional;

    bool has(const std::string& name) const {
        return switches.count(name) > 0 || values.count(name) > 0;
    }
};

ParsedArgs parse_args(const std::vector<std::string>& args, size_t begin,
                      const std::set<std::string>& switch_names,
                      const std::set<std::string>& value_names) {
    ParsedArgs out;
    for (size_t i = begin; i < args.size(); ++i) {
        const std::string& tok = args[i];
        if (tok.rfind("--", 0) == 0) {
            if (switch_names.count(tok)) {
                out.switches.insert(tok);
            } else if (value_names.count(tok)) {
                if (i + 1 >= args.size()) throw UsageError("option " + tok + " needs a value");
                out.values[tok] = args[++i];
            } else {
                throw UsageError("unknown option " + tok);
            }
        } else {
            out.positional.push_back(tok);
        }
    }
    return out;
}

long parse_long_strict(const std::string& text, const std::string& what) {
    try {
        size_t pos = 0;
        const long v = std::stol(text, &pos);
        if (pos != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw UsageError(what + " expects an integer, got \"" + text + "\"");
    }
}

long require_long(const ParsedArgs& a, const std::string& name) {
    auto it = a.values.find(name);
    if (it == a.values.end()) throw UsageError("missing required option " + name);
    return parse_long_strict(it->second, name);
}

long optional_long(const ParsedArgs& a, const std::string& name, long fallback) {
    auto it = a.values.find(name);
    if (it == a.values.end()) return fallback;
    return parse_long_strict(it->second, name);
}

std::string require_value(const ParsedArgs& a, const std::string& name) {
    auto it = a.values.find(name);
    if (it == a.values.end()) throw UsageError("missing required option " + name);
    return it->second;
}

RootConfig config_from_args(const ParsedArgs& a) {
    return make_root_config(require_long(a, "--m"), require_long(a, "--n"),
                            require_long(a, "--k1"), require_long(a, "--k2"),
                            optional_long(a, "--level-multiplier", 1));
}

Word parse_word_text(const std::string& text) {
    Word w;
    std::istringstream ss(text);
    std::string tok;
    while (ss >> tok) {
        const size_t caret = tok.find('^');
        const std::string base = tok.substr(0, caret);
        long e = 1;
        if (caret != std::string::npos)
            e = parse_long_strict(tok.substr(caret + 1), "generator power");
        if (e < 0) throw UsageError("generator powers must be nonnegative");
        Gen g;
        if (base == "X1")
            g = Gen::X1;
        else if (base == "X2")
            g = Gen::X2;
        else if (base == "X3")
            g = Gen::X3;
        else if (base == "X4")
            g = Gen::X4;
        else
            throw UsageError("unknown generator \"" + base + "\" (expected X1, X2, X3, X4)");
        w.insert(w.end(), static_cast<size_t>(e), g);
    }
    return w;
}

ParamTuple parse_params_text(const std::string& text, const RootConfig& cfg) {
    const Json j = Json::parse(text, nullptr, false);
    if (!j.is_discarded() && j.is_array()) return params_from_json(j, cfg);
    ParamTuple out;
    size_t begin = 0;
    while (begin <= text.size()) {
        const size_t comma = text.find(',', begin);
        const std::string piece =
            comma == std::string::npos ? text.substr(begin) : text.substr(begin, comma - begin);
        out.push_back(parse_scalar(piece, cfg));
        if (comma == std::string::npos) break;
        begin = comma + 1;
    }
    return out;
}

std::vector<FamilyTag> parse_family_list(const std::string& text) {
    std::vector<FamilyTag> out;
    if (text == "all") {
        for (const char* name : {"u-lambda", "u-mu", "u-epsilon", "u-nu", "u-xi", "b-lambda",
                                 "b-mu", "b-epsilon"})
            out.push_back(family_from_string(name));
        return out;
    }
    size_t begin = 0;
    while (begin <= text.size()) {
        const size_t comma = text.find(',', begin);
        const std::string piece =
            comma == std::string::npos ? text.substr(begin) : text.substr(begin, comma - begin);
        if (!piece.empty()) out.push_back(family_from_string(piece));
        if (comma == std::string::npos) break;
        begin = comma + 1;
    }
    return out;
}

long simplicity_ceiling_from_env() {
    if (const char* env = std::getenv("QB2_SIMPLICITY_CEILING")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 32;
}

const char* kUsage =
    "usage: qb2 <verb> [options]\n"
    "\n"
    "verbs:\n"
    "  pideg --m M --n N --k1 K1 --k2 K2 [--json]\n"
    "      invariant degree of the algebra at the given root parameters\n"
    "  normal-form \"WORD\" --m M --n N --k1 K1 --k2 K2 [--json]\n"
    "      straighten a word in X1..X4 (powers like X2^3 allowed)\n"
    "  build-module --family F --m M --n N --k1 K1 --k2 K2 --params P\n"
    "      [--level-multiplier T] [--out FILE] [--json]\n"
    "      build a module; P is a JSON array or comma-separated scalars\n"
    "      (rationals and powers q^k, zeta^k, r^k, s^k, rs^k)\n"
    "  verify FILE [--json]\n"
    "      re-check the defining relations of a stored module (exit 1 on fail)\n"
    "  simplicity FILE [--ceiling N] [--json]\n"
    "      span-closure simplicity certificate (exit 1 when not simple)\n"
    "  iso --family F --m M --n N --k1 K1 --k2 K2 --p P --p2 P2\n"
    "      [--level-multiplier T] [--intertwiner] [--json]\n"
    "      isomorphism of two modules of one family (exit 1 when distinct)\n"
    "  sweep --m-min A --m-max B --n-min C --n-max D --out DIR\n"
    "      [--k1 K1 --k2 K2] [--families F1,F2,...|all] [--seed S]\n"
    "      [--build-ceiling N] [--ceiling N] [--json]\n"
    "      run degree reports, identity checks, and module pipelines over a\n"
    "      grid, writing JSON artifacts (exit 1 when any check fails)\n"
    "\n"
    "families: u-lambda u-mu u-epsilon u-nu u-xi b-lambda b-mu b-epsilon\n";

int cmd_pideg(const std::vector<std::string>& args, std::ostream& out) {
    const ParsedArgs a = parse_args(args, 1, {"--json"},
                                    {"--m", "--n", "--k1", "--k2", "--level-multiplier"});
    if (!a.positional.empty()) throw UsageError("pideg takes no positional arguments");
    const RootConfig cfg = config_from_args(a);
    const PiDegreeReport report = pi_degree(cfg);
    if (a.has("--json"))
        out << dump_canonical(to_json(report));
    else
        out << report.pi_deg_snf << "\n";
    return 0;
}

int cmd_normal_form(const std::vector<std::string>& args, std::ostream& out) {
    const ParsedArgs a = parse_args(args, 1, {"--json"},
                                    {"--m", "--n", "--k1", "--k2", "--level-multiplier"});
    if (a.positional.size() != 1)
        throw UsageError("normal-form takes exactly one word, e.g. \"X2 X1\"");
    const RootConfig cfg = config_from_args(a);
    const NCPoly nf = normalize(cfg, parse_word_text(a.positional[0]));
    if (a.has("--json"))
        out << dump_canonical(to_json(nf));
    else
        out << pretty_normal_form(nf) << "\n";
    return 0;
}

int cmd_build_module(const std::vector<std::string>& args, std::ostream& out) {
    const ParsedArgs a = parse_args(
        args, 1, {"--json"},
        {"--family", "--m", "--n", "--k1", "--k2", "--level-multiplier", "--params", "--out"});
    if (!a.positional.empty()) throw UsageError("build-module takes no positional arguments");
    const FamilyTag family = family_from_string(require_value(a, "--family"));
    const RootConfig cfg = config_from_args(a);
    const ParamTuple params = parse_params_text(require_value(a, "--params"), cfg);
    const Representation rep = build_module(family, cfg, params);

    std::string written;
    if (a.values.count("--out")) {
        written = a.values.at("--out");
        save_json_file(written, to_json(rep));
    }
    if (a.has("--json")) {
        out << dump_canonical(to_json(rep));
    } else {
        out << "family  " << to_string(rep.family) << "\n";
        out << "config  m=" << cfg.m << " n=" << cfg.n << " k1=" << cfg.k1 << " k2=" << cfg.k2
            << " (ell=" << cfg.ell << ", level=" << cfg.level << ")\n";
        out << "dim     " << rep.dim() << " (grid " << rep.dims.rows << " x " << rep.dims.cols
            << ")\n";
        for (const std::string& note : rep.notes) out << "note    " << note << "\n";
        if (!written.empty()) out << "wrote   " << written << "\n";
    }
    return 0;
}

int cmd_verify(const std::vector<std::string>& args, std::ostream& out) {
    const ParsedArgs a = parse_args(args, 1, {"--json"}, {});
    if (a.positional.size() != 1) throw UsageError("verify takes exactly one module file");
    const Representation rep = representation_from_json(load_json_file(a.positional[0]));
    const RelationReport report =
        is_borel_family(rep.family) ? check_b_relations(rep) : check_relations(rep);
    if (a.has("--json")) {
        out << dump_canonical(to_json(report));
    } else {
        for (const auto& [name, ok] : report.checks)
            out << (ok ? "ok    " : "FAIL  ") << name << "\n";
        if (report.first_failure) {
            const RelationFailure& f = *report.first_failure;
            out << "first mismatch in \"" << f.relation << "\" at (" << f.row << ", " << f.col
                << "): " << f.lhs << " != " << f.rhs << "\n";
        }
        out << (report.all_hold() ? "all relations hold\n" : "relation check failed\n");
    }
    return report.all_hold() ? 0 : 1;
}

int cmd_simplicity(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    const ParsedArgs a = parse_args(args, 1, {"--json"}, {"--ceiling"});
    if (a.positional.size() != 1) throw UsageError("simplicity takes exactly one module file");
    const Representation rep = representation_from_json(load_json_file(a.positional[0]));
    const long d = rep.dim();
    const long ceiling = optional_long(a, "--ceiling", simplicity_ceiling_from_env());
    if (d > ceiling) {
        err << "dimension " << d << " exceeds the simplicity ceiling " << ceiling
            << " (raise with --ceiling)\n";
        return 2;
    }
    const long generated = generated_algebra_dimension(rep.action);
    const bool simple = generated == d * d;
    if (a.has("--json")) {
        out << dump_canonical(Json{{"dim", d},
                                   {"generated_dimension", generated},
                                   {"simple", simple}});
    } else {
        out << "generated algebra dimension " << generated << " of " << d * d << "\n";
        out << (simple ? "simple\n" : "not simple\n");
    }
    return simple ? 0 : 1;
}

int cmd_iso(const std::vector<std::string>& args, std::ostream& out) {
    const ParsedArgs a = parse_args(
        args, 1, {"--json", "--intertwiner"},
        {"--family", "--m", "--n", "--k1", "--k2", "--level-multiplier", "--p", "--p2"});
    if (!a.positional.empty()) throw UsageError("iso takes no positional arguments");
    const FamilyTag family = family_from_string(require_value(a, "--family"));
    const RootConfig cfg = config_from_args(a);
    const ParamTuple p = parse_params_text(require_value(a, "--p"), cfg);
    const ParamTuple p2 = parse_params_text(require_value(a, "--p2"), cfg);

    IsoVerdict verdict;
    if (a.has("--intertwiner")) {
        const Representation ra = build_module(family, cfg, p);
        const Representation rb = build_module(family, cfg, p2);
        verdict = decide_isomorphism(ra, rb);
    } else {
        verdict = iso_by_criteria(family, p, p2, cfg);
    }

    if (a.has("--json")) {
        out << dump_canonical(to_json(verdict));
    } else {
        if (verdict.by_criteria) {
            out << "isomorphic (shift u=" << verdict.witness_shift->first
                << ", v=" << verdict.witness_shift->second << ")\n";
        } else {
            out << "not isomorphic\n";
        }
        if (verdict.by_intertwiner) {
            out << "intertwiner solver agrees: "
                << (*verdict.by_intertwiner ? "invertible intertwiner found"
                                            : "no nonzero intertwiner")
                << "\n";
        }
    }
    return verdict.by_criteria ? 0 : 1;
}

int cmd_sweep(const std::vector<std::string>& args, std::ostream& out) {
    const ParsedArgs a =
        parse_args(args, 1, {"--json"},
                   {"--m-min", "--m-max", "--n-min", "--n-max", "--k1", "--k2", "--families",
                    "--out", "--seed", "--build-ceiling", "--ceiling"});
    if (!a.positional.empty()) throw UsageError("sweep takes no positional arguments");
    SweepSpec spec;
    spec.m_min = require_long(a, "--m-min");
    spec.m_max = require_long(a, "--m-max");
    spec.n_min = require_long(a, "--n-min");
    spec.n_max = require_long(a, "--n-max");
    if (a.values.count("--k1") || a.values.count("--k2")) {
        spec.all_coprime = false;
        spec.k1 = require_long(a, "--k1");
        spec.k2 = require_long(a, "--k2");
    }
    if (a.values.count("--families")) spec.families = parse_family_list(a.values.at("--families"));
    spec.build_ceiling = optional_long(a, "--build-ceiling", spec.build_ceiling);
    spec.simplicity_ceiling = optional_long(a, "--ceiling", spec.simplicity_ceiling);
    spec.outdir = require_value(a, "--out");
    if (a.values.count("--seed")) {
        const long seed = require_long(a, "--seed");
        if (seed < 0) throw UsageError("--seed expects a nonnegative integer");
        spec.seed = static_cast<unsigned long>(seed);
    }

    const SweepSummary s = run_sweep(spec);
    if (a.has("--json")) {
        out << dump_canonical(summary_to_json(spec, s));
    } else {
        out << std::setw(4) << "m" << std::setw(4) << "n" << std::setw(4) << "k1" << std::setw(4)
            << "k2" << std::setw(5) << "ell" << std::setw(7) << "pi" << std::setw(7) << "bound"
            << std::setw(6) << "ids" << std::setw(7) << "built" << std::setw(7) << "fails"
            << "\n";
        for (const SweepRow& r : s.rows) {
            out << std::setw(4) << r.m << std::setw(4) << r.n << std::setw(4) << r.k1
                << std::setw(4) << r.k2 << std::setw(5) << r.ell << std::setw(7) << r.pi_deg
                << std::setw(7) << r.quotient_bound << std::setw(6)
                << (r.identities ? "ok" : "FAIL") << std::setw(7) << r.built << std::setw(7)
                << r.failures << "\n";
        }
        out << "configs " << s.configs << ", skipped " << s.skipped << ", modules built "
            << s.modules_built << ", failures " << s.failures << "\n";
        for (const std::string& f : s.failure_details) out << "failure: " << f << "\n";
    }
    return s.failures == 0 ? 0 : 1;
}

} // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        if (args.empty()) {
            err << kUsage;
            return 2;
        }
        const std::string& verb = args[0];
        if (verb == "help" || verb == "--help" || verb == "-h") {
            out << kUsage;
            return 0;
        }
        if (verb == "pideg") return cmd_pideg(args, out);
        if (verb == "normal-form") return cmd_normal_form(args, out);
        if (verb == "build-module") return cmd_build_module(args, out);
        if (verb == "verify") return cmd_verify(args, out);
        if (verb == "simplicity") return cmd_simplicity(args, out, err);
        if (verb == "iso") return cmd_iso(args, out);
        if (verb == "sweep") return cmd_sweep(args, out);
        err << "unknown verb \"" << verb << "\"\n\n" << kUsage;
        return 2;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace qb2
