#include "qb2/serialize.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace qb2 {

namespace {

Json rat_to_json(const Rat& v) {
    return Json::array({v.get_num().get_str(), v.get_den().get_str()});
}

Int int_from_string(const std::string& text) {
    if (text.empty()) throw ParseError("empty integer literal");
    size_t start = text[0] == '-' ? 1 : 0;
    if (start == text.size()) throw ParseError("bare sign is not an integer");
    for (size_t i = start; i < text.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw ParseError("bad integer literal: " + text);
    return Int(text);
}

Rat rat_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string())
        throw ParseError("rational must be a [num, den] pair of strings");
    Int num = int_from_string(j[0].get<std::string>());
    Int den = int_from_string(j[1].get<std::string>());
    if (den == 0) throw ParseError("rational with zero denominator");
    Rat v(num, den);
    v.canonicalize();
    return v;
}

long long_field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key) || !j[key].is_number_integer())
        throw ParseError(std::string("missing integer field \"") + key + "\"");
    return j[key].get<long>();
}

const Json& object_field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw ParseError(std::string("missing field \"") + key + "\"");
    return j[key];
}

// The three full-algebra generator keys plus the family-dependent fourth.
const char* fourth_matrix_key(FamilyTag family) {
    return is_borel_family(family) ? "W" : "X4";
}

} // namespace

Json to_json(const Cyc& c) {
    Json coeffs = Json::array();
    for (const Rat& v : c.coeffs()) coeffs.push_back(rat_to_json(v));
    return Json{{"level", c.level()}, {"coeffs", std::move(coeffs)}};
}

Cyc cyc_from_json(const Json& j) {
    long level = long_field(j, "level");
    if (level < 1) throw ParseError("scalar level must be positive");
    const Json& coeffs = object_field(j, "coeffs");
    if (!coeffs.is_array()) throw ParseError("scalar \"coeffs\" must be an array");
    std::vector<Rat> c;
    c.reserve(coeffs.size());
    for (const Json& e : coeffs) c.push_back(rat_from_json(e));
    if (static_cast<long>(c.size()) != euler_phi(level))
        throw ParseError("scalar coefficient count does not match phi(level)");
    return Cyc::from_coeffs(std::move(c), level);
}

Json to_json(const RootConfig& cfg) {
    return Json{{"m", cfg.m},     {"n", cfg.n},     {"k1", cfg.k1},
                {"k2", cfg.k2},   {"ell", cfg.ell}, {"level", cfg.level}};
}

RootConfig config_from_json(const Json& j) {
    long m = long_field(j, "m");
    long n = long_field(j, "n");
    long k1 = long_field(j, "k1");
    long k2 = long_field(j, "k2");
    long ell = long_field(j, "ell");
    long level = long_field(j, "level");
    if (ell < 1 || level < 1 || level % ell != 0)
        throw ParseError("config level must be a positive multiple of ell");
    RootConfig cfg = make_root_config(m, n, k1, k2, level / ell);
    if (cfg.ell != ell)
        throw ParseError("config ell is inconsistent with lcm(m, n)");
    return cfg;
}

Json to_json(const NCPoly& p) {
    Json terms = Json::array();
    for (const auto& [mono, coeff] : p.terms()) {
        terms.push_back(Json{{"exp", Json::array({mono.a, mono.b, mono.c, mono.d})},
                             {"coeff", to_json(coeff)}});
    }
    return Json{{"config", to_json(p.config())}, {"terms", std::move(terms)}};
}

NCPoly ncpoly_from_json(const Json& j) {
    RootConfig cfg = config_from_json(object_field(j, "config"));
    const Json& terms = object_field(j, "terms");
    if (!terms.is_array()) throw ParseError("\"terms\" must be an array");
    NCPoly p(cfg);
    for (const Json& t : terms) {
        const Json& exp = object_field(t, "exp");
        if (!exp.is_array() || exp.size() != 4)
            throw ParseError("term exponent must be a 4-entry array");
        PBWMonomial mono;
        long* slots[4] = {&mono.a, &mono.b, &mono.c, &mono.d};
        for (int i = 0; i < 4; ++i) {
            if (!exp[i].is_number_integer() || exp[i].get<long>() < 0)
                throw ParseError("term exponents must be nonnegative integers");
            *slots[i] = exp[i].get<long>();
        }
        Cyc coeff = cyc_from_json(object_field(t, "coeff"));
        if (coeff.level() != cfg.level)
            throw ParseError("term coefficient level does not match the config");
        p.add_term(mono, coeff);
    }
    return p;
}

Json to_json(const CycMatrix& m) {
    Json rows = Json::array();
    for (long i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (long j = 0; j < m.cols(); ++j) row.push_back(to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

CycMatrix matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw ParseError("matrix must be a non-empty array of rows");
    const long rows = static_cast<long>(j.size());
    if (!j[0].is_array() || j[0].empty())
        throw ParseError("matrix rows must be non-empty arrays");
    const long cols = static_cast<long>(j[0].size());
    Cyc first = cyc_from_json(j[0][0]);
    CycMatrix m(rows, cols, first.level());
    for (long i = 0; i < rows; ++i) {
        if (!j[i].is_array() || static_cast<long>(j[i].size()) != cols)
            throw ParseError("matrix rows have inconsistent lengths");
        for (long k = 0; k < cols; ++k) {
            Cyc entry = cyc_from_json(j[i][k]);
            if (entry.level() != m.level())
                throw ParseError("matrix entries live at mixed levels");
            m.at(i, k) = std::move(entry);
        }
    }
    return m;
}

Json to_json(const Representation& rep) {
    Json params = Json::array();
    for (const Cyc& p : rep.params) params.push_back(to_json(p));
    Json matrices = Json::object();
    matrices["X1"] = to_json(rep.action[0]);
    matrices["X2"] = to_json(rep.action[1]);
    matrices["X3"] = to_json(rep.action[2]);
    matrices[fourth_matrix_key(rep.family)] = to_json(rep.action[3]);
    return Json{{"family", to_string(rep.family)},
                {"config", to_json(rep.config)},
                {"params", std::move(params)},
                {"dim", rep.dim()},
                {"grid", Json{{"rows", rep.dims.rows}, {"cols", rep.dims.cols}}},
                {"matrices", std::move(matrices)}};
}

Representation representation_from_json(const Json& j) {
    const Json& fam = object_field(j, "family");
    if (!fam.is_string()) throw ParseError("\"family\" must be a string");
    Representation rep;
    rep.family = family_from_string(fam.get<std::string>());
    rep.config = config_from_json(object_field(j, "config"));

    const Json& params = object_field(j, "params");
    if (!params.is_array()) throw ParseError("\"params\" must be an array");
    for (const Json& p : params) {
        Cyc v = cyc_from_json(p);
        if (v.level() != rep.config.level)
            throw ParseError("parameter level does not match the config");
        rep.params.push_back(std::move(v));
    }
    if (static_cast<long>(rep.params.size()) != param_count(rep.family))
        throw ParseError("wrong parameter count for family " + to_string(rep.family));

    const Json& grid = object_field(j, "grid");
    rep.dims.rows = long_field(grid, "rows");
    rep.dims.cols = long_field(grid, "cols");
    long dim = long_field(j, "dim");
    if (rep.dims.rows < 1 || rep.dims.cols < 1 || dim != rep.dims.dim())
        throw ParseError("\"dim\" does not match the grid");

    const Json& matrices = object_field(j, "matrices");
    const char* keys[4] = {"X1", "X2", "X3", fourth_matrix_key(rep.family)};
    for (const char* key : keys) {
        CycMatrix m = matrix_from_json(object_field(matrices, key));
        if (m.rows() != dim || m.cols() != dim)
            throw ParseError(std::string("matrix \"") + key + "\" is not dim x dim");
        if (m.level() != rep.config.level)
            throw ParseError(std::string("matrix \"") + key + "\" level does not match the config");
        rep.action.push_back(std::move(m));
    }
    return rep;
}

Json to_json(const PiDegreeReport& report) {
    Json matrix = Json::array();
    for (long i = 0; i < report.matrix.rows(); ++i) {
        Json row = Json::array();
        for (long j = 0; j < report.matrix.cols(); ++j)
            row.push_back(report.matrix.at(i, j).get_str());
        matrix.push_back(std::move(row));
    }
    Json inv = Json::array();
    for (const Int& d : report.invariant_factors) inv.push_back(d.get_str());
    return Json{{"config", to_json(report.config)},
                {"matrix", std::move(matrix)},
                {"invariant_factors", std::move(inv)},
                {"pi_deg_snf", report.pi_deg_snf},
                {"pi_deg_closed", report.pi_deg_closed},
                {"case", to_string(report.case_label)}};
}

Json to_json(const QuotientBoundReport& report) {
    Json matrix = Json::array();
    for (long i = 0; i < report.matrix.rows(); ++i) {
        Json row = Json::array();
        for (long j = 0; j < report.matrix.cols(); ++j)
            row.push_back(report.matrix.at(i, j).get_str());
        matrix.push_back(std::move(row));
    }
    Json inv = Json::array();
    for (const Int& d : report.invariant_factors) inv.push_back(d.get_str());
    return Json{{"config", to_json(report.config)},
                {"matrix", std::move(matrix)},
                {"invariant_factors", std::move(inv)},
                {"bound_snf", report.bound_snf},
                {"bound_closed", report.bound_closed}};
}

Json to_json(const RelationReport& report) {
    Json checks = Json::array();
    for (const auto& [name, ok] : report.checks)
        checks.push_back(Json{{"relation", name}, {"holds", ok}});
    Json failure = nullptr;
    if (report.first_failure) {
        const RelationFailure& f = *report.first_failure;
        failure = Json{{"relation", f.relation},
                       {"row", f.row},
                       {"col", f.col},
                       {"lhs", f.lhs},
                       {"rhs", f.rhs}};
    }
    return Json{{"pass", report.all_hold()},
                {"checks", std::move(checks)},
                {"first_failure", std::move(failure)}};
}

Json to_json(const IsoVerdict& verdict) {
    Json witness = nullptr;
    if (verdict.witness_shift)
        witness = Json::array({verdict.witness_shift->first, verdict.witness_shift->second});
    Json by_solver = nullptr;
    if (verdict.by_intertwiner) by_solver = *verdict.by_intertwiner;
    Json t = nullptr;
    if (verdict.intertwiner) t = to_json(*verdict.intertwiner);
    return Json{{"by_criteria", verdict.by_criteria},
                {"witness_shift", std::move(witness)},
                {"by_intertwiner", std::move(by_solver)},
                {"intertwiner", std::move(t)}};
}

Json to_json(const CrossValidationReport& report) {
    return Json{{"pairs", report.pairs},
                {"positives", report.positives},
                {"negatives", report.negatives},
                {"positives_confirmed", report.positives_confirmed},
                {"mismatches", report.mismatches},
                {"mismatch_details", report.mismatch_details}};
}

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

Json load_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const std::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void save_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot open " + path + " for writing");
    out << dump_canonical(j);
    if (!out) throw ParseError("failed writing " + path);
}

namespace {

std::string trimmed(const std::string& s) {
    size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

long parse_exponent(const std::string& text) {
    if (text.empty()) throw ParseError("empty exponent");
    size_t pos = 0;
    long value = 0;
    try {
        value = std::stol(text, &pos);
    } catch (const std::exception&) {
        throw ParseError("bad exponent: " + text);
    }
    if (pos != text.size()) throw ParseError("bad exponent: " + text);
    return value;
}

Rat parse_rational(const std::string& text) {
    size_t slash = text.find('/');
    Int num = int_from_string(slash == std::string::npos ? text : text.substr(0, slash));
    Int den = 1;
    if (slash != std::string::npos) {
        den = int_from_string(text.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator in " + text);
    }
    Rat v(num, den);
    v.canonicalize();
    return v;
}

Cyc parse_factor(const std::string& raw, const RootConfig& cfg) {
    std::string f = trimmed(raw);
    if (f.empty()) throw ParseError("empty factor in scalar expression");
    size_t letters = 0;
    while (letters < f.size() && std::isalpha(static_cast<unsigned char>(f[letters]))) ++letters;
    if (letters == 0) return Cyc::from_rational(parse_rational(f), cfg.level);

    std::string name = f.substr(0, letters);
    long e = 1;
    if (letters < f.size()) {
        if (f[letters] != '^') throw ParseError("bad factor: " + f);
        e = parse_exponent(f.substr(letters + 1));
    }
    if (name == "q") return cfg.q_pow(e);
    if (name == "zeta") return Cyc::zeta_pow(cfg.level, e);
    if (name == "r") return cfg.r_pow(e);
    if (name == "s") return cfg.s_pow(e);
    if (name == "rs") return cfg.rs_pow(e);
    throw ParseError("unknown root name \"" + name + "\" (expected q, zeta, r, s, or rs)");
}

} // namespace

Cyc parse_scalar(const std::string& text, const RootConfig& cfg) {
    Cyc acc = cfg.one();
    size_t begin = 0;
    bool any = false;
    while (begin <= text.size()) {
        size_t star = text.find('*', begin);
        std::string piece = star == std::string::npos ? text.substr(begin)
                                                      : text.substr(begin, star - begin);
        acc *= parse_factor(piece, cfg);
        any = true;
        if (star == std::string::npos) break;
        begin = star + 1;
    }
    if (!any) throw ParseError("empty scalar expression");
    return acc;
}

ParamTuple params_from_json(const Json& j, const RootConfig& cfg) {
    if (!j.is_array()) throw ParseError("parameters must be a JSON array");
    ParamTuple out;
    for (const Json& e : j) {
        if (e.is_object()) {
            Cyc v = cyc_from_json(e);
            if (v.level() != cfg.level) {
                if (cfg.level % v.level() != 0)
                    throw ParseError("parameter level does not divide the config level");
                v = v.raised_to_level(cfg.level);
            }
            out.push_back(std::move(v));
        } else if (e.is_string()) {
            out.push_back(parse_scalar(e.get<std::string>(), cfg));
        } else if (e.is_number_integer()) {
            out.push_back(Cyc::from_rational(Rat(e.get<long>()), cfg.level));
        } else {
            throw ParseError("parameter entries must be scalar objects, strings, or integers");
        }
    }
    return out;
}

} // namespace qb2
