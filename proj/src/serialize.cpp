#include "stci/serialize.hpp"

#include <json.hpp>

#include <stdexcept>
#include <utility>

namespace stci {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument("generator set: " + what); }

/// Every object is closed: a field outside the allowed list is an error.
void check_keys(const Json& obj, std::initializer_list<const char*> allowed, const char* where) {
    if (!obj.is_object()) bad(std::string(where) + " must be an object");
    for (const auto& item : obj.items()) {
        bool known = false;
        for (const char* k : allowed) known = known || item.key() == k;
        if (!known) bad("unknown field \"" + item.key() + "\" in " + where);
    }
    for (const char* k : allowed)
        if (!obj.contains(k)) bad(std::string("missing field \"") + k + "\" in " + where);
}

std::uint32_t get_u32(const Json& j, const char* where) {
    if (!j.is_number_unsigned() || j.get<std::uint64_t>() > 0xffffffffull)
        bad(std::string(where) + " must be a small non-negative number");
    return j.get<std::uint32_t>();
}

BigNat get_bignat(const Json& j, const char* where) {
    if (!j.is_string()) bad(std::string(where) + " must be a decimal string");
    try {
        return from_decimal(j.get<std::string>());
    } catch (const std::exception&) {
        bad(std::string(where) + " is not a decimal number");
    }
}

Json monomial_to_json(const Monomial& m) {
    Json out = Json::array();
    for (const auto& [v, e] : m) out.push_back(Json::array({v, to_decimal(e)}));
    return out;
}

Monomial monomial_from_json(const Json& j, std::uint32_t arity, const char* where) {
    if (!j.is_array()) bad(std::string(where) + " must be an array of [variable, exponent] pairs");
    Monomial m;
    std::uint32_t prev = 0;
    for (const auto& pair : j) {
        if (!pair.is_array() || pair.size() != 2) bad(std::string(where) + " has a malformed pair");
        const std::uint32_t v = get_u32(pair[0], where);
        const BigNat e = get_bignat(pair[1], where);
        if (v < 1 || v > arity) bad(std::string(where) + " uses a variable outside the ring");
        if (v <= prev) bad(std::string(where) + " variables must strictly increase");
        if (sgn(e) <= 0) bad(std::string(where) + " exponents must be positive");
        prev = v;
        m.emplace_back(v, e);
    }
    return m;
}

Json poly_to_json(const Polynomial& f) {
    Json out = Json::array();
    for (const auto& t : f.terms()) out.push_back(Json::array({t.coeff, monomial_to_json(t.mono)}));
    return out;
}

Polynomial poly_from_json(const Json& j, std::uint32_t p, std::uint32_t arity, const char* where) {
    if (!j.is_array()) bad(std::string(where) + " must be a term list");
    Polynomial f = Polynomial::zero(p, arity);
    for (const auto& term : j) {
        if (!term.is_array() || term.size() != 2) bad(std::string(where) + " has a malformed term");
        const std::uint32_t c = get_u32(term[0], where);
        if (c == 0 || c >= p) bad(std::string(where) + " has a coefficient outside 1..p-1");
        f += Polynomial::monomial(p, arity, monomial_from_json(term[1], arity, where), c);
    }
    return f;
}

Json polyvec_to_json(const std::vector<Polynomial>& fs) {
    Json out = Json::array();
    for (const auto& f : fs) out.push_back(poly_to_json(f));
    return out;
}

std::vector<Polynomial> polyvec_from_json(const Json& j, std::uint32_t p, std::uint32_t arity,
                                          const char* where) {
    if (!j.is_array()) bad(std::string(where) + " must be an array");
    std::vector<Polynomial> out;
    out.reserve(j.size());
    for (const auto& entry : j) out.push_back(poly_from_json(entry, p, arity, where));
    return out;
}

Json matrix_to_json(const PolyMatrix& m) {
    Json entries = Json::array();
    for (std::uint32_t i = 1; i <= m.rows(); ++i)
        for (std::uint32_t j = 1; j <= m.cols(); ++j) entries.push_back(poly_to_json(m.at(i, j)));
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

PolyMatrix matrix_from_json(const Json& j, std::uint32_t p, std::uint32_t arity, std::uint32_t rows,
                            std::uint32_t cols, const char* where) {
    check_keys(j, {"rows", "cols", "entries"}, where);
    if (get_u32(j["rows"], where) != rows || get_u32(j["cols"], where) != cols)
        bad(std::string(where) + " has unexpected dimensions");
    const Json& entries = j["entries"];
    if (!entries.is_array() || entries.size() != std::size_t(rows) * cols)
        bad(std::string(where) + " entry count does not match the dimensions");
    PolyMatrix m(p, arity, rows, cols);
    std::size_t k = 0;
    for (std::uint32_t i = 1; i <= rows; ++i)
        for (std::uint32_t c = 1; c <= cols; ++c) m.at(i, c) = poly_from_json(entries[k++], p, arity, where);
    return m;
}

Json schedule_to_obj(const Schedule& s) {
    Json r = Json::array();
    for (const auto& e : s.r) r.push_back(to_decimal(e));
    Json gamma = Json::array();
    for (const auto& row : s.gamma) {
        Json jrow = Json::array();
        for (const auto& e : row) jrow.push_back(to_decimal(e));
        gamma.push_back(std::move(jrow));
    }
    return Json{{"p", s.p},
                {"N", s.N},
                {"r", std::move(r)},
                {"gamma", std::move(gamma)},
                {"lambda5", to_decimal(s.lambda5)},
                {"eps5", to_decimal(s.eps5)}};
}

Schedule schedule_from_obj(const Json& j) {
    check_keys(j, {"p", "N", "r", "gamma", "lambda5", "eps5"}, "schedule");
    CustomScheduleInput in;
    in.p = get_u32(j["p"], "schedule.p");
    in.N = get_u32(j["N"], "schedule.N");
    if (!j["r"].is_array()) bad("schedule.r must be an array");
    for (const auto& e : j["r"]) in.r.push_back(get_bignat(e, "schedule.r"));
    if (!j["gamma"].is_array()) bad("schedule.gamma must be an array");
    for (const auto& row : j["gamma"]) {
        if (!row.is_array()) bad("schedule.gamma rows must be arrays");
        std::vector<BigNat> out;
        for (const auto& e : row) out.push_back(get_bignat(e, "schedule.gamma"));
        in.gamma.push_back(std::move(out));
    }
    in.lambda5 = get_bignat(j["lambda5"], "schedule.lambda5");
    in.eps5 = get_bignat(j["eps5"], "schedule.eps5");
    try {
        return make_custom(in);
    } catch (const std::exception& e) {
        bad(std::string("embedded schedule rejected: ") + e.what());
    }
}

Json artifacts_to_obj(const LiftArtifacts& art) {
    return Json{{"level", art.level},
                {"sign", art.sign},
                {"row1_rewrite", polyvec_to_json(art.row1_rewrite)},
                {"row2_rewrite", polyvec_to_json(art.row2_rewrite)},
                {"b2_prime", poly_to_json(art.b2_prime)},
                {"tilde", polyvec_to_json(art.tilde)},
                {"cmat", matrix_to_json(art.cmat)},
                {"cofactors", polyvec_to_json(art.cofactors)},
                {"resultant_s", poly_to_json(art.resultant_s)},
                {"remainder_f", poly_to_json(art.remainder_f)},
                {"pure_term", monomial_to_json(art.pure_term)},
                {"tail_term", monomial_to_json(art.tail_term)}};
}

LiftArtifacts artifacts_from_obj(const Json& j, std::uint32_t p, std::uint32_t n) {
    check_keys(j,
               {"level", "sign", "row1_rewrite", "row2_rewrite", "b2_prime", "tilde", "cmat", "cofactors",
                "resultant_s", "remainder_f", "pure_term", "tail_term"},
               "artifacts");
    LiftArtifacts art;
    art.level = get_u32(j["level"], "artifacts.level");
    if (art.level != n) bad("artifacts.level does not match the file level");
    if (!j["sign"].is_number_integer()) bad("artifacts.sign must be an integer");
    art.sign = j["sign"].get<int>();
    if (art.sign != 1 && art.sign != -1) bad("artifacts.sign must be +1 or -1");
    art.row1_rewrite = polyvec_from_json(j["row1_rewrite"], p, n, "artifacts.row1_rewrite");
    art.row2_rewrite = polyvec_from_json(j["row2_rewrite"], p, n, "artifacts.row2_rewrite");
    if (art.row1_rewrite.size() != n - 5 || art.row2_rewrite.size() != n - 4)
        bad("artifacts row rewrites have unexpected lengths");
    art.b2_prime = poly_from_json(j["b2_prime"], p, n, "artifacts.b2_prime");
    art.tilde = polyvec_from_json(j["tilde"], p, 2 * n - 3, "artifacts.tilde");
    if (art.tilde.size() != n - 3) bad("artifacts.tilde has unexpected length");
    art.cmat = matrix_from_json(j["cmat"], p, n, n - 4, n - 3, "artifacts.cmat");
    art.cofactors = polyvec_from_json(j["cofactors"], p, n, "artifacts.cofactors");
    if (art.cofactors.size() != n - 3) bad("artifacts.cofactors has unexpected length");
    art.resultant_s = poly_from_json(j["resultant_s"], p, n, "artifacts.resultant_s");
    art.remainder_f = poly_from_json(j["remainder_f"], p, n, "artifacts.remainder_f");
    art.pure_term = monomial_from_json(j["pure_term"], n, "artifacts.pure_term");
    art.tail_term = monomial_from_json(j["tail_term"], n, "artifacts.tail_term");
    return art;
}

}  // namespace

std::string generator_set_to_json(const GeneratorSetFile& file) {
    const StructuredGenerators& g = file.gens;
    Json out{{"format", kGeneratorSetFormat},
             {"version", kGeneratorSetVersion},
             {"p", g.p()},
             {"N", g.schedule.N},
             {"level", g.level},
             {"mode", to_string(g.mode)},
             {"schedule", schedule_to_obj(g.schedule)},
             {"e1", to_decimal(g.e1)},
             {"e2", to_decimal(g.e2)},
             {"generators", polyvec_to_json(g.gens)},
             {"table", matrix_to_json(g.table)}};
    if (file.has_artifacts) out["artifacts"] = artifacts_to_obj(file.artifacts);
    return out.dump(2) + "\n";
}

GeneratorSetFile generator_set_from_json(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const std::exception& e) {
        bad(std::string("not valid JSON: ") + e.what());
    }
    if (!j.is_object()) bad("top level must be an object");
    const bool with_art = j.contains("artifacts");
    if (with_art)
        check_keys(j,
                   {"format", "version", "p", "N", "level", "mode", "schedule", "e1", "e2", "generators",
                    "table", "artifacts"},
                   "generator set");
    else
        check_keys(
            j, {"format", "version", "p", "N", "level", "mode", "schedule", "e1", "e2", "generators", "table"},
            "generator set");
    if (!j["format"].is_string() || j["format"].get<std::string>() != kGeneratorSetFormat)
        bad("unrecognized format tag");
    if (get_u32(j["version"], "version") != kGeneratorSetVersion) bad("unsupported version");

    GeneratorSetFile file;
    StructuredGenerators& g = file.gens;
    g.schedule = schedule_from_obj(j["schedule"]);
    const std::uint32_t p = get_u32(j["p"], "p");
    const std::uint32_t N = get_u32(j["N"], "N");
    if (p != g.schedule.p || N != g.schedule.N) bad("p/N disagree with the embedded schedule");
    g.level = get_u32(j["level"], "level");
    if (g.level < 5 || g.level > N) bad("level outside 5..N");
    if (!j["mode"].is_string()) bad("mode must be a string");
    try {
        g.mode = x2_mode_from_string(j["mode"].get<std::string>());
    } catch (const std::exception&) {
        bad("mode must be \"carried\" or \"literal\"");
    }
    g.e1 = get_bignat(j["e1"], "e1");
    g.e2 = get_bignat(j["e2"], "e2");
    if (sgn(g.e1) <= 0 || sgn(g.e2) <= 0) bad("e1/e2 must be positive");
    const std::uint32_t n = g.level;
    g.gens = polyvec_from_json(j["generators"], p, n, "generators");
    if (g.gens.size() != std::size_t(n) - 2) bad("generator count must be level - 2");
    g.table = matrix_from_json(j["table"], p, n, n - 2, n - 2, "table");
    if (with_art) {
        file.has_artifacts = true;
        file.artifacts = artifacts_from_obj(j["artifacts"], p, n);
    }
    return file;
}

std::string schedule_to_json(const Schedule& s) { return schedule_to_obj(s).dump(2) + "\n"; }

Schedule schedule_from_json(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const std::exception& e) {
        bad(std::string("not valid JSON: ") + e.what());
    }
    return schedule_from_obj(j);
}

}  // namespace stci
