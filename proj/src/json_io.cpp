#include "declocus/json_io.hpp"

#include <set>

namespace declocus {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw Error(ErrorCode::ParseError, where + ": " + what);
}

Json parse_document(std::string_view text) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        size_t line = 1, col = 1;
        for (size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        fail("line " + std::to_string(line) + ", column " + std::to_string(col), "malformed JSON");
    }
}

size_t as_size(const Json& j, const std::string& where) {
    if (!j.is_number_unsigned()) fail(where, "expected a non-negative integer");
    return j.get<size_t>();
}

Rational as_rational(const Json& j, const std::string& where) {
    if (!j.is_string()) fail(where, "expected a rational string");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const Error& e) {
        fail(where, e.what());
    }
}

Json vec_json(const Vec<Rational>& v) {
    Json out = Json::array();
    for (auto& x : v) out.push_back(x.str());
    return out;
}

}  // namespace

Tensor<Rational> parse_tensor(std::string_view text) {
    Json doc = parse_document(text);
    if (!doc.is_object()) fail("document", "expected an object");
    if (!doc.contains("shape")) fail("document", "missing field 'shape'");
    if (!doc.contains("entries")) fail("document", "missing field 'entries'");
    if (doc.contains("name") && !doc["name"].is_string()) fail("name", "expected a string");
    const Json& js = doc["shape"];
    if (!js.is_array() || js.size() < 2) fail("shape", "expected an array of at least two dimensions");
    Shape sh;
    for (size_t i = 0; i < js.size(); ++i) {
        size_t d = as_size(js[i], "shape[" + std::to_string(i) + "]");
        if (d == 0) fail("shape[" + std::to_string(i) + "]", "dimensions must be positive");
        sh.push_back(d);
    }
    Tensor<Rational> t(sh);
    const Json& je = doc["entries"];
    if (!je.is_array()) fail("entries", "expected an array");
    std::set<Index> seen;
    for (size_t n = 0; n < je.size(); ++n) {
        std::string where = "entries[" + std::to_string(n) + "]";
        const Json& e = je[n];
        if (!e.is_object() || !e.contains("idx") || !e.contains("value")) fail(where, "expected {\"idx\": [..], \"value\": \"p/q\"}");
        const Json& ji = e["idx"];
        if (!ji.is_array() || ji.size() != sh.size()) fail(where + ".idx", "expected " + std::to_string(sh.size()) + " indices");
        Index idx;
        for (size_t a = 0; a < sh.size(); ++a) {
            size_t k = as_size(ji[a], where + ".idx[" + std::to_string(a) + "]");
            if (k >= sh[a]) throw Error(ErrorCode::IndexOutOfRange, where + ": index " + std::to_string(k) + " on axis " + std::to_string(a) + " exceeds dimension " + std::to_string(sh[a]));
            idx.push_back(k);
        }
        if (!seen.insert(idx).second) throw Error(ErrorCode::DuplicateEntry, where + ": index repeated");
        t[idx] = as_rational(e["value"], where + ".value");
    }
    return t;
}

std::string serialize_tensor(const Tensor<Rational>& t, const std::optional<std::string>& name) {
    Json doc;
    doc["shape"] = t.shape();
    Json entries = Json::array();
    for (size_t off = 0; off < t.size(); ++off) {
        const Rational& x = t.entries()[off];
        if (x.is_zero()) continue;
        entries.push_back({{"idx", t.index_of(off)}, {"value", x.str()}});
    }
    doc["entries"] = entries;
    if (name) doc["name"] = *name;
    return doc.dump();
}

RankOne<Rational> parse_rank_one(std::string_view text) {
    Json doc = parse_document(text);
    if (!doc.is_object() || !doc.contains("factors")) fail("document", "missing field 'factors'");
    const Json& jf = doc["factors"];
    if (!jf.is_array() || jf.size() < 2) fail("factors", "expected an array of at least two vectors");
    RankOne<Rational> p;
    for (size_t a = 0; a < jf.size(); ++a) {
        std::string where = "factors[" + std::to_string(a) + "]";
        if (!jf[a].is_array() || jf[a].empty()) fail(where, "expected a non-empty array");
        Vec<Rational> v;
        for (size_t i = 0; i < jf[a].size(); ++i) v.push_back(as_rational(jf[a][i], where + "[" + std::to_string(i) + "]"));
        p.factors.push_back(v);
    }
    return p;
}

Json rank_one_json(const RankOne<Rational>& p) {
    Json f = Json::array();
    for (auto& v : p.factors) f.push_back(vec_json(v));
    return f;
}

Json report_json(const OrbitSummary& s) {
    Json out;
    switch (s.orbit.kind) {
        case OrbitKind::Zero: out["kind"] = "zero"; break;
        case OrbitKind::MatrixRank: out["kind"] = "matrix"; break;
        case OrbitKind::Orbit: out["kind"] = "orbit"; break;
    }
    if (s.table_row) out["orbit"] = s.table_row;
    else out["orbit"] = nullptr;
    out["rank"] = s.rank;
    out["border_rank"] = s.border_rank;
    out["concise_shape"] = s.concise_shape;
    return out;
}

Json verdict_json(const LocusVerdict& v) {
    Json out;
    out["status"] = v.str();
    if (v.witness) {
        if (v.witness->value) out["lambda"] = v.witness->value->str();
        else out["lambda_minimal_poly"] = vec_json(v.witness->minimal_poly.coeffs());
    }
    return out;
}

Json decomposition_json(const Decomposition& d) {
    Json terms = Json::array();
    for (auto& t : d.terms) terms.push_back({{"coefficient", t.coefficient.str()}, {"factors", rank_one_json(t.rank_one)}});
    return {{"terms", terms}};
}

Json transcript_json(const GameState& s, std::uint64_t seed) {
    Json moves = Json::array();
    for (auto& m : s.moves) moves.push_back({{"factors", rank_one_json(m.rank_one)}, {"lambda", m.lambda.str()}});
    return {{"initial_rank", s.initial_rank}, {"seed", seed}, {"moves", moves}, {"terminal", s.over()}};
}

Json error_json(const std::string& code, const std::string& message) {
    return {{"code", code}, {"message", message}};
}

}  // namespace declocus
