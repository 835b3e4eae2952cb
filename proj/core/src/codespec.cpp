#include "sgqc/codespec.hpp"

#include "sgqc/poly_text.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace sgqc {

namespace {

using nlohmann::json;

json require(const json& j, const char* key) {
    if (!j.contains(key)) throw SchemaError(std::string("missing required key \"") + key + "\"");
    return j.at(key);
}

unsigned require_uint(const json& j, const char* key) {
    json v = require(j, key);
    if (!v.is_number_unsigned() || v.get<std::uint64_t>() == 0)
        throw SchemaError(std::string("\"") + key + "\" must be a positive integer");
    return v.get<unsigned>();
}

} // namespace

CodeSpecDoc CodeSpecDoc::from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw SchemaError("spec document must be a JSON object");

    CodeSpecDoc doc;
    json field = require(j, "field");
    if (!field.is_object()) throw SchemaError("\"field\" must be an object");
    doc.p = require_uint(field, "p");
    doc.d = require_uint(field, "d");
    if (field.contains("modulus")) {
        const json& m = field.at("modulus");
        if (!m.is_array()) throw SchemaError("\"field.modulus\" must be an array");
        std::vector<unsigned> mod;
        for (const auto& c : m) {
            if (!c.is_number_unsigned()) throw SchemaError("modulus coefficients must be non-negative integers");
            mod.push_back(c.get<unsigned>());
        }
        doc.modulus = std::move(mod);
    }
    doc.theta_t = require_uint(j, "theta_t");
    std::string ring = require(j, "ring").is_string() ? j.at("ring").get<std::string>() : "";
    if (ring == "Fq")
        doc.ring = RingTag::Fq;
    else if (ring == "S")
        doc.ring = RingTag::S;
    else
        throw SchemaError("\"ring\" must be \"Fq\" or \"S\"");
    json blocks = require(j, "blocks");
    if (!blocks.is_array() || blocks.empty()) throw SchemaError("\"blocks\" must be a non-empty array");
    for (const auto& b : blocks) {
        if (!b.is_number_unsigned() || b.get<std::uint64_t>() == 0)
            throw SchemaError("block lengths must be positive integers");
        doc.blocks.push_back(b.get<unsigned>());
    }
    json gens = require(j, "generators");
    if (!gens.is_array() || gens.empty()) throw SchemaError("\"generators\" must be a non-empty array of rows");
    for (const auto& row : gens) {
        if (!row.is_array() || row.size() != doc.blocks.size())
            throw SchemaError("every generator row must list one polynomial string per block");
        std::vector<std::string> strs;
        for (const auto& s : row) {
            if (!s.is_string()) throw SchemaError("generator entries must be polynomial strings");
            strs.push_back(s.get<std::string>());
        }
        doc.generators.push_back(std::move(strs));
    }
    if (j.contains("convention")) {
        std::string c = j.at("convention").is_string() ? j.at("convention").get<std::string>() : "";
        if (c == "paper-table")
            doc.convention = SpanConvention::PaperTable;
        else if (c == "full-module")
            doc.convention = SpanConvention::FullModule;
        else
            throw SchemaError("\"convention\" must be \"paper-table\" or \"full-module\"");
    }
    if (j.contains("strict_divisors")) {
        if (!j.at("strict_divisors").is_boolean()) throw SchemaError("\"strict_divisors\" must be a boolean");
        doc.strict_divisors = j.at("strict_divisors").get<bool>();
    }
    if (j.contains("analyses")) {
        if (!j.at("analyses").is_array()) throw SchemaError("\"analyses\" must be an array of strings");
        for (const auto& a : j.at("analyses")) {
            if (!a.is_string()) throw SchemaError("\"analyses\" must be an array of strings");
            doc.analyses.push_back(a.get<std::string>());
        }
    }
    if (j.contains("budget")) {
        if (!j.at("budget").is_number_unsigned()) throw SchemaError("\"budget\" must be a non-negative integer");
        doc.budget = j.at("budget").get<std::uint64_t>();
    }

    // every polynomial string must parse in the declared ring
    SkewRing sr = doc.skew_ring();
    for (std::size_t r = 0; r < doc.generators.size(); ++r)
        for (std::size_t i = 0; i < doc.generators[r].size(); ++i) parse_poly(sr, doc.generators[r][i]);
    return doc;
}

CodeSpecDoc CodeSpecDoc::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open spec file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_json_text(buf.str());
}

std::string CodeSpecDoc::to_json_text() const {
    json j;
    j["field"]["p"] = p;
    j["field"]["d"] = d;
    if (modulus) j["field"]["modulus"] = *modulus;
    j["theta_t"] = theta_t;
    j["ring"] = ring == RingTag::Fq ? "Fq" : "S";
    j["blocks"] = blocks;
    j["generators"] = generators;
    j["convention"] = convention_name(convention);
    if (strict_divisors) j["strict_divisors"] = true;
    if (!analyses.empty()) j["analyses"] = analyses;
    if (budget) j["budget"] = *budget;
    return j.dump(2);
}

const FieldSpec& CodeSpecDoc::field() const {
    return modulus ? FieldSpec::get(p, d, *modulus) : FieldSpec::get(p, d);
}

SkewRing CodeSpecDoc::skew_ring() const { return SkewRing{&field(), theta_t, ring}; }

BlockProfile CodeSpecDoc::profile() const { return BlockProfile(skew_ring(), blocks); }

std::vector<PolyTuple> CodeSpecDoc::ledger() const {
    BlockProfile prof = profile();
    std::vector<PolyTuple> rows;
    rows.reserve(generators.size());
    for (const auto& row : generators) rows.push_back(tuple_from_strings(prof, row));
    return rows;
}

SgqcCode CodeSpecDoc::build() const { return build(convention); }

SgqcCode CodeSpecDoc::build(SpanConvention conv) const {
    BuildOptions opts;
    opts.convention = conv;
    opts.strict_divisors = strict_divisors;
    return build_rho_gen(profile(), ledger(), opts);
}

} // namespace sgqc
