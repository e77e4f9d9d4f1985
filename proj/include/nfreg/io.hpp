// Corpus schema, loading with hard validation, and machine-readable report
// emission.  Rationals travel as exact strings ("p/q"); decimals appear
// only in hints and report values (25 significant digits, canonical key
// order, so emitted documents re-serialize byte-identically).
#pragma once

#include "nfreg/number_field.hpp"
#include "nfreg/relative.hpp"
#include "nfreg/suites.hpp"
#include "nfreg/towers.hpp"
#include "nfreg/units.hpp"
#include "nfreg/verify.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace nfreg {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

class CorpusError : public std::runtime_error {
  public:
    explicit CorpusError(const std::vector<std::string>& violations)
        : std::runtime_error(join(violations)), violations_(violations) {}
    const std::vector<std::string>& violations() const { return violations_; }

  private:
    static std::string join(const std::vector<std::string>& v) {
        std::string out = "corpus validation failed:";
        for (const auto& s : v) out += "\n  - " + s;
        return out;
    }
    std::vector<std::string> violations_;
};

// "p" or "p/q" with exact integer parts.
inline Rat parse_rational(const std::string& s) {
    auto bad = [&] { throw std::invalid_argument("malformed rational '" + s + "'"); };
    if (s.empty()) bad();
    size_t slash = s.find('/');
    auto check_int = [&](const std::string& t) {
        if (t.empty()) bad();
        size_t start = (t[0] == '-') ? 1 : 0;
        if (start == t.size()) bad();
        for (size_t i = start; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) bad();
    };
    if (slash == std::string::npos) {
        check_int(s);
        return Rat(Int(s));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    check_int(num);
    check_int(den);
    Int d(den);
    if (d == 0) bad();
    return Rat(Int(num)) / Rat(d);
}

inline std::string rational_string(const Rat& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

// Canonical decimal formatting of working-precision reals: 25 significant
// digits, enough to reload to the same 25-digit form.
inline std::string format_real(const Real& x) { return x.str(25); }

struct SubfieldRecord {
    std::string label;
    IntPolynomial poly;
    Int disc;
    int r1 = 0, r2 = 0;
};

struct ExtensionRecord {
    std::string base_label;
    RatMatrix embedding;                        // d_l x d_k
    std::vector<std::vector<Rat>> unit_coords;  // power-basis coords in l
};

struct FieldRecord {
    std::string label;
    IntPolynomial poly;
    Int disc;
    int r1 = 0, r2 = 0;
    RatMatrix integral_basis;
    Int torsion_order = 2;
    std::vector<std::vector<Rat>> unit_coords;
    std::optional<std::string> regulator_hint;
    std::vector<SubfieldRecord> subfields;
    std::vector<std::pair<std::string, std::string>> lattice_edges;
    std::vector<ExtensionRecord> extensions;
};

struct LoadedExtension {
    std::string base_label;
    std::shared_ptr<RelativeExtension> extension;
    std::vector<FieldElement> relative_units;
};

struct LoadedField {
    FieldRecord record;
    NumberFieldPtr field;
    std::shared_ptr<UnitSystem> units;
    std::shared_ptr<SubfieldLattice> lattice;
    std::vector<LoadedExtension> extensions;
};

struct Corpus {
    std::vector<LoadedField> fields;

    const LoadedField& by_label(const std::string& label) const {
        for (const auto& f : fields)
            if (f.field->label == label) return f;
        throw std::out_of_range("no corpus field labelled '" + label + "'");
    }
    bool has_label(const std::string& label) const {
        for (const auto& f : fields)
            if (f.field->label == label) return true;
        return false;
    }
};

namespace detail {

inline IntPolynomial parse_poly(const json& j, const std::string& ctx) {
    if (!j.is_array() || j.size() < 2)
        throw std::invalid_argument(ctx + ": poly must be an array of >= 2 integers");
    std::vector<Int> c;
    for (const auto& v : j) {
        if (!v.is_number_integer())
            throw std::invalid_argument(ctx + ": poly coefficients must be integers");
        c.emplace_back(v.get<long long>());
    }
    return IntPolynomial(std::move(c));
}

inline RatMatrix parse_rat_matrix(const json& j, const std::string& ctx) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument(ctx + ": expected a nonempty array");
    RatMatrix m;
    for (const auto& row : j) {
        if (!row.is_array() || row.empty())
            throw std::invalid_argument(ctx + ": expected array rows");
        std::vector<Rat> r;
        for (const auto& v : row) {
            if (!v.is_string()) throw std::invalid_argument(ctx + ": rationals must be strings");
            r.push_back(parse_rational(v.get<std::string>()));
        }
        m.push_back(std::move(r));
    }
    return m;
}

}  // namespace detail

inline FieldRecord parse_field_record(const json& j) {
    FieldRecord rec;
    for (const char* key : {"label", "poly", "discriminant", "signature", "integral_basis",
                            "torsion_order", "fundamental_units", "subfields", "lattice_edges"})
        if (!j.contains(key)) throw std::invalid_argument(std::string("missing field '") + key + "'");
    rec.label = j.at("label").get<std::string>();
    if (rec.label.empty()) throw std::invalid_argument("empty label");
    const std::string ctx = rec.label;
    rec.poly = detail::parse_poly(j.at("poly"), ctx);
    rec.disc = Int(j.at("discriminant").get<long long>());
    const auto& sig = j.at("signature");
    if (!sig.is_array() || sig.size() != 2)
        throw std::invalid_argument(ctx + ": signature must be [r1, r2]");
    rec.r1 = sig[0].get<int>();
    rec.r2 = sig[1].get<int>();
    rec.integral_basis = detail::parse_rat_matrix(j.at("integral_basis"), ctx + ".integral_basis");
    rec.torsion_order = Int(j.at("torsion_order").get<long long>());
    if (!j.at("fundamental_units").is_array())
        throw std::invalid_argument(ctx + ": fundamental_units must be an array");
    for (const auto& u : j.at("fundamental_units")) {
        std::vector<Rat> coords;
        for (const auto& v : u) coords.push_back(parse_rational(v.get<std::string>()));
        rec.unit_coords.push_back(std::move(coords));
    }
    if (j.contains("regulator_hint")) rec.regulator_hint = j.at("regulator_hint").get<std::string>();
    for (const auto& s : j.at("subfields")) {
        SubfieldRecord sr;
        sr.label = s.at("label").get<std::string>();
        sr.poly = detail::parse_poly(s.at("poly"), ctx + ".subfields." + sr.label);
        sr.disc = Int(s.at("discriminant").get<long long>());
        sr.r1 = s.at("signature")[0].get<int>();
        sr.r2 = s.at("signature")[1].get<int>();
        rec.subfields.push_back(std::move(sr));
    }
    for (const auto& e : j.at("lattice_edges")) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument(ctx + ": lattice edges must be [from, to] label pairs");
        rec.lattice_edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    if (j.contains("extensions")) {
        for (const auto& e : j.at("extensions")) {
            ExtensionRecord er;
            er.base_label = e.at("base_label").get<std::string>();
            er.embedding = detail::parse_rat_matrix(e.at("embedding_matrix"), ctx + ".embedding");
            for (const auto& u : e.at("relative_units")) {
                std::vector<Rat> coords;
                for (const auto& v : u) coords.push_back(parse_rational(v.get<std::string>()));
                er.unit_coords.push_back(std::move(coords));
            }
            rec.extensions.push_back(std::move(er));
        }
    }
    return rec;
}

// NumberField + UnitSystem + SubfieldLattice from one validated record.
inline LoadedField load_field(FieldRecord rec) {
    LoadedField out;
    out.field = NumberField::create(rec.label, rec.poly, rec.disc, rec.r1, rec.r2,
                                    rec.integral_basis);
    std::vector<FieldElement> units;
    for (const auto& coords : rec.unit_coords) {
        if (static_cast<int>(coords.size()) != out.field->degree())
            throw FieldDataError(rec.label + ": unit coordinate length mismatch");
        units.emplace_back(out.field, coords);
    }
    out.units = std::make_shared<UnitSystem>(out.field, std::move(units), rec.torsion_order);

    std::vector<SubfieldNode> nodes;
    if (out.field->degree() == 1) {
        // the rationals: a one-node lattice
        nodes.push_back({rec.label, 1, 1, 0, Int(1)});
    } else {
        nodes.push_back({"Q", 1, 1, 0, Int(1)});
        for (const auto& s : rec.subfields) {
            if (s.label == "Q" || s.label == rec.label)
                throw FieldDataError(rec.label +
                                     ": subfield label collides with Q or the field itself");
            nodes.push_back({s.label, s.poly.degree(), s.r1, s.r2, abs(s.disc)});
        }
        nodes.push_back({rec.label, out.field->degree(), out.field->r1, out.field->r2,
                         out.field->abs_disc()});
    }
    out.lattice = std::make_shared<SubfieldLattice>(std::move(nodes), rec.lattice_edges);
    out.record = std::move(rec);
    return out;
}

// Loads every *.json under `path` (or the single file), validates all
// records, resolves cross-record extensions.  Reports every violation.
inline Corpus load_corpus(const std::filesystem::path& path) {
    namespace fs = std::filesystem;
    std::vector<fs::path> files;
    if (fs::is_directory(path)) {
        for (const auto& entry : fs::directory_iterator(path))
            if (entry.path().extension() == ".json") files.push_back(entry.path());
        std::sort(files.begin(), files.end());
    } else if (fs::is_regular_file(path)) {
        files.push_back(path);
    } else {
        throw CorpusError({"no such corpus path: " + path.string()});
    }
    if (files.empty()) throw CorpusError({"no .json records under " + path.string()});

    Corpus corpus;
    std::vector<std::string> violations;
    std::vector<FieldRecord> records;
    for (const auto& f : files) {
        try {
            std::ifstream in(f);
            if (!in) throw std::runtime_error("cannot open file");
            json j = json::parse(in);
            records.push_back(parse_field_record(j));
        } catch (const std::exception& e) {
            violations.push_back(f.filename().string() + ": " + e.what());
        }
    }
    for (auto& rec : records) {
        try {
            for (const auto& f : corpus.fields)
                if (f.field->label == rec.label)
                    throw FieldDataError(rec.label + ": duplicate label");
            corpus.fields.push_back(load_field(std::move(rec)));
        } catch (const std::exception& e) {
            violations.push_back(std::string(e.what()));
        }
    }
    // second pass: extensions reference loaded base fields
    for (auto& lf : corpus.fields) {
        for (const auto& er : lf.record.extensions) {
            try {
                const LoadedField& base = corpus.by_label(er.base_label);
                LoadedExtension le;
                le.base_label = er.base_label;
                le.extension =
                    std::make_shared<RelativeExtension>(base.field, lf.field, er.embedding);
                for (const auto& coords : er.unit_coords) {
                    FieldElement u(lf.field, coords);
                    if (!u.is_integral() )
                        throw FieldDataError(lf.field->label + ": relative unit not integral");
                    Rat n = norm_and_trace(u).first;
                    if (!(n == 1 || n == -1))
                        throw FieldDataError(lf.field->label + ": relative 'unit' has norm " + n.str());
                    if (!is_relative_unit(*le.extension, u))
                        throw FieldDataError(lf.field->label +
                                             ": listed relative unit has non-torsion relative norm");
                    le.relative_units.push_back(std::move(u));
                }
                if (static_cast<int>(le.relative_units.size()) != le.extension->relative_rank())
                    throw FieldDataError(lf.field->label + "/" + er.base_label +
                                         ": relative unit count != r(l/k)");
                lf.extensions.push_back(std::move(le));
            } catch (const std::exception& e) {
                violations.push_back(lf.field->label + " extension over " + er.base_label + ": " +
                                     e.what());
            }
        }
    }
    if (!violations.empty()) throw CorpusError(violations);
    return corpus;
}

// ----------------------------------------------------------------------
// report document
// ----------------------------------------------------------------------

struct FieldReport {
    std::string label;
    FieldVerification verification;
    std::vector<SuiteResult> identity_checks;
};

struct ReportDocument {
    std::string artifact = "nfreg";
    std::string version = "1.0.0";
    unsigned precision_bits = 128;
    unsigned long long seed = 0;
    std::vector<FieldReport> fields;

    std::map<std::string, int> summary() const {
        std::map<std::string, int> s{{"verified", 0}, {"vacuous", 0}, {"hypothesis-failed", 0},
                                     {"failed", 0}};
        for (const auto& f : fields) {
            for (const auto& b : f.verification.bounds) ++s[to_string(b.verdict)];
            for (const auto& h : f.verification.height_checks) {
                if (h.vacuous)
                    ++s["vacuous"];
                else
                    ++s[h.holds ? "verified" : "failed"];
            }
            for (const auto& c : f.identity_checks) ++s[c.pass ? "verified" : "failed"];
        }
        return s;
    }
};

inline ordered_json to_json(const BoundReport& b) {
    ordered_json j;
    j["theorem"] = b.theorem;
    j["verdict"] = to_string(b.verdict);
    j["bound"] = format_real(b.bound);
    j["regulator"] = format_real(b.regulator);
    j["margin"] = format_real(b.margin);
    ordered_json hy = ordered_json::object();
    for (const auto& [k, v] : b.hypotheses) hy[k] = v;
    j["hypotheses"] = hy;
    if (!b.note.empty()) j["note"] = b.note;
    return j;
}

inline ordered_json to_json(const MarginReport& m) {
    ordered_json j;
    j["check"] = m.check;
    j["lhs"] = format_real(m.lhs);
    j["rhs"] = format_real(m.rhs);
    j["margin"] = format_real(m.margin);
    j["holds"] = m.holds;
    j["vacuous"] = m.vacuous;
    return j;
}

inline ordered_json to_json(const SuiteResult& s) {
    ordered_json j;
    j["check"] = s.name;
    j["trials"] = s.trials;
    j["failures"] = s.failures;
    j["worst_deviation"] = format_real(s.worst_deviation);
    j["pass"] = s.pass;
    return j;
}

inline ordered_json to_json(const ReportDocument& doc) {
    ordered_json j;
    j["artifact"] = doc.artifact;
    j["version"] = doc.version;
    j["precision_bits"] = doc.precision_bits;
    j["seed"] = doc.seed;
    ordered_json fields = ordered_json::array();
    for (const auto& f : doc.fields) {
        ordered_json fj;
        fj["label"] = f.label;
        fj["regulator"] = format_real(f.verification.regulator_value);
        fj["rho"] = f.verification.rho_value;
        fj["cm"] = f.verification.cm;
        ordered_json bounds = ordered_json::array();
        for (const auto& b : f.verification.bounds) bounds.push_back(to_json(b));
        fj["bounds"] = bounds;
        ordered_json heights = ordered_json::array();
        for (const auto& h : f.verification.height_checks) heights.push_back(to_json(h));
        fj["height_checks"] = heights;
        ordered_json ids = ordered_json::array();
        for (const auto& c : f.identity_checks) ids.push_back(to_json(c));
        fj["identity_checks"] = ids;
        fields.push_back(fj);
    }
    j["fields"] = fields;
    ordered_json sum = ordered_json::object();
    for (const auto& [k, v] : doc.summary()) sum[k] = v;
    j["summary"] = sum;
    return j;
}

inline std::string report_to_string(const ReportDocument& doc) { return to_json(doc).dump(2) + "\n"; }

}  // namespace nfreg
