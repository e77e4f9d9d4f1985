#include "fixtures.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace nfreg;

namespace {
std::filesystem::path corpus_dir() {
    return std::filesystem::path(NFREG_SOURCE_DIR) / "data" / "corpus";
}
}  // namespace

TEST_CASE("rational string parsing") {
    CHECK(parse_rational("3") == Rat(3));
    CHECK(parse_rational("-9/2") == Rat(-9, 2));
    CHECK(parse_rational("0") == Rat(0));
    CHECK(rational_string(Rat(-9, 2)) == "-9/2");
    CHECK(rational_string(Rat(4)) == "4");
    CHECK_THROWS(parse_rational("1.5"));
    CHECK_THROWS(parse_rational("2/0"));
    CHECK_THROWS(parse_rational(""));
    CHECK_THROWS(parse_rational("x"));
}

TEST_CASE("bundled corpus loads clean") {
    Corpus corpus = load_corpus(corpus_dir());
    CHECK(corpus.fields.size() >= 15);
    // the promised members
    for (const char* label : {"q", "x2-2", "x2+1", "x3+x2-2x-1", "x4-10x2+1",
                              "x4+x3+x2+x+1", "x6-2x5+2x4-2x3+2x2-x+1"})
        CHECK(corpus.has_label(label));
    // 20 real quadratics with D < 1000
    int real_quads = 0;
    for (const auto& lf : corpus.fields)
        if (lf.field->degree() == 2 && lf.field->r1 == 2 && lf.field->abs_disc() < 1000)
            ++real_quads;
    CHECK(real_quads >= 20);
    // extensions resolved: biquadratic over x2-2, five quadratics over q
    const auto& biq = corpus.by_label("x4-10x2+1");
    REQUIRE(biq.extensions.size() == 1);
    CHECK(biq.extensions[0].base_label == "x2-2");
    CHECK(biq.extensions[0].extension->relative_rank() == 2);
    int over_q = 0;
    for (const auto& lf : corpus.fields)
        for (const auto& e : lf.extensions)
            if (e.base_label == "q") ++over_q;
    CHECK(over_q >= 5);
}

TEST_CASE("bad records are rejected with labelled violations") {
    namespace fs = std::filesystem;
    fs::path tmp = fs::temp_directory_path() / "nfreg_bad_corpus";
    fs::create_directories(tmp);
    // signature says one real and one complex pair, but x^2 - 2 has two real roots
    std::ofstream(tmp / "bad1.json") << R"({
        "label": "bad1", "poly": [-2, 0, 1], "discriminant": 8, "signature": [0, 1],
        "integral_basis": [["1","0"],["0","1"]], "torsion_order": 2,
        "fundamental_units": [], "subfields": [], "lattice_edges": []})";
    // "unit" of norm 2
    std::ofstream(tmp / "bad2.json") << R"({
        "label": "bad2", "poly": [-2, 0, 1], "discriminant": 8, "signature": [2, 0],
        "integral_basis": [["1","0"],["0","1"]], "torsion_order": 2,
        "fundamental_units": [["0","1"]], "subfields": [], "lattice_edges": []})";
    // subfield discriminant divisibility failure: 7^2 does not divide 2304
    std::ofstream(tmp / "bad3.json") << R"({
        "label": "bad3", "poly": [1, 0, -10, 0, 1], "discriminant": 2304, "signature": [4, 0],
        "integral_basis": [["1","0","0","0"],["0","-9/2","0","1/2"],["0","11/2","0","-1/2"],["-5/4","-9/4","1/4","1/4"]],
        "torsion_order": 2,
        "fundamental_units": [["1","-9/2","0","1/2"],["0","1","0","0"],["-5/4","-9/4","1/4","1/4"]],
        "subfields": [{"label": "x2-7", "poly": [-7, 0, 1], "discriminant": 28, "signature": [2, 0]}],
        "lattice_edges": []})";
    try {
        load_corpus(tmp);
        FAIL("expected CorpusError");
    } catch (const CorpusError& e) {
        REQUIRE(e.violations().size() == 3);
        CHECK(e.violations()[0].find("bad1") != std::string::npos);
        CHECK(e.violations()[1].find("norm") != std::string::npos);
        CHECK(e.violations()[2].find("divisibility") != std::string::npos);
    }
    fs::remove_all(tmp);
}

TEST_CASE("missing keys and malformed rationals are schema errors") {
    json j = {{"label", "x"}, {"poly", {1, 0, 1}}};
    CHECK_THROWS(parse_field_record(j));
    json good = json::parse(R"({
        "label": "g", "poly": [1, 0, 1], "discriminant": -4, "signature": [0, 1],
        "integral_basis": [["1","0"],["0","1"]], "torsion_order": 4,
        "fundamental_units": [], "subfields": [], "lattice_edges": []})");
    CHECK_NOTHROW(parse_field_record(good));
    json bad = good;
    bad["integral_basis"][0][0] = "1.5";
    CHECK_THROWS(parse_field_record(bad));
}

TEST_CASE("report document round trips byte identically") {
    Corpus corpus = load_corpus(corpus_dir());
    ReportDocument doc;
    doc.precision_bits = working_precision();
    doc.seed = 42;
    for (const char* label : {"x2-2", "x3+x2-2x-1"}) {
        const auto& lf = corpus.by_label(label);
        FieldReport fr;
        fr.label = label;
        fr.verification = verify_field(lf.field, *lf.lattice, *lf.units);
        std::mt19937_64 rng(42);
        fr.identity_checks.push_back(suite_height_dual(lf.field, 5, rng, Real("1e-10")));
        doc.fields.push_back(std::move(fr));
    }
    std::string first = report_to_string(doc);
    ordered_json parsed = ordered_json::parse(first);
    std::string second = parsed.dump(2) + "\n";
    CHECK(first == second);
    // summary counts are present and no check failed
    CHECK(parsed["summary"]["failed"].get<int>() == 0);
    CHECK(parsed["summary"]["verified"].get<int>() > 0);
}

TEST_CASE("verify_field over corpus members") {
    Corpus corpus = load_corpus(corpus_dir());
    // real quadratic: quadratic bound verified
    const auto& quad = corpus.by_label("x2-2");
    FieldVerification v = verify_field(quad.field, *quad.lattice, *quad.units);
    bool saw_quadratic = false;
    for (const auto& b : v.bounds)
        if (b.theorem == "quadratic") {
            saw_quadratic = true;
            CHECK(b.verdict == Verdict::verified);
            CHECK(abs(b.margin - Real("0.535")) < Real("1e-3"));
        }
    CHECK(saw_quadratic);
    CHECK(!v.any_failed());

    // CM quartic: both main theorems inapplicable
    const auto& cm = corpus.by_label("x4+x3+x2+x+1");
    FieldVerification vc = verify_field(cm.field, *cm.lattice, *cm.units);
    CHECK(vc.cm);
    int inapplicable = 0;
    for (const auto& b : vc.bounds)
        if (b.theorem.rfind("regulator-lower", 0) == 0) {
            CHECK(b.verdict == Verdict::hypothesis_failed);
            ++inapplicable;
        }
    CHECK(inapplicable == 2);
    CHECK(!vc.any_failed());

    // the cyclic cubic: both main theorems verified
    const auto& cub = corpus.by_label("x3+x2-2x-1");
    FieldVerification vb = verify_field(cub.field, *cub.lattice, *cub.units);
    CHECK(vb.rho_value == 0);
    for (const auto& b : vb.bounds)
        if (b.theorem.rfind("regulator-lower", 0) == 0) CHECK(b.verdict == Verdict::verified);
    CHECK(!vb.any_failed());
}
