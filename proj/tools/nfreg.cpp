// Command-line interface: heights, regulators, the integer functional f_k
// with its index decomposition, tower invariants, and bound verification
// over the bundled corpus.
//
// Exit codes: 0 all checks verified or vacuous, 1 any check failed,
// 2 usage or data error.

#include "nfreg/nfreg.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

namespace {

using namespace nfreg;

std::vector<Rat> parse_coords(const std::string& s) {
    std::vector<Rat> out;
    std::string cur;
    auto flush = [&] {
        std::string t;
        for (char c : cur)
            if (!std::isspace(static_cast<unsigned char>(c))) t += c;
        if (t.empty()) throw std::invalid_argument("empty coordinate in '" + s + "'");
        out.push_back(parse_rational(t));
        cur.clear();
    };
    for (char c : s) {
        if (c == ',')
            flush();
        else
            cur += c;
    }
    flush();
    return out;
}

FieldElement parse_element(const NumberFieldPtr& field, const std::string& s) {
    std::vector<Rat> coords = parse_coords(s);
    coords.resize(field->degree(), Rat(0));
    return FieldElement(field, std::move(coords));
}

FieldVector parse_vector(const NumberFieldPtr& field, const std::string& s) {
    std::vector<FieldElement> entries;
    std::string cur;
    for (char c : s) {
        if (c == ';') {
            entries.push_back(parse_element(field, cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    entries.push_back(parse_element(field, cur));
    return FieldVector(field, std::move(entries));
}

void print_bound_report(const BoundReport& b) {
    std::cout << "  " << b.theorem << ": " << to_string(b.verdict);
    if (b.verdict == Verdict::verified || b.verdict == Verdict::failed) {
        std::cout << "  bound=" << format_real(b.bound) << "  margin=" << format_real(b.margin);
    }
    for (const auto& [name, ok] : b.hypotheses)
        if (!ok) std::cout << "  [" << name << " fails]";
    std::cout << "\n";
}

std::vector<SuiteResult> run_identity_suites(const LoadedField& lf, unsigned long long seed) {
    std::mt19937_64 rng(seed);
    std::vector<SuiteResult> out;
    Real tol = Real("1e-10");
    out.push_back(suite_height_dual(lf.field, 25, rng, tol));
    if (lf.field->degree() <= 4) {
        out.push_back(suite_prop41(lf.field, 5, rng));
        out.push_back(suite_scaling_invariance(lf.field, 5, rng));
    }
    out.push_back(suite_scale_independence(lf.field, 5, rng));
    out.push_back(suite_projective_invariance(lf.field, 5, rng, tol));
    if (lf.units->rank() > 0) out.push_back(suite_regulator_drop_place(*lf.units, Real("1e-10")));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace nfreg;
    CLI::App app{"number-field heights, regulators and discriminant bounds"};
    app.require_subcommand(1);

    unsigned precision = 128;
    if (const char* env = std::getenv("NFREG_PRECISION")) {
        try {
            precision = static_cast<unsigned>(std::stoul(env));
        } catch (...) {
            std::cerr << "bad NFREG_PRECISION value '" << env << "'\n";
            return 2;
        }
    }
    std::string corpus_path = "data/corpus";
    unsigned long long seed = 20260809ull;
    long box = 5;
    app.add_option("--precision", precision, "working precision in bits (default 128)");
    app.add_option("--corpus", corpus_path, "corpus directory or file (default data/corpus)");
    app.add_option("--seed", seed, "seed for randomized suites");
    app.add_option("--box", box, "exponent box for the unit search");

    std::string label, element_str, vector_str, theorem_filter, format = "text", out_path;
    bool all_fields = false;

    auto* height_cmd = app.add_subcommand("height", "Weil height of an element");
    height_cmd->add_option("label", label)->required();
    height_cmd->add_option("element", element_str, "power-basis coords, e.g. \"1,1\"")->required();

    auto* arak_cmd = app.add_subcommand("arakelov", "log of the Arakelov height of a vector");
    arak_cmd->add_option("label", label)->required();
    arak_cmd->add_option("vector", vector_str, "entries separated by ';', e.g. \"1,0;0,1\"")->required();

    auto* reg_cmd = app.add_subcommand("regulator", "regulator from the bundled unit system");
    reg_cmd->add_option("label", label)->required();

    auto* fk_cmd = app.add_subcommand("fk", "integer functional f_k and its index decomposition");
    fk_cmd->add_option("label", label)->required();
    fk_cmd->add_option("vector", vector_str)->required();

    auto* tower_cmd = app.add_subcommand("tower", "subfield tower invariants");
    tower_cmd->add_option("label", label)->required();

    auto* verify_cmd = app.add_subcommand("verify", "verify the explicit bounds");
    verify_cmd->add_option("label", label);
    verify_cmd->add_flag("--all", all_fields, "verify every corpus field");
    verify_cmd->add_option("--theorem", theorem_filter, "only this theorem id");

    auto* report_cmd = app.add_subcommand("report", "full machine-readable report");
    report_cmd->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    report_cmd->add_option("--out", out_path, "output path (default stdout)");

    auto* search_cmd = app.add_subcommand("unitsearch", "certifying small-unit search");
    search_cmd->add_option("label", label)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        set_working_precision(precision);
        Corpus corpus = load_corpus(corpus_path);

        if (*height_cmd) {
            const auto& lf = corpus.by_label(label);
            FieldElement e = parse_element(lf.field, element_str);
            HeightValue h = weil_height_places(e);
            std::cout << format_real(h.value) << "\n";
            return 0;
        }
        if (*arak_cmd) {
            const auto& lf = corpus.by_label(label);
            HeightValue h = arakelov_height(parse_vector(lf.field, vector_str));
            std::cout << format_real(h.value) << "\n";
            return 0;
        }
        if (*reg_cmd) {
            const auto& lf = corpus.by_label(label);
            std::cout << format_real(regulator(*lf.units).value) << "\n";
            return 0;
        }
        if (*fk_cmd) {
            const auto& lf = corpus.by_label(label);
            FieldVector vec = parse_vector(lf.field, vector_str);
            Prop41Report rep = verify_prop41(vec);
            std::cout << "f_k = " << rep.fk.str() << " = " << rep.index.str() << "^2 * "
                      << rep.disc_abs.str() << (rep.identity_holds ? "" : "  [IDENTITY FAILS]")
                      << "\n";
            std::cout << "log f_k = " << format_real(log_positive(to_real(rep.fk)))
                      << " <= 2d log H = " << format_real(rep.height_bound.rhs)
                      << (rep.height_bound.holds ? "" : "  [BOUND FAILS]") << "\n";
            return rep.identity_holds && rep.height_bound.holds ? 0 : 1;
        }
        if (*tower_cmd) {
            const auto& lf = corpus.by_label(label);
            const auto& lat = *lf.lattice;
            std::cout << "nodes (label degree lambda aleph):\n";
            for (int i = 0; i < lat.size(); ++i) {
                std::cout << "  " << lat.node(i).label << "  " << lat.node(i).degree << "  "
                          << lat.lambda(i) << "  " << rational_string(lat.aleph(i)) << "\n";
            }
            std::cout << "rho = " << rho(lat) << "\n";
            std::cout << "k* = " << lat.node(maximal_kstar(lat)).label << "\n";
            return 0;
        }
        if (*verify_cmd) {
            if (!all_fields && label.empty()) {
                std::cerr << "verify: give a label or --all\n";
                return 2;
            }
            bool any_failed = false;
            for (const auto& lf : corpus.fields) {
                if (!all_fields && lf.field->label != label) continue;
                FieldVerification v = verify_field(lf.field, *lf.lattice, *lf.units);
                std::cout << lf.field->label << "  (reg " << format_real(v.regulator_value)
                          << ", rho " << v.rho_value << (v.cm ? ", CM" : "") << ")\n";
                for (const auto& b : v.bounds) {
                    if (!theorem_filter.empty() && b.theorem != theorem_filter) continue;
                    print_bound_report(b);
                }
                any_failed |= v.any_failed();
            }
            if (!all_fields && !corpus.has_label(label)) {
                std::cerr << "no corpus field labelled '" << label << "'\n";
                return 2;
            }
            return any_failed ? 1 : 0;
        }
        if (*search_cmd) {
            const auto& lf = corpus.by_label(label);
            UnitSearchResult res = search_small_units(*lf.units, box);
            std::cout << "selected " << res.units.size() << " units; product of d*h = "
                      << format_real(res.product) << ", r! * Reg = " << format_real(res.bound)
                      << ", margin = " << format_real(res.margin)
                      << (res.certified ? "  [certified]" : "  [not certified within box]") << "\n";
            return 0;
        }
        if (*report_cmd) {
            ReportDocument doc;
            doc.precision_bits = precision;
            doc.seed = seed;
            for (const auto& lf : corpus.fields) {
                FieldReport fr;
                fr.label = lf.field->label;
                fr.verification = verify_field(lf.field, *lf.lattice, *lf.units);
                fr.identity_checks = run_identity_suites(lf, seed);
                doc.fields.push_back(std::move(fr));
            }
            std::string body;
            if (format == "json") {
                body = report_to_string(doc);
            } else {
                std::ostringstream os;
                auto sum = doc.summary();
                for (const auto& f : doc.fields) {
                    os << f.label << ": reg " << format_real(f.verification.regulator_value) << "\n";
                    for (const auto& b : f.verification.bounds)
                        os << "  " << b.theorem << " " << to_string(b.verdict) << "\n";
                    for (const auto& c : f.identity_checks)
                        os << "  " << c.name << " " << (c.pass ? "pass" : "FAIL") << "\n";
                }
                os << "summary: verified " << sum["verified"] << ", vacuous " << sum["vacuous"]
                   << ", hypothesis-failed " << sum["hypothesis-failed"] << ", failed "
                   << sum["failed"] << "\n";
                body = os.str();
            }
            if (out_path.empty()) {
                std::cout << body;
            } else {
                std::ofstream out(out_path, std::ios::binary);
                if (!out) {
                    std::cerr << "cannot write " << out_path << "\n";
                    return 2;
                }
                out << body;
            }
            return doc.summary()["failed"] == 0 ? 0 : 1;
        }
    } catch (const CorpusError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
