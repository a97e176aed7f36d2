#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "banach/banach.hpp"

namespace {

using banach::json;

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw banach::ParseError("cannot read spec file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    json j = json::parse(ss.str(), nullptr, false);
    if (j.is_discarded())
        throw banach::ParseError("spec file '" + path +
                                 "' is not valid JSON");
    return j;
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
    auto bad = [&] {
        throw banach::ParseError("--indices expects 'A..B' or a single "
                                 "positive integer, got '" +
                                 text + "'");
    };
    std::size_t a = 0, b = 0;
    auto pos = text.find("..");
    try {
        if (pos == std::string::npos) {
            a = b = std::stoull(text);
        } else {
            a = std::stoull(text.substr(0, pos));
            b = std::stoull(text.substr(pos + 2));
        }
    } catch (const std::exception&) {
        bad();
    }
    if (a == 0 || b < a) bad();
    return {a, b};
}

struct WitnessRow {
    std::size_t index;
    banach::NormBound unit, product;
};

json witness_rows_json(const std::vector<WitnessRow>& rows) {
    json arr = json::array();
    for (const auto& r : rows)
        arr.push_back(json{{"index", r.index},
                           {"unit_norm_lo", r.unit.lo},
                           {"unit_norm_hi", r.unit.hi},
                           {"product_norm_lo", r.product.lo},
                           {"product_norm_hi", r.product.hi}});
    return arr;
}

void print_witness_csv(const std::vector<WitnessRow>& rows) {
    std::printf(
        "index,unit_norm_lo,unit_norm_hi,product_norm_lo,product_norm_hi\n");
    for (const auto& r : rows)
        std::printf("%zu,%.17g,%.17g,%.17g,%.17g\n", r.index, r.unit.lo,
                    r.unit.hi, r.product.lo, r.product.hi);
}

std::vector<std::string> citations(const banach::Classification& c) {
    std::vector<std::string> out;
    auto push = [&](const char* name, const banach::Verdict& v) {
        out.push_back(std::string(name) + ": " + v.reason);
    };
    push("regular", c.regular);
    push("zero_divisor", c.zero_divisor);
    push("topological_divisor", c.topological_divisor);
    push("singular", c.singular);
    return out;
}

json make_report(const json& echo, const banach::Classification& c,
                 const std::vector<WitnessRow>& rows) {
    json cites = json::array();
    for (const auto& s : citations(c)) cites.push_back(s);
    return json{{"element_spec", echo},
                {"classification", banach::classification_to_json(c)},
                {"witnesses", witness_rows_json(rows)},
                {"citations", cites}};
}

// classification for a polynomial representation: only the certified
// enclosure of min |p| is available, so verdicts degrade to Unknown when it
// touches zero.
banach::Classification classify_any(const banach::Element& x,
                                    const banach::CertConfig& cfg) {
    if (const auto* p = std::get_if<banach::RealPolynomial>(&x)) {
        banach::Classification c;
        if (p->is_zero()) {
            c.regular =
                banach::Verdict::refuted("the zero element is not invertible");
            c.zero_divisor = banach::Verdict::refuted(
                "the zero element is excluded from the zero-divisor notion");
            c.topological_divisor =
                banach::Verdict::proved("||0 * g|| = 0 for every g");
            c.singular =
                banach::Verdict::proved("the zero element is not invertible");
            return c;
        }
        banach::NormBound m = banach::min_abs_enclosure(*p, cfg);
        c.zero_divisor = banach::Verdict::refuted(
            "a not-identically-zero continuous function cannot vanish on the "
            "complement of a nowhere-dense set, as annihilation would "
            "require");
        if (m.lo > 0.0) {
            c.regular = banach::Verdict::proved(
                "p is bounded away from zero on [a,b], so 1/p is continuous "
                "and inverts p",
                {{"min_abs_lo", m.lo}});
            c.topological_divisor = banach::Verdict::refuted(
                "min |p| >= m > 0 gives ||p*g|| >= m*||g||",
                {{"min_abs_lo", m.lo}});
            c.singular = banach::Verdict::refuted("p is invertible");
        } else {
            c.regular = banach::Verdict::unknown(
                "the certified enclosure of min |p| touches zero; the "
                "enclosure cannot decide whether p vanishes",
                {{"min_abs_hi", m.hi}});
            c.topological_divisor = banach::Verdict::unknown(
                "the certified enclosure of min |p| touches zero",
                {{"min_abs_hi", m.hi}});
            c.singular = banach::Verdict::unknown(
                "the certified enclosure of min |p| touches zero");
        }
        return c;
    }
    return banach::classify(x, cfg);
}

int run_classify(const std::string& spec_path, const banach::CertConfig& cfg,
                 const std::string& format) {
    json echo = read_json_file(spec_path);
    banach::Element x = banach::parse_element(echo);
    banach::Classification c = classify_any(x, cfg);
    if (format == "csv") {
        std::printf("verdict,status\n");
        std::printf("regular,%s\n", banach::to_string(c.regular.status));
        std::printf("zero_divisor,%s\n",
                    banach::to_string(c.zero_divisor.status));
        std::printf("topological_divisor,%s\n",
                    banach::to_string(c.topological_divisor.status));
        std::printf("singular,%s\n", banach::to_string(c.singular.status));
    } else {
        std::cout << make_report(echo, c, {}).dump(2) << "\n";
    }
    bool any_unknown = c.regular.unknown_() || c.zero_divisor.unknown_() ||
                       c.topological_divisor.unknown_() ||
                       c.singular.unknown_();
    return any_unknown ? 2 : 0;
}

int run_witness(const std::string& spec_path, const std::string& kind,
                const std::string& indices, const banach::CertConfig& cfg,
                const std::string& format) {
    json echo = read_json_file(spec_path);
    banach::Element x = banach::parse_element(echo);
    auto [lo, hi] = parse_range(indices);
    std::vector<WitnessRow> rows;

    if (kind == "zero-divisor") {
        if (const auto* f = std::get_if<banach::GridFunction>(&x)) {
            banach::GridFunction g = banach::zero_divisor_witness(*f);
            banach::NormBound gn = banach::sup_norm(g);
            for (std::size_t n = lo; n <= hi; ++n)
                rows.push_back({n, gn, banach::NormBound::exact(0.0)});
        } else if (const auto* s = std::get_if<banach::BoundedSequence>(&x)) {
            auto w = banach::zero_divisor_witness(*s);
            for (std::size_t n = lo; n <= hi; ++n)
                rows.push_back({n, w.unit_norm, w.product_norm});
        } else if (std::holds_alternative<banach::DiskElement>(x)) {
            const auto& f = std::get<banach::DiskElement>(x);
            if (!f.is_zero())
                throw banach::NotAZeroDivisor(
                    "a nonzero disk-algebra element has isolated zeros and "
                    "no annihilating partner");
            for (std::size_t n = lo; n <= hi; ++n)
                rows.push_back({n, banach::NormBound::exact(1.0),
                                banach::NormBound::exact(0.0)});
        } else {
            throw banach::UnsupportedAlgebra(
                "witness operations need a grid, sequence, or disk element");
        }
    } else if (kind == "tdz") {
        banach::WitnessSequence w;
        if (const auto* f = std::get_if<banach::GridFunction>(&x))
            w = banach::tdz_witness_sequence(*f);
        else if (const auto* s = std::get_if<banach::BoundedSequence>(&x))
            w = banach::tdz_witness_sequence(*s);
        else if (const auto* d = std::get_if<banach::DiskElement>(&x))
            w = banach::tdz_witness_sequence(*d, cfg);
        else
            throw banach::UnsupportedAlgebra(
                "witness operations need a grid, sequence, or disk element");
        for (std::size_t n = lo; n <= hi; ++n) {
            banach::WitnessItem it = w(n);
            rows.push_back({n, it.element_norm, it.product_norm});
        }
    } else {
        throw banach::ParseError(
            "--kind must be 'zero-divisor' or 'tdz', got '" + kind + "'");
    }

    if (format == "json") {
        banach::Classification c = classify_any(x, cfg);
        std::cout << make_report(echo, c, rows).dump(2) << "\n";
    } else {
        print_witness_csv(rows);
    }
    return 0;
}

int run_verify(const std::string& suite, std::uint64_t seed,
               const banach::CertConfig& cfg) {
    std::vector<banach::CheckResult> results =
        banach::run_suite(suite, seed, cfg);
    bool all = true;
    std::string first_fail;
    for (const auto& r : results) {
        std::printf("criterion %d  %-34s %s  (%s)\n", r.criterion,
                    r.name.c_str(), r.passed ? "PASS" : "FAIL",
                    r.detail.c_str());
        if (!r.passed && first_fail.empty()) first_fail = r.name;
        all = all && r.passed;
    }
    if (!all) {
        std::fprintf(stderr, "verification failed: %s\n", first_fail.c_str());
        return 4;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "certified classification, witnesses, and verification for three "
        "concrete Banach algebras"};
    app.require_subcommand(1);

    std::string spec_path, kind, indices = "1..5", suite, config_path;
    std::string format_classify = "json", format_witness = "csv";
    double tol = 1e-9;
    std::uint64_t samples = 1024, seed = 0;

    CLI::App* cls = app.add_subcommand(
        "classify", "classify an element and emit a report");
    cls->add_option("--spec", spec_path, "path to the element spec (JSON)")
        ->required();
    cls->add_option("--tol", tol, "certification tolerance");
    cls->add_option("--samples", samples, "initial circle samples");
    cls->add_option("--format", format_classify, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cls->add_option("--config", config_path, "JSON config file");

    CLI::App* wit = app.add_subcommand(
        "witness", "emit witness certificates for an element");
    wit->add_option("--spec", spec_path, "path to the element spec (JSON)")
        ->required();
    wit->add_option("--kind", kind, "zero-divisor or tdz")->required();
    wit->add_option("--indices", indices, "index range A..B (1-based)");
    wit->add_option("--tol", tol, "certification tolerance");
    wit->add_option("--samples", samples, "initial circle samples");
    wit->add_option("--format", format_witness, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    wit->add_option("--config", config_path, "JSON config file");

    CLI::App* ver = app.add_subcommand(
        "verify", "run an invariant suite and report pass/fail");
    ver->add_option("suite", suite,
                    "phi | blaschke | linear-factor | bernstein | linf | all")
        ->required();
    ver->add_option("--tol", tol, "certification tolerance");
    ver->add_option("--samples", samples, "initial circle samples");
    ver->add_option("--seed", seed, "seed for randomized sweeps");
    ver->add_option("--config", config_path, "JSON config file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        // precedence: explicit flags > config file > defaults
        if (!config_path.empty()) {
            json cj = read_json_file(config_path);
            CLI::App* sub = app.get_subcommands().front();
            auto overridable = [&](const std::string& flag) {
                const CLI::Option* o = sub->get_option_no_throw(flag);
                return o != nullptr && o->count() == 0;
            };
            if (cj.contains("tol") && overridable("--tol"))
                tol = cj["tol"].get<double>();
            if (cj.contains("samples") && overridable("--samples"))
                samples = cj["samples"].get<std::uint64_t>();
            if (cj.contains("seed") && overridable("--seed"))
                seed = cj["seed"].get<std::uint64_t>();
        }
        banach::CertConfig cfg;
        cfg.abs_tol = tol;
        cfg.circle_samples = samples;

        if (cls->parsed()) return run_classify(spec_path, cfg, format_classify);
        if (wit->parsed())
            return run_witness(spec_path, kind, indices, cfg, format_witness);
        return run_verify(suite, seed, cfg);
    } catch (const banach::NotAZeroDivisor& e) {
        std::fprintf(stderr, "refused: %s\n", e.what());
        return 3;
    } catch (const banach::NotATDZ& e) {
        std::fprintf(stderr, "refused: %s\n", e.what());
        return 3;
    } catch (const banach::NotAZero& e) {
        std::fprintf(stderr, "refused: %s\n", e.what());
        return 3;
    } catch (const banach::NotRegular& e) {
        std::fprintf(stderr, "refused: %s\n", e.what());
        return 3;
    } catch (const banach::NotUnimodular& e) {
        std::fprintf(stderr, "refused: %s\n", e.what());
        return 3;
    } catch (const banach::CertificationFailed& e) {
        std::fprintf(stderr, "certification failed: %s\n", e.what());
        return 4;
    } catch (const banach::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
