#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "banach/element.hpp"
#include "banach/errors.hpp"
#include "banach/norm_bound.hpp"
#include "banach/verdict.hpp"

namespace banach {

using json = nlohmann::json;

namespace detail {

inline std::vector<double> real_array(const json& j, const std::string& key,
                                      bool required) {
    if (!j.contains(key)) {
        if (required) throw ParseError("missing array field '" + key + "'");
        return {};
    }
    if (!j[key].is_array())
        throw ParseError("field '" + key + "' must be an array of numbers");
    std::vector<double> out;
    for (const auto& v : j[key]) {
        if (!v.is_number())
            throw ParseError("field '" + key + "' must contain only numbers");
        out.push_back(v.get<double>());
    }
    return out;
}

inline std::vector<cplx> complex_arrays(const json& j, const std::string& re,
                                        const std::string& im) {
    auto rs = real_array(j, re, true);
    auto is = real_array(j, im, false);
    if (!is.empty() && is.size() != rs.size())
        throw ParseError("fields '" + re + "' and '" + im +
                         "' must have equal length");
    std::vector<cplx> out(rs.size());
    for (std::size_t k = 0; k < rs.size(); ++k)
        out[k] = cplx(rs[k], is.empty() ? 0.0 : is[k]);
    return out;
}

inline double number_field(const json& j, const std::string& key,
                           double dflt = 0.0, bool required = false) {
    if (!j.contains(key)) {
        if (required) throw ParseError("missing numeric field '" + key + "'");
        return dflt;
    }
    if (!j[key].is_number())
        throw ParseError("field '" + key + "' must be a number");
    return j[key].get<double>();
}

inline cplx complex_field(const json& j, const std::string& key,
                          bool required) {
    if (!j.contains(key)) {
        if (required) throw ParseError("missing field '" + key + "'");
        return cplx{};
    }
    const json& c = j[key];
    if (!c.is_object())
        throw ParseError("field '" + key + "' must be {\"re\":..,\"im\":..}");
    return cplx(number_field(c, "re"), number_field(c, "im"));
}

}  // namespace detail

inline Element parse_element(const json& j) {
    if (!j.is_object()) throw ParseError("element spec must be a JSON object");
    if (!j.contains("algebra") || !j["algebra"].is_string())
        throw ParseError("missing string field 'algebra'");
    std::string alg = j["algebra"].get<std::string>();

    if (alg == "C") {
        double a = detail::number_field(j, "a", 0.0, true);
        double b = detail::number_field(j, "b", 0.0, true);
        if (!j.contains("repr") || !j["repr"].is_object())
            throw ParseError("missing object field 'repr'");
        const json& r = j["repr"];
        if (!r.contains("kind") || !r["kind"].is_string())
            throw ParseError("missing string field 'repr.kind'");
        std::string kind = r["kind"].get<std::string>();
        if (kind == "grid") {
            auto vals = detail::complex_arrays(r, "re", "im");
            return Element(GridFunction(a, b, std::move(vals)));
        }
        if (kind == "poly") {
            auto coeffs = detail::complex_arrays(r, "coeffs_re", "coeffs_im");
            PolyBasis basis = PolyBasis::Monomial;
            if (r.contains("basis")) {
                std::string bs = r["basis"].get<std::string>();
                if (bs == "bernstein")
                    basis = PolyBasis::Bernstein;
                else if (bs != "monomial")
                    throw ParseError(
                        "field 'repr.basis' must be 'monomial' or "
                        "'bernstein'");
            }
            return Element(RealPolynomial(a, b, std::move(coeffs), basis));
        }
        throw ParseError("field 'repr.kind' must be 'grid' or 'poly'");
    }

    if (alg == "linf") {
        auto prefix = j.contains("prefix_re") || j.contains("prefix_im")
                          ? detail::complex_arrays(j, "prefix_re", "prefix_im")
                          : std::vector<cplx>{};
        if (!j.contains("tail") || !j["tail"].is_object())
            throw ParseError("missing object field 'tail'");
        const json& t = j["tail"];
        if (!t.contains("kind") || !t["kind"].is_string())
            throw ParseError("missing string field 'tail.kind'");
        std::string kind = t["kind"].get<std::string>();
        AffineTail tail;
        if (kind == "const") {
            tail.c = cplx(detail::number_field(t, "re", 0.0, true),
                          detail::number_field(t, "im"));
        } else if (kind == "recip") {
            tail.s = cplx(detail::number_field(t, "scale_re", 0.0, true),
                          detail::number_field(t, "scale_im"));
        } else if (kind == "affine") {
            tail.c = cplx(detail::number_field(t, "re"),
                          detail::number_field(t, "im"));
            tail.s = cplx(detail::number_field(t, "scale_re"),
                          detail::number_field(t, "scale_im"));
        } else if (kind != "zero") {
            throw ParseError(
                "field 'tail.kind' must be 'const', 'recip', 'affine' or "
                "'zero'");
        }
        return Element(BoundedSequence(std::move(prefix), tail));
    }

    if (alg == "disk") {
        if (!j.contains("poly") || !j["poly"].is_object())
            throw ParseError("missing object field 'poly'");
        auto coeffs = detail::complex_arrays(j["poly"], "re", "im");
        if (coeffs.empty()) throw ParseError("field 'poly.re' must be non-empty");
        DiskElement f{ComplexPolynomial(std::move(coeffs))};
        if (j.contains("blaschke")) {
            const json& bj = j["blaschke"];
            if (!bj.is_object())
                throw ParseError("field 'blaschke' must be an object");
            if (!bj.contains("zeros") || !bj["zeros"].is_array())
                throw ParseError("missing array field 'blaschke.zeros'");
            std::vector<cplx> zeros;
            for (const auto& z : bj["zeros"]) {
                if (!z.is_object())
                    throw ParseError(
                        "entries of 'blaschke.zeros' must be "
                        "{\"re\":..,\"im\":..}");
                zeros.emplace_back(detail::number_field(z, "re"),
                                   detail::number_field(z, "im"));
            }
            cplx gamma = bj.contains("gamma")
                             ? detail::complex_field(bj, "gamma", true)
                             : cplx(1.0, 0.0);
            f.blaschke = BlaschkeProduct(std::move(zeros), gamma);
        }
        return Element(std::move(f));
    }

    throw UnsupportedAlgebra("field 'algebra' must be 'C', 'linf' or 'disk'");
}

inline Element parse_element(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("input is not valid JSON");
    return parse_element(j);
}

namespace detail {

inline json complex_arrays_json(const std::vector<cplx>& v,
                                const std::string& re,
                                const std::string& im) {
    json j;
    auto& rs = j[re] = json::array();
    auto& is = j[im] = json::array();
    for (const cplx& z : v) {
        rs.push_back(z.real());
        is.push_back(z.imag());
    }
    return j;
}

}  // namespace detail

inline json element_to_json(const Element& x) {
    return std::visit(
        [](const auto& v) -> json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, GridFunction>) {
                json r = detail::complex_arrays_json(v.values, "re", "im");
                r["kind"] = "grid";
                return json{{"algebra", "C"}, {"a", v.a}, {"b", v.b},
                            {"repr", r}};
            } else if constexpr (std::is_same_v<T, RealPolynomial>) {
                json r = detail::complex_arrays_json(v.coeffs, "coeffs_re",
                                                     "coeffs_im");
                r["kind"] = "poly";
                r["basis"] = v.basis == PolyBasis::Bernstein ? "bernstein"
                                                             : "monomial";
                return json{{"algebra", "C"}, {"a", v.a}, {"b", v.b},
                            {"repr", r}};
            } else if constexpr (std::is_same_v<T, BoundedSequence>) {
                json j = detail::complex_arrays_json(v.prefix, "prefix_re",
                                                     "prefix_im");
                j["algebra"] = "linf";
                json t;
                if (v.tail.is_zero()) {
                    t["kind"] = "zero";
                } else if (v.tail.is_constant()) {
                    t["kind"] = "const";
                    t["re"] = v.tail.c.real();
                    t["im"] = v.tail.c.imag();
                } else if (v.tail.decays_to_zero()) {
                    t["kind"] = "recip";
                    t["scale_re"] = v.tail.s.real();
                    t["scale_im"] = v.tail.s.imag();
                } else {
                    t["kind"] = "affine";
                    t["re"] = v.tail.c.real();
                    t["im"] = v.tail.c.imag();
                    t["scale_re"] = v.tail.s.real();
                    t["scale_im"] = v.tail.s.imag();
                }
                j["tail"] = t;
                return j;
            } else {
                json j{{"algebra", "disk"},
                       {"poly", detail::complex_arrays_json(v.poly.coeffs,
                                                            "re", "im")}};
                if (v.blaschke) {
                    json zs = json::array();
                    for (const cplx& z : v.blaschke->zeros)
                        zs.push_back({{"re", z.real()}, {"im", z.imag()}});
                    j["blaschke"] = {
                        {"zeros", zs},
                        {"gamma", {{"re", v.blaschke->gamma.real()},
                                   {"im", v.blaschke->gamma.imag()}}}};
                }
                return j;
            }
        },
        x);
}

inline json verdict_to_json(const Verdict& v) {
    json e = json::object();
    for (const auto& [k, val] : v.evidence) e[k] = val;
    return json{{"status", to_string(v.status)},
                {"reason", v.reason},
                {"evidence", e}};
}

inline json classification_to_json(const Classification& c) {
    return json{{"regular", verdict_to_json(c.regular)},
                {"zero_divisor", verdict_to_json(c.zero_divisor)},
                {"topological_divisor", verdict_to_json(c.topological_divisor)},
                {"singular", verdict_to_json(c.singular)}};
}

inline json norm_bound_to_json(const NormBound& b) {
    return json{{"lo", b.lo}, {"hi", b.hi}};
}

}  // namespace banach
