#include "recurseq/sequence_json.hpp"

#include <cctype>
#include <set>

namespace recurseq {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw SpecError("spec error at " + (where.empty() ? std::string("/") : where) + ": " + what);
}

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
    for (const auto& [key, value] : obj.items()) {
        if (!allowed.count(key)) fail(where + "/" + key, "unknown field '" + key + "'");
    }
}

const json& require(const json& obj, const std::string& key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) fail(where, "missing field '" + key + "'");
    return *it;
}

std::vector<BigInt> bigint_list(const json& v, const std::string& where) {
    if (!v.is_array()) fail(where, "expected an array of integers");
    std::vector<BigInt> out;
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(bigint_from_json(v[i], where + "/" + std::to_string(i)));
    return out;
}

long small_int(const json& v, const std::string& where) {
    if (!v.is_number_integer()) fail(where, "expected an integer");
    return v.get<long>();
}

json bigint_list_json(const std::vector<BigInt>& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(bigint_to_json(x));
    return out;
}

}  // namespace

json bigint_to_json(const BigInt& v) {
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

BigInt bigint_from_json(const json& v, const std::string& where) {
    if (v.is_number_integer()) {
        if (v.is_number_unsigned()) return BigInt(std::to_string(v.get<std::uint64_t>()));
        return BigInt(std::to_string(v.get<std::int64_t>()));
    }
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        bool ok = !s.empty();
        for (std::size_t i = 0; ok && i < s.size(); ++i)
            ok = std::isdigit(static_cast<unsigned char>(s[i])) || (i == 0 && s[i] == '-' && s.size() > 1);
        if (ok) return BigInt(s, 10);
    }
    fail(where, "expected an integer, got " + v.dump());
}

SequenceSource sequence_from_json(const json& doc) {
    if (!doc.is_object()) fail("", "expected a JSON object");
    const json& type = require(doc, "type", "");
    if (!type.is_string()) fail("/type", "expected a string");
    const std::string kind = type.get<std::string>();
    try {
        if (kind == "linear") {
            reject_unknown(doc, {"type", "coeffs", "initial"}, "");
            return LinearRecurrence(bigint_list(require(doc, "coeffs", ""), "/coeffs"),
                                    bigint_list(require(doc, "initial", ""), "/initial"));
        }
        if (kind == "polynomial") {
            reject_unknown(doc, {"type", "poly"}, "");
            return PolynomialSequence{IntPoly(bigint_list(require(doc, "poly", ""), "/poly"))};
        }
        if (kind == "nonlinear") {
            reject_unknown(doc, {"type", "k", "sign", "poly", "initial"}, "");
            const long k = small_int(require(doc, "k", ""), "/k");
            if (k < 1) fail("/k", "k must be at least 1");
            const long sign = small_int(require(doc, "sign", ""), "/sign");
            const json& poly = require(doc, "poly", "");
            if (!poly.is_array()) fail("/poly", "expected an array of monomials");
            std::vector<Monomial> terms;
            for (std::size_t i = 0; i < poly.size(); ++i) {
                const std::string where = "/poly/" + std::to_string(i);
                const json& term = poly[i];
                if (!term.is_object()) fail(where, "expected {\"exps\":[...],\"c\":...}");
                reject_unknown(term, {"exps", "c"}, where);
                const json& exps = require(term, "exps", where);
                if (!exps.is_array()) fail(where + "/exps", "expected an array");
                Monomial mono;
                for (std::size_t j = 0; j < exps.size(); ++j) {
                    long e = small_int(exps[j], where + "/exps/" + std::to_string(j));
                    if (e < 0) fail(where + "/exps/" + std::to_string(j), "exponent must be non-negative");
                    mono.exps.push_back(static_cast<unsigned>(e));
                }
                mono.coeff = bigint_from_json(require(term, "c", where), where + "/c");
                terms.push_back(std::move(mono));
            }
            return NonlinearRecurrence(static_cast<std::size_t>(k), static_cast<int>(sign), std::move(terms),
                                       bigint_list(require(doc, "initial", ""), "/initial"));
        }
    } catch (const SpecError&) {
        throw;
    } catch (const DomainError& e) {
        fail("", e.what());
    }
    fail("/type", "unknown sequence type '" + kind + "' (linear | nonlinear | polynomial)");
}

SequenceSource parse_sequence_spec(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SpecError(std::string("malformed JSON: ") + e.what());
    }
    return sequence_from_json(doc);
}

json sequence_to_json(const SequenceSource& src) {
    return std::visit(
        [](const auto& s) -> json {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, LinearRecurrence>) {
                return {{"type", "linear"}, {"coeffs", bigint_list_json(s.coeffs())},
                        {"initial", bigint_list_json(s.initial())}};
            } else if constexpr (std::is_same_v<T, NonlinearRecurrence>) {
                json poly = json::array();
                for (const auto& m : s.poly()) poly.push_back({{"exps", m.exps}, {"c", bigint_to_json(m.coeff)}});
                return {{"type", "nonlinear"}, {"k", s.k()}, {"sign", s.sign()}, {"poly", poly},
                        {"initial", bigint_list_json(s.initial())}};
            } else {
                return {{"type", "polynomial"},
                        {"poly", bigint_list_json(std::vector<BigInt>(s.f.coeffs().begin(), s.f.coeffs().end()))}};
            }
        },
        src);
}

json report_to_json(const DivisorReport& report) {
    json divisors = json::array();
    for (const auto& d : report.divisors) divisors.push_back({{"p", d.p}, {"first_n", d.first_n}});
    json errors = json::array();
    for (const auto& e : report.errors) errors.push_back({{"p", e.p}, {"reason", e.reason}});
    json checkpoints = json::array();
    for (const auto& c : report.checkpoints) checkpoints.push_back({{"bound", c.bound}, {"count", c.count}});
    json out = {
        {"source", report.source},
        {"bound", report.bound},
        {"status", to_string(report.status)},
        {"divisors", divisors},
        {"non_divisors", report.non_divisors},
        {"errors", errors},
        {"checkpoints", checkpoints},
        {"has_zero_term", report.has_zero_term},
    };
    if (!report.excluded.empty()) out["excluded"] = report.excluded;
    if (!report.witness.empty()) out["witness"] = report.witness;
    if (!report.trace.empty()) out["trace"] = report.trace;
    return out;
}

DivisorReport report_from_json(const json& doc) {
    DivisorReport r;
    r.source = doc.at("source").get<std::string>();
    r.bound = doc.at("bound").get<std::uint64_t>();
    r.status = report_status_from_string(doc.value("status", std::string("OK")));
    for (const auto& d : doc.at("divisors")) r.divisors.push_back({d.at("p").get<std::uint64_t>(), d.at("first_n").get<std::uint64_t>()});
    r.non_divisors = doc.at("non_divisors").get<std::vector<std::uint64_t>>();
    for (const auto& e : doc.at("errors")) r.errors.push_back({e.at("p").get<std::uint64_t>(), e.at("reason").get<std::string>()});
    for (const auto& c : doc.at("checkpoints")) r.checkpoints.push_back({c.at("bound").get<std::uint64_t>(), c.at("count").get<std::uint64_t>()});
    r.has_zero_term = doc.value("has_zero_term", false);
    r.excluded = doc.value("excluded", std::vector<std::uint64_t>{});
    r.witness = doc.value("witness", std::string());
    r.trace = doc.value("trace", std::vector<std::string>{});
    return r;
}

}  // namespace recurseq
