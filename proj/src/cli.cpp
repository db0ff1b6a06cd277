#include "recurseq/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "recurseq/errors.hpp"
#include "recurseq/modular_analysis.hpp"
#include "recurseq/prime_divisors.hpp"
#include "recurseq/primes.hpp"
#include "recurseq/recurrences.hpp"
#include "recurseq/sequence_json.hpp"
#include "recurseq/topology.hpp"
#include "recurseq/transforms.hpp"

namespace recurseq::cli {

namespace {

using nlohmann::json;

constexpr const char* kFooter = R"(Sequence specs (--spec FILE or --json TEXT), UTF-8 JSON:
  {"type":"linear","coeffs":[1,1],"initial":[0,1]}       a_{n+k} = r_1 a_{n+k-1} + ... + r_k a_n
  {"type":"nonlinear","k":1,"sign":1,"poly":[{"exps":[2],"c":1}],"initial":[1,1]}
                                                          a_{n+k+1} = sign a_n + f(a_{n+1},...,a_{n+k})
  {"type":"polynomial","poly":[1,0,1]}                    a_n = f(n), ascending coefficients
Polynomials on the command line: comma-separated ascending coefficients, e.g. --g "1,-1,-1".
Exit status: 0 success, 1 verification failure, 2 usage error, 3 bound exhausted.
RECURSEQ_STATE_CAP overrides the period-scan state cap (default 100000000).)";

struct Options {
    std::string spec_path;
    std::string spec_inline;
    std::string format = "auto";
    unsigned jobs = 1;
    std::uint64_t state_cap = 0;

    std::size_t n_max = 20;
    std::string g;
    std::string poly;
    std::size_t b = 0;
    std::size_t c = 0;
    std::string modulus;
    std::string prime;
    std::size_t j_cap = 64;
    std::uint64_t bound = 0;
    std::string checkpoints;
    bool skip_zero = false;
    bool trace = false;
    std::size_t growth_window = 10;
    std::size_t s = 1;
    std::string t;
    std::size_t l_margin = 1;
    std::uint64_t scan_bound = 0;
    std::vector<std::string> classes;
    std::string primes;
};

// A usage problem detected after CLI11 parsing.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

BigInt parse_bigint(const std::string& text, const std::string& flag) {
    std::string s = text;
    if (!s.empty() && s.front() == '+') s.erase(0, 1);
    bool ok = !s.empty();
    for (std::size_t i = 0; ok && i < s.size(); ++i)
        ok = std::isdigit(static_cast<unsigned char>(s[i])) || (i == 0 && s[i] == '-' && s.size() > 1);
    if (!ok) throw UsageError(flag + ": expected an integer, got '" + text + "'");
    return BigInt(s, 10);
}

std::vector<std::uint64_t> parse_u64_list(const std::string& text, const std::string& flag) {
    std::vector<std::uint64_t> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        BigInt v = parse_bigint(item, flag);
        if (v < 1 || !v.fits_ulong_p()) throw UsageError(flag + ": values must be positive, got '" + item + "'");
        out.push_back(v.get_ui());
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read spec file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

class Runner {
public:
    Runner(Options& opt, std::ostream& out) : opt_(opt), out_(out) {}

    ScanLimits limits() const {
        ScanLimits l;
        if (const char* env = std::getenv("RECURSEQ_STATE_CAP")) {
            try {
                l.state_cap = std::stoull(env);
            } catch (const std::exception&) {
                throw UsageError(std::string("RECURSEQ_STATE_CAP: expected a positive integer, got '") + env + "'");
            }
        }
        if (opt_.state_cap) l.state_cap = opt_.state_cap;
        return l;
    }

    DivisorOptions divisor_options() const {
        DivisorOptions d;
        d.limits = limits();
        d.jobs = opt_.jobs;
        d.zero_policy = opt_.skip_zero ? ZeroTermPolicy::skip : ZeroTermPolicy::count_as_divisible;
        return d;
    }

    SequenceSource source() const {
        if (!opt_.spec_inline.empty()) return parse_sequence_spec(opt_.spec_inline);
        if (!opt_.spec_path.empty()) {
            try {
                return parse_sequence_spec(read_file(opt_.spec_path));
            } catch (const SpecError& e) {
                throw SpecError(opt_.spec_path + ": " + e.what());
            }
        }
        throw UsageError("a sequence is required: pass --spec FILE or --json TEXT");
    }

    LinearRecurrence linear() const {
        SequenceSource src = source();
        if (auto* lin = std::get_if<LinearRecurrence>(&src)) return *lin;
        if (auto* poly = std::get_if<PolynomialSequence>(&src)) return from_polynomial(poly->f);
        throw UsageError("this command needs a linear or polynomial sequence spec");
    }

    BigInt modulus(const std::string& flag) const {
        if (opt_.modulus.empty()) throw UsageError(flag + " is required");
        BigInt m = parse_bigint(opt_.modulus, flag);
        if (m < 1) throw UsageError(flag + " must be positive");
        return m;
    }

    // Default bound 5000, lowered to 500 for state width >= 3.
    std::uint64_t bound_for(const SequenceSource& src) const {
        if (opt_.bound) return opt_.bound;
        std::size_t width = std::visit(
            [](const auto& s) -> std::size_t {
                using T = std::decay_t<decltype(s)>;
                if constexpr (std::is_same_v<T, LinearRecurrence>) return s.order();
                else if constexpr (std::is_same_v<T, NonlinearRecurrence>) return s.k() + 1;
                else return 1;
            },
            src);
        return width >= 3 ? 500 : 5000;
    }

    std::vector<std::uint64_t> checkpoints_for(std::uint64_t bound) const {
        if (!opt_.checkpoints.empty()) return parse_u64_list(opt_.checkpoints, "--checkpoints");
        std::vector<std::uint64_t> cps;
        for (std::uint64_t c : {100u, 1000u, 5000u})
            if (c < bound) cps.push_back(c);
        cps.push_back(bound);
        return cps;
    }

    void emit(const json& j, const std::function<void(std::ostream&)>& table = {}) const {
        if (opt_.format == "table") {
            if (table) table(out_);
            else render_flat(j);
        } else {
            out_ << j.dump(2) << '\n';
        }
    }

    int emit_report(const DivisorReport& r) const {
        emit(report_to_json(r), [&](std::ostream& os) { render_report(os, r); });
        if (r.status != ReportStatus::ok) return kVerificationFailed;
        if (!r.errors.empty()) return kBoundExceeded;
        return kSuccess;
    }

    void render_flat(const json& j) const {
        std::size_t width = 0;
        for (const auto& [k, v] : j.items()) width = std::max(width, k.size());
        for (const auto& [k, v] : j.items()) {
            out_ << std::left << std::setw(static_cast<int>(width)) << k << "  "
                 << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
        }
    }

    static void render_report(std::ostream& os, const DivisorReport& r) {
        os << "source         " << r.source << '\n'
           << "status         " << to_string(r.status) << '\n';
        if (!r.witness.empty()) os << "witness        " << r.witness << '\n';
        os << "bound          " << r.bound << '\n'
           << "has_zero_term  " << (r.has_zero_term ? "yes" : "no") << '\n'
           << "divisors       " << r.divisors.size() << '\n'
           << "non_divisors   " << r.non_divisors.size() << '\n';
        os << '\n' << std::setw(10) << "p" << std::setw(12) << "first_n" << '\n';
        for (const auto& d : r.divisors) os << std::setw(10) << d.p << std::setw(12) << d.first_n << '\n';
        if (!r.non_divisors.empty()) {
            os << "\nnon-divisors:";
            for (auto p : r.non_divisors) os << ' ' << p;
            os << '\n';
        }
        if (!r.excluded.empty()) {
            os << "\nexcluded:";
            for (auto p : r.excluded) os << ' ' << p;
            os << '\n';
        }
        for (const auto& e : r.errors) os << "error p=" << e.p << ": " << e.reason << '\n';
        if (!r.checkpoints.empty()) {
            os << '\n' << std::setw(10) << "bound" << std::setw(12) << "count" << '\n';
            for (const auto& c : r.checkpoints) os << std::setw(10) << c.bound << std::setw(12) << c.count << '\n';
        }
        for (const auto& line : r.trace) os << "trace: " << line << '\n';
    }

    static json list(const std::vector<BigInt>& v) {
        json a = json::array();
        for (const auto& x : v) a.push_back(bigint_to_json(x));
        return a;
    }

    static json poly_json(const IntPoly& p) { return list(std::vector<BigInt>(p.coeffs().begin(), p.coeffs().end())); }

    static json cert_json(const PeriodCertificate& c) {
        return {{"modulus", bigint_to_json(c.modulus)},
                {"preperiod", c.preperiod},
                {"period", c.period},
                {"cycle_residue_states", c.cycle_residue_states}};
    }

    int terms() const {
        SequenceSource src = source();
        emit({{"source", describe(src)}, {"terms", list(evaluate(src, opt_.n_max))}});
        return kSuccess;
    }

    int gf() const {
        RationalGF r = generating_function(linear());
        emit({{"f", poly_json(r.numerator)}, {"g", poly_json(r.denominator)}});
        return kSuccess;
    }

    int minimal() const {
        LinearRecurrence rec = linear();
        LinearRecurrence m = minimal_order(rec);
        emit({{"input_order", rec.order()}, {"order", m.order()}, {"coeffs", list(m.coeffs())},
              {"initial", list(m.initial())}});
        return kSuccess;
    }

    int degenerate() const {
        LinearRecurrence m = minimal_order(linear());
        DegeneracyVerdict v = is_degenerate(m);
        json j = {{"verdict", v.degenerate ? "DEGENERATE" : "NON_DEGENERATE"}, {"order", m.order()},
                  {"ratio_poly", poly_json(v.ratio_poly)}};
        if (v.witness) j["witness"] = "Phi_" + std::to_string(*v.witness);
        emit(j);
        return kSuccess;
    }

    int phi() const {
        if (opt_.g.empty()) throw UsageError("--g is required");
        if (opt_.b < 1) throw UsageError("--b must be positive");
        IntPoly r = phi_b(parse_poly(opt_.g), opt_.b);
        if (opt_.format == "json") emit({{"phi_b", poly_json(r)}});
        else out_ << r.to_string() << '\n';
        return kSuccess;
    }

    int subseq() const {
        if (opt_.b < 1) throw UsageError("--b must be positive");
        SubsequenceRecurrence s = subsequence_recurrence(linear(), opt_.c, opt_.b);
        emit({{"coeffs", list(s.recurrence.coeffs())}, {"initial", list(s.recurrence.initial())},
              {"characteristic", poly_json(s.recurrence.characteristic())},
              {"minimal_order", s.minimal_order}, {"minimality_lost", s.minimality_lost}});
        return kSuccess;
    }

    int period() const {
        emit(cert_json(period_mod(source(), modulus("--m"), limits())));
        return kSuccess;
    }

    int null_divisor() const {
        BigInt m = modulus("--m");
        emit({{"modulus", bigint_to_json(m)}, {"null_divisor", is_null_divisor(source(), m, limits())}});
        return kSuccess;
    }

    int prime_idx() const {
        if (opt_.prime.empty()) throw UsageError("--p is required");
        BigInt p = parse_bigint(opt_.prime, "--p");
        if (!is_prime(p)) throw UsageError("--p must be prime");
        PrimeIndexResult r = prime_index(source(), p, opt_.j_cap, limits());
        json j = {{"p", bigint_to_json(p)}, {"j_cap", opt_.j_cap}};
        if (r.cap_exceeded) j["index"] = "CAP_EXCEEDED";
        else j["index"] = r.index;
        if (r.coeff_gcd) {
            j["coeff_gcd"] = bigint_to_json(*r.coeff_gcd);
            j["gcd_hypothesis"] = *r.coeff_gcd == 1;
        }
        if (!r.note.empty()) j["note"] = r.note;
        emit(j);
        return r.cap_exceeded ? kBoundExceeded : kSuccess;
    }

    int divisors() const {
        SequenceSource src = source();
        std::uint64_t bound = bound_for(src);
        std::vector<std::uint64_t> cps = opt_.checkpoints.empty() ? std::vector<std::uint64_t>{}
                                                                  : parse_u64_list(opt_.checkpoints, "--checkpoints");
        return emit_report(enumerate_prime_divisors(src, bound, cps, divisor_options()));
    }

    int verify_schur() const {
        if (opt_.poly.empty()) throw UsageError("--poly is required");
        IntPoly f = parse_poly(opt_.poly);
        std::uint64_t bound = opt_.bound ? opt_.bound : 5000;
        return emit_report(schur_profile(f, bound, checkpoints_for(bound), divisor_options()));
    }

    int verify_linear() const {
        LinearRecurrence rec = linear();
        std::uint64_t bound = bound_for(rec);
        InfinitudeOptions o;
        o.divisors = divisor_options();
        o.trace = opt_.trace;
        return emit_report(verify_infinitude(rec, bound, checkpoints_for(bound), o));
    }

    int verify_generalized_cmd() const {
        SequenceSource src = source();
        auto* rec = std::get_if<NonlinearRecurrence>(&src);
        if (!rec) throw UsageError("verify generalized needs a nonlinear sequence spec");
        std::uint64_t bound = bound_for(src);
        GrowthWindow w;
        w.length = opt_.growth_window;
        return emit_report(verify_generalized(*rec, bound, checkpoints_for(bound), w, divisor_options()));
    }

    int verify_coprime() const {
        SequenceSource src = source();
        std::uint64_t bound = bound_for(src);
        return emit_report(coprime_prime_divisors(src, modulus("--m"), bound, checkpoints_for(bound), divisor_options()));
    }

    int scaling() const {
        LinearRecurrence rec = minimal_order(linear());
        ScalingReport cand = scaling_candidate(rec, opt_.s);
        BigInt t = opt_.t.empty() ? cand.t : parse_bigint(opt_.t, "--t");
        ScalingReport check = verify_scaling(rec, opt_.s, t, opt_.n_max);
        json j = {{"s", opt_.s}, {"t", bigint_to_json(t)}, {"candidate_t", bigint_to_json(cand.t)},
                  {"m", list(cand.m_coeffs)}, {"scaled", list(check.scaled_coeffs)}, {"coprime", check.coprime},
                  {"has_zero_coeff", cand.has_zero_coeff}, {"base_case_ok", check.base_case_ok.value_or(false)}};
        if (check.failure_witness) {
            j["failure_witness"] = {{"n", check.failure_witness->n},
                                    {"term", bigint_to_json(check.failure_witness->term)},
                                    {"required_power", bigint_to_json(check.failure_witness->required_power)}};
        }
        if (check.quotient_recurrence) {
            j["quotient"] = {{"coeffs", list(check.quotient_recurrence->coeffs())},
                             {"initial", list(check.quotient_recurrence->initial())}};
        }
        emit(j);
        return check.base_case_ok.value_or(false) ? kSuccess : kVerificationFailed;
    }

    int strip() const {
        if (opt_.prime.empty()) throw UsageError("--p is required");
        StripOptions o;
        o.l_margin = opt_.l_margin;
        o.j_cap = opt_.j_cap;
        o.limits = limits();
        if (opt_.scan_bound) o.limits.state_cap = opt_.scan_bound;
        BigInt p = parse_bigint(opt_.prime, "--p");
        StripResult r = strip_prime(linear(), p, o);
        emit({{"p", bigint_to_json(p)},
              {"index", r.index},
              {"l", r.l},
              {"period", r.certificate.period},
              {"preperiod", r.certificate.preperiod},
              {"offset", r.spec.offset},
              {"step", r.spec.step},
              {"divisor", bigint_to_json(r.spec.divisor_extracted)},
              {"identity", r.identity}});
        return kSuccess;
    }

    int topo_intersect() const {
        if (opt_.classes.size() != 2) throw UsageError("topology intersect needs exactly two --class A:B");
        std::vector<CongruenceClass> cs;
        for (const auto& text : opt_.classes) {
            auto colon = text.find(':');
            if (colon == std::string::npos) throw UsageError("--class expects A:B, got '" + text + "'");
            BigInt a = parse_bigint(text.substr(0, colon), "--class");
            BigInt b = parse_bigint(text.substr(colon + 1), "--class");
            if (b < 1) throw UsageError("--class modulus must be positive");
            cs.emplace_back(a, b);
        }
        auto r = intersect(cs[0], cs[1]);
        if (r) emit({{"empty", false}, {"a", bigint_to_json(r->residue())}, {"b", bigint_to_json(r->modulus())}});
        else emit({{"empty", true}});
        return kSuccess;
    }

    int topo_witness() const {
        std::vector<BigInt> ps;
        std::stringstream ss(opt_.primes);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) continue;
            BigInt p = parse_bigint(item, "--primes");
            if (!is_prime(p)) throw UsageError("--primes: " + item + " is not prime");
            ps.push_back(p);
        }
        emit({{"primes", list(ps)}, {"witness", bigint_to_json(euclid_witness(ps))}});
        return kSuccess;
    }

    int topo_continuity() const {
        if (opt_.b < 1) throw UsageError("--b must be positive");
        emit(cert_json(continuity_certificate(source(), BigInt(static_cast<unsigned long>(opt_.b)), limits())));
        return kSuccess;
    }

private:
    Options& opt_;
    std::ostream& out_;
};

void add_spec(CLI::App* cmd, Options& o) {
    cmd->add_option("--spec", o.spec_path, "sequence spec JSON file");
    cmd->add_option("--json", o.spec_inline, "inline sequence spec JSON");
}

void add_bounds(CLI::App* cmd, Options& o) {
    cmd->add_option("--bound", o.bound, "prime bound (default 5000; 500 for order >= 3)");
    cmd->add_option("--checkpoints", o.checkpoints, "comma-separated checkpoint bounds");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Prime divisors of recurrence sequences", "recurseq"};
    app.footer(kFooter);
    app.require_subcommand(1);
    app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"auto", "json", "table"}));
    app.add_option("--jobs", opt.jobs, "worker threads for per-prime scans")->check(CLI::Range(1u, 1024u));
    app.add_option("--state-cap", opt.state_cap, "period-scan state cap");
    app.fallthrough();

    Runner runner(opt, out);
    std::function<int()> action;
    auto bind = [&](CLI::App* cmd, int (Runner::*fn)() const) {
        cmd->callback([&action, &runner, fn] { action = [&runner, fn] { return (runner.*fn)(); }; });
    };

    auto* terms = app.add_subcommand("terms", "exact terms a_0..a_n");
    add_spec(terms, opt);
    terms->add_option("--n", opt.n_max, "last index (default 20)");
    bind(terms, &Runner::terms);

    auto* gf = app.add_subcommand("gf", "generating function f/g");
    add_spec(gf, opt);
    bind(gf, &Runner::gf);

    auto* minimal = app.add_subcommand("minimal", "minimal-order recurrence");
    add_spec(minimal, opt);
    bind(minimal, &Runner::minimal);

    auto* degen = app.add_subcommand("degenerate", "root-of-unity degeneracy test");
    add_spec(degen, opt);
    bind(degen, &Runner::degenerate);

    auto* phib = app.add_subcommand("phi-b", "characteristic polynomial of step-b subsequences");
    phib->add_option("--g", opt.g, "characteristic polynomial, g(0) = 1")->required();
    phib->add_option("--b", opt.b, "step")->required();
    bind(phib, &Runner::phi);

    auto* subseq = app.add_subcommand("subseq", "recurrence of a_{c+bn}");
    add_spec(subseq, opt);
    subseq->add_option("--c", opt.c, "offset");
    subseq->add_option("--b", opt.b, "step")->required();
    bind(subseq, &Runner::subseq);

    auto* period = app.add_subcommand("period", "preperiod and period mod m");
    add_spec(period, opt);
    period->add_option("--m", opt.modulus, "modulus")->required();
    bind(period, &Runner::period);

    auto* nulld = app.add_subcommand("null-divisor", "does m divide all late terms");
    add_spec(nulld, opt);
    nulld->add_option("--m", opt.modulus, "modulus")->required();
    bind(nulld, &Runner::null_divisor);

    auto* pidx = app.add_subcommand("prime-index", "largest j with p^j a null divisor");
    add_spec(pidx, opt);
    pidx->add_option("--p", opt.prime, "prime")->required();
    pidx->add_option("--j-cap", opt.j_cap, "largest exponent tried (default 64)");
    bind(pidx, &Runner::prime_idx);

    auto* divs = app.add_subcommand("divisors", "prime divisors up to a bound");
    add_spec(divs, opt);
    add_bounds(divs, opt);
    divs->add_flag("--skip-zero-terms", opt.skip_zero, "look past exactly-zero terms");
    bind(divs, &Runner::divisors);

    auto* verify = app.add_subcommand("verify", "theorem desk checks");
    verify->require_subcommand(1);
    auto* schur = verify->add_subcommand("schur", "f(n) for a nonconstant integer polynomial");
    schur->add_option("--poly", opt.poly, "polynomial, ascending coefficients")->required();
    add_bounds(schur, opt);
    bind(schur, &Runner::verify_schur);
    auto* vlin = verify->add_subcommand("linear", "non-degenerate linear recurrence of order > 1");
    add_spec(vlin, opt);
    add_bounds(vlin, opt);
    vlin->add_flag("--trace", opt.trace, "include the reduction pipeline trace");
    bind(vlin, &Runner::verify_linear);
    auto* vgen = verify->add_subcommand("generalized", "a_{n+k+1} = +-a_n + f(...)");
    add_spec(vgen, opt);
    add_bounds(vgen, opt);
    vgen->add_option("--growth-window", opt.growth_window, "terms compared for growth (default 10)");
    bind(vgen, &Runner::verify_generalized_cmd);
    auto* vcop = verify->add_subcommand("coprime", "divisors of a sequence prime to m");
    add_spec(vcop, opt);
    add_bounds(vcop, opt);
    vcop->add_option("--m", opt.modulus, "modulus")->required();
    bind(vcop, &Runner::verify_coprime);

    auto* scal = app.add_subcommand("scaling", "coefficient-scaling reduction");
    add_spec(scal, opt);
    scal->add_option("--s", opt.s, "exponent s (default 1)");
    scal->add_option("--t", opt.t, "scaling factor (default: the candidate t)");
    scal->add_option("--n-max", opt.n_max, "terms checked (default 20)");
    bind(scal, &Runner::scaling);

    auto* strip = app.add_subcommand("strip-prime", "progression whose terms are prime to p after division");
    add_spec(strip, opt);
    strip->add_option("--p", opt.prime, "prime")->required();
    strip->add_option("--l-margin", opt.l_margin, "l = index + margin (default 1)");
    strip->add_option("--j-cap", opt.j_cap, "prime-index cap (default 64)");
    strip->add_option("--scan-bound", opt.scan_bound, "state cap for the scans");
    bind(strip, &Runner::strip);

    auto* topo = app.add_subcommand("topology", "congruence-class utilities");
    topo->require_subcommand(1);
    auto* inter = topo->add_subcommand("intersect", "Con(a1,b1) ∩ Con(a2,b2)");
    inter->add_option("--class", opt.classes, "class as A:B (twice)")->required();
    bind(inter, &Runner::topo_intersect);
    auto* wit = topo->add_subcommand("witness", "integer outside {1,-1} and every Con(0,p)");
    wit->add_option("--primes", opt.primes, "comma-separated primes");
    bind(wit, &Runner::topo_witness);
    auto* cont = topo->add_subcommand("continuity", "period certificate mod b");
    add_spec(cont, opt);
    cont->add_option("--b", opt.b, "modulus")->required();
    bind(cont, &Runner::topo_continuity);

    std::vector<std::string> argv_store{"recurseq"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_store) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsageError;
    }

    try {
        return action ? action() : kUsageError;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsageError;
    } catch (const SpecError& e) {
        err << e.what() << '\n';
        return kUsageError;
    } catch (const BoundExceeded& e) {
        err << "BOUND_EXCEEDED: " << e.what() << '\n';
        return kBoundExceeded;
    } catch (const PreconditionViolated& e) {
        err << "PRECONDITION: " << e.what() << '\n';
        return kVerificationFailed;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << '\n';
        return kUsageError;
    }
}

}  // namespace recurseq::cli
