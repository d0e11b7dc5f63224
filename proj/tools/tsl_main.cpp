// tsl — exact sumset / dilation / diameter / Fourier toolkit for
// interval-union sets on the circle and subsets of Z_p.
//
// Set literals: circle "(3/16,1/2];(15/16,1]", "T", "empty";
//               Z_p    "17:{1,2,3}" or "17:#b" (hex bitset);
//               real line (doubling/egm) "[0,1/10];[19/20,1]".
// All numeric flags are exact rationals ("1/10000"), never decimals.
//
// Exit codes: 0 success/verified, 1 counterexample or property violation,
//             2 invalid input, 3 sampling budget exhausted.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <exception>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "tsl/circle_set.hpp"
#include "tsl/freiman.hpp"
#include "tsl/ksumfree.hpp"
#include "tsl/rational.hpp"
#include "tsl/real_set.hpp"
#include "tsl/zp_set.hpp"

namespace {

using nlohmann::ordered_json;
using namespace tsl;

Rational parse_rat_arg(const std::string& text) {
    mpq_class q;
    try {
        q = mpq_class(text);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a rational: '" + text + "'");
    }
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    q.canonicalize();
    return Rational(q);
}

bool zp_literal(const std::string& text) { return text.find(':') != std::string::npos; }

std::string fmt_double(double x) {
    std::ostringstream os;
    os << std::setprecision(17) << x;
    return os.str();
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << '\n'; }

ordered_json circle_report(const SimpleSet& s, const std::vector<std::string>& warnings) {
    ordered_json j;
    j["set"] = to_literal(s);
    j["measure"] = s.measure().str();
    if (!warnings.empty()) j["warnings"] = warnings;
    return j;
}

ordered_json zp_report(const ZpSet& s) {
    ordered_json j;
    j["set"] = to_text(s);
    j["size"] = s.size();
    return j;
}

// shared state populated by CLI11 before the subcommand callback runs
struct Args {
    std::string set_a, set_b;
    long p = 0, k = 0, n = 1, n_max = 10, s = 0;
    std::string eps = "0", delta = "0";
    long long budget = 0;
    unsigned long long seed = 0;
    int jobs = 1;
    long exhaustive_limit = 0;
    std::string format = "json";
    bool timing = false;
    bool have_s = false;
    int rc = 0;
};

void run_sum(Args& a) {
    if (zp_literal(a.set_a) != zp_literal(a.set_b))
        throw std::invalid_argument("sum operands must share a domain");
    if (zp_literal(a.set_a)) {
        emit(zp_report(sumset_zp(parse_zp_set(a.set_a), parse_zp_set(a.set_b))));
        return;
    }
    std::vector<std::string> warn;
    const SimpleSet lhs = parse_circle_set(a.set_a, &warn);
    const SimpleSet rhs = parse_circle_set(a.set_b, &warn);
    emit(circle_report(sumset(lhs, rhs), warn));
}

void run_dilate(Args& a) {
    if (a.n < 1) throw std::invalid_argument("--n must be >= 1");
    if (zp_literal(a.set_a)) {
        emit(zp_report(dilate_zp(parse_zp_set(a.set_a), a.n)));
        return;
    }
    std::vector<std::string> warn;
    emit(circle_report(dilate(parse_circle_set(a.set_a, &warn), a.n), warn));
}

void run_complement(Args& a) {
    if (zp_literal(a.set_a)) {
        emit(zp_report(complement_zp(parse_zp_set(a.set_a))));
        return;
    }
    std::vector<std::string> warn;
    emit(circle_report(complement(parse_circle_set(a.set_a, &warn)), warn));
}

void run_diameter(Args& a) {
    if (a.n_max < 1) throw std::invalid_argument("--n-max must be >= 1");
    std::vector<std::pair<long, Rational>> rows;
    ordered_json j;
    if (zp_literal(a.set_a)) {
        const ZpSet b = parse_zp_set(a.set_a);
        j["set"] = to_text(b);
        for (long n = 1; n <= a.n_max; ++n) rows.emplace_back(n, n_diameter_zp(b, n));
    } else {
        const SimpleSet s = parse_circle_set(a.set_a);
        j["set"] = to_literal(s);
        for (long n = 1; n <= a.n_max; ++n) rows.emplace_back(n, n_diameter(s, n));
    }
    if (a.format == "csv") {
        std::cout << "n,diameter\n";
        for (const auto& [n, d] : rows) std::cout << n << ',' << d.str() << '\n';
        return;
    }
    ordered_json arr = ordered_json::array();
    for (const auto& [n, d] : rows) arr.push_back({{"n", n}, {"value", d.str()}});
    j["diameters"] = std::move(arr);
    emit(j);
}

void run_fourier(Args& a) {
    const ZpSet b = parse_zp_set(a.set_a);
    if (a.have_s) {
        ordered_json j;
        j["p"] = b.modulus();
        j["s"] = a.s;
        j["magnitude"] = fourier_mag(b, a.s);
        emit(j);
        return;
    }
    const auto reports = check_fourier_decay(b);
    bool all_ok = true;
    for (const auto& r : reports) all_ok = all_ok && r.satisfied;
    if (a.format == "csv") {
        std::cout << "s,magnitude,bound,satisfied\n";
        for (const auto& r : reports)
            std::cout << r.s << ',' << fmt_double(r.magnitude) << ',' << fmt_double(r.bound)
                      << ',' << (r.satisfied ? 1 : 0) << '\n';
    } else {
        ordered_json arr = ordered_json::array();
        for (const auto& r : reports)
            arr.push_back({{"s", r.s},
                           {"magnitude", r.magnitude},
                           {"bound", r.bound},
                           {"satisfied", r.satisfied}});
        ordered_json j;
        j["p"] = b.modulus();
        j["size"] = b.size();
        j["reports"] = std::move(arr);
        j["all_satisfied"] = all_ok;
        emit(j);
    }
    if (!all_ok) a.rc = 1;
}

void run_discretize(Args& a) {
    if (a.p < 2) throw std::invalid_argument("--p is required (>= 2)");
    const ZpSet b = discretize(parse_circle_set(a.set_a), a.p);
    ordered_json j = zp_report(b);
    j["density"] = (rat(b.size()) / rat(a.p)).str();
    emit(j);
}

int verdict_rc(const std::string& verdict) {
    if (verdict == "counterexample") return 1;
    if (verdict == "budget_exhausted") return 3;
    return 0;
}

void run_verify(Args& a, Certificate (*fn)(long, const ScanOptions&)) {
    ScanOptions opts;
    opts.exhaustive_limit = a.exhaustive_limit;
    opts.budget = a.budget;
    opts.seed = a.seed;
    opts.jobs = a.jobs;
    const Certificate cert = fn(a.p, opts);
    emit(a.timing ? cert.full_json() : cert.canonical_json());
    a.rc = verdict_rc(cert.verdict);
}

void run_ksf_check(Args& a) {
    if (a.k < 1) throw std::invalid_argument("--k must be >= 1");
    ordered_json j;
    bool free = false;
    if (zp_literal(a.set_a)) {
        const auto rep = is_k_sum_free_zp(parse_zp_set(a.set_a), a.k);
        free = rep.is_ksf;
        j["domain"] = "zp";
        j["k"] = rep.k;
        j["is_ksf"] = rep.is_ksf;
        if (rep.witness)
            j["witness"] = {(*rep.witness)[0], (*rep.witness)[1], (*rep.witness)[2]};
    } else {
        const auto rep = is_k_sum_free_T(parse_circle_set(a.set_a), a.k);
        free = rep.is_ksf;
        j["domain"] = "circle";
        j["k"] = rep.k;
        j["is_ksf"] = rep.is_ksf;
        if (rep.witness)
            j["witness"] = {(*rep.witness)[0].str(), (*rep.witness)[1].str(),
                            (*rep.witness)[2].str()};
    }
    emit(j);
    if (!free) a.rc = 1;
}

void run_ksf_max(Args& a) {
    const auto t0 = std::chrono::steady_clock::now();
    const MaxKsf r = a.exhaustive_limit > 0 ? max_ksf_zp(a.p, a.k, a.exhaustive_limit)
                                            : max_ksf_zp(a.p, a.k);
    const auto t1 = std::chrono::steady_clock::now();
    ordered_json j;
    j["p"] = a.p;
    j["k"] = a.k;
    j["max_size"] = r.size;
    j["density"] = (rat(r.size) / rat(a.p)).str();
    ordered_json wits = ordered_json::array();
    for (const auto& w : r.witnesses) wits.push_back(to_text(w));
    j["witnesses_canonical"] = std::move(wits);
    j["nodes_expanded"] = r.nodes_expanded;
    if (a.timing)
        j["wall_ms"] =
            std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    emit(j);
}

void run_ksf_bound(Args& a) {
    const Rational eps = parse_rat_arg(a.eps);
    std::string warning;
    const Rational upper = dk_upper_bound(a.k, eps, &warning);
    ordered_json j;
    j["k"] = a.k;
    j["eps"] = eps.str();
    j["extremal_density"] = rat(1, a.k + 2).str();  // attained by the known interval
    j["upper_bound"] = upper.str();
    if (!warning.empty()) j["warning"] = warning;
    emit(j);
}

void run_doubling(Args& a) {
    const RealSimpleSet s = parse_real_set(a.set_a);
    const auto d = doubling_structure(s, parse_rat_arg(a.eps));
    ordered_json j;
    j["n"] = d.n;
    j["interval"] = to_literal(d.interval);
    j["interval_measure"] = d.interval_measure.str();
    ordered_json pieces = ordered_json::array();
    for (const auto& piece : d.pieces) pieces.push_back(to_literal(piece));
    j["pieces"] = std::move(pieces);
    ordered_json alphas = ordered_json::array();
    for (const auto& alpha : d.alphas) alphas.push_back(alpha.str());
    j["alphas"] = std::move(alphas);
    j["d0"] = d.d0.str();
    j["dn"] = d.dn.str();
    j["window"] = {d.j_lo.str(), d.j_hi.str()};
    emit(j);
}

void run_egm(Args& a) {
    const RealSimpleSet s = parse_real_set(a.set_a);
    const auto r = egm_interval(s, parse_rat_arg(a.delta), parse_rat_arg(a.eps));
    ordered_json j;
    j["interval"] = to_literal(r.interval);
    j["length"] = r.length.str();
    j["density"] = r.density.str();
    j["branch"] = r.branch;
    emit(j);
}

void run_structure_or_bound(Args& a) {
    const SimpleSet s = parse_circle_set(a.set_a);
    const auto res = structure_or_bound(s, a.k, parse_rat_arg(a.eps));
    ordered_json j;
    if (std::holds_alternative<KsfStructure>(res)) {
        const auto& st = std::get<KsfStructure>(res);
        j["case"] = "structure";
        j["n"] = st.n;
        j["interval"] = to_literal(st.interval);
        j["interval_measure"] = st.interval_measure.str();
        j["defect"] = st.defect.str();
    } else {
        const auto& b = std::get<KsfBound>(res);
        j["case"] = "bound";
        j["measure"] = b.mu.str();
        j["sumset_measure"] = b.mu_sumset.str();
        j["dilate_measure"] = b.mu_dilate.str();
        j["cap"] = b.cap.str();
    }
    emit(j);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "exact sumsets, dilations, covering diameters and Fourier data for\n"
        "interval-union sets on the circle and subsets of Z_p"};
    app.require_subcommand(1);
    Args a;

    const auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", a.format, "output format")
            ->check(CLI::IsMember({"json", "csv"}));
    };
    const auto add_scan_flags = [&](CLI::App* sub) {
        sub->add_option("--p", a.p, "prime modulus")->required();
        sub->add_option("--budget", a.budget, "sample count (0 = exhaustive)");
        sub->add_option("--seed", a.seed, "sampling seed");
        sub->add_option("--jobs", a.jobs, "worker count (deterministic merge)");
        sub->add_option("--exhaustive-limit", a.exhaustive_limit,
                        "largest p scanned exhaustively (env TSL_EXHAUSTIVE_LIMIT)");
        sub->add_flag("--timing", a.timing, "include wall_ms in the report");
    };

    auto* sum = app.add_subcommand("sum", "Minkowski sum of two sets");
    sum->add_option("a", a.set_a, "first set literal")->required();
    sum->add_option("b", a.set_b, "second set literal")->required();
    sum->callback([&] { run_sum(a); });

    auto* dil = app.add_subcommand("dilate", "image of a set under x -> n x");
    dil->add_option("a", a.set_a, "set literal")->required();
    dil->add_option("--n", a.n, "dilation factor (>= 1)")->required();
    dil->callback([&] { run_dilate(a); });

    auto* comp = app.add_subcommand("complement", "complement of a set");
    comp->add_option("a", a.set_a, "set literal")->required();
    comp->callback([&] { run_complement(a); });

    auto* diam = app.add_subcommand("diameter",
                                    "covering diameter D_n of the n-fold dilates");
    diam->add_option("a", a.set_a, "set literal")->required();
    diam->add_option("--n-max", a.n_max, "largest n to report");
    add_format(diam);
    diam->callback([&] { run_diameter(a); });

    auto* fou = app.add_subcommand("fourier",
                                   "Fourier magnitudes of a Z_p set (all s, or one --s)");
    fou->add_option("a", a.set_a, "Z_p set literal")->required();
    fou->add_option("--s", a.s, "single frequency");
    add_format(fou);
    fou->callback([&] {
        a.have_s = fou->count("--s") > 0;
        run_fourier(a);
    });

    auto* disc = app.add_subcommand("discretize", "exact grid snapshot {j : j/p in S}");
    disc->add_option("a", a.set_a, "circle set literal")->required();
    disc->add_option("--p", a.p, "grid modulus")->required();
    disc->callback([&] { run_discretize(a); });

    auto* vsz = app.add_subcommand("verify-sz",
                                   "scan single-set small-sumset covering conjecture");
    add_scan_flags(vsz);
    vsz->callback([&] { run_verify(a, &verify_conjecture_sz); });

    auto* vpair = app.add_subcommand("verify-pair",
                                     "scan two-set small-sumset covering conjecture");
    add_scan_flags(vpair);
    vpair->callback([&] { run_verify(a, &verify_conjecture_pair); });

    auto* vtrio = app.add_subcommand("verify-trio",
                                     "scan three-set small-sumset covering conjecture");
    add_scan_flags(vtrio);
    vtrio->callback([&] { run_verify(a, &verify_conjecture_trio); });

    auto* kchk = app.add_subcommand("ksf-check", "test a set for k-sum-freeness");
    kchk->add_option("a", a.set_a, "circle or Z_p set literal")->required();
    kchk->add_option("--k", a.k, "coefficient in x + y = k z")->required();
    kchk->callback([&] { run_ksf_check(a); });

    auto* kmax = app.add_subcommand("ksf-max",
                                    "largest k-sum-free subsets of Z_p (exact search)");
    kmax->add_option("--p", a.p, "prime modulus")->required();
    kmax->add_option("--k", a.k, "coefficient (>= 3)")->required();
    kmax->add_option("--exhaustive-limit", a.exhaustive_limit, "largest admissible p");
    kmax->add_flag("--timing", a.timing, "include wall_ms in the report");
    kmax->callback([&] { run_ksf_max(a); });

    auto* kbnd = app.add_subcommand("ksf-bound",
                                    "density bounds for k-sum-free circle sets");
    kbnd->add_option("--k", a.k, "coefficient (>= 3)")->required();
    kbnd->add_option("--eps", a.eps, "rational epsilon, e.g. 1/10000");
    kbnd->callback([&] { run_ksf_bound(a); });

    auto* kstr = app.add_subcommand(
        "ksf-structure", "structure-or-bound dichotomy for a k-sum-free circle set");
    kstr->add_option("a", a.set_a, "circle set literal")->required();
    kstr->add_option("--k", a.k, "coefficient (>= 3)")->required();
    kstr->add_option("--eps", a.eps, "rational epsilon in [0, 1/10000]");
    kstr->callback([&] { run_structure_or_bound(a); });

    auto* dbl = app.add_subcommand("doubling",
                                   "piece decomposition of a real set of doubling < 3+eps");
    dbl->add_option("a", a.set_a, "real set literal (normalized: inf 0, sup 1)")
        ->required();
    dbl->add_option("--eps", a.eps, "rational epsilon in [0, 1/10000]");
    dbl->callback([&] { run_doubling(a); });

    auto* egm = app.add_subcommand("egm",
                                   "dense short interval inside a set of doubling < 4");
    egm->add_option("a", a.set_a, "real set literal")->required();
    egm->add_option("--delta", a.delta, "rational doubling slack")->required();
    egm->add_option("--eps", a.eps, "rational epsilon");
    egm->callback([&] { run_egm(a); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return a.rc;
}
