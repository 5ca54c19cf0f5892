// Copyright 2026 The repsym Authors
// SPDX-License-Identifier: Apache-2.0

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "repsym/bell.hpp"
#include "repsym/deformed.hpp"
#include "repsym/error.hpp"
#include "repsym/multigen.hpp"
#include "repsym/partitions.hpp"
#include "repsym/qspectral.hpp"
#include "repsym/string2n.hpp"
#include "repsym/symfunc.hpp"
#include "repsym/vertex.hpp"
#include "suite.hpp"

using namespace repsym;
using suite::Json;
using suite::rat;

namespace {

constexpr int kMaxDegree = 30;

struct Common {
    int D = 10;
    std::string format = "json";
    std::string out;
    double tol = 1e-9;
};

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("-D,--deg", c.D, "truncation degree")->check(CLI::Range(0, kMaxDegree));
    sub->add_option("--format", c.format, "json or plain")->check(CLI::IsMember({"json", "plain"}));
    sub->add_option("--out", c.out, "write the report to this path");
    sub->add_option("--tol", c.tol, "tolerance for numeric checks");
}

std::vector<std::string> split(const std::string& s, char sep = ',') {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep))
        if (!item.empty()) out.push_back(item);
    return out;
}

std::vector<Rational> rationals(const std::string& s) {
    std::vector<Rational> out;
    for (const auto& t : split(s)) out.push_back(Rational::parse(t));
    return out;
}

std::vector<int> ints(const std::string& s) {
    std::vector<int> out;
    for (const auto& t : split(s)) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(t, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != t.size()) throw UsageError("not an integer: '" + t + "'");
        out.push_back(v);
    }
    return out;
}

Partition partition_of(const std::string& s) {
    auto v = ints(s);
    for (int x : v)
        if (x <= 0) throw UsageError("partition parts must be positive: '" + s + "'");
    std::sort(v.rbegin(), v.rend());
    return Partition(v);
}

Json rat_list(const std::vector<Rational>& v) {
    Json a = Json::array();
    for (const auto& r : v) a.push_back(rat(r));
    return a;
}

Json terms_json(const SymFunc& f) {
    Json a = Json::array();
    for (const auto& [lam, c] : f.terms()) a.push_back(Json{{"partition", lam.parts()}, {"coeff", rat(c)}});
    return a;
}

Json series_terms(const Series& s) {
    Json a = Json::array();
    for (const auto& [mono, c] : s.terms()) {
        std::vector<int> e(mono.exponents().begin(), mono.exponents().end());
        a.push_back(Json{{"exponents", e}, {"coeff", rat(c)}});
    }
    return a;
}

// ------------------------------------------------------------ deformation flags

struct FamilyFlags {
    std::string family = "schur";
    std::string q = "1/2", t = "1/3", alpha = "1", kappa = "2", xi;

    void add(CLI::App* sub) {
        sub->add_option("--family", family, "schur, hall-littlewood, jack, macdonald, kappa or explicit")
            ->check(CLI::IsMember({"schur", "hall-littlewood", "hl", "jack", "macdonald", "kappa", "explicit"}));
        sub->add_option("--q", q, "q (rational)");
        sub->add_option("--t", t, "t (rational)");
        sub->add_option("--alpha", alpha, "alpha (rational)");
        sub->add_option("--kappa", kappa, "kappa (integer)");
        sub->add_option("--xi", xi, "explicit xi_1,xi_2,... (rationals)");
    }
    DeformationParams params() const {
        if (family == "schur") return DeformationParams::schur();
        if (family == "hall-littlewood" || family == "hl") return DeformationParams::hall_littlewood(Rational::parse(t));
        if (family == "jack") return DeformationParams::jack(Rational::parse(alpha));
        if (family == "macdonald") return DeformationParams::macdonald(Rational::parse(q), Rational::parse(t));
        if (family == "kappa")
            return DeformationParams::kappa_family(Rational::parse(q), Rational::parse(kappa), Rational::parse(alpha));
        if (xi.empty()) throw UsageError("--family explicit needs --xi");
        return DeformationParams::explicit_sequence(rationals(xi));
    }
};

Json params_json(const DeformationParams& p) {
    Json j{{"family", p.family_name()}};
    switch (p.kind) {
        case Family::hall_littlewood: j["t"] = rat(p.t); break;
        case Family::jack: j["alpha"] = rat(p.alpha); break;
        case Family::macdonald:
            j["q"] = rat(p.q);
            j["t"] = rat(p.t);
            break;
        case Family::kappa:
            j["q"] = rat(p.q);
            j["kappa"] = rat(p.kappa);
            j["alpha"] = rat(p.alpha);
            break;
        case Family::explicit_xi: j["xi"] = rat_list(p.xi); break;
    }
    return j;
}

// ------------------------------------------------------------ output

struct Report {
    Json inputs = Json::object(), result = Json::object(), checks = Json::object();

    bool ok() const {
        for (const auto& [k, v] : checks.items())
            if (v.is_boolean() && !v.get<bool>()) return false;
        return true;
    }
};

void flatten(const Json& j, const std::string& path, std::ostream& os) {
    if (j.is_object() && !j.empty()) {
        for (const auto& [k, v] : j.items()) flatten(v, path.empty() ? k : path + "." + k, os);
        return;
    }
    os << path << " = " << j.dump() << "\n";
}

int emit(const Report& r, const Common& c) {
    Json doc;
    doc["inputs"] = r.inputs;
    doc["result"] = r.result;
    doc["checks"] = r.checks;
    std::ostringstream os;
    if (c.format == "plain") flatten(doc, "", os);
    else os << doc.dump(2) << "\n";
    if (c.out.empty()) {
        std::cout << os.str();
    } else {
        std::ofstream f(c.out, std::ios::binary);
        if (!f) throw UsageError("cannot write " + c.out);
        f << os.str();
    }
    return r.ok() ? 0 : 2;
}

// ------------------------------------------------------------ subcommands

Report run_partitions(int n, const std::string& multi, int parts, bool distinct) {
    Report r;
    if (!multi.empty()) {
        MultiIndex k(ints(multi));
        r.inputs = Json{{"multi", k.components()}, {"parts", parts}, {"distinct", distinct}};
        auto mps = enumerate_multipartitions(k, {.parts = parts, .distinct = distinct});
        Json list = Json::array();
        for (const auto& mp : mps) {
            Json one = Json::array();
            for (const auto& idx : mp) one.push_back(idx.components());
            list.push_back(one);
        }
        r.result = Json{{"count", mps.size()}, {"multipartitions", list}};
        return r;
    }
    if (n < 0 || n > kMaxDegree) throw UsageError("--n must be between 0 and 30");
    r.inputs = Json{{"n", n}};
    auto ps = enumerate_partitions(n);
    Json list = Json::array();
    for (const auto& p : ps) list.push_back(p.parts());
    r.result = Json{{"count", ps.size()}, {"partitions", list}};
    auto B = euler_expand(std::vector<Rational>(static_cast<std::size_t>(n), Rational(1)), n);
    r.checks["count_matches_euler_product"] = B[n] == Rational(static_cast<long>(ps.size()));
    r.checks["count_matches_recurrence"] = partition_count(n) == static_cast<long>(ps.size());
    return r;
}

Report run_multigen(int m, const std::string& sign, const Common& c) {
    if (m < 1 || m > 4) throw UsageError("--m must be between 1 and 4");
    Report r;
    r.inputs = Json{{"m", m}, {"sign", sign}, {"deg", c.D}};
    MultiGenConfig cfg{m, c.D, true};
    GenSign gs = sign == "F" ? GenSign::F : GenSign::G;
    Series s = gs == GenSign::F ? expand_F(cfg) : expand_G(cfg);
    Json terms = Json::array();
    for (const auto& [mono, coeff] : s.terms()) {
        std::vector<int> x;
        for (std::size_t i = 1; i < mono.size(); ++i) x.push_back(mono[i]);
        terms.push_back(Json{{"z", mono[0]}, {"x", x}, {"coeff", rat(coeff)}});
    }
    r.result = Json{{"variables", multigen_ring(cfg)->variables()}, {"terms", terms}};
    r.checks["exp_form_matches_product"] = s == expand_product(cfg, gs);
    if (c.D <= 8) {
        bool ok = true;
        for (const auto& [mono, coeff] : s.terms()) {
            std::vector<int> x;
            for (std::size_t i = 1; i < mono.size(); ++i) x.push_back(mono[i]);
            MultiIndex k(x);
            if (k.is_zero()) continue;
            auto n = enumerate_multipartitions(k, {.parts = mono[0], .distinct = gs == GenSign::G}).size();
            ok = ok && coeff == Rational(static_cast<long>(n));
        }
        r.checks["coefficients_match_brute_force"] = ok;
    }
    return r;
}

Report run_bell(int n, const std::string& g, int random, unsigned seed) {
    Report r;
    if (n < 0 || n > kMaxDegree) throw UsageError("--n must be between 0 and 30");
    if (random > 0) {
        r.inputs = Json{{"n", n}, {"random", random}, {"seed", seed}};
        std::mt19937 gen(seed);
        std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
        bool ok = true;
        Json samples = Json::array();
        for (int s = 0; s < random; ++s) {
            std::vector<Rational> args;
            for (int i = 0; i < n; ++i) args.push_back(Rational(num(gen), den(gen)));
            std::span<const Rational> sp(args);
            Rational a = bell_recurrence(n, sp), b = bell_faa_di_bruno(n, sp);
            ok = ok && a == b;
            samples.push_back(Json{{"g", rat_list(args)}, {"value", rat(a)}});
        }
        r.result = Json{{"samples", samples}};
        r.checks["recurrence_equals_faa_di_bruno"] = ok;
        return r;
    }
    auto args = rationals(g);
    r.inputs = Json{{"n", n}, {"g", rat_list(args)}};
    std::span<const Rational> sp(args);
    Rational a = bell_recurrence(n, sp), b = bell_faa_di_bruno(n, sp);
    r.result = Json{{"Y", rat(a)}, {"recurrence", rat(a)}, {"faa_di_bruno", rat(b)}};
    r.checks["recurrence_equals_faa_di_bruno"] = a == b;
    return r;
}

Report run_qseries(const std::string& a, bool invert, const Common& c) {
    Report r;
    std::vector<Rational> in = a.empty() ? std::vector<Rational>(static_cast<std::size_t>(c.D), Rational(1)) : rationals(a);
    bool all_ones = a.empty();
    r.inputs = Json{{"deg", c.D}, {invert ? "B" : "a", rat_list(in)}, {"mode", invert ? "invert" : "expand"}};
    if (invert) {
        if (static_cast<int>(in.size()) < c.D + 1) throw UsageError("--invert needs B_0..B_D");
        auto out = euler_invert(in, c.D);
        r.result = Json{{"exponents", rat_list(out)}};
        auto back = euler_expand(out, c.D);
        r.checks["round_trip"] = std::equal(back.begin(), back.end(), in.begin());
        return r;
    }
    if (static_cast<int>(in.size()) < c.D) in.resize(static_cast<std::size_t>(c.D), Rational(0));
    auto B = euler_expand(in, c.D);
    r.result = Json{{"coefficients", rat_list(B)}};
    auto back = euler_invert(B, c.D);
    r.checks["round_trip"] = std::equal(back.begin(), back.end(), in.begin());
    if (all_ones) {
        bool ok = true;
        for (int n = 0; n <= c.D; ++n) ok = ok && B[n] == Rational(partition_count(n));
        r.checks["partition_counts"] = ok;
    }
    return r;
}

Report run_ruelle(const std::string& a, const std::string& eps, int ell, const std::string& theta, bool plus,
                  const Common& c) {
    Report r;
    SpectralParams p;
    Rational ar = Rational::parse(a);
    p.a = ar.raw().get_d();
    p.eps = parse_complex(eps);
    p.ell = ell;
    p.theta = parse_complex(theta);
    r.inputs = Json{{"a", rat(ar)}, {"eps", eps}, {"ell", ell}, {"theta", theta}, {"plus", plus}};
    auto res = plus ? ruelle_plus_product(p, c.tol) : ruelle_product(p, c.tol);
    r.result = Json{{"value_re", res.value.real()}, {"value_im", res.value.imag()}, {"s_re", res.s.real()},
                    {"s_im", res.s.imag()}, {"factors", res.factors}};
    // the same product as a q-Pochhammer symbol (b; q^a)_inf
    Complex q = std::exp(Complex(0, 2 * std::numbers::pi) * p.theta);
    Complex b = std::pow(q, p.a * ell + p.eps);
    Complex poch = pochhammer_inf(plus ? -b : b, std::pow(q, p.a), c.tol * 1e-3);
    r.result["pochhammer_re"] = poch.real();
    r.result["pochhammer_im"] = poch.imag();
    r.checks["matches_pochhammer"] = std::abs(poch - res.value) <= 10 * c.tol;
    return r;
}

Report run_symfunc(const std::string& from, const std::string& to, const std::vector<std::string>& terms) {
    Report r;
    Basis bf = parse_basis(from), bt = parse_basis(to);
    SymFunc f(bf);
    Json in = Json::array();
    if (terms.empty()) throw UsageError("give at least one --term PARTS[=COEFF]");
    for (const auto& t : terms) {
        auto eq = t.find('=');
        Partition lam = partition_of(t.substr(0, eq));
        if (lam.weight() > kMaxDegree) throw UsageError("weight above 30");
        Rational c = eq == std::string::npos ? Rational(1) : Rational::parse(t.substr(eq + 1));
        f += SymFunc::element(bf, lam, c);
        in.push_back(Json{{"partition", lam.parts()}, {"coeff", rat(c)}});
    }
    r.inputs = Json{{"from", basis_name(bf)}, {"to", basis_name(bt)}, {"terms", in}};
    SymFunc g = convert(f, bt);
    r.result = Json{{"basis", basis_name(bt)}, {"terms", terms_json(g)}};
    r.checks["round_trip"] = convert(g, bf).terms() == f.terms();
    r.checks["via_power_sums"] = convert(convert(f, Basis::p), bt).terms() == g.terms();
    return r;
}

Report run_cauchy(const FamilyFlags& fam, int nx, int ny, const std::string& tau, const std::string& eta,
                  const Common& c) {
    Report r;
    DeformationParams p = fam.params();
    r.inputs = Json{{"params", params_json(p)}, {"deg", c.D}, {"nx", nx}, {"ny", ny}};
    if (nx < 0 || ny < 0 || nx + ny > 8) throw UsageError("--nx, --ny must be non-negative with nx + ny <= 8");
    if (!tau.empty() || !eta.empty()) {
        Rational t = Rational::parse(tau.empty() ? "1" : tau), e = Rational::parse(eta.empty() ? "1" : eta);
        r.inputs["tau"] = rat(t);
        r.inputs["eta"] = rat(e);
        auto rep = replicated_cauchy_check(p, t, e, nx, ny, c.D);
        r.result = Json{{"status", rep.ok ? "ok" : "fail"}, {"max_degree_checked", c.D}};
        if (!rep.ok) r.result["counterexample"] = rep.counterexample;
        r.checks["kernel_power"] = rep.exp_ok;
        r.checks["scaled_kernel"] = rep.scaled_ok;
        if (rep.product_checked) r.checks["product_power"] = rep.product_ok;
        return r;
    }
    auto rep = deformed_cauchy_check(p, nx, ny, c.D);
    r.result = Json{{"status", rep.ok ? "ok" : "fail"}, {"max_degree_checked", rep.max_degree_checked}};
    if (!rep.ok) r.result["counterexample"] = rep.counterexample;
    r.checks["sum_PQ"] = rep.pq_ok;
    r.checks["exp_kernel"] = rep.exp_ok;
    if (rep.product_checked) r.checks["product_kernel"] = rep.product_ok;
    return r;
}

Report run_deformed(const FamilyFlags& fam, int n, const std::string& ext) {
    if (n < 0 || n > 10) throw UsageError("--n must be between 0 and 10");
    Report r;
    DeformationParams p = fam.params();
    auto e = ext == "conjugate" ? DominanceExtension::conjugate : DominanceExtension::lexicographic;
    r.inputs = Json{{"params", params_json(p)}, {"n", n}, {"extension", ext}};
    DeformedBasis basis = make_basis(p, n, e);
    Json list = Json::array();
    bool tri = true, orth = true, dual = true;
    for (const auto& lam : basis.order(n)) {
        Json mono = Json::array();
        for (const auto& [mu, c] : basis.P_monomial(lam)) {
            mono.push_back(Json{{"partition", mu.parts()}, {"coeff", rat(c)}});
            tri = tri && dominates(lam, mu);
        }
        tri = tri && basis.P_monomial(lam).at(lam) == Rational(1);
        list.push_back(Json{{"lambda", lam.parts()}, {"P_monomial", mono}, {"b", rat(basis.b(lam))}});
        SymFunc P = to_symfunc(basis.P(lam));
        for (const auto& mu : basis.order(n)) {
            dual = dual && deformed_inner(P, to_symfunc(basis.Q(mu)), p) == Rational(lam == mu ? 1 : 0);
            if (!(lam == mu)) orth = orth && deformed_inner(P, to_symfunc(basis.P(mu)), p).is_zero();
        }
    }
    Json order = Json::array();
    for (const auto& lam : basis.order(n)) order.push_back(lam.parts());
    r.result = Json{{"order", order}, {"basis", list}};
    r.checks["unitriangular"] = tri;
    r.checks["orthogonal"] = orth;
    r.checks["P_Q_dual"] = dual;
    return r;
}

struct VertexFlags {
    std::string kind = "empty", tau = "1", eta = "1", mu, nu, r = "1/3";
    std::string a = "1", b = "0", t = "1", e = "0";
    int nx = 1, ny = 0, nw = 1, nz = 0;
};

Report run_vertex(const FamilyFlags& fam, const VertexFlags& v, const Common& c) {
    Report r;
    DeformationParams p = fam.params();
    r.inputs = Json{{"kind", v.kind}, {"deg", c.D}};
    if (v.kind == "empty") {
        r.inputs["params"] = params_json(p);
        auto spec = VertexSpec::weighted({}, {}, p, {"p", "r"}, 2 * c.D);
        Series ps = Series::variable(spec.ring, "p"), rs = Series::variable(spec.ring, "r");
        Series S = vertex_trace(spec, ps, rs, c.D);
        Series expect = Series::zero(spec.ring);
        for (int n = 0; n <= c.D; ++n) expect += (ps * rs).pow(static_cast<long>(n)) * Rational(partition_count(n));
        r.result = Json{{"variables", spec.ring->variables()}, {"trace", series_terms(S)}};
        r.checks["partition_generating_function"] = S == expect;
        return r;
    }
    if (v.kind == "hl") {
        if (c.D > 6) throw UsageError("--kind hl supports --deg <= 6");
        Rational a = Rational::parse(v.a), b = Rational::parse(v.b), t = Rational::parse(v.t), e = Rational::parse(v.e);
        r.inputs.update(Json{{"a", rat(a)}, {"b", rat(b)}, {"t", rat(t)}, {"e", rat(e)}, {"nx", v.nx}, {"ny", v.ny},
                             {"nw", v.nw}, {"nz", v.nz}});
        if (v.nx + v.ny + v.nw + v.nz > 6) throw UsageError("at most 6 alphabet variables");
        auto rep = hl_trace_identity_check(a, b, t, e, v.nx, v.ny, v.nw, v.nz, c.D);
        r.result = Json{{"variables", rep.lhs.ring()->variables()}, {"lhs", series_terms(rep.lhs)},
                        {"first_mismatch", rep.first_mismatch}};
        r.checks["hall_littlewood_trace_identity"] = rep.ok;
        return r;
    }
    auto tau = rationals(v.tau), eta = rationals(v.eta);
    r.inputs.update(Json{{"params", params_json(p)}, {"tau", rat_list(tau)}, {"eta", rat_list(eta)}});
    if (v.kind == "matrix") {
        Partition mu = v.mu.empty() ? Partition() : partition_of(v.mu), nu = v.nu.empty() ? Partition() : partition_of(v.nu);
        if (mu.weight() > 6 || nu.weight() > 6) throw UsageError("--mu, --nu up to weight 6");
        r.inputs["mu"] = mu.parts();
        r.inputs["nu"] = nu.parts();
        auto spec = VertexSpec::graded(tau, eta, p, mu.weight() + nu.weight());
        auto me = vertex_matrix_element(mu, nu, spec);
        r.result = Json{{"variables", spec.ring->variables()}, {"value", series_terms(me.value)}};
        r.checks["direct_equals_skew_expansion"] = me.consistent;
        return r;
    }
    if (v.kind == "readings") {
        if (c.D > 8) throw UsageError("--kind readings supports --deg <= 8");
        Rational rr = Rational::parse(v.r);
        r.inputs["r"] = rat(rr);
        auto spec = VertexSpec::weighted(tau, eta, p, {"p"}, c.D);
        Series ps = Series::variable(spec.ring, "p");
        auto rd = trace_functional_readings(spec, ps, rr, c.D);
        r.result = Json{{"first_slot_rp2", rd.first_slot_rp2}, {"second_slot_rp2", rd.second_slot_rp2}};
        return r;
    }
    throw UsageError("--kind must be empty, hl, matrix or readings");
}

Report run_string(const std::string& xs, int N, double wmax, int count, double step, const std::string& route,
                  const Common& c) {
    Report r;
    double x = xs.find('/') != std::string::npos ? Rational::parse(xs).raw().get_d() : std::stod(xs);
    auto cfg = StringConfig::make(x, N);
    RootOptions o;
    o.step = step;
    o.route = route == "matrix" ? DispersionRoute::matrix : DispersionRoute::stable;
    r.inputs = Json{{"x", xs}, {"N", N}, {"omega_max", wmax}, {"count", count}, {"step", step}, {"route", route}};
    auto roots = eigenfrequencies(cfg, wmax, count, o);
    r.result = Json{{"epsilon", cfg.epsilon()}, {"roots", roots}};
    RootOptions other = o;
    other.route = o.route == DispersionRoute::stable ? DispersionRoute::matrix : DispersionRoute::stable;
    auto alt = eigenfrequencies(cfg, wmax, count, other);
    auto inv = eigenfrequencies(StringConfig::make(1 / x, N), wmax, count, o);
    auto close = [&](const std::vector<double>& a, const std::vector<double>& b) {
        if (a.size() != b.size()) return false;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (std::abs(a[i] - b[i]) > std::max(c.tol, 1e-8)) return false;
        return true;
    };
    r.checks["dispersion_routes_agree"] = close(roots, alt);
    r.checks["inverse_x_same_spectrum"] = close(roots, inv);
    return r;
}

Report run_suite(int D, bool deg_given, unsigned seed, bool sentinel, int criterion, bool timings) {
    Report r;
    suite::Options o;
    o.seed = seed;
    o.sentinel = sentinel;
    auto t0 = std::chrono::steady_clock::now();
    std::vector<suite::Check> checks;
    if (criterion > 0) {
        o.D = deg_given ? D : suite::kFull;
        r.inputs = Json{{"criterion", criterion}, {"deg", o.D}, {"seed", seed}, {"sentinel", sentinel}};
        checks = suite::run_criterion(criterion, o).checks;
    } else {
        if (D > 12) throw UsageError("identity-suite: --deg must be <= 12");
        o.D = D;
        r.inputs = Json{{"deg", D}, {"seed", seed}, {"sentinel", sentinel}};
        checks = suite::identity_suite(o);
    }
    Json list = Json::array();
    long passed = 0;
    const suite::Check* first = nullptr;
    for (const auto& ch : checks) {
        list.push_back(suite::to_json(ch));
        r.checks[ch.name] = ch.ok;
        if (ch.ok) ++passed;
        else if (!first) first = &ch;
    }
    r.result = Json{{"passed", passed}, {"failed", static_cast<long>(checks.size()) - passed}, {"identities", list}};
    if (first) r.result["first_counterexample"] = Json{{"identity", first->name}, {"case", first->counterexample}};
    if (timings) {
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cerr << "identity-suite: " << checks.size() << " identities in " << s << " s\n";
    }
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"repsym: partitions, symmetric functions, deformed bases, vertex operators and string spectra"};
    app.require_subcommand(1);
    Common c;

    int n = 4, parts = -1;
    std::string multi;
    bool distinct = false;
    auto* partitions = app.add_subcommand("partitions", "enumerate partitions or multipartitions");
    partitions->add_option("--n", n, "weight");
    partitions->add_option("--multi", multi, "multipartite number k1,k2,...");
    partitions->add_option("--parts", parts, "exact number of parts for --multi (-1: any)");
    partitions->add_flag("--distinct", distinct, "distinct parts for --multi");

    int m = 2;
    std::string sign = "F";
    auto* multigen = app.add_subcommand("multigen-expand", "multipartite generating functions F or G");
    multigen->add_option("--m", m, "number of components");
    multigen->add_option("--sign", sign, "F or G")->check(CLI::IsMember({"F", "G"}));

    std::string g;
    int random = 0;
    unsigned seed = 1;
    auto* bell = app.add_subcommand("bell", "complete Bell polynomial by two routes");
    bell->add_option("--n", n, "index");
    bell->add_option("--g", g, "arguments g1,g2,... (rationals)");
    bell->add_option("--random", random, "number of random argument vectors instead of --g");
    bell->add_option("--seed", seed, "seed for --random");

    std::string a;
    bool invert = false;
    auto* qseries = app.add_subcommand("qseries-expand", "Euler product prod (1-q^n)^{-a_n} and its inverse");
    qseries->add_option("--a", a, "exponents a1,a2,... (default all 1); with --invert, B0,B1,...");
    qseries->add_flag("--invert", invert, "recover exponents from coefficients");

    std::string ra = "1", eps = "0", theta = "0+1i";
    int ell = 1;
    bool plus = false;
    auto* ruelle = app.add_subcommand("ruelle", "prod_{n>=ell} (1 -+ q^{a n + eps}), q = exp(2 pi i theta)");
    ruelle->add_option("--a", ra, "a (rational)");
    ruelle->add_option("--eps", eps, "eps, complex a+bi");
    ruelle->add_option("--ell", ell, "first index");
    ruelle->add_option("--theta", theta, "theta, complex a+bi");
    ruelle->add_flag("--plus", plus, "use 1 + q^{a n + eps}");

    std::string from = "s", to = "p";
    std::vector<std::string> terms;
    auto* symconv = app.add_subcommand("symfunc-convert", "change of basis among p, e, h, m, s");
    symconv->add_option("--from", from, "source basis");
    symconv->add_option("--to", to, "target basis");
    symconv->add_option("--term", terms, "PARTS[=COEFF], e.g. 2,1=1/2 (repeatable)");

    FamilyFlags fam;
    int nx = 2, ny = 2;
    std::string tau, eta;
    auto* cauchy = app.add_subcommand("cauchy-check", "deformed Cauchy identity, optionally replicated");
    fam.add(cauchy);
    cauchy->add_option("--nx", nx, "variables in X");
    cauchy->add_option("--ny", ny, "variables in Y");
    cauchy->add_option("--tau", tau, "replication of X");
    cauchy->add_option("--eta", eta, "replication of Y");

    std::string ext = "lexicographic";
    auto* deformed = app.add_subcommand("deformed-basis", "Gram-Schmidt basis P_lambda at one weight");
    fam.add(deformed);
    deformed->add_option("--n", n, "weight");
    deformed->add_option("--ext", ext, "dominance extension")->check(CLI::IsMember({"lexicographic", "conjugate"}));

    VertexFlags vf;
    auto* vertex = app.add_subcommand("vertex-trace", "vertex operator traces and matrix elements");
    fam.add(vertex);
    vertex->add_option("--kind", vf.kind, "empty, hl, matrix or readings")
        ->check(CLI::IsMember({"empty", "hl", "matrix", "readings"}));
    vertex->add_option("--tau", vf.tau, "creation weights");
    vertex->add_option("--eta", vf.eta, "annihilation weights");
    vertex->add_option("--mu", vf.mu, "bra partition for --kind matrix");
    vertex->add_option("--nu", vf.nu, "ket partition for --kind matrix");
    vertex->add_option("--r", vf.r, "r for --kind readings");
    vertex->add_option("--ha", vf.a, "replication of X for --kind hl");
    vertex->add_option("--hb", vf.b, "replication of Y for --kind hl");
    vertex->add_option("--ht", vf.t, "replication of W for --kind hl");
    vertex->add_option("--he", vf.e, "replication of Z for --kind hl");
    vertex->add_option("--nx", vf.nx, "variables in X");
    vertex->add_option("--ny", vf.ny, "variables in Y");
    vertex->add_option("--nw", vf.nw, "variables in W");
    vertex->add_option("--nz", vf.nz, "variables in Z");

    std::string xs = "1", route = "stable";
    int N = 1, count = 0;
    double wmax = 10, step = 0.01;
    auto* string = app.add_subcommand("string-spectrum", "eigenfrequencies of the 2N-piece string");
    string->add_option("--x", xs, "tension ratio (rational or decimal)");
    string->add_option("--N", N, "number of piece pairs");
    string->add_option("--omega-max", wmax, "upper end of the scan");
    string->add_option("--count", count, "keep at most this many roots (0: all)");
    string->add_option("--step", step, "scan step");
    string->add_option("--route", route, "stable or matrix")->check(CLI::IsMember({"stable", "matrix"}));

    bool sentinel = false, timings = false;
    int criterion = 0;
    auto* suite_cmd = app.add_subcommand("identity-suite", "run every identity check at one truncation");
    suite_cmd->add_option("--seed", seed, "seed for sampled parameters");
    suite_cmd->add_flag("--sentinel", sentinel, "flip a sign on purpose; the suite must fail");
    suite_cmd->add_option("--criterion", criterion, "run one acceptance criterion (1-9) instead")
        ->check(CLI::Range(1, 9));
    suite_cmd->add_flag("--timings", timings, "report elapsed time on stderr");

    for (auto* sub : app.get_subcommands({})) add_common(sub, c);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        std::cerr << app.help();
        return 1;
    }

    try {
        Report r;
        if (*partitions) r = run_partitions(n, multi, parts, distinct);
        else if (*multigen) r = run_multigen(m, sign, c);
        else if (*bell) r = run_bell(n, g, random, seed);
        else if (*qseries) r = run_qseries(a, invert, c);
        else if (*ruelle) r = run_ruelle(ra, eps, ell, theta, plus, c);
        else if (*symconv) r = run_symfunc(from, to, terms);
        else if (*cauchy) r = run_cauchy(fam, nx, ny, tau, eta, c);
        else if (*deformed) r = run_deformed(fam, n, ext);
        else if (*vertex) r = run_vertex(fam, vf, c);
        else if (*string) r = run_string(xs, N, wmax, count, step, route, c);
        else r = run_suite(c.D, suite_cmd->count("--deg") > 0, seed, sentinel, criterion, timings);
        return emit(r, c);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
