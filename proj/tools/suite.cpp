// Copyright 2026 The repsym Authors
// SPDX-License-Identifier: Apache-2.0

#include "suite.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <span>

#include "repsym/bell.hpp"
#include "repsym/deformed.hpp"
#include "repsym/error.hpp"
#include "repsym/multigen.hpp"
#include "repsym/partitions.hpp"
#include "repsym/qspectral.hpp"
#include "repsym/string2n.hpp"
#include "repsym/symfunc.hpp"
#include "repsym/vertex.hpp"

namespace repsym::suite {

std::string rat(const Rational& r) { return r.numerator() + "/" + r.denominator(); }

bool Criterion::ok() const {
    for (const auto& c : checks)
        if (!c.ok) return false;
    return true;
}

Json to_json(const Check& c) {
    Json j;
    j["name"] = c.name;
    j["status"] = c.ok ? "pass" : "fail";
    j["cases"] = c.cases;
    if (!c.ok) j["counterexample"] = c.counterexample;
    return j;
}

namespace {

constexpr double kPi = std::numbers::pi;

struct Ctx {
    const Options& opts;
    std::mt19937 gen;
    explicit Ctx(const Options& o, unsigned salt) : opts(o), gen(o.seed * 7919u + salt) {}
    int cap(int named) const { return std::min(opts.D, named); }
    Rational rational(long span = 9) {
        std::uniform_int_distribution<long> num(-span, span), den(1, span);
        return Rational(num(gen), den(gen));
    }
};

void for_each_k(int m, int D, const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> k(static_cast<std::size_t>(m), 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == m) {
            f(k);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            k[i] = v;
            rec(i + 1, left - v);
        }
    };
    rec(0, D);
}

Json kjson(int j, const std::vector<int>& k) { return Json{{"z", j}, {"x", k}}; }

// ------------------------------------------------------------ 1

std::vector<Check> multipartite_counts(Ctx& cx) {
    Check f{"multigen.F_vs_multipartitions"}, g{"multigen.G_vs_distinct_multipartitions"},
        routes{"multigen.exp_vs_product"};
    const int D = cx.cap(6);
    for (int m = 1; m <= 3 && D >= 1; ++m) {
        MultiGenConfig cfg{m, D, true};
        Series F = expand_F(cfg), G = expand_G(cfg);
        routes.expect(F == expand_product(cfg, GenSign::F), [&] { return Json{{"m", m}, {"series", "F"}}; });
        routes.expect(G == expand_product(cfg, GenSign::G), [&] { return Json{{"m", m}, {"series", "G"}}; });
        for_each_k(m, D, [&](const std::vector<int>& k) {
            MultiIndex mk(k);
            if (mk.is_zero()) return;
            for (int j = 0; j <= 4; ++j) {
                std::vector<std::uint16_t> e{static_cast<std::uint16_t>(j)};
                for (int v : k) e.push_back(static_cast<std::uint16_t>(v));
                Rational cf = F.coefficient(Monomial(e)), cg = G.coefficient(Monomial(e));
                long nf = static_cast<long>(enumerate_multipartitions(mk, {.parts = j}).size());
                long ng = static_cast<long>(enumerate_multipartitions(mk, {.parts = j, .distinct = true}).size());
                f.expect(cf == Rational(nf), [&] {
                    auto c = kjson(j, k);
                    c["coefficient"] = rat(cf);
                    c["brute_force"] = nf;
                    return c;
                });
                g.expect(cg == Rational(ng), [&] {
                    auto c = kjson(j, k);
                    c["coefficient"] = rat(cg);
                    c["brute_force"] = ng;
                    return c;
                });
            }
        });
    }
    return {f, g, routes};
}

// ------------------------------------------------------------ 2

std::vector<Check> bell_equivalence(Ctx& cx) {
    Check eq{"bell.recurrence_vs_faa_di_bruno"}, slices{"bell.P_Q_vs_z_slices"};
    const int N = cx.cap(8);
    for (int s = 0; s < 100; ++s) {
        std::vector<Rational> g;
        for (int i = 0; i < 8; ++i) g.push_back(cx.rational());
        std::span<const Rational> gs(g);
        for (int n = 0; n <= N; ++n) {
            Rational a = bell_recurrence(n, gs), b = bell_faa_di_bruno(n, gs);
            eq.expect(a == b, [&] {
                Json args = Json::array();
                for (const auto& v : g) args.push_back(rat(v));
                return Json{{"n", n}, {"g", args}, {"recurrence", rat(a)}, {"faa_di_bruno", rat(b)}};
            });
        }
    }
    const int D = cx.cap(6);
    for (int m = 1; m <= 2 && D >= 1; ++m) {
        MultiGenConfig cfg{m, D, true};
        Series F = expand_F(cfg), G = expand_G(cfg);
        for (int j = 1; j <= std::min(5, D); ++j) {
            Series p = coefficient_P_exact(j, cfg), sf = z_slice(F, j, m, D);
            slices.expect(p == sf, [&] { return Json{{"m", m}, {"j", j}, {"series", "F"}, {"difference", (p - sf).str()}}; });
            Series q = coefficient_Q_exact(j, cfg), sg = z_slice(G, j, m, D);
            slices.expect(q == sg, [&] { return Json{{"m", m}, {"j", j}, {"series", "G"}, {"difference", (q - sg).str()}}; });
        }
    }
    return {eq, slices};
}

// ------------------------------------------------------------ 3

std::vector<Check> euler_recursion(Ctx& cx) {
    Check counts{"euler.partition_counts"}, trip{"euler.round_trip"};
    const int N = cx.cap(30);
    std::vector<Rational> ones(static_cast<std::size_t>(N), Rational(cx.opts.sentinel ? -1 : 1));
    auto B = euler_expand(ones, N);
    for (int n = 0; n <= N; ++n) {
        Rational expect(partition_count(n));
        counts.expect(B[n] == expect, [&] {
            return Json{{"n", n}, {"euler_expand", rat(B[n])}, {"partition_count", rat(expect)},
                        {"sentinel", cx.opts.sentinel}};
        });
    }
    std::uniform_int_distribution<long> small(-3, 3);
    for (int s = 0; s < 50 && N >= 1; ++s) {
        std::vector<Rational> a;
        for (int i = 0; i < N; ++i) a.push_back(Rational(small(cx.gen)));
        auto back = euler_invert(euler_expand(a, N), N);
        trip.expect(back == a, [&] {
            Json in = Json::array(), out = Json::array();
            for (const auto& v : a) in.push_back(rat(v));
            for (const auto& v : back) out.push_back(rat(v));
            return Json{{"a", in}, {"recovered", out}};
        });
    }
    return {counts, trip};
}

// ------------------------------------------------------------ 4

std::vector<Check> spectral(Ctx& cx) {
    Check ids{"qspectral.spectral_identities"}, ru{"qspectral.ruelle_vs_euler_series"};
    const int R = cx.cap(3), M = cx.cap(5);
    for (Complex theta : {Complex(0, 1), Complex(0.1, 0.5), Complex(0.3, 0.7)})
        for (int r = 1; r <= R && M >= 1; ++r) {
            auto rep = check_spectral_identities(r, M, theta, Complex(0.3, 0), 1e-8);
            ids.expect(rep.ok && rep.max_deviation < 1e-8, [&] {
                return Json{{"theta_re", theta.real()}, {"theta_im", theta.imag()}, {"r", r}, {"m", rep.worst_m},
                            {"max_deviation", rep.max_deviation}};
            });
        }
    if (cx.opts.D >= 1) {
        // (q;q)_inf from its Euler exponents a_n = -1, summed at q = e^{-2 pi}
        const int N = 30;
        auto B = euler_expand(std::vector<Rational>(N, Rational(-1)), N);
        double q = std::exp(-2 * kPi), sym = 0, qn = 1;
        for (int n = 0; n <= N; ++n, qn *= q) sym += B[n].raw().get_d() * qn;
        auto num = ruelle_product({1.0, {0, 0}, 1, {0, 1}}, 1e-12);
        double dev = std::abs(num.value - Complex(sym, 0));
        ru.expect(dev < 1e-8, [&] { return Json{{"ruelle", num.value.real()}, {"euler_series", sym}, {"deviation", dev}}; });
    }
    return {ids, ru};
}

// ------------------------------------------------------------ 5

std::vector<Check> classical(Ctx& cx) {
    Check orth{"symfunc.character_orthogonality"}, jt{"symfunc.jacobi_trudi"}, cauchy{"symfunc.cauchy_kernels"};
    for (int n = 0; n <= cx.cap(7); ++n) {
        auto t = character_table(n);
        const std::size_t N = t.partitions.size();
        for (std::size_t a = 0; a < N; ++a)
            for (std::size_t b = 0; b < N; ++b) {
                Rational row(0), col(0);
                for (std::size_t k = 0; k < N; ++k) {
                    row += Rational(t.values[a][k] * t.values[b][k]) / z_lambda(t.partitions[k]);
                    col += Rational(t.values[k][a] * t.values[k][b]);
                }
                Rational er(a == b ? 1 : 0), ec = a == b ? z_lambda(t.partitions[a]) : Rational(0);
                orth.expect(row == er, [&] {
                    return Json{{"relation", "rows"}, {"n", n}, {"lambda", t.partitions[a].str()},
                                {"mu", t.partitions[b].str()}, {"value", rat(row)}};
                });
                orth.expect(col == ec, [&] {
                    return Json{{"relation", "columns"}, {"n", n}, {"rho", t.partitions[a].str()},
                                {"sigma", t.partitions[b].str()}, {"value", rat(col)}};
                });
            }
    }
    for (int n = 0; n <= cx.cap(8); ++n)
        for (const auto& lam : enumerate_partitions(n)) {
            SymFunc s = SymFunc::element(Basis::s, lam);
            SymFunc a = jacobi_trudi(lam), b = convert(s, Basis::h);
            jt.expect(a.terms() == b.terms(), [&] {
                return Json{{"lambda", lam.str()}, {"jacobi_trudi", a.str()}, {"conversion", b.str()}};
            });
            SymFunc c = jacobi_trudi_dual(lam), d = convert(s, Basis::e);
            jt.expect(c.terms() == d.terms(), [&] {
                return Json{{"lambda", lam.str()}, {"dual_jacobi_trudi", c.str()}, {"conversion", d.str()}};
            });
        }
    const int D = cx.cap(4);
    for (const Rational& q : {Rational(1), Rational(1, 3)}) {
        if (D < 1) break;
        auto rep = cauchy_schur_check(2, 2, D, q);
        cauchy.expect(rep.ok && rep.kernel_ok && rep.dual_ok,
                      [&] { return Json{{"q", rat(q)}, {"degree", D}, {"difference", rep.counterexample}}; });
    }
    return {orth, jt, cauchy};
}

// ------------------------------------------------------------ 6

std::vector<DeformationParams> sample_points(Family fam, Ctx& cx) {
    static const std::vector<Rational> pool{Rational(1, 3), Rational(2, 5), Rational(-1, 2), Rational(3, 7),
                                            Rational(5, 3), Rational(-2, 9), Rational(7, 4)};
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::vector<DeformationParams> out;
    while (out.size() < 3) {
        Rational a = pool[pick(cx.gen)], b = pool[pick(cx.gen)];
        switch (fam) {
            case Family::hall_littlewood: out.push_back(DeformationParams::hall_littlewood(a)); break;
            case Family::jack: out.push_back(DeformationParams::jack(a)); break;
            case Family::macdonald:
                if (a == b) continue;
                out.push_back(DeformationParams::macdonald(a, b));
                break;
            case Family::kappa:
                out.push_back(DeformationParams::kappa_family(a, Rational(3 + static_cast<long>(out.size())), b));
                break;
            case Family::explicit_xi:
                out.push_back(DeformationParams::explicit_sequence({a, b, a * b + 1, a - b + 3, b + 2}));
                break;
        }
    }
    return out;
}

std::vector<Check> deformed_ladder(Ctx& cx) {
    Check orth{"deformed.P_orthogonality"}, dual{"deformed.P_Q_duality"}, tri{"deformed.unitriangularity"},
        red{"deformed.schur_reductions"}, cauchy{"deformed.cauchy"}, repl{"deformed.replicated_cauchy"};
    const int W = cx.cap(5), C = cx.cap(4);
    for (auto fam : {Family::hall_littlewood, Family::jack, Family::macdonald, Family::kappa, Family::explicit_xi}) {
        auto pts = sample_points(fam, cx);
        for (const auto& pt : pts) {
            DeformedBasis basis = make_basis(pt, W);
            for (int n = 1; n <= W; ++n)
                for (const auto& lam : basis.order(n)) {
                    const auto& pm = basis.P_monomial(lam);
                    bool ok = pm.at(lam) == Rational(1);
                    for (const auto& [mu, c] : pm) ok = ok && dominates(lam, mu);
                    tri.expect(ok, [&] { return Json{{"params", pt.describe()}, {"lambda", lam.str()}}; });
                    SymFunc P = to_symfunc(basis.P(lam));
                    for (const auto& mu : basis.order(n)) {
                        Rational pq = deformed_inner(P, to_symfunc(basis.Q(mu)), pt);
                        dual.expect(pq == Rational(lam == mu ? 1 : 0), [&] {
                            return Json{{"params", pt.describe()}, {"lambda", lam.str()}, {"mu", mu.str()},
                                        {"<P,Q>", rat(pq)}};
                        });
                        if (lam == mu) continue;
                        Rational pp = deformed_inner(P, to_symfunc(basis.P(mu)), pt);
                        orth.expect(pp.is_zero(), [&] {
                            return Json{{"params", pt.describe()}, {"lambda", lam.str()}, {"mu", mu.str()},
                                        {"<P,P>", rat(pp)}};
                        });
                    }
                }
            if (C >= 1) {
                auto rep = deformed_cauchy_check(pt, 2, 2, C);
                cauchy.expect(rep.ok, [&] {
                    return Json{{"params", pt.describe()}, {"degree", C}, {"difference", rep.counterexample}};
                });
            }
        }
        for (auto [tau, eta] : {std::pair{Rational(2), Rational(1)}, std::pair{Rational(1, 2), Rational(2)}}) {
            if (C < 1) break;
            auto rep = replicated_cauchy_check(pts.front(), tau, eta, 2, 2, C);
            repl.expect(rep.ok, [&] {
                return Json{{"params", pts.front().describe()}, {"tau", rat(tau)}, {"eta", rat(eta)},
                            {"difference", rep.counterexample}};
            });
        }
    }
    Rational r = cx.rational();
    while (r.is_zero() || r == Rational(1) || r == Rational(-1)) r = cx.rational();
    for (const auto& pt : {DeformationParams::hall_littlewood(Rational(0)), DeformationParams::macdonald(r, r),
                           DeformationParams::jack(Rational(1)), DeformationParams::kappa_family(r, Rational(2), Rational(1))}) {
        DeformedBasis basis = make_basis(pt, W);
        for (int n = 1; n <= W; ++n)
            for (const auto& lam : enumerate_partitions(n)) {
                SymFunc got = convert(to_symfunc(basis.P(lam)), Basis::m);
                SymFunc schur = convert(SymFunc::element(Basis::s, lam), Basis::m);
                red.expect(got == schur && basis.b(lam) == Rational(1), [&] {
                    return Json{{"params", pt.describe()}, {"lambda", lam.str()}, {"P", got.str()}, {"s", schur.str()}};
                });
            }
    }
    return {orth, dual, tri, red, cauchy, repl};
}

// ------------------------------------------------------------ 7

std::vector<Check> vertex(Ctx& cx) {
    Check heis{"vertex.heisenberg_commutators"}, me{"vertex.matrix_element_routes"}, trace{"vertex.empty_trace"},
        hl{"vertex.hall_littlewood_trace"};
    const int H = cx.cap(6);
    for (int w = 0; w <= H; ++w)
        for (const auto& rho : enumerate_partitions(w)) {
            SymFunc f = SymFunc::element(Basis::p, rho);
            for (int n = 1; n <= H; ++n)
                for (int m = 1; m <= H; ++m) {
                    SymFunc lhs = annihilation(n, creation(m, f)) - creation(m, annihilation(n, f));
                    SymFunc rhs = n == m ? f * Rational(n) : SymFunc(Basis::p);
                    heis.expect(lhs == rhs, [&] {
                        return Json{{"state", rho.str()}, {"n", n}, {"m", m}, {"commutator", lhs.str()}};
                    });
                }
        }
    const int M = cx.cap(3);
    std::vector<DeformationParams> fams{
        DeformationParams::schur(), DeformationParams::hall_littlewood(Rational(1, 3)),
        DeformationParams::jack(Rational(5, 2)), DeformationParams::macdonald(Rational(1, 2), Rational(2, 5)),
        DeformationParams::kappa_family(Rational(1, 2), Rational(3), Rational(2)),
        DeformationParams::explicit_sequence({Rational(3, 2), Rational(-1, 4), Rational(7, 3), Rational(2), Rational(5, 6)})};
    for (const auto& par : fams) {
        if (M < 0) break;
        auto spec = VertexSpec::graded({Rational(1), Rational(-2, 3)}, {Rational(5, 2)}, par, 2 * M + 2);
        for (int a = 0; a <= M; ++a)
            for (int b = 0; b <= M; ++b)
                for (const auto& mu : enumerate_partitions(a))
                    for (const auto& nu : enumerate_partitions(b)) {
                        auto r = vertex_matrix_element(mu, nu, spec);
                        me.expect(r.consistent, [&] {
                            return Json{{"params", par.describe()}, {"mu", mu.str()}, {"nu", nu.str()},
                                        {"direct", r.direct.str()}, {"via_skew", r.via_skew.str()}};
                        });
                    }
    }
    const int T = cx.cap(8);
    {
        auto spec = VertexSpec::weighted({}, {}, DeformationParams::hall_littlewood(Rational(2, 7)), {"p", "r"}, 2 * T);
        Series p = Series::variable(spec.ring, "p"), r = Series::variable(spec.ring, "r");
        Series S = vertex_trace(spec, p, r, T);
        Series expect = Series::zero(spec.ring);
        for (int n = 0; n <= T; ++n)
            expect += (p * r).pow(static_cast<long>(n)) * Rational(static_cast<long>(enumerate_partitions(n).size()));
        trace.expect(S == expect, [&] { return Json{{"degree", T}, {"difference", (S - expect).str()}}; });
    }
    const int L = cx.cap(4);
    for (int s = 0; s < 3 && L >= 1; ++s) {
        Rational a = cx.rational(4), b = cx.rational(4), t = cx.rational(4), e = cx.rational(4);
        auto rep = hl_trace_identity_check(a, b, t, e, 1, 1, 1, 1, L);
        hl.expect(rep.ok, [&] {
            return Json{{"a", rat(a)}, {"b", rat(b)}, {"t", rat(t)}, {"e", rat(e)}, {"first_mismatch", rep.first_mismatch},
                        {"difference", (rep.lhs - rep.rhs).str()}};
        });
    }
    return {heis, me, trace, hl};
}

// ------------------------------------------------------------ 8

std::vector<Check> string_checks(Ctx& cx, bool extreme) {
    std::vector<Check> out;
    Check uni{"string.uniform_spectrum"};
    auto roots = eigenfrequencies(StringConfig::make(1.0, 1), 20.0);
    uni.expect(roots.size() == 10, [&] { return Json{{"roots_found", roots.size()}, {"expected", 10}}; });
    for (std::size_t i = 0; i < roots.size(); ++i) {
        double target = 2.0 * static_cast<double>(i + 1);
        uni.expect(std::abs(roots[i] - target) <= 1e-8, [&] { return Json{{"root", roots[i]}, {"expected", target}}; });
    }
    out.push_back(uni);

    Check count{"string.root_count_growth"};
    for (double wmax : {5.0, 13.7, 40.0}) {
        auto n = eigenfrequencies(StringConfig::make(1.0, 1), wmax).size();
        count.expect(std::abs(static_cast<double>(n) - wmax / 2) <= 1.0,
                     [&] { return Json{{"omega_max", wmax}, {"roots", n}}; });
    }
    out.push_back(count);

    if (extreme) {
        Check ext{"string.extreme_tension_spectrum"};
        auto r = eigenfrequencies(StringConfig::make(1e-6, 2), 12.5);
        for (double w : r) {
            double nearest = std::max(4.0, 4.0 * std::round(w / 4.0));
            ext.expect(std::abs(w - nearest) <= 1e-3, [&] {
                return Json{{"x", 1e-6}, {"N", 2}, {"root", w}, {"nearest_2Nn", nearest}, {"distance", std::abs(w - nearest)}};
            });
        }
        for (double target : {4.0, 8.0, 12.0}) {
            bool hit = std::any_of(r.begin(), r.end(), [&](double w) { return std::abs(w - target) <= 1e-3; });
            ext.expect(hit, [&] { return Json{{"x", 1e-6}, {"N", 2}, {"missing", target}}; });
        }
        out.push_back(ext);
    }

    Check det{"string.omega_determinant"};
    std::uniform_real_distribution<double> ue(0.0, 0.95), up(0.0, 2 * kPi);
    for (int i = 0; i < 1000; ++i) {
        double e = ue(cx.gen), p = up(cx.gen);
        double expect = (1 - e * e) * (1 - e * e), got = omega_matrix(e, p).det();
        det.expect(std::abs(got - expect) <= 1e-12 * expect,
                   [&] { return Json{{"eps", e}, {"p", p}, {"det", got}, {"expected", expect}}; });
    }
    out.push_back(det);

    Check inv{"string.x_inverse_invariance"};
    for (double x : {0.25, 0.5})
        for (int N = 1; N <= 3; ++N) {
            auto a = eigenfrequencies(StringConfig::make(x, N), 12.0);
            auto b = eigenfrequencies(StringConfig::make(1 / x, N), 12.0);
            bool same = a.size() == b.size() && !a.empty();
            for (std::size_t i = 0; same && i < a.size(); ++i) same = std::abs(a[i] - b[i]) <= 1e-9;
            inv.expect(same, [&] { return Json{{"x", x}, {"N", N}, {"roots_x", a}, {"roots_inverse", b}}; });
        }
    out.push_back(inv);
    return out;
}

// ------------------------------------------------------------ 9

std::vector<Check> negative_control(const Options& opts) {
    Options o = opts;
    o.D = std::min(opts.D, 6);
    o.sentinel = true;
    Criterion flipped = run_criterion(3, o);
    o.sentinel = false;
    Criterion clean = run_criterion(3, o);
    Check caught{"sentinel.flipped_sign_detected"}, control{"sentinel.unflipped_passes"};
    const Check* failing = nullptr;
    for (const auto& c : flipped.checks)
        if (!c.ok && !failing) failing = &c;
    caught.expect(failing && !failing->counterexample.is_null(),
                  [&] { return Json{{"reason", "the flipped-sign run passed"}}; });
    control.expect(clean.ok(), [&] { return Json{{"reason", "the unflipped run failed"}}; });
    return {caught, control};
}

}  // namespace

int criterion_count() { return 9; }

Criterion run_criterion(int id, const Options& opts) {
    static const char* titles[] = {"",
                                   "multipartite counts",
                                   "Bell polynomial equivalence",
                                   "Euler recursion",
                                   "spectral identities",
                                   "classical symmetric functions",
                                   "deformed ladder",
                                   "vertex operators",
                                   "string spectrum",
                                   "negative control"};
    if (id < 1 || id > 9) throw UsageError("criterion must be between 1 and 9");
    Ctx cx(opts, static_cast<unsigned>(id));
    Criterion c{id, titles[id], {}};
    switch (id) {
        case 1: c.checks = multipartite_counts(cx); break;
        case 2: c.checks = bell_equivalence(cx); break;
        case 3: c.checks = euler_recursion(cx); break;
        case 4: c.checks = spectral(cx); break;
        case 5: c.checks = classical(cx); break;
        case 6: c.checks = deformed_ladder(cx); break;
        case 7: c.checks = vertex(cx); break;
        case 8: c.checks = string_checks(cx, true); break;
        case 9: c.checks = negative_control(opts); break;
    }
    return c;
}

std::vector<Check> identity_suite(const Options& opts) {
    if (opts.D < 0 || opts.D > 12) throw UsageError("identity-suite: D must be between 0 and 12");
    std::vector<Check> out;
    for (int id = 1; id <= 7; ++id) {
        auto c = run_criterion(id, opts);
        out.insert(out.end(), c.checks.begin(), c.checks.end());
    }
    if (opts.D >= 1) {
        Ctx cx(opts, 8);
        auto s = string_checks(cx, false);
        out.insert(out.end(), s.begin(), s.end());
    }
    return out;
}

}  // namespace repsym::suite
