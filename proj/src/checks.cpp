/*
hypspec

Copyright 2026 The hypspec Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

   http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include "hypspec/checks.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "hypspec/collar.hpp"
#include "hypspec/cuts.hpp"
#include "hypspec/error.hpp"
#include "hypspec/grid_function.hpp"
#include "hypspec/intervals.hpp"
#include "hypspec/report.hpp"
#include "hypspec/sturm.hpp"
#include "hypspec/surface.hpp"
#include "hypspec/thick_thin.hpp"

namespace hypspec::checks
{

void SuiteResult::record(bool pass, const std::string& what)
{
    ++total;
    if (pass) {
        ++passed;
    } else if (failures.size() < 8) {
        failures.push_back(what);
    }
}

double SuiteResult::value(const std::string& key) const
{
    for (const auto& [k, v] : values) {
        if (k == key) return v;
    }
    throw std::out_of_range("no value '" + key + "' in suite " + name);
}

namespace
{

constexpr double kPi = std::numbers::pi;

// Draws from mt19937_64 with explicit arithmetic, so corpora do not depend
// on the standard library's distribution implementations.
class Rng
{
public:
    explicit Rng(std::uint64_t seed) : gen_{seed} {}
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    std::size_t below(std::size_t n) { return static_cast<std::size_t>(uniform() * static_cast<double>(n)); }
    bool coin() { return (gen_() >> 63) != 0; }

private:
    std::mt19937_64 gen_;
};

std::uint64_t mix(std::uint64_t seed, std::uint64_t stream)
{
    // splitmix64 step so each suite gets an unrelated stream
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::string num(double x) { return format_number(x); }

SuiteResult suite(std::string name)
{
    SuiteResult r;
    r.name = std::move(name);
    return r;
}

}  // namespace

SuiteResult collar_identities()
{
    auto r = suite("collar_identities");
    double worst = 0;
    for (double ell : {1e-4, 1e-2, 0.1, 0.5, 1.0}) {
        const double lhs = 2.0 * ell * std::sinh(max_half_width(ell));
        const double rhs = 2.0 * ell / std::sinh(ell / 2.0);
        const double rel = std::abs(lhs - rhs) / rhs;
        worst = std::max(worst, rel);
        r.record(rel <= 1e-12, "volume identity at l=" + num(ell) + ": rel " + num(rel));
    }
    const double ell = 1e-4;
    const double asym = std::abs(std::exp(max_half_width(ell)) * ell / 4.0 - 1.0);
    r.record(asym < 1e-3, "asymptotic e^w l/4 at l=1e-4: " + num(asym));
    r.values = {{"worst_identity_rel", worst}, {"asymptotic_error", asym}};
    return r;
}

SuiteResult thick_thin_constants()
{
    auto r = suite("thick_thin_constants");
    const auto adm = epsilon_admissible(kDefaultEpsilon);
    r.record(adm.width_condition, "width condition at 0.05");
    r.record(adm.volume_condition, "volume condition at 0.05");
    r.record(adm.injectivity_condition, "injectivity condition at 0.05");

    const double ell = 1e-6;
    const double w = modified_half_width(ell);
    const double vt = collar_volume(ell, w);
    const double vs = shell_volume(ell, w);
    const double e2 = std::exp(2.0);
    const double want_t = 4.0 / e2;
    const double want_s = 4.0 * (std::numbers::e - 1.0) / e2;
    r.record(std::abs(vt - want_t) < 1e-3, "Vol(T) limit " + num(vt) + " vs " + num(want_t));
    r.record(std::abs(vs - want_s) < 1e-3, "Vol(S) limit " + num(vs) + " vs " + num(want_s));
    r.values = {{"collar_volume_small_l", vt}, {"shell_volume_small_l", vs}};
    return r;
}

SuiteResult shell_detour(std::uint64_t seed, std::size_t pairs)
{
    auto r = suite("shell_detour");
    Rng rng(mix(seed, 1));
    const double eps = kDefaultEpsilon;
    double worst = 0;
    while (r.total < pairs) {
        const double ell = rng.uniform(1e-3, 2.0 * eps);
        const double w = modified_half_width(ell);
        const double side = rng.coin() ? 1.0 : -1.0;
        const double r1 = rng.uniform(w, w + 1.0);
        const double circ = ell * std::cosh(r1);
        FermiPoint p{side * r1, rng.uniform()};
        const double d_rho = rng.uniform(-0.05, 0.05);
        const double r2 = r1 + d_rho;
        if (r2 < w || r2 > w + 1.0) {
            ++r.rejected;
            continue;
        }
        double t2 = p.t + rng.uniform(-0.05, 0.05) / circ;
        t2 -= std::floor(t2);
        FermiPoint q{side * r2, t2};
        const auto d = shell_detour_length(p, q, ell);
        if (!(d.direct <= 0.05) || d.direct <= 0) {
            ++r.rejected;
            continue;
        }
        const double ratio = d.detour / d.direct;
        worst = std::max(worst, ratio);
        r.record(d.detour <= 5.0 * d.direct,
                 "detour ratio " + num(ratio) + " at l=" + num(ell) + " rho=" + num(p.rho));
    }
    r.values = {{"worst_ratio", worst}};
    return r;
}

SuiteResult collar_ode_sweep()
{
    auto r = suite("collar_ode_sweep");
    for (double ell : {0.05, 0.1, 0.5}) {
        for (double w : {1.0, 2.0, max_half_width(ell)}) {
            const auto s = collar_dirichlet_lambda1(ell, w);
            r.record(s.lambda1 > 0.25 && s.converged,
                     "l=" + num(ell) + " w=" + num(w) + " lambda1=" + num(s.lambda1));
            r.values.push_back({"lambda1(l=" + num(ell) + ",w=" + num(w) + ")", s.lambda1});
        }
    }
    const auto s = collar_dirichlet_lambda1(0.1, 12.0);
    r.record(s.lambda1 > 0.25, "l=0.1 w=12 lambda1=" + num(s.lambda1));
    r.values.push_back({"lambda1(l=0.1,w=12)", s.lambda1});
    return r;
}

namespace
{

// Random band-limited trigonometric polynomial in (ρ/W, t); `slope` adds an
// odd radial term so the boundary jump is usually far from zero.
struct TrigPoly {
    double W{1};
    double slope{0};
    std::vector<double> coef;  // (p, q, cos|sin)
    int P{3};
    int Q{3};

    double operator()(double rho, double t) const
    {
        const double x = rho / W;
        double v = slope * x;
        std::size_t k = 0;
        for (int p = 0; p <= P; ++p) {
            const double radial = std::pow(x, p);
            for (int q = 0; q <= Q; ++q) {
                v += radial * (coef[k] * std::cos(2 * kPi * q * t) + coef[k + 1] * std::sin(2 * kPi * q * t));
                k += 2;
            }
        }
        return v;
    }
};

TrigPoly random_poly(Rng& rng, double W, double amplitude)
{
    TrigPoly f;
    f.W = W;
    f.P = 1 + static_cast<int>(rng.below(4));
    f.Q = static_cast<int>(rng.below(4));
    f.coef.resize(static_cast<std::size_t>(2 * (f.P + 1) * (f.Q + 1)));
    for (auto& c : f.coef) c = rng.uniform(-amplitude, amplitude);
    return f;
}

}  // namespace

SuiteResult crossing_corpus(std::uint64_t seed, std::size_t count)
{
    auto r = suite("crossing_corpus");
    Rng rng(mix(seed, 2));
    const double ells[] = {0.05, 0.1, 0.5};
    double min_ratio = std::numeric_limits<double>::infinity();
    for (std::size_t n = 0; n < count; ++n) {
        const double ell = ells[n % 3];
        const double widths[] = {1.0, 2.0, max_half_width(ell)};
        const double w = widths[(n / 3) % 3];
        auto f = random_poly(rng, w, 1.0);
        if (n % 2 == 0) f.slope = rng.uniform(-4.0, 4.0);
        auto grid = CollarGridFunction::uniform(ell, w, 257, 64);
        grid.sample(f);
        const auto chk = crossing_energy_check(grid);
        if (chk.bound > 0) min_ratio = std::min(min_ratio, chk.energy / chk.bound);
        r.record(chk.pass, "l=" + num(ell) + " w=" + num(w) + " energy " + num(chk.energy) + " < bound " +
                               num(chk.bound));
    }
    r.values = {{"min_energy_over_bound", min_ratio}};
    return r;
}

namespace
{

// 1 on the collar core, tapering to a small (or zero) level by ρ = w + b.
double taper(double rho, double w, double inner, double b, int shape)
{
    const double a = std::abs(rho);
    const double start = w - inner;
    const double stop = w + b;
    if (a <= start) return 1.0;
    if (a >= stop) return 0.0;
    const double s = (a - start) / (stop - start);
    switch (shape) {
    case 0: return 1.0 - s;
    case 1: return 1.0 - s * s * (3.0 - 2.0 * s);
    default: return 0.5 * (1.0 + std::cos(kPi * s));
    }
}

}  // namespace

SuiteResult cutoff_corpus(std::uint64_t seed, std::size_t count, double delta)
{
    auto r = suite("cutoff_corpus");
    Rng rng(mix(seed, 3));
    double min_margin = std::numeric_limits<double>::infinity();
    std::size_t attempts = 0;
    while (r.total < count) {
        if (++attempts > 100 * count) throw std::runtime_error("cutoff corpus: too many rejections");
        const double ell = rng.uniform(0.005, 2.0 * kDefaultEpsilon);
        const double w = modified_half_width(ell);
        auto grid = CollarGridFunction::with_shell(ell, w, 256, 64, 32);
        const double inner = rng.uniform(0.3, w);
        const double b = rng.coin() ? 0.0 : rng.uniform(0.0, 0.08);
        const int shape = static_cast<int>(rng.below(3));
        const auto wobble = random_poly(rng, w + 1.0, 0.15);
        grid.sample([&](double rho, double t) { return taper(rho, w, inner, b, shape) * (1.0 + wobble(rho, t)); });

        const double c = l2_norm_sq(grid, {-w, w});
        try {
            const auto chk = cutoff_extension_check(grid, w, delta, c);
            min_margin = std::min(min_margin, chk.collar_energy / chk.final_bound);
            r.record(chk.pass(), "l=" + num(ell) + " energy " + num(chk.collar_energy) + " vs " +
                                     num(chk.final_bound) + " shell " + num(chk.shell_cutoff_energy) +
                                     " vs " + num(chk.shell_bound));
        } catch (const HypothesisViolation&) {
            ++r.rejected;
        }
    }
    r.values = {{"min_energy_over_final_bound", min_margin}};
    return r;
}

SuiteResult interval_suite(std::uint64_t seed, std::size_t count, std::size_t max_n)
{
    auto r = suite("interval_suite");
    Rng rng(mix(seed, 4));
    std::size_t vacuous = 0, oracle_agree = 0;
    for (std::size_t s = 0; s < count; ++s) {
        const std::size_t n = 2 + rng.below(max_n - 1);
        std::vector<double> ends(2 * n);
        for (auto& x : ends) x = rng.uniform(0.0, 10.0);
        std::sort(ends.begin(), ends.end());
        std::vector<Interval> iv(n);
        for (std::size_t i = 0; i < n; ++i) {
            iv[i] = {ends[2 * i], ends[2 * i + 1]};
            // occasional touching or degenerate intervals
            if (i > 0 && rng.below(6) == 0) iv[i].lo = iv[i - 1].hi;
            if (rng.below(8) == 0) iv[i].hi = iv[i].lo;
        }
        for (std::size_t i = 1; i < n; ++i) iv[i].hi = std::max(iv[i].hi, iv[i].lo);
        std::vector<double> wts(n * n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) wts[i * n + j] = rng.below(4) == 0 ? 0.0 : rng.uniform(0.0, 2.0);
        }
        const IntervalSystem sys(iv, wts);
        const auto k0 = find_cut_index(sys);
        const auto chk = verify_cut_inequality(sys, k0);
        if (chk.vacuous) ++vacuous;
        bool exists = false;
        for (std::size_t k = 1; k < n; ++k) exists = exists || verify_cut_inequality(sys, k).holds;
        if (exists == true) ++oracle_agree;
        r.record(chk.holds && exists, "instance " + std::to_string(s) + " n=" + std::to_string(n) + " K0=" +
                                          std::to_string(k0) + " lhs " + num(chk.lhs) + " rhs " + num(chk.rhs));
    }
    r.values = {{"vacuous", static_cast<double>(vacuous)}, {"oracle_existence", static_cast<double>(oracle_agree)}};
    return r;
}

namespace
{

// Random trivalent multigraph by stub pairing; loops and parallel edges allowed.
SurfaceDescription random_pants_graph(Rng& rng, int g)
{
    const auto nv = static_cast<std::size_t>(2 * (g - 1));
    for (;;) {
        std::vector<std::size_t> stubs;
        for (std::size_t v = 0; v < nv; ++v) stubs.insert(stubs.end(), 3, v);
        for (std::size_t i = stubs.size(); i > 1; --i) std::swap(stubs[i - 1], stubs[rng.below(i)]);
        SurfaceDescription d;
        d.genus = g;
        for (std::size_t v = 0; v < nv; ++v) d.vertices.push_back("V" + std::to_string(v));
        for (std::size_t k = 0; k < stubs.size(); k += 2) {
            const auto label = "e" + std::string(k / 2 < 10 ? "0" : "") + std::to_string(k / 2);
            d.edges.push_back({d.vertices[stubs[k]], d.vertices[stubs[k + 1]], rng.uniform(0.05, 3.0), 0.0, label});
        }
        if (validate(d).empty()) return d;
    }
}

}  // namespace

SuiteResult cut_suite(std::uint64_t seed)
{
    auto r = suite("cut_suite");
    Rng rng(mix(seed, 5));
    const double ell = 0.09;
    for (int g = 2; g <= 10; ++g) {
        const auto s = build_chain_family({g, ell, {}});
        const auto cut = min_separating_length(s, 1);
        r.record(std::abs(cut.total_length - ell) <= 1e-12 * ell,
                 "chain g=" + std::to_string(g) + " L1=" + num(cut.total_length));
    }

    std::vector<PantsSurface> fixtures;
    for (int g = 2; g <= 6; ++g) fixtures.push_back(build_chain_family({g, ell, {}}));
    for (int g = 2; g <= 6; ++g) {
        for (int k = 0; k < 3; ++k) fixtures.push_back(build_from_description(random_pants_graph(rng, g)));
    }
    fixtures.push_back(build_from_description(random_pants_graph(rng, 7)));
    std::size_t compared = 0;
    for (const auto& s : fixtures) {
        const int g = s.genus();
        for (int i = 1; i <= std::min(2 * g - 3, 3); ++i) {
            const auto ex = min_separating_length(s, i, CutSearch::exhaustive);
            const auto bb = min_separating_length(s, i, CutSearch::branch_and_bound);
            ++compared;
            r.record(ex.edges == bb.edges, "g=" + std::to_string(g) + " i=" + std::to_string(i) +
                                               " exhaustive " + num(ex.total_length) + " vs bnb " +
                                               num(bb.total_length));
            r.record(ex.total_length <= bers_upper_bound(i, g),
                     "Bers bound violated at g=" + std::to_string(g) + " i=" + std::to_string(i));
        }
    }
    r.values = {{"exhaustive_vs_bnb_comparisons", static_cast<double>(compared)}};
    return r;
}

std::vector<SuiteResult> run_all(std::uint64_t seed)
{
    return {collar_identities(), thick_thin_constants(), shell_detour(seed),     collar_ode_sweep(),
            crossing_corpus(seed), cutoff_corpus(seed),  interval_suite(seed), cut_suite(seed)};
}

std::string summarize(const std::vector<SuiteResult>& results)
{
    std::ostringstream os;
    std::size_t passed = 0, total = 0;
    for (const auto& r : results) {
        os << (r.ok() ? "ok   " : "FAIL ") << r.name << ": " << r.passed << "/" << r.total << " passed";
        if (r.rejected) os << ", " << r.rejected << " rejected by precondition";
        os << '\n';
        for (const auto& [k, v] : r.values) os << "    " << k << " = " << format_number(v) << '\n';
        for (const auto& f : r.failures) os << "    failure: " << f << '\n';
        passed += r.passed;
        total += r.total;
    }
    os << "total: " << passed << "/" << total << " checks passed\n";
    return os.str();
}

}  // namespace hypspec::checks
