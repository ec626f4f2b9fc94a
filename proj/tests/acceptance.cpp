#include "ghg/borel.hpp"
#include "ghg/turning.hpp"
#include "ghg/verify.hpp"
#include "ghg/voros.hpp"
#include "ghg/wkb.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>

using namespace ghg;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
    void fail(const std::string& what) {
        ok = false;
        if (detail.size() < 400) detail += (detail.empty() ? "" : "; ") + what;
    }
};

struct Criterion {
    int id;
    std::string name;
    double limit_s;
    std::function<Outcome()> run;
};

std::vector<std::pair<int, int>> pairs(int N) {
    std::vector<std::pair<int, int>> out;
    for (int j = 1; j <= N; ++j)
        for (int k = j + 1; k <= N; ++k) out.emplace_back(j, k);
    return out;
}

std::vector<ShiftParam> linear_params(int N) {
    std::vector<ShiftParam> out;
    for (int i = 1; i <= N; ++i) out.push_back({ParamKind::A, i});
    for (int j = 1; j < N; ++j) out.push_back({ParamKind::B, j});
    return out;
}

ParameterSet generic_draw(int N, std::mt19937_64& rng) {
    for (;;) {
        ParameterSet p = ParameterSet::random(N, rng);
        if (genericity_report(p).ok) return p;
    }
}

std::string tag(Point rho, int j, int k) {
    return std::string("rho=") + point_name(rho) + " (" + std::to_string(j) + "," + std::to_string(k) + ")";
}

void absorb(Outcome& o, const CheckReport& r, const std::string& where) {
    for (const auto& e : r.entries)
        if (!e.ok) o.fail(where + " " + e.name + (e.detail.empty() ? "" : ": " + e.detail.substr(0, 80)));
}

Outcome factorization() {
    Outcome o;
    std::mt19937_64 rng(101);
    int exact = 0, total = 0;
    for (int N : {2, 3, 4})
        for (int d = 0; d < 5; ++d) {
            FactorizationReport r = factorization_check(ParameterSet::random(N, rng));
            ++total;
            if (r.ok)
                ++exact;
            else
                o.fail("N=" + std::to_string(N) + " draw " + std::to_string(d) + " lhs/rhs = " +
                       (r.ratio ? r.ratio->str() : "non-constant"));
        }
    o.detail = std::to_string(exact) + "/" + std::to_string(total) + " draws exact" + (o.ok ? "" : "; " + o.detail);
    return o;
}

Outcome turning_count() {
    Outcome o;
    std::mt19937_64 rng(202);
    for (int N = 2; N <= 5; ++N)
        for (int d = 0; d < 10; ++d) {
            const ParameterSet p = generic_draw(N, rng);
            auto tps = turning_points(p, 1e-10);
            const std::string w = "N=" + std::to_string(N) + " draw " + std::to_string(d);
            if (int(tps.size()) != 2 * (N - 1)) o.fail(w + " count " + std::to_string(tps.size()));
            for (std::size_t i = 0; i < tps.size(); ++i) {
                if (!(tps[i].res_sigma < 1e-10 && tps[i].res_dzeta < 1e-10)) o.fail(w + " residual");
                for (std::size_t j = i + 1; j < tps.size(); ++j)
                    if (std::abs(tps[i].x - tps[j].x) + std::abs(tps[i].zeta - tps[j].zeta) <= 1e-6)
                        o.fail(w + " separation");
            }
        }
    if (o.ok) o.detail = "40 draws, N = 2..5";
    return o;
}

Outcome discriminant() {
    Outcome o;
    DiscriminantCube d = discriminant_cube_n3();
    if (!d.divisible) o.fail("not divisible by 256 prod a prod (a - b)");
    if (!d.is_cube) o.fail("quotient is not a cube");
    if (d.h_degree != 9) o.fail("h' homogeneous degree " + std::to_string(d.h_degree));
    if (o.ok) o.detail = "quotient = h'^3, deg h' = 9";
    return o;
}

Outcome local_behaviors() {
    Outcome o;
    register_variables(2);
    absorb(o, local_behavior_check<RatFunc>(ParameterSet::symbolic(2), 6, 8), "N=2 symbolic");
    std::mt19937_64 rng(404);
    for (int d = 0; d < 3; ++d) absorb(o, local_behavior_check<Rational>(generic_draw(3, rng), 6, 8), "N=3 draw");
    return o;
}

Outcome residues() {
    Outcome o;
    std::mt19937_64 rng(505);
    for (int N : {2, 3}) {
        const ParameterSet p = generic_draw(N, rng);
        for (Point rho : {Point::Zero, Point::Infinity}) {
            std::vector<WkbBranchSeries<Rational>> s;
            for (int m = 1; m <= N; ++m) s.push_back(riccati_series<Rational>(p, rho, m, 6, 8));
            for (auto [j, k] : pairs(N)) {
                auto r = residue_check(odd_even_split(s[j - 1], s[k - 1]));
                for (int l = 1; l <= 6; ++l)
                    if (!r.residues.at(std::size_t(l + 1)).is_zero())
                        o.fail("N=" + std::to_string(N) + " " + tag(rho, j, k) + " l=" + std::to_string(l));
            }
        }
    }
    return o;
}

Outcome ladders() {
    Outcome o;
    std::mt19937_64 rng(606);
    for (int N : {2, 3}) {
        const ParameterSet p = generic_draw(N, rng);
        for (Point rho : {Point::Zero, Point::Infinity})
            for (int m = 1; m <= N; ++m)
                for (auto q : linear_params(N))
                    absorb(o, ladder_check<Rational>(p, rho, m, q, 6, 8),
                           "N=" + std::to_string(N) + " rho=" + point_name(rho) + " m=" + std::to_string(m));
    }
    return o;
}

Outcome display_consistency() {
    Outcome o;
    absorb(o, display_consistency_check(8), "");
    return o;
}

Outcome dd_system() {
    Outcome o;
    const int L = 6;
    std::mt19937_64 rng(808);
    const ParameterSet p3 = generic_draw(3, rng);
    for (auto [j, k] : pairs(3))
        for (auto q : linear_params(3)) absorb(o, dd_check_n3(p3, q, j, k, L, GForm::Corrected), "N=3");
    for (Point rho : {Point::Zero, Point::Infinity})
        for (auto [j, k] : pairs(3))
            for (auto q : linear_params(3)) absorb(o, dd_check_general(p3, rho, j, k, q, L), "N=3");
    for (int N : {2, 4}) {
        const ParameterSet p = generic_draw(N, rng);
        for (Point rho : {Point::Zero, Point::Infinity})
            for (auto [j, k] : pairs(N))
                for (auto q : linear_params(N)) absorb(o, dd_check_general(p, rho, j, k, q, L), "N=" + std::to_string(N));
    }
    return o;
}

Outcome gauge() {
    Outcome o;
    std::mt19937_64 rng(909);
    for (int N : {2, 3, 4}) {
        const ParameterSet p = generic_draw(N, rng);
        for (Point rho : {Point::Zero, Point::Infinity})
            for (auto [j, k] : pairs(N))
                absorb(o, uniqueness_gauge_check(p, rho, j, k, 6, Rational(2, 3)), "N=" + std::to_string(N));
    }
    return o;
}

Outcome cocycle() {
    Outcome o;
    std::mt19937_64 rng(1010);
    for (int N : {3, 4}) {
        const ParameterSet p = generic_draw(N, rng);
        for (Point rho : {Point::Zero, Point::Infinity})
            for (int j = 1; j <= N; ++j)
                for (int k = 1; k <= N; ++k)
                    for (int m = 1; m <= N; ++m)
                        if (j != k && k != m && j != m)
                            absorb(o, cocycle_check(p, rho, j, k, m, 8), "N=" + std::to_string(N));
    }
    return o;
}

NumericParams numeric(int N, std::vector<double> a0, std::vector<double> a1, std::vector<double> b0,
                      std::vector<double> b1) {
    NumericParams p;
    p.N = N;
    for (double v : a0) p.a0.emplace_back(v);
    for (double v : a1) p.a1.emplace_back(v);
    for (double v : b0) p.b0.emplace_back(v);
    for (double v : b1) p.b1.emplace_back(v);
    return p;
}

Outcome borel_sums() {
    struct Config {
        NumericParams p;
        Point rho;
        int j, k;
    };
    const std::vector<Config> configs = {
        {numeric(3, {1.0 / 3, 0.5, -0.25}, {2, 3, 5}, {0.2, 2.0 / 7}, {7, 5.5}), Point::Zero, 1, 2},
        {numeric(3, {1.0 / 3, 0.5, -0.25}, {2, 3, 5}, {0.2, 2.0 / 7}, {7, 5.5}), Point::Infinity, 1, 3},
        {numeric(4, {0.1, 0.7, -0.3, 0.25}, {1.5, 2.5, 4, 6}, {0.4, 0.15, 0.6}, {3.5, 8, 11}), Point::Zero, 2, 4},
    };
    const int L = 6;
    Outcome o;
    std::ostringstream ratios;
    for (const auto& c : configs) {
        const std::string w = tag(c.rho, c.j, c.k) + " N=" + std::to_string(c.p.N);
        double prev = 0.0;
        for (double eta : {10.0, 20.0, 40.0}) {
            BorelEvaluation e = borel_sum_voros(c.p, c.rho, c.j, c.k, eta, L);
            if (!(e.discrepancy <= 2.0 * e.first_omitted))
                o.fail(w + " eta=" + std::to_string(int(eta)) + " discrepancy above 2 |first omitted|");
            if (prev > 0.0) {
                // the first omitted term is O(eta^{-L}): a factor 2^L per doubling
                const double ratio = prev / e.discrepancy, rate = std::pow(2.0, L);
                ratios << " " << std::lround(ratio);
                if (!(ratio >= rate / 2 && ratio <= rate * 2)) o.fail(w + " rate " + std::to_string(ratio));
            }
            prev = e.discrepancy;
        }
    }
    if (o.ok) o.detail = "discrepancy ratios per doubling:" + ratios.str();
    return o;
}

Outcome log_gamma_accuracy() {
    Outcome o;
    std::ifstream f(GHG_TEST_DATA_DIR "/log_gamma_oracle.txt");
    if (!f) {
        o.fail("oracle table missing");
        return o;
    }
    std::string line;
    double worst = 0.0;
    int n = 0;
    while (std::getline(f, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream in(line);
        double a, b, c, d;
        in >> a >> b >> c >> d;
        const cplx z(a, b), ref(c, d);
        worst = std::max(worst, std::abs(log_gamma(z) - ref) / std::max(1.0, std::abs(ref)));
        ++n;
    }
    if (n < 100) o.fail("oracle has " + std::to_string(n) + " rows");
    std::mt19937_64 rng(1212);
    std::uniform_real_distribution<double> u(-100.0, 100.0);
    double fe = 0.0;
    for (int i = 0; i < 200; ++i) {
        cplx z(u(rng), u(rng));
        if (std::abs(z) > 100.0) continue;
        const cplx lhs = log_gamma(z + 1.0);
        fe = std::max(fe, std::abs(lhs - log_gamma(z) - std::log(z)) / std::max(1.0, std::abs(lhs)));
    }
    if (worst >= 1e-12) o.fail("oracle relative error " + std::to_string(worst));
    if (fe >= 1e-12) o.fail("functional equation residual " + std::to_string(fe));
    char buf[160];
    std::snprintf(buf, sizeof buf, "%d oracle points, worst %.1e; functional equation %.1e", n, worst, fe);
    if (o.ok) o.detail = buf;
    return o;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "resultant factorization, N = 2, 3, 4", 30, factorization},
        {2, "turning point count 2(N-1), N = 2..5", 10, turning_count},
        {3, "N = 3 discriminant is 256 prod a prod (a - b) h'^3", 60, discriminant},
        {4, "local behaviors of the WKB branches", 60, local_behaviors},
        {5, "residues of S_odd vanish for l = 1..6", 60, residues},
        {6, "parameter ladder relations", 120, ladders},
        {7, "general term lists agree with the N = 3 display", 5, display_consistency},
        {8, "differential-difference system through eta^-6", 300, dd_system},
        {9, "uniqueness gauge: homogeneity and vanishing eta^1, eta^0", 10, gauge},
        {10, "cocycle and antisymmetry, l <= 8", 10, cocycle},
        {11, "Borel sums against partial sums", 10, borel_sums},
        {12, "log_gamma accuracy", 5, log_gamma_accuracy},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.fail(std::string("error: ") + e.what());
        }
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (s > c.limit_s) o.fail("took " + std::to_string(s) + " s");
        failed += !o.ok;
        std::printf("%s %2d %s (%.2f s, limit %.0f s) %s\n", o.ok ? "PASS" : "FAIL", c.id, c.name.c_str(), s, c.limit_s,
                    o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", int(criteria.size()) - failed, criteria.size());
    return failed ? 1 : 0;
}
