#include "ghg/params.hpp"

#include <stdexcept>
#include <string>

namespace ghg {

VarId x_var() { return var("x"); }
VarId zeta_var() { return var("zeta"); }
VarId t_var() { return var("eta_inv"); }

VarId a_var(int i, int k) { return var("a" + std::to_string(i) + "_" + std::to_string(k)); }
VarId b_var(int j, int k) { return var("b" + std::to_string(j) + "_" + std::to_string(k)); }

void register_variables(int N) {
    x_var();
    zeta_var();
    t_var();
    for (int k = 0; k <= 1; ++k) {
        for (int i = 1; i <= N; ++i) a_var(i, k);
        for (int j = 1; j < N; ++j) b_var(j, k);
    }
}

ParameterSet ParameterSet::symbolic(int N) {
    ParameterSet p;
    p.N = N;
    for (int i = 1; i <= N; ++i) {
        p.a0.push_back(MultiPoly::variable(a_var(i, 0)));
        p.a1.push_back(MultiPoly::variable(a_var(i, 1)));
    }
    for (int j = 1; j < N; ++j) {
        p.b0.push_back(MultiPoly::variable(b_var(j, 0)));
        p.b1.push_back(MultiPoly::variable(b_var(j, 1)));
    }
    p.validate();
    return p;
}

ParameterSet ParameterSet::exact(int N, const std::vector<std::pair<Rational, Rational>>& a,
                                 const std::vector<std::pair<Rational, Rational>>& b) {
    ParameterSet p;
    p.N = N;
    for (const auto& [x0, x1] : a) {
        p.a0.emplace_back(x0);
        p.a1.emplace_back(x1);
    }
    for (const auto& [x0, x1] : b) {
        p.b0.emplace_back(x0);
        p.b1.emplace_back(x1);
    }
    p.validate();
    return p;
}

ParameterSet ParameterSet::random(int N, std::mt19937_64& rng, int range) {
    std::uniform_int_distribution<long> num(-range, range), den(1, 9);
    auto draw = [&] {
        long n = 0;
        while (n == 0) n = num(rng);
        return Rational(n, den(rng));
    };
    std::vector<std::pair<Rational, Rational>> a, b;
    for (int i = 0; i < N; ++i) {
        Rational x0 = draw();
        a.emplace_back(x0, draw());
    }
    for (int j = 0; j + 1 < N; ++j) {
        Rational x0 = draw();
        b.emplace_back(x0, draw());
    }
    return exact(N, a, b);
}

void ParameterSet::validate() const {
    if (N < 2) throw std::invalid_argument("N must be at least 2");
    if (int(a0.size()) != N || int(a1.size()) != N) throw std::invalid_argument("need N a-parameters");
    if (int(b0.size()) != N - 1 || int(b1.size()) != N - 1)
        throw std::invalid_argument("need N-1 b-parameters");
}

bool ParameterSet::is_exact() const {
    for (const auto* v : {&a0, &a1, &b0, &b1})
        for (const auto& e : *v)
            if (!e.is_constant()) return false;
    return true;
}

MultiPoly ParameterSet::a_scaled(int i) const {
    return a1.at(i - 1) + MultiPoly::variable(t_var()) * a0.at(i - 1);
}

MultiPoly ParameterSet::b_scaled(int j) const {
    return b1.at(j - 1) + MultiPoly::variable(t_var()) * b0.at(j - 1);
}

std::vector<MultiPoly> ParameterSet::a_scaled_all() const {
    std::vector<MultiPoly> r;
    for (int i = 1; i <= N; ++i) r.push_back(a_scaled(i));
    return r;
}

std::vector<MultiPoly> ParameterSet::b_scaled_all() const {
    std::vector<MultiPoly> r;
    for (int j = 1; j < N; ++j) r.push_back(b_scaled(j));
    return r;
}

ParameterSet ParameterSet::shift_a(int i, int k, const MultiPoly& delta) const {
    ParameterSet p(*this);
    (k == 0 ? p.a0 : p.a1).at(i - 1) += delta;
    return p;
}

ParameterSet ParameterSet::shift_b(int j, int k, const MultiPoly& delta) const {
    ParameterSet p(*this);
    (k == 0 ? p.b0 : p.b1).at(j - 1) += delta;
    return p;
}

ParameterSet ParameterSet::scale_linear(const Rational& lambda) const {
    ParameterSet p(*this);
    for (auto& e : p.a1) e = e.scaled(lambda);
    for (auto& e : p.b1) e = e.scaled(lambda);
    return p;
}

Rational ParameterSet::value_a(int i, int k) const { return (k == 0 ? a0 : a1).at(i - 1).constant_value(); }
Rational ParameterSet::value_b(int j, int k) const { return (k == 0 ? b0 : b1).at(j - 1).constant_value(); }

NumericParams NumericParams::from(const ParameterSet& p) {
    if (!p.is_exact()) throw std::invalid_argument("numeric parameters need exact-mode input");
    NumericParams n;
    n.N = p.N;
    for (int i = 0; i < p.N; ++i) {
        n.a0.emplace_back(p.a0[i].constant_value().to_double());
        n.a1.emplace_back(p.a1[i].constant_value().to_double());
    }
    for (int j = 0; j + 1 < p.N; ++j) {
        n.b0.emplace_back(p.b0[j].constant_value().to_double());
        n.b1.emplace_back(p.b1[j].constant_value().to_double());
    }
    return n;
}

std::string ShiftParam::name() const {
    return std::string(kind == ParamKind::A ? "a" : "b") + "_{" + std::to_string(index) + ",1}";
}

const MultiPoly& ParameterSet::entry(ShiftParam q, int k) const {
    const auto& v = q.kind == ParamKind::A ? (k ? a1 : a0) : (k ? b1 : b0);
    if (q.index < 1 || q.index > int(v.size())) throw std::out_of_range("parameter index out of range");
    return v[std::size_t(q.index - 1)];
}

ParameterSet ParameterSet::with_entry(ShiftParam q, int k, const MultiPoly& v) const {
    ParameterSet r(*this);
    const_cast<MultiPoly&>(r.entry(q, k)) = v;
    return r;
}

std::vector<ShiftParam> ParameterSet::linear_params() const {
    std::vector<ShiftParam> r;
    for (int i = 1; i <= N; ++i) r.push_back({ParamKind::A, i});
    for (int j = 1; j < N; ++j) r.push_back({ParamKind::B, j});
    return r;
}

}  // namespace ghg
