#include "qre/ansatz.hpp"

#include "qre/error.hpp"

#include <algorithm>
#include <tuple>

namespace qre {

AnsatzPoly AnsatzPoly::constant(int nvars, Scalar c) {
    AnsatzPoly out(nvars);
    if (!c.is_zero()) out.terms_[Mono(nvars, 0)] = std::move(c);
    return out;
}

AnsatzPoly AnsatzPoly::variable(int nvars, int v) {
    AnsatzPoly out(nvars);
    Mono m(nvars, 0);
    m[v] = 1;
    out.terms_[m] = Scalar(1);
    return out;
}

bool AnsatzPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first == Mono(nvars_, 0);
}

int AnsatzPoly::total_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) {
        int s = 0;
        for (int e : m) s += e;
        d = std::max(d, s);
    }
    return d;
}

int AnsatzPoly::degree_in(int v) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[v]);
    return d;
}

int AnsatzPoly::min_exponent(int v) const {
    if (terms_.empty()) return 0;
    int d = terms_.begin()->first[v];
    for (const auto& [m, c] : terms_) d = std::min(d, m[v]);
    return d;
}

AnsatzPoly operator+(const AnsatzPoly& a, const AnsatzPoly& b) {
    AnsatzPoly out = a;
    for (const auto& [m, c] : b.terms_) {
        auto it = out.terms_.find(m);
        if (it == out.terms_.end()) {
            out.terms_[m] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) out.terms_.erase(it);
        }
    }
    return out;
}

AnsatzPoly operator-(const AnsatzPoly& a, const AnsatzPoly& b) { return a + b.scaled(Scalar(-1)); }

AnsatzPoly operator*(const AnsatzPoly& a, const AnsatzPoly& b) {
    AnsatzPoly out(a.nvars_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            AnsatzPoly::Mono m(a.nvars_);
            for (int t = 0; t < a.nvars_; ++t) m[t] = ma[t] + mb[t];
            auto it = out.terms_.find(m);
            if (it == out.terms_.end()) {
                Scalar c = ca * cb;
                if (!c.is_zero()) out.terms_[m] = std::move(c);
            } else {
                it->second += ca * cb;
                if (it->second.is_zero()) out.terms_.erase(it);
            }
        }
    }
    return out;
}

AnsatzPoly AnsatzPoly::scaled(const Scalar& c) const {
    AnsatzPoly out(nvars_);
    if (c.is_zero()) return out;
    for (const auto& [m, x] : terms_) out.terms_[m] = x * c;
    return out;
}

AnsatzPoly AnsatzPoly::normalized() const {
    if (terms_.empty()) return *this;
    return scaled(terms_.rbegin()->second.inverse());
}

AnsatzPoly AnsatzPoly::substituted(int v, const AnsatzPoly& expr) const {
    AnsatzPoly out(nvars_);
    for (const auto& [m, c] : terms_) {
        Mono rest = m;
        const int e = rest[v];
        rest[v] = 0;
        AnsatzPoly t(nvars_);
        t.terms_[rest] = c;
        for (int k = 0; k < e; ++k) t = t * expr;
        out = out + t;
    }
    return out;
}

AnsatzPoly AnsatzPoly::divided_by_monomial(const Mono& m) const {
    AnsatzPoly out(nvars_);
    for (const auto& [mm, c] : terms_) {
        Mono r = mm;
        for (int t = 0; t < nvars_; ++t) {
            r[t] -= m[t];
            if (r[t] < 0) throw Error("inexact monomial division");
        }
        out.terms_[r] = c;
    }
    return out;
}

Scalar AnsatzPoly::eval(const std::vector<Scalar>& values) const {
    Scalar acc;
    for (const auto& [m, c] : terms_) {
        Scalar t = c;
        for (int v = 0; v < nvars_; ++v) {
            for (int k = 0; k < m[v]; ++k) t *= values[v];
        }
        acc += t;
    }
    return acc;
}

std::string AnsatzPoly::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) out += " + ";
        first = false;
        std::string mono;
        for (int v = 0; v < nvars_; ++v) {
            for (int k = 0; k < it->first[v]; ++k) {
                if (!mono.empty()) mono += "*";
                mono += names[v];
            }
        }
        if (mono.empty()) {
            out += it->second.to_string();
        } else if (it->second.is_one()) {
            out += mono;
        } else {
            out += "(" + it->second.to_string() + ")*" + mono;
        }
    }
    return out;
}

AnsatzPattern ansatz_pattern(long d, AnsatzKind kind) {
    AnsatzPattern pat;
    pat.d = d;
    auto name = [](long r, long c) {
        return "k" + std::to_string(r + 1) + std::to_string(c + 1);
    };
    switch (kind) {
        case AnsatzKind::diagonal:
            for (long i = 0; i < d; ++i) {
                pat.names.push_back(name(i, i));
                pat.positions.push_back({i, i});
            }
            break;
        case AnsatzKind::antidiagonal:
            for (long i = 0; i < d; ++i) {
                pat.names.push_back(name(i, d - 1 - i));
                pat.positions.push_back({i, d - 1 - i});
            }
            break;
        case AnsatzKind::upper_triangular:
            for (long i = 0; i < d; ++i) {
                for (long j = i; j < d; ++j) {
                    pat.names.push_back(name(i, j));
                    pat.positions.push_back({i, j});
                }
            }
            break;
    }
    return pat;
}

namespace {

using Grid = std::vector<std::vector<AnsatzPoly>>;

Grid zero_grid(std::size_t n, int nvars) {
    return Grid(n, std::vector<AnsatzPoly>(n, AnsatzPoly(nvars)));
}

Grid lift(const Mat& m, int nvars) {
    Grid g = zero_grid(m.rows(), nvars);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (!m.at(r, c).is_zero()) g[r][c] = AnsatzPoly::constant(nvars, m.at(r, c));
        }
    }
    return g;
}

Grid mul(const Grid& a, const Grid& b) {
    const std::size_t n = a.size();
    Grid out = zero_grid(n, a[0][0].nvars());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (b[k][j].is_zero()) continue;
                out[i][j] = out[i][j] + a[i][k] * b[k][j];
            }
        }
    }
    return out;
}

Grid kron_grid(const Grid& a, const Grid& b) {
    const std::size_t na = a.size();
    const std::size_t nb = b.size();
    Grid out = zero_grid(na * nb, a[0][0].nvars());
    for (std::size_t ia = 0; ia < na; ++ia) {
        for (std::size_t ja = 0; ja < na; ++ja) {
            if (a[ia][ja].is_zero()) continue;
            for (std::size_t ib = 0; ib < nb; ++ib) {
                for (std::size_t jb = 0; jb < nb; ++jb) {
                    if (b[ib][jb].is_zero()) continue;
                    out[ia * nb + ib][ja * nb + jb] = a[ia][ja] * b[ib][jb];
                }
            }
        }
    }
    return out;
}

Grid identity_grid(std::size_t n, int nvars) {
    Grid g = zero_grid(n, nvars);
    for (std::size_t i = 0; i < n; ++i) g[i][i] = AnsatzPoly::constant(nvars, Scalar(1));
    return g;
}

}  // namespace

std::vector<std::vector<AnsatzPoly>> re_residual_symbolic(const Mat& r, const AnsatzPattern& pat) {
    const int nvars = static_cast<int>(pat.names.size());
    const std::size_t d = static_cast<std::size_t>(pat.d);
    Grid k = zero_grid(d, nvars);
    for (int v = 0; v < nvars; ++v) {
        k[pat.positions[v].first][pat.positions[v].second] = AnsatzPoly::variable(nvars, v);
    }
    const Grid id = identity_grid(d, nvars);
    const Grid k1 = kron_grid(k, id);
    const Grid k2 = kron_grid(id, k);
    const Grid rr = lift(r, nvars);
    const Grid r21 = lift(leg_permute(r, {2, 1}), nvars);
    const Grid lhs = mul(mul(mul(r21, k1), rr), k2);
    const Grid rhs = mul(mul(mul(k2, r21), k1), rr);
    Grid out = zero_grid(lhs.size(), nvars);
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        for (std::size_t j = 0; j < lhs.size(); ++j) out[i][j] = lhs[i][j] - rhs[i][j];
    }
    return out;
}

namespace {

// One elimination branch: explicit bindings are substituted eagerly; an
// implicit record (v, coef, rest) stands for coef*v + rest = 0 with coef
// nonzero on the branch.
struct SolveState {
    std::vector<AnsatzPoly> sys;
    std::map<int, AnsatzPoly> bound;
    std::vector<std::tuple<int, AnsatzPoly, AnsatzPoly>> implicit;
};

struct FoundFamily {
    std::map<int, AnsatzPoly> bound;
    std::vector<std::tuple<int, AnsatzPoly, AnsatzPoly>> implicit;
};

void push_poly(std::vector<AnsatzPoly>& sys, const AnsatzPoly& p) {
    if (p.is_zero()) return;
    const AnsatzPoly n = p.normalized();
    if (std::find(sys.begin(), sys.end(), n) == sys.end()) sys.push_back(n);
}

SolveState bind_var(SolveState st, int v, const AnsatzPoly& expr) {
    std::vector<AnsatzPoly> sys;
    for (const auto& p : st.sys) push_poly(sys, p.substituted(v, expr));
    st.sys = std::move(sys);
    for (auto& [w, e] : st.bound) e = e.substituted(v, expr);
    for (auto& [w, c, r] : st.implicit) {
        c = c.substituted(v, expr);
        r = r.substituted(v, expr);
    }
    st.bound[v] = expr;
    return st;
}

// Removes v from the system assuming coef*v = -rest with coef nonzero:
// each polynomial sum_k p_k v^k becomes sum_k p_k (-rest)^k coef^(D-k).
SolveState eliminate_var(SolveState st, std::size_t chosen, int v, const AnsatzPoly& coef,
                         const AnsatzPoly& rest) {
    const int nvars = coef.nvars();
    std::vector<AnsatzPoly> sys;
    for (std::size_t idx = 0; idx < st.sys.size(); ++idx) {
        if (idx == chosen) continue;
        const AnsatzPoly& p = st.sys[idx];
        const int dv = p.degree_in(v);
        if (dv == 0) {
            push_poly(sys, p);
            continue;
        }
        // split p by powers of v
        std::vector<AnsatzPoly> by_power(dv + 1, AnsatzPoly(nvars));
        for (const auto& [m, c] : p.terms()) {
            AnsatzPoly::Mono rm = m;
            const int e = rm[v];
            rm[v] = 0;
            AnsatzPoly t(nvars);
            t = AnsatzPoly::constant(nvars, c);
            AnsatzPoly monoPoly(nvars);
            {
                AnsatzPoly one = AnsatzPoly::constant(nvars, Scalar(1));
                monoPoly = one;
                for (int var = 0; var < nvars; ++var) {
                    for (int kk = 0; kk < rm[var]; ++kk) {
                        monoPoly = monoPoly * AnsatzPoly::variable(nvars, var);
                    }
                }
            }
            by_power[e] = by_power[e] + t * monoPoly;
        }
        const AnsatzPoly neg_rest = rest.scaled(Scalar(-1));
        AnsatzPoly acc(nvars);
        for (int kpow = 0; kpow <= dv; ++kpow) {
            if (by_power[kpow].is_zero()) continue;
            AnsatzPoly t = by_power[kpow];
            for (int a = 0; a < kpow; ++a) t = t * neg_rest;
            for (int a = 0; a < dv - kpow; ++a) t = t * coef;
            acc = acc + t;
        }
        push_poly(sys, acc);
    }
    st.sys = std::move(sys);
    st.implicit.push_back({v, coef, rest});
    return st;
}

class AnsatzSolver {
public:
    explicit AnsatzSolver(int nvars) : nvars_(nvars) {}

    std::vector<FoundFamily> run(std::vector<AnsatzPoly> sys) {
        SolveState st;
        for (const auto& p : sys) push_poly(st.sys, p);
        solve(std::move(st), 0);
        return std::move(found_);
    }

private:
    void emit(const SolveState& st) { found_.push_back({st.bound, st.implicit}); }

    void solve(SolveState st, int depth) {
        if (depth > 64 || ++branches_ > 4096) throw Error("ansatz elimination did not terminate");
        for (const auto& p : st.sys) {
            if (!p.is_zero() && p.is_constant()) return;  // contradiction
        }
        std::erase_if(st.sys, [](const AnsatzPoly& p) { return p.is_zero(); });
        if (st.sys.empty()) {
            emit(st);
            return;
        }
        std::vector<std::size_t> order(st.sys.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            const auto ka = std::make_pair(st.sys[a].total_degree(), st.sys[a].terms().size());
            const auto kb = std::make_pair(st.sys[b].total_degree(), st.sys[b].terms().size());
            return ka < kb;
        });
        for (std::size_t idx : order) {
            if (try_poly(st, idx, depth)) return;
        }
        throw Error("ansatz elimination stuck");
    }

    bool try_poly(const SolveState& st, std::size_t idx, int depth) {
        const AnsatzPoly& p = st.sys[idx];
        // linear polynomial: solve for the first variable present
        if (p.total_degree() == 1) {
            for (int v = 0; v < nvars_; ++v) {
                if (p.degree_in(v) != 1) continue;
                AnsatzPoly::Mono mv(nvars_, 0);
                mv[v] = 1;
                const Scalar c = p.terms().at(mv);
                AnsatzPoly rest = p - AnsatzPoly::variable(nvars_, v).scaled(c);
                SolveState next = st;
                next.sys.erase(next.sys.begin() + static_cast<long>(idx));
                solve(bind_var(std::move(next), v, rest.scaled(Scalar(-1) / c)), depth + 1);
                return true;
            }
        }
        // monomial content: branch each content variable to zero, plus the
        // cofactor equation
        {
            std::vector<int> content;
            AnsatzPoly::Mono cm(nvars_, 0);
            for (int v = 0; v < nvars_; ++v) {
                const int e = p.min_exponent(v);
                if (!p.is_zero() && e >= 1) {
                    content.push_back(v);
                    cm[v] = e;
                }
            }
            if (!content.empty()) {
                for (int v : content) {
                    solve(bind_var(st, v, AnsatzPoly(nvars_)), depth + 1);
                }
                const AnsatzPoly cofactor = p.divided_by_monomial(cm);
                if (!cofactor.is_constant()) {
                    SolveState next = st;
                    next.sys.erase(next.sys.begin() + static_cast<long>(idx));
                    push_poly(next.sys, cofactor);
                    solve(std::move(next), depth + 1);
                }
                return true;
            }
        }
        // linear in one variable: either bind (constant coefficient) or split
        // on the coefficient vanishing
        for (int v = 0; v < nvars_; ++v) {
            if (p.degree_in(v) != 1) continue;
            AnsatzPoly coef(nvars_);
            AnsatzPoly rest(nvars_);
            for (const auto& [m, c] : p.terms()) {
                AnsatzPoly::Mono rm = m;
                if (rm[v] == 1) {
                    rm[v] = 0;
                    AnsatzPoly t = AnsatzPoly::constant(nvars_, c);
                    for (int var = 0; var < nvars_; ++var) {
                        for (int kk = 0; kk < rm[var]; ++kk) t = t * AnsatzPoly::variable(nvars_, var);
                    }
                    coef = coef + t;
                } else {
                    AnsatzPoly t = AnsatzPoly::constant(nvars_, c);
                    for (int var = 0; var < nvars_; ++var) {
                        for (int kk = 0; kk < rm[var]; ++kk) t = t * AnsatzPoly::variable(nvars_, var);
                    }
                    rest = rest + t;
                }
            }
            if (coef.is_constant()) {
                const Scalar c = coef.terms().begin()->second;
                SolveState next = st;
                next.sys.erase(next.sys.begin() + static_cast<long>(idx));
                solve(bind_var(std::move(next), v, rest.scaled(Scalar(-1) / c)), depth + 1);
                return true;
            }
            {
                SolveState zero_branch = st;
                zero_branch.sys.erase(zero_branch.sys.begin() + static_cast<long>(idx));
                push_poly(zero_branch.sys, coef);
                push_poly(zero_branch.sys, rest);
                solve(std::move(zero_branch), depth + 1);
            }
            solve(eliminate_var(st, idx, v, coef, rest), depth + 1);
            return true;
        }
        return false;
    }

    int nvars_;
    int branches_ = 0;
    std::vector<FoundFamily> found_;
};

bool family_subsumed_by(const FoundFamily& a, const FoundFamily& b, int nvars) {
    if (!a.implicit.empty() || !b.implicit.empty()) return false;
    for (const auto& [v, e] : b.bound) {
        AnsatzPoly eq = AnsatzPoly::variable(nvars, v) - e;
        for (const auto& [w, f] : a.bound) eq = eq.substituted(w, f);
        if (!eq.is_zero()) return false;
    }
    return true;
}

}  // namespace

std::vector<AnsatzSolution> solve_ansatz(const Mat& r, AnsatzKind kind) {
    if (r.row_legs().size() != 2 || r.row_legs() != r.col_legs() ||
        r.row_legs()[0] != r.row_legs()[1]) {
        throw Error("an R-matrix needs two equal legs");
    }
    const long d = r.row_legs()[0];
    if (d > 3) throw Error("unsupported ansatz for dimension > 3");
    const AnsatzPattern pat = ansatz_pattern(d, kind);
    const int nvars = static_cast<int>(pat.names.size());

    std::vector<AnsatzPoly> sys;
    for (const auto& row : re_residual_symbolic(r, pat)) {
        for (const auto& p : row) push_poly(sys, p);
    }
    AnsatzSolver solver(nvars);
    std::vector<FoundFamily> families = solver.run(std::move(sys));

    // drop exact duplicates and families strictly contained in another one
    std::vector<FoundFamily> kept;
    for (const auto& f : families) {
        bool skip = false;
        for (const auto& g : kept) {
            if (f.bound == g.bound && f.implicit == g.implicit) skip = true;
        }
        if (!skip) kept.push_back(f);
    }
    std::vector<bool> drop(kept.size(), false);
    for (std::size_t a = 0; a < kept.size(); ++a) {
        for (std::size_t b = 0; b < kept.size(); ++b) {
            if (a == b || drop[a] || drop[b]) continue;
            if (kept[a].bound == kept[b].bound) continue;
            if (family_subsumed_by(kept[a], kept[b], nvars) &&
                !family_subsumed_by(kept[b], kept[a], nvars)) {
                drop[a] = true;
            }
        }
    }

    std::vector<AnsatzSolution> out;
    for (std::size_t fi = 0; fi < kept.size(); ++fi) {
        if (drop[fi]) continue;
        const FoundFamily& fam = kept[fi];
        std::vector<Scalar> values(nvars, Scalar(1));
        bool usable = true;
        // implicit records reference only later-free variables; evaluate from
        // the last elimination backwards
        for (auto it = fam.implicit.rbegin(); it != fam.implicit.rend(); ++it) {
            const auto& [v, coef, rest] = *it;
            const Scalar c = coef.eval(values);
            if (c.is_zero()) {
                usable = false;
                break;
            }
            values[v] = (rest.eval(values) / c) * Scalar(-1);
        }
        if (!usable) continue;
        for (const auto& [v, e] : fam.bound) values[v] = e.eval(values);

        Mat km({pat.d, 1}, {pat.d, 1});
        for (int v = 0; v < nvars; ++v) {
            km.at(static_cast<std::size_t>(pat.positions[v].first),
                  static_cast<std::size_t>(pat.positions[v].second)) = values[v];
        }
        if (km.is_zero()) continue;

        std::string desc;
        for (int v = 0; v < nvars; ++v) {
            if (!desc.empty()) desc += ", ";
            const auto bit = fam.bound.find(v);
            if (bit != fam.bound.end()) {
                desc += pat.names[v] + " = " + bit->second.to_string(pat.names);
                continue;
            }
            bool is_implicit = false;
            for (const auto& [w, coef, rest] : fam.implicit) {
                if (w == v) {
                    desc += pat.names[v] + ": (" + coef.to_string(pat.names) + ")*" + pat.names[v] +
                            " + " + rest.to_string(pat.names) + " = 0";
                    is_implicit = true;
                    break;
                }
            }
            if (!is_implicit) desc += pat.names[v] + " free";
        }

        bool duplicate = false;
        for (const auto& sol : out) {
            if (sol.k.k == km) duplicate = true;
        }
        if (duplicate) continue;
        out.push_back({REMatrix{"f", 1, std::move(km)}, std::move(desc)});
    }
    return out;
}

}  // namespace qre
