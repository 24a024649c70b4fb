#include "listpack/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace listpack {

namespace {

Rational dot(const std::vector<Rational>& y, const SparseColumn& col)
{
    Rational s = 0;
    for (auto [row, val] : col.entries) {
        s += y[row] * val;
    }
    return s;
}

mpz_class common_denominator(const std::vector<Rational>& y)
{
    mpz_class den = 1;
    for (const auto& q : y) {
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    }
    return den;
}

/// y scaled by the lcm of its denominators.
std::vector<mpz_class> scaled(const std::vector<Rational>& y)
{
    const mpz_class den = common_denominator(y);
    std::vector<mpz_class> out(y.size());
    for (size_t i = 0; i < y.size(); ++i) {
        out[i] = y[i].get_num() * (den / y[i].get_den());
    }
    return out;
}

bool positive_price(const std::vector<mpz_class>& y, const SparseColumn& col, mpz_class& tmp)
{
    tmp = 0;
    for (auto [row, val] : col.entries) {
        if (val == 1) {
            tmp += y[row];
        } else if (val == -1) {
            tmp -= y[row];
        } else {
            tmp += y[row] * val;
        }
    }
    return sgn(tmp) > 0;
}

}  // namespace

LpSolution solve_feasibility(std::vector<SparseColumn> columns, const std::vector<Rational>& rhs, ColumnSource* source)
{
    const int m = static_cast<int>(rhs.size());
    std::vector<int> sign(m, 1);
    for (int r = 0; r < m; ++r) {
        if (sgn(rhs[r]) < 0) {
            sign[r] = -1;
        }
    }
    auto oriented = [&](SparseColumn col) {
        for (auto& [row, val] : col.entries) {
            if (row < 0 || row >= m) {
                throw std::invalid_argument("solve_feasibility: column row out of range");
            }
            val *= sign[row];
        }
        return col;
    };
    for (auto& c : columns) {
        c = oriented(c);
    }

    // Integer-preserving form: B^-1 = M / D and x_B = X / (D * scale), with D = det(B) > 0.
    // Pivot updates divide exactly by the previous D.
    std::vector<Rational> b(m);
    for (int r = 0; r < m; ++r) {
        b[r] = rhs[r] * sign[r];
    }
    const mpz_class scale = common_denominator(b);
    const auto b_int = scaled(b);

    // basis[r] >= 0: pool column; basis[r] < 0: artificial of row -basis[r]-1
    std::vector<int> basis(m);
    std::vector<mpz_class> x(m);
    std::vector<std::vector<mpz_class>> mat(m, std::vector<mpz_class>(m, 0));
    mpz_class det = 1;
    for (int r = 0; r < m; ++r) {
        basis[r] = -r - 1;
        x[r] = b_int[r];
        mat[r][r] = 1;
    }
    std::vector<bool> in_basis(columns.size(), false);
    auto key = [&](int var) -> long long {
        return var >= 0 ? var : static_cast<long long>(1) << 40 | static_cast<long long>(-var);
    };

    LpSolution sol;
    std::vector<mpz_class> yz(m);
    std::vector<mpz_class> u(m);
    mpz_class tmp, lhs, rhs_cmp;
    for (;;) {
        for (int i = 0; i < m; ++i) {
            yz[i] = 0;
        }
        for (int r = 0; r < m; ++r) {
            if (basis[r] < 0) {
                for (int i = 0; i < m; ++i) {
                    if (sgn(mat[r][i]) != 0) {
                        yz[i] += mat[r][i];
                    }
                }
            }
        }
        int entering = -1;
        for (size_t j = 0; j < columns.size(); ++j) {
            if (!in_basis[j] && positive_price(yz, columns[j], tmp)) {
                entering = static_cast<int>(j);
                break;
            }
        }
        if (entering < 0 && source) {
            std::vector<Rational> y_orig(m);
            for (int i = 0; i < m; ++i) {
                y_orig[i] = Rational(yz[i] * sign[i], det);
                y_orig[i].canonicalize();
            }
            if (auto col = source->improving(y_orig)) {
                auto c = oriented(*col);
                if (!positive_price(yz, c, tmp)) {
                    throw std::logic_error("solve_feasibility: column source returned a non-improving column");
                }
                columns.push_back(std::move(c));
                in_basis.push_back(false);
                entering = static_cast<int>(columns.size()) - 1;
            }
        }
        if (entering < 0) {
            break;
        }
        const auto& col = columns[entering];
        for (int r = 0; r < m; ++r) {
            u[r] = 0;
            for (auto [row, val] : col.entries) {
                if (sgn(mat[r][row]) != 0) {
                    if (val == 1) {
                        u[r] += mat[r][row];
                    } else {
                        u[r] += mat[r][row] * val;
                    }
                }
            }
        }
        int leave = -1;
        for (int r = 0; r < m; ++r) {
            if (sgn(u[r]) <= 0) {
                continue;
            }
            if (leave < 0) {
                leave = r;
                continue;
            }
            // x[r]/u[r] versus x[leave]/u[leave]
            lhs = x[r] * u[leave];
            rhs_cmp = x[leave] * u[r];
            const int c = cmp(lhs, rhs_cmp);
            if (c < 0 || (c == 0 && key(basis[r]) < key(basis[leave]))) {
                leave = r;
            }
        }
        if (leave < 0) {
            throw std::logic_error("solve_feasibility: unbounded phase one");
        }
        const mpz_class pivot = u[leave];
        for (int r = 0; r < m; ++r) {
            if (r == leave) {
                continue;
            }
            if (sgn(u[r]) == 0) {
                if (pivot != det) {
                    for (int i = 0; i < m; ++i) {
                        if (sgn(mat[r][i]) != 0) {
                            mat[r][i] *= pivot;
                            mpz_divexact(mat[r][i].get_mpz_t(), mat[r][i].get_mpz_t(), det.get_mpz_t());
                        }
                    }
                    x[r] *= pivot;
                    mpz_divexact(x[r].get_mpz_t(), x[r].get_mpz_t(), det.get_mpz_t());
                }
                continue;
            }
            for (int i = 0; i < m; ++i) {
                const bool here = sgn(mat[r][i]) != 0;
                const bool there = sgn(mat[leave][i]) != 0;
                if (!here && !there) {
                    continue;
                }
                tmp = mat[r][i] * pivot;
                if (there) {
                    tmp -= u[r] * mat[leave][i];
                }
                mpz_divexact(mat[r][i].get_mpz_t(), tmp.get_mpz_t(), det.get_mpz_t());
            }
            tmp = x[r] * pivot - u[r] * x[leave];
            mpz_divexact(x[r].get_mpz_t(), tmp.get_mpz_t(), det.get_mpz_t());
        }
        det = pivot;
        if (basis[leave] >= 0) {
            in_basis[basis[leave]] = false;
        }
        basis[leave] = entering;
        in_basis[entering] = true;
        ++sol.pivots;
    }

    mpz_class objective = 0;
    for (int r = 0; r < m; ++r) {
        if (basis[r] < 0) {
            objective += x[r];
        }
    }
    // undo the row orientation before handing columns back
    for (auto& c : columns) {
        for (auto& [row, val] : c.entries) {
            val *= sign[row];
        }
    }
    sol.columns = std::move(columns);
    if (sgn(objective) == 0) {
        sol.feasible = true;
        sol.x.assign(sol.columns.size(), 0);
        const Rational denom(det * scale);
        for (int r = 0; r < m; ++r) {
            if (basis[r] >= 0) {
                sol.x[basis[r]] = Rational(x[r]) / denom;
            }
        }
    } else {
        sol.farkas.resize(m);
        for (int i = 0; i < m; ++i) {
            sol.farkas[i] = Rational(yz[i] * sign[i], det);
            sol.farkas[i].canonicalize();
        }
    }
    return sol;
}

bool verify_primal(const std::vector<SparseColumn>& columns, const std::vector<Rational>& rhs,
                   const std::vector<Rational>& x)
{
    if (x.size() != columns.size()) {
        return false;
    }
    std::vector<Rational> lhs(rhs.size(), 0);
    for (size_t j = 0; j < columns.size(); ++j) {
        if (sgn(x[j]) < 0) {
            return false;
        }
        if (sgn(x[j]) == 0) {
            continue;
        }
        for (auto [row, val] : columns[j].entries) {
            lhs.at(row) += x[j] * val;
        }
    }
    return lhs == rhs;
}

bool verify_farkas(const std::vector<SparseColumn>& columns, const std::vector<Rational>& rhs,
                   const std::vector<Rational>& y)
{
    if (y.size() != rhs.size()) {
        return false;
    }
    for (const auto& c : columns) {
        if (sgn(dot(y, c)) > 0) {
            return false;
        }
    }
    Rational yb = 0;
    for (size_t i = 0; i < rhs.size(); ++i) {
        yb += y[i] * rhs[i];
    }
    return sgn(yb) > 0;
}

}  // namespace listpack

namespace listpack {

namespace {

/// Solves M z = rhs exactly (M square, integer) by fraction-free elimination; nullopt if singular.
std::optional<std::vector<Rational>> solve_exact(std::vector<std::vector<mpz_class>> a, std::vector<mpz_class> rhs_num,
                                                 const mpz_class& rhs_den)
{
    const int m = static_cast<int>(a.size());
    for (int r = 0; r < m; ++r) {
        a[r].push_back(rhs_num[r]);
    }
    mpz_class prev = 1;
    for (int k = 0; k < m; ++k) {
        int piv = k;
        while (piv < m && sgn(a[piv][k]) == 0) {
            ++piv;
        }
        if (piv == m) {
            return std::nullopt;
        }
        std::swap(a[piv], a[k]);
        for (int i = k + 1; i < m; ++i) {
            for (int j = k + 1; j <= m; ++j) {
                mpz_class t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    std::vector<Rational> z(m);
    for (int i = m - 1; i >= 0; --i) {
        Rational acc(a[i][m]);
        for (int j = i + 1; j < m; ++j) {
            if (sgn(a[i][j]) != 0) {
                acc -= Rational(a[i][j]) * z[j];
            }
        }
        z[i] = acc / Rational(a[i][i]);
    }
    for (auto& q : z) {
        q /= Rational(rhs_den);
    }
    return z;
}

/// Inverts the basis in double precision (Gauss-Jordan, partial pivoting); false if singular.
bool reinvert(const std::vector<SparseColumn>& columns, const std::vector<int>& basis, const std::vector<int>& sign,
              std::vector<std::vector<double>>& binv)
{
    const int m = static_cast<int>(basis.size());
    std::vector<std::vector<double>> a(m, std::vector<double>(2 * m, 0.0));
    for (int r = 0; r < m; ++r) {
        if (basis[r] < 0) {
            a[-basis[r] - 1][r] = 1;
        } else {
            for (auto [row, val] : columns[basis[r]].entries) {
                a[row][r] += val * sign[row];
            }
        }
        a[r][m + r] = 1;
    }
    for (int k = 0; k < m; ++k) {
        int piv = k;
        for (int i = k + 1; i < m; ++i) {
            if (std::abs(a[i][k]) > std::abs(a[piv][k])) {
                piv = i;
            }
        }
        if (std::abs(a[piv][k]) < 1e-12) {
            return false;
        }
        std::swap(a[piv], a[k]);
        const double d = a[k][k];
        for (int j = 0; j < 2 * m; ++j) {
            a[k][j] /= d;
        }
        for (int i = 0; i < m; ++i) {
            if (i != k && a[i][k] != 0.0) {
                const double f = a[i][k];
                for (int j = 0; j < 2 * m; ++j) {
                    a[i][j] -= f * a[k][j];
                }
            }
        }
    }
    for (int r = 0; r < m; ++r) {
        binv[r].assign(a[r].begin() + m, a[r].end());
    }
    return true;
}

}  // namespace

LpSolution solve_feasibility_guided(std::vector<SparseColumn> columns, const std::vector<Rational>& rhs,
                                    ColumnSource* source)
{
    constexpr double eps = 1e-9;
    const int m = static_cast<int>(rhs.size());
    std::vector<int> sign(m, 1);
    for (int r = 0; r < m; ++r) {
        if (sgn(rhs[r]) < 0) {
            sign[r] = -1;
        }
    }
    for (auto& c : columns) {
        for (auto& [row, val] : c.entries) {
            if (row < 0 || row >= m) {
                throw std::invalid_argument("solve_feasibility: column row out of range");
            }
        }
    }
    auto oriented_price = [&](const std::vector<double>& y, const SparseColumn& col) {
        double s = 0;
        for (auto [row, val] : col.entries) {
            s += y[row] * val * sign[row];
        }
        return s;
    };

    // floating-point phase one; columns stay in original orientation, rows are flipped on the fly
    std::vector<int> basis(m);
    std::vector<double> xb(m);
    std::vector<std::vector<double>> binv(m, std::vector<double>(m, 0.0));
    // the float phase works on a slightly perturbed right-hand side against degeneracy
    std::vector<double> b_float(m);
    for (int r = 0; r < m; ++r) {
        const double jitter = 1e-6 * (1 + static_cast<double>(static_cast<std::uint32_t>(r * 2654435761u)) / 4294967296.0);
        b_float[r] = Rational(rhs[r] * sign[r]).get_d() + jitter;
        basis[r] = -r - 1;
        xb[r] = b_float[r];
        binv[r][r] = 1;
    }
    std::vector<bool> in_basis(columns.size(), false);
    std::vector<double> y(m), u(m);
    std::uint64_t pivots = 0;
    const std::uint64_t pivot_limit = 200000;
    bool converged = false;
    // Dantzig pricing until the objective stalls, then Bland's rule until it moves again
    double last_objective = std::numeric_limits<double>::infinity();
    int stalled = 0;
    while (pivots < pivot_limit) {
        double objective = 0;
        for (int r = 0; r < m; ++r) {
            if (basis[r] < 0) {
                objective += xb[r];
            }
        }
        if (objective < last_objective - 1e-12) {
            last_objective = objective;
            stalled = 0;
        } else {
            ++stalled;
        }
        const bool bland = stalled > 50;
        std::fill(y.begin(), y.end(), 0.0);
        for (int r = 0; r < m; ++r) {
            if (basis[r] < 0) {
                for (int i = 0; i < m; ++i) {
                    y[i] += binv[r][i];
                }
            }
        }
        int entering = -1;
        double best = eps;
        for (size_t j = 0; j < columns.size(); ++j) {
            if (!in_basis[j]) {
                const double p = oriented_price(y, columns[j]);
                if (p > best) {
                    best = p;
                    entering = static_cast<int>(j);
                    if (bland) {
                        break;
                    }
                }
            }
        }
        if (entering < 0 && source) {
            std::vector<Rational> y_orig(m);
            for (int i = 0; i < m; ++i) {
                y_orig[i] = Rational(y[i] * sign[i]);
            }
            if (auto col = source->improving(y_orig)) {
                if (oriented_price(y, *col) > eps) {
                    columns.push_back(std::move(*col));
                    in_basis.push_back(false);
                    entering = static_cast<int>(columns.size()) - 1;
                }
            }
        }
        if (entering < 0) {
            converged = true;
            break;
        }
        const auto& col = columns[entering];
        for (int r = 0; r < m; ++r) {
            double s = 0;
            for (auto [row, val] : col.entries) {
                s += binv[r][row] * val * sign[row];
            }
            u[r] = s;
        }
        int leave = -1;
        double ratio = 0;
        for (int r = 0; r < m; ++r) {
            if (u[r] <= 1e-7) {
                continue;
            }
            const double q = std::max(xb[r], 0.0) / u[r];
            if (leave < 0 || q < ratio || (q == ratio && u[r] > u[leave])) {
                leave = r;
                ratio = q;
            }
        }
        if (leave < 0) {
            break;
        }
        const double pivot = u[leave];
        for (int i = 0; i < m; ++i) {
            binv[leave][i] /= pivot;
        }
        xb[leave] /= pivot;
        for (int r = 0; r < m; ++r) {
            if (r == leave || u[r] == 0.0) {
                continue;
            }
            const double f = u[r];
            for (int i = 0; i < m; ++i) {
                binv[r][i] -= f * binv[leave][i];
            }
            xb[r] -= f * xb[leave];
        }
        if (basis[leave] >= 0) {
            in_basis[basis[leave]] = false;
        }
        basis[leave] = entering;
        in_basis[entering] = true;
        ++pivots;
        if (pivots % 100 == 0) {
            if (!reinvert(columns, basis, sign, binv)) {
                break;
            }
            for (int r = 0; r < m; ++r) {
                double v = 0;
                for (int i = 0; i < m; ++i) {
                    v += binv[r][i] * b_float[i];
                }
                xb[r] = v;
            }
        }
    }

    if (converged) {
        // exact basis matrix in the oriented rows
        std::vector<std::vector<mpz_class>> bmat(m, std::vector<mpz_class>(m, 0));
        for (int r = 0; r < m; ++r) {
            if (basis[r] < 0) {
                bmat[-basis[r] - 1][r] = 1;
            } else {
                for (auto [row, val] : columns[basis[r]].entries) {
                    bmat[row][r] += val * sign[row];
                }
            }
        }
        std::vector<Rational> b(m);
        for (int r = 0; r < m; ++r) {
            b[r] = rhs[r] * sign[r];
        }
        const mpz_class den = common_denominator(b);
        const auto b_int = scaled(b);
        auto xb_exact = solve_exact(bmat, b_int, den);
        if (xb_exact) {
            bool nonneg = true;
            Rational objective = 0;
            for (int r = 0; r < m; ++r) {
                nonneg = nonneg && sgn((*xb_exact)[r]) >= 0;
                if (basis[r] < 0) {
                    objective += (*xb_exact)[r];
                }
            }
            if (nonneg && sgn(objective) == 0) {
                LpSolution sol;
                sol.feasible = true;
                sol.pivots = pivots;
                sol.x.assign(columns.size(), 0);
                for (int r = 0; r < m; ++r) {
                    if (basis[r] >= 0) {
                        sol.x[basis[r]] = (*xb_exact)[r];
                    }
                }
                sol.columns = std::move(columns);
                if (verify_primal(sol.columns, rhs, sol.x)) {
                    return sol;
                }
                columns = std::move(sol.columns);
            } else if (sgn(objective) > 0) {
                // y^T B = c_B, c = 1 on artificials
                std::vector<std::vector<mpz_class>> bt(m, std::vector<mpz_class>(m));
                std::vector<mpz_class> cb(m);
                for (int r = 0; r < m; ++r) {
                    for (int i = 0; i < m; ++i) {
                        bt[r][i] = bmat[i][r];
                    }
                    cb[r] = basis[r] < 0 ? 1 : 0;
                }
                if (auto yo = solve_exact(bt, cb, 1)) {
                    std::vector<Rational> farkas(m);
                    for (int i = 0; i < m; ++i) {
                        farkas[i] = (*yo)[i] * sign[i];
                    }
                    bool certified = verify_farkas(columns, rhs, farkas);
                    if (certified && source) {
                        if (auto col = source->improving(farkas)) {
                            certified = false;
                            columns.push_back(std::move(*col));
                        }
                    }
                    if (certified) {
                        LpSolution sol;
                        sol.pivots = pivots;
                        sol.farkas = std::move(farkas);
                        sol.columns = std::move(columns);
                        return sol;
                    }
                }
            }
        }
    }
    auto sol = solve_feasibility(std::move(columns), rhs, source);
    sol.pivots += pivots;
    return sol;
}

}  // namespace listpack
