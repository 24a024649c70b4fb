#include "listpack/lp.hpp"

#include <doctest.h>

#include <random>

using namespace listpack;

namespace {

using Matrix = std::vector<std::vector<Rational>>;

// Solves A_S x = b exactly; nullopt when inconsistent or the columns are dependent.
std::optional<std::vector<Rational>> solve_subset(const Matrix& a, const std::vector<Rational>& b, const std::vector<int>& cols)
{
    const int m = static_cast<int>(b.size());
    const int k = static_cast<int>(cols.size());
    Matrix t(m, std::vector<Rational>(k + 1));
    for (int r = 0; r < m; ++r) {
        for (int j = 0; j < k; ++j) {
            t[r][j] = a[r][cols[j]];
        }
        t[r][k] = b[r];
    }
    int row = 0;
    for (int j = 0; j < k; ++j) {
        int p = row;
        while (p < m && t[p][j] == 0) {
            ++p;
        }
        if (p == m) {
            return std::nullopt;
        }
        std::swap(t[p], t[row]);
        for (int r = 0; r < m; ++r) {
            if (r != row && t[r][j] != 0) {
                const Rational f = t[r][j] / t[row][j];
                for (int c = j; c <= k; ++c) {
                    t[r][c] -= f * t[row][c];
                }
            }
        }
        ++row;
    }
    for (int r = row; r < m; ++r) {
        if (t[r][k] != 0) {
            return std::nullopt;
        }
    }
    std::vector<Rational> x(k);
    for (int j = 0; j < k; ++j) {
        x[j] = t[j][k] / t[j][j];
    }
    return x;
}

// Feasible iff some set of at most m independent columns gives a non-negative solution.
bool feasible_by_bases(const Matrix& a, const std::vector<Rational>& b, int n)
{
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        std::vector<int> cols;
        for (int j = 0; j < n; ++j) {
            if (s >> j & 1) {
                cols.push_back(j);
            }
        }
        if (cols.size() > b.size()) {
            continue;
        }
        if (auto x = solve_subset(a, b, cols)) {
            if (std::all_of(x->begin(), x->end(), [](const Rational& q) { return sgn(q) >= 0; })) {
                return true;
            }
        }
    }
    return false;
}

struct Instance {
    Matrix dense;
    std::vector<SparseColumn> columns;
    std::vector<Rational> rhs;
};

Instance random_instance(int m, int n, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> entry(-2, 2);
    std::uniform_int_distribution<int> num(-3, 6);
    std::uniform_int_distribution<int> den(1, 4);
    Instance in;
    in.dense.assign(m, std::vector<Rational>(n));
    for (int j = 0; j < n; ++j) {
        SparseColumn c;
        for (int r = 0; r < m; ++r) {
            const int v = entry(rng);
            in.dense[r][j] = v;
            if (v) {
                c.entries.emplace_back(r, v);
            }
        }
        in.columns.push_back(c);
    }
    for (int r = 0; r < m; ++r) {
        Rational q(num(rng), den(rng));
        q.canonicalize();
        in.rhs.push_back(q);
    }
    return in;
}

class HiddenColumns : public ColumnSource {
public:
    explicit HiddenColumns(std::vector<SparseColumn> cols) : cols_(std::move(cols)) {}
    std::optional<SparseColumn> improving(const std::vector<Rational>& y) override
    {
        for (const auto& c : cols_) {
            Rational v = 0;
            for (auto [r, a] : c.entries) {
                v += y[r] * a;
            }
            if (sgn(v) > 0) {
                return c;
            }
        }
        return std::nullopt;
    }

private:
    std::vector<SparseColumn> cols_;
};

}  // namespace

TEST_CASE("exact and float-guided simplex agree with basis enumeration")
{
    std::mt19937_64 rng(41);
    int feasible = 0;
    int infeasible = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const int m = 1 + trial % 4;
        const int n = 1 + trial % 7;
        const auto in = random_instance(m, n, rng);
        const bool expected = feasible_by_bases(in.dense, in.rhs, n);
        (expected ? feasible : infeasible)++;
        for (const auto& sol : {solve_feasibility(in.columns, in.rhs), solve_feasibility_guided(in.columns, in.rhs)}) {
            CHECK(sol.feasible == expected);
            if (sol.feasible) {
                CHECK(verify_primal(sol.columns, in.rhs, sol.x));
            } else {
                CHECK(verify_farkas(sol.columns, in.rhs, sol.farkas));
            }
        }
    }
    CHECK(feasible > 50);
    CHECK(infeasible > 50);
}

TEST_CASE("columns priced on demand give the same verdict")
{
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 200; ++trial) {
        const int m = 2 + trial % 3;
        const int n = 3 + trial % 5;
        const auto in = random_instance(m, n, rng);
        const bool expected = feasible_by_bases(in.dense, in.rhs, n);
        std::vector<SparseColumn> start(in.columns.begin(), in.columns.begin() + 1);
        std::vector<SparseColumn> hidden(in.columns.begin() + 1, in.columns.end());
        HiddenColumns src1(hidden);
        HiddenColumns src2(hidden);
        const auto a = solve_feasibility(start, in.rhs, &src1);
        const auto b = solve_feasibility_guided(start, in.rhs, &src2);
        CHECK(a.feasible == expected);
        CHECK(b.feasible == expected);
        for (const auto* s : {&a, &b}) {
            if (!s->feasible) {
                CHECK(verify_farkas(in.columns, in.rhs, s->farkas));
            } else {
                CHECK(verify_primal(s->columns, in.rhs, s->x));
            }
        }
    }
}

TEST_CASE("certificate checks reject wrong vectors")
{
    const std::vector<SparseColumn> cols{{{{0, 1}}}, {{{1, 1}}}};
    const std::vector<Rational> rhs{1, 2};
    CHECK(verify_primal(cols, rhs, {1, 2}));
    CHECK(!verify_primal(cols, rhs, {1, 1}));
    CHECK(!verify_primal(cols, rhs, {-1, 2}));
    // x0 = -1 is impossible
    const std::vector<Rational> neg{-1, 1};
    CHECK(verify_farkas(cols, neg, {-1, 0}));
    CHECK(!verify_farkas(cols, neg, {1, 0}));
    CHECK(!verify_farkas(cols, neg, {-1, 1}));
    CHECK(!verify_farkas(cols, neg, {0, 0}));
    const std::vector<Rational> b{-1, 1};
    CHECK(!solve_feasibility(cols, b).feasible);
}
